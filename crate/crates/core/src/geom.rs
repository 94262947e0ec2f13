//! Colored points, open quadrants and crosses.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::Coordinate;
use crate::Error;

/// A color label. Ids need not be contiguous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(pub u32);

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An uncolored location, used for cross centers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Coordinate,
    pub y: Coordinate,
}

impl Point {
    pub fn new(x: impl Into<Coordinate>, y: impl Into<Coordinate>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredPoint {
    pub x: Coordinate,
    pub y: Coordinate,
    pub color: ColorId,
}

impl ColoredPoint {
    pub fn new(x: impl Into<Coordinate>, y: impl Into<Coordinate>, color: u32) -> Self {
        ColoredPoint {
            x: x.into(),
            y: y.into(),
            color: ColorId(color),
        }
    }

    pub fn location(&self) -> Point {
        Point {
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }
}

/// A problem instance. Input order is preserved; duplicates are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<ColoredPoint>,
}

impl PointSet {
    pub fn new(points: Vec<ColoredPoint>) -> Self {
        PointSet { points }
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<ColoredPoint> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of distinct colors, `k`.
    pub fn num_colors(&self) -> usize {
        self.points
            .iter()
            .map(|p| p.color)
            .collect::<HashSet<_>>()
            .len()
    }

    /// Whether at least `want` distinct colors occur; stops scanning early.
    pub fn has_at_least_colors(&self, want: usize) -> bool {
        let mut seen = Vec::with_capacity(want);
        for p in &self.points {
            if !seen.contains(&p.color) {
                seen.push(p.color);
                if seen.len() >= want {
                    return true;
                }
            }
        }
        seen.len() >= want
    }

    pub fn contains(&self, p: &ColoredPoint) -> bool {
        self.points.iter().any(|q| q == p)
    }
}

impl From<Vec<ColoredPoint>> for PointSet {
    fn from(points: Vec<ColoredPoint>) -> Self {
        PointSet::new(points)
    }
}

impl FromIterator<ColoredPoint> for PointSet {
    fn from_iter<I: IntoIterator<Item = ColoredPoint>>(iter: I) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

/// Open quadrants around a center, numbered counter-clockwise from north-east.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quadrant {
    #[serde(rename = "Q1")]
    NorthEast,
    #[serde(rename = "Q2")]
    NorthWest,
    #[serde(rename = "Q3")]
    SouthWest,
    #[serde(rename = "Q4")]
    SouthEast,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant::NorthEast,
        Quadrant::NorthWest,
        Quadrant::SouthWest,
        Quadrant::SouthEast,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Image under the reflection `(x, y) -> (y, x)`.
    pub fn transposed(self) -> Quadrant {
        match self {
            Quadrant::NorthWest => Quadrant::SouthEast,
            Quadrant::SouthEast => Quadrant::NorthWest,
            q => q,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Quadrant::NorthEast => "Q1",
            Quadrant::NorthWest => "Q2",
            Quadrant::SouthWest => "Q3",
            Quadrant::SouthEast => "Q4",
        }
    }
}

/// The open quadrant of `center` containing `(x, y)`, or `None` when the
/// point lies on either axis through the center.
pub fn quadrant_of_xy(center: &Point, x: &Coordinate, y: &Coordinate) -> Option<Quadrant> {
    use std::cmp::Ordering::*;
    match (x.cmp(&center.x), y.cmp(&center.y)) {
        (Greater, Greater) => Some(Quadrant::NorthEast),
        (Less, Greater) => Some(Quadrant::NorthWest),
        (Less, Less) => Some(Quadrant::SouthWest),
        (Greater, Less) => Some(Quadrant::SouthEast),
        _ => None,
    }
}

pub fn quadrant_of(center: &Point, p: &ColoredPoint) -> Option<Quadrant> {
    quadrant_of_xy(center, &p.x, &p.y)
}

/// A center with one witness in each open quadrant.
///
/// `witnesses[i]` belongs to `Quadrant::ALL[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cross {
    pub center: Point,
    pub witnesses: [ColoredPoint; 4],
}

/// Why a claimed cross does not certify a YES answer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrossViolation {
    #[error("witness {0:?} is not a point of the instance")]
    NotAMember(ColoredPoint),
    #[error("witnesses share color {0}")]
    RepeatedColor(ColorId),
    #[error("witness {point:?} is not strictly inside {expected:?}")]
    WrongQuadrant {
        point: ColoredPoint,
        expected: Quadrant,
    },
}

impl Cross {
    pub fn witness(&self, q: Quadrant) -> &ColoredPoint {
        &self.witnesses[q.index()]
    }

    /// Geometric validity only: each witness is strictly inside its quadrant.
    pub fn check_quadrants(&self) -> Result<(), CrossViolation> {
        for (q, w) in Quadrant::ALL.iter().zip(&self.witnesses) {
            if quadrant_of(&self.center, w) != Some(*q) {
                return Err(CrossViolation::WrongQuadrant {
                    point: w.clone(),
                    expected: *q,
                });
            }
        }
        Ok(())
    }

    /// Full certificate check against an instance: membership, pairwise
    /// distinct colors and strict open-quadrant containment.
    pub fn verify(&self, set: &PointSet) -> Result<(), CrossViolation> {
        for w in &self.witnesses {
            if !set.contains(w) {
                return Err(CrossViolation::NotAMember(w.clone()));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if self.witnesses[i].color == self.witnesses[j].color {
                    return Err(CrossViolation::RepeatedColor(self.witnesses[i].color));
                }
            }
        }
        self.check_quadrants()
    }
}

/// Tests whether four points can be placed one per open quadrant of some
/// center. This is exactly the condition for their rectilinear convex hull to
/// have positive area. Colors are ignored.
///
/// On success the center is the middle of the open rectangle of feasible
/// centers for the first assignment found.
pub fn positive_area_rh4(pts: &[ColoredPoint]) -> Result<Option<Cross>, Error> {
    let pts: &[ColoredPoint; 4] = pts.try_into().map_err(|_| {
        Error::InvalidInput(format!("expected exactly 4 points, got {}", pts.len()))
    })?;
    for [a, b, c, d] in PERMUTATIONS_4 {
        let (ne, nw, sw, se) = (&pts[a], &pts[b], &pts[c], &pts[d]);
        let west = (&nw.x).max(&sw.x);
        let east = (&ne.x).min(&se.x);
        if west >= east {
            continue;
        }
        let south = (&sw.y).max(&se.y);
        let north = (&ne.y).min(&nw.y);
        if south >= north {
            continue;
        }
        return Ok(Some(Cross {
            center: Point {
                x: west.midpoint(east),
                y: south.midpoint(north),
            },
            witnesses: [ne.clone(), nw.clone(), sw.clone(), se.clone()],
        }));
    }
    Ok(None)
}

const PERMUTATIONS_4: [[usize; 4]; 24] = {
    let mut out = [[0; 4]; 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c {
                    out[n] = [a, b, c, 6 - a - b - c];
                    n += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};
