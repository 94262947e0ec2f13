//! Lower-bound chain: open unit gap (2COUG) to negative slope (2CNS) to
//! the four colored cross, with direct solvers for both intermediate
//! problems.

use serde::{Deserialize, Serialize};

use crate::coord::Coordinate;
use crate::geom::{ColorId, ColoredPoint, PointSet};
use crate::Error;

pub const RED: ColorId = ColorId(0);
pub const BLUE: ColorId = ColorId(1);
pub const GREEN: ColorId = ColorId(2);
pub const BLACK: ColorId = ColorId(3);

/// Two equally long sequences of reals. Duplicates are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CougInstance {
    pub xs: Vec<Coordinate>,
    pub ys: Vec<Coordinate>,
}

impl CougInstance {
    pub fn new(xs: Vec<Coordinate>, ys: Vec<Coordinate>) -> Result<Self, Error> {
        let inst = CougInstance { xs, ys };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.xs.len() != self.ys.len() {
            return Err(Error::InvalidInput(format!(
                "xs and ys differ in length ({} vs {})",
                self.xs.len(),
                self.ys.len()
            )));
        }
        if self.xs.is_empty() {
            return Err(Error::InvalidInput("empty gap instance".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

/// A point set restricted to red (0) and blue (1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnsInstance {
    points: Vec<ColoredPoint>,
}

impl CnsInstance {
    pub fn new(points: Vec<ColoredPoint>) -> Result<Self, Error> {
        if let Some(p) = points.iter().find(|p| p.color != RED && p.color != BLUE) {
            return Err(Error::InvalidInput(format!(
                "negative-slope instances use colors 0 and 1 only, found {}",
                p.color
            )));
        }
        Ok(CnsInstance { points })
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_point_set(self) -> PointSet {
        PointSet::new(self.points)
    }
}

impl TryFrom<PointSet> for CnsInstance {
    type Error = Error;
    fn try_from(set: PointSet) -> Result<Self, Error> {
        CnsInstance::new(set.into_points())
    }
}

/// Whether some `x` and `y` satisfy `0 < |x - y| < 1`.
///
/// Sorts `ys` and looks at the nearest strictly smaller and strictly larger
/// value around each `x`; equal values are skipped since a zero gap does not
/// count.
pub fn solve_2coug(inst: &CougInstance) -> bool {
    let mut ys: Vec<&Coordinate> = inst.ys.iter().collect();
    ys.sort_unstable();
    let one = Coordinate::from_integer(1);
    inst.xs.iter().any(|x| {
        let below = ys.partition_point(|y| *y < x);
        let above = ys.partition_point(|y| *y <= x);
        let pred = below.checked_sub(1).map(|i| ys[i]);
        let succ = ys.get(above).copied();
        pred.is_some_and(|y| x - y < one) || succ.is_some_and(|y| y - x < one)
    })
}

/// Whether a red and a blue point span a line of strictly negative slope.
///
/// Sweeps by increasing x, one group of equal x at a time; a point closes a
/// negative-slope pair with an earlier opposite-colored point iff that
/// color's running maximum y exceeds its own y.
pub fn solve_2cns(inst: &CnsInstance) -> bool {
    let mut pts: Vec<&ColoredPoint> = inst.points.iter().collect();
    pts.sort_by(|a, b| a.x.cmp(&b.x));
    let mut max_y: [Option<&Coordinate>; 2] = [None, None];
    let mut start = 0;
    while start < pts.len() {
        let mut end = start + 1;
        while end < pts.len() && pts[end].x == pts[start].x {
            end += 1;
        }
        let group = &pts[start..end];
        for p in group {
            let other = 1 - p.color.0 as usize;
            if max_y[other].is_some_and(|m| *m > p.y) {
                return true;
            }
        }
        for p in group {
            let slot = &mut max_y[p.color.0 as usize];
            if slot.is_none_or(|m| *m < p.y) {
                *slot = Some(&p.y);
            }
        }
        start = end;
    }
    false
}

/// Red points `(x, x)` and blue points `(y, y)` on the diagonal, plus a copy
/// of each shifted one unit left: `(a, b) -> (a - 1, b)`.
pub fn reduce_coug_to_cns(inst: &CougInstance) -> CnsInstance {
    let one = Coordinate::from_integer(1);
    let diagonal: Vec<ColoredPoint> = inst
        .xs
        .iter()
        .map(|x| (x, RED))
        .chain(inst.ys.iter().map(|y| (y, BLUE)))
        .map(|(v, color)| ColoredPoint {
            x: v.clone(),
            y: v.clone(),
            color,
        })
        .collect();
    let shifted: Vec<ColoredPoint> = diagonal
        .iter()
        .map(|p| ColoredPoint {
            x: &p.x - &one,
            y: p.y.clone(),
            color: p.color,
        })
        .collect();
    let mut points = diagonal;
    points.extend(shifted);
    CnsInstance { points }
}

/// Adds a green point beyond the north-east corner of the bounding box and
/// a black point beyond the south-west corner.
pub fn reduce_cns_to_4cc(inst: &CnsInstance) -> Result<PointSet, Error> {
    let first = inst
        .points
        .first()
        .ok_or_else(|| Error::InvalidInput("cannot extend an empty instance".into()))?;
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (&first.x, &first.x, &first.y, &first.y);
    for p in &inst.points[1..] {
        min_x = min_x.min(&p.x);
        max_x = max_x.max(&p.x);
        min_y = min_y.min(&p.y);
        max_y = max_y.max(&p.y);
    }
    let one = Coordinate::from_integer(1);
    let green = ColoredPoint {
        x: max_x + &one,
        y: max_y + &one,
        color: GREEN,
    };
    let black = ColoredPoint {
        x: min_x - &one,
        y: min_y - &one,
        color: BLACK,
    };
    let mut points = inst.points.clone();
    points.push(green);
    points.push(black);
    Ok(PointSet::new(points))
}
