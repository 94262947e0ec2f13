//! Brute-force deciders and reference characterizations.
//!
//! Nothing here shares code with the sweep; these are the ground truth the
//! decider is checked against. They are slow on purpose.

use std::collections::HashMap;

use crate::coord::Coordinate;
use crate::decider::{Candidate, CandidateSet, Direction, IntermediateLine};
use crate::geom::{positive_area_rh4, quadrant_of, ColorId, ColoredPoint, Cross, Point, PointSet};

/// Midpoints between consecutive distinct values.
fn midpoints(mut values: Vec<&Coordinate>) -> Vec<Coordinate> {
    values.sort_unstable();
    values.dedup();
    values.windows(2).map(|w| w[0].midpoint(w[1])).collect()
}

/// Tries every center on the grid of midpoints between consecutive distinct
/// x-values and y-values. Any cross center can be slid onto such a grid
/// point without changing which quadrant each point falls in.
pub fn oracle_centers(set: &PointSet) -> Option<Cross> {
    let pts = set.points();
    let xs = midpoints(pts.iter().map(|p| &p.x).collect());
    let ys = midpoints(pts.iter().map(|p| &p.y).collect());
    for cx in &xs {
        for cy in &ys {
            let center = Point {
                x: cx.clone(),
                y: cy.clone(),
            };
            if let Some(witnesses) = distinct_representatives(&center, pts) {
                return Some(Cross { center, witnesses });
            }
        }
    }
    None
}

/// One point per quadrant with pairwise distinct colors, if possible.
fn distinct_representatives(center: &Point, pts: &[ColoredPoint]) -> Option<[ColoredPoint; 4]> {
    // per quadrant, one representative for each of up to four colors
    let mut reps: [Vec<&ColoredPoint>; 4] = Default::default();
    for p in pts {
        if let Some(q) = quadrant_of(center, p) {
            let bucket = &mut reps[q.index()];
            if bucket.len() < 4 && bucket.iter().all(|r| r.color != p.color) {
                bucket.push(p);
            }
        }
    }
    if reps.iter().any(|b| b.is_empty()) {
        return None;
    }
    for a in &reps[0] {
        for b in &reps[1] {
            for c in &reps[2] {
                for d in &reps[3] {
                    let colors = [a.color, b.color, c.color, d.color];
                    if (0..4).all(|i| (i + 1..4).all(|j| colors[i] != colors[j])) {
                        return Some([(*a).clone(), (*b).clone(), (*c).clone(), (*d).clone()]);
                    }
                }
            }
        }
    }
    None
}

/// Tries every 4-subset of pairwise distinct colors for a hull of positive
/// area.
pub fn oracle_subsets(set: &PointSet) -> Option<Cross> {
    let pts = set.points();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            if pts[j].color == pts[i].color {
                continue;
            }
            for k in j + 1..n {
                if pts[k].color == pts[i].color || pts[k].color == pts[j].color {
                    continue;
                }
                for l in k + 1..n {
                    let c = pts[l].color;
                    if c == pts[i].color || c == pts[j].color || c == pts[k].color {
                        continue;
                    }
                    let four = [
                        pts[i].clone(),
                        pts[j].clone(),
                        pts[k].clone(),
                        pts[l].clone(),
                    ];
                    if let Some(cross) = positive_area_rh4(&four).expect("four points") {
                        return Some(cross);
                    }
                }
            }
        }
    }
    None
}

/// Checks four points for a one-per-quadrant split by trying every
/// vertical line between consecutive distinct x-values against every
/// horizontal line between consecutive distinct y-values.
pub fn rh4_by_midlines(pts: &[ColoredPoint; 4]) -> bool {
    let xs = midpoints(pts.iter().map(|p| &p.x).collect());
    let ys = midpoints(pts.iter().map(|p| &p.y).collect());
    xs.iter().any(|cx| {
        ys.iter().any(|cy| {
            let center = Point {
                x: cx.clone(),
                y: cy.clone(),
            };
            let mut hit = [false; 4];
            for p in pts {
                if let Some(q) = quadrant_of(&center, p) {
                    hit[q.index()] = true;
                }
            }
            hit.iter().all(|&h| h)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// Per-color extremes on one side of a line, best first.
#[derive(Clone, Debug)]
pub struct CandidateCharacterization {
    pub direction: Direction,
    /// Every color present on the side, sorted best extreme first.
    pub ranked: Vec<(ColorId, Coordinate)>,
}

impl CandidateCharacterization {
    /// The reference top-four. Ties at the cut are resolved arbitrarily;
    /// use [`accepts`](Self::accepts) to compare against a swept set.
    pub fn top(&self) -> &[(ColorId, Coordinate)] {
        &self.ranked[..self.ranked.len().min(4)]
    }

    /// Whether `set` is a valid candidate set for this population: right
    /// size, distinct colors, every entry at its color's extreme, and every
    /// unrepresented color no better than any represented one.
    pub fn accepts<P: Candidate + Copy>(&self, set: &CandidateSet<P>) -> bool {
        if set.direction() != self.direction || set.len() != self.ranked.len().min(4) {
            return false;
        }
        let extremes: HashMap<ColorId, &Coordinate> =
            self.ranked.iter().map(|(c, x)| (*c, x)).collect();
        let entries = set.entries();
        for (i, e) in entries.iter().enumerate() {
            if entries[..i].iter().any(|o| o.color() == e.color()) {
                return false;
            }
            match extremes.get(&e.color()) {
                Some(x) if *x == e.x() => {}
                _ => return false,
            }
        }
        self.ranked
            .iter()
            .filter(|(c, _)| entries.iter().all(|e| e.color() != *c))
            .all(|(_, x)| entries.iter().all(|e| !self.direction.improves(x, e.x())))
    }
}

/// Computes the characterization directly from the definition.
pub fn candidate_set_oracle(
    set: &PointSet,
    line: &IntermediateLine,
    side: Side,
    direction: Direction,
) -> CandidateCharacterization {
    let mut best: HashMap<ColorId, Coordinate> = HashMap::new();
    for p in set.points() {
        let on_side = match side {
            Side::Above => line.is_above(&p.y),
            Side::Below => line.is_below(&p.y),
        };
        if !on_side {
            continue;
        }
        best.entry(p.color)
            .and_modify(|x| {
                if direction.improves(&p.x, x) {
                    *x = p.x.clone();
                }
            })
            .or_insert_with(|| p.x.clone());
    }
    let mut ranked: Vec<_> = best.into_iter().collect();
    ranked.sort_by(|(ca, a), (cb, b)| {
        let ord = match direction {
            Direction::East => b.cmp(a),
            Direction::West => a.cmp(b),
        };
        ord.then(ca.cmp(cb))
    });
    CandidateCharacterization { direction, ranked }
}
