#![allow(dead_code)]

use proptest::prelude::*;
use quadcross::{ColorId, ColoredPoint, Coordinate, PointSet};
use rand::Rng;

pub fn cp(x: i64, y: i64, c: u32) -> ColoredPoint {
    ColoredPoint::new(x, y, c)
}

fn coord<R: Rng>(rng: &mut R, span: i64, halves: bool) -> Coordinate {
    let v = rng.random_range(0..=span);
    if halves && rng.random_bool(0.3) {
        Coordinate::from_ratio(2 * v + 1, 2)
    } else {
        Coordinate::from_integer(v)
    }
}

/// Random instance with coordinates in `0..=span`, optionally with some
/// half-integers mixed in.
pub fn random_set<R: Rng>(rng: &mut R, n: usize, k: u32, span: i64, halves: bool) -> PointSet {
    (0..n)
        .map(|_| ColoredPoint {
            x: coord(rng, span, halves),
            y: coord(rng, span, halves),
            color: ColorId(rng.random_range(0..k)),
        })
        .collect()
}

pub fn arb_point(span: i64, k: u32) -> impl Strategy<Value = ColoredPoint> {
    (0..=span, 0..=span, 0..k).prop_map(|(x, y, c)| cp(x, y, c))
}

pub fn arb_set(max_n: usize, span: i64, k: u32) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(arb_point(span, k), 0..=max_n).prop_map(PointSet::new)
}
