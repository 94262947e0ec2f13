//! Seeded instance generators.
//!
//! All families draw from `ChaCha8Rng::seed_from_u64(seed)`, whose output
//! stream is fixed by the algorithm and independent of platform, so a given
//! [`GenSpec`] always yields the same instance.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coord::Coordinate;
use crate::geom::{ColoredPoint, PointSet};
use crate::reductions::CougInstance;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// i.i.d. integer points in the bounding box.
    Uniform,
    /// Points on a ceil(sqrt n) x ceil(sqrt n) lattice, so coordinates repeat heavily.
    Grid,
    /// Strictly increasing staircase, colored round-robin. Never has a cross.
    Monotone,
    /// Four differently colored points around a hidden center plus noise in
    /// the same four colors. Always has a cross.
    Planted,
    /// Gap instance with odd values on one side and even values on the other.
    CougChain,
}

impl GenKind {
    pub const ALL: [GenKind; 5] = [
        GenKind::Uniform,
        GenKind::Grid,
        GenKind::Monotone,
        GenKind::Planted,
        GenKind::CougChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Uniform => "uniform",
            GenKind::Grid => "grid",
            GenKind::Monotone => "monotone",
            GenKind::Planted => "planted",
            GenKind::CougChain => "coug_chain",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('_', "-") == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown generator kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    /// Number of colors; ignored by `coug_chain`, and `planted` always uses four.
    pub k: u32,
    pub seed: u64,
    /// Inclusive integer range used for both axes.
    pub bbox: (i64, i64),
}

impl GenSpec {
    pub const DEFAULT_BBOX: (i64, i64) = (0, 1_000_000);

    pub fn new(kind: GenKind, n: usize, k: u32, seed: u64) -> Self {
        GenSpec {
            kind,
            n,
            k,
            seed,
            bbox: Self::DEFAULT_BBOX,
        }
    }

    pub fn with_bbox(mut self, lo: i64, hi: i64) -> Self {
        self.bbox = (lo, hi);
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        let (lo, hi) = self.bbox;
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "empty bounding box [{lo}, {hi}]"
            )));
        }
        if self.kind == GenKind::CougChain {
            if self.n == 0 {
                return Err(Error::InvalidInput("coug_chain needs n >= 1".into()));
            }
            return Ok(());
        }
        if self.k == 0 || self.k as usize > self.n.max(1) {
            return Err(Error::InvalidInput(format!(
                "need 1 <= k <= max(n, 1), got k = {} with n = {}",
                self.k, self.n
            )));
        }
        if self.kind == GenKind::Planted {
            if self.k < 4 || self.n < 4 {
                return Err(Error::InvalidInput(
                    "planted needs n >= 4 and k >= 4".into(),
                ));
            }
            if hi - lo < 2 {
                return Err(Error::InvalidInput(
                    "planted needs a bounding box at least 3 wide".into(),
                ));
            }
        }
        Ok(())
    }
}

/// A generated instance: a point set, or a gap instance for `coug_chain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Points(PointSet),
    Coug(CougInstance),
}

impl Generated {
    pub fn into_points(self) -> Option<PointSet> {
        match self {
            Generated::Points(p) => Some(p),
            Generated::Coug(_) => None,
        }
    }

    pub fn into_coug(self) -> Option<CougInstance> {
        match self {
            Generated::Coug(c) => Some(c),
            Generated::Points(_) => None,
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Generated, Error> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (lo, hi) = spec.bbox;
    let n = spec.n;
    let k = spec.k;
    let out = match spec.kind {
        GenKind::Uniform => Generated::Points(
            (0..n)
                .map(|_| {
                    let x = rng.random_range(lo..=hi);
                    let y = rng.random_range(lo..=hi);
                    ColoredPoint::new(x, y, rng.random_range(0..k))
                })
                .collect(),
        ),
        GenKind::Grid => {
            let side = (n as f64).sqrt().ceil().max(1.0) as i64;
            let step = if side > 1 {
                ((hi - lo) / (side - 1)).max(1)
            } else {
                1
            };
            Generated::Points(
                (0..n)
                    .map(|_| {
                        let x = lo + step * rng.random_range(0..side);
                        let y = lo + step * rng.random_range(0..side);
                        ColoredPoint::new(x, y, rng.random_range(0..k))
                    })
                    .collect(),
            )
        }
        GenKind::Monotone => {
            let (mut x, mut y) = (lo, lo);
            Generated::Points(
                (0..n)
                    .map(|i| {
                        x += rng.random_range(1..=3);
                        y += rng.random_range(1..=3);
                        ColoredPoint::new(x, y, (i % k as usize) as u32)
                    })
                    .collect(),
            )
        }
        GenKind::Planted => {
            let cx = rng.random_range(lo + 1..=hi - 1);
            let cy = rng.random_range(lo + 1..=hi - 1);
            let mut pts = vec![
                ColoredPoint::new(
                    rng.random_range(cx + 1..=hi),
                    rng.random_range(cy + 1..=hi),
                    0,
                ),
                ColoredPoint::new(rng.random_range(lo..cx), rng.random_range(cy + 1..=hi), 1),
                ColoredPoint::new(rng.random_range(lo..cx), rng.random_range(lo..cy), 2),
                ColoredPoint::new(rng.random_range(cx + 1..=hi), rng.random_range(lo..cy), 3),
            ];
            // extra points can only add crosses, never remove the planted one
            for _ in 4..n {
                let x = rng.random_range(lo..=hi);
                let y = rng.random_range(lo..=hi);
                pts.push(ColoredPoint::new(x, y, rng.random_range(0..4)));
            }
            pts.shuffle(&mut rng);
            Generated::Points(PointSet::new(pts))
        }
        GenKind::CougChain => {
            let mut xs: Vec<Coordinate> = (0..n as i64)
                .map(|i| Coordinate::from_integer(2 * i + 1))
                .collect();
            let mut ys: Vec<Coordinate> = (0..n as i64)
                .map(|i| Coordinate::from_integer(2 * i + 2))
                .collect();
            xs.shuffle(&mut rng);
            ys.shuffle(&mut rng);
            Generated::Coug(CougInstance { xs, ys })
        }
    };
    Ok(out)
}

/// Convenience wrapper for the point-set families.
pub fn generate_points(spec: &GenSpec) -> Result<PointSet, Error> {
    generate(spec)?
        .into_points()
        .ok_or_else(|| Error::InvalidInput(format!("{} does not produce a point set", spec.kind)))
}
