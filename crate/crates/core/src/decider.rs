//! The O(n log n) decision procedure.
//!
//! Points are grouped by distinct y-value. Between every two consecutive
//! groups sits an intermediate line. For each line we keep four candidate
//! sets: the (at most four) differently colored points that are extreme
//! east or west, above or below the line. A cross exists iff, for some line,
//! one point from each of its four sets gives a cross. The above sets are
//! built by a top-down sweep and the below sets by a bottom-up sweep, each
//! point being offered once per sweep.

use arrayvec::ArrayVec;

use crate::coord::Coordinate;
use crate::geom::{ColorId, ColoredPoint, Cross, Point, PointSet};

/// Which horizontal extreme a candidate set tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Maximal x.
    East,
    /// Minimal x.
    West,
}

impl Direction {
    /// Whether `candidate` is strictly further in this direction than `incumbent`.
    #[inline]
    pub fn improves(self, candidate: &Coordinate, incumbent: &Coordinate) -> bool {
        match self {
            Direction::East => candidate > incumbent,
            Direction::West => candidate < incumbent,
        }
    }
}

/// Horizontal line halfway between two consecutive distinct y-values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateLine {
    pub y_above: Coordinate,
    pub y_below: Coordinate,
    /// Position in the top-to-bottom order of lines, starting at 0.
    pub index: usize,
}

impl IntermediateLine {
    pub fn value(&self) -> Coordinate {
        self.y_above.midpoint(&self.y_below)
    }

    /// No input point lies on the line, so comparing against the adjacent
    /// y-values is equivalent to comparing against the midpoint.
    pub fn is_above(&self, y: &Coordinate) -> bool {
        *y >= self.y_above
    }

    pub fn is_below(&self, y: &Coordinate) -> bool {
        *y <= self.y_below
    }
}

/// What a candidate set needs to know about a point.
pub trait Candidate {
    fn x(&self) -> &Coordinate;
    fn color(&self) -> ColorId;
}

impl Candidate for ColoredPoint {
    fn x(&self) -> &Coordinate {
        &self.x
    }
    fn color(&self) -> ColorId {
        self.color
    }
}

impl<T: Candidate + ?Sized> Candidate for &T {
    fn x(&self) -> &Coordinate {
        (**self).x()
    }
    fn color(&self) -> ColorId {
        (**self).color()
    }
}

/// At most four points of pairwise distinct colors that are extreme in one
/// horizontal direction among the points offered so far.
///
/// `P` is a cheap handle to a point, normally `&ColoredPoint`.
#[derive(Clone, Debug)]
pub struct CandidateSet<P> {
    direction: Direction,
    entries: ArrayVec<P, 4>,
}

impl<P: Candidate + Copy> CandidateSet<P> {
    pub fn new(direction: Direction) -> Self {
        CandidateSet {
            direction,
            entries: ArrayVec::new(),
        }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn entries(&self) -> &[P] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One half of the point test: update this set with `p`.
    ///
    /// A same-colored entry is replaced only by a strictly better point.
    /// A new color is added while there is room, otherwise it evicts the
    /// worst entry if strictly better than it. Ties keep the incumbent.
    pub fn offer(&mut self, p: P) {
        let dir = self.direction;
        if let Some(slot) = self.entries.iter_mut().find(|q| q.color() == p.color()) {
            if dir.improves(p.x(), slot.x()) {
                *slot = p;
            }
            return;
        }
        if !self.entries.is_full() {
            self.entries.push(p);
            return;
        }
        let mut worst = 0;
        for i in 1..self.entries.len() {
            if dir.improves(self.entries[worst].x(), self.entries[i].x()) {
                worst = i;
            }
        }
        if dir.improves(p.x(), self.entries[worst].x()) {
            self.entries[worst] = p;
        }
    }

    fn map<Q: Candidate + Copy>(&self, f: impl Fn(P) -> Q) -> CandidateSet<Q> {
        CandidateSet {
            direction: self.direction,
            entries: self.entries.iter().map(|&p| f(p)).collect(),
        }
    }
}

/// Offers `p` to a west-extreme and an east-extreme set.
pub fn test_point<P: Candidate + Copy>(
    p: P,
    west: &mut CandidateSet<P>,
    east: &mut CandidateSet<P>,
) {
    debug_assert_eq!(west.direction(), Direction::West);
    debug_assert_eq!(east.direction(), Direction::East);
    west.offer(p);
    east.offer(p);
}

/// Distinct y-values, strictly descending.
pub fn distinct_ys(set: &PointSet) -> Vec<Coordinate> {
    let mut ys: Vec<&Coordinate> = set.points().iter().map(|p| &p.y).collect();
    ys.sort_unstable_by(|a, b| b.cmp(a));
    ys.dedup();
    ys.into_iter().cloned().collect()
}

/// Lines between consecutive values of a strictly descending sequence.
pub fn intermediate_lines(ys_descending: &[Coordinate]) -> Vec<IntermediateLine> {
    ys_descending
        .windows(2)
        .enumerate()
        .map(|(index, w)| {
            debug_assert!(w[0] > w[1], "y-values must be strictly descending");
            IntermediateLine {
                y_above: w[0].clone(),
                y_below: w[1].clone(),
                index,
            }
        })
        .collect()
}

/// The four candidate sets of one intermediate line.
#[derive(Clone, Debug)]
pub struct LineCandidates<'a> {
    pub line: IntermediateLine,
    pub ne: CandidateSet<&'a ColoredPoint>,
    pub nw: CandidateSet<&'a ColoredPoint>,
    pub sw: CandidateSet<&'a ColoredPoint>,
    pub se: CandidateSet<&'a ColoredPoint>,
}

/// Sweep-local copy of a point: x, color and input position, laid out
/// contiguously in y order.
#[derive(Clone, Debug)]
struct SweepPoint {
    x: Coordinate,
    color: ColorId,
    source: u32,
}

impl Candidate for SweepPoint {
    fn x(&self) -> &Coordinate {
        &self.x
    }
    fn color(&self) -> ColorId {
        self.color
    }
}

type SidePair<'s> = (CandidateSet<&'s SweepPoint>, CandidateSet<&'s SweepPoint>);

/// Points sorted by `(y, input position)` and cut into runs of equal y.
struct YGroups<'a> {
    input: &'a [ColoredPoint],
    sorted: Vec<SweepPoint>,
    /// `bounds[g]..bounds[g + 1]` is group `g`, lowest group first.
    bounds: Vec<usize>,
}

impl<'a> YGroups<'a> {
    fn new(input: &'a [ColoredPoint]) -> Self {
        assert!(input.len() <= u32::MAX as usize, "too many points");
        let (order, bounds) = sorted_order(input);
        let sorted = order
            .into_iter()
            .map(|i| {
                let p = &input[i as usize];
                SweepPoint {
                    x: p.x.clone(),
                    color: p.color,
                    source: i,
                }
            })
            .collect();
        YGroups {
            input,
            sorted,
            bounds,
        }
    }

    fn count(&self) -> usize {
        self.bounds.len().saturating_sub(1)
    }

    fn group(&self, g: usize) -> &[SweepPoint] {
        &self.sorted[self.bounds[g]..self.bounds[g + 1]]
    }

    fn y(&self, g: usize) -> &'a Coordinate {
        &self.input[self.sorted[self.bounds[g]].source as usize].y
    }

    fn original(&self, p: &SweepPoint) -> &'a ColoredPoint {
        &self.input[p.source as usize]
    }

    /// The line between group `g` and group `g + 1` (ascending indexing).
    fn line_above_group(&self, g: usize) -> IntermediateLine {
        IntermediateLine {
            y_above: self.y(g + 1).clone(),
            y_below: self.y(g).clone(),
            index: self.count() - 2 - g,
        }
    }

    /// Below sets for every line, indexed by the group just below the line.
    fn sweep_up(&self) -> Vec<SidePair<'_>> {
        let lines = self.count().saturating_sub(1);
        let mut out = Vec::with_capacity(lines);
        let mut sw = CandidateSet::new(Direction::West);
        let mut se = CandidateSet::new(Direction::East);
        for g in 0..lines {
            for p in self.group(g) {
                test_point(p, &mut sw, &mut se);
            }
            out.push((sw.clone(), se.clone()));
        }
        out
    }
}

/// Input positions sorted by `(y, position)`, plus group boundaries.
fn sorted_order(input: &[ColoredPoint]) -> (Vec<u32>, Vec<usize>) {
    let mut bounds = vec![0];
    let int_keys: Option<Vec<(i64, u32)>> = input
        .iter()
        .enumerate()
        .map(|(i, p)| p.y.as_i64().map(|y| (y, i as u32)))
        .collect();
    let order: Vec<u32> = match int_keys {
        Some(mut keys) => {
            keys.sort_unstable();
            for i in 1..keys.len() {
                if keys[i].0 != keys[i - 1].0 {
                    bounds.push(i);
                }
            }
            keys.into_iter().map(|(_, i)| i).collect()
        }
        None => {
            let mut order: Vec<u32> = (0..input.len() as u32).collect();
            order.sort_unstable_by(|&a, &b| {
                input[a as usize]
                    .y
                    .cmp(&input[b as usize].y)
                    .then(a.cmp(&b))
            });
            for i in 1..order.len() {
                if input[order[i] as usize].y != input[order[i - 1] as usize].y {
                    bounds.push(i);
                }
            }
            order
        }
    };
    if input.is_empty() {
        bounds.clear();
    } else {
        bounds.push(input.len());
    }
    (order, bounds)
}

/// Candidate sets for every intermediate line, top line first.
pub fn candidate_sweeps(set: &PointSet) -> Vec<LineCandidates<'_>> {
    let groups = YGroups::new(set.points());
    let below = groups.sweep_up();
    let mut out = Vec::with_capacity(below.len());
    let mut nw = CandidateSet::new(Direction::West);
    let mut ne = CandidateSet::new(Direction::East);
    let orig = |p: &SweepPoint| groups.original(p);
    for (g, (sw, se)) in below.iter().enumerate().rev() {
        for p in groups.group(g + 1) {
            test_point(p, &mut nw, &mut ne);
        }
        out.push(LineCandidates {
            line: groups.line_above_group(g),
            ne: ne.map(orig),
            nw: nw.map(orig),
            sw: sw.map(orig),
            se: se.map(orig),
        });
    }
    out
}

/// First tuple, in lexicographic order of set positions, of pairwise
/// distinct colors whose open intervals `(nw.x, ne.x)` and `(sw.x, se.x)`
/// overlap. Returns the witnesses and the center's x.
fn find_witnesses<P: Candidate + Copy>(
    ne: &CandidateSet<P>,
    nw: &CandidateSet<P>,
    sw: &CandidateSet<P>,
    se: &CandidateSet<P>,
) -> Option<([P; 4], Coordinate)> {
    for &p in ne.entries() {
        for &q in nw.entries() {
            if q.color() == p.color() {
                continue;
            }
            for &r in sw.entries() {
                if r.color() == p.color() || r.color() == q.color() {
                    continue;
                }
                for &s in se.entries() {
                    if s.color() == p.color() || s.color() == q.color() || s.color() == r.color() {
                        continue;
                    }
                    let west = q.x().max(r.x());
                    let east = p.x().min(s.x());
                    if west < east {
                        return Some(([p, q, r, s], west.midpoint(east)));
                    }
                }
            }
        }
    }
    None
}

/// Searches one line's candidate sets for a cross centered on the line.
pub fn test_cross(
    ne: &CandidateSet<&ColoredPoint>,
    nw: &CandidateSet<&ColoredPoint>,
    sw: &CandidateSet<&ColoredPoint>,
    se: &CandidateSet<&ColoredPoint>,
    line: &IntermediateLine,
) -> Option<Cross> {
    let (w, x) = find_witnesses(ne, nw, sw, se)?;
    Some(Cross {
        center: Point { x, y: line.value() },
        witnesses: w.map(|p| p.clone()),
    })
}

/// Returns a cross if `set` contains one, scanning lines top to bottom.
pub fn decide(set: &PointSet) -> Option<Cross> {
    if set.len() < 4 || !set.has_at_least_colors(4) {
        return None;
    }
    let groups = YGroups::new(set.points());
    if groups.count() < 2 {
        return None;
    }
    let below = groups.sweep_up();
    let mut nw = CandidateSet::new(Direction::West);
    let mut ne = CandidateSet::new(Direction::East);
    for (g, (sw, se)) in below.iter().enumerate().rev() {
        for p in groups.group(g + 1) {
            test_point(p, &mut nw, &mut ne);
        }
        // a cross needs two colors on each side
        if ne.len() < 2 || sw.len() < 2 {
            continue;
        }
        if let Some((w, x)) = find_witnesses(&ne, &nw, sw, se) {
            return Some(Cross {
                center: Point {
                    x,
                    y: groups.line_above_group(g).value(),
                },
                witnesses: w.map(|p| groups.original(p).clone()),
            });
        }
    }
    None
}

pub fn has_cross(set: &PointSet) -> bool {
    decide(set).is_some()
}
