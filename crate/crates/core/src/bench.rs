//! Doubling-ratio scaling harness.
//!
//! For each target and each size in a doubling sequence, the instance is
//! generated once from a fixed seed, one warm-up run is discarded, and the
//! median of the timed repetitions is reported. If `T(n) ~ n log n` the
//! ratio `T(2n) / T(n)` tends to a little over 2; quadratic work gives 4 and
//! cubic work 8.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::decider::decide;
use crate::gen::{generate, GenKind, GenSpec, Generated};
use crate::geom::PointSet;
use crate::oracle::oracle_centers;
use crate::reductions::{reduce_cns_to_4cc, reduce_coug_to_cns, CougInstance};
use crate::Error;

/// What is being timed, and on which instance family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BenchTarget {
    Decide(GenKind),
    OracleCenters(GenKind),
    /// The gap-to-slope reduction on `coug_chain` instances.
    Reduce,
}

impl BenchTarget {
    pub fn label(&self) -> String {
        match self {
            BenchTarget::Decide(k) => format!("decide/{k}"),
            BenchTarget::OracleCenters(k) => format!("oracle/{k}"),
            BenchTarget::Reduce => "reduce/coug_chain".to_string(),
        }
    }

    fn is_oracle(&self) -> bool {
        matches!(self, BenchTarget::OracleCenters(_))
    }
}

impl fmt::Display for BenchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for BenchTarget {
    type Err = Error;

    /// `uniform` (decide on that family), `decide/<kind>`, `oracle/<kind>`
    /// or `reduce`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "reduce" || s == "reduce/coug_chain" {
            return Ok(BenchTarget::Reduce);
        }
        match s.split_once('/') {
            Some(("decide", kind)) => Ok(BenchTarget::Decide(kind.parse()?)),
            Some(("oracle", kind)) => Ok(BenchTarget::OracleCenters(kind.parse()?)),
            Some(_) => Err(Error::InvalidInput(format!("unknown bench target {s:?}"))),
            None => Ok(BenchTarget::Decide(s.parse()?)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub targets: Vec<BenchTarget>,
    pub min_n: usize,
    pub max_n: usize,
    pub reps: usize,
    pub seed: u64,
    /// Colors for point families (clamped to what each family accepts).
    pub colors: u32,
    /// Oracle targets stop at this size.
    pub oracle_max_n: usize,
    /// A cell whose warm-up run exceeds this is recorded as a timeout and
    /// the target stops growing.
    pub time_budget: Option<Duration>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            targets: vec![BenchTarget::Decide(GenKind::Uniform)],
            min_n: 1 << 10,
            max_n: 1 << 16,
            reps: 5,
            seed: 0x5eed,
            colors: 8,
            oracle_max_n: 1 << 8,
            time_budget: Some(Duration::from_secs(30)),
        }
    }
}

impl BenchConfig {
    /// `min_n, 2 min_n, ...` up to `max_n`.
    pub fn sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut n = self.min_n.max(1);
        while n <= self.max_n {
            out.push(n);
            n = match n.checked_mul(2) {
                Some(v) => v,
                None => break,
            };
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub reps: usize,
    /// `None` marks a timeout.
    pub median_ns: Option<u64>,
}

impl BenchRow {
    pub fn ns_per_nlogn(&self) -> Option<f64> {
        let unit = self.n as f64 * (self.n as f64).log2().max(1.0);
        self.median_ns.map(|t| t as f64 / unit)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub const CSV_HEADER: &'static str = "family,n,reps,median_ns,ns_per_nlogn";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            match (r.median_ns, r.ns_per_nlogn()) {
                (Some(t), Some(u)) => {
                    out.push_str(&format!("{},{},{},{},{:.6}\n", r.family, r.n, r.reps, t, u))
                }
                _ => out.push_str(&format!("{},{},{},timeout,\n", r.family, r.n, r.reps)),
            }
        }
        out
    }

    pub fn families(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.family.as_str()) {
                out.push(&r.family);
            }
        }
        out
    }

    /// `(n, T(n) / T(n / 2))` for each completed size whose half was also timed.
    pub fn doubling_ratios(&self, family: &str) -> Vec<(usize, f64)> {
        let rows: Vec<&BenchRow> = self.rows.iter().filter(|r| r.family == family).collect();
        rows.windows(2)
            .filter_map(|w| match (w[0].median_ns, w[1].median_ns) {
                (Some(a), Some(b)) if w[1].n == 2 * w[0].n && a > 0 => {
                    Some((w[1].n, b as f64 / a as f64))
                }
                _ => None,
            })
            .collect()
    }
}

/// A generated input ready to be timed.
enum Prepared {
    Points(PointSet),
    Coug(CougInstance),
}

fn prepare(target: BenchTarget, n: usize, cfg: &BenchConfig) -> Result<Prepared, Error> {
    let kind = match target {
        BenchTarget::Decide(k) | BenchTarget::OracleCenters(k) => k,
        BenchTarget::Reduce => GenKind::CougChain,
    };
    let mut k = cfg.colors.min(n.max(1) as u32).max(1);
    if kind == GenKind::Planted {
        k = k.max(4);
    }
    let spec = GenSpec::new(kind, n, k, cfg.seed ^ n as u64);
    let generated = generate(&spec)?;
    Ok(match (target, generated) {
        (BenchTarget::Reduce, Generated::Coug(c)) => Prepared::Coug(c),
        (_, Generated::Points(p)) => Prepared::Points(p),
        // decide/oracle on coug_chain run through the full reduction chain
        (_, Generated::Coug(c)) => Prepared::Points(reduce_cns_to_4cc(&reduce_coug_to_cns(&c))?),
    })
}

fn run_once(target: BenchTarget, input: &Prepared) -> Duration {
    let start = Instant::now();
    match (target, input) {
        (BenchTarget::Decide(_), Prepared::Points(p)) => {
            black_box(decide(black_box(p)));
        }
        (BenchTarget::OracleCenters(_), Prepared::Points(p)) => {
            black_box(oracle_centers(black_box(p)));
        }
        (BenchTarget::Reduce, Prepared::Coug(c)) => {
            let out = reduce_coug_to_cns(black_box(c));
            debug_assert_eq!(out.len(), 4 * c.len());
            black_box(out);
        }
        _ => unreachable!("prepare pairs targets with inputs"),
    }
    start.elapsed()
}

/// Times one target at one size: warm-up, then the median of `reps` runs.
pub fn time_cell(target: BenchTarget, n: usize, cfg: &BenchConfig) -> Result<BenchRow, Error> {
    let input = prepare(target, n, cfg)?;
    let warm = run_once(target, &input);
    let family = target.label();
    if cfg.time_budget.is_some_and(|b| warm > b) {
        return Ok(BenchRow {
            family,
            n,
            reps: 0,
            median_ns: None,
        });
    }
    let mut samples: Vec<Duration> = (0..cfg.reps).map(|_| run_once(target, &input)).collect();
    samples.sort_unstable();
    let median = samples[samples.len() / 2];
    Ok(BenchRow {
        family,
        n,
        reps: cfg.reps,
        median_ns: Some(median.as_nanos().min(u64::MAX as u128) as u64),
    })
}

pub fn run_scaling(cfg: &BenchConfig) -> Result<BenchReport, Error> {
    if cfg.reps < 3 {
        return Err(Error::InvalidInput(format!(
            "need at least 3 repetitions, got {}",
            cfg.reps
        )));
    }
    if cfg.min_n == 0 || cfg.min_n > cfg.max_n {
        return Err(Error::InvalidInput(format!(
            "bad size range {}..{}",
            cfg.min_n, cfg.max_n
        )));
    }
    let mut report = BenchReport::default();
    for &target in &cfg.targets {
        for n in cfg.sizes() {
            if target.is_oracle() && n > cfg.oracle_max_n {
                break;
            }
            let row = time_cell(target, n, cfg)?;
            let timed_out = row.median_ns.is_none();
            report.rows.push(row);
            if timed_out {
                break;
            }
        }
    }
    Ok(report)
}
