//! Wall-clock comparison of the asymptotic evaluator against the
//! Euler–Maclaurin reference.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dn_engine::CoeffTable;
use crate::error::{Error, Result};
use crate::evaluator::{eval_zeta1_asym, AsymParams, TermCounts};
use crate::numerics::SPoint;
use crate::oracles::{zeta1_reference_general, EMConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerfReport {
    pub t: f64,
    pub asym_value: Complex64,
    pub reference_value: Complex64,
    pub abs_diff: f64,
    pub err_bound: f64,
    pub term_counts: TermCounts,
    /// Direct terms summed by the reference.
    pub reference_terms: u64,
    /// Best of `repeats` runs.
    pub asym_seconds: f64,
    pub reference_seconds: f64,
    pub speedup: f64,
}

fn best_of<T>(repeats: usize, mut f: impl FnMut() -> Result<T>) -> Result<(T, Duration)> {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let v = f()?;
        best = best.min(start.elapsed());
        out = Some(v);
    }
    Ok((out.expect("at least one run"), best))
}

/// Times both evaluators at the same point. The reference is run once per
/// repeat as well, so `speedup` compares best against best.
pub fn compare(
    s: SPoint,
    params: &AsymParams,
    table: &CoeffTable,
    em: &EMConfig,
    repeats: usize,
) -> Result<PerfReport> {
    if repeats == 0 {
        return Err(Error::InvalidParameter("repeats must be positive".into()));
    }
    let (asym, asym_time) = best_of(repeats, || eval_zeta1_asym(s, params, table))?;
    let (reference, ref_time) = best_of(repeats, || zeta1_reference_general(params.x, s.s(), em))?;
    let asym_seconds = asym_time.as_secs_f64();
    let reference_seconds = ref_time.as_secs_f64();
    Ok(PerfReport {
        t: s.t,
        asym_value: asym.value,
        reference_value: reference.value,
        abs_diff: (asym.value - reference.value).norm(),
        err_bound: asym.err_bound,
        term_counts: asym.term_counts,
        reference_terms: reference.k,
        asym_seconds,
        reference_seconds,
        speedup: reference_seconds / asym_seconds.max(1e-9),
    })
}
