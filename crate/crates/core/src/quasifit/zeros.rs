//! Zero sets of sequences as arithmetic progressions plus sporadic indices.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ZeroPattern {
    pub period: usize,
    pub prefix: usize,
    /// Residues `r` with `a_n = 0` for all `n >= prefix`, `n = r mod period`.
    pub full_residues: Vec<usize>,
    /// Every zero not covered by a full residue.
    pub sporadic: Vec<usize>,
}

fn pattern_for(seq: &[Rational], m: usize, prefix_budget: usize) -> ZeroPattern {
    let n = seq.len();
    let mut full = Vec::new();
    let mut prefix = 0usize;
    for r in 0..m.min(n) {
        // first index from which the class is zero to the end
        let last_index = r + (n - 1 - r) / m * m;
        let mut start = last_index + m;
        let mut k = last_index as i64;
        while k >= r as i64 && seq[k as usize].is_zero() {
            start = k as usize;
            k -= m as i64;
        }
        if start <= prefix_budget.min(last_index) {
            full.push(r);
            prefix = prefix.max((start + 1).saturating_sub(m));
        }
    }
    let covered = |i: usize| i >= prefix && full.contains(&(i % m));
    let sporadic = (0..n).filter(|&i| seq[i].is_zero() && !covered(i)).collect();
    ZeroPattern { period: m, prefix, full_residues: full, sporadic }
}

/// Describes the zeros of `seq` with the period `M <= m_max` that leaves the
/// fewest sporadic zeros (smallest `M` on ties). A residue class counts as full
/// when it is zero from some index `<= prefix_budget` to the end of the data.
pub fn zero_pattern(seq: &[Rational], m_max: usize, prefix_budget: usize) -> Result<ZeroPattern> {
    if m_max == 0 {
        return Err(Error::Precondition("MMax must be at least 1".into()));
    }
    if seq.len() < 4 * m_max + 1 {
        return Err(Error::InsufficientData(format!(
            "need N >= {} (4 MMax), got N = {}",
            4 * m_max,
            seq.len() as i64 - 1
        )));
    }
    let mut best = pattern_for(seq, 1, prefix_budget);
    for m in 2..=m_max {
        let p = pattern_for(seq, m, prefix_budget);
        if p.sporadic.len() < best.sporadic.len() {
            best = p;
        }
    }
    Ok(best)
}
