//! Classification over a parameter grid, with the internal identities
//! re-checked cell by cell.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::Serialize;

use super::{
    ample_threshold_m, canonical_degree, classify, curve_free_bound_holds, expected_dimension,
    normalize, pad_degrees, quadric_dimension, FanoClassification, FanoSetup,
};
use crate::exec::Exec;

/// Inclusive ranges for `n`, the number of equations `s`, each degree, and `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepGrid {
    pub n: RangeInclusive<u32>,
    pub s: RangeInclusive<u32>,
    pub degrees: RangeInclusive<u32>,
    pub k: RangeInclusive<u32>,
}

impl SweepGrid {
    /// Every valid setup of the grid, ordered by `(s, degrees, k, n)`.
    /// Degree tuples are nondecreasing, one per multiset.
    pub fn setups(&self) -> Vec<FanoSetup> {
        let mut out = Vec::new();
        for s in self.s.clone() {
            for degrees in multisets(self.degrees.clone(), s as usize) {
                for k in self.k.clone() {
                    for n in self.n.clone() {
                        let setup = FanoSetup::new(n, degrees.clone(), k);
                        if normalize(&setup).is_ok() {
                            out.push(setup);
                        }
                    }
                }
            }
        }
        out
    }
}

fn multisets(range: RangeInclusive<u32>, len: usize) -> Vec<Vec<u32>> {
    fn rec(lo: u32, hi: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for d in lo..=hi {
            cur.push(d);
            rec(d, hi, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 || range.is_empty() {
        return out;
    }
    rec(*range.start(), *range.end(), len, &mut Vec::new(), &mut out);
    out
}

/// Outcome of the per-cell identities. `None` marks a check that does not
/// apply to the cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepChecks {
    /// bound `(k+2)(n-k+1) <= Σ C(d_i+k+1, k+1)` agrees with `m - n >= t`.
    pub bound_equivalence: Option<bool>,
    /// The verdict survives re-embedding in `P^M` for `n <= M <= n + padding`.
    pub padding_invariance: bool,
    /// `canonical_degree = m - n + 1`.
    pub canonical_identity: bool,
    /// `(k+1)(n-s-3k/2)` is integral and equals `t` (quadrics only).
    pub quadric_consistency: Option<bool>,
}

impl SweepChecks {
    pub fn passed(&self) -> bool {
        self.bound_equivalence != Some(false)
            && self.padding_invariance
            && self.canonical_identity
            && self.quadric_consistency != Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub classification: FanoClassification,
    pub checks: SweepChecks,
}

/// Largest certified `n` for one `(degrees, k)` group of the sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub degrees: Vec<u32>,
    pub k: u32,
    pub max_certified_n: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub thresholds: Vec<Threshold>,
    pub failures: usize,
}

/// Classifies one setup and runs every identity on it.
pub fn check_setup(setup: &FanoSetup, padding: u32) -> Option<SweepRow> {
    let classification = classify(setup).ok()?;
    let norm = &classification.normalized_setup;
    let t = expected_dimension(norm);
    let m = ample_threshold_m(&norm.degrees, norm.k);
    let n = BigInt::from(norm.n);

    let bound_equivalence = curve_free_bound_holds(norm)
        .ok()
        .map(|holds| holds == (&m - &n >= t));
    let canonical_identity = canonical_degree(norm) == &m - &n + 1;
    let padding_invariance = (0..=padding).all(|extra| {
        pad_degrees(setup, setup.n + extra)
            .ok()
            .and_then(|padded| classify(&padded).ok())
            .is_some_and(|c| c.same_verdict(&classification))
    });
    let quadric_consistency = (norm.degree_product() == BigInt::from(2)).then(|| {
        let k = norm.k as i64;
        let numerator = (k + 1) * (2 * (norm.n as i64 - norm.s() as i64) - 3 * k);
        numerator % 2 == 0 && quadric_dimension(norm) == t
    });
    Some(SweepRow {
        classification,
        checks: SweepChecks {
            bound_equivalence,
            padding_invariance,
            canonical_identity,
            quadric_consistency,
        },
    })
}

/// Sweeps the grid. Rows come back in [`SweepGrid::setups`] order whatever
/// the execution mode.
pub fn sweep(grid: &SweepGrid, padding: u32, exec: Exec) -> SweepReport {
    let setups = grid.setups();
    let rows: Vec<SweepRow> = exec
        .map_slice(&setups, |s| check_setup(s, padding))
        .into_iter()
        .flatten()
        .collect();
    let failures = rows.iter().filter(|r| !r.checks.passed()).count();

    let mut groups: BTreeMap<(usize, Vec<u32>, u32), Option<u32>> = BTreeMap::new();
    for row in &rows {
        let raw = &row.classification.raw_setup;
        let entry = groups.entry((raw.s(), raw.degrees.clone(), raw.k)).or_insert(None);
        if row.classification.curve_free_certificate {
            *entry = Some(entry.map_or(raw.n, |best| best.max(raw.n)));
        }
    }
    let thresholds = groups
        .into_iter()
        .map(|((_, degrees, k), max_certified_n)| Threshold { degrees, k, max_certified_n })
        .collect();
    SweepReport { rows, thresholds, failures }
}

/// CSV rendering, one line per row after a header.
pub fn to_csv(report: &SweepReport) -> String {
    let mut out = String::from(
        "n,degrees,k,t,m,canonical_degree,status,component_count,rationally_connected,\
         general_type,curve_free_certificate,checks_passed\n",
    );
    for row in &report.rows {
        let c = &row.classification;
        let degrees: Vec<String> = c.raw_setup.degrees.iter().map(u32::to_string).collect();
        let canonical = c.canonical_degree.as_ref().map_or(String::new(), BigInt::to_string);
        out.push_str(&format!(
            "{},{},{},{},{},{},{:?},{:?},{},{},{},{}\n",
            c.raw_setup.n,
            degrees.join(";"),
            c.raw_setup.k,
            c.t,
            c.m,
            canonical,
            c.status,
            c.component_count,
            c.rationally_connected,
            c.general_type,
            c.curve_free_certificate,
            row.checks.passed(),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: RangeInclusive<u32>, s: RangeInclusive<u32>, d: RangeInclusive<u32>, k: RangeInclusive<u32>) -> SweepGrid {
        SweepGrid { n, s, degrees: d, k }
    }

    #[test]
    fn hypersurface_cubic_to_quintic_lines() {
        let report = sweep(&grid(0..=10, 1..=1, 3..=5, 1..=1), 3, Exec::Sequential);
        assert_eq!(report.rows.len(), 24);
        assert_eq!(report.failures, 0);
        let maxima: Vec<Option<u32>> =
            report.thresholds.iter().map(|t| t.max_certified_n).collect();
        assert_eq!(maxima, vec![Some(3), Some(5), Some(7)]);
    }

    #[test]
    fn empty_range_gives_empty_report() {
        #[allow(clippy::reversed_empty_ranges)]
        let report = sweep(&grid(5..=3, 1..=1, 3..=5, 1..=1), 2, Exec::Sequential);
        assert!(report.rows.is_empty());
        assert!(report.thresholds.is_empty());
        assert_eq!(to_csv(&report).lines().count(), 1);
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(2..=6, 1).len(), 5);
        assert_eq!(multisets(2..=6, 2).len(), 15);
        assert_eq!(multisets(2..=6, 3).len(), 35);
        assert!(multisets(2..=6, 0).is_empty());
    }

    #[test]
    fn modes_agree() {
        let g = grid(3..=12, 1..=2, 2..=4, 1..=3);
        let a = sweep(&g, 2, Exec::Sequential);
        let b = sweep(&g, 2, Exec::Parallel);
        assert_eq!(to_csv(&a), to_csv(&b));
        assert_eq!(a.failures, 0);
    }
}
