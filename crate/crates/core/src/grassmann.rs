//! k-planes in `P^n(F_p)`: RREF representatives, affine charts and enumeration.
//!
//! A k-plane is the row space of a full-rank `(k+1) x (n+1)` matrix. Its
//! reduced row echelon form is unique, so planes compare by matrix. Each plane
//! belongs to exactly one chart, indexed by its [`PivotSet`]; inside a chart
//! the non-pivot entries to the right of each pivot are free.
//!
//! Enumeration order is lexicographic in `(pivot set, free-entry vector)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{gaussian_binomial, PrimeField};

/// Default cap on the number of planes a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    #[error("plane dimension k = {k} must satisfy 0 <= k <= n - 1 (n = {n})")]
    InvalidDimensions { n: usize, k: usize },
    #[error("refusing to enumerate {count} planes (budget {budget})")]
    BudgetExceeded { count: BigInt, budget: u64 },
    #[error("chart expects {expected} free entries, got {got}")]
    ParamsLength { got: usize, expected: usize },
    #[error("pivot columns {pivots:?} must be strictly increasing and below {ncols}")]
    InvalidPivots { pivots: Vec<usize>, ncols: usize },
    #[error("matrix has rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("matrix rows must have {expected} entries")]
    RowLength { expected: usize },
    #[error("planes live in different ambient spaces")]
    AmbientMismatch,
}

/// Pivot columns of an RREF matrix; names an affine chart of `G(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PivotSet(Vec<usize>);

impl PivotSet {
    pub fn new(cols: Vec<usize>, n: usize) -> Result<Self, GrassmannError> {
        let ok = !cols.is_empty()
            && cols.windows(2).all(|w| w[0] < w[1])
            && cols.last().is_some_and(|&c| c <= n);
        if !ok {
            return Err(GrassmannError::InvalidPivots { pivots: cols, ncols: n + 1 });
        }
        Ok(PivotSet(cols))
    }

    /// All `(k+1)`-subsets of `{0..=n}` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<PivotSet> {
        let size = k + 1;
        let ncols = n + 1;
        let mut out = Vec::new();
        if size > ncols {
            return out;
        }
        let mut cur: Vec<usize> = (0..size).collect();
        loop {
            out.push(PivotSet(cur.clone()));
            let Some(i) = (0..size).rev().find(|&i| cur[i] < ncols - size + i) else {
                return out;
            };
            cur[i] += 1;
            for j in i + 1..size {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }

    pub fn columns(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(row, column)` of every free entry, row-major.
    pub fn free_positions(&self, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (row, &pivot) in self.0.iter().enumerate() {
            for col in pivot + 1..=n {
                if self.0.binary_search(&col).is_err() {
                    out.push((row, col));
                }
            }
        }
        out
    }

    pub fn num_free(&self, n: usize) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(row, &pivot)| (n - pivot) - (self.0.len() - 1 - row))
            .sum()
    }

    /// Number of planes in this chart, `p^(#free)`.
    pub fn chart_size(&self, n: usize, field: PrimeField) -> BigInt {
        num_traits::pow(BigInt::from(field.p()), self.num_free(n))
    }
}

impl fmt::Display for PivotSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", cols.join(","))
    }
}

/// Canonical RREF representative of a k-plane in `P^n(F_p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneRref {
    field: PrimeField,
    n: usize,
    k: usize,
    entries: Vec<u32>,
}

impl PlaneRref {
    /// Canonicalizes the row space of an arbitrary full-rank matrix.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Result<Self, GrassmannError> {
        let ncols = rows.first().map_or(0, Vec::len);
        if ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
            return Err(GrassmannError::RowLength { expected: ncols.max(1) });
        }
        let mut m: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v % field.p()).collect())
            .collect();
        let rank = rref_in_place(field, &mut m);
        if rank != m.len() {
            return Err(GrassmannError::RankDeficient { rank, rows: m.len() });
        }
        Ok(PlaneRref {
            field,
            n: ncols - 1,
            k: m.len() - 1,
            entries: m.into_iter().flatten().collect(),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Row-major entries, `(k+1)(n+1)` values in `[0, p)`.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let w = self.n + 1;
        &self.entries[i * w..(i + 1) * w]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..=self.k).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn pivots(&self) -> PivotSet {
        PivotSet(
            (0..=self.k)
                .map(|i| self.row(i).iter().position(|&v| v != 0).expect("full rank"))
                .collect(),
        )
    }

    /// Values at the chart's free positions, row-major.
    pub fn free_params(&self) -> Vec<u32> {
        self.pivots()
            .free_positions(self.n)
            .into_iter()
            .map(|(r, c)| self.entries[r * (self.n + 1) + c])
            .collect()
    }

    /// The projective points of the plane, each scaled so its first nonzero
    /// coordinate is 1.
    pub fn points(&self) -> Vec<Vec<u32>> {
        let p = self.field.p();
        let dim = self.k + 1;
        let width = self.n + 1;
        let mut out = Vec::new();
        for lead in 0..dim {
            let tail = dim - lead - 1;
            let count = (p as u64).pow(tail as u32);
            for idx in 0..count {
                let mut u = vec![0u32; dim];
                u[lead] = 1;
                let mut x = idx;
                for slot in (lead + 1..dim).rev() {
                    u[slot] = (x % p as u64) as u32;
                    x /= p as u64;
                }
                let mut point = vec![0u32; width];
                for (i, &ui) in u.iter().enumerate() {
                    if ui == 0 {
                        continue;
                    }
                    for (pt, &m) in point.iter_mut().zip(self.row(i)) {
                        *pt = self.field.add(*pt, self.field.mul(ui, m));
                    }
                }
                normalize_point(self.field, &mut point);
                out.push(point);
            }
        }
        out
    }
}

impl Ord for PlaneRref {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.p(), self.n, self.k)
            .cmp(&(other.field.p(), other.n, other.k))
            .then_with(|| self.pivots().cmp(&other.pivots()))
            .then_with(|| self.free_params().cmp(&other.free_params()))
    }
}

impl PartialOrd for PlaneRref {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for PlaneRref {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

fn normalize_point(field: PrimeField, point: &mut [u32]) {
    if let Some(&lead) = point.iter().find(|&&v| v != 0) {
        let inv = field.inv(lead).expect("nonzero");
        for v in point.iter_mut() {
            *v = field.mul(*v, inv);
        }
    }
}

/// Reduces `m` to RREF, returning its rank. Zero rows end up at the bottom.
fn rref_in_place(field: PrimeField, m: &mut [Vec<u32>]) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("nonzero pivot");
        for v in m[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for j in 0..ncols {
                    let t = field.mul(factor, m[rank][j]);
                    m[r][j] = field.sub(m[r][j], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `[n+1 choose k+1]_p`, the number of k-planes in `P^n(F_p)`.
pub fn count_planes(n: usize, k: usize, field: PrimeField) -> Result<BigInt, GrassmannError> {
    if k >= n {
        return Err(GrassmannError::InvalidDimensions { n, k });
    }
    Ok(gaussian_binomial(n as u64 + 1, k as u64 + 1, field.p() as u64).expect("k < n"))
}

/// Fails with the full plane count when it is above `budget`.
pub fn check_budget(
    n: usize,
    k: usize,
    field: PrimeField,
    budget: u64,
) -> Result<u64, GrassmannError> {
    let count = count_planes(n, k, field)?;
    match count.to_u64() {
        Some(c) if c <= budget => Ok(c),
        _ => Err(GrassmannError::BudgetExceeded { count, budget }),
    }
}

/// Builds the plane of chart `pivots` with the given free entries.
pub fn plane_from_chart(
    field: PrimeField,
    n: usize,
    pivots: &PivotSet,
    params: &[u32],
) -> Result<PlaneRref, GrassmannError> {
    let free = pivots.free_positions(n);
    if params.len() != free.len() {
        return Err(GrassmannError::ParamsLength { got: params.len(), expected: free.len() });
    }
    if pivots.columns().last().is_some_and(|&c| c > n) {
        return Err(GrassmannError::InvalidPivots {
            pivots: pivots.columns().to_vec(),
            ncols: n + 1,
        });
    }
    Ok(build_plane(field, n, pivots, &free, params))
}

fn build_plane(
    field: PrimeField,
    n: usize,
    pivots: &PivotSet,
    free: &[(usize, usize)],
    params: &[u32],
) -> PlaneRref {
    let width = n + 1;
    let mut entries = vec![0u32; pivots.len() * width];
    for (row, &col) in pivots.columns().iter().enumerate() {
        entries[row * width + col] = 1;
    }
    for (&(row, col), &v) in free.iter().zip(params) {
        entries[row * width + col] = v % field.p();
    }
    PlaneRref { field, n, k: pivots.len() - 1, entries }
}

/// The `index`-th plane of a chart in lexicographic order of the free
/// entries (last entry varies fastest).
pub fn plane_from_chart_index(
    field: PrimeField,
    n: usize,
    pivots: &PivotSet,
    free: &[(usize, usize)],
    mut index: u64,
) -> PlaneRref {
    let p = field.p() as u64;
    let width = n + 1;
    let mut entries = vec![0u32; pivots.len() * width];
    for (row, &col) in pivots.columns().iter().enumerate() {
        entries[row * width + col] = 1;
    }
    for &(row, col) in free.iter().rev() {
        entries[row * width + col] = (index % p) as u32;
        index /= p;
    }
    PlaneRref { field, n, k: pivots.len() - 1, entries }
}

/// Lazily enumerates every k-plane of `P^n(F_p)` exactly once, in
/// lexicographic `(pivot set, free-entry vector)` order.
pub fn enumerate_planes(
    n: usize,
    k: usize,
    field: PrimeField,
    budget: u64,
) -> Result<PlaneStream, GrassmannError> {
    check_budget(n, k, field, budget)?;
    Ok(PlaneStream {
        field,
        n,
        charts: PivotSet::all(n, k).into_iter(),
        current: None,
    })
}

struct ChartCursor {
    pivots: PivotSet,
    free: Vec<(usize, usize)>,
    params: Vec<u32>,
    done: bool,
}

pub struct PlaneStream {
    field: PrimeField,
    n: usize,
    charts: std::vec::IntoIter<PivotSet>,
    current: Option<ChartCursor>,
}

impl Iterator for PlaneStream {
    type Item = PlaneRref;

    fn next(&mut self) -> Option<PlaneRref> {
        loop {
            if let Some(cur) = self.current.as_mut() {
                if !cur.done {
                    let plane =
                        build_plane(self.field, self.n, &cur.pivots, &cur.free, &cur.params);
                    // Odometer step, last coordinate fastest.
                    cur.done = true;
                    for slot in cur.params.iter_mut().rev() {
                        *slot += 1;
                        if *slot < self.field.p() {
                            cur.done = false;
                            break;
                        }
                        *slot = 0;
                    }
                    return Some(plane);
                }
            }
            let pivots = self.charts.next()?;
            let free = pivots.free_positions(self.n);
            self.current = Some(ChartCursor {
                params: vec![0; free.len()],
                free,
                pivots,
                done: false,
            });
        }
    }
}

/// Whether the projective planes `a` and `b` intersect.
pub fn planes_meet(a: &PlaneRref, b: &PlaneRref) -> Result<bool, GrassmannError> {
    if a.n != b.n || a.field != b.field {
        return Err(GrassmannError::AmbientMismatch);
    }
    let mut stacked = a.rows();
    stacked.extend(b.rows());
    Ok(a.field.rank(&stacked) < stacked.len())
}
