//! Closed-form classification of the Fano scheme `F_k(X)` of k-planes on a
//! complete intersection `X ⊂ P^n` of multi-degree `(d_1, ..., d_s)`.
//!
//! The numerology:
//!
//! * expected dimension `t = (k+1)(n-k) - Σ C(d_i+k, k)`;
//! * canonical degree `c = -n - 1 + Σ C(d_i+k, k+1)`, so that `ω = O(c)` in
//!   the Plücker polarization;
//! * ample threshold `m = Σ C(d_i+k, k+1) - 2`, with `c = m - n + 1`;
//! * the curve-free bound `(k+2)(n-k+1) <= Σ C(d_i+k+1, k+1)`, which is
//!   equivalent to `m - n >= t`.
//!
//! Linear equations (`d_i = 1`) only re-embed `X` in a smaller projective
//! space, so every setup is normalized to `d_i >= 2` before classification.
//! All comparisons are exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("at least one defining equation is required")]
    NoEquations,
    #[error("degree 0 is not allowed")]
    ZeroDegree,
    #[error("all degrees are 1: X is a linear subspace (trivial case)")]
    Linear,
    #[error("s = {s} equations need n >= s + 2 (n = {n})")]
    TooManyEquations { s: usize, n: u32 },
    #[error("plane dimension k = {k} must lie in 1..={max} (n - s - 1)")]
    PlaneDimension { k: u32, max: i64 },
    #[error("the curve-free bound applies only when the product of degrees exceeds 2")]
    QuadricExcluded,
    #[error("padding target M = {target} is below n = {n}")]
    PaddingTarget { target: u32, n: u32 },
}

/// Discrete input: `X ⊂ P^n` cut out by equations of the given degrees, and
/// the dimension `k` of the planes sought.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FanoSetup {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub k: u32,
}

impl FanoSetup {
    pub fn new(n: u32, degrees: Vec<u32>, k: u32) -> Self {
        FanoSetup { n, degrees, k }
    }

    pub fn s(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }
}

impl std::fmt::Display for FanoSetup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "(n={}, d=({}), k={})", self.n, d.join(","), self.k)
    }
}

/// Strips every linear equation, lowering `n` accordingly, and validates the
/// result. Degrees come back sorted.
pub fn normalize(setup: &FanoSetup) -> Result<FanoSetup, ClassifyError> {
    if setup.degrees.is_empty() {
        return Err(ClassifyError::NoEquations);
    }
    if setup.degrees.contains(&0) {
        return Err(ClassifyError::ZeroDegree);
    }
    let mut degrees: Vec<u32> = setup.degrees.iter().copied().filter(|&d| d >= 2).collect();
    if degrees.is_empty() {
        return Err(ClassifyError::Linear);
    }
    degrees.sort_unstable();
    let linear = (setup.degrees.len() - degrees.len()) as u32;
    if setup.n < linear {
        return Err(ClassifyError::TooManyEquations { s: setup.degrees.len(), n: setup.n });
    }
    let n = setup.n - linear;
    let s = degrees.len();
    if (n as i64) < s as i64 + 2 {
        return Err(ClassifyError::TooManyEquations { s: setup.degrees.len(), n: setup.n });
    }
    let max_k = n as i64 - s as i64 - 1;
    if setup.k < 1 || setup.k as i64 > max_k {
        return Err(ClassifyError::PlaneDimension { k: setup.k, max: max_k });
    }
    Ok(FanoSetup { n, degrees, k: setup.k })
}

/// Re-embeds `X` in `P^target` by prepending `target - n` linear equations.
pub fn pad_degrees(setup: &FanoSetup, target: u32) -> Result<FanoSetup, ClassifyError> {
    if target < setup.n {
        return Err(ClassifyError::PaddingTarget { target, n: setup.n });
    }
    let mut degrees = vec![1; (target - setup.n) as usize];
    degrees.extend_from_slice(&setup.degrees);
    Ok(FanoSetup { n: target, degrees, k: setup.k })
}

fn sum_binomials(degrees: &[u32], k: u32, top_extra: u64, bottom: i64) -> BigInt {
    degrees
        .iter()
        .map(|&d| binomial(d as u64 + k as u64 + top_extra, bottom))
        .sum()
}

/// `t = (k+1)(n-k) - Σ C(d_i+k, k)`; may be negative.
pub fn expected_dimension(setup: &FanoSetup) -> BigInt {
    let k = setup.k as i64;
    BigInt::from((k + 1) * (setup.n as i64 - k)) - sum_binomials(&setup.degrees, setup.k, 0, k)
}

/// `c` with `ω_{F_k(X)} = O(c)`: `-n - 1 + Σ C(d_i+k, k+1)`.
pub fn canonical_degree(setup: &FanoSetup) -> BigInt {
    sum_binomials(&setup.degrees, setup.k, 0, setup.k as i64 + 1) - (setup.n as i64 + 1)
}

/// `m = Σ C(d_i+k, k+1) - 2`; the canonical bundle is ample iff `n <= m`.
pub fn ample_threshold_m(degrees: &[u32], k: u32) -> BigInt {
    sum_binomials(degrees, k, 0, k as i64 + 1) - 2
}

/// The curve-free bound `n <= k - 1 + Σ C(d_i+k+1, k+1) / (k+2)`, checked as
/// `(k+2)(n-k+1) <= Σ C(d_i+k+1, k+1)`.
pub fn curve_free_bound_holds(setup: &FanoSetup) -> Result<bool, ClassifyError> {
    let product = setup.degree_product();
    if product < BigInt::from(2) {
        return Err(ClassifyError::Linear);
    }
    if product == BigInt::from(2) {
        return Err(ClassifyError::QuadricExcluded);
    }
    let k = setup.k as i64;
    let lhs = BigInt::from(k + 2) * BigInt::from(setup.n as i64 - k + 1);
    let rhs = sum_binomials(&setup.degrees, setup.k, 1, k + 1);
    Ok(lhs <= rhs)
}

/// `Σ C(d_i+k, k+1) <= n`: `F_k(X)` is Fano, hence rationally connected.
pub fn rationally_connected_criterion(setup: &FanoSetup) -> bool {
    sum_binomials(&setup.degrees, setup.k, 0, setup.k as i64 + 1) <= BigInt::from(setup.n)
}

/// `(k+1)(n - s - 3k/2)`, the dimension of `F_k` of a smooth quadric of
/// dimension `n - s`. Only depends on `n - s`, so ones in the degree list are
/// harmless.
pub fn quadric_dimension(setup: &FanoSetup) -> BigInt {
    let k = setup.k as i64;
    let numerator = (k + 1) * (2 * (setup.n as i64 - setup.s() as i64) - 3 * k);
    // k odd makes k+1 even, k even makes 3k even: always integral.
    debug_assert_eq!(numerator % 2, 0);
    BigInt::from(numerator / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    /// Empty for general `X` (negative expected dimension).
    GenericallyEmpty,
    /// Empty for every smooth `X` (quadric, `k` above half the dimension).
    EmptyForAllSmooth,
    NonemptyFinite,
    NonemptyPositiveDim,
}

impl Status {
    pub fn is_nonempty(self) -> bool {
        matches!(self, Status::NonemptyFinite | Status::NonemptyPositiveDim)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentCount {
    One,
    Two,
    NotDetermined,
}

/// The quantifier a verdict carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScopeNote {
    /// Holds for very general `X`; a special instance may behave differently.
    VeryGeneralX,
    /// Holds for every smooth `X` of this shape.
    AllSmoothX,
}

/// Generic verdict on `F_k(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoClassification {
    #[serde(with = "bigint_json")]
    pub t: BigInt,
    #[serde(with = "bigint_json::option")]
    pub canonical_degree: Option<BigInt>,
    #[serde(with = "bigint_json")]
    pub m: BigInt,
    #[serde(with = "bigint_json")]
    pub product: BigInt,
    pub status: Status,
    pub component_count: ComponentCount,
    pub rationally_connected: bool,
    pub general_type: bool,
    pub curve_free_certificate: bool,
    pub scope_note: ScopeNote,
    pub normalized_setup: FanoSetup,
    pub raw_setup: FanoSetup,
    pub notes: Vec<String>,
}

impl FanoClassification {
    /// Field-wise equality ignoring `raw_setup`.
    pub fn same_verdict(&self, other: &FanoClassification) -> bool {
        FanoClassification { raw_setup: other.raw_setup.clone(), ..self.clone() } == *other
    }
}

/// Classifies `F_k(X)` for general (or, for quadrics, every smooth) `X`.
pub fn classify(raw: &FanoSetup) -> Result<FanoClassification, ClassifyError> {
    let setup = normalize(raw)?;
    let product = setup.degree_product();
    let m = ample_threshold_m(&setup.degrees, setup.k);
    let s = setup.s() as i64;
    let k = setup.k as i64;
    let n = setup.n as i64;
    let mut notes = Vec::new();

    if product == BigInt::from(2) {
        let half = (n - s) / 2;
        if k > half {
            return Ok(FanoClassification {
                t: expected_dimension(&setup),
                canonical_degree: None,
                m,
                product,
                status: Status::EmptyForAllSmooth,
                component_count: ComponentCount::NotDetermined,
                rationally_connected: false,
                general_type: false,
                curve_free_certificate: false,
                scope_note: ScopeNote::AllSmoothX,
                normalized_setup: setup,
                raw_setup: raw.clone(),
                notes,
            });
        }
        let t = quadric_dimension(&setup);
        let two = (n - s) % 2 == 0 && k == (n - s) / 2;
        if two {
            notes.push(format!(
                "each of the two components is isomorphic to the Fano scheme of {}-planes \
                 on a general hyperplane section",
                k - 1
            ));
        }
        let status = if t.is_zero() { Status::NonemptyFinite } else { Status::NonemptyPositiveDim };
        return Ok(FanoClassification {
            t,
            canonical_degree: Some(BigInt::from(-n + s + k)),
            m,
            product,
            status,
            component_count: if two { ComponentCount::Two } else { ComponentCount::One },
            rationally_connected: true,
            general_type: false,
            curve_free_certificate: false,
            scope_note: ScopeNote::AllSmoothX,
            normalized_setup: setup,
            raw_setup: raw.clone(),
            notes,
        });
    }

    let t = expected_dimension(&setup);
    let certificate = curve_free_bound_holds(&setup)?;
    notes.push("verdict holds for very general X; special instances may differ".to_string());
    let (status, component_count) = if t.is_negative() {
        (Status::GenericallyEmpty, ComponentCount::NotDetermined)
    } else if t.is_zero() {
        (Status::NonemptyFinite, ComponentCount::NotDetermined)
    } else {
        (Status::NonemptyPositiveDim, ComponentCount::One)
    };
    let nonempty = status.is_nonempty();
    Ok(FanoClassification {
        canonical_degree: nonempty.then(|| canonical_degree(&setup)),
        rationally_connected: nonempty && rationally_connected_criterion(&setup),
        general_type: nonempty && BigInt::from(n) <= m,
        curve_free_certificate: certificate,
        t,
        m,
        product,
        status,
        component_count,
        scope_note: ScopeNote::VeryGeneralX,
        normalized_setup: setup,
        raw_setup: raw.clone(),
        notes,
    })
}

/// Serializes a `BigInt` as a JSON number when it fits in `i64`, otherwise
/// as a decimal string.
pub(crate) mod bigint_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(x) => super::serialize(x, s),
                None => s.serialize_none(),
            }
        }
    }
}

pub mod sweep;

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(n: u32, d: &[u32], k: u32) -> FanoSetup {
        FanoSetup::new(n, d.to_vec(), k)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&setup(5, &[1, 1, 3], 1)).unwrap(), setup(3, &[3], 1));
        assert_eq!(normalize(&setup(4, &[2, 3], 1)).unwrap(), setup(4, &[2, 3], 1));
        assert_eq!(normalize(&setup(4, &[3, 2], 1)).unwrap(), setup(4, &[2, 3], 1));
        assert_eq!(normalize(&setup(3, &[1, 1, 1], 1)), Err(ClassifyError::Linear));
        assert_eq!(normalize(&setup(3, &[], 1)), Err(ClassifyError::NoEquations));
        assert_eq!(normalize(&setup(3, &[0, 3], 1)), Err(ClassifyError::ZeroDegree));
        assert!(matches!(
            normalize(&setup(4, &[2, 2, 2], 1)),
            Err(ClassifyError::TooManyEquations { .. })
        ));
        assert!(matches!(
            normalize(&setup(4, &[3], 3)),
            Err(ClassifyError::PlaneDimension { k: 3, max: 2 })
        ));
        assert!(matches!(
            normalize(&setup(4, &[3], 0)),
            Err(ClassifyError::PlaneDimension { k: 0, .. })
        ));
    }

    #[test]
    fn padding_examples() {
        let x = setup(3, &[3], 1);
        assert_eq!(pad_degrees(&x, 5).unwrap(), setup(5, &[1, 1, 3], 1));
        assert_eq!(pad_degrees(&x, 3).unwrap(), x);
        assert_eq!(normalize(&pad_degrees(&x, 9).unwrap()).unwrap(), x);
        assert_eq!(pad_degrees(&x, 2), Err(ClassifyError::PaddingTarget { target: 2, n: 3 }));
    }

    #[test]
    fn expected_dimension_examples() {
        assert_eq!(expected_dimension(&setup(3, &[3], 1)), big(0));
        assert_eq!(expected_dimension(&setup(4, &[3], 1)), big(2));
        assert_eq!(expected_dimension(&setup(5, &[2, 2], 1)), big(2));
        assert_eq!(expected_dimension(&setup(3, &[4], 1)), big(-1));
    }

    #[test]
    fn canonical_degree_examples() {
        assert_eq!(canonical_degree(&setup(4, &[3], 1)), big(1));
        assert_eq!(canonical_degree(&setup(5, &[2, 2], 1)), big(0));
        assert_eq!(canonical_degree(&setup(3, &[2], 1)), big(-1));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(ample_threshold_m(&[5], 1), big(13));
        assert_eq!(ample_threshold_m(&[3], 1), big(4));
        assert_eq!(ample_threshold_m(&[2], 1), big(1));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(curve_free_bound_holds(&setup(7, &[5], 1)), Ok(true));
        assert_eq!(curve_free_bound_holds(&setup(8, &[5], 1)), Ok(false));
        assert_eq!(curve_free_bound_holds(&setup(3, &[3], 1)), Ok(true));
        assert_eq!(curve_free_bound_holds(&setup(5, &[2], 1)), Err(ClassifyError::QuadricExcluded));
    }

    #[test]
    fn rational_connectedness_examples() {
        assert!(rationally_connected_criterion(&setup(4, &[2], 1)));
        assert!(!rationally_connected_criterion(&setup(4, &[3], 1)));
        assert!(!rationally_connected_criterion(&setup(5, &[2, 2], 1)));
    }

    #[test]
    fn classify_quadric_surface() {
        let c = classify(&setup(3, &[2], 1)).unwrap();
        assert_eq!(c.t, big(1));
        assert_eq!(c.status, Status::NonemptyPositiveDim);
        assert_eq!(c.component_count, ComponentCount::Two);
        assert_eq!(c.canonical_degree, Some(big(-1)));
        assert!(c.rationally_connected);
        assert!(!c.general_type);
        assert!(!c.curve_free_certificate);
        assert_eq!(c.scope_note, ScopeNote::AllSmoothX);
        assert_eq!(c.notes.len(), 1);
    }

    #[test]
    fn classify_quadric_empty() {
        let c = classify(&setup(4, &[2], 2)).unwrap();
        assert_eq!(c.status, Status::EmptyForAllSmooth);
        assert_eq!(c.canonical_degree, None);
        assert_eq!(c.scope_note, ScopeNote::AllSmoothX);
    }

    #[test]
    fn classify_quadric_one_component() {
        // Quadric threefold: lines form a 3-dimensional irreducible family.
        let c = classify(&setup(4, &[2], 1)).unwrap();
        assert_eq!(c.t, big(3));
        assert_eq!(c.component_count, ComponentCount::One);
        assert_eq!(c.canonical_degree, Some(big(-2)));
        // Padded with linear equations the verdict is unchanged.
        let padded = classify(&setup(6, &[1, 2, 1], 1)).unwrap();
        assert!(padded.same_verdict(&c));
    }

    #[test]
    fn classify_generic_cases() {
        let c = classify(&setup(3, &[4], 1)).unwrap();
        assert_eq!(c.t, big(-1));
        assert_eq!(c.status, Status::GenericallyEmpty);
        assert_eq!(c.scope_note, ScopeNote::VeryGeneralX);
        assert_eq!(c.canonical_degree, None);

        let c = classify(&setup(7, &[5], 1)).unwrap();
        assert_eq!(c.t, big(6));
        assert_eq!(c.status, Status::NonemptyPositiveDim);
        assert_eq!(c.component_count, ComponentCount::One);
        assert_eq!(c.m, big(13));
        assert!(c.general_type);
        assert!(c.curve_free_certificate);
        assert_eq!(c.canonical_degree, Some(big(7)));

        let c = classify(&setup(3, &[3], 1)).unwrap();
        assert_eq!(c.status, Status::NonemptyFinite);
        assert_eq!(c.component_count, ComponentCount::NotDetermined);
    }

    #[test]
    fn classification_json_fields() {
        let c = classify(&setup(3, &[2], 1)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        for key in [
            "t",
            "canonical_degree",
            "m",
            "status",
            "component_count",
            "rationally_connected",
            "general_type",
            "curve_free_certificate",
            "scope_note",
            "normalized_setup",
            "raw_setup",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["t"], 1);
        assert_eq!(v["status"], "NonemptyPositiveDim");
        assert_eq!(v["component_count"], "Two");
        assert_eq!(v["normalized_setup"]["degrees"], serde_json::json!([2]));
    }
}
