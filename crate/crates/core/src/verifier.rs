//! Exhaustive computation of `F_k(X)(F_p)` for explicit complete intersections.
//!
//! A plane lies on `X` when every defining polynomial restricts to the zero
//! polynomial on it. Vanishing at the rational points of the plane is only
//! used to reject candidates early; it never accepts one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{ArithError, PrimeField};
use crate::classifier::FanoSetup;
use crate::exec::Exec;
use crate::grassmann::{
    check_budget, enumerate_planes, plane_from_chart_index, planes_meet, GrassmannError, PivotSet,
    PlaneRref,
};
use crate::multipoly::{monomials_of_degree, MPoly, Monomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("polynomial {index} is zero")]
    ZeroPolynomial { index: usize },
    #[error("polynomial {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("polynomial {index} has {got} variables, expected n + 1 = {expected}")]
    WrongNvars { index: usize, got: usize, expected: usize },
    #[error("s = {s} equations in P^{n}: need 1 <= s <= n - 2")]
    Codimension { s: usize, n: usize },
    #[error("plane dimension k = {k} must lie in 1..={max}")]
    PlaneDimension { k: usize, max: i64 },
    #[error("degree 0 is not allowed")]
    ZeroDegree,
    #[error("quadric rank is undefined in characteristic 2")]
    CharacteristicTwo,
    #[error("expected a homogeneous quadratic form")]
    NotQuadratic,
    #[error("point is not on X")]
    PointNotOnX,
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("pivot set {0} does not index a chart of this Grassmannian")]
    BadChart(String),
    #[error("instance file: {0}")]
    InstanceFile(String),
}

/// On-disk form of an instance: `{"p": int, "n": int, "polys": [string, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub p: u64,
    pub n: usize,
    pub polys: Vec<String>,
}

/// `X = V(g_1, ..., g_s) ⊂ P^n` over `F_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompleteIntersection {
    field: PrimeField,
    n: usize,
    polys: Vec<MPoly<PrimeField>>,
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    pub fn new(
        field: PrimeField,
        n: usize,
        polys: Vec<MPoly<PrimeField>>,
    ) -> Result<Self, VerifyError> {
        let s = polys.len();
        if s == 0 || s + 2 > n {
            return Err(VerifyError::Codimension { s, n });
        }
        let mut degrees = Vec::with_capacity(s);
        for (index, g) in polys.iter().enumerate() {
            if g.nvars() != n + 1 {
                return Err(VerifyError::WrongNvars { index, got: g.nvars(), expected: n + 1 });
            }
            if g.is_zero() {
                return Err(VerifyError::ZeroPolynomial { index });
            }
            if *g.ring() != field {
                return Err(PolyError::RingMismatch.into());
            }
            match g.homogeneous_degree() {
                Some(0) => return Err(VerifyError::ZeroDegree),
                Some(d) => degrees.push(d),
                None => return Err(VerifyError::NotHomogeneous { index }),
            }
        }
        Ok(CompleteIntersection { field, n, polys, degrees })
    }

    pub fn from_file(file: &InstanceFile) -> Result<Self, VerifyError> {
        let field = PrimeField::new(file.p)?;
        let polys = file
            .polys
            .iter()
            .map(|text| MPoly::parse(text, file.n + 1, field))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, file.n, polys)
    }

    pub fn from_json(text: &str) -> Result<Self, VerifyError> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| VerifyError::InstanceFile(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            p: self.field.p() as u64,
            n: self.n,
            polys: self.polys.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polys(&self) -> &[MPoly<PrimeField>] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// The classifier input of this shape.
    pub fn setup(&self, k: usize) -> FanoSetup {
        FanoSetup::new(self.n as u32, self.degrees.clone(), k as u32)
    }

    fn check_k(&self, k: usize) -> Result<(), VerifyError> {
        let max = self.n as i64 - self.polys.len() as i64 - 1;
        if k < 1 || k as i64 > max {
            return Err(VerifyError::PlaneDimension { k, max });
        }
        Ok(())
    }

    /// Scheme-theoretic containment of a plane in `X`.
    pub fn contains_plane(&self, plane: &PlaneRref) -> bool {
        let rows = plane.rows();
        // Cheap necessary condition first: the basis points must lie on X.
        let basis_on_x = rows
            .iter()
            .all(|r| self.polys.iter().all(|g| g.evaluate(r).expect("arity") == 0));
        basis_on_x
            && self.polys.iter().all(|g| {
                g.restrict_to_plane(&rows).expect("full-rank plane").is_zero()
            })
    }
}

/// How the candidate planes are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Walk the global lexicographic plane stream.
    GlobalStream,
    /// Index each chart independently and concatenate in pivot order.
    Charts,
}

/// The `F_p`-points of `F_k(X)`, sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct FanoPointSet {
    pub n: usize,
    pub k: usize,
    pub field: PrimeField,
    pub degrees: Vec<u32>,
    pub planes: Vec<PlaneRref>,
    pub meets: Option<Vec<Vec<bool>>>,
}

impl FanoPointSet {
    pub fn count(&self) -> usize {
        self.planes.len()
    }

    /// Fills the symmetric meet matrix.
    pub fn compute_meets(&mut self, exec: Exec) {
        if self.meets.is_none() {
            self.meets = Some(meet_matrix(&self.planes, exec));
        }
    }
}

/// JSON form: `{"count", "planes", "meet_components"}`, plus the meet matrix
/// as 0/1 rows when it was requested.
#[derive(Debug, Clone, Serialize)]
pub struct FanoPointReport {
    pub count: usize,
    pub planes: Vec<PlaneRref>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meet_components: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meets: Option<Vec<Vec<u8>>>,
}

impl FanoPointReport {
    pub fn new(set: &FanoPointSet, components: Option<Vec<Vec<usize>>>, with_meets: bool) -> Self {
        let meets = if with_meets {
            set.meets
                .as_ref()
                .map(|m| m.iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect())
        } else {
            None
        };
        FanoPointReport {
            count: set.count(),
            planes: set.planes.clone(),
            meet_components: components,
            meets,
        }
    }
}

/// All k-planes of `P^n(F_p)` contained in `X`, in lexicographic order.
pub fn fano_points(
    x: &CompleteIntersection,
    k: usize,
    budget: u64,
    strategy: Strategy,
    exec: Exec,
) -> Result<FanoPointSet, VerifyError> {
    x.check_k(k)?;
    let planes = match strategy {
        Strategy::GlobalStream => enumerate_planes(x.n, k, x.field, budget)?
            .filter(|plane| x.contains_plane(plane))
            .collect(),
        Strategy::Charts => {
            check_budget(x.n, k, x.field, budget)?;
            let p = x.field.p() as u64;
            let mut planes = Vec::new();
            for pivots in PivotSet::all(x.n, k) {
                let free = pivots.free_positions(x.n);
                let size = p.pow(free.len() as u32);
                planes.extend(exec.filter_map_range(0..size, |idx| {
                    let plane = plane_from_chart_index(x.field, x.n, &pivots, &free, idx);
                    x.contains_plane(&plane).then_some(plane)
                }));
            }
            planes
        }
    };
    Ok(FanoPointSet {
        n: x.n,
        k,
        field: x.field,
        degrees: x.degrees.clone(),
        planes,
        meets: None,
    })
}

fn meet_matrix(planes: &[PlaneRref], exec: Exec) -> Vec<Vec<bool>> {
    exec.map_slice(planes, |a| {
        planes.iter().map(|b| planes_meet(a, b).expect("same ambient")).collect()
    })
}

/// Connected components of the disjointness graph (an edge joins two planes
/// that do not meet). Components are listed by smallest member, members in
/// increasing order.
pub fn meet_components(set: &mut FanoPointSet, exec: Exec) -> Vec<Vec<usize>> {
    set.compute_meets(exec);
    let meets = set.meets.as_ref().expect("computed");
    let count = set.planes.len();
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..count {
        for j in i + 1..count {
            if !meets[i][j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; count];
    for i in 0..count {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Vec::new());
        }
        components[slot[root]].push(i);
    }
    components
}

/// Equations of `F_k(X)` on one affine chart of `G(k, n)`.
///
/// The chart variables `x0, x1, ...` are the free RREF entries, listed in
/// `variables` as `(row, column)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartIdeal {
    pub pivots: PivotSet,
    pub variables: Vec<(usize, usize)>,
    pub generators: Vec<MPoly<PrimeField>>,
    /// Number of generators contributed by each defining polynomial.
    pub per_poly: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChartIdealJson {
    pub pivots: Vec<usize>,
    pub variables: Vec<(usize, usize)>,
    pub generators: Vec<String>,
}

impl ChartIdeal {
    pub fn to_json(&self) -> ChartIdealJson {
        ChartIdealJson {
            pivots: self.pivots.columns().to_vec(),
            variables: self.variables.clone(),
            generators: self.generators.iter().map(ToString::to_string).collect(),
        }
    }

    /// Whether the chart point with these free entries is a common zero.
    pub fn vanishes_at(&self, params: &[u32]) -> Result<bool, VerifyError> {
        for g in &self.generators {
            if g.evaluate(params)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Restricts each `g_i` to the universal plane of the chart and collects the
/// coefficients of the `C(d_i + k, k)` plane monomials of degree `d_i`.
pub fn chart_ideal(
    x: &CompleteIntersection,
    k: usize,
    pivots: &PivotSet,
) -> Result<ChartIdeal, VerifyError> {
    x.check_k(k)?;
    if pivots.len() != k + 1 || pivots.columns().iter().any(|&c| c > x.n) {
        return Err(VerifyError::BadChart(pivots.to_string()));
    }
    let field = x.field;
    let params = k + 1;
    let free = pivots.free_positions(x.n);
    let total = params + free.len();
    let var = |i: usize| MPoly::var(field, total, i).expect("in range");

    // Column j of the universal plane is Σ_i u_i * M[i][j].
    let mut forms = vec![MPoly::zero(field, total); x.n + 1];
    for (row, &col) in pivots.columns().iter().enumerate() {
        forms[col] = forms[col].add(&var(row))?;
    }
    for (z, &(row, col)) in free.iter().enumerate() {
        let term = var(row).mul(&var(params + z))?;
        forms[col] = forms[col].add(&term)?;
    }

    let mut generators = Vec::new();
    let mut per_poly = Vec::new();
    for (g, &d) in x.polys.iter().zip(&x.degrees) {
        let restricted = g.compose(&forms)?;
        let u_monomials = monomials_of_degree(params, d);
        let mut coeffs = vec![Vec::new(); u_monomials.len()];
        for (m, c) in restricted.terms() {
            let (u_part, z_part) = m.exponents().split_at(params);
            let slot = u_monomials
                .iter()
                .position(|um| um.exponents() == u_part)
                .expect("restriction is homogeneous of degree d in u");
            coeffs[slot].push((Monomial::new(z_part.to_vec()), *c));
        }
        per_poly.push(coeffs.len());
        generators.extend(
            coeffs.into_iter().map(|terms| MPoly::from_terms(field, free.len(), terms)),
        );
    }
    Ok(ChartIdeal { pivots: pivots.clone(), variables: free, generators, per_poly })
}

/// Chart ideals for every pivot set, in lexicographic pivot order.
pub fn fano_ideal_charts(
    x: &CompleteIntersection,
    k: usize,
    exec: Exec,
) -> Result<Vec<ChartIdeal>, VerifyError> {
    x.check_k(k)?;
    exec.map_slice(&PivotSet::all(x.n, k), |p| chart_ideal(x, k, p))
        .into_iter()
        .collect()
}

/// Dense random homogeneous polynomials of the given degrees, reproducible
/// from `seed`.
pub fn random_instance(
    n: usize,
    degrees: &[u32],
    field: PrimeField,
    seed: u64,
) -> Result<CompleteIntersection, VerifyError> {
    let s = degrees.len();
    if s == 0 || s + 2 > n {
        return Err(VerifyError::Codimension { s, n });
    }
    if degrees.contains(&0) {
        return Err(VerifyError::ZeroDegree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys = degrees
        .iter()
        .map(|&d| {
            let monomials = monomials_of_degree(n + 1, d);
            loop {
                let terms = monomials
                    .iter()
                    .map(|m| (m.clone(), rng.gen_range(0..field.p())))
                    .collect::<Vec<_>>();
                let g = MPoly::from_terms(field, n + 1, terms);
                if !g.is_zero() {
                    break g;
                }
            }
        })
        .collect();
    CompleteIntersection::new(field, n, polys)
}

/// Rank of the symmetric Gram matrix of a quadratic form, `p` odd.
pub fn quadric_rank(g: &MPoly<PrimeField>) -> Result<usize, VerifyError> {
    let field = *g.ring();
    if field.p() == 2 {
        return Err(VerifyError::CharacteristicTwo);
    }
    if g.homogeneous_degree() != Some(2) {
        return Err(VerifyError::NotQuadratic);
    }
    let nv = g.nvars();
    let half = field.inv(2)?;
    let mut gram = vec![vec![0u32; nv]; nv];
    for (m, &c) in g.terms() {
        let vars: Vec<usize> = m
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            gram[i][i] = c;
        } else {
            let v = field.mul(c, half);
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    Ok(field.rank(&gram))
}

/// Rank of the Jacobian of the defining polynomials at a point of `X`.
pub fn jacobian_rank_at(x: &CompleteIntersection, point: &[u32]) -> Result<usize, VerifyError> {
    if point.len() != x.n + 1 {
        return Err(VerifyError::PointLength { got: point.len(), expected: x.n + 1 });
    }
    let point: Vec<u32> = point.iter().map(|&v| v % x.field.p()).collect();
    if point.iter().all(|&v| v == 0) {
        return Err(VerifyError::ZeroPoint);
    }
    for g in &x.polys {
        if g.evaluate(&point)? != 0 {
            return Err(VerifyError::PointNotOnX);
        }
    }
    let mut rows = Vec::with_capacity(x.polys.len());
    for g in &x.polys {
        let row = (0..=x.n)
            .map(|j| g.partial_derivative(j)?.evaluate(&point))
            .collect::<Result<Vec<u32>, PolyError>>()?;
        rows.push(row);
    }
    Ok(x.field.rank(&rows))
}
