//! Sparse multivariate polynomials over a prime field or the integers.
//!
//! Terms live in a map keyed by [`Monomial`], ordered graded-lexicographically
//! with `x0 > x1 > ...`. Text output lists terms from the leading term down,
//! so the printed form of a polynomial is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::CoeffRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable x{index} at byte {pos} is out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize, pos: usize },
    #[error("operands have {left} and {right} variables")]
    NvarsMismatch { left: usize, right: usize },
    #[error("operands live over different coefficient rings")]
    RingMismatch,
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("plane matrix must have {expected} columns, row {row} has {got}")]
    MatrixShape { row: usize, got: usize, expected: usize },
    #[error("plane matrix has rank {rank}, expected full rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("substitution needs {expected} forms, got {got}")]
    SubstitutionArity { got: usize, expected: usize },
}

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{e}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of total degree `degree` in `nvars` variables, leading first.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, degree, &mut out);
    out
}

/// Total degree, with a distinct marker for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

/// A sparse polynomial in `nvars` variables with coefficients in `R`.
///
/// No zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MPoly<R: CoeffRing> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: CoeffRing> MPoly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        MPoly { ring, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The coordinate function `x_index`.
    pub fn var(ring: R, nvars: usize, index: usize) -> Result<Self, PolyError> {
        if index >= nvars {
            return Err(PolyError::VariableIndex { index, nvars });
        }
        let mut e = vec![0; nvars];
        e[index] = 1;
        let one = ring.one();
        let mut p = Self::zero(ring, nvars);
        p.add_term(Monomial(e), one);
        Ok(p)
    }

    /// Builds a polynomial from terms, merging repeated monomials.
    ///
    /// Panics if a monomial does not have `nvars` exponents.
    pub fn from_terms<I>(ring: R, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let mut p = Self::zero(ring, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::MinusInfinity, |m| Degree::Finite(m.degree()))
    }

    /// `Some(d)` when every term has degree `d`; `None` for the zero
    /// polynomial or a mixed-degree one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = self.ring.add(existing, &c);
                if self.ring.is_zero(&sum) {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&self.ring.neg(&self.ring.one()))
    }

    pub fn scalar_mul(&self, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), self.ring.mul(v, c)))
            .filter(|(_, v)| !self.ring.is_zero(v))
            .collect();
        MPoly { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.ring.clone(), self.nvars, self.ring.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength { got: point.len(), expected: self.nvars });
        }
        let r = &self.ring;
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v = r.mul(&v, x);
                }
            }
            acc = r.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Substitutes `x_j := forms[j]` and expands.
    pub fn compose(&self, forms: &[MPoly<R>]) -> Result<MPoly<R>, PolyError> {
        if forms.len() != self.nvars {
            return Err(PolyError::SubstitutionArity { got: forms.len(), expected: self.nvars });
        }
        let Some(first) = forms.first() else {
            // Constant polynomial in zero variables.
            return Ok(self.clone());
        };
        let target = first.nvars;
        for g in forms {
            if g.nvars != target {
                return Err(PolyError::NvarsMismatch { left: target, right: g.nvars });
            }
            if g.ring != self.ring {
                return Err(PolyError::RingMismatch);
            }
        }
        // powers[j][e] = forms[j]^e, filled on demand.
        let mut powers: Vec<Vec<MPoly<R>>> = forms
            .iter()
            .map(|_| vec![Self::constant(self.ring.clone(), target, self.ring.one())])
            .collect();
        let mut out = Self::zero(self.ring.clone(), target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.ring.clone(), target, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap().mul(&forms[j])?;
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][e as usize])?;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Restricts to the linear subspace spanned by the rows of `rows`.
    ///
    /// With `u = (u_0, ..., u_k)` the plane parameters, returns the expanded
    /// polynomial `f(u * rows)` in `k + 1` variables. The plane lies on
    /// `V(f)` scheme-theoretically exactly when the result is zero.
    pub fn restrict_to_plane(&self, rows: &[Vec<R::Elem>]) -> Result<MPoly<R>, PolyError> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != self.nvars {
                return Err(PolyError::MatrixShape { row: i, got: row.len(), expected: self.nvars });
            }
        }
        let rank = self.ring.rank(rows);
        if rank != rows.len() {
            return Err(PolyError::RankDeficient { rank, rows: rows.len() });
        }
        let params = rows.len();
        let forms: Vec<MPoly<R>> = (0..self.nvars)
            .map(|j| {
                let terms = rows.iter().enumerate().map(|(i, row)| {
                    let mut e = vec![0; params];
                    e[i] = 1;
                    (Monomial(e), row[j].clone())
                });
                Self::from_terms(self.ring.clone(), params, terms)
            })
            .collect();
        self.compose(&forms)
    }

    pub fn partial_derivative(&self, index: usize) -> Result<MPoly<R>, PolyError> {
        if index >= self.nvars {
            return Err(PolyError::VariableIndex { index, nvars: self.nvars });
        }
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[index] -= 1;
            out.add_term(dm, self.ring.mul(c, &self.ring.from_i64(e as i64)));
        }
        Ok(out)
    }

    /// Parses the textual grammar
    ///
    /// ```text
    /// expression  = term (('+'|'-') term)*
    /// term        = [coefficient] ['*'] factor ('*' factor)*
    /// factor      = 'x' index ['^' exponent]
    /// ```
    ///
    /// Whitespace is ignored and coefficients are reduced into the ring. A
    /// leading sign and bare-coefficient (constant) terms are also accepted,
    /// so every printed polynomial parses back.
    pub fn parse(text: &str, nvars: usize, ring: R) -> Result<Self, PolyError> {
        Parser::new(text, nvars, ring).expression()
    }
}

impl<R: CoeffRing> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (negative, magnitude) = self.ring.signed_repr(c);
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                f.write_str(&magnitude)?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a, R: CoeffRing> {
    bytes: &'a [u8],
    pos: usize,
    nvars: usize,
    ring: R,
}

impl<'a, R: CoeffRing> Parser<'a, R> {
    fn new(text: &'a str, nvars: usize, ring: R) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0, nvars, ring }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.peek();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn expression(&mut self) -> Result<MPoly<R>, PolyError> {
        let mut poly = MPoly::zero(self.ring.clone(), self.nvars);
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return self.err("empty expression"),
            _ => false,
        };
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = self.ring.neg(&c);
            }
            poly.add_term(m, c);
            negative = match self.peek() {
                None => return Ok(poly),
                Some(b'+') => false,
                Some(b'-') => true,
                Some(other) => return self.err(format!("unexpected '{}'", other as char)),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, R::Elem), PolyError> {
        let mut exps = vec![0u32; self.nvars];
        let coeff = match self.digits() {
            Some(d) => {
                let v: BigInt = d.parse().expect("decimal digits");
                let c = self.ring.from_bigint(&v);
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.factor(&mut exps)?;
                    }
                    Some(b'x') => self.factor(&mut exps)?,
                    _ => return Ok((Monomial(exps), c)),
                }
                c
            }
            None => {
                self.factor(&mut exps)?;
                self.ring.one()
            }
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial(exps), coeff))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), PolyError> {
        if self.peek() != Some(b'x') {
            return self.err("expected a variable 'x<index>'");
        }
        let start = self.pos;
        self.pos += 1;
        let Some(index) = self.digits() else {
            return self.err("expected a variable index after 'x'");
        };
        let index: usize = match index.parse() {
            Ok(i) => i,
            Err(_) => return self.err("variable index too large"),
        };
        if index >= self.nvars {
            return Err(PolyError::VariableOutOfRange { index, nvars: self.nvars, pos: start });
        }
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = match self.digits().map(str::parse::<u32>) {
                Some(Ok(e)) => e,
                Some(Err(_)) => return self.err("exponent too large"),
                None => return self.err("expected an exponent after '^'"),
            };
        }
        exps[index] += e;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Integers, PrimeField};

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn zz(text: &str, nvars: usize) -> MPoly<Integers> {
        MPoly::parse(text, nvars, Integers).unwrap()
    }

    #[test]
    fn parse_plucker_quadric_mod_5() {
        let q = MPoly::parse("x0*x3 - x1*x2", 4, f(5)).unwrap();
        assert_eq!(q.num_terms(), 2);
        assert_eq!(q.coefficient(&Monomial::new(vec![1, 0, 0, 1])), 1);
        assert_eq!(q.coefficient(&Monomial::new(vec![0, 1, 1, 0])), 4);
        assert_eq!(q.to_string(), "x0*x3 + 4*x1*x2");
    }

    #[test]
    fn parse_fermat_cubic() {
        let c = MPoly::parse("x0^3+x1^3+x2^3+x3^3", 4, f(7)).unwrap();
        assert_eq!(c.num_terms(), 4);
        assert_eq!(c.homogeneous_degree(), Some(3));
        assert_eq!(c.to_string(), "x0^3 + x1^3 + x2^3 + x3^3");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            MPoly::parse("x9", 4, f(5)),
            Err(PolyError::VariableOutOfRange { index: 9, nvars: 4, pos: 0 })
        );
        assert!(matches!(MPoly::parse("x0 +", 4, f(5)), Err(PolyError::Parse { pos: 4, .. })));
        assert!(matches!(MPoly::parse("x0 ** x1", 4, f(5)), Err(PolyError::Parse { .. })));
        assert!(matches!(MPoly::parse("", 4, f(5)), Err(PolyError::Parse { pos: 0, .. })));
        assert!(matches!(MPoly::parse("x0^", 4, f(5)), Err(PolyError::Parse { .. })));
        assert!(matches!(MPoly::parse("y0", 4, f(5)), Err(PolyError::Parse { pos: 0, .. })));
        assert!(matches!(MPoly::parse("x1 x2", 4, f(5)), Err(PolyError::Parse { pos: 3, .. })));
    }

    #[test]
    fn parse_variants() {
        let a = zz(" 3 x0 ^2 *x1 - 12*x2 + x0*x0*x1", 3);
        assert_eq!(a.to_string(), "4*x0^2*x1 - 12*x2");
        assert_eq!(zz("-x0 + 5", 2).to_string(), "-x0 + 5");
        let big = MPoly::parse("123456789012345678901234567890*x0", 1, f(7)).unwrap();
        let expected = (123456789012345678901234567890u128 % 7) as u32;
        assert_eq!(big.coefficient(&Monomial::new(vec![1])), expected);
        // Coefficients cancelling to zero leave no stored term.
        assert!(MPoly::parse("5*x0 + 2*x0", 1, f(7)).unwrap().is_zero());
    }

    #[test]
    fn display_round_trip() {
        for text in ["x0*x3 - x1*x2", "-2*x0^2 + 7*x1 - 1", "x2^5*x0 + 3"] {
            let p = zz(text, 4);
            assert_eq!(zz(&p.to_string(), 4), p);
        }
    }

    #[test]
    fn ring_operations() {
        let a = zz("x0 + x1", 2);
        let b = zz("x0 - x1", 2);
        assert_eq!(a.mul(&b).unwrap(), zz("x0^2 - x1^2", 2));
        let g = zz("3*x0*x1 - x1^2 + 4", 2);
        assert!(g.add(&g.scalar_mul(&BigInt::from(-1))).unwrap().is_zero());
        assert_eq!(zz("x0*x3 - x1*x2", 4).total_degree(), Degree::Finite(2));
        assert_eq!(zz("7", 4).total_degree(), Degree::Finite(0));
        assert_eq!(MPoly::zero(Integers, 4).total_degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(
            a.add(&zz("x0", 3)),
            Err(PolyError::NvarsMismatch { left: 2, right: 3 })
        );
        let p5 = MPoly::parse("x0", 1, f(5)).unwrap();
        let p7 = MPoly::parse("x0", 1, f(7)).unwrap();
        assert_eq!(p5.mul(&p7), Err(PolyError::RingMismatch));
    }

    #[test]
    fn evaluation() {
        let q = MPoly::parse("x0*x3 - x1*x2", 4, f(5)).unwrap();
        assert_eq!(q.evaluate(&[1, 0, 0, 1]).unwrap(), 1);
        assert_eq!(q.evaluate(&[1, 1, 1, 1]).unwrap(), 0);
        let g = MPoly::parse("x0^2 + 3*x1 + 4", 2, f(5)).unwrap();
        assert_eq!(g.evaluate(&[0, 0]).unwrap(), 4);
        assert_eq!(g.evaluate(&[0]), Err(PolyError::PointLength { got: 1, expected: 2 }));
    }

    #[test]
    fn restriction_examples() {
        let q = zz("x0*x3 - x1*x2", 4);
        let i = |v: [i64; 4]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let on = q.restrict_to_plane(&[i([1, 0, 0, 0]), i([0, 1, 0, 0])]).unwrap();
        assert!(on.is_zero());
        let off = q.restrict_to_plane(&[i([1, 0, 0, 0]), i([0, 0, 0, 1])]).unwrap();
        assert_eq!(off, zz("x0*x1", 2));

        let cubic = MPoly::parse("x0^3+x1^3+x2^3+x3^3", 4, f(7)).unwrap();
        let r = cubic.restrict_to_plane(&[vec![1, 3, 0, 0], vec![0, 0, 1, 3]]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn restriction_errors() {
        let q = MPoly::parse("x0*x3 - x1*x2", 4, f(5)).unwrap();
        assert_eq!(
            q.restrict_to_plane(&[vec![1, 2, 3, 4], vec![2, 4, 1, 3]]),
            Err(PolyError::RankDeficient { rank: 1, rows: 2 })
        );
        assert_eq!(
            q.restrict_to_plane(&[vec![1, 0, 0]]),
            Err(PolyError::MatrixShape { row: 0, got: 3, expected: 4 })
        );
    }

    #[test]
    fn derivatives() {
        let g = zz("x0^2*x1", 2);
        assert_eq!(g.partial_derivative(0).unwrap(), zz("2*x0*x1", 2));
        assert!(zz("x1^3", 2).partial_derivative(0).unwrap().is_zero());
        let h = MPoly::parse("x0^7", 1, f(7)).unwrap();
        assert!(h.partial_derivative(0).unwrap().is_zero());
        assert_eq!(
            g.partial_derivative(2),
            Err(PolyError::VariableIndex { index: 2, nvars: 2 })
        );
    }

    #[test]
    fn monomial_listing() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Monomial::new(vec![2, 0, 0]));
        assert_eq!(ms[5], Monomial::new(vec![0, 0, 2]));
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomials_of_degree(2, 4).len(), 5);
        assert_eq!(monomials_of_degree(1, 0).len(), 1);
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![1, 0, 0, 1]);
        let b = Monomial::new(vec![0, 1, 1, 0]);
        let c = Monomial::new(vec![0, 0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
    }
}
