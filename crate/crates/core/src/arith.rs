//! Exact arithmetic: big-integer binomials, Gaussian binomials and prime fields.
//!
//! Every numeric quantity in the crate is an exact integer. Prime-field
//! residues are stored as `u32` with `p < 2^31`, so a product of two residues
//! always fits in a `u64` before reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible field characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("gaussian binomial [{a} choose {b}] requires b <= a")]
    GaussianOutOfRange { a: u64, b: u64 },
    #[error("gaussian binomial base q = {0} must be at least 2")]
    GaussianBase(u64),
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc = C(a, i) here, so the division is exact.
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// The q-binomial `[a choose b]_q`: the number of `b`-dimensional subspaces of `F_q^a`.
pub fn gaussian_binomial(a: u64, b: u64, q: u64) -> Result<BigInt, ArithError> {
    if b > a {
        return Err(ArithError::GaussianOutOfRange { a, b });
    }
    if q < 2 {
        return Err(ArithError::GaussianBase(q));
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= num_traits::pow(q.clone(), (a - i) as usize) - 1u32;
        den *= num_traits::pow(q.clone(), (b - i) as usize) - 1u32;
    }
    Ok(num / den)
}

/// Deterministic primality test, exact for every `u64`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p.is_multiple_of(small) {
            return p == small;
        }
    }
    let mut d = p - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powmod = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    // This witness set is deterministic for all 64-bit inputs.
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % p;
        if a == 0 {
            continue;
        }
        let mut x = powmod(a, d);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field `F_p`. Residues are plain `u32` values in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u32,
}

impl TryFrom<u64> for PrimeField {
    type Error = ArithError;

    fn try_from(p: u64) -> Result<Self, Self::Error> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p as u64
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Wraps a residue (reducing it) as a field element.
    pub fn elem(&self, value: u64) -> Fp {
        Fp { value: (value % self.p as u64) as u32, p: self.p }
    }

    #[inline]
    pub fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u32 {
        let r = v % BigInt::from(self.p);
        let r = if r.is_negative() { r + self.p } else { r };
        r.to_u32().expect("residue below p")
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32, ArithError> {
        if a.is_multiple_of(self.p) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// Rank of a matrix of residues, by Gaussian elimination on a copy.
    pub fn rank(&self, rows: &[Vec<u32>]) -> usize {
        let mut m: Vec<Vec<u32>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.inv(m[rank][col]).expect("pivot is nonzero");
            for j in col..ncols {
                m[rank][j] = self.mul(m[rank][j], inv);
            }
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col];
                    for j in col..ncols {
                        let t = self.mul(factor, m[rank][j]);
                        m[r][j] = self.sub(m[r][j], t);
                    }
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

/// An element of a prime field, tagged with its modulus.
///
/// Operators panic when the two operands live in different fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, e: u64) -> Fp {
        Fp { value: self.field().pow(self.value, e), p: self.p }
    }

    pub fn inv(self) -> Result<Fp, ArithError> {
        Ok(Fp { value: self.field().inv(self.value)?, p: self.p })
    }

    fn same_field(self, other: Fp) -> PrimeField {
        assert_eq!(self.p, other.p, "arithmetic between F_{} and F_{}", self.p, other.p);
        self.field()
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp { value: self.same_field(rhs).add(self.value, rhs.value), p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp { value: self.same_field(rhs).sub(self.value, rhs.value), p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp { value: self.same_field(rhs).mul(self.value, rhs.value), p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: self.field().neg(self.value), p: self.p }
    }
}

/// Coefficient ring of a polynomial: either a prime field or the integers.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Sign and magnitude used when printing a coefficient.
    fn signed_repr(&self, a: &Self::Elem) -> (bool, String);

    /// Rank over the fraction field.
    fn rank(&self, rows: &[Vec<Self::Elem>]) -> usize;
}

impl CoeffRing for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::add(self, *a, *b)
    }
    fn neg(&self, a: &u32) -> u32 {
        PrimeField::neg(self, *a)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::mul(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::sub(self, *a, *b)
    }
    fn from_bigint(&self, v: &BigInt) -> u32 {
        self.reduce_bigint(v)
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }
    fn signed_repr(&self, a: &u32) -> (bool, String) {
        (false, a.to_string())
    }
    fn rank(&self, rows: &[Vec<u32>]) -> usize {
        PrimeField::rank(self, rows)
    }
}

/// The ring of integers, with arbitrary-precision elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn signed_repr(&self, a: &BigInt) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }

    fn rank(&self, rows: &[Vec<BigInt>]) -> usize {
        // Fraction-free elimination: row operations scale by the pivot, so
        // the rank over Q is preserved without leaving Z.
        let mut m: Vec<Vec<BigInt>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            for r in rank + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let a = m[rank][col].clone();
                let b = m[r][col].clone();
                for j in col..ncols {
                    let v = &m[r][j] * &a - &m[rank][j] * &b;
                    m[r][j] = v;
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}
