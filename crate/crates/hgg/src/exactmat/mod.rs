//! Exact rational dense matrices, companion matrices, and unipotency tests.
//!
//! Every group element in the pipeline is a [`RationalMatrix`]: a small dense
//! square matrix over arbitrary-precision rationals. Nothing is ever rounded;
//! certificate exponents reach the tens of thousands and entries grow to
//! dozens of digits, so all powers go through binary exponentiation.

mod word;

pub use word::{parse_program, CommutatorConvention, WordExpr, WordProgram};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::IntPolynomial;
use crate::{Error, Result};

/// A dense `n × n` matrix with exact rational entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// The elementary matrix with a single 1 at row `i`, column `j`
    /// (0-indexed).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, BigRational::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(
                "matrix rows must form a square".into(),
            ));
        }
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
        .expect("square integer rows")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.n).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        RationalMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        RationalMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.n, v.len(), "matrix/vector dimensions differ");
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(BigRational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut work = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work.at(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let a = work.at(pivot, j).clone();
                    let b = work.at(col, j).clone();
                    work.set(pivot, j, b);
                    work.set(col, j, a);
                    let a = inv.at(pivot, j).clone();
                    let b = inv.at(col, j).clone();
                    inv.set(pivot, j, b);
                    inv.set(col, j, a);
                }
            }
            let scale = work.at(col, col).clone();
            for j in 0..n {
                work.set(col, j, work.at(col, j) / &scale);
                inv.set(col, j, inv.at(col, j) / &scale);
            }
            for r in 0..n {
                if r == col || work.at(r, col).is_zero() {
                    continue;
                }
                let factor = work.at(r, col).clone();
                for j in 0..n {
                    let w = work.at(r, j) - &factor * work.at(col, j);
                    work.set(r, j, w);
                    let v = inv.at(r, j) - &factor * inv.at(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    /// Exact determinant by fraction-free-ish Gaussian elimination over the
    /// rationals.
    pub fn determinant(&self) -> BigRational {
        let n = self.n;
        let mut work = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !work.at(r, col).is_zero()) else {
                return BigRational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    let a = work.at(pivot, j).clone();
                    let b = work.at(col, j).clone();
                    work.set(pivot, j, b);
                    work.set(col, j, a);
                }
                det = -det;
            }
            let lead = work.at(col, col).clone();
            det *= &lead;
            for r in col + 1..n {
                if work.at(r, col).is_zero() {
                    continue;
                }
                let factor = work.at(r, col) / &lead;
                for j in col..n {
                    let w = work.at(r, j) - &factor * work.at(col, j);
                    work.set(r, j, w);
                }
            }
        }
        det
    }

    /// `self^exp` by binary exponentiation; negative exponents invert first.
    pub fn power(&self, exp: i64) -> Result<Self> {
        self.power_big(&BigInt::from(exp))
    }

    pub fn power_big(&self, exp: &BigInt) -> Result<Self> {
        let mut base = if exp.is_negative() {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.abs().to_biguint().expect("non-negative");
        let mut acc = Self::identity(self.n);
        while !e.is_zero() {
            if e.is_odd() {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if !e.is_zero() {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Largest bit length over the entries' numerators and denominators.
    /// Used by the search frontier to cap entry blow-up.
    pub fn max_entry_bits(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.numer().bits().max(e.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Row-major tab-separated entries, each printed exactly (`p/q` or `p`).
    pub fn tsv_row_major(&self) -> String {
        self.entries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("\t")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = strings.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", strings[i * self.n + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A vector of exact integers (e.g. the last column of `A^{-1}B - I`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Gcd of the entries (zeros contribute nothing; all-zero gives 0).
    pub fn gcd(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Companion matrix of a monic integer polynomial: subdiagonal 1s send
/// `e_i` to `e_{i+1}`, and the last column carries the negated coefficients
/// `(-c_0, …, -c_{n-1})` of `f = x^n + c_{n-1}x^{n-1} + … + c_0`.
pub fn companion(f: &IntPolynomial) -> Result<RationalMatrix> {
    if f.is_zero() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::NotMonic);
    }
    let mut m = RationalMatrix::zero(n);
    for i in 0..n - 1 {
        m.set(i + 1, i, BigRational::one());
    }
    for i in 0..n {
        m.set(i, n - 1, BigRational::from_integer(-f.coeff(i)));
    }
    Ok(m)
}

/// Commutator bracket order. The group-theory literature uses both, so the
/// choice travels with every certificate instead of being a hidden constant.
pub fn commutator(
    x: &RationalMatrix,
    y: &RationalMatrix,
    convention: CommutatorConvention,
) -> Result<RationalMatrix> {
    let xi = x.inverse()?;
    let yi = y.inverse()?;
    Ok(match convention {
        CommutatorConvention::XyXinvYinv => x.mul(y).mul(&xi).mul(&yi),
        CommutatorConvention::XinvYinvXy => xi.mul(&yi).mul(x).mul(y),
    })
}

/// True iff `(M - I)^n = 0` exactly.
pub fn is_unipotent(m: &RationalMatrix) -> bool {
    let n = m.dim();
    let nilpart = m.sub(&RationalMatrix::identity(n));
    let mut acc = nilpart.clone();
    for _ in 1..n {
        if acc.is_zero() {
            return true;
        }
        acc = acc.mul(&nilpart);
    }
    acc.is_zero()
}

/// Evaluates a word program against base bindings; let-bound names become
/// available to later bindings and the return expressions.
pub fn evaluate_word(
    program: &WordProgram,
    bindings: &HashMap<String, RationalMatrix>,
    convention: CommutatorConvention,
) -> Result<Vec<RationalMatrix>> {
    program.evaluate(bindings, convention)
}

/// Scales a rational matrix to the primitive integer representative: entries
/// share no common factor and the first nonzero entry of row 1 is positive.
pub fn primitive_integer_scaling(m: &RationalMatrix) -> RationalMatrix {
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for e in m.entries() {
        denom_lcm = denom_lcm.lcm(e.denom());
    }
    for e in m.entries() {
        let scaled = e.numer() * (&denom_lcm / e.denom());
        numer_gcd = numer_gcd.gcd(&scaled);
    }
    if numer_gcd.is_zero() {
        return m.clone();
    }
    let mut factor = BigRational::new(denom_lcm, numer_gcd);
    let first_nonzero = m.entries().iter().find(|e| !e.is_zero());
    if let Some(e) = first_nonzero {
        if (e * &factor).is_negative() {
            factor = -factor;
        }
    }
    m.scale(&factor)
}

/// Scales a column vector to primitive integers, preserving direction.
pub fn primitive_integer_column(v: &[BigRational]) -> Vec<BigRational> {
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for e in v {
        denom_lcm = denom_lcm.lcm(e.denom());
    }
    for e in v {
        let scaled = e.numer() * (&denom_lcm / e.denom());
        numer_gcd = numer_gcd.gcd(&scaled);
    }
    if numer_gcd.is_zero() {
        return v.to_vec();
    }
    let factor = BigRational::new(denom_lcm, numer_gcd);
    v.iter().map(|e| e * &factor).collect()
}

/// True iff `x` is a perfect square (used by the determinant properties of
/// skew forms: `det = Pf²`).
pub fn bigint_is_perfect_square(x: &BigInt) -> bool {
    if x.is_negative() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let root = x.sqrt();
    &(&root * &root) == x
}
