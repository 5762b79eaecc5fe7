//! Parameter vectors, cyclotomic-product polynomials, and the closure
//! classification predicates for hypergeometric pairs.
//!
//! A degree-`n` hypergeometric pair is encoded either by two parameter
//! vectors `alpha`, `beta` (multisets of rationals in `[0,1)`, the root
//! arguments divided by `2π`) or by the corresponding integer polynomials
//! `f(x) = Π (x - e^{2πi α_j})`, `g(x) = Π (x - e^{2πi β_j})`. Integrality
//! forces each polynomial to be a product of cyclotomic polynomials, which is
//! what [`params_to_poly`] and [`poly_to_params`] convert between.
//!
//! All comparisons are exact; this module contains no floating point.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmat::IntVector;
use crate::{Error, Result};

/// A sorted multiset of rationals in `[0,1)`, one per root of the polynomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParameterVector {
    entries: Vec<BigRational>,
}

impl ParameterVector {
    /// Builds a parameter vector, reducing every entry mod 1 into `[0,1)`
    /// and sorting with multiplicity.
    pub fn new(entries: Vec<BigRational>) -> Self {
        let mut entries: Vec<BigRational> = entries.into_iter().map(reduce_mod_one).collect();
        entries.sort();
        ParameterVector { entries }
    }

    pub fn from_i64_pairs(pairs: &[(i64, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// Number of entries, i.e. the degree of the associated polynomial.
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Translates every entry by `r` mod 1 (a scalar shift).
    pub fn shifted(&self, r: &BigRational) -> Self {
        Self::new(self.entries.iter().map(|q| q + r).collect())
    }

    /// Least common multiple of the entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// True if some entry occurs more than once.
    pub fn has_repeat(&self) -> bool {
        self.entries.windows(2).any(|w| w[0] == w[1])
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        self.entries.binary_search(q).is_ok()
    }
}

fn reduce_mod_one(q: BigRational) -> BigRational {
    let floor = q.floor();
    q - floor
}

impl fmt::Display for ParameterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|q| q.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ParameterVector {
    type Err = Error;

    /// Parses the textual form `0,0,1/2,1/2` (comma-separated reduced
    /// fractions).
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, part) in s.split(',').enumerate() {
            let part = part.trim();
            let q: BigRational = part
                .parse()
                .map_err(|_| Error::parse(1, idx + 1, format!("bad rational `{part}`")))?;
            entries.push(q);
        }
        Ok(ParameterVector::new(entries))
    }
}

/// A polynomial with exact integer coefficients, stored low-to-high with the
/// leading coefficient nonzero. The zero polynomial has an empty coefficient
/// list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The polynomial `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    ///
    /// Panics on the zero polynomial, which has no degree.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Exact division by a monic divisor; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(divisor.is_monic(), "div_exact requires a monic divisor");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let qd = self.degree() - dd;
        let mut quot = vec![BigInt::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Coefficients as a comma-separated low-to-high list, e.g. `1,-2,1`.
    pub fn coeff_list_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a comma-separated low-to-high coefficient list.
    pub fn from_coeff_list(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let c: BigInt = part
                .parse()
                .map_err(|_| Error::parse(1, 1, format!("bad integer coefficient `{part}`")))?;
            coeffs.push(c);
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable monomial form, high degree first: `x^6 - 2x^5 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// A factored cyclotomic product `Π Φ_d^{m_d}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloProduct {
    factors: BTreeMap<u64, u32>,
}

impl CycloProduct {
    pub fn new(factors: BTreeMap<u64, u32>) -> Self {
        let factors = factors.into_iter().filter(|&(_, m)| m > 0).collect();
        CycloProduct { factors }
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|(&d, &m)| euler_phi(d) * u64::from(m))
            .sum()
    }

    /// Expands the product to its integer polynomial.
    pub fn expand(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for (&d, &m) in &self.factors {
            let phi = cyclotomic_poly(d);
            for _ in 0..m {
                acc = acc.mul(&phi);
            }
        }
        acc
    }

    /// The parameter multiset: every reduced fraction `k/d` repeated `m_d`
    /// times per factor.
    pub fn parameters(&self) -> ParameterVector {
        let mut entries = Vec::new();
        for (&d, &m) in &self.factors {
            for k in orbit_numerators(d) {
                let q = BigRational::new(BigInt::from(k), BigInt::from(d));
                for _ in 0..m {
                    entries.push(q.clone());
                }
            }
        }
        ParameterVector::new(entries)
    }

    /// True if the two products share a cyclotomic factor (hence a root).
    pub fn shares_factor(&self, other: &Self) -> bool {
        self.factors.keys().any(|d| other.factors.contains_key(d))
    }
}

impl fmt::Display for CycloProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(&d, &m)| {
                if m == 1 {
                    format!("Phi_{d}")
                } else {
                    format!("Phi_{d}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Euler's totient.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1);
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Numerators of the reduced fractions with denominator `d` (just `0` for
/// `d = 1`).
fn orbit_numerators(d: u64) -> Vec<u64> {
    if d == 1 {
        return vec![0];
    }
    (1..d).filter(|&k| k.gcd(&d) == 1).collect()
}

/// The `d`-th cyclotomic polynomial, computed by dividing `x^d - 1` by the
/// cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(d: u64) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic_poly requires d >= 1");
    if d == 1 {
        return IntPolynomial::from_i64(&[-1, 1]);
    }
    let mut result = IntPolynomial::x_pow_minus_one(d as usize);
    for e in 1..d {
        if d % e == 0 {
            let phi_e = cyclotomic_poly(e);
            result = result
                .div_exact(&phi_e)
                .expect("x^d - 1 is divisible by each Phi_e with e | d");
        }
    }
    result
}

/// Converts a parameter vector to its polynomial and cyclotomic
/// factorization.
///
/// Entries are grouped by reduced denominator `d`; each group must contain
/// every reduced fraction `k/d` with uniform multiplicity, otherwise the
/// product would not have integer coefficients and `NotGaloisClosed` is
/// returned.
pub fn params_to_poly(p: &ParameterVector) -> Result<(IntPolynomial, CycloProduct)> {
    if p.is_empty() {
        return Err(Error::InvalidPair("empty parameter vector".into()));
    }
    let mut by_denom: BTreeMap<u64, BTreeMap<u64, u32>> = BTreeMap::new();
    for q in p.entries() {
        let d: u64 = q.denom().try_into().map_err(|_| {
            Error::InvalidPair(format!("denominator of {q} is out of supported range"))
        })?;
        let k: u64 = q
            .numer()
            .try_into()
            .map_err(|_| Error::InvalidPair(format!("numerator of {q} is negative")))?;
        *by_denom.entry(d).or_default().entry(k).or_insert(0) += 1;
    }
    let mut factors = BTreeMap::new();
    for (d, numerators) in by_denom {
        let expected = orbit_numerators(d);
        let mult = *numerators.values().next().expect("group is nonempty");
        let complete = numerators.len() == expected.len()
            && expected.iter().all(|k| numerators.get(k) == Some(&mult));
        if !complete {
            return Err(Error::NotGaloisClosed(d));
        }
        factors.insert(d, mult);
    }
    let product = CycloProduct::new(factors);
    Ok((product.expand(), product))
}

/// Factors a monic integer polynomial into cyclotomics by trial division and
/// returns the parameter multiset.
///
/// Trial divisors are bounded by `d <= 2·deg(f)^2 + 2`, which covers every
/// `d` with `φ(d) <= deg(f)` since `φ(d) >= sqrt(d/2)`.
pub fn poly_to_params(f: &IntPolynomial) -> Result<ParameterVector> {
    if f.is_zero() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let deg = f.degree() as u64;
    let bound = 2 * deg * deg + 2;
    let mut remaining = f.clone();
    let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
    for d in 1..=bound {
        if remaining.degree() == 0 {
            break;
        }
        if euler_phi(d) > remaining.degree() as u64 {
            continue;
        }
        let phi = cyclotomic_poly(d);
        while let Some(quot) = remaining.div_exact(&phi) {
            *factors.entry(d).or_insert(0) += 1;
            remaining = quot;
            if remaining.degree() == 0 {
                break;
            }
        }
    }
    if remaining != IntPolynomial::one() {
        return Err(Error::NotCyclotomicProduct(remaining.to_string()));
    }
    Ok(CycloProduct::new(factors).parameters())
}

/// True iff `x^n f(1/x) = ± f(x)`, i.e. the coefficient list is palindromic
/// up to a global sign.
pub fn is_self_reciprocal(f: &IntPolynomial) -> bool {
    assert!(!f.is_zero(), "is_self_reciprocal requires a nonzero polynomial");
    let coeffs = f.coeffs();
    let n = coeffs.len();
    let palindrome = (0..n).all(|i| coeffs[i] == coeffs[n - 1 - i]);
    let anti = (0..n).all(|i| coeffs[i] == -&coeffs[n - 1 - i]);
    palindrome || anti
}

/// True iff there is no `k >= 2` with `f(x) = f_1(x^k)` and `g(x) = g_1(x^k)`
/// simultaneously.
pub fn is_primitive_pair(f: &IntPolynomial, g: &IntPolynomial) -> bool {
    if f.is_zero() || g.is_zero() {
        return true;
    }
    let max_k = f.degree().min(g.degree());
    for k in 2..=max_k.max(1) {
        let f_in_xk = f.support().iter().all(|e| e % k == 0);
        let g_in_xk = g.support().iter().all(|e| e % k == 0);
        if f_in_xk && g_in_xk {
            return false;
        }
    }
    true
}

/// True iff `gcd(f, g)` over the rationals has positive degree.
pub fn have_common_root(f: &IntPolynomial, g: &IntPolynomial) -> bool {
    if f.is_zero() || g.is_zero() {
        return !f.is_zero() || !g.is_zero();
    }
    rational_gcd_degree(f, g) > 0
}

/// Degree of the monic gcd of `f` and `g` over the rationals (Euclid on
/// rational-coefficient remainders).
fn rational_gcd_degree(f: &IntPolynomial, g: &IntPolynomial) -> usize {
    let to_rat = |p: &IntPolynomial| -> Vec<BigRational> {
        p.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let trim = |mut v: Vec<BigRational>| -> Vec<BigRational> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    };
    let mut a = trim(to_rat(f));
    let mut b = trim(to_rat(g));
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lead = b[db].clone();
        let mut r = a.clone();
        while r.len() >= b.len() && !r.is_empty() {
            let dr = r.len() - 1;
            let c = &r[dr] / &lead;
            for j in 0..=db {
                let t = &c * &b[j];
                r[dr - db + j] -= t;
            }
            r = trim(r);
            if r.len() <= db {
                break;
            }
        }
        a = b;
        b = trim(r);
    }
    if a.is_empty() {
        0
    } else {
        a.len() - 1
    }
}

/// True iff the merged sorted parameter sequences strictly alternate
/// `α,β,α,β,…` or `β,α,β,α,…` (the roots interlace on the unit circle).
///
/// A repeated entry within one side makes strict alternation impossible and
/// yields `false`; a shared entry across the two sides is an error.
pub fn roots_interlace(alpha: &ParameterVector, beta: &ParameterVector) -> Result<bool> {
    if alpha.degree() != beta.degree() {
        return Err(Error::DimensionMismatch(format!(
            "parameter vectors have degrees {} and {}",
            alpha.degree(),
            beta.degree()
        )));
    }
    for q in alpha.entries() {
        if beta.contains(q) {
            return Err(Error::SharedEntry(q.to_string()));
        }
    }
    if alpha.has_repeat() || beta.has_repeat() {
        return Ok(false);
    }
    let mut merged: Vec<(&BigRational, bool)> = alpha
        .entries()
        .iter()
        .map(|q| (q, true))
        .chain(beta.entries().iter().map(|q| (q, false)))
        .collect();
    merged.sort();
    Ok(merged.windows(2).all(|w| w[0].1 != w[1].1))
}

/// Zariski closure class of a hypergeometric pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureClass {
    Finite,
    Symplectic,
    Orthogonal,
    Other,
}

impl fmt::Display for ClosureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClosureClass::Finite => "Finite",
            ClosureClass::Symplectic => "Symplectic",
            ClosureClass::Orthogonal => "Orthogonal",
            ClosureClass::Other => "Other",
        };
        write!(f, "{s}")
    }
}

/// Classifies the Zariski closure of `Γ(f,g)`.
///
/// The pair must be a valid hypergeometric pair: equal even-or-odd degree,
/// cyclotomic products (roots on the unit circle), no common root, primitive,
/// self-reciprocal. Interlacing roots give a finite group; otherwise constant
/// terms decide between the symplectic and orthogonal families.
pub fn zariski_closure_class(f: &IntPolynomial, g: &IntPolynomial) -> Result<ClosureClass> {
    if f.is_zero() || g.is_zero() || !f.is_monic() || !g.is_monic() {
        return Err(Error::InvalidPair("both polynomials must be monic".into()));
    }
    if f.degree() != g.degree() {
        return Err(Error::InvalidPair("degrees differ".into()));
    }
    if f == g {
        return Err(Error::InvalidPair("f = g".into()));
    }
    let alpha = poly_to_params(f).map_err(|_| {
        Error::InvalidPair("f is not a product of cyclotomic polynomials".into())
    })?;
    let beta = poly_to_params(g).map_err(|_| {
        Error::InvalidPair("g is not a product of cyclotomic polynomials".into())
    })?;
    if have_common_root(f, g) {
        return Err(Error::InvalidPair("f and g share a root".into()));
    }
    if !is_primitive_pair(f, g) {
        return Err(Error::InvalidPair("pair is not primitive".into()));
    }
    if !is_self_reciprocal(f) || !is_self_reciprocal(g) {
        return Err(Error::InvalidPair("polynomials are not self-reciprocal".into()));
    }
    if roots_interlace(&alpha, &beta)? {
        return Ok(ClosureClass::Finite);
    }
    let f0 = f.constant_term();
    let g0 = g.constant_term();
    if f.degree() % 2 == 0 && f0.is_one() && g0.is_one() {
        return Ok(ClosureClass::Symplectic);
    }
    if (&f0 * &g0) == -BigInt::one() {
        return Ok(ClosureClass::Orthogonal);
    }
    Ok(ClosureClass::Other)
}

/// Leading coefficient of `f - g` together with the vector
/// `v = (a_1 - b_1, …, a_{n-1} - b_{n-1}, 0)` of coefficient differences.
///
/// `v` equals the last column of `A^{-1}B - I` for the companion matrices of
/// the pair; its coordinate gcd governs the small-vector obstruction.
pub fn difference_leading_data(
    f: &IntPolynomial,
    g: &IntPolynomial,
) -> Result<(BigInt, IntVector)> {
    if f.is_zero() || g.is_zero() || !f.is_monic() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    if n != g.degree() {
        return Err(Error::DimensionMismatch(format!(
            "degrees {} and {} differ",
            n,
            g.degree()
        )));
    }
    let diff = f.sub(g);
    if diff.is_zero() {
        return Err(Error::ZeroDifference);
    }
    let leading = diff.leading();
    let mut v = Vec::with_capacity(n);
    for i in 1..n {
        v.push(diff.coeff(i));
    }
    v.push(BigInt::zero());
    Ok((leading, IntVector::new(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(pairs: &[(i64, i64)]) -> ParameterVector {
        ParameterVector::from_i64_pairs(pairs)
    }

    /// Independent oracle: build Phi_d by dividing x^d - 1 by the product of
    /// the proper-divisor cyclotomics, all in one shot.
    fn cyclotomic_oracle(d: u64) -> IntPolynomial {
        let mut denom = IntPolynomial::one();
        for e in 1..d {
            if d % e == 0 {
                denom = denom.mul(&cyclotomic_oracle(e));
            }
        }
        IntPolynomial::x_pow_minus_one(d as usize)
            .div_exact(&denom)
            .unwrap()
    }

    #[test]
    fn cyclotomic_basics() {
        assert_eq!(cyclotomic_poly(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(
            cyclotomic_poly(9),
            IntPolynomial::from_i64(&[1, 0, 0, 1, 0, 0, 1])
        );
    }

    #[test]
    fn cyclotomic_12_matches_division_oracle() {
        let expected = cyclotomic_oracle(12);
        assert_eq!(expected, IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(12), expected);
    }

    #[test]
    fn cyclotomic_agrees_with_oracle_up_to_30() {
        for d in 1..=30 {
            assert_eq!(cyclotomic_poly(d), cyclotomic_oracle(d), "d = {d}");
        }
    }

    #[test]
    fn euler_phi_values() {
        let vals: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(vals, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn params_to_poly_c1() {
        let (f, prod) = params_to_poly(&pv(&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (1, 2)]))
            .unwrap();
        assert_eq!(f, IntPolynomial::from_i64(&[1, -2, -1, 4, -1, -2, 1]));
        assert_eq!(prod.multiplicity(1), 4);
        assert_eq!(prod.multiplicity(2), 2);

        let (g, _) = params_to_poly(&pv(&[(1, 3), (1, 3), (2, 3), (2, 3), (1, 6), (5, 6)]))
            .unwrap();
        assert_eq!(g, IntPolynomial::from_i64(&[1, 1, 2, 1, 2, 1, 1]));
    }

    #[test]
    fn params_to_poly_rejects_incomplete_orbit() {
        assert_eq!(
            params_to_poly(&pv(&[(1, 3)])),
            Err(Error::NotGaloisClosed(3))
        );
        // unequal multiplicities on one orbit
        assert_eq!(
            params_to_poly(&pv(&[(1, 3), (1, 3), (2, 3)])),
            Err(Error::NotGaloisClosed(3))
        );
    }

    #[test]
    fn poly_to_params_roundtrip_and_errors() {
        let phi9 = IntPolynomial::from_i64(&[1, 0, 0, 1, 0, 0, 1]);
        let params = poly_to_params(&phi9).unwrap();
        assert_eq!(
            params,
            pv(&[(1, 9), (2, 9), (4, 9), (5, 9), (7, 9), (8, 9)])
        );

        assert_eq!(
            poly_to_params(&IntPolynomial::from_i64(&[-1, 1])).unwrap(),
            pv(&[(0, 1)])
        );

        assert!(matches!(
            poly_to_params(&IntPolynomial::from_i64(&[-2, 0, 1])),
            Err(Error::NotCyclotomicProduct(_))
        ));
    }

    #[test]
    fn self_reciprocal_checks() {
        assert!(is_self_reciprocal(&IntPolynomial::from_i64(&[
            1, -2, -1, 4, -1, -2, 1
        ])));
        assert!(!is_self_reciprocal(&IntPolynomial::from_i64(&[3, 2, 1])));
        assert!(is_self_reciprocal(&IntPolynomial::from_i64(&[1, 1])));
        // antisymmetric case: x - 1
        assert!(is_self_reciprocal(&IntPolynomial::from_i64(&[-1, 1])));
    }

    #[test]
    fn primitive_pair_checks() {
        let c10_f = IntPolynomial::from_i64(&[1, -3, 3, -2, 3, -3, 1]);
        let c10_g = IntPolynomial::from_i64(&[1, 0, 0, 1, 0, 0, 1]);
        assert!(is_primitive_pair(&c10_f, &c10_g));

        // Phi_9 and Phi_18 are both polynomials in x^3; the oracle scans
        // every k in 2..=6 directly.
        let phi9 = cyclotomic_poly(9);
        let phi18 = cyclotomic_poly(18);
        assert_eq!(phi18, IntPolynomial::from_i64(&[1, 0, 0, -1, 0, 0, 1]));
        let mut oracle_imprimitive = false;
        for k in 2..=6usize {
            let both = phi9.support().iter().all(|e| e % k == 0)
                && phi18.support().iter().all(|e| e % k == 0);
            if both {
                oracle_imprimitive = true;
            }
        }
        assert!(oracle_imprimitive);
        assert!(!is_primitive_pair(&phi9, &phi18));

        assert!(is_primitive_pair(
            &IntPolynomial::from_i64(&[-1, 1]),
            &IntPolynomial::from_i64(&[1, 1])
        ));
    }

    #[test]
    fn common_root_checks() {
        let sh1 = IntPolynomial::from_i64(&[-1, 0, 1]); // (x-1)(x+1)
        let sh2 = IntPolynomial::from_i64(&[1, 1]).mul(&cyclotomic_poly(3));
        assert!(have_common_root(&sh1, &sh2));

        let c1_f = IntPolynomial::from_i64(&[1, -2, -1, 4, -1, -2, 1]);
        let c1_g = IntPolynomial::from_i64(&[1, 1, 2, 1, 2, 1, 1]);
        assert!(!have_common_root(&c1_f, &c1_g));

        assert!(!have_common_root(&cyclotomic_poly(4), &cyclotomic_poly(6)));
    }

    #[test]
    fn interlacing_checks() {
        assert!(roots_interlace(&pv(&[(1, 4), (3, 4)]), &pv(&[(0, 1), (1, 2)])).unwrap());

        let alpha = pv(&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (1, 2)]);
        let beta = pv(&[(1, 3), (1, 3), (2, 3), (2, 3), (1, 6), (5, 6)]);
        assert!(!roots_interlace(&alpha, &beta).unwrap());

        assert!(matches!(
            roots_interlace(&pv(&[(1, 2)]), &pv(&[(1, 2)])),
            Err(Error::SharedEntry(_))
        ));
    }

    #[test]
    fn interlace_is_symmetric() {
        let a = pv(&[(1, 4), (3, 4)]);
        let b = pv(&[(0, 1), (1, 2)]);
        assert_eq!(
            roots_interlace(&a, &b).unwrap(),
            roots_interlace(&b, &a).unwrap()
        );
    }

    #[test]
    fn closure_classification() {
        let c1_f = IntPolynomial::from_i64(&[1, -2, -1, 4, -1, -2, 1]);
        let c1_g = IntPolynomial::from_i64(&[1, 1, 2, 1, 2, 1, 1]);
        assert_eq!(
            zariski_closure_class(&c1_f, &c1_g).unwrap(),
            ClosureClass::Symplectic
        );

        // Interlacing pair: Phi_1 Phi_2 = {0, 1/2} vs Phi_3 = {1/3, 2/3}.
        let f = cyclotomic_poly(1).mul(&cyclotomic_poly(2));
        let g = cyclotomic_poly(3);
        assert_eq!(zariski_closure_class(&f, &g).unwrap(), ClosureClass::Finite);

        // f(0) = 1, g(0) = -1, non-interlacing: odd multiplicity of Phi_1 in g.
        let f = cyclotomic_poly(3).mul(&cyclotomic_poly(3)).mul(&cyclotomic_poly(4));
        let g = cyclotomic_poly(1).mul(&cyclotomic_poly(2)).mul(&cyclotomic_poly(5));
        let alpha = poly_to_params(&f).unwrap();
        let beta = poly_to_params(&g).unwrap();
        assert!(!roots_interlace(&alpha, &beta).unwrap());
        assert_eq!(
            zariski_closure_class(&f, &g).unwrap(),
            ClosureClass::Orthogonal
        );

        assert!(matches!(
            zariski_closure_class(&c1_f, &c1_f),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn difference_data_c1_and_a15() {
        let c1_f = IntPolynomial::from_i64(&[1, -2, -1, 4, -1, -2, 1]);
        let c1_g = IntPolynomial::from_i64(&[1, 1, 2, 1, 2, 1, 1]);
        let (lead, v) = difference_leading_data(&c1_f, &c1_g).unwrap();
        assert_eq!(lead, BigInt::from(-3));
        assert_eq!(v, IntVector::from_i64(&[-3, -3, 3, -3, -3, 0]));

        // (x-1)^6 vs Phi_3^3
        let mut f = IntPolynomial::one();
        for _ in 0..6 {
            f = f.mul(&cyclotomic_poly(1));
        }
        let mut g = IntPolynomial::one();
        for _ in 0..3 {
            g = g.mul(&cyclotomic_poly(3));
        }
        let (lead, v) = difference_leading_data(&f, &g).unwrap();
        assert_eq!(v, IntVector::from_i64(&[-9, 9, -27, 9, -9, 0]));
        assert_eq!(lead, BigInt::from(-9));

        assert_eq!(
            difference_leading_data(&c1_f, &c1_f),
            Err(Error::ZeroDifference)
        );
    }

    #[test]
    fn parameter_vector_text_roundtrip() {
        let p: ParameterVector = "0,0,0,0,1/2,1/2".parse().unwrap();
        assert_eq!(p, pv(&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (1, 2)]));
        assert_eq!(p.to_string(), "0,0,0,0,1/2,1/2");
    }

    #[test]
    fn poly_display() {
        let f = IntPolynomial::from_i64(&[1, -2, -1, 4, -1, -2, 1]);
        assert_eq!(f.to_string(), "x^6 - 2x^5 - x^4 + 4x^3 - x^2 - 2x + 1");
        assert_eq!(f.coeff_list_string(), "1,-2,-1,4,-1,-2,1");
    }
}
