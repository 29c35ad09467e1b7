//! Exact polynomial arithmetic for counting generating functions.
//!
//! Everything here is exact: integer coefficients are [`BigInt`], rational
//! ones [`BigRational`].  Four types:
//!
//! * [`UniPoly`]   — dense univariate integer polynomial in `t`,
//! * [`RatPoly`]   — dense univariate rational polynomial in `t`,
//! * [`BiPoly`]    — sparse bivariate integer polynomial in `t`, `s`,
//! * [`FVector`]   — per-dimension simplex counts of a clique complex.
//!
//! Canonical forms are maintained by every operation: no trailing zero
//! coefficients ([`UniPoly`], [`RatPoly`]), no stored zero terms
//! ([`BiPoly`]).  An `FVector` corresponds to the polynomial
//! `1 + f_0 t + f_1 t^2 + ...` — the constant term 1 counts the empty
//! simplex and is not part of the vector.
//!
//! JSON forms keep coefficients as decimal strings so that counts survive
//! round trips without any floating-point involvement.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

/// Univariate polynomial with exact integer coefficients, dense in `t`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    /// `coeffs[k]` is the coefficient of `t^k`; never ends in a zero.
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> UniPoly {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience for literals in tests and fixtures.
    pub fn from_i64(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiply by `t` (shift all exponents up by one).
    pub fn times_t(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// `self` raised to a nonnegative power, by repeated multiplication.
    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// The antiderivative with constant term zero:
    /// `c_k t^k  ->  c_k/(k+1) t^{k+1}`.
    pub fn antiderivative(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(BigRational::new(c.clone(), BigInt::from(k as u64 + 1)));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, &mut first, c.is_negative(), &c.abs().to_string(), &t_power(k))?;
        }
        Ok(())
    }
}

/// Shared sign-aware term printer: `first` tracks whether a separator is
/// needed, `unit` suppresses a coefficient of one next to a variable part.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    negative: bool,
    magnitude: &str,
    vars: &str,
) -> fmt::Result {
    if *first {
        if negative {
            write!(f, "-")?;
        }
        *first = false;
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if vars.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude == "1" {
        write!(f, "{vars}")
    } else {
        write!(f, "{magnitude} {vars}")
    }
}

fn t_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<UniPoly, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|c| BigInt::from_str(c).map_err(|e| D::Error::custom(format!("bad integer {c:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

// ---------------------------------------------------------------------------
// RatPoly
// ---------------------------------------------------------------------------

/// Univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> RatPoly {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> RatPoly {
        let mut p = RatPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Termwise derivative.
    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from(BigInt::from(k as u64)))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    /// Divide by `t`.  Only valid when the constant term vanishes, which is
    /// guaranteed for antiderivatives; anything else is a bug on our side.
    pub fn div_by_t(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Ok(RatPoly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::Inconsistency(format!(
                "division by t of a polynomial with constant term {}",
                self.coeffs[0]
            )));
        }
        Ok(RatPoly::from_coeffs(self.coeffs[1..].to_vec()))
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact conversion to integer coefficients; an error means some
    /// denominator failed to cancel.
    pub fn to_int_poly(&self) -> Result<UniPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.denom().is_one() {
                return Err(Error::Inconsistency(format!(
                    "coefficient of t^{k} is {c}, not an integer"
                )));
            }
            coeffs.push(c.numer().clone());
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl From<&UniPoly> for RatPoly {
    fn from(p: &UniPoly) -> RatPoly {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sum for RatPoly {
    fn sum<I: Iterator<Item = RatPoly>>(iter: I) -> RatPoly {
        iter.fold(RatPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, &mut first, c.is_negative(), &c.abs().to_string(), &t_power(k))?;
        }
        Ok(())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(BigRational::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<RatPoly, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|c| {
                BigRational::from_str(c)
                    .map_err(|e| D::Error::custom(format!("bad rational {c:?}: {e}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RatPoly::from_coeffs(coeffs))
    }
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

/// Bivariate polynomial in `t` and `s` with integer coefficients, stored
/// sparsely as `(t-exponent, s-exponent) -> coefficient` with no zero
/// entries.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigInt)>>(terms: I) -> BiPoly {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Add `c * t^i * s^j`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^i s^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&ij, c)| (ij, c))
    }

    /// Largest `t`-exponent and largest `s`-exponent present.
    pub fn max_degrees(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            return None;
        }
        let mut di = 0;
        let mut dj = 0;
        for &(i, j) in self.terms.keys() {
            di = di.max(i);
            dj = dj.max(j);
        }
        Some((di, dj))
    }

    /// Swap the roles of `t` and `s`.
    pub fn transpose(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at integer arguments.
    pub fn eval(&self, t: &BigInt, s: &BigInt) -> BigInt {
        // Exponents stay tiny (clique dimensions), so power tables would be
        // overkill; still, avoid recomputing pow per term.
        let Some((di, dj)) = self.max_degrees() else {
            return BigInt::zero();
        };
        let tp = power_table(t, di);
        let sp = power_table(s, dj);
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * &tp[i as usize] * &sp[j as usize];
        }
        acc
    }
}

fn power_table(x: &BigInt, up_to: u32) -> Vec<BigInt> {
    let mut tab = Vec::with_capacity(up_to as usize + 1);
    tab.push(BigInt::one());
    for k in 1..=up_to as usize {
        let next = &tab[k - 1] * x;
        tab.push(next);
    }
    tab
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&ij, c)| (ij, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |mut acc, p| {
            for (&(i, j), c) in &p.terms {
                acc.add_term(i, j, c.clone());
            }
            acc
        })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let mut vars = Vec::new();
            match i {
                0 => {}
                1 => vars.push("t".to_string()),
                _ => vars.push(format!("t^{i}")),
            }
            match j {
                0 => {}
                1 => vars.push("s".to_string()),
                _ => vars.push(format!("s^{j}")),
            }
            write_term(f, &mut first, c.is_negative(), &c.abs().to_string(), &vars.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<(u32, u32, String)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.to_string()))
            .collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<BiPoly, D::Error> {
        let triples = Vec::<(u32, u32, String)>::deserialize(d)?;
        let mut p = BiPoly::zero();
        for (i, j, c) in &triples {
            let c = BigInt::from_str(c)
                .map_err(|e| D::Error::custom(format!("bad integer {c:?}: {e}")))?;
            p.add_term(*i, *j, c);
        }
        Ok(p)
    }
}

// ---------------------------------------------------------------------------
// FVector
// ---------------------------------------------------------------------------

/// Simplex counts of a clique complex: `counts[k]` is the number of cliques
/// on `k+1` vertices (dimension `k`).  Empty for the graph with no vertices.
///
/// Every entry is positive: a complex cannot have a `k`-simplex without
/// `k-1`-simplices, so the count vector never contains interior zeros and
/// trailing zeros would contradict maximality of the dimension.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    pub fn empty() -> FVector {
        FVector { counts: Vec::new() }
    }

    /// Build from raw counts; only used by counters that guarantee the
    /// positivity invariant.
    pub(crate) fn from_counts(counts: Vec<BigInt>) -> FVector {
        debug_assert!(counts.iter().all(|c| c.is_positive()));
        FVector { counts }
    }

    pub fn from_u64(counts: &[u64]) -> FVector {
        FVector::from_counts(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Number of `k`-dimensional cliques (cliques on `k+1` vertices).
    pub fn count(&self, k: usize) -> BigInt {
        self.counts.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Dimension of the complex, `None` when there are no vertices.
    pub fn dim(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (k, c) in self.counts.iter().enumerate() {
            if k % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// The generating polynomial `1 + f_0 t + f_1 t^2 + ...`.
    pub fn to_poly(&self) -> UniPoly {
        let mut coeffs = Vec::with_capacity(self.counts.len() + 1);
        coeffs.push(BigInt::one());
        coeffs.extend(self.counts.iter().cloned());
        UniPoly::from_coeffs(coeffs)
    }

    /// Inverse of [`FVector::to_poly`].  Rejects polynomials that are not
    /// counting polynomials of a complex: the constant term must be one and
    /// every further coefficient positive.
    pub fn from_poly(p: &UniPoly) -> Result<FVector> {
        if p.coeff(0) != BigInt::one() {
            return Err(Error::NotAnFFunction(format!(
                "constant term is {}, expected 1",
                p.coeff(0)
            )));
        }
        let counts: Vec<BigInt> = p.coeffs()[1..].to_vec();
        for (k, c) in counts.iter().enumerate() {
            if !c.is_positive() {
                return Err(Error::NotAnFFunction(format!(
                    "coefficient of t^{} is {}, expected a positive count",
                    k + 1,
                    c
                )));
            }
        }
        Ok(FVector { counts })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for FVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.counts.iter().map(BigInt::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<FVector, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let counts = strings
            .iter()
            .map(|c| BigInt::from_str(c).map_err(|e| D::Error::custom(format!("bad count {c:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        FVector::from_poly(&{
            let mut coeffs = vec![BigInt::one()];
            coeffs.extend(counts);
            UniPoly::from_coeffs(coeffs)
        })
        .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_and_mul_examples() {
        let a = UniPoly::from_i64(&[1, 1]);
        assert_eq!(&a * &a, UniPoly::from_i64(&[1, 2, 1]));

        // (1+t) * (1+4t+4t^2): cone over the four-cycle, i.e. the wheel.
        let c4 = UniPoly::from_i64(&[1, 4, 4]);
        assert_eq!(&a * &c4, UniPoly::from_i64(&[1, 5, 8, 4]));

        assert_eq!(&a + &UniPoly::zero(), a);
        assert_eq!(&UniPoly::zero() * &a, UniPoly::zero());
        assert_eq!(&a - &a, UniPoly::zero());
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = UniPoly::from_i64(&[3, 1, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(UniPoly::from_i64(&[0]).degree(), None);
    }

    #[test]
    fn pow_is_binomial_expansion() {
        assert_eq!(
            UniPoly::from_i64(&[1, 1]).pow(4),
            UniPoly::from_i64(&[1, 4, 6, 4, 1])
        );
        assert_eq!(UniPoly::from_i64(&[1, 1]).pow(0), UniPoly::one());
    }

    #[test]
    fn eval_examples() {
        // 1 + 4t + 4t^2 at t = -1: the four-cycle has Euler characteristic
        // 1 - f(-1) = 0.
        let c4 = UniPoly::from_i64(&[1, 4, 4]);
        assert_eq!(c4.eval_int(&BigInt::from(-1)), BigInt::one());
        assert_eq!(c4.eval(&rat(-1, 1)), rat(1, 1));
        assert_eq!(c4.eval(&rat(1, 2)), rat(4, 1));
        assert_eq!(UniPoly::zero().eval(&rat(7, 3)), rat(0, 1));
    }

    #[test]
    fn antiderivative_examples() {
        // 1 + 2t -> t + t^2
        let p = UniPoly::from_i64(&[1, 2]);
        assert_eq!(
            p.antiderivative(),
            RatPoly::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(1, 1)])
        );
        // 1 + 4t + 4t^2 -> t + 2t^2 + 4/3 t^3
        let q = UniPoly::from_i64(&[1, 4, 4]);
        assert_eq!(
            q.antiderivative(),
            RatPoly::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(2, 1), rat(4, 3)])
        );
        assert_eq!(UniPoly::zero().antiderivative(), RatPoly::zero());
    }

    #[test]
    fn antiderivative_vanishes_at_zero_and_derivative_inverts() {
        for coeffs in [&[5i64][..], &[1, 2, 3], &[0, -7, 0, 4]] {
            let p = UniPoly::from_i64(coeffs);
            let cap = p.antiderivative();
            assert!(cap.eval(&rat(0, 1)).is_zero());
            assert_eq!(cap.derivative(), RatPoly::from(&p));
        }
    }

    #[test]
    fn rat_poly_div_by_t() {
        let p = UniPoly::from_i64(&[1, 2]).antiderivative();
        let k = p.div_by_t().unwrap();
        assert_eq!(k, RatPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]));
        assert!(RatPoly::from_coeffs(vec![rat(1, 1)]).div_by_t().is_err());
        assert_eq!(RatPoly::zero().div_by_t().unwrap(), RatPoly::zero());
    }

    #[test]
    fn rat_poly_to_int_poly() {
        let ok = RatPoly::from_coeffs(vec![rat(2, 1), rat(6, 2)]);
        assert_eq!(ok.to_int_poly().unwrap(), UniPoly::from_i64(&[2, 3]));
        let bad = RatPoly::from_coeffs(vec![rat(1, 2)]);
        assert!(matches!(bad.to_int_poly(), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn bipoly_construction_and_eval() {
        // 2 + 2t + 2s + ts: the edge-against-itself intersection count.
        let p = BiPoly::from_terms([
            ((0, 0), BigInt::from(2)),
            ((1, 0), BigInt::from(2)),
            ((0, 1), BigInt::from(2)),
            ((1, 1), BigInt::from(1)),
        ]);
        assert_eq!(
            p.eval(&BigInt::from(-1), &BigInt::from(-1)),
            BigInt::from(-1)
        );
        assert_eq!(p.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(7));
        assert_eq!(p.coeff(1, 1), BigInt::one());
        assert_eq!(p.coeff(5, 5), BigInt::zero());
        assert_eq!(p.max_degrees(), Some((1, 1)));
        assert_eq!(BiPoly::zero().eval(&BigInt::from(3), &BigInt::from(4)), BigInt::zero());
    }

    #[test]
    fn bipoly_zero_terms_are_dropped() {
        let mut p = BiPoly::zero();
        p.add_term(2, 3, BigInt::from(5));
        p.add_term(2, 3, BigInt::from(-5));
        assert!(p.is_zero());
        p.add_term(0, 0, BigInt::zero());
        assert!(p.is_zero());
    }

    #[test]
    fn bipoly_transpose() {
        let p = BiPoly::from_terms([((2, 0), BigInt::one()), ((0, 1), BigInt::from(3))]);
        let q = p.transpose();
        assert_eq!(q.coeff(0, 2), BigInt::one());
        assert_eq!(q.coeff(1, 0), BigInt::from(3));
        assert_eq!(q.transpose(), p);
    }

    #[test]
    fn fvector_poly_round_trip() {
        let fv = FVector::from_u64(&[16, 48, 32]);
        let p = fv.to_poly();
        assert_eq!(p, UniPoly::from_i64(&[1, 16, 48, 32]));
        assert_eq!(FVector::from_poly(&p).unwrap(), fv);

        assert_eq!(FVector::empty().to_poly(), UniPoly::one());
        assert_eq!(FVector::from_poly(&UniPoly::one()).unwrap(), FVector::empty());
        assert_eq!(fv.dim(), Some(2));
        assert_eq!(fv.euler(), BigInt::zero());
    }

    #[test]
    fn fvector_rejects_non_counting_polynomials() {
        // Wrong constant term.
        assert!(FVector::from_poly(&UniPoly::from_i64(&[2, 1])).is_err());
        // Negative count.
        assert!(FVector::from_poly(&UniPoly::from_i64(&[1, -1])).is_err());
        // Interior zero: no complex has 2-simplices without 1-simplices.
        assert!(FVector::from_poly(&UniPoly::from_i64(&[1, 3, 0, 1])).is_err());
    }

    #[test]
    fn display_formats() {
        assert_eq!(UniPoly::from_i64(&[1, 16, 48, 32]).to_string(), "1 + 16 t + 48 t^2 + 32 t^3");
        assert_eq!(UniPoly::from_i64(&[0, 1]).to_string(), "t");
        assert_eq!(UniPoly::from_i64(&[1, -2, 1]).to_string(), "1 - 2 t + t^2");
        assert_eq!(UniPoly::from_i64(&[-1, 0, 3]).to_string(), "-1 + 3 t^2");
        assert_eq!(UniPoly::zero().to_string(), "0");

        let k = UniPoly::from_i64(&[1, 1]).antiderivative();
        assert_eq!(k.to_string(), "t + 1/2 t^2");

        let w = BiPoly::from_terms([
            ((0, 0), BigInt::from(2)),
            ((1, 0), BigInt::from(2)),
            ((0, 1), BigInt::from(2)),
            ((1, 1), BigInt::from(1)),
        ]);
        assert_eq!(w.to_string(), "2 + 2 s + 2 t + t s");
        assert_eq!(BiPoly::zero().to_string(), "0");

        assert_eq!(FVector::from_u64(&[16, 48, 32]).to_string(), "(16, 48, 32)");
        assert_eq!(FVector::empty().to_string(), "()");
    }

    #[test]
    fn json_round_trips() {
        let p = UniPoly::from_i64(&[1, 5, 8, 4]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"["1","5","8","4"]"#);
        assert_eq!(serde_json::from_str::<UniPoly>(&js).unwrap(), p);

        let r = UniPoly::from_i64(&[1, 1]).antiderivative();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"["0","1","1/2"]"#);
        assert_eq!(serde_json::from_str::<RatPoly>(&js).unwrap(), r);

        let b = BiPoly::from_terms([((0, 0), BigInt::from(2)), ((1, 1), BigInt::from(-1))]);
        let js = serde_json::to_string(&b).unwrap();
        assert_eq!(js, r#"[[0,0,"2"],[1,1,"-1"]]"#);
        assert_eq!(serde_json::from_str::<BiPoly>(&js).unwrap(), b);

        let fv = FVector::from_u64(&[16, 48, 32]);
        let js = serde_json::to_string(&fv).unwrap();
        assert_eq!(js, r#"["16","48","32"]"#);
        assert_eq!(serde_json::from_str::<FVector>(&js).unwrap(), fv);
    }
}
