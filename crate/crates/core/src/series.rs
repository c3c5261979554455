//! Exact truncated power series in one variable `q` with big-integer
//! coefficients, and constructors for q-Pochhammer products with monomial
//! arguments.
//!
//! A [`TruncSeries`] of order `N` stores the coefficients of `q^0..=q^N`;
//! every operation is exact modulo `q^(N+1)`. Binary operations require both
//! operands to share the same order. Mismatches are reported as
//! [`SeriesError::OrderMismatch`] by the `checked_*` methods and panic in the
//! operator impls.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

static ZERO: BigInt = BigInt::ZERO;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("exponent must be at least 1, got {0}")]
    NonPositiveExponent(usize),
    #[error("product start and step must be at least 1 (start {start}, step {step})")]
    DivergentProduct { start: usize, step: usize },
    #[error("series is not invertible: constant term is {0}")]
    NotInvertible(BigInt),
    #[error("cannot extend a series of order {have} to order {want}")]
    CannotExtend { have: usize, want: usize },
    #[error("coefficient list is empty")]
    Empty,
}

/// Sign inside a product factor: `Minus` builds `(1 - q^e)`, `Plus` builds `(1 + q^e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorSign {
    Minus,
    Plus,
}

/// Truncated power series `c_0 + c_1 q + ... + c_N q^N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    /// The constant series `constant` at the given order.
    pub fn new(order: usize, constant: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = constant.into();
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, 1)
    }

    /// Takes ownership of a coefficient vector; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncSeries { coeffs })
    }

    /// Dense polynomial `c[0] + c[1] q + ...`, padded or truncated to `order`.
    pub fn from_i64s(order: usize, c: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (slot, &v) in s.coeffs.iter_mut().zip(c) {
            *slot = BigInt::from(v);
        }
        s
    }

    /// Sparse polynomial given as `(exponent, coefficient)` pairs. Terms above
    /// `order` are dropped; repeated exponents accumulate.
    pub fn from_terms(order: usize, terms: &[(usize, i64)]) -> Self {
        let mut s = Self::zero(order);
        for &(e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    /// `c * q^shift` at the given order.
    pub fn monomial(order: usize, c: impl Into<BigInt>, shift: usize) -> Self {
        let mut s = Self::zero(order);
        if shift <= order {
            s.coeffs[shift] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^i`; zero past the truncation order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        self.coeffs.get(i).unwrap_or(&ZERO)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, v: impl Into<BigInt>) {
        self.coeffs[i] = v.into();
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exponents whose coefficient is negative, ascending.
    pub fn negative_indices(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(i, _)| i)
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncSeries { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        // Iterate over the sparser operand in the outer loop.
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let targets = &mut out[i..];
            if a.is_one() {
                for (t, b) in targets.iter_mut().zip(&dense.coeffs) {
                    *t += b;
                }
            } else if (-a).is_one() {
                for (t, b) in targets.iter_mut().zip(&dense.coeffs) {
                    *t -= b;
                }
            } else {
                for (t, b) in targets.iter_mut().zip(&dense.coeffs) {
                    if !b.is_zero() {
                        *t += a * b;
                    }
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `c * q^shift * self`, truncated.
    pub fn mul_monomial(&self, c: impl Into<BigInt>, shift: usize) -> Self {
        let c = c.into();
        let mut out = Self::zero(self.order());
        if c.is_zero() {
            return out;
        }
        for (t, a) in out.coeffs.iter_mut().skip(shift).zip(&self.coeffs) {
            *t = &c * a;
        }
        out
    }

    /// Multiplies in place by `(1 - q^e)`.
    pub fn mul_one_minus_assign(&mut self, e: usize) {
        self.mul_binomial_assign(e, FactorSign::Minus);
    }

    /// Multiplies in place by `(1 + q^e)`.
    pub fn mul_one_plus_assign(&mut self, e: usize) {
        self.mul_binomial_assign(e, FactorSign::Plus);
    }

    fn mul_binomial_assign(&mut self, e: usize, sign: FactorSign) {
        let n = self.order();
        if e > n {
            return;
        }
        if e == 0 {
            match sign {
                FactorSign::Minus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
                FactorSign::Plus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
            }
            return;
        }
        // Descending so that every read sees the unmodified input.
        for i in (e..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                FactorSign::Minus => hi[0] -= &lo[i - e],
                FactorSign::Plus => hi[0] += &lo[i - e],
            }
        }
    }

    /// Divides in place by `(1 - q^e)` via `r[i] = a[i] + r[i - e]`.
    pub fn div_one_minus_assign(&mut self, e: usize) -> Result<(), SeriesError> {
        self.div_binomial_assign(e, FactorSign::Minus)
    }

    /// Divides in place by `(1 + q^e)` via `r[i] = a[i] - r[i - e]`.
    pub fn div_one_plus_assign(&mut self, e: usize) -> Result<(), SeriesError> {
        self.div_binomial_assign(e, FactorSign::Plus)
    }

    fn div_binomial_assign(&mut self, e: usize, sign: FactorSign) -> Result<(), SeriesError> {
        if e == 0 {
            return Err(SeriesError::NonPositiveExponent(e));
        }
        let n = self.order();
        for i in e..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                FactorSign::Minus => hi[0] += &lo[i - e],
                FactorSign::Plus => hi[0] -= &lo[i - e],
            }
        }
        Ok(())
    }

    /// `self / (1 - q^e)`.
    pub fn div_one_minus(&self, e: usize) -> Result<Self, SeriesError> {
        let mut out = self.clone();
        out.div_one_minus_assign(e)?;
        Ok(out)
    }

    /// `self * (1 - q^e)`.
    pub fn mul_one_minus(&self, e: usize) -> Self {
        let mut out = self.clone();
        out.mul_one_minus_assign(e);
        out
    }

    /// Multiplicative inverse; requires constant term `±1` so the result stays integral.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        let sign = if c0.is_one() {
            BigInt::one()
        } else if (-c0).is_one() {
            -BigInt::one()
        } else {
            return Err(SeriesError::NotInvertible(c0.clone()));
        };
        let n = self.order();
        let support: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = sign.clone();
        for i in 1..=n {
            let mut acc = BigInt::zero();
            for &(j, c) in &support {
                if j > i {
                    break;
                }
                acc += c * &out[i - j];
            }
            out[i] = -(&sign * acc);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Integer power; negative exponents go through [`TruncSeries::inverse`].
    pub fn pow(&self, exp: i64) -> Result<Self, SeriesError> {
        let base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut power = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&power)?;
            }
            e >>= 1;
            if e > 0 {
                power = power.checked_mul(&power)?;
            }
        }
        Ok(result)
    }

    /// Substitutes `q -> q^factor`, keeping the order.
    pub fn dilate(&self, factor: usize) -> Result<Self, SeriesError> {
        if factor == 0 {
            return Err(SeriesError::NonPositiveExponent(factor));
        }
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = i * factor;
            if j > self.order() {
                break;
            }
            out.coeffs[j] = c.clone();
        }
        Ok(out)
    }

    /// Drops every coefficient above `order`.
    pub fn truncated(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::CannotExtend {
                have: self.order(),
                want: order,
            });
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }
}

/// `prod_{k >= 0} (1 ∓ q^(start + k*step))`, or its reciprocal when `invert`
/// is set, truncated at `order`. Factors are applied in increasing exponent
/// order and the loop stops at the first exponent above `order`.
pub fn poch_inf(
    start: usize,
    step: usize,
    sign: FactorSign,
    invert: bool,
    order: usize,
) -> Result<TruncSeries, SeriesError> {
    if start < 1 || step < 1 {
        return Err(SeriesError::DivergentProduct { start, step });
    }
    let mut out = TruncSeries::one(order);
    let mut e = start;
    while e <= order {
        apply_factor(&mut out, e, sign, invert);
        e += step;
    }
    Ok(out)
}

/// Finite product `prod_{k=0}^{terms-1} (1 ∓ q^(start + k*step))`, optionally
/// inverted; the empty product is `1`.
pub fn poch_fin(
    start: usize,
    step: usize,
    sign: FactorSign,
    terms: usize,
    invert: bool,
    order: usize,
) -> TruncSeries {
    let mut out = TruncSeries::one(order);
    for k in 0..terms {
        let e = start + k * step;
        if e > order {
            break;
        }
        apply_factor(&mut out, e, sign, invert);
    }
    out
}

fn apply_factor(s: &mut TruncSeries, e: usize, sign: FactorSign, invert: bool) {
    debug_assert!(e >= 1);
    match (sign, invert) {
        (_, false) => s.mul_binomial_assign(e, sign),
        (_, true) => s
            .div_binomial_assign(e, sign)
            .expect("factor exponent is positive"),
    }
}

/// `(q;q)_inf` from Euler's pentagonal number theorem.
pub fn euler_function(order: usize) -> TruncSeries {
    let mut out = TruncSeries::zero(order);
    out.coeffs[0] = BigInt::one();
    for k in 1usize.. {
        let sign: i64 = if k % 2 == 1 { -1 } else { 1 };
        let g1 = k * (3 * k - 1) / 2;
        let g2 = k * (3 * k + 1) / 2;
        if g1 > order {
            break;
        }
        out.coeffs[g1] += sign;
        if g2 <= order {
            out.coeffs[g2] += sign;
        }
    }
    out
}

/// `1/(q;q)_inf`, i.e. `p(0..=order)`, from the pentagonal recurrence.
pub fn partition_numbers(order: usize) -> TruncSeries {
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    TruncSeries { coeffs: p }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(order={}, {})", self.order(), self)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_add(rhs).expect("series add")
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_sub(rhs).expect("series sub")
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_mul(rhs).expect("series mul")
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(mut self) -> TruncSeries {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(order: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_i64s(order, c)
    }

    fn ints(t: &TruncSeries) -> Vec<i64> {
        t.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn constants() {
        assert_eq!(ints(&TruncSeries::new(5, 1)), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&TruncSeries::new(0, 7)), vec![7]);
        assert_eq!(ints(&TruncSeries::new(3, 0)), vec![0, 0, 0, 0]);
        assert!(TruncSeries::from_coeffs(vec![]).is_err());
    }

    #[test]
    fn add_sub_neg() {
        assert_eq!(ints(&(&s(1, &[1, 2]) + &s(1, &[0, 3]))), vec![1, 5]);
        let a = s(4, &[3, -1, 4, 1, -5]);
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(
            ints(&(&s(2, &[1, -2, 0]) - &s(2, &[1, 0, 1]))),
            vec![0, -2, -1]
        );
        assert_eq!(
            s(1, &[1]).checked_add(&s(2, &[1])),
            Err(SeriesError::OrderMismatch { left: 1, right: 2 })
        );
        assert!(s(1, &[1]).checked_sub(&s(2, &[1])).is_err());
        assert!(s(1, &[1]).checked_mul(&s(2, &[1])).is_err());
    }

    #[test]
    fn mul_examples() {
        let geo = s(5, &[1, 1, 1, 1, 1, 1]);
        assert_eq!(ints(&(&s(5, &[1, -1]) * &geo)), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&(&s(3, &[0, 1]) * &s(3, &[0, 1]))), vec![0, 0, 1, 0]);
        assert_eq!(
            ints(&(&s(3, &[2, 3]) * &s(3, &[5, 0, 7]))),
            vec![10, 15, 14, 21]
        );
    }

    #[test]
    fn euler_times_reciprocal_is_one() {
        let e = poch_inf(1, 1, FactorSign::Minus, false, 50).unwrap();
        let r = poch_inf(1, 1, FactorSign::Minus, true, 50).unwrap();
        assert_eq!(&e * &r, TruncSeries::one(50));
    }

    #[test]
    fn monomial_scaling() {
        let a = s(2, &[1, 1, 1]);
        assert_eq!(ints(&a.mul_monomial(2, 1)), vec![0, 2, 2]);
        assert_eq!(a.mul_monomial(1, 0), a);
        assert!(a.mul_monomial(0, 3).is_zero());
        assert!(a.mul_monomial(5, 9).is_zero());
    }

    #[test]
    fn div_one_minus_examples() {
        assert_eq!(
            ints(&s(3, &[1]).div_one_minus(1).unwrap()),
            vec![1, 1, 1, 1]
        );
        assert_eq!(
            ints(&s(5, &[0, 1]).div_one_minus(2).unwrap()),
            vec![0, 1, 0, 1, 0, 1]
        );
        assert_eq!(
            s(3, &[1]).div_one_minus(0),
            Err(SeriesError::NonPositiveExponent(0))
        );
        let a = s(6, &[2, -3, 0, 7, 1, 0, -4]);
        for e in 1..=6 {
            assert_eq!(a.div_one_minus(e).unwrap().mul_one_minus(e), a);
        }
    }

    #[test]
    fn pochhammer_examples() {
        // distinct partitions d(0..=8), enumerated by hand
        let d = poch_inf(1, 1, FactorSign::Plus, false, 8).unwrap();
        assert_eq!(ints(&d), vec![1, 1, 1, 2, 2, 3, 4, 5, 6]);
        let e = poch_inf(1, 1, FactorSign::Minus, false, 7).unwrap();
        assert_eq!(ints(&e), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        let p = poch_inf(1, 1, FactorSign::Minus, true, 10).unwrap();
        assert_eq!(ints(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(
            poch_inf(0, 1, FactorSign::Minus, false, 4),
            Err(SeriesError::DivergentProduct { start: 0, step: 1 })
        );
        assert!(poch_inf(1, 0, FactorSign::Minus, false, 4).is_err());
    }

    #[test]
    fn finite_pochhammer() {
        assert_eq!(
            poch_fin(1, 1, FactorSign::Plus, 0, false, 6),
            TruncSeries::one(6)
        );
        assert_eq!(
            ints(&poch_fin(1, 1, FactorSign::Plus, 2, false, 3)),
            vec![1, 1, 1, 1]
        );
        let t = poch_fin(7, 2, FactorSign::Minus, 2, false, 20);
        assert_eq!(
            t,
            TruncSeries::from_terms(20, &[(0, 1), (7, -1), (9, -1), (16, 1)])
        );
    }

    #[test]
    fn overpartitions_of_four() {
        let over = &poch_inf(1, 1, FactorSign::Plus, false, 4).unwrap()
            * &poch_inf(1, 1, FactorSign::Minus, true, 4).unwrap();
        assert_eq!(*over.coeff(4), BigInt::from(14));
    }

    #[test]
    fn euler_identity() {
        let n = 200;
        let distinct = poch_inf(1, 1, FactorSign::Plus, false, n).unwrap();
        let odd = poch_inf(1, 2, FactorSign::Minus, true, n).unwrap();
        assert_eq!(distinct, odd);
    }

    #[test]
    fn pentagonal_fast_paths_agree() {
        let n = 300;
        assert_eq!(
            euler_function(n),
            poch_inf(1, 1, FactorSign::Minus, false, n).unwrap()
        );
        assert_eq!(
            partition_numbers(n),
            poch_inf(1, 1, FactorSign::Minus, true, n).unwrap()
        );
    }

    #[test]
    fn inverse_and_pow() {
        let e = euler_function(40);
        assert_eq!(e.inverse().unwrap(), partition_numbers(40));
        assert_eq!(
            e.pow(-2).unwrap(),
            &partition_numbers(40) * &partition_numbers(40)
        );
        assert_eq!(e.pow(0).unwrap(), TruncSeries::one(40));
        assert_eq!(e.pow(3).unwrap(), &(&e * &e) * &e);
        assert!(matches!(
            s(3, &[2, 1]).inverse(),
            Err(SeriesError::NotInvertible(_))
        ));
    }

    #[test]
    fn dilate_and_truncate() {
        let a = s(6, &[1, 2, 3, 4]);
        assert_eq!(ints(&a.dilate(2).unwrap()), vec![1, 0, 2, 0, 3, 0, 4]);
        assert_eq!(ints(&a.truncated(2).unwrap()), vec![1, 2, 3]);
        assert!(a.truncated(7).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(
            s(4, &[1, -2, 0, 1, 3]).to_string(),
            "1 - 2q + q^3 + 3q^4 + O(q^5)"
        );
        assert_eq!(TruncSeries::zero(2).to_string(), "0 + O(q^3)");
    }

    fn small_series(order: usize) -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec(-20i64..=20, order + 1)
            .prop_map(move |v| TruncSeries::from_i64s(order, &v))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            (a, b, c) in (0usize..12).prop_flat_map(|n| (small_series(n), small_series(n), small_series(n)))
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn div_one_minus_round_trips(
            (a, e) in (1usize..16).prop_flat_map(|n| (small_series(n), 1..=n))
        ) {
            prop_assert_eq!(a.div_one_minus(e).unwrap().mul_one_minus(e), a);
        }
    }
}
