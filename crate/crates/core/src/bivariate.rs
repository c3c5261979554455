//! Two-variable crank generating functions, truncated in `q`.
//!
//! Each `q^n` coefficient is a Laurent polynomial in `z`. All four families
//! (crank, first and second residual crank, k-crank) are built from the same
//! kernel
//!
//! ```text
//!     1 / ((zq;q)_inf (q/z;q)_inf)
//! ```
//!
//! expanded factor by factor, followed by a `z`-free multiplier.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{euler_function, poch_inf, FactorSign, TruncSeries};

static ZERO: BigInt = BigInt::ZERO;

/// Laurent polynomial with exponents stored densely over `-bound..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    bound: usize,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero(bound: usize) -> Self {
        LaurentPoly {
            bound,
            coeffs: vec![BigInt::zero(); 2 * bound + 1],
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn index(&self, m: i64) -> Option<usize> {
        let i = m + self.bound as i64;
        (0..self.coeffs.len() as i64)
            .contains(&i)
            .then_some(i as usize)
    }

    /// Coefficient of `z^m`; zero outside the stored range.
    pub fn get(&self, m: i64) -> &BigInt {
        self.index(m).map_or(&ZERO, |i| &self.coeffs[i])
    }

    /// Panics if `|m|` exceeds the bound.
    pub fn set(&mut self, m: i64, v: impl Into<BigInt>) {
        let i = self
            .index(m)
            .unwrap_or_else(|| panic!("z^{m} outside bound {}", self.bound));
        self.coeffs[i] = v.into();
    }

    /// `(m, coefficient)` for every nonzero term, ascending in `m`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        let b = self.bound as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i as i64 - b, c))
    }

    /// Value at `z = 1`.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `c(m) == c(-m)` for every `m`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        (0..self.bound).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Largest `|m|` with a nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        let n = self.coeffs.len();
        (0..=self.bound).rev().find(|&d| {
            !self.coeffs[self.bound - d].is_zero()
                || !self.coeffs[n - 1 - (self.bound - d)].is_zero()
        })
    }
}

/// `sum_n rows[n](z) q^n`, truncated at `order`. Every row has bound `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<LaurentPoly>,
}

impl BivariateSeries {
    /// The constant `1`.
    pub fn one(order: usize) -> Self {
        let mut rows = vec![LaurentPoly::zero(order); order + 1];
        rows[0].set(0, 1);
        BivariateSeries { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&LaurentPoly> {
        self.rows.get(n)
    }

    pub fn rows(&self) -> &[LaurentPoly] {
        &self.rows
    }

    /// Coefficient of `z^m q^n`; zero outside the stored range.
    pub fn coeff(&self, n: usize, m: i64) -> &BigInt {
        self.rows.get(n).map_or(&ZERO, |r| r.get(m))
    }

    /// Divides in place by `(1 - z^dir q^k)` with `dir = ±1`.
    ///
    /// Relies on the support of row `n` lying inside `|m| <= n`, which holds
    /// for every product of factors `1/(1 - z^{±1} q^k)` with `k >= 1`.
    fn div_z_factor_assign(&mut self, k: usize, dir: i64) {
        let order = self.order();
        let b = order as i64;
        for n in k..=order {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - k].coeffs;
            let dst = &mut hi[0].coeffs;
            let reach = (n - k) as i64;
            for m in -reach..=reach {
                let from = &src[(b + m) as usize];
                if !from.is_zero() {
                    dst[(b + m + dir) as usize] += from;
                }
            }
        }
    }

    /// Multiplies every row by the `z`-free series `s` (convolution in `q`).
    pub fn mul_series(&self, s: &TruncSeries) -> Result<Self> {
        let order = self.order();
        if s.order() != order {
            return Err(crate::series::SeriesError::OrderMismatch {
                left: order,
                right: s.order(),
            }
            .into());
        }
        let b = order as i64;
        let reach: Vec<i64> = self
            .rows
            .iter()
            .map(|r| r.degree().unwrap_or(0) as i64)
            .collect();
        let mut out = vec![LaurentPoly::zero(order); order + 1];
        for (j, c) in s.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let plus_one = c.is_one();
            let minus_one = (-c).is_one();
            for n in j..=order {
                let src = &self.rows[n - j];
                let r = reach[n - j];
                let dst = &mut out[n].coeffs;
                for m in -r..=r {
                    let i = (b + m) as usize;
                    let v = &src.coeffs[i];
                    if v.is_zero() {
                        continue;
                    }
                    if plus_one {
                        dst[i] += v;
                    } else if minus_one {
                        dst[i] -= v;
                    } else {
                        dst[i] += c * v;
                    }
                }
            }
        }
        Ok(BivariateSeries { rows: out })
    }

    /// Substitutes `q -> q^factor`; the result is truncated at `order`.
    pub fn dilate(&self, factor: usize, order: usize) -> Self {
        assert!(factor >= 1, "dilation factor must be positive");
        let mut rows = vec![LaurentPoly::zero(order); order + 1];
        for (n, row) in self.rows.iter().enumerate() {
            let target = n * factor;
            if target > order {
                break;
            }
            for (m, c) in row.terms() {
                rows[target].set(m, c.clone());
            }
        }
        BivariateSeries { rows }
    }

    /// The `q`-series `n -> [z^m] rows[n]`.
    pub fn column(&self, m: i64) -> TruncSeries {
        let coeffs = self.rows.iter().map(|r| r.get(m).clone()).collect();
        TruncSeries::from_coeffs(coeffs).expect("at least one row")
    }

    /// Specialization `z = 1`.
    pub fn row_sums(&self) -> TruncSeries {
        let coeffs = self.rows.iter().map(LaurentPoly::sum).collect();
        TruncSeries::from_coeffs(coeffs).expect("at least one row")
    }

    /// Rows `n` whose coefficients are not symmetric under `m -> -m`.
    pub fn asymmetric_rows(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&n| !self.rows[n].is_symmetric())
            .collect()
    }

    /// Rows `n` carrying a nonzero coefficient at some `|m| > n`.
    pub fn support_violations(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(n, r)| r.degree().is_some_and(|d| d > *n))
            .map(|(n, _)| n)
            .collect()
    }
}

/// `1 / ((zq;q)_inf (q/z;q)_inf)` truncated at `order`, factors applied for
/// increasing `k`.
fn crank_kernel(order: usize) -> BivariateSeries {
    let mut g = BivariateSeries::one(order);
    for k in 1..=order {
        g.div_z_factor_assign(k, 1);
        g.div_z_factor_assign(k, -1);
    }
    g
}

/// `sum M(m,n) z^m q^n = (q;q)_inf / ((zq;q)_inf (q/z;q)_inf)`.
pub fn bgf_crank(order: usize) -> BivariateSeries {
    let euler = poch_inf(1, 1, FactorSign::Minus, false, order).expect("valid product");
    crank_kernel(order)
        .mul_series(&euler)
        .expect("orders agree")
}

/// First residual crank: the crank GF times `(-q;q)_inf`.
pub fn bgf_overline_crank(order: usize) -> BivariateSeries {
    let distinct = poch_inf(1, 1, FactorSign::Plus, false, order).expect("valid product");
    bgf_crank(order)
        .mul_series(&distinct)
        .expect("orders agree")
}

/// Second residual crank: the crank GF at `q^2`, times `(-q;q)_inf / (q;q^2)_inf`.
pub fn bgf_m2_crank(order: usize) -> BivariateSeries {
    let halved = bgf_crank(order / 2).dilate(2, order);
    let mut mult = poch_inf(1, 1, FactorSign::Plus, false, order).expect("valid product");
    let odd = poch_inf(1, 2, FactorSign::Minus, true, order).expect("valid product");
    mult = &mult * &odd;
    halved.mul_series(&mult).expect("orders agree")
}

/// k-crank of k-colored partitions: the crank GF times `(q;q)_inf^(1-k)`.
pub fn bgf_kcrank(k: usize, order: usize) -> Result<BivariateSeries> {
    if k < 2 {
        return Err(Error::InvalidColors(k));
    }
    let mult = euler_function(order).pow(1 - k as i64)?;
    bgf_crank(order).mul_series(&mult)
}

/// Shorthand used by tests and the verifier: `[z^m]` of a GF as a `q`-series.
pub fn column(g: &BivariateSeries, m: i64) -> TruncSeries {
    g.column(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::partition_numbers;

    fn row(g: &BivariateSeries, n: usize) -> Vec<(i64, i64)> {
        g.row(n)
            .unwrap()
            .terms()
            .map(|(m, c)| (m, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn laurent_basics() {
        let mut p = LaurentPoly::zero(2);
        p.set(-2, 3);
        p.set(1, -1);
        assert_eq!(*p.get(-2), BigInt::from(3));
        assert!(p.get(7).is_zero());
        assert_eq!(p.sum(), BigInt::from(2));
        assert_eq!(p.degree(), Some(2));
        assert!(!p.is_symmetric());
        assert_eq!(LaurentPoly::zero(3).degree(), None);
    }

    #[test]
    fn crank_rows() {
        let g = bgf_crank(6);
        assert_eq!(row(&g, 0), vec![(0, 1)]);
        assert_eq!(row(&g, 1), vec![(-1, 1), (0, -1), (1, 1)]);
        // (3) -> 3, (2,1) -> 0, (1,1,1) -> -3
        assert_eq!(row(&g, 3), vec![(-3, 1), (0, 1), (3, 1)]);
        assert_eq!(*g.column(0).coeff(1), BigInt::from(-1));
    }

    #[test]
    fn overline_rows() {
        let g = bgf_overline_crank(8);
        assert_eq!(row(&g, 1), vec![(-1, 1), (1, 1)]);
        assert_eq!(*g.coeff(4, 0), BigInt::from(2));
        assert_eq!(*g.coeff(4, 1), BigInt::from(2));
        assert_eq!(g.row(4).unwrap().sum(), BigInt::from(14));
    }

    #[test]
    fn m2_rows() {
        let g = bgf_m2_crank(8);
        assert_eq!(row(&g, 0), vec![(0, 1)]);
        assert_eq!(row(&g, 1), vec![(0, 2)]);
        assert_eq!(row(&g, 2), vec![(-1, 1), (0, 2), (1, 1)]);
    }

    #[test]
    fn kcrank_rows() {
        let g = bgf_kcrank(2, 10).unwrap();
        assert_eq!(row(&g, 1), vec![(-1, 1), (1, 1)]);
        let sums: Vec<i64> = g
            .row_sums()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        let p = partition_numbers(10);
        let pairs = &p * &p;
        assert_eq!(g.row_sums(), pairs);
        assert_eq!(&sums[..4], &[1, 2, 5, 10]);
        for k in 2..=5 {
            assert_eq!(row(&bgf_kcrank(k, 5).unwrap(), 0), vec![(0, 1)]);
        }
        assert!(matches!(bgf_kcrank(1, 5), Err(Error::InvalidColors(1))));
    }

    #[test]
    fn overline_head_of_difference() {
        let g = bgf_overline_crank(43);
        let d = &g.column(0) - &g.column(1);
        let head: Vec<i64> = d.coeffs()[..6]
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(head, vec![1, -1, -1, 1, 0, 1]);
        assert!(d.negative_indices().iter().all(|&i| i == 1 || i == 2));
    }

    #[test]
    fn symmetry_support_and_row_sums() {
        let n = 40;
        let over = &poch_inf(1, 1, FactorSign::Plus, false, n).unwrap() * &partition_numbers(n);
        let cases = [
            (bgf_crank(n), partition_numbers(n)),
            (bgf_overline_crank(n), over.clone()),
            (bgf_m2_crank(n), over),
            (
                bgf_kcrank(3, n).unwrap(),
                euler_function(n).pow(-3).unwrap(),
            ),
        ];
        for (g, sums) in &cases {
            assert!(g.asymmetric_rows().is_empty());
            assert!(g.support_violations().is_empty());
            assert_eq!(&g.row_sums(), sums);
            for m in 0..=n as i64 {
                assert_eq!(g.column(m), g.column(-m));
            }
        }
    }

    #[test]
    fn column_past_bound_is_zero() {
        let g = bgf_crank(5);
        assert!(g.column(9).is_zero());
        assert!(g.coeff(99, 0).is_zero());
    }
}
