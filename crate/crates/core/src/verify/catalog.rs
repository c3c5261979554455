//! Catalog of q-series identities and sign statements, each checked exactly
//! at a truncation order.
//!
//! Closed forms with unbounded sums are instantiated term by term until the
//! lowest exponent of the summand passes the order.

use super::{CheckReport, Comparison, ReportBuilder, TableCache};
use crate::error::{Error, Result};
use crate::series::{poch_fin, poch_inf, FactorSign, TruncSeries};
use crate::tables::Statistic;

type Entry = fn(usize, &TableCache) -> Result<CheckReport>;

/// `(canonical id, aliases, entry)`.
const CATALOG: &[(&str, &[&str], Entry)] = &[
    ("euler", &[], euler),
    (
        "distinct-square-defect",
        &["lemma-3.2"],
        distinct_square_defect,
    ),
    ("quintic-defect", &["lemma-3.3"], quintic_defect),
    ("crank-diff-heads", &[], crank_diff_heads),
    ("crank-diff-residuals", &[], crank_diff_residuals),
    ("crank-diff-tail", &[], crank_diff_tail),
    ("ocrank-diff-nonneg", &[], ocrank_diff_nonneg),
    ("odd-distinct-defect", &[], odd_distinct_defect),
    ("m2crank-head", &[], m2crank_head),
    ("m2crank-from-ocrank", &[], m2crank_from_ocrank),
    ("monotone-factorization", &[], monotone_factorization),
    ("andrews-merca", &[], andrews_merca),
    ("kcrank-reduction", &[], kcrank_reduction),
    ("kcrank-m1-split", &[], kcrank_m1_split),
];

pub fn catalog_ids() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(id, _, _)| *id)
}

pub(super) fn resolve(id: &str) -> Option<&'static str> {
    CATALOG
        .iter()
        .find(|(c, aliases, _)| *c == id || aliases.contains(&id))
        .map(|(c, _, _)| *c)
}

/// Runs a catalog entry by id or alias at truncation order `order`.
pub fn check_identity(id: &str, order: usize, cache: &TableCache) -> Result<CheckReport> {
    let (_, _, entry) = CATALOG
        .iter()
        .find(|(c, aliases, _)| *c == id || aliases.contains(&id))
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    entry(order, cache)
}

/// `sum (m-1, n) - (m, n)` heads: `[z^0 - z^1]` through `q^43`.
const CRANK_DIFF_1_HEAD: &[(usize, i64)] = &[
    (0, 1),
    (1, -2),
    (3, 1),
    (4, 1),
    (7, -1),
    (9, -1),
    (10, 1),
    (11, -1),
    (12, 2),
    (13, -1),
    (14, 2),
    (15, -1),
    (16, 2),
    (17, -2),
    (18, 3),
    (19, -3),
    (20, 3),
    (21, -2),
    (22, 3),
    (23, -3),
    (24, 6),
    (25, -4),
    (26, 6),
    (27, -2),
    (28, 7),
    (29, -4),
    (30, 11),
    (31, -5),
    (32, 12),
    (33, -3),
    (34, 13),
    (35, -4),
    (36, 20),
    (37, -6),
    (38, 22),
    (39, -1),
    (40, 27),
    (41, -3),
    (42, 37),
    (43, -1),
];
const CRANK_DIFF_1_HEAD_LEN: usize = 43;

/// `[z^1 - z^2]` through `q^26`.
const CRANK_DIFF_2_HEAD: &[(usize, i64)] = &[
    (1, 1),
    (2, -1),
    (4, -1),
    (5, 1),
    (7, 1),
    (9, 1),
    (10, -1),
    (11, 1),
    (12, -1),
    (13, 1),
    (14, -1),
    (15, 2),
    (16, -1),
    (17, 3),
    (18, -1),
    (19, 4),
    (20, -1),
    (21, 5),
    (22, -1),
    (23, 6),
    (24, -1),
    (25, 8),
    (26, -1),
];
const CRANK_DIFF_2_HEAD_LEN: usize = 26;

// Correction polynomials for the m = 1 decomposition.
const F1: &[(usize, i64)] = &[
    (10, 1),
    (14, 1),
    (16, 2),
    (18, 3),
    (20, 2),
    (22, 3),
    (24, 4),
    (26, 2),
    (28, 4),
    (30, 5),
    (32, 3),
    (34, 4),
    (36, 6),
    (38, 1),
    (40, 3),
    (42, 1),
];
const H1: &[(usize, i64)] = &[
    (14, 1),
    (20, 1),
    (24, 2),
    (26, 4),
    (28, 3),
    (30, 6),
    (32, 9),
    (34, 9),
    (36, 14),
    (38, 21),
    (40, 24),
    (42, 36),
];
// ... and for m = 2.
const F2: &[(usize, i64)] = &[
    (9, 1),
    (11, 1),
    (13, 1),
    (15, 1),
    (17, 1),
    (19, 1),
    (21, 1),
    (23, 1),
    (25, 1),
];
const H2: &[(usize, i64)] = &[(7, 1), (15, 1), (17, 2), (19, 3), (21, 4), (23, 5), (25, 7)];

/// `-1 + q^2 + q^3 + q^4 - q^5`
const QUINTIC: &[(usize, i64)] = &[(0, -1), (2, 1), (3, 1), (4, 1), (5, -1)];

fn poly(order: usize, terms: &[(usize, i64)]) -> TruncSeries {
    TruncSeries::from_terms(order, terms)
}

fn distinct(order: usize) -> TruncSeries {
    poch_inf(1, 1, FactorSign::Plus, false, order).expect("valid product")
}

/// Divides by `(1 - q^e)` for each exponent.
fn over(mut s: TruncSeries, exps: impl IntoIterator<Item = usize>) -> TruncSeries {
    for e in exps {
        s.div_one_minus_assign(e).expect("positive exponent");
    }
    s
}

/// Exponents of `(q^start; q^2)_terms`.
fn odd_run(start: usize, terms: usize) -> impl Iterator<Item = usize> {
    (0..terms).map(move |i| start + 2 * i)
}

fn prefix(s: &TruncSeries, len: usize) -> Result<TruncSeries> {
    Ok(s.truncated(len.min(s.order()))?)
}

fn euler(order: usize, _: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("euler").param("order", order);
    let lhs = distinct(order);
    let rhs = poch_inf(1, 2, FactorSign::Minus, true, order)?;
    r.compare("distinct-equals-odd", &lhs, Some(&rhs), Comparison::Exact)?;
    Ok(r.finish())
}

/// `(1-q)^2 (-q;q)_inf` against its positive closed form; negative only at
/// `q^1` and `q^4`.
fn distinct_square_defect(order: usize, _: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("distinct-square-defect").param("order", order);
    let d = distinct(order);

    // (1-q)(-q;q)_inf = 1 + sum_{j>=2} q^{2j-1} (-q;q)_{j-2}
    let once = d.mul_one_minus(1);
    let mut rhs = TruncSeries::one(order);
    let mut j = 2;
    while 2 * j - 1 <= order {
        let block = poch_fin(1, 1, FactorSign::Plus, j - 2, false, order);
        rhs = &rhs + &block.mul_monomial(1, 2 * j - 1);
        j += 1;
    }
    r.compare("one-minus-q", &once, Some(&rhs), Comparison::Exact)?;

    let lhs = once.mul_one_minus(1);
    let mut rhs = poly(
        order,
        &[(0, 1), (1, -1), (3, 1), (4, -1), (5, 1), (9, 1), (12, 1)],
    );
    let mut j = 6;
    while 3 * j - 4 <= order {
        let block = poch_fin(3, 1, FactorSign::Plus, j - 6, false, order);
        let tail = poly(order, &[(j - 3, 1), (j - 2, 1), (2 * j - 5, 1)]);
        rhs = &rhs + &(&block * &tail).mul_monomial(1, 2 * j - 1);
        j += 1;
    }
    r.compare("closed-form", &lhs, Some(&rhs), Comparison::Exact)?;
    r.compare("sign", &lhs, None, Comparison::NonnegExcept(&[1, 4]))?;
    Ok(r.finish())
}

/// `(1-q)(1-q^5)(-1+q^2+q^3+q^4-q^5)(-q;q)_inf`, nonnegative from `q^1` on.
fn quintic_defect(order: usize, _: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("quintic-defect").param("order", order);
    let mut lhs = &poly(order, QUINTIC) * &distinct(order);
    lhs.mul_one_minus_assign(1);
    lhs.mul_one_minus_assign(5);

    // q^4 / ((1-q^3)(q^7;q^2)_inf) - (1-q^2) / (q^7;q^2)_inf
    let odd7 = poch_inf(7, 2, FactorSign::Minus, true, order)?;
    let split = &over(TruncSeries::monomial(order, 1, 4), [3]) - &poly(order, &[(0, 1), (2, -1)]);
    let split = &split * &odd7;
    r.compare("odd-product-split", &lhs, Some(&split), Comparison::Exact)?;

    let mut rhs = poly(order, &[(0, -1), (2, 1), (4, 1), (11, 1)]);
    rhs = &rhs + &over(TruncSeries::monomial(order, 1, 10), [3]);
    rhs = &rhs + &over(TruncSeries::monomial(order, 1, 17), [3, 7]);
    rhs = &rhs + &over(TruncSeries::monomial(order, 1, 16), [3, 7, 9]);
    rhs = &rhs + &over(poly(order, &[(13, 1), (20, 1)]), [9]);
    let mut j = 11;
    while j + 4 <= order {
        let exps = [3]
            .into_iter()
            .chain(odd_run(7, (j - 11) / 2))
            .chain([j - 2, j]);
        rhs = &rhs + &over(TruncSeries::monomial(order, 1, j + 4), exps);
        j += 2;
    }
    let mut j = 11;
    while 2 * j + 3 <= order {
        let exps = [3].into_iter().chain(odd_run(7, (j - 5) / 2));
        rhs = &rhs + &over(TruncSeries::monomial(order, 1, 2 * j + 3), exps);
        j += 2;
    }
    r.compare("closed-form", &lhs, Some(&rhs), Comparison::Exact)?;
    r.compare("sign", &lhs, None, Comparison::NonnegFrom(1))?;
    Ok(r.finish())
}

/// Tabulated heads of the crank difference series for `m = 1, 2`.
fn crank_diff_heads(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("crank-diff-heads").param("order", order);
    let t = cache.get(Statistic::Crank, order)?;
    for (m, head, len) in [
        (1, CRANK_DIFF_1_HEAD, CRANK_DIFF_1_HEAD_LEN),
        (2, CRANK_DIFF_2_HEAD, CRANK_DIFF_2_HEAD_LEN),
    ] {
        let lhs = prefix(&t.diff_column(m)?, len)?;
        let rhs = poly(lhs.order(), head);
        r.compare(&format!("m={m}"), &lhs, Some(&rhs), Comparison::Exact)?;
    }
    Ok(r.finish())
}

/// Subtracting the explicit decomposition from the crank difference series
/// leaves a series supported from `q^44` (`m = 1`) or `q^27` (`m = 2`) with
/// nonnegative coefficients.
fn crank_diff_residuals(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("crank-diff-residuals").param("order", order);
    let t = cache.get(Statistic::Crank, order)?;
    let one_minus_q = poly(order, &[(0, 1), (1, -1)]);

    let mut quintic = poly(order, QUINTIC).mul_monomial(1, 2);
    quintic.mul_one_minus_assign(1);
    quintic.mul_one_minus_assign(5);
    let head1 = &poly(order, &[(0, 1), (1, -2), (2, 1)]) + &quintic;
    let model1 = &(&head1 + &(&one_minus_q * &poly(order, F1))) + &poly(order, H1);
    let res1 = &t.diff_column(1)? - &model1;
    r.compare("m=1", &res1, None, Comparison::VanishBelowThenNonneg(44))?;

    let mut head2 = TruncSeries::monomial(order, 1, 1);
    head2.mul_one_minus_assign(1);
    head2.mul_one_minus_assign(3);
    let model2 = &(&head2 + &(&one_minus_q * &poly(order, F2))) + &poly(order, H2);
    let res2 = &t.diff_column(2)? - &model2;
    r.compare("m=2", &res2, None, Comparison::VanishBelowThenNonneg(27))?;
    Ok(r.finish())
}

/// For `8 <= m <= 60` the crank difference series is `q^{m-1} - q^m` plus a
/// nonnegative series starting at `q^{m+1}`.
fn crank_diff_tail(order: usize, cache: &TableCache) -> Result<CheckReport> {
    const M_MAX: i64 = 60;
    let mut r = ReportBuilder::new("crank-diff-tail")
        .param("order", order)
        .param("m_max", M_MAX);
    let t = cache.get(Statistic::Crank, order)?;
    for m in 8..=M_MAX.min(order as i64) {
        let mu = m as usize;
        let head = poly(order, &[(mu - 1, 1), (mu, -1)]);
        let rest = &t.diff_column(m)? - &head;
        r.compare(
            &format!("m={m}"),
            &rest,
            None,
            Comparison::VanishBelowThenNonneg(mu + 1),
        )?;
    }
    Ok(r.finish())
}

/// First residual crank differences: `m = 1` head and sign pattern, `m >= 2`
/// nonnegative, the product form at `m = 2`, and the transfer
/// `(-q;q)_inf * (crank difference)` for `1 <= m <= 20`.
fn ocrank_diff_nonneg(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("ocrank-diff-nonneg").param("order", order);
    let o = cache.get(Statistic::OverlineCrank, order)?;
    let c = cache.get(Statistic::Crank, order)?;
    let d = distinct(order);

    let first = o.diff_column(1)?;
    let head = prefix(&first, 5)?;
    let expected = poly(head.order(), &[(0, 1), (1, -1), (2, -1), (3, 1), (5, 1)]);
    r.compare("m=1 head", &head, Some(&expected), Comparison::Exact)?;
    r.compare("m=1 sign", &first, None, Comparison::NonnegExcept(&[1, 2]))?;

    for m in 2..=order as i64 {
        r.compare(
            &format!("m={m}"),
            &o.diff_column(m)?,
            None,
            Comparison::NonnegFrom(0),
        )?;
    }

    // (-q;q)_inf q(1-q)(1-q^3) = q / (q^5;q^2)_inf
    let mut lhs = d.mul_monomial(1, 1);
    lhs.mul_one_minus_assign(1);
    lhs.mul_one_minus_assign(3);
    let rhs =
        &TruncSeries::monomial(order, 1, 1) * &poch_inf(5, 2, FactorSign::Minus, true, order)?;
    r.compare("m=2 product", &lhs, Some(&rhs), Comparison::Exact)?;

    for m in 1..=20i64.min(order as i64) {
        let rhs = &d * &c.diff_column(m)?;
        r.compare(
            &format!("transfer m={m}"),
            &o.diff_column(m)?,
            Some(&rhs),
            Comparison::Exact,
        )?;
    }
    Ok(r.finish())
}

/// `(1-q^4)(-q;q^2)_inf` against its positive closed form.
fn odd_distinct_defect(order: usize, _: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("odd-distinct-defect").param("order", order);
    let sc = poch_inf(1, 2, FactorSign::Plus, false, order)?;

    // (-q;q^2)_inf = 1 + sum_{j odd} q^j (-q;q^2)_{(j-1)/2}
    let mut by_largest = TruncSeries::one(order);
    let mut j = 1;
    while j <= order {
        let block = poch_fin(1, 2, FactorSign::Plus, (j - 1) / 2, false, order);
        by_largest = &by_largest + &block.mul_monomial(1, j);
        j += 2;
    }
    r.compare("largest-part", &sc, Some(&by_largest), Comparison::Exact)?;

    let lhs = sc.mul_one_minus(4);
    let mut rhs = poly(order, &[(0, 1), (1, 1), (3, 1)]);
    let mut j = 5;
    while 2 * j - 4 <= order {
        let block = poch_fin(1, 2, FactorSign::Plus, (j - 5) / 2, false, order);
        let tail = poly(order, &[(j - 4, 1), (j - 2, 1), (2 * j - 6, 1)]);
        rhs = &rhs + &(&block * &tail).mul_monomial(1, j);
        j += 2;
    }
    r.compare("closed-form", &lhs, Some(&rhs), Comparison::Exact)?;
    r.compare("sign", &lhs, None, Comparison::NonnegFrom(0))?;
    Ok(r.finish())
}

/// `sum (M̄(0,n) - M̄(1,n)) q^{2n} = 1 - q^2 - q^4 + q^6 + O(q^8)` with a
/// nonnegative remainder, and the positive product attached to that head.
fn m2crank_head(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("m2crank-head").param("order", order);
    let o = cache.get(Statistic::OverlineCrank, order)?;
    let s = o.diff_column(1)?.dilate(2)?;
    let head = poly(order, &[(0, 1), (2, -1), (4, -1), (6, 1)]);
    r.compare(
        "head",
        &prefix(&s, 7)?,
        Some(&prefix(&head, 7)?),
        Comparison::Exact,
    )?;
    r.compare(
        "remainder",
        &(&s - &head),
        None,
        Comparison::VanishBelowThenNonneg(8),
    )?;

    // (-q;q^2)/(q;q^2) (1-q^2-q^4+q^6) = (-q;q^2)(1-q^4) (1+q)/(q^3;q^2)
    let sc = poch_inf(1, 2, FactorSign::Plus, false, order)?;
    let lhs = &(&sc * &poch_inf(1, 2, FactorSign::Minus, true, order)?) * &head;
    let rhs = &(&sc.mul_one_minus(4) * &poly(order, &[(0, 1), (1, 1)]))
        * &poch_inf(3, 2, FactorSign::Minus, true, order)?;
    r.compare("factored", &lhs, Some(&rhs), Comparison::Exact)?;
    r.compare("factored sign", &rhs, None, Comparison::NonnegFrom(0))?;
    Ok(r.finish())
}

/// Second residual crank differences from first residual ones:
/// `D2_m(q) = (-q;q^2)_inf / (q;q^2)_inf * D_m(q^2)`, `1 <= m <= 20`.
fn m2crank_from_ocrank(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("m2crank-from-ocrank").param("order", order);
    let o = cache.get(Statistic::OverlineCrank, order)?;
    let m2 = cache.get(Statistic::M2Crank, order)?;
    let mult = &poch_inf(1, 2, FactorSign::Plus, false, order)?
        * &poch_inf(1, 2, FactorSign::Minus, true, order)?;
    for m in 1..=20i64.min(order as i64) {
        let rhs = &mult * &o.diff_column(m)?.dilate(2)?;
        r.compare(
            &format!("m={m}"),
            &m2.diff_column(m)?,
            Some(&rhs),
            Comparison::Exact,
        )?;
    }
    Ok(r.finish())
}

/// `n`-differences of the residual cranks as products with the crank column,
/// `0 <= m <= 20`. The left side carries `count(m, 0)` at `q^0`, i.e. it is
/// `(1-q)` times the column.
fn monotone_factorization(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("monotone-factorization").param("order", order);
    let c = cache.get(Statistic::Crank, order)?;
    let o = cache.get(Statistic::OverlineCrank, order)?;
    let m2 = cache.get(Statistic::M2Crank, order)?;
    let odd3 = poch_inf(3, 2, FactorSign::Minus, true, order)?;
    let m2_mult = &distinct(order) * &odd3;
    for m in 0..=20i64.min(order as i64) {
        let mut lhs = o.monotone_diff_row(m);
        lhs.set_coeff(0, o.count(m, 0).clone());
        let rhs = &odd3 * &c.column(m);
        r.compare(
            &format!("ocrank m={m}"),
            &lhs,
            Some(&rhs),
            Comparison::Exact,
        )?;

        let mut lhs = m2.monotone_diff_row(m);
        lhs.set_coeff(0, m2.count(m, 0).clone());
        let rhs = &m2_mult * &c.column(m).dilate(2)?;
        r.compare(
            &format!("m2crank m={m}"),
            &lhs,
            Some(&rhs),
            Comparison::Exact,
        )?;
    }
    Ok(r.finish())
}

/// `p(n) - p(n-1) - p(n-2) + p(n-5) <= 0` for `n > 0`, its three-term
/// weakening, and the sign of `(-q+q^3+q^5)/(q^2;q^2)_inf`.
fn andrews_merca(order: usize, _: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("andrews-merca").param("order", order);
    let p = poch_inf(1, 1, FactorSign::Minus, true, order)?;
    let four = &poly(order, &[(0, 1), (1, -1), (2, -1), (5, 1)]) * &p;
    r.compare("four-term", &four, None, Comparison::NonposFrom(1))?;
    let three = &poly(order, &[(0, 1), (1, -1), (2, -1)]) * &p;
    r.compare("three-term", &three, None, Comparison::NonposFrom(1))?;
    let shifted =
        &poly(order, &[(1, -1), (3, 1), (5, 1)]) * &poch_inf(2, 2, FactorSign::Minus, true, order)?;
    r.compare("odd-shift", &shifted, None, Comparison::NonnegExcept(&[1]))?;
    Ok(r.finish())
}

/// k-crank differences from first residual crank differences:
/// `D^k_m = D_m / ((q^2;q^2)_inf (q;q)_inf^{k-2})` for `k = 2, 3, 4` and
/// `1 <= m <= 10`.
fn kcrank_reduction(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("kcrank-reduction").param("order", order);
    let o = cache.get(Statistic::OverlineCrank, order)?;
    let even = poch_inf(2, 2, FactorSign::Minus, true, order)?;
    let p = poch_inf(1, 1, FactorSign::Minus, true, order)?;
    for k in 2..=4usize {
        let t = cache.get(Statistic::KCrank(k), order)?;
        let mult = &even * &p.pow(k as i64 - 2)?;
        for m in 1..=10i64.min(order as i64) {
            let rhs = &mult * &o.diff_column(m)?;
            r.compare(
                &format!("k={k} m={m}"),
                &t.diff_column(m)?,
                Some(&rhs),
                Comparison::Exact,
            )?;
        }
    }
    Ok(r.finish())
}

/// The `m = 1` k-crank difference is `(1-q)/(q;q)_inf^{k-2}` plus a
/// nonnegative series, `2 <= k <= 6`.
fn kcrank_m1_split(order: usize, cache: &TableCache) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("kcrank-m1-split").param("order", order);
    let even = poch_inf(2, 2, FactorSign::Minus, true, order)?;
    let p = poch_inf(1, 1, FactorSign::Minus, true, order)?;

    // (1-q-q^2+q^3+q^5)/(q^2;q^2) = 1/(q^4;q^2) + (-q+q^3+q^5)/(q^2;q^2)
    let lhs = &poly(order, &[(0, 1), (1, -1), (2, -1), (3, 1), (5, 1)]) * &even;
    let rhs = &poch_inf(4, 2, FactorSign::Minus, true, order)?
        + &(&poly(order, &[(1, -1), (3, 1), (5, 1)]) * &even);
    r.compare("head split", &lhs, Some(&rhs), Comparison::Exact)?;

    for k in 2..=6usize {
        let t = cache.get(Statistic::KCrank(k), order)?;
        let main = p.pow(k as i64 - 2)?.mul_one_minus(1);
        let rest = &t.diff_column(1)? - &main;
        r.compare(&format!("k={k}"), &rest, None, Comparison::NonnegFrom(0))?;
        if k >= 3 {
            // (1-q)/(q;q)^{k-2} = 1/((q;q)^{k-3} (q^2;q)_inf)
            let alt = &p.pow(k as i64 - 3)? * &poch_inf(2, 1, FactorSign::Minus, true, order)?;
            r.compare(
                &format!("k={k} product"),
                &main,
                Some(&alt),
                Comparison::Exact,
            )?;
        }
    }
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_resolve() {
        assert_eq!(resolve("lemma-3.2"), Some("distinct-square-defect"));
        assert_eq!(resolve("euler"), Some("euler"));
        assert_eq!(resolve("nope"), None);
        assert!(matches!(
            check_identity("nope", 10, &TableCache::new()),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn every_entry_passes_at_small_order() {
        let cache = TableCache::new();
        for id in catalog_ids() {
            let r = check_identity(id, 60, &cache).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.exceptions);
        }
    }

    #[test]
    fn distinct_square_defect_negatives() {
        let r = check_identity("distinct-square-defect", 50, &TableCache::new()).unwrap();
        assert!(r.passed());
        let neg: Vec<(usize, &str)> = r.exceptions.iter().map(|e| (e.n, e.lhs.as_str())).collect();
        assert_eq!(neg, vec![(1, "-1"), (4, "-1")]);
    }

    #[test]
    fn andrews_merca_value_at_five() {
        let p = poch_inf(1, 1, FactorSign::Minus, true, 10).unwrap();
        let four = &poly(10, &[(0, 1), (1, -1), (2, -1), (5, 1)]) * &p;
        // p(5) - p(4) - p(3) + p(0) = 7 - 5 - 3 + 1
        assert_eq!(*four.coeff(5), 0.into());
    }

    #[test]
    fn a_wrong_head_fails() {
        let cache = TableCache::new();
        let t = cache.get(Statistic::Crank, 50).unwrap();
        let mut r = ReportBuilder::new("probe");
        let lhs = prefix(&t.diff_column(1).unwrap(), 43).unwrap();
        let mut wrong = poly(43, CRANK_DIFF_1_HEAD);
        wrong.set_coeff(42, 36);
        r.compare("m=1", &lhs, Some(&wrong), Comparison::Exact)
            .unwrap();
        let report = r.finish();
        assert!(!report.passed());
        assert_eq!(report.cells(), vec![(None, 42)]);
    }
}
