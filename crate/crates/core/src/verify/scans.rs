//! Table sweeps: unimodality steps in `m`, monotonicity in `n`, the rank
//! inequalities, and generating-function versus enumeration agreement.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::{CheckReport, ReportBuilder};
use crate::bivariate::bgf_kcrank;
use crate::enumerate::oracle_table;
use crate::error::{Error, Result};
use crate::tables::{build_table, table_differences, CrankTable, Provenance, Statistic};

/// Upper end of an `m` range, possibly tied to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MBound {
    Fixed(i64),
    /// `n - offset`
    NMinus(i64),
}

/// `m` values scanned for a given `n`: `lo..=hi(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MRange {
    pub lo: i64,
    pub hi: MBound,
}

impl MRange {
    pub fn new(lo: i64, hi: MBound) -> Self {
        MRange { lo, hi }
    }

    /// `lo..=n`, past which every count is zero.
    pub fn to_n(lo: i64) -> Self {
        MRange::new(lo, MBound::NMinus(0))
    }

    fn at(&self, n: usize) -> RangeInclusive<i64> {
        let hi = match self.hi {
            MBound::Fixed(h) => h,
            MBound::NMinus(off) => n as i64 - off,
        };
        self.lo..=hi
    }
}

fn ensure_in_table(t: &CrankTable, n_range: &RangeInclusive<usize>) -> Result<()> {
    if *n_range.end() > t.n_max() {
        return Err(Error::OutOfRange {
            requested: *n_range.end(),
            n_max: t.n_max(),
        });
    }
    Ok(())
}

/// Calls `bad(m, n)` for every cell with `count(m-1, n) < count(m, n)`.
fn scan_step(
    t: &CrankTable,
    m_range: MRange,
    n_range: RangeInclusive<usize>,
    mut bad: impl FnMut(i64, usize),
) {
    for n in n_range {
        for m in m_range.at(n) {
            if t.count(m - 1, n) < t.count(m, n) {
                bad(m, n);
            }
        }
    }
}

/// Calls `bad(m, n)` for every cell with `count(m, n) < count(m, n-1)`.
fn scan_monotone(
    t: &CrankTable,
    m_range: MRange,
    n_range: RangeInclusive<usize>,
    skip: impl Fn(i64, usize) -> bool,
    mut bad: impl FnMut(i64, usize),
) {
    for n in n_range {
        if n == 0 {
            continue;
        }
        for m in m_range.at(n) {
            if !skip(m, n) && t.count(m, n) < t.count(m, n - 1) {
                bad(m, n);
            }
        }
    }
}

/// `count(m-1, n) >= count(m, n)` over the given ranges; `expected` lists the
/// `(m, n)` cells allowed (and, when `n` is in range, required) to fail.
pub fn check_unimodal_step(
    id: &str,
    t: &CrankTable,
    m_range: MRange,
    n_range: RangeInclusive<usize>,
    expected: &[(i64, usize)],
) -> Result<CheckReport> {
    ensure_in_table(t, &n_range)?;
    let mut r = ReportBuilder::new(id)
        .param("statistic", t.statistic())
        .param("n_min", n_range.start())
        .param("n_max", n_range.end());
    let claim = t.statistic().to_string();
    for &(m, n) in expected.iter().filter(|(_, n)| n_range.contains(n)) {
        r.expect(&claim, Some(m), n);
    }
    let mut cells = Vec::new();
    scan_step(t, m_range, n_range, |m, n| cells.push((m, n)));
    for (m, n) in cells {
        r.found(&claim, Some(m), n, t.count(m - 1, n), t.count(m, n));
    }
    Ok(r.finish())
}

/// `count(m, n) >= count(m, n-1)` over the given ranges.
pub fn check_monotone_n(
    id: &str,
    t: &CrankTable,
    m_range: MRange,
    n_range: RangeInclusive<usize>,
    expected: &[(i64, usize)],
) -> Result<CheckReport> {
    ensure_in_table(t, &n_range)?;
    let mut r = ReportBuilder::new(id)
        .param("statistic", t.statistic())
        .param("n_min", n_range.start())
        .param("n_max", n_range.end());
    let claim = t.statistic().to_string();
    for &(m, n) in expected.iter().filter(|(_, n)| n_range.contains(n)) {
        r.expect(&claim, Some(m), n);
    }
    monotone_claim(&mut r, &claim, t, m_range, n_range);
    Ok(r.finish())
}

fn monotone_claim(
    r: &mut ReportBuilder,
    claim: &str,
    t: &CrankTable,
    m_range: MRange,
    n_range: RangeInclusive<usize>,
) {
    let mut cells = Vec::new();
    scan_monotone(t, m_range, n_range, |_, _| false, |m, n| cells.push((m, n)));
    for (m, n) in cells {
        r.found(claim, Some(m), n, t.count(m, n), t.count(m, n - 1));
    }
}

/// First residual crank: `M̄(m-1,n) >= M̄(m,n)` for `m >= 1`, failing exactly
/// at `(m,n) = (1,1)` and `(1,2)`.
pub(crate) fn ocrank_unimodal(t: &CrankTable) -> Result<CheckReport> {
    check_unimodal_step(
        "ocrank-unimodal",
        t,
        MRange::to_n(1),
        0..=t.n_max(),
        &[(1, 1), (1, 2)],
    )
}

/// Second residual crank: `M̄2(m-1,n) >= M̄2(m,n)` for all `m >= 1`.
pub(crate) fn m2crank_unimodal(t: &CrankTable) -> Result<CheckReport> {
    check_unimodal_step("m2crank-unimodal", t, MRange::to_n(1), 0..=t.n_max(), &[])
}

/// `M̄(m,n) >= M̄(m,n-1)` and `M̄2(m,n) >= M̄2(m,n-1)` for `m >= 0`, `n >= 1`.
///
/// The first residual crank fails once, at `(m,n) = (0,1)`: `M̄(0,1) = 0` while
/// `M̄(0,0) = 1`, inherited from `M(0,1) = -1`.
pub(crate) fn overpartition_monotone(o: &CrankTable, m2: &CrankTable) -> Result<CheckReport> {
    let top = o.n_max().min(m2.n_max());
    let mut r = ReportBuilder::new("overpartition-monotone")
        .param("n_min", 1)
        .param("n_max", top);
    if top >= 1 {
        r.expect("ocrank", Some(0), 1);
    }
    monotone_claim(&mut r, "ocrank", o, MRange::to_n(0), 1..=top);
    monotone_claim(&mut r, "m2crank", m2, MRange::to_n(0), 1..=top);
    Ok(r.finish())
}

/// Crank unimodality for `n >= 44`, `1 <= m <= n-1`; smaller `n` are reported
/// informationally.
pub(crate) fn crank_unimodal(t: &CrankTable) -> Result<CheckReport> {
    const THRESHOLD: usize = 44;
    let m_range = MRange::new(1, MBound::NMinus(1));
    let mut r = ReportBuilder::new("crank-unimodal")
        .param("n_min", THRESHOLD)
        .param("n_max", t.n_max());
    let mut cells = Vec::new();
    scan_step(t, m_range, THRESHOLD..=t.n_max(), |m, n| cells.push((m, n)));
    for (m, n) in cells {
        r.found("crank", Some(m), n, t.count(m - 1, n), t.count(m, n));
    }
    let mut below = Vec::new();
    scan_step(t, m_range, 1..=(THRESHOLD - 1).min(t.n_max()), |m, n| {
        below.push((m, n))
    });
    for (m, n) in below {
        r.info("crank", Some(m), n, t.count(m - 1, n), t.count(m, n));
    }
    Ok(r.finish())
}

/// Crank monotonicity `M(m,n) >= M(m,n-1)` for `n >= 14`, `0 <= m <= n-2`.
pub(crate) fn crank_monotone(t: &CrankTable) -> Result<CheckReport> {
    const THRESHOLD: usize = 14;
    let m_range = MRange::new(0, MBound::NMinus(2));
    let mut r = ReportBuilder::new("crank-monotone")
        .param("n_min", THRESHOLD)
        .param("n_max", t.n_max());
    let mut cells = Vec::new();
    scan_monotone(
        t,
        m_range,
        THRESHOLD..=t.n_max(),
        |_, _| false,
        |m, n| cells.push((m, n)),
    );
    for (m, n) in cells {
        r.found("crank", Some(m), n, t.count(m, n), t.count(m, n - 1));
    }
    let mut below = Vec::new();
    scan_monotone(
        t,
        m_range,
        1..=(THRESHOLD - 1).min(t.n_max()),
        |_, _| false,
        |m, n| below.push((m, n)),
    );
    for (m, n) in below {
        r.info("crank", Some(m), n, t.count(m, n), t.count(m, n - 1));
    }
    Ok(r.finish())
}

/// Rank inequalities from an enumerated table:
/// `N(m,n) >= N(m+2,n)` for all `m, n >= 0`, and `N(m,n) >= N(m,n-1)` for
/// `n >= 12`, `n != m+2`.
pub fn check_rank_inequalities(n_max: usize) -> Result<CheckReport> {
    const THRESHOLD: usize = 12;
    let t = oracle_table(Statistic::Rank, n_max)?;
    let mut r = ReportBuilder::new("rank-inequalities").param("n_max", n_max);

    for n in 0..=n_max {
        for m in 0..=n as i64 {
            let (a, b) = (t.count(m, n), t.count(m + 2, n));
            if a < b {
                r.found("rank-step", Some(m), n, a, b);
            }
        }
    }

    let excluded = |m: i64, n: usize| n as i64 == m + 2;
    let mut cells = Vec::new();
    scan_monotone(&t, MRange::to_n(0), THRESHOLD..=n_max, excluded, |m, n| {
        cells.push((m, n))
    });
    for (m, n) in cells {
        r.found(
            "rank-monotone",
            Some(m),
            n,
            t.count(m, n),
            t.count(m, n - 1),
        );
    }
    let mut below = Vec::new();
    scan_monotone(
        &t,
        MRange::to_n(0),
        1..=(THRESHOLD - 1).min(n_max),
        excluded,
        |m, n| below.push((m, n)),
    );
    for (m, n) in below {
        r.info(
            "rank-monotone",
            Some(m),
            n,
            t.count(m, n),
            t.count(m, n - 1),
        );
    }
    Ok(r.finish())
}

/// k-crank rows are symmetric in `m` and weakly decreasing for `m >= 1`,
/// except the row `n = 1` when `k = 2`.
pub fn check_kcrank_unimodal(k: usize, n_max: usize) -> Result<CheckReport> {
    let g = bgf_kcrank(k, n_max)?;
    let mut r = ReportBuilder::new("kcrank-unimodal")
        .param("k", k)
        .param("n_max", n_max);
    for n in g.asymmetric_rows() {
        let row = g.row(n).expect("row in range");
        for m in 1..=n as i64 {
            if row.get(m) != row.get(-m) {
                r.found("symmetry", Some(m), n, row.get(m), row.get(-m));
            }
        }
    }
    if k == 2 && n_max >= 1 {
        r.expect("step", Some(1), 1);
    }
    // the table constructor rejects asymmetric rows, which were reported above
    if let Ok(t) = CrankTable::from_bivariate(Statistic::KCrank(k), &g, n_max) {
        let mut cells = Vec::new();
        scan_step(&t, MRange::to_n(1), 0..=n_max, |m, n| cells.push((m, n)));
        for (m, n) in cells {
            r.found("step", Some(m), n, t.count(m - 1, n), t.count(m, n));
        }
    }
    Ok(r.finish())
}

/// Cell-by-cell equality of two tables of the same statistic.
pub fn check_table_consistency(gf: &CrankTable, oracle: &CrankTable) -> Result<CheckReport> {
    let diffs = table_differences(gf, oracle)?;
    let mut r = ReportBuilder::new("gf-oracle-agreement")
        .param("statistic", gf.statistic())
        .param("n_max", gf.n_max().min(oracle.n_max()));
    let claim = gf.statistic().to_string();
    for (m, n, a, b) in diffs {
        r.found(&claim, Some(m), n, &a, &b);
    }
    Ok(r.finish())
}

/// Crosschecks every statistic that has both backends.
pub(crate) fn gf_oracle_agreement(n_max: usize, crank_n_max: usize) -> Result<Vec<CheckReport>> {
    let jobs = [
        (Statistic::Crank, crank_n_max),
        (Statistic::OverlineCrank, n_max),
        (Statistic::M2Crank, n_max),
        (Statistic::KCrank(2), n_max),
        (Statistic::KCrank(3), n_max),
        (Statistic::KCrank(4), n_max),
    ];
    jobs.par_iter().map(|&(s, n)| crosscheck(s, n)).collect()
}

/// Builds both backends for `statistic` up to `n_max` and compares them.
pub fn crosscheck(statistic: Statistic, n_max: usize) -> Result<CheckReport> {
    let (gf, oracle) = rayon::join(
        || build_table(statistic, n_max, Provenance::Gf),
        || build_table(statistic, n_max, Provenance::Oracle),
    );
    check_table_consistency(&gf?, &oracle?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_range_bounds() {
        assert_eq!(MRange::new(1, MBound::NMinus(1)).at(5), 1..=4);
        assert_eq!(MRange::new(0, MBound::Fixed(3)).at(9), 0..=3);
    }

    #[test]
    fn small_overline_scan() {
        let t = build_table(Statistic::OverlineCrank, 30, Provenance::Gf).unwrap();
        let r = ocrank_unimodal(&t).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cells(), vec![(Some(1), 1), (Some(1), 2)]);
        let strict = check_unimodal_step("x", &t, MRange::to_n(1), 0..=30, &[]).unwrap();
        assert!(!strict.passed());
    }

    #[test]
    fn overpartition_monotone_single_exception() {
        let o = build_table(Statistic::OverlineCrank, 40, Provenance::Gf).unwrap();
        let m2 = build_table(Statistic::M2Crank, 40, Provenance::Gf).unwrap();
        let r = overpartition_monotone(&o, &m2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cells(), vec![(Some(0), 1)]);
        assert_eq!(r.exceptions[0].claim, "ocrank");
    }

    #[test]
    fn scan_range_must_fit() {
        let t = build_table(Statistic::Crank, 10, Provenance::Gf).unwrap();
        assert!(matches!(
            check_monotone_n("x", &t, MRange::to_n(0), 1..=11, &[]),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn crank_sub_threshold_violations_are_informational() {
        let t = build_table(Statistic::Crank, 60, Provenance::Gf).unwrap();
        let r = crank_unimodal(&t).unwrap();
        assert!(r.passed());
        assert!(!r.informational.is_empty());
        let r = crank_monotone(&t).unwrap();
        assert!(r.passed());
        assert!(!r.informational.is_empty());
    }

    #[test]
    fn rank_exclusion_rule() {
        // N(n-2, n) = 0 while (n-1) has rank n-2, so every n = m+2 cell drops.
        let t = oracle_table(Statistic::Rank, 12).unwrap();
        assert!(t.count(10, 12) < t.count(10, 11));
        let r = check_rank_inequalities(20).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.informational.iter().all(|e| e.n < 12));
    }

    #[test]
    fn kcrank_two_has_single_exception() {
        let r = check_kcrank_unimodal(2, 40).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cells(), vec![(Some(1), 1)]);
        assert!(check_kcrank_unimodal(3, 40).unwrap().exceptions.is_empty());
    }

    #[test]
    fn consistency_small() {
        let r = crosscheck(Statistic::M2Crank, 12).unwrap();
        assert!(r.passed());
    }
}
