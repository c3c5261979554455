//! Crank tables `T[n][m]` materialized from a generating function or from
//! enumeration, plus the difference views used by the verifier.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bivariate::{bgf_crank, bgf_kcrank, bgf_m2_crank, bgf_overline_crank, BivariateSeries};
use crate::enumerate::oracle_table;
use crate::error::{Error, Result};
use crate::series::TruncSeries;

static ZERO: BigInt = BigInt::ZERO;

/// Which weighted count a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    /// `M(m,n)`: crank of ordinary partitions.
    Crank,
    /// `M̄(m,n)`: first residual crank of overpartitions.
    OverlineCrank,
    /// `M̄2(m,n)`: second residual crank of overpartitions.
    M2Crank,
    /// `M_k(m,n)`: k-crank of k-colored partitions.
    KCrank(usize),
    /// `N(m,n)`: Dyson rank. Enumeration only.
    Rank,
}

impl Statistic {
    /// Builds from a CLI-style name plus an optional color count.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        match (name, k) {
            ("kcrank", Some(k)) => Ok(Statistic::KCrank(k)),
            ("kcrank", None) => Err(Error::UnknownStatistic("kcrank without k".into())),
            _ => name.parse(),
        }
    }

    pub fn has_gf(self) -> bool {
        !matches!(self, Statistic::Rank)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Crank => f.write_str("crank"),
            Statistic::OverlineCrank => f.write_str("ocrank"),
            Statistic::M2Crank => f.write_str("m2crank"),
            Statistic::KCrank(k) => write!(f, "kcrank:{k}"),
            Statistic::Rank => f.write_str("rank"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "crank" => Ok(Statistic::Crank),
            "ocrank" => Ok(Statistic::OverlineCrank),
            "m2crank" => Ok(Statistic::M2Crank),
            "rank" => Ok(Statistic::Rank),
            _ => s
                .strip_prefix("kcrank:")
                .and_then(|k| k.parse().ok())
                .map(Statistic::KCrank)
                .ok_or_else(|| Error::UnknownStatistic(s.to_string())),
        }
    }
}

impl Serialize for Statistic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Gf,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Gf => "gf",
            Provenance::Oracle => "oracle",
        })
    }
}

/// Weighted counts `count(m, n)` for `0 <= n <= n_max`.
///
/// Only `m >= 0` is stored; every statistic here is symmetric in `m` and the
/// constructors reject rows that are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrankTable {
    statistic: Statistic,
    provenance: Provenance,
    symmetric: bool,
    // rows[n][m] for 0 <= m <= n
    rows: Vec<Vec<BigInt>>,
}

impl CrankTable {
    /// Rows given densely over `m = -n..=n`.
    pub fn from_dense_rows(
        statistic: Statistic,
        provenance: Provenance,
        dense: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(dense.len());
        for (n, row) in dense.into_iter().enumerate() {
            assert_eq!(row.len(), 2 * n + 1, "row {n} has wrong width");
            if (0..n).any(|i| row[i] != row[2 * n - i]) {
                return Err(Error::Asymmetric { statistic, n });
            }
            rows.push(row[n..].iter().map(|&c| BigInt::from(c)).collect());
        }
        Ok(CrankTable {
            statistic,
            provenance,
            symmetric: true,
            rows,
        })
    }

    /// Reads rows `0..=n_max` out of a generating function.
    pub fn from_bivariate(statistic: Statistic, g: &BivariateSeries, n_max: usize) -> Result<Self> {
        if n_max > g.order() {
            return Err(Error::OutOfRange {
                requested: n_max,
                n_max: g.order(),
            });
        }
        let mut rows = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let row = g.row(n).expect("n within order");
            if !row.is_symmetric() {
                return Err(Error::Asymmetric { statistic, n });
            }
            if row.degree().is_some_and(|d| d > n) {
                return Err(Error::TableMismatch(format!(
                    "{statistic} row {n} has support beyond |m| = {n}"
                )));
            }
            rows.push((0..=n as i64).map(|m| row.get(m).clone()).collect());
        }
        Ok(CrankTable {
            statistic,
            provenance: Provenance::Gf,
            symmetric: true,
            rows,
        })
    }

    pub fn statistic(&self) -> Statistic {
        self.statistic
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `count(m, n)`; zero for `|m| > n` or `n > n_max`.
    pub fn count(&self, m: i64, n: usize) -> &BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(m.unsigned_abs() as usize))
            .unwrap_or(&ZERO)
    }

    /// Row `n` expanded over `m = -n..=n`.
    pub fn full_row(&self, n: usize) -> Vec<BigInt> {
        let n_i = n as i64;
        (-n_i..=n_i).map(|m| self.count(m, n).clone()).collect()
    }

    /// [`CrankTable::full_row`] as machine integers; panics on overflow.
    pub fn full_row_i64(&self, n: usize) -> Vec<i64> {
        self.full_row(n)
            .iter()
            .map(|c| c.to_i64().expect("count fits in i64"))
            .collect()
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.full_row(n).iter().sum()
    }

    /// `n -> count(m, n)` for `n <= n_max`.
    pub fn column(&self, m: i64) -> TruncSeries {
        let coeffs = (0..=self.n_max())
            .map(|n| self.count(m, n).clone())
            .collect();
        TruncSeries::from_coeffs(coeffs).expect("nonempty")
    }

    /// `n -> count(m-1, n) - count(m, n)`.
    pub fn diff_column(&self, m: i64) -> Result<TruncSeries> {
        if m < 1 {
            return Err(Error::InvalidDifferenceIndex(m));
        }
        let coeffs = (0..=self.n_max())
            .map(|n| self.count(m - 1, n) - self.count(m, n))
            .collect();
        Ok(TruncSeries::from_coeffs(coeffs).expect("nonempty"))
    }

    /// `n -> count(m, n) - count(m, n-1)` for `n >= 1`; the `q^0` term is zero.
    pub fn monotone_diff_row(&self, m: i64) -> TruncSeries {
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend((1..=self.n_max()).map(|n| self.count(m, n) - self.count(m, n - 1)));
        TruncSeries::from_coeffs(coeffs).expect("nonempty")
    }

    /// CSV with header `n,m,count`, rows ordered by `n` then `m`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "m", "count"])?;
        for n in 0..=self.n_max() {
            let n_i = n as i64;
            for m in -n_i..=n_i {
                w.write_record([n.to_string(), m.to_string(), self.count(m, n).to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Pretty-printed JSON (see the [`Serialize`] impl for the layout).
    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        Ok(())
    }
}

/// `{statistic, n_max, rows: [{n, counts: {m: "v"}}]}` with counts as decimal
/// strings and `m` ascending.
impl Serialize for CrankTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Counts<'a>(&'a CrankTable, usize);
        impl Serialize for Counts<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let n = self.1 as i64;
                let mut map = s.serialize_map(Some(2 * self.1 + 1))?;
                for m in -n..=n {
                    map.serialize_entry(&m.to_string(), &self.0.count(m, self.1).to_string())?;
                }
                map.end()
            }
        }
        struct Row<'a>(&'a CrankTable, usize);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = s.serialize_struct("Row", 2)?;
                st.serialize_field("n", &self.1)?;
                st.serialize_field("counts", &Counts(self.0, self.1))?;
                st.end()
            }
        }
        let rows: Vec<Row<'_>> = (0..=self.n_max()).map(|n| Row(self, n)).collect();
        let mut st = s.serialize_struct("CrankTable", 3)?;
        st.serialize_field("statistic", &self.statistic)?;
        st.serialize_field("n_max", &self.n_max())?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// Generating function for a statistic, truncated at `order`.
pub fn generating_function(statistic: Statistic, order: usize) -> Result<BivariateSeries> {
    match statistic {
        Statistic::Crank => Ok(bgf_crank(order)),
        Statistic::OverlineCrank => Ok(bgf_overline_crank(order)),
        Statistic::M2Crank => Ok(bgf_m2_crank(order)),
        Statistic::KCrank(k) => bgf_kcrank(k, order),
        Statistic::Rank => Err(Error::NoGeneratingFunction { statistic }),
    }
}

/// Builds a table from the requested backend.
pub fn build_table(
    statistic: Statistic,
    n_max: usize,
    provenance: Provenance,
) -> Result<CrankTable> {
    match provenance {
        Provenance::Gf => {
            let g = generating_function(statistic, n_max)?;
            CrankTable::from_bivariate(statistic, &g, n_max)
        }
        Provenance::Oracle => oracle_table(statistic, n_max),
    }
}

/// Compares two tables of the same statistic cell by cell over their common
/// `n` range; returns the mismatching `(m, n, left, right)` cells.
pub fn table_differences(
    a: &CrankTable,
    b: &CrankTable,
) -> Result<Vec<(i64, usize, BigInt, BigInt)>> {
    if a.statistic != b.statistic {
        return Err(Error::TableMismatch(format!(
            "cannot compare {} with {}",
            a.statistic, b.statistic
        )));
    }
    let top = a.n_max().min(b.n_max());
    let mut out = Vec::new();
    for n in 0..=top {
        let n_i = n as i64;
        for m in -n_i..=n_i {
            let (x, y) = (a.count(m, n), b.count(m, n));
            if x != y {
                out.push((m, n, x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn head(s: &TruncSeries, len: usize) -> Vec<i64> {
        s.coeffs()[..len]
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn statistic_names_round_trip() {
        for s in [
            Statistic::Crank,
            Statistic::OverlineCrank,
            Statistic::M2Crank,
            Statistic::KCrank(3),
            Statistic::Rank,
        ] {
            assert_eq!(s.to_string().parse::<Statistic>().unwrap(), s);
        }
        assert_eq!(
            Statistic::parse("kcrank", Some(4)).unwrap(),
            Statistic::KCrank(4)
        );
        assert!(Statistic::parse("kcrank", None).is_err());
        assert!("bogus".parse::<Statistic>().is_err());
    }

    #[test]
    fn gf_table_rows() {
        let t = build_table(Statistic::Crank, 1, Provenance::Gf).unwrap();
        assert_eq!(t.full_row_i64(1), vec![1, -1, 1]);
        let o = build_table(Statistic::OverlineCrank, 4, Provenance::Gf).unwrap();
        assert_eq!(o.count(0, 4), &BigInt::from(2));
        assert_eq!(o.count(1, 4), &BigInt::from(2));
        assert_eq!(o.row_sum(4), BigInt::from(14));
        let m2 = build_table(Statistic::M2Crank, 0, Provenance::Gf).unwrap();
        assert_eq!(m2.full_row_i64(0), vec![1]);
        assert!(matches!(
            build_table(Statistic::Rank, 5, Provenance::Gf),
            Err(Error::NoGeneratingFunction { .. })
        ));
    }

    #[test]
    fn crank_difference_heads() {
        let t = build_table(Statistic::Crank, 30, Provenance::Gf).unwrap();
        assert_eq!(
            head(&t.diff_column(1).unwrap(), 13),
            vec![1, -2, 0, 1, 1, 0, 0, -1, 0, -1, 1, -1, 2]
        );
        assert_eq!(
            head(&t.diff_column(2).unwrap(), 11),
            vec![0, 1, -1, 0, -1, 1, 0, 1, 0, 1, -1]
        );
        assert!(matches!(
            t.diff_column(0),
            Err(Error::InvalidDifferenceIndex(0))
        ));
        let o = build_table(Statistic::OverlineCrank, 10, Provenance::Gf).unwrap();
        assert_eq!(
            head(&o.diff_column(1).unwrap(), 6),
            vec![1, -1, -1, 1, 0, 1]
        );
    }

    #[test]
    fn monotone_rows() {
        let o = build_table(Statistic::OverlineCrank, 60, Provenance::Gf).unwrap();
        let d = o.monotone_diff_row(0);
        assert!(d.coeff(0).is_zero());
        // M(0,1) = -1 leaks through: M̄(0,1) = 0 < M̄(0,0) = 1.
        assert_eq!(d.negative_indices(), vec![1]);
        assert!(o.monotone_diff_row(1).negative_indices().is_empty());
        let c = build_table(Statistic::Crank, 60, Provenance::Gf).unwrap();
        let d = c.monotone_diff_row(0);
        assert!(d.negative_indices().iter().all(|&n| n < 14));
    }

    #[test]
    fn csv_layout() {
        let t = build_table(Statistic::Crank, 1, Provenance::Gf).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,m,count\n0,0,1\n1,-1,1\n1,0,-1\n1,1,1\n"
        );
    }

    #[test]
    fn json_layout() {
        let t = build_table(Statistic::Crank, 1, Provenance::Gf).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["statistic"], "crank");
        assert_eq!(v["n_max"], 1);
        assert_eq!(v["rows"][1]["n"], 1);
        assert_eq!(v["rows"][1]["counts"]["0"], "-1");
        assert_eq!(v["rows"][1]["counts"]["-1"], "1");
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.contains(r#"{"-1":"1","0":"-1","1":"1"}"#));
    }

    #[test]
    fn dense_rows_must_be_symmetric() {
        let bad = vec![vec![1], vec![2, 0, 1]];
        assert!(matches!(
            CrankTable::from_dense_rows(Statistic::Crank, Provenance::Oracle, bad),
            Err(Error::Asymmetric { n: 1, .. })
        ));
    }

    #[test]
    fn differences_between_tables() {
        let a = build_table(Statistic::Crank, 5, Provenance::Gf).unwrap();
        let b = build_table(Statistic::Crank, 8, Provenance::Oracle).unwrap();
        assert!(table_differences(&a, &b).unwrap().is_empty());
        let c = build_table(Statistic::OverlineCrank, 5, Provenance::Gf).unwrap();
        assert!(table_differences(&a, &c).is_err());
    }
}
