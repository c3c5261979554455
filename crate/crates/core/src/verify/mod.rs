//! Machine checks of the crank inequalities and q-series identities.
//!
//! Every check produces a [`CheckReport`]. A report passes exactly when the
//! set of exceptions it found equals the set it declared in advance; for most
//! checks that set is empty.

mod catalog;
mod scans;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::TruncSeries;
use crate::tables::{generating_function, CrankTable, Statistic};

pub use catalog::{catalog_ids, check_identity};
pub use scans::{
    check_kcrank_unimodal, check_monotone_n, check_rank_inequalities, check_table_consistency,
    check_unimodal_step, crosscheck, MBound, MRange,
};

/// Default truncation order for identity checks.
pub const DEFAULT_IDENTITY_ORDER: usize = 200;
/// Default `n_max` for generating-function sweeps.
pub const DEFAULT_SWEEP_N_MAX: usize = 300;
/// Default `n_max` for enumeration-backed sweeps.
pub const DEFAULT_ORACLE_N_MAX: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Identifies an exception independently of the values involved.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExceptionKey {
    pub claim: String,
    pub m: Option<i64>,
    pub n: usize,
}

/// One violating cell or exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exception {
    pub claim: String,
    pub m: Option<i64>,
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

impl Exception {
    pub fn key(&self) -> ExceptionKey {
        ExceptionKey {
            claim: self.claim.clone(),
            m: self.m,
            n: self.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub verdict: Verdict,
    pub exceptions: Vec<Exception>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<ExceptionKey>,
    /// Violations outside the range a statement covers; never affect the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub informational: Vec<Exception>,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `(m, n)` of every exception, in discovery order.
    pub fn cells(&self) -> Vec<(Option<i64>, usize)> {
        self.exceptions.iter().map(|e| (e.m, e.n)).collect()
    }
}

/// Accumulates findings for one check.
pub(crate) struct ReportBuilder {
    id: String,
    params: BTreeMap<String, serde_json::Value>,
    expected: BTreeSet<ExceptionKey>,
    found: Vec<Exception>,
    informational: Vec<Exception>,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(id: &str) -> Self {
        ReportBuilder {
            id: id.to_string(),
            params: BTreeMap::new(),
            expected: BTreeSet::new(),
            found: Vec::new(),
            informational: Vec::new(),
            started: Instant::now(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("parameter serializes"),
        );
        self
    }

    pub(crate) fn expect(&mut self, claim: &str, m: Option<i64>, n: usize) {
        self.expected.insert(ExceptionKey {
            claim: claim.to_string(),
            m,
            n,
        });
    }

    pub(crate) fn found(
        &mut self,
        claim: &str,
        m: Option<i64>,
        n: usize,
        lhs: &BigInt,
        rhs: &BigInt,
    ) {
        self.found.push(exception(claim, m, n, lhs, rhs));
    }

    pub(crate) fn info(
        &mut self,
        claim: &str,
        m: Option<i64>,
        n: usize,
        lhs: &BigInt,
        rhs: &BigInt,
    ) {
        self.informational.push(exception(claim, m, n, lhs, rhs));
    }

    /// Compares `lhs` against `rhs` (or against zero for sign modes).
    pub(crate) fn compare(
        &mut self,
        claim: &str,
        lhs: &TruncSeries,
        rhs: Option<&TruncSeries>,
        mode: Comparison,
    ) -> Result<()> {
        let zero = BigInt::zero();
        match mode {
            Comparison::Exact => {
                let rhs = rhs.expect("exact comparison needs a right-hand side");
                if lhs.order() != rhs.order() {
                    return Err(crate::series::SeriesError::OrderMismatch {
                        left: lhs.order(),
                        right: rhs.order(),
                    }
                    .into());
                }
                for (n, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
                    if a != b {
                        self.found(claim, None, n, a, b);
                    }
                }
            }
            Comparison::NonnegFrom(start) => {
                for (n, a) in lhs.coeffs().iter().enumerate().skip(start) {
                    if a.is_negative() {
                        self.found(claim, None, n, a, &zero);
                    }
                }
            }
            Comparison::NonposFrom(start) => {
                for (n, a) in lhs.coeffs().iter().enumerate().skip(start) {
                    if a.is_positive() {
                        self.found(claim, None, n, a, &zero);
                    }
                }
            }
            Comparison::NonnegExcept(allowed) => {
                for &n in allowed {
                    if n <= lhs.order() {
                        self.expect(claim, None, n);
                    }
                }
                for (n, a) in lhs.coeffs().iter().enumerate() {
                    if a.is_negative() {
                        self.found(claim, None, n, a, &zero);
                    }
                }
            }
            Comparison::VanishBelowThenNonneg(start) => {
                for (n, a) in lhs.coeffs().iter().enumerate() {
                    let bad = if n < start {
                        !a.is_zero()
                    } else {
                        a.is_negative()
                    };
                    if bad {
                        self.found(claim, None, n, a, &zero);
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> CheckReport {
        let found: BTreeSet<ExceptionKey> = self.found.iter().map(Exception::key).collect();
        let verdict = if found == self.expected && found.len() == self.found.len() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckReport {
            check_id: self.id,
            params: self.params,
            verdict,
            exceptions: self.found,
            expected: self.expected.into_iter().collect(),
            informational: self.informational,
            runtime_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn exception(claim: &str, m: Option<i64>, n: usize, lhs: &BigInt, rhs: &BigInt) -> Exception {
    Exception {
        claim: claim.to_string(),
        m,
        n,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// How a catalog claim is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison<'a> {
    /// Coefficient-wise equality of both sides.
    Exact,
    /// Left side nonnegative from the given exponent on.
    NonnegFrom(usize),
    /// Left side nonpositive from the given exponent on.
    NonposFrom(usize),
    /// Left side nonnegative except at exactly these exponents.
    NonnegExcept(&'a [usize]),
    /// Left side zero below the exponent and nonnegative from it on.
    VanishBelowThenNonneg(usize),
}

/// Generating-function tables shared by the checks of one batch. Concurrent
/// requests for the same table wait for a single build.
#[derive(Default)]
pub struct TableCache {
    slots: Mutex<HashMap<(Statistic, usize), Arc<Slot>>>,
}

type Slot = Mutex<Option<Arc<CrankTable>>>;

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// GF-backed table for `statistic` with rows `0..=n_max`.
    pub fn get(&self, statistic: Statistic, n_max: usize) -> Result<Arc<CrankTable>> {
        let slot = Arc::clone(
            self.slots
                .lock()
                .expect("cache lock")
                .entry((statistic, n_max))
                .or_default(),
        );
        let mut slot = slot.lock().expect("slot lock");
        if let Some(t) = slot.as_ref() {
            return Ok(Arc::clone(t));
        }
        let g = generating_function(statistic, n_max)?;
        let t = Arc::new(CrankTable::from_bivariate(statistic, &g, n_max)?);
        *slot = Some(Arc::clone(&t));
        Ok(t)
    }
}

/// Parameters for a batch of checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Upper `n` for generating-function sweeps.
    pub n_max: usize,
    /// Truncation order for identity checks.
    pub order: usize,
    /// Upper `n` for the enumeration crosschecks (the crank crosscheck uses
    /// `crank_oracle_n_max`).
    pub oracle_n_max: usize,
    pub crank_oracle_n_max: usize,
    /// Upper `n` for the rank inequalities.
    pub rank_n_max: usize,
    /// Color counts for the k-crank sweep.
    pub ks: Vec<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: DEFAULT_SWEEP_N_MAX,
            order: DEFAULT_IDENTITY_ORDER,
            oracle_n_max: DEFAULT_ORACLE_N_MAX,
            crank_oracle_n_max: 40,
            rank_n_max: 40,
            ks: (2..=6).collect(),
        }
    }
}

/// Table sweeps: `(canonical id, accepted aliases)`.
pub const SWEEP_CHECKS: &[(&str, &[&str])] = &[
    ("crank-monotone", &["ji-zang-monotone"]),
    ("crank-unimodal", &["ji-zang-unimodal"]),
    ("gf-oracle-agreement", &["crosscheck"]),
    ("kcrank-unimodal", &["conj-1.8"]),
    ("m2crank-unimodal", &["thm-1.5"]),
    ("ocrank-unimodal", &["thm-1.4"]),
    ("overpartition-monotone", &["thm-1.7"]),
    ("rank-inequalities", &["chan-mao"]),
];

/// Every runnable check id, sweeps first, then the identity catalog.
pub fn all_check_ids() -> Vec<&'static str> {
    SWEEP_CHECKS
        .iter()
        .map(|(id, _)| *id)
        .chain(catalog_ids())
        .collect()
}

/// Maps an id or alias to its canonical id.
pub fn resolve_check_id(id: &str) -> Result<&'static str> {
    let sweep = SWEEP_CHECKS
        .iter()
        .find(|(c, aliases)| *c == id || aliases.contains(&id))
        .map(|(c, _)| *c);
    sweep
        .or_else(|| catalog::resolve(id))
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check by canonical id or alias. The k-crank sweep yields one
/// report per `k`.
pub fn run_check(id: &str, config: &VerifyConfig, cache: &TableCache) -> Result<Vec<CheckReport>> {
    let id = resolve_check_id(id)?;
    let n_max = config.n_max;
    let one = |r: Result<CheckReport>| r.map(|r| vec![r]);
    match id {
        "ocrank-unimodal" => {
            let t = cache.get(Statistic::OverlineCrank, n_max)?;
            one(scans::ocrank_unimodal(&t))
        }
        "m2crank-unimodal" => {
            let t = cache.get(Statistic::M2Crank, n_max)?;
            one(scans::m2crank_unimodal(&t))
        }
        "overpartition-monotone" => {
            let o = cache.get(Statistic::OverlineCrank, n_max)?;
            let m2 = cache.get(Statistic::M2Crank, n_max)?;
            one(scans::overpartition_monotone(&o, &m2))
        }
        "crank-unimodal" => {
            let t = cache.get(Statistic::Crank, n_max)?;
            one(scans::crank_unimodal(&t))
        }
        "crank-monotone" => {
            let t = cache.get(Statistic::Crank, n_max)?;
            one(scans::crank_monotone(&t))
        }
        "rank-inequalities" => one(check_rank_inequalities(config.rank_n_max)),
        "kcrank-unimodal" => config
            .ks
            .par_iter()
            .map(|&k| check_kcrank_unimodal(k, n_max))
            .collect(),
        "gf-oracle-agreement" => {
            scans::gf_oracle_agreement(config.oracle_n_max, config.crank_oracle_n_max)
        }
        _ => one(check_identity(id, config.order, cache)),
    }
}

/// Runs the given checks concurrently; reports come back sorted by check id
/// (ties keep per-check order).
pub fn run_checks(ids: &[&str], config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let cache = TableCache::new();
    let canonical: Vec<&str> = ids
        .iter()
        .map(|id| resolve_check_id(id))
        .collect::<Result<_>>()?;
    let mut batches: Vec<(&str, Vec<CheckReport>)> = canonical
        .par_iter()
        .map(|&id| run_check(id, config, &cache).map(|r| (id, r)))
        .collect::<Result<_>>()?;
    batches.sort_by(|a, b| a.0.cmp(b.0));
    batches.dedup_by(|a, b| a.0 == b.0);
    Ok(batches.into_iter().flat_map(|(_, r)| r).collect())
}
