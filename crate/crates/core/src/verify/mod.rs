//! Seeded randomized checks of the algebraic identities, grouped in suites.

mod ci;
mod lefschetz;
mod ring;
mod tractor;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use ci::ci_suite;
pub use lefschetz::lefschetz_suite;
pub use ring::ring_suite;
pub use tractor::tractor_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lefschetz,
    Tractor,
    Ring,
    Ci,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lefschetz" => Ok(Suite::Lefschetz),
            "tractor" => Ok(Suite::Tractor),
            "ring" => Ok(Suite::Ring),
            "ci" => Ok(Suite::Ci),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl IdentityResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: Vec<u32>,
    pub seed: u64,
    pub trials: u64,
    pub identities: Vec<IdentityResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(IdentityResult::ok)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }

    /// One line per identity: `name: pass (k checks)` or `name: FAIL ...`.
    pub fn summary(&self) -> String {
        self.identities
            .iter()
            .map(|r| {
                if r.ok() {
                    format!("{}: pass ({} checks)", r.name, r.passed)
                } else {
                    format!(
                        "{}: FAIL ({} of {} failed); first counterexample: {}",
                        r.name,
                        r.failed,
                        r.passed + r.failed,
                        r.first_counterexample.as_deref().unwrap_or("-")
                    )
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Accumulates pass/fail counts per identity, keeping insertion order.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    order: Vec<String>,
    results: BTreeMap<String, IdentityResult>,
}

impl Tally {
    pub(crate) fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let entry = self.results.entry(name.to_string()).or_insert_with(|| {
            self.order.push(name.to_string());
            IdentityResult { name: name.to_string(), passed: 0, failed: 0, first_counterexample: None }
        });
        if ok {
            entry.passed += 1;
        } else {
            entry.failed += 1;
            if entry.first_counterexample.is_none() {
                entry.first_counterexample = Some(detail());
            }
        }
    }

    pub(crate) fn finish(mut self, suite: &str, n: Vec<u32>, seed: u64, trials: u64) -> SuiteReport {
        let identities = self.order.iter().map(|k| self.results.remove(k).unwrap()).collect();
        SuiteReport { suite: suite.to_string(), n, seed, trials, identities }
    }
}

pub(crate) fn fmt_matrix(m: &[Vec<crate::arith::CRat>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| format!("[{}]", row.iter().map(crate::arith::fmt_crat).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Runs one suite, or all of them merged into a single report.
pub fn run_suite(suite: Suite, ns: &[u32], trials: u64, seed: u64) -> SuiteReport {
    match suite {
        Suite::Lefschetz => lefschetz_suite(ns, trials, seed),
        Suite::Tractor => tractor_suite(ns, trials, seed),
        Suite::Ring => ring_suite(trials, seed),
        Suite::Ci => ci_suite(ns, trials, seed),
        Suite::All => {
            let parts = [
                ring_suite(trials, seed),
                ci_suite(ns, trials, seed),
                lefschetz_suite(ns, trials, seed),
                tractor_suite(ns, trials, seed),
            ];
            let mut identities = Vec::new();
            for p in parts {
                identities.extend(p.identities.into_iter().map(|mut r| {
                    r.name = format!("{}/{}", p.suite, r.name);
                    r
                }));
            }
            SuiteReport { suite: "all".into(), n: ns.to_vec(), seed, trials, identities }
        }
    }
}
