//! Exhaustive verification of the theorem catalogue over a size budget.

pub mod checks;
pub mod enumerate;
pub mod oracle;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};

pub use checks::{run_checks, Analysis, TheoremCheck, Verdict, CATALOGUE};
pub use enumerate::{enumerate, EnumerationBudget};
pub use oracle::{cross_validate, Mismatch};

pub const DEFAULT_SEED: u64 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: EnumerationBudget,
    /// Check ids to run; `None` runs the whole catalogue.
    pub theorems: Option<Vec<String>>,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub seed: u64,
    /// Number of random algebras checked on top of the enumeration.
    pub spot: usize,
    pub timing: bool,
}

impl VerifyOptions {
    pub fn new(budget: EnumerationBudget) -> Self {
        VerifyOptions {
            budget,
            theorems: None,
            jobs: 0,
            seed: DEFAULT_SEED,
            spot: 0,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub kind: Kind,
    pub kupisch: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub statement: String,
    pub checked: usize,
    pub vacuous: usize,
    pub violations: Vec<ViolationRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotSummary {
    pub seed: u64,
    pub count: usize,
    pub violations: Vec<(String, ViolationRecord)>,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub budget: EnumerationBudget,
    pub enumerated: usize,
    pub theorems: BTreeMap<String, TheoremSummary>,
    pub oracles: OracleSummary,
    /// Counts outside the stated hypotheses, recorded but never asserted.
    pub observations: BTreeMap<String, BTreeMap<String, usize>>,
    pub spot: SpotSummary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u128>,
}

impl VerificationReport {
    pub fn violation_count(&self) -> usize {
        self.theorems
            .values()
            .map(|t| t.violations.len())
            .sum::<usize>()
            + self.spot.violations.len()
    }

    pub fn mismatch_count(&self) -> usize {
        self.oracles.mismatches.len() + self.spot.mismatches.len()
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count() == 0 && self.mismatch_count() == 0
    }
}

/// Everything learned about one algebra.
struct Outcome {
    algebra: Algebra,
    verdicts: Vec<(&'static str, Verdict)>,
    mismatches: Vec<Mismatch>,
    observations: Vec<(&'static str, String)>,
}

fn observe(a: &Analysis) -> Vec<(&'static str, String)> {
    let Some(e) = &a.eps else {
        return Vec::new();
    };
    let r = &a.report;
    let mut out = Vec::new();
    if r.findim == 2 {
        let key = if r.gldim.is_finite() {
            "findim-2-finite-gldim"
        } else {
            "findim-2-infinite-gldim"
        };
        out.push((key, format!("epsilon findim {}", e.findim)));
    }
    if r.gorenstein && r.gordim == 2 {
        out.push((
            "gordim-2",
            format!("epsilon self-injective {}", e.self_injective),
        ));
    }
    if r.domdim == 1 || r.domdim == 2 {
        out.push((
            "domdim-1-2",
            format!("domdim {}, epsilon domdim {}", r.domdim, e.domdim),
        ));
    }
    if r.findim == 1 {
        out.push(("findim-1", format!("epsilon findim {}", e.findim)));
    }
    out
}

fn examine(algebra: &Algebra, selected: &[&TheoremCheck]) -> Result<Outcome> {
    let analysis = Analysis::new(algebra)?;
    Ok(Outcome {
        algebra: algebra.clone(),
        verdicts: run_checks(&analysis, selected),
        mismatches: cross_validate(algebra),
        observations: observe(&analysis),
    })
}

fn select(theorems: &Option<Vec<String>>) -> Result<Vec<&'static TheoremCheck>> {
    match theorems {
        None => Ok(CATALOGUE.iter().collect()),
        Some(ids) => ids
            .iter()
            .map(|id| {
                checks::find(id.trim())
                    .ok_or_else(|| Error::Parse(format!("unknown theorem id {id:?}")))
            })
            .collect(),
    }
}

/// A random valid cyclic Kupisch series with at most `max_n` vertices and
/// entries at most `cap`.
pub fn random_cyclic(rng: &mut impl Rng, max_n: usize, cap: usize) -> Algebra {
    loop {
        let n = rng.gen_range(2..=max_n.max(2));
        let mut k = vec![rng.gen_range(2..=cap.max(2))];
        for _ in 1..n {
            let lo = 2.max(k[k.len() - 1] - 1);
            k.push(rng.gen_range(lo..=cap.max(lo)));
        }
        if let Ok(a) = Algebra::cyclic(&k) {
            return a;
        }
    }
}

fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Budget(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn verify(options: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let selected = select(&options.theorems)?;
    let algebras = enumerate(&options.budget)?;

    let outcomes: Vec<Result<Outcome>> = run_pool(options.jobs, || {
        algebras.par_iter().map(|a| examine(a, &selected)).collect()
    })?;

    let mut theorems: BTreeMap<String, TheoremSummary> = selected
        .iter()
        .map(|c| {
            (
                c.id.to_string(),
                TheoremSummary {
                    statement: c.statement.into(),
                    ..Default::default()
                },
            )
        })
        .collect();
    let mut oracles = OracleSummary::default();
    let mut observations: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for outcome in outcomes {
        let o = outcome?;
        for (id, verdict) in o.verdicts {
            let t = theorems.get_mut(id).expect("selected check");
            match verdict {
                Verdict::Vacuous => t.vacuous += 1,
                Verdict::Pass => t.checked += 1,
                Verdict::Violation(detail) => {
                    t.checked += 1;
                    t.violations.push(record(&o.algebra, detail));
                }
            }
        }
        oracles.checked += 1;
        oracles.mismatches.extend(o.mismatches);
        for (key, value) in o.observations {
            *observations
                .entry(key.into())
                .or_default()
                .entry(value)
                .or_default() += 1;
        }
    }
    for t in theorems.values_mut() {
        t.violations.sort();
    }
    oracles.mismatches.sort();

    let spot = spot_check(options, &selected)?;
    Ok(VerificationReport {
        budget: options.budget.clone(),
        enumerated: algebras.len(),
        theorems,
        oracles,
        observations,
        spot,
        elapsed_ms: options.timing.then(|| start.elapsed().as_millis()),
    })
}

fn record(algebra: &Algebra, detail: String) -> ViolationRecord {
    ViolationRecord {
        kind: algebra.kind(),
        kupisch: algebra.kupisch().to_vec(),
        detail,
    }
}

fn spot_check(options: &VerifyOptions, selected: &[&TheoremCheck]) -> Result<SpotSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let b = &options.budget;
    let algebras: Vec<Algebra> = (0..options.spot)
        .map(|_| random_cyclic(&mut rng, b.max_vertices, b.max_length))
        .collect();
    let outcomes: Vec<Result<Outcome>> = run_pool(options.jobs, || {
        algebras.par_iter().map(|a| examine(a, selected)).collect()
    })?;
    let mut spot = SpotSummary {
        seed: options.seed,
        count: algebras.len(),
        ..Default::default()
    };
    for outcome in outcomes {
        let o = outcome?;
        for (id, verdict) in o.verdicts {
            if let Verdict::Violation(detail) = verdict {
                spot.violations
                    .push((id.to_string(), record(&o.algebra, detail)));
            }
        }
        spot.mismatches.extend(o.mismatches);
    }
    spot.violations.sort();
    spot.mismatches.sort();
    Ok(spot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_budget_is_clean_and_accounted() {
        let mut budget = EnumerationBudget::up_to(4);
        budget.max_length = 8;
        let report = verify(&VerifyOptions::new(budget)).unwrap();
        for (id, t) in &report.theorems {
            assert_eq!(t.checked + t.vacuous, report.enumerated, "{id}");
            assert_eq!(t.violations, vec![], "{id}");
        }
        assert_eq!(report.oracles.mismatches, vec![]);
        assert!(report.is_clean());
    }

    #[test]
    fn report_ignores_worker_count() {
        let mut options = VerifyOptions::new(EnumerationBudget::up_to(3));
        options.spot = 10;
        options.jobs = 1;
        let a = serde_json::to_string(&verify(&options).unwrap()).unwrap();
        options.jobs = 3;
        let b = serde_json::to_string(&verify(&options).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_budget_is_an_error() {
        assert!(verify(&VerifyOptions::new(EnumerationBudget::up_to(1))).is_err());
    }

    #[test]
    fn theorem_selection() {
        let mut options = VerifyOptions::new(EnumerationBudget::up_to(2));
        options.theorems = Some(vec!["T1".into(), "t5".into()]);
        let report = verify(&options).unwrap();
        assert_eq!(report.theorems.keys().collect::<Vec<_>>(), ["T1", "T5"]);
        options.theorems = Some(vec!["T0".into()]);
        assert!(verify(&options).is_err());
    }

    #[test]
    fn random_algebras_are_valid_and_seeded() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_cyclic(&mut r1, 5, 9);
            assert!(a.n() <= 5 && a.max_length() <= 9);
            assert_eq!(a, random_cyclic(&mut r2, 5, 9));
        }
    }
}
