//! Property suites run over seeded random PIPs and fixed golden instances.
//!
//! Every suite compares two independent computations (a direct
//! construction against a formula, or a structural identity) and reports
//! a counterexample on mismatch. Reports are sorted by instance key and
//! then suite name, so the same configuration always renders the same
//! bytes.

mod golden;
mod oracles;
mod suites;

use std::cell::OnceCell;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cubical::{CubicalComplexP, HyperplaneComplex};
use crate::error::{Error, Result};
use crate::pip::{random_pip, Pip};
use crate::simplicial::SimplicialComplex;

pub use golden::{golden_instance, mutate_fixture, BalancedFixture, Golden, GOLDEN_NAMES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { counterexample: String },
    Skip { reason: String },
}

impl Outcome {
    pub fn fail(msg: impl Into<String>) -> Self {
        Outcome::Fail {
            counterexample: msg.into(),
        }
    }

    pub fn skip(msg: impl Into<String>) -> Self {
        Outcome::Skip { reason: msg.into() }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail { .. } => "fail",
            Outcome::Skip { .. } => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: String,
    /// `golden/<name>` or `random/<seed>/<index>/n<size>`.
    pub instance: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub count: usize,
    pub n_max: usize,
    /// Golden instance whose fixture loses its first inconsistency.
    pub mutate: Option<String>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 1,
            count: 100,
            n_max: 8,
            mutate: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub config: CheckConfig,
    pub results: Vec<CheckResult>,
}

impl CheckReport {
    fn count(&self, tag: &str) -> usize {
        self.results.iter().filter(|r| r.outcome.tag() == tag).count()
    }

    pub fn passed(&self) -> usize {
        self.count("pass")
    }

    pub fn failed(&self) -> usize {
        self.count("fail")
    }

    pub fn skipped(&self) -> usize {
        self.count("skip")
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.outcome.is_fail())
    }

    /// Results of one suite.
    pub fn suite<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a CheckResult> + 'a {
        self.results.iter().filter(move |r| r.suite == name)
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                let mut v = json!({ "suite": r.suite, "instance": r.instance, "outcome": r.outcome.tag() });
                match &r.outcome {
                    Outcome::Fail { counterexample } => v["counterexample"] = json!(counterexample),
                    Outcome::Skip { reason } => v["reason"] = json!(reason),
                    Outcome::Pass => {}
                }
                v
            })
            .collect();
        json!({
            "config": {
                "seed": self.config.seed,
                "count": self.config.count,
                "n_max": self.config.n_max,
                "mutate": self.config.mutate,
            },
            "summary": { "pass": self.passed(), "fail": self.failed(), "skip": self.skipped() },
            "results": results,
        })
    }

    /// One line per result, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            match &r.outcome {
                Outcome::Pass => writeln!(out, "PASS {} {}", r.instance, r.suite),
                Outcome::Fail { counterexample } => {
                    writeln!(out, "FAIL {} {}: {}", r.instance, r.suite, counterexample)
                }
                Outcome::Skip { reason } => writeln!(out, "SKIP {} {}: {}", r.instance, r.suite, reason),
            }
            .unwrap();
        }
        writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            self.passed(),
            self.failed(),
            self.skipped()
        )
        .unwrap();
        out
    }
}

/// A PIP under test together with the seed its auxiliary randomness
/// (partners for combinations, relabellings) is drawn from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub key: String,
    pub pip: Pip,
    pub seed: u64,
}

/// `count` random PIPs with sizes uniform in `1..=n_max` and densities
/// drawn per instance.
pub fn random_instances(seed: u64, count: usize, n_max: usize) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = if n_max == 0 { 0 } else { rng.gen_range(1..=n_max) };
            let order = rng.gen_range(0.1..=0.6);
            let incons = rng.gen_range(0.05..=0.6);
            let sub = rng.gen::<u64>();
            Ok(Instance {
                key: format!("random/{seed}/{i:04}/n{n}"),
                pip: random_pip(sub, n, order, incons)?,
                seed: sub,
            })
        })
        .collect()
}

/// Everything the suites share about one instance.
pub(crate) struct Ctx<'a> {
    pub pip: &'a Pip,
    /// The PIP the round trip should reproduce; `pip` unless a golden
    /// fixture says otherwise.
    pub reference: &'a Pip,
    pub delta: SimplicialComplex,
    pub cube: CubicalComplexP,
    pub seed: u64,
    hyperplanes: OnceCell<Result<Vec<HyperplaneComplex>, String>>,
}

impl<'a> Ctx<'a> {
    pub fn new(pip: &'a Pip, reference: &'a Pip, seed: u64) -> Result<Self> {
        Ok(Ctx {
            pip,
            reference,
            delta: SimplicialComplex::crossing_complex(pip)?,
            cube: CubicalComplexP::build(pip)?,
            seed,
            hyperplanes: OnceCell::new(),
        })
    }

    /// Hyperplane complexes, built once and shared between suites.
    pub fn hyperplanes(&self) -> Result<&[HyperplaneComplex], String> {
        self.hyperplanes
            .get_or_init(|| self.cube.hyperplane_complexes().map_err(|e| e.to_string()))
            .as_deref()
            .map_err(Clone::clone)
    }
}

fn run_suites(key: &str, ctx: Result<Ctx>, out: &mut Vec<CheckResult>) {
    let ctx = match ctx {
        Ok(c) => c,
        Err(e) => {
            out.push(CheckResult {
                suite: "build".into(),
                instance: key.into(),
                outcome: Outcome::fail(e.to_string()),
            });
            return;
        }
    };
    for (name, suite) in suites::SUITES {
        if let Some(outcome) = suite(&ctx) {
            out.push(CheckResult {
                suite: (*name).into(),
                instance: key.into(),
                outcome,
            });
        }
    }
}

/// All generic suites on one PIP.
pub fn check_instance(inst: &Instance) -> Vec<CheckResult> {
    let mut out = Vec::new();
    run_suites(&inst.key, Ctx::new(&inst.pip, &inst.pip, inst.seed), &mut out);
    out
}

/// Golden-specific checks plus every generic suite that applies.
pub fn check_golden(name: &str, mutate: bool) -> Result<Vec<CheckResult>> {
    let g = golden_instance(name).ok_or_else(|| Error::Precondition(format!("no golden instance `{name}`")))?;
    let key = if mutate {
        format!("golden/{name}(mutated)")
    } else {
        format!("golden/{name}")
    };
    let pip = if mutate {
        crate::io::parse_pip(&mutate_fixture(g.fixture)?, 0)?
    } else {
        g.fixture_pip()?
    };
    let reference = (g.reference)();
    let mut out = Vec::new();
    for (suite, outcome) in golden::golden_checks(name, &pip, &reference) {
        out.push(CheckResult {
            suite: suite.into(),
            instance: key.clone(),
            outcome,
        });
    }
    run_suites(&key, Ctx::new(&pip, &reference, 0x5eed ^ pip.len() as u64), &mut out);
    Ok(out)
}

/// The balanced-colouring fixture, which is an abstract complex rather
/// than a PIP.
pub fn check_balanced_fixture() -> Vec<CheckResult> {
    golden::balanced_fixture_checks()
        .into_iter()
        .map(|(suite, outcome)| CheckResult {
            suite: suite.into(),
            instance: "golden/balanced_cubical".into(),
            outcome,
        })
        .collect()
}

pub fn run_check(config: &CheckConfig) -> Result<CheckReport> {
    if let Some(name) = &config.mutate {
        if golden_instance(name).is_none() {
            return Err(Error::Precondition(format!("no golden instance `{name}` to mutate")));
        }
    }
    let mut results = Vec::new();
    for name in GOLDEN_NAMES {
        let mutate = config.mutate.as_deref() == Some(*name);
        results.extend(check_golden(name, mutate)?);
    }
    results.extend(check_balanced_fixture());
    for inst in random_instances(config.seed, config.count, config.n_max)? {
        results.extend(check_instance(&inst));
    }
    results.sort_by(|a, b| (&a.instance, &a.suite).cmp(&(&b.instance, &b.suite)));
    Ok(CheckReport {
        config: config.clone(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_instances_are_deterministic() {
        let a = random_instances(7, 20, 6).unwrap();
        let b = random_instances(7, 20, 6).unwrap();
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.key, y.key);
            assert_eq!(x.pip, y.pip);
            assert!(x.pip.len() <= 6 && !x.pip.is_empty());
        }
        assert!(random_instances(7, 3, 0).unwrap().iter().all(|i| i.pip.is_empty()));
    }

    #[test]
    fn small_check_passes_and_is_stable() {
        let config = CheckConfig {
            seed: 3,
            count: 12,
            n_max: 6,
            mutate: None,
        };
        let report = run_check(&config).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        let again = run_check(&config).unwrap();
        assert_eq!(report.to_json().to_string(), again.to_json().to_string());
        assert!(report.to_text().ends_with(&format!("{} passed, 0 failed, {} skipped\n", report.passed(), report.skipped())));
    }

    #[test]
    fn mutated_p7_fails_round_trip() {
        let config = CheckConfig {
            seed: 1,
            count: 0,
            n_max: 1,
            mutate: Some("P7".into()),
        };
        let report = run_check(&config).unwrap();
        let rt: Vec<_> = report.suite("roundtrip").filter(|r| r.outcome.is_fail()).collect();
        assert_eq!(rt.len(), 1);
        assert_eq!(rt[0].instance, "golden/P7(mutated)");
        assert!(run_check(&CheckConfig {
            mutate: Some("nope".into()),
            ..config
        })
        .is_err());
    }
}
