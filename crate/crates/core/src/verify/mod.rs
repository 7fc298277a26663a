//! Exhaustive verification suites over all small forests.
//!
//! Every suite enumerates its inputs in a fixed order, checks each case
//! independently on a worker pool and merges results in enumeration order,
//! so reports do not depend on the number of workers.

mod golden;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::{CoeffError, ForestError};
use crate::forest::Alphabet;
use crate::freemod::{Basis, LinComb, Rational};

pub use golden::{golden_fixtures, Fixture};

pub const SEED_VAR: &str = "FOREST_BIALG_SEED";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Alphabet(#[from] ForestError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub omega: Vec<String>,
    pub xset: Vec<String>,
    pub max_vertices: usize,
    pub eval_lambda: Option<Rational>,
    pub eval_mu: Option<Rational>,
    pub eval_nu: Option<Rational>,
    pub output: Output,
    /// 0 lets the pool pick one worker per core.
    pub workers: usize,
    pub seed: Option<u64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            omega: vec!["a".into(), "b".into()],
            xset: vec!["x".into()],
            max_vertices: 4,
            eval_lambda: None,
            eval_mu: None,
            eval_nu: None,
            output: Output::Text,
            workers: 0,
            seed: None,
        }
    }
}

impl RunConfig {
    pub fn with_alphabet(mut self, omega: &[&str], xset: &[&str]) -> Self {
        self.omega = omega.iter().map(|s| s.to_string()).collect();
        self.xset = xset.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self
    }

    /// Reads the seed from the environment.
    pub fn seed_from_env(mut self) -> Self {
        self.seed = std::env::var(SEED_VAR).ok().and_then(|s| s.parse().ok());
        self
    }

    pub fn alphabet(&self) -> Result<Alphabet, ForestError> {
        Alphabet::new(&self.omega, &self.xset)
    }

    fn has_eval(&self) -> bool {
        self.eval_lambda.is_some() || self.eval_mu.is_some() || self.eval_nu.is_some()
    }

    /// Applies the configured evaluation point, if any.
    pub fn evaluate<B: Basis>(&self, x: &LinComb<B>) -> Result<LinComb<B>, CoeffError> {
        if !self.has_eval() {
            return Ok(x.clone());
        }
        x.try_map_coeffs(|c| {
            c.eval_partial(self.eval_lambda.as_ref(), self.eval_mu.as_ref(), self.eval_nu.as_ref())
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Coassoc,
    Derivation,
    Cocycle,
    Counit,
    RecVsBiideal,
    BiidealCount,
    Duality,
    StarAssoc,
    StarCensus,
    Prelie,
    Jacobi,
    PrelieClosedForm,
    PhiLaws,
    ThetaLaws,
    ExamplesGolden,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Coassoc,
        Suite::Derivation,
        Suite::Cocycle,
        Suite::Counit,
        Suite::RecVsBiideal,
        Suite::BiidealCount,
        Suite::Duality,
        Suite::StarAssoc,
        Suite::StarCensus,
        Suite::Prelie,
        Suite::Jacobi,
        Suite::PrelieClosedForm,
        Suite::PhiLaws,
        Suite::ThetaLaws,
        Suite::ExamplesGolden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coassoc => "coassoc",
            Suite::Derivation => "derivation",
            Suite::Cocycle => "cocycle",
            Suite::Counit => "counit",
            Suite::RecVsBiideal => "rec-vs-biideal",
            Suite::BiidealCount => "biideal-count",
            Suite::Duality => "duality",
            Suite::StarAssoc => "star-assoc",
            Suite::StarCensus => "star-census",
            Suite::Prelie => "prelie",
            Suite::Jacobi => "jacobi",
            Suite::PrelieClosedForm => "prelie-closed-form",
            Suite::PhiLaws => "phi-laws",
            Suite::ThetaLaws => "theta-laws",
            Suite::ExamplesGolden => "examples-golden",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// One failed case: its inputs and both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({"check": self.check, "inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs})
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub wall: Duration,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "cases": self.cases,
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "ok": self.ok(),
            "notes": self.notes,
            "wall_ms": self.wall.as_millis() as u64,
        })
    }

    /// Text form without the wall time.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite {}: {} cases, {} failures: {}\n",
            self.suite,
            self.cases,
            self.failures.len(),
            if self.ok() { "PASS" } else { "FAIL" }
        );
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        if let Some(first) = self.failures.first() {
            out.push_str(&format!(
                "smallest counterexample ({}): {}\nlhs:\n{}\nrhs:\n{}\n",
                first.check,
                first.inputs.join(" | "),
                first.lhs,
                first.rhs
            ));
        }
        out
    }
}

/// Cases and failures gathered by a suite.
#[derive(Default)]
pub(crate) struct Tally {
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Tally {
    /// Checks every item in parallel, keeping failures in input order.
    pub fn run<T: Sync>(
        &mut self,
        items: &[T],
        check: impl Fn(&T) -> Result<Option<Failure>, CoeffError> + Sync + Send,
    ) -> Result<(), CoeffError> {
        let results: Vec<_> = items.par_iter().map(check).collect();
        self.cases += items.len();
        for r in results {
            if let Some(f) = r? {
                self.failures.push(f);
            }
        }
        Ok(())
    }
}

/// Compares two combinations after evaluation, producing a failure on mismatch.
pub(crate) fn compare<B: Basis>(
    cfg: &RunConfig,
    check: &str,
    inputs: Vec<String>,
    lhs: &LinComb<B>,
    rhs: &LinComb<B>,
) -> Result<Option<Failure>, CoeffError> {
    let l = cfg.evaluate(lhs)?;
    let r = cfg.evaluate(rhs)?;
    if l == r {
        return Ok(None);
    }
    Ok(Some(Failure {
        check: check.to_string(),
        inputs,
        lhs: l.to_string(),
        rhs: r.to_string(),
    }))
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<SuiteReport, VerifyError> {
    let alphabet = cfg.alphabet()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if cfg.workers > 0 {
        builder = builder.num_threads(cfg.workers);
    }
    let pool = builder.build().map_err(|e| VerifyError::Pool(e.to_string()))?;
    let start = Instant::now();
    let tally = pool.install(|| suites::dispatch(suite, cfg, &alphabet))?;
    Ok(SuiteReport {
        suite,
        cases: tally.cases,
        failures: tally.failures,
        notes: tally.notes,
        wall: start.elapsed(),
    })
}
