//! Numerical checks of the structural properties of an invariant subgroup, bundled as
//! suites for a chosen `(n, G)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_basis, closure_report_with_tol, InvariantBasis};
use crate::error::Result;
use crate::group_ops::{compose, exp_generator, random_invariant_from_basis, UnitaryPath};
use crate::matrix::ComplexMatrix;
use crate::symmetry::{is_invariant, SymmetryGroup};

/// Invariance threshold along connectedness paths.
pub const PATH_TOL: f64 = 1e-8;
/// Endpoint accuracy `‖A(1) − A‖_F`.
pub const PATH_ENDPOINT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Composition,
    Closure,
    CommutingDiagram,
    Path,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Composition, Suite::Closure, Suite::CommutingDiagram, Suite::Path];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Composition => "composition",
            Suite::Closure => "closure",
            Suite::CommutingDiagram => "commuting_diagram",
            Suite::Path => "path",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    pub checks: usize,
    pub max_residual: f64,
    pub threshold: f64,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{:e},{:e}",
            self.suite.name(),
            if self.passed { "PASS" } else { "FAIL" },
            self.checks,
            self.max_residual,
            self.threshold
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Invariance tolerance of sampled unitaries and the closure span residual.
    pub tol: f64,
    pub seed: u64,
    pub composition_pairs: usize,
    pub path_samples: usize,
    pub depth: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { tol: 1e-10, seed: 0, composition_pairs: 20, path_samples: 10, depth: 8 }
    }
}

pub fn run_all(n: usize, group: &SymmetryGroup, config: &VerifyConfig) -> Result<Vec<SuiteResult>> {
    let basis = build_basis(n, group)?;
    Suite::ALL.iter().map(|&s| run_suite(s, &basis, config)).collect()
}

pub fn run_suite(suite: Suite, basis: &InvariantBasis, config: &VerifyConfig) -> Result<SuiteResult> {
    let group = basis.group();
    let defect = |m: &ComplexMatrix| -> Result<f64> { Ok(is_invariant(m, group, f64::INFINITY)?.max_residual) };
    let mut max_residual: f64 = 0.0;
    let mut checks = 0;
    let mut passed = true;
    let threshold;
    match suite {
        Suite::Composition => {
            threshold = 3.0 * config.tol;
            for k in 0..config.composition_pairs as u64 {
                let a = random_invariant_from_basis(basis, config.seed.wrapping_add(2 * k), config.depth)?;
                let b = random_invariant_from_basis(basis, config.seed.wrapping_add(2 * k + 1), config.depth)?;
                passed &= defect(a.matrix())? < config.tol && defect(b.matrix())? < config.tol;
                let r = defect(compose(&a, &b)?.matrix())?;
                max_residual = max_residual.max(r);
                checks += 1;
            }
        }
        Suite::Closure => {
            let report = closure_report_with_tol(basis, config.tol)?;
            threshold = config.tol;
            checks = report.pair_count;
            max_residual = report.max_residual;
        }
        Suite::CommutingDiagram => {
            threshold = config.tol;
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            for h in basis.elements() {
                let alpha = rng.random::<f64>() * 2.0 * std::f64::consts::PI;
                max_residual = max_residual.max(defect(exp_generator(h, alpha)?.matrix())?);
                checks += 1;
            }
        }
        Suite::Path => {
            threshold = PATH_TOL;
            for k in 0..config.path_samples as u64 {
                let a = random_invariant_from_basis(basis, config.seed.wrapping_add(10_000 + k), config.depth)?;
                let path = UnitaryPath::new(&a)?;
                let start = path.at(0.0)?.matrix().distance(&ComplexMatrix::identity(a.dim()))?;
                let end = path.at(1.0)?.matrix().distance(a.matrix())?;
                passed &= start < PATH_ENDPOINT_TOL && end < PATH_ENDPOINT_TOL;
                for step in 0..=10 {
                    max_residual = max_residual.max(defect(path.at(step as f64 / 10.0)?.matrix())?);
                    checks += 1;
                }
            }
        }
    }
    passed &= max_residual < threshold;
    Ok(SuiteResult { suite, passed, checks, max_residual, threshold })
}
