//! Suite runner, expression language and output formats for the `elchi` tool.

pub mod emit;
pub mod expr;
pub mod suites;

use std::path::PathBuf;

use crate::action::{ell_action, lambda_action};
use crate::classical::{classical_oracle, limit_compare, z0_limit, CommutativePoly, LimitReport, Oracle};
use crate::error::{Error, Result};
use crate::funalg::FElement;
use crate::pairing::u_f_pairing;
use crate::qplane::PlaneElement;
use crate::scalar::ParamScalar;
use crate::schrodinger::{angular_state, plane_wave_state, AngularSpec, PlaneWaveSpec};

pub use emit::{emit_json, Format};
pub use expr::{eval_f, eval_u, parse_expression, Expr, Value};
pub use suites::{run, Suite, SuiteResult, Windows};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub windows: Windows,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self { suite, windows: Windows::default(), format: Format::Json, out: None }
    }
}

/// Result of [`run_suite`]: the rendered report and the process exit code.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub results: Vec<SuiteResult>,
    pub rendered: String,
    pub exit_code: i32,
}

/// Runs a suite and renders it; writes the report to `cfg.out` when set.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    cfg.windows.validate()?;
    if cfg.windows.corrupt.is_some() && !cfg.suite.accepts_corruption() {
        return Err(Error::InvalidArgument(format!("suite {} does not take a corrupted coefficient", cfg.suite)));
    }
    let results = run(cfg.suite, &cfg.windows);
    let rendered = emit::render_results(&results, cfg.format);
    if let Some(path) = &cfg.out {
        std::fs::write(path, &rendered).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    }
    let exit_code = if results.iter().all(SuiteResult::pass) { 0 } else { 1 };
    Ok(SuiteOutcome { results, rendered, exit_code })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Lambda,
    Ell,
}

/// `λ(u)f` or `ℓ(u)f` for parsed expressions.
pub fn act(side: Side, element: &str, on: &str) -> Result<FElement> {
    let u = eval_u(element)?;
    let f = eval_f(on)?;
    Ok(match side {
        Side::Lambda => lambda_action(&u, &f),
        Side::Ell => ell_action(&u, &f),
    })
}

pub fn pair(u: &str, f: &str) -> Result<ParamScalar> {
    Ok(u_f_pairing(&eval_u(u)?, &eval_f(f)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StateKind {
    Plane,
    Angular,
}

/// The truncated plane wave (`order` = total degree) or the angular state
/// `φ_r` (`order` = top `ρ` index).
pub fn state(kind: StateKind, order: u32, r: i64) -> PlaneElement {
    match kind {
        StateKind::Plane => plane_wave_state(&PlaneWaveSpec::new(order)),
        StateKind::Angular => angular_state(&AngularSpec::new(r, order)),
    }
}

/// Classical limit of a state through total degree `order`, compared with its oracle.
pub fn limit(kind: StateKind, order: u32, r: i64, max_l: u32) -> Result<(CommutativePoly, LimitReport)> {
    let (st, oracle, name) = match kind {
        StateKind::Plane => (
            plane_wave_state(&PlaneWaveSpec::new(order)),
            Oracle::PlaneWave,
            "z0 limit of psi = exp(-h+ x + h- xbar)".to_string(),
        ),
        StateKind::Angular => (
            angular_state(&AngularSpec::new(r, max_l)),
            Oracle::Bessel(r),
            format!("z0 limit of phi_{r} = Bessel series"),
        ),
    };
    let lim = z0_limit(&st)?.filter(|m| m.a + m.b <= order);
    let rep = limit_compare(&name, &st, &classical_oracle(oracle, order), order);
    Ok((lim, rep))
}
