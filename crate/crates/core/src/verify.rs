//! The full battery of identities for the interval differential at one
//! truncation: `∂² = 0` on generators, flatness of the endpoints, the flow
//! endpoint, the flow ODE, curvature along the flow, and preservation of
//! flatness under flows by other degree 0 elements.

use serde_json::{json, Value};

use crate::alphabet::TruncationContext;
use crate::bernoulli::BernoulliTable;
use crate::derivation::{check_square_zero, curvature, ls_differential_with, Derivation};
use crate::element::LieElement;
use crate::error::Result;
use crate::flow::{sample_times, FlowProblem};
use crate::rational::{int, ratio, Rational};
use crate::serialize::element_to_json;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    /// The element that must vanish.
    pub residual: LieElement,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub max_length: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.passed(),
                    "residual": element_to_json(&c.residual),
                })
            })
            .collect();
        json!({
            "max_length": self.max_length,
            "all_pass": self.all_passed(),
            "checks": checks,
        })
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed() {
                out.push_str(&format!("PASS {}\n", c.name));
            } else {
                out.push_str(&format!("FAIL {}: residual {}\n", c.name, c.residual));
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} of {} checks passed at N = {}\n",
            self.checks.len() - failed,
            self.checks.len(),
            self.max_length
        ));
        out
    }
}

/// Scalars `c` for the flatness-preservation flows by `c·e`.
fn preservation_scalars() -> Vec<Rational> {
    vec![int(1), int(-1), int(2), ratio(1, 2), ratio(-3, 7)]
}

/// Runs every check with the given series coefficients (the true Bernoulli
/// numbers unless a negative control is wanted).
pub fn run_verification(
    ctx: &TruncationContext,
    coefficients: &BernoulliTable,
) -> Result<VerificationReport> {
    let d = ls_differential_with(ctx, coefficients)?;
    let mut checks = Vec::new();

    for entry in check_square_zero(&d)? {
        checks.push(CheckResult {
            name: format!("square_zero[{}]", entry.generator),
            residual: entry.residual,
        });
    }

    let a = LieElement::generator(ctx, "a")?;
    let b = LieElement::generator(ctx, "b")?;
    let e = LieElement::generator(ctx, "e")?;
    for (name, x) in [("a", &a), ("b", &b)] {
        checks.push(CheckResult {
            name: format!("flat[{name}]"),
            residual: curvature(&d, x)?,
        });
    }

    let p = FlowProblem::new(e.clone(), a.clone(), d.clone())?;
    let traj = p.trajectory()?;
    let one = crate::flow::RationalTime(int(1));
    checks.push(CheckResult {
        name: "flow_endpoint[e: a -> b]".into(),
        residual: traj.at(&one).checked_sub(&b)?,
    });
    for t in sample_times() {
        checks.push(CheckResult {
            name: format!("flow_residual[t={t}]"),
            residual: p.residual_of(&traj, &t)?,
        });
    }
    for t in sample_times() {
        checks.push(CheckResult {
            name: format!("curvature_along_flow[t={t}]"),
            residual: curvature(&d, &traj.at(&t))?,
        });
    }

    for c in preservation_scalars() {
        let v = e.scale(&c);
        for (name, u0) in [("a", &a), ("b", &b)] {
            checks.push(CheckResult {
                name: format!("flatness_preserved[v={v}, u0={name}]"),
                residual: preserved_curvature(&d, &v, u0)?,
            });
        }
    }

    Ok(VerificationReport {
        max_length: ctx.max_length(),
        checks,
    })
}

/// Curvature at `t = 1` of the flow by `v` started at `u0`.
pub fn preserved_curvature(d: &Derivation, v: &LieElement, u0: &LieElement) -> Result<LieElement> {
    let p = FlowProblem::new(v.clone(), u0.clone(), d.clone())?;
    let t = crate::flow::RationalTime(int(1));
    curvature(d, &p.trajectory()?.at(&t))
}
