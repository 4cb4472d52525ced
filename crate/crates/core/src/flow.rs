//! Gauge flows `du/dt = ∂v − ad_v(u)` generated by degree 0 elements.
//!
//! Since `ad_v` raises word length, the flow is polynomial in `t` in the
//! truncated algebra. Trajectories are stored as their coefficient lists
//! `u(t) = Σ tᵏ cₖ`, differentiated formally and evaluated exactly at
//! rational times.
//!
//! The closed form is
//!
//! ```text
//! u(t) = e^{−t ad_v} u₀ + Σ_{n≥1} (tⁿ/n!) (−ad_v)^{n−1} ∂v
//! ```
//!
//! where the second sum is the series of `(e^{−t ad_v} − 1)/(−ad_v)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::alphabet::TruncationContext;
use crate::bracket::bracket;
use crate::derivation::{curvature, Derivation};
use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_human, Rational};

/// A flow time. Any rational is allowed; `[0, 1]` is the interesting range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalTime(pub Rational);

impl RationalTime {
    pub fn new(t: Rational) -> Self {
        RationalTime(t)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl From<Rational> for RationalTime {
    fn from(t: Rational) -> Self {
        RationalTime(t)
    }
}

impl FromStr for RationalTime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(RationalTime)
    }
}

impl fmt::Display for RationalTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_human(&self.0))
    }
}

/// A polynomial in `t` with Lie algebra coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    coeffs: Vec<LieElement>,
    ctx: TruncationContext,
}

impl Trajectory {
    fn from_coeffs(ctx: &TruncationContext, mut coeffs: Vec<LieElement>) -> Self {
        while coeffs.last().is_some_and(LieElement::is_zero) {
            coeffs.pop();
        }
        Trajectory {
            coeffs,
            ctx: ctx.clone(),
        }
    }

    pub fn zero(ctx: &TruncationContext) -> Trajectory {
        Trajectory::from_coeffs(ctx, Vec::new())
    }

    pub fn constant(x: &LieElement) -> Trajectory {
        Trajectory::from_coeffs(x.context(), vec![x.clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `cₖ` for `k = 0 ..= degree`.
    pub fn coefficients(&self) -> &[LieElement] {
        &self.coeffs
    }

    /// Degree in `t`, `None` for the zero trajectory.
    pub fn time_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn at(&self, t: &RationalTime) -> LieElement {
        let mut out = LieElement::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            out = out.scale(t.value());
            out.add_scaled(c, &Rational::one());
        }
        out
    }

    /// Formal `d/dt`.
    pub fn derivative(&self) -> Trajectory {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer(BigInt::from(k))))
            .collect();
        Trajectory::from_coeffs(&self.ctx, coeffs)
    }

    /// Applies a linear map coefficientwise.
    pub fn map(&self, f: impl Fn(&LieElement) -> Result<LieElement>) -> Result<Trajectory> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Trajectory::from_coeffs(&self.ctx, coeffs))
    }

    pub fn checked_add(&self, other: &Trajectory) -> Result<Trajectory> {
        self.ctx.ensure_same(&other.ctx)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = LieElement::zero(&self.ctx);
        let coeffs = (0..n)
            .map(|k| {
                let x = self.coeffs.get(k).unwrap_or(&zero);
                let y = other.coeffs.get(k).unwrap_or(&zero);
                x + y
            })
            .collect();
        Ok(Trajectory::from_coeffs(&self.ctx, coeffs))
    }
}

fn require_flow_generator(v: &LieElement, x: &LieElement) -> Result<()> {
    v.context().ensure_same(x.context())?;
    v.require_degree(0)
}

/// `Σ_{k≥0} cₖ (−ad_v)^{k−shift} x`, pushing `scale(k)·(−ad_v)^j x` into
/// slot `k = j + shift`, until the powers vanish.
fn ad_series(
    v: &LieElement,
    x: &LieElement,
    shift: usize,
    scale: impl Fn(usize) -> Rational,
) -> Result<Trajectory> {
    let ctx = x.context();
    let mut coeffs = vec![LieElement::zero(ctx); shift];
    let mut power = x.clone();
    let mut j = 0;
    // ad_v raises length by at least one, so at most N + 1 nonzero powers
    while !power.is_zero() && j <= ctx.max_length() {
        coeffs.push(power.scale(&scale(j + shift)));
        power = -bracket(v, &power)?;
        j += 1;
    }
    Ok(Trajectory::from_coeffs(ctx, coeffs))
}

fn inv_factorial(k: usize) -> Rational {
    let f = (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    Rational::new(BigInt::one(), f)
}

/// `t ↦ e^{−t ad_v} x` as a polynomial in `t`.
pub fn exp_ad_trajectory(v: &LieElement, x: &LieElement) -> Result<Trajectory> {
    require_flow_generator(v, x)?;
    ad_series(v, x, 0, inv_factorial)
}

/// `e^{−t ad_v} x = Σ_k ((−t)^k/k!) ad_vᵏ x`.
pub fn exp_ad(v: &LieElement, t: &RationalTime, x: &LieElement) -> Result<LieElement> {
    Ok(exp_ad_trajectory(v, x)?.at(t))
}

/// `t ↦ ((e^{−t ad_v} − 1)/(−ad_v)) x = Σ_{n≥1} (tⁿ/n!) (−ad_v)^{n−1} x`.
pub fn phi_trajectory(v: &LieElement, x: &LieElement) -> Result<Trajectory> {
    require_flow_generator(v, x)?;
    ad_series(v, x, 1, inv_factorial)
}

pub fn phi_series(v: &LieElement, t: &RationalTime, x: &LieElement) -> Result<LieElement> {
    Ok(phi_trajectory(v, x)?.at(t))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowProblem {
    generator_v: LieElement,
    initial_u0: LieElement,
    differential: Derivation,
}

impl FlowProblem {
    /// `v` must be homogeneous of degree 0 and `u₀` of degree −1 (zero is
    /// allowed for either).
    pub fn new(v: LieElement, u0: LieElement, differential: Derivation) -> Result<Self> {
        v.context().ensure_same(u0.context())?;
        v.context().ensure_same(differential.context())?;
        v.require_degree(0)?;
        u0.require_degree(-1)?;
        Ok(FlowProblem {
            generator_v: v,
            initial_u0: u0,
            differential,
        })
    }

    pub fn generator(&self) -> &LieElement {
        &self.generator_v
    }

    pub fn initial(&self) -> &LieElement {
        &self.initial_u0
    }

    pub fn differential(&self) -> &Derivation {
        &self.differential
    }

    pub fn context(&self) -> &TruncationContext {
        self.generator_v.context()
    }

    /// The closed-form solution as a polynomial in `t`.
    pub fn trajectory(&self) -> Result<Trajectory> {
        let v = &self.generator_v;
        let dv = self.differential.apply(v)?;
        exp_ad_trajectory(v, &self.initial_u0)?.checked_add(&phi_trajectory(v, &dv)?)
    }

    /// `du/dt − (∂v − ad_v u)` at time `t` for an arbitrary trajectory `u`,
    /// using this problem's `v` and `∂`.
    pub fn residual_of(&self, u: &Trajectory, t: &RationalTime) -> Result<LieElement> {
        let v = &self.generator_v;
        let ut = u.at(t);
        let mut out = u.derivative().at(t);
        out = out.checked_sub(&self.differential.apply(v)?)?;
        out = out.checked_add(&bracket(v, &ut)?)?;
        Ok(out)
    }
}

pub fn flow_closed_form(p: &FlowProblem, t: &RationalTime) -> Result<LieElement> {
    Ok(p.trajectory()?.at(t))
}

pub fn flow_residual(p: &FlowProblem, t: &RationalTime) -> Result<LieElement> {
    p.residual_of(&p.trajectory()?, t)
}

pub fn curvature_along_flow(p: &FlowProblem, t: &RationalTime) -> Result<LieElement> {
    curvature(p.differential(), &flow_closed_form(p, t)?)
}

/// The sample times used by the verification checks.
pub fn sample_times() -> Vec<RationalTime> {
    [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]
        .into_iter()
        .map(|(p, q)| RationalTime(crate::rational::ratio(p, q)))
        .collect()
}
