//! Exact computer algebra for the free differential graded Lie algebra of
//! the unit interval.
//!
//! The algebra is free on two degree −1 generators `a`, `b` (the endpoints)
//! and one degree 0 generator `e` (the edge). All arithmetic is over ℚ and
//! happens in the quotient by brackets of word length greater than a fixed
//! cutoff `N`, where every formal series becomes a finite sum.
//!
//! Layout:
//!
//! * [`alphabet`], [`lyndon`], [`monomial`], [`element`], [`bracket`]:
//!   the free graded Lie algebra in the super-Lyndon basis.
//! * [`assoc`]: expansion into the free associative algebra, used as an
//!   independent equality check.
//! * [`expr`], [`serialize`]: expression grammar and the JSON element format.
//! * [`bernoulli`]: exact Bernoulli numbers.
//! * [`derivation`]: graded derivations and the interval differential.
//! * [`flow`]: gauge flows `du/dt = ∂v − ad_v(u)` in closed form.
//! * [`verify`], [`export`]: the aggregate checks and structure-constant
//!   table used by the command-line tool.

pub mod alphabet;
pub mod assoc;
pub mod basis;
pub mod bernoulli;
pub mod bracket;
pub mod derivation;
pub mod element;
pub mod error;
pub mod export;
pub mod expr;
pub mod flow;
pub mod lyndon;
pub mod monomial;
pub mod rational;
pub mod serialize;
pub mod verify;

pub use alphabet::{Alphabet, GradedGenerator, TruncationContext};
pub use assoc::{assoc_expand, NcPolynomial};
pub use basis::basis_enumerate;
pub use bernoulli::{bernoulli_upto, BernoulliTable};
pub use bracket::{ad_power, bracket};
pub use derivation::{
    check_square_zero, curvature, is_flat, ls_differential, ls_differential_with, Derivation,
    SquareZeroEntry,
};
pub use element::LieElement;
pub use error::{Error, Result};
pub use expr::{normalize, parse_expr, RawExpr};
pub use flow::{
    curvature_along_flow, exp_ad, flow_closed_form, flow_residual, phi_series, FlowProblem,
    RationalTime, Trajectory,
};
pub use monomial::{LieMonomial, Tree};
pub use rational::Rational;
