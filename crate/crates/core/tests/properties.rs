//! Randomized algebraic invariants. Each proptest case draws a seed and
//! builds its inputs from the seeded generators in `common`.

mod common;

use lsdgla::expr::{expand_raw, parse_element};
use lsdgla::flow::{exp_ad_trajectory, phi_trajectory};
use lsdgla::rational::{int, ratio};
use lsdgla::serialize::{element_from_json, element_to_json};
use lsdgla::{
    assoc_expand, bernoulli_upto, bracket, flow_closed_form, ls_differential, normalize,
    Derivation, FlowProblem, LieElement, Rational, RationalTime, TruncationContext,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

use common::TestRng;

fn ctx(n: usize) -> TruncationContext {
    TruncationContext::interval(n).unwrap()
}

fn sign(p: i64, q: i64) -> Rational {
    if p.rem_euclid(2) == 1 && q.rem_euclid(2) == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

fn br(x: &LieElement, y: &LieElement) -> LieElement {
    bracket(x, y).unwrap()
}

/// A random homogeneous element of a random degree in `-3..=0`, together
/// with that degree.
fn random_graded(rng: &mut TestRng, c: &TruncationContext) -> (LieElement, i64) {
    let d = rng.gen_range(-3..=0);
    (common::random_homogeneous(rng, c, d, c.max_length(), 4), d)
}

fn random_time(rng: &mut TestRng) -> RationalTime {
    RationalTime(ratio(rng.gen_range(-4..=4), rng.gen_range(1..=5)))
}

fn random_derivation(rng: &mut TestRng, c: &TruncationContext, shift: i64) -> Derivation {
    let values: Vec<(&str, LieElement)> = [("a", -1), ("b", -1), ("e", 0)]
        .into_iter()
        .map(|(g, d)| (g, common::random_homogeneous(rng, c, d + shift, 3, 3)))
        .collect();
    Derivation::new(c, shift, values).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_expands_like_the_raw_expression(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let t = common::random_expr(&mut rng, 6, 4);
        let nf = normalize(&t, &c).unwrap();
        prop_assert_eq!(assoc_expand(&nf), expand_raw(&t, c.alphabet(), 6).unwrap());
    }

    #[test]
    fn rewriting_by_the_axioms_keeps_the_normal_form(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let t = common::random_expr(&mut rng, 6, 3);
        let s = common::random_rewrite(&mut rng, &t, c.alphabet());
        prop_assert_eq!(normalize(&s, &c).unwrap(), normalize(&t, &c).unwrap());
    }

    #[test]
    fn truncation_commutes_with_normalization(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let big = ctx(7);
        let small = ctx(rng.gen_range(1..=6));
        let t = common::random_expr(&mut rng, 7, 4);
        let cut = normalize(&t, &big).unwrap().retruncate(&small).unwrap();
        prop_assert_eq!(cut, normalize(&t, &small).unwrap());
    }

    #[test]
    fn graded_antisymmetry(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(7);
        let (x, p) = random_graded(&mut rng, &c);
        let (y, q) = random_graded(&mut rng, &c);
        prop_assert_eq!(br(&x, &y), -(&sign(p, q) * &br(&y, &x)));
    }

    #[test]
    fn graded_jacobi(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(7);
        let (x, p) = random_graded(&mut rng, &c);
        let (y, q) = random_graded(&mut rng, &c);
        let (z, _) = random_graded(&mut rng, &c);
        let lhs = br(&x, &br(&y, &z));
        let rhs = &br(&br(&x, &y), &z) + &(&sign(p, q) * &br(&y, &br(&x, &z)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_adds_degrees_and_lengths(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(7);
        let (x, p) = random_graded(&mut rng, &c);
        let (y, q) = random_graded(&mut rng, &c);
        let xy = br(&x, &y);
        prop_assert!(xy.is_homogeneous_of(p + q));
        if let (Some(lx), Some(ly), Some(l)) = (x.min_length(), y.min_length(), xy.min_length()) {
            prop_assert!(l >= lx + ly);
        }
        prop_assert!(xy.max_length().unwrap_or(0) <= 7);
    }

    #[test]
    fn derivations_satisfy_leibniz(seed in any::<u64>(), shift in -1i64..=1) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let d = random_derivation(&mut rng, &c, shift);
        let (x, p) = random_graded(&mut rng, &c);
        let (y, _) = random_graded(&mut rng, &c);
        let lhs = d.apply(&br(&x, &y)).unwrap();
        let rhs = &br(&d.apply(&x).unwrap(), &y)
            + &(&sign(shift, p) * &br(&x, &d.apply(&y).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(rng.gen_range(1..=7));
        let d = ls_differential(&c).unwrap();
        let x = common::random_expr(&mut rng, c.max_length(), 4);
        let x = normalize(&x, &c).unwrap();
        prop_assert!(d.apply(&d.apply(&x).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn differential_shifts_degree_by_its_shift(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let d = ls_differential(&c).unwrap();
        let (x, p) = random_graded(&mut rng, &c);
        prop_assert_eq!(d.degree_shift(), -1);
        prop_assert!(d.apply(&x).unwrap().is_homogeneous_of(p - 1));
    }

    #[test]
    fn differential_intertwines_adjoint_action(seed in any::<u64>()) {
        // ∂ ∘ ad_v − ad_v ∘ ∂ = ad_{∂v} for v of degree 0
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let d = ls_differential(&c).unwrap();
        let v = common::random_homogeneous(&mut rng, &c, 0, 3, 2);
        let (x, _) = random_graded(&mut rng, &c);
        let lhs = &d.apply(&br(&v, &x)).unwrap() - &br(&v, &d.apply(&x).unwrap());
        prop_assert_eq!(lhs, br(&d.apply(&v).unwrap(), &x));
    }

    #[test]
    fn exp_ad_is_a_one_parameter_group(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let v = common::random_homogeneous(&mut rng, &c, 0, 3, 2);
        let (x, _) = random_graded(&mut rng, &c);
        let (s, t) = (random_time(&mut rng), random_time(&mut rng));
        let st = RationalTime(s.value() + t.value());
        let once = exp_ad_trajectory(&v, &x).unwrap().at(&st);
        let inner = exp_ad_trajectory(&v, &x).unwrap().at(&t);
        let twice = exp_ad_trajectory(&v, &inner).unwrap().at(&s);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn exp_ad_solves_its_ode(seed in any::<u64>()) {
        // d/dt e^{−t ad_v} x = −ad_v e^{−t ad_v} x, checked coefficientwise
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let v = common::random_homogeneous(&mut rng, &c, 0, 3, 2);
        let (x, _) = random_graded(&mut rng, &c);
        let traj = exp_ad_trajectory(&v, &x).unwrap();
        let rhs = traj.map(|y| Ok(-bracket(&v, y)?)).unwrap();
        prop_assert_eq!(traj.derivative(), rhs);
    }

    #[test]
    fn phi_differentiates_to_exp_ad(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let v = common::random_homogeneous(&mut rng, &c, 0, 3, 2);
        let (x, _) = random_graded(&mut rng, &c);
        let phi = phi_trajectory(&v, &x).unwrap();
        prop_assert_eq!(phi.derivative(), exp_ad_trajectory(&v, &x).unwrap());
        prop_assert!(phi.at(&RationalTime(int(0))).is_zero());
    }

    #[test]
    fn gauge_flow_composes(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let d = ls_differential(&c).unwrap();
        let v = common::random_homogeneous(&mut rng, &c, 0, 3, 2);
        let u0 = common::random_homogeneous(&mut rng, &c, -1, 3, 3);
        let (s, t) = (random_time(&mut rng), random_time(&mut rng));
        let p = FlowProblem::new(v.clone(), u0, d.clone()).unwrap();
        let us = flow_closed_form(&p, &s).unwrap();
        let q = FlowProblem::new(v, us, d).unwrap();
        let st = RationalTime(s.value() + t.value());
        prop_assert_eq!(flow_closed_form(&q, &t).unwrap(), flow_closed_form(&p, &st).unwrap());
    }

    #[test]
    fn display_round_trips(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let x = normalize(&common::random_expr(&mut rng, 6, 5), &c).unwrap();
        prop_assert_eq!(parse_element(&x.to_string(), &c).unwrap(), x);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = ctx(6);
        let x = normalize(&common::random_expr(&mut rng, 6, 5), &c).unwrap();
        let text = serde_json::to_string(&element_to_json(&x)).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(element_from_json(&back, &c).unwrap(), x);
    }
}

#[test]
fn bernoulli_generating_function_inverts_the_exponential_quotient() {
    // (Σ Bᵢ xⁱ/i!) · (Σ xʲ/(j+1)!) = 1 as power series, through x^40
    let n = 40;
    let b = bernoulli_upto(n);
    let fact = |k: usize| Rational::from_integer((1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i)));
    for m in 0..=n {
        let s: Rational = (0..=m).map(|i| &b[i] / fact(i) / fact(m - i + 1)).sum();
        assert_eq!(s, if m == 0 { Rational::one() } else { Rational::zero() }, "x^{m}");
    }
}
