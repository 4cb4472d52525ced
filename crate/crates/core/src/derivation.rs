//! Graded derivations and the differential of the interval.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::alphabet::TruncationContext;
use crate::bernoulli::{bernoulli_upto, BernoulliTable};
use crate::bracket::{ad_power, bracket};
use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::monomial::{is_odd, LieMonomial};
use crate::rational::{ratio, Rational};

/// A derivation of degree `d`, determined by its values on generators and
/// extended by `D[p,q] = [Dp,q] + (−1)^{d|p|}[p,Dq]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Derivation {
    degree_shift: i64,
    values: Vec<Option<LieElement>>,
    ctx: TruncationContext,
}

impl Derivation {
    /// Each value must be homogeneous of degree `|g| + degree_shift` (or
    /// zero). Generators left out have no value; applying the derivation to
    /// anything that contains them is an error.
    pub fn new<'a>(
        ctx: &TruncationContext,
        degree_shift: i64,
        values: impl IntoIterator<Item = (&'a str, LieElement)>,
    ) -> Result<Self> {
        let al = ctx.alphabet();
        let mut slots: Vec<Option<LieElement>> = vec![None; al.len()];
        for (name, value) in values {
            let g = al
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            ctx.ensure_same(value.context())?;
            value.require_degree(al.degree(g) + degree_shift)?;
            slots[g as usize] = Some(value);
        }
        Ok(Derivation {
            degree_shift,
            values: slots,
            ctx: ctx.clone(),
        })
    }

    pub fn degree_shift(&self) -> i64 {
        self.degree_shift
    }

    pub fn context(&self) -> &TruncationContext {
        &self.ctx
    }

    pub fn value_on(&self, name: &str) -> Option<&LieElement> {
        let g = self.ctx.alphabet().index_of(name)?;
        self.values[g as usize].as_ref()
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        self.ctx.ensure_same(x.context())?;
        let mut memo = HashMap::new();
        let mut out = LieElement::zero(&self.ctx);
        for (m, c) in x.terms() {
            let dm = self.apply_monomial(m, &mut memo)?;
            out.add_scaled(&dm, c);
        }
        Ok(out)
    }

    fn apply_monomial(
        &self,
        m: &LieMonomial,
        memo: &mut HashMap<LieMonomial, LieElement>,
    ) -> Result<LieElement> {
        if let Some(hit) = memo.get(m) {
            return Ok(hit.clone());
        }
        let al = self.ctx.alphabet();
        let value = match m.split(al) {
            None => {
                let g = m.as_generator().expect("unsplittable monomials are letters");
                self.values[g as usize]
                    .clone()
                    .ok_or_else(|| Error::MissingGenerator(al.name(g).to_string()))?
            }
            Some((p, q)) => {
                let dp = self.apply_monomial(&p, memo)?;
                let dq = self.apply_monomial(&q, memo)?;
                let pe = LieElement::monomial(&self.ctx, p.clone(), Rational::one());
                let qe = LieElement::monomial(&self.ctx, q, Rational::one());
                let first = bracket(&dp, &qe)?;
                let second = bracket(&pe, &dq)?;
                if is_odd(self.degree_shift) && p.is_odd() {
                    &first - &second
                } else {
                    &first + &second
                }
            }
        };
        memo.insert(m.clone(), value.clone());
        Ok(value)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The differential with `∂a = −½[a,a]`, `∂b = −½[b,b]` and
/// `∂e = ad_e(b) + Σ_{i<N} (Bᵢ/i!) ad_eⁱ(b − a)`.
pub fn ls_differential(ctx: &TruncationContext) -> Result<Derivation> {
    let table = bernoulli_upto(ctx.max_length().saturating_sub(1));
    ls_differential_with(ctx, &table)
}

/// Same construction with caller-supplied coefficients in place of the
/// Bernoulli numbers. Indices missing from `coefficients` fall back to the
/// true values.
///
/// The alphabet must contain `a:−1`, `b:−1` and `e:0`; any further
/// generators are sent to zero.
pub fn ls_differential_with(
    ctx: &TruncationContext,
    coefficients: &BernoulliTable,
) -> Result<Derivation> {
    let al = ctx.alphabet();
    for (name, degree) in [("a", -1), ("b", -1), ("e", 0)] {
        match al.index_of(name) {
            Some(g) if al.degree(g) == degree => {}
            _ => {
                return Err(Error::InvalidAlphabet(format!(
                    "the interval differential needs generator {name}:{degree}"
                )))
            }
        }
    }
    let n = ctx.max_length();
    let a = LieElement::generator(ctx, "a")?;
    let b = LieElement::generator(ctx, "b")?;
    let e = LieElement::generator(ctx, "e")?;
    let minus_half = ratio(-1, 2);

    let da = bracket(&a, &a)?.scale(&minus_half);
    let db = bracket(&b, &b)?.scale(&minus_half);

    let fallback = bernoulli_upto(n.saturating_sub(1));
    let b_minus_a = &b - &a;
    let mut de = bracket(&e, &b)?;
    let mut power = b_minus_a;
    for i in 0..n {
        if power.is_zero() {
            break;
        }
        let bi = coefficients.get(i).unwrap_or(&fallback[i]);
        let coeff = bi / Rational::from_integer(factorial(i));
        de.add_scaled(&power, &coeff);
        power = ad_power(&e, 1, &power)?;
    }

    let mut values = vec![("a", da), ("b", db), ("e", de)];
    for g in al.generators() {
        if !["a", "b", "e"].contains(&g.name.as_str()) {
            values.push((g.name.as_str(), LieElement::zero(ctx)));
        }
    }
    Derivation::new(ctx, -1, values)
}

/// `Dx + ½[x,x]` for `x` of degree −1.
pub fn curvature(d: &Derivation, x: &LieElement) -> Result<LieElement> {
    x.require_degree(-1)?;
    let mut out = d.apply(x)?;
    out.add_scaled(&bracket(x, x)?, &ratio(1, 2));
    Ok(out)
}

pub fn is_flat(d: &Derivation, x: &LieElement) -> Result<bool> {
    Ok(curvature(d, x)?.is_zero())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquareZeroEntry {
    pub generator: String,
    pub residual: LieElement,
}

impl SquareZeroEntry {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// `D(D(g))` for every generator `g` that has a value.
pub fn check_square_zero(d: &Derivation) -> Result<Vec<SquareZeroEntry>> {
    let ctx = d.context();
    let mut out = Vec::new();
    for g in ctx.alphabet().generators() {
        if d.value_on(&g.name).is_none() {
            continue;
        }
        let x = LieElement::generator(ctx, &g.name)?;
        let residual = d.apply(&d.apply(&x)?)?;
        out.push(SquareZeroEntry {
            generator: g.name.clone(),
            residual,
        });
    }
    Ok(out)
}
