//! Finite rational combinations of basis monomials, modulo length > N.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::alphabet::TruncationContext;
use crate::error::{Error, Result};
use crate::monomial::LieMonomial;
use crate::rational::{to_human, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<LieMonomial, Rational>,
    ctx: TruncationContext,
}

impl LieElement {
    pub fn zero(ctx: &TruncationContext) -> Self {
        LieElement {
            terms: BTreeMap::new(),
            ctx: ctx.clone(),
        }
    }

    pub fn generator(ctx: &TruncationContext, name: &str) -> Result<Self> {
        let letter = ctx
            .alphabet()
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::monomial(
            ctx,
            LieMonomial::generator(letter, ctx.alphabet()),
            Rational::one(),
        ))
    }

    /// `coeff · m`, or zero if `m` is longer than the cutoff.
    pub fn monomial(ctx: &TruncationContext, m: LieMonomial, coeff: Rational) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(m, coeff);
        out
    }

    pub fn from_terms(
        ctx: &TruncationContext,
        terms: impl IntoIterator<Item = (LieMonomial, Rational)>,
    ) -> Self {
        let mut out = Self::zero(ctx);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: LieMonomial, coeff: Rational) {
        if coeff.is_zero() || m.len() > self.ctx.max_length() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale · other`.
    pub(crate) fn add_scaled(&mut self, other: &LieElement, scale: &Rational) {
        debug_assert_eq!(self.ctx, other.ctx);
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn context(&self) -> &TruncationContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&LieMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &LieMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// True for zero and for elements whose terms all have degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub(crate) fn require_degree(&self, d: i64) -> Result<()> {
        if self.is_homogeneous_of(d) {
            return Ok(());
        }
        let found = match self.homogeneous_degree() {
            Some(x) => format!("found degree {x}"),
            None => "found an inhomogeneous element".to_string(),
        };
        Err(Error::DegreeMismatch { expected: d, found })
    }

    pub fn min_length(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).min()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).max()
    }

    /// Terms of word length exactly `len`.
    pub fn part_of_length(&self, len: usize) -> LieElement {
        LieElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.len() == len)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            ctx: self.ctx.clone(),
        }
    }

    /// Reinterprets the element under another cutoff of the same alphabet,
    /// dropping terms that no longer fit.
    pub fn retruncate(&self, ctx: &TruncationContext) -> Result<LieElement> {
        if ctx.alphabet() != self.ctx.alphabet() {
            return Err(Error::ContextMismatch);
        }
        Ok(LieElement::from_terms(
            ctx,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        let mut out = LieElement::zero(&self.ctx);
        out.add_scaled(self, c);
        out
    }

    pub fn checked_add(&self, other: &LieElement) -> Result<LieElement> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LieElement) -> Result<LieElement> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }
}

/// Elementwise arithmetic panics on context mismatch; use `checked_add` /
/// `checked_sub` to get an error instead.
impl Add for &LieElement {
    type Output = LieElement;

    fn add(self, rhs: &LieElement) -> LieElement {
        self.checked_add(rhs).expect("adding elements of different contexts")
    }
}

impl Sub for &LieElement {
    type Output = LieElement;

    fn sub(self, rhs: &LieElement) -> LieElement {
        self.checked_sub(rhs)
            .expect("subtracting elements of different contexts")
    }
}

impl Add for LieElement {
    type Output = LieElement;

    fn add(self, rhs: LieElement) -> LieElement {
        &self + &rhs
    }
}

impl Sub for LieElement {
    type Output = LieElement;

    fn sub(self, rhs: LieElement) -> LieElement {
        &self - &rhs
    }
}

impl Neg for &LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        self.scale(&-Rational::one())
    }
}

impl Neg for LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        -&self
    }
}

impl Mul<&LieElement> for &Rational {
    type Output = LieElement;

    fn mul(self, rhs: &LieElement) -> LieElement {
        rhs.scale(self)
    }
}

/// Human form: a sum in the expression grammar, re-parseable by
/// [`crate::expr::parse_expr`].
impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let al = self.ctx.alphabet();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}*", to_human(&mag))?;
            }
            write!(f, "{}", m.display(al))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement(N={}; {})", self.ctx.max_length(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn cancellation_removes_terms() {
        let ctx = TruncationContext::interval(3).unwrap();
        let a = LieElement::generator(&ctx, "a").unwrap();
        let b = LieElement::generator(&ctx, "b").unwrap();
        let x = &a + &b;
        let y = &x - &a;
        assert_eq!(y, b);
        assert!((&y - &b).is_zero());
        assert_eq!(y.num_terms(), 1);
    }

    #[test]
    fn display_signs() {
        let ctx = TruncationContext::interval(3).unwrap();
        let a = LieElement::generator(&ctx, "a").unwrap();
        let b = LieElement::generator(&ctx, "b").unwrap();
        let x = &(&b - &a) + &(&ratio(1, 2) * &a).scale(&ratio(-3, 1));
        assert_eq!(x.to_string(), "-5/2*a + b");
        assert_eq!(LieElement::zero(&ctx).to_string(), "0");
    }

    #[test]
    fn degree_queries() {
        let ctx = TruncationContext::interval(3).unwrap();
        let a = LieElement::generator(&ctx, "a").unwrap();
        let e = LieElement::generator(&ctx, "e").unwrap();
        assert_eq!(a.homogeneous_degree(), Some(-1));
        assert_eq!((&a + &e).homogeneous_degree(), None);
        assert!(LieElement::zero(&ctx).is_homogeneous_of(7));
        assert!(matches!(
            (&a + &e).require_degree(-1),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(LieElement::generator(&ctx, "z").is_err());
    }

    #[test]
    fn mismatched_contexts() {
        let c3 = TruncationContext::interval(3).unwrap();
        let c4 = TruncationContext::interval(4).unwrap();
        let a3 = LieElement::generator(&c3, "a").unwrap();
        let a4 = LieElement::generator(&c4, "a").unwrap();
        assert_eq!(a3.checked_add(&a4), Err(Error::ContextMismatch));
    }
}
