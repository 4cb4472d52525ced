//! Expansion into the free associative algebra.
//!
//! Every bracket tree maps to a noncommutative polynomial by the signed
//! commutator `[x,y] ↦ xy − (−1)^{|x||y|} yx` applied recursively on the
//! tree. The map is injective on the free graded Lie algebra over ℚ, so
//! comparing expansions decides equality without going through the
//! rewriting kernel.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::element::LieElement;
use crate::monomial::{koszul_negative, Tree};
use crate::rational::{to_human, Rational};

#[derive(Clone, Default, PartialEq, Eq)]
pub struct NcPolynomial {
    terms: BTreeMap<Vec<u8>, Rational>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial::default()
    }

    pub fn letter(l: u8) -> Self {
        let mut p = NcPolynomial::zero();
        p.terms.insert(vec![l], Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rational)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn coefficient(&self, word: &[u8]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_word(&mut self, word: Vec<u8>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &NcPolynomial, scale: &Rational) {
        for (w, c) in &other.terms {
            self.add_word(w.clone(), c * scale);
        }
    }

    /// Drops words longer than `max_len`.
    pub fn truncated(&self, max_len: usize) -> NcPolynomial {
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max_len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1 * c2);
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PolyDisplay {
            poly: self,
            alphabet,
        }
    }
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

struct PolyDisplay<'a> {
    poly: &'a NcPolynomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*", to_human(c))?;
            for &l in w {
                f.write_str(self.alphabet.name(l))?;
            }
        }
        Ok(())
    }
}

/// Expansion of a bracket tree.
pub fn expand_tree(tree: &Tree, alphabet: &Alphabet) -> NcPolynomial {
    fn go(tree: &Tree, al: &Alphabet) -> (NcPolynomial, i64) {
        match tree {
            Tree::Leaf(l) => (NcPolynomial::letter(*l), al.degree(*l)),
            Tree::Node(l, r) => {
                let (pl, dl) = go(l, al);
                let (pr, dr) = go(r, al);
                let mut out = pl.mul(&pr);
                let sign = if koszul_negative(dl, dr) {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                out.add_scaled(&pr.mul(&pl), &sign);
                (out, dl + dr)
            }
        }
    }
    go(tree, alphabet).0
}

/// Linear extension of [`expand_tree`] over the element's monomials.
pub fn assoc_expand(x: &LieElement) -> NcPolynomial {
    let al = x.context().alphabet();
    let mut out = NcPolynomial::zero();
    for (m, c) in x.terms() {
        out.add_scaled(&expand_tree(&m.tree(al), al), c);
    }
    out
}
