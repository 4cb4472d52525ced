//! Bracket expressions: the textual grammar and reduction to normal form.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := [rational '*'] factor | '0'
//! factor   := generator | '[' expr ',' expr ']' | '(' expr ')'
//! rational := ['-'] digits ['/' digits]
//! ```
//!
//! A leading `-` on the first term and the literal `0` are accepted so that
//! every printed element parses back.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, TruncationContext};
use crate::assoc::NcPolynomial;
use crate::bracket::bracket;
use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::monomial::{koszul_negative, Tree};
use crate::rational::Rational;

/// An unreduced bracket expression.
#[derive(Debug, Clone, PartialEq)]
pub enum RawExpr {
    Generator(String),
    Bracket(Box<RawExpr>, Box<RawExpr>),
    Sum(Vec<(Rational, RawExpr)>),
}

impl RawExpr {
    pub fn generator(name: impl Into<String>) -> Self {
        RawExpr::Generator(name.into())
    }

    pub fn bracket(l: RawExpr, r: RawExpr) -> Self {
        RawExpr::Bracket(Box::new(l), Box::new(r))
    }

    pub fn from_tree(tree: &Tree, alphabet: &Alphabet) -> Self {
        match tree {
            Tree::Leaf(l) => RawExpr::Generator(alphabet.name(*l).to_string()),
            Tree::Node(l, r) => {
                RawExpr::bracket(RawExpr::from_tree(l, alphabet), RawExpr::from_tree(r, alphabet))
            }
        }
    }
}

/// Reduces an expression to its normal form in `ctx`.
pub fn normalize(raw: &RawExpr, ctx: &TruncationContext) -> Result<LieElement> {
    match raw {
        RawExpr::Generator(name) => LieElement::generator(ctx, name),
        RawExpr::Bracket(l, r) => bracket(&normalize(l, ctx)?, &normalize(r, ctx)?),
        RawExpr::Sum(terms) => {
            let mut out = LieElement::zero(ctx);
            for (c, t) in terms {
                if !c.is_zero() {
                    out.add_scaled(&normalize(t, ctx)?, c);
                }
            }
            Ok(out)
        }
    }
}

/// Associative expansion of an unreduced expression, keeping words of at
/// most `max_len` letters. Works directly on the expression tree and never
/// touches the bracket kernel.
pub fn expand_raw(raw: &RawExpr, alphabet: &Alphabet, max_len: usize) -> Result<NcPolynomial> {
    // homogeneous components by degree, needed for the Koszul signs
    fn go(raw: &RawExpr, al: &Alphabet) -> Result<BTreeMap<i64, NcPolynomial>> {
        let mut out: BTreeMap<i64, NcPolynomial> = BTreeMap::new();
        match raw {
            RawExpr::Generator(name) => {
                let l = al
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                out.insert(al.degree(l), NcPolynomial::letter(l));
            }
            RawExpr::Bracket(l, r) => {
                let left = go(l, al)?;
                let right = go(r, al)?;
                for (dl, pl) in &left {
                    for (dr, pr) in &right {
                        let slot = out.entry(dl + dr).or_default();
                        slot.add_scaled(&pl.mul(pr), &Rational::one());
                        let sign = if koszul_negative(*dl, *dr) {
                            Rational::one()
                        } else {
                            -Rational::one()
                        };
                        slot.add_scaled(&pr.mul(pl), &sign);
                    }
                }
            }
            RawExpr::Sum(terms) => {
                for (c, t) in terms {
                    for (d, p) in go(t, al)? {
                        out.entry(d).or_default().add_scaled(&p, c);
                    }
                }
            }
        }
        Ok(out)
    }
    let mut total = NcPolynomial::zero();
    for p in go(raw, alphabet)?.values() {
        total.add_scaled(p, &Rational::one());
    }
    Ok(total.truncated(max_len))
}

pub fn parse_expr(input: &str) -> Result<RawExpr> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and normalizes in one step.
pub fn parse_element(input: &str, ctx: &TruncationContext) -> Result<LieElement> {
    normalize(&parse_expr(input)?, ctx)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<RawExpr> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        if self.peek() == Some(b'-') && !self.next_is_digit() {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (c, t) = self.term()?;
            terms.push((sign * c, t));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                _ => break,
            }
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(RawExpr::Sum(terms))
    }

    fn next_is_digit(&self) -> bool {
        self.src
            .get(self.pos + 1)
            .is_some_and(|c| c.is_ascii_digit())
    }

    fn term(&mut self) -> Result<(Rational, RawExpr)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let start = self.pos;
                let r = self.rational()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((r, self.factor()?))
                } else if r.is_zero() {
                    Ok((Rational::zero(), RawExpr::Sum(Vec::new())))
                } else {
                    self.pos = start;
                    Err(self.error("a nonzero coefficient must be followed by '*'"))
                }
            }
            _ => Ok((Rational::one(), self.factor()?)),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as integer"))
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let negative = self.src.get(self.pos) == Some(&b'-');
        if negative {
            self.pos += 1;
        }
        let mut p = self.digits()?;
        if negative {
            p = -p;
        }
        let q = if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let q = self.digits()?;
            if q.is_zero() {
                return Err(self.error("zero denominator"));
            }
            q
        } else {
            BigInt::one()
        };
        Ok(Rational::new(p, q))
    }

    fn factor(&mut self) -> Result<RawExpr> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let l = self.expr()?;
                self.expect(b',')?;
                let r = self.expr()?;
                self.expect(b']')?;
                Ok(RawExpr::bracket(l, r))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                Ok(RawExpr::Generator(name.to_string()))
            }
            Some(_) => Err(self.error("expected a generator, '[' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
