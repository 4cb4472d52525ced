//! The bracket in the super-Lyndon basis.
//!
//! The bracket of two basis monomials is rewritten into normal form using
//! only graded antisymmetry and the Jacobi identity:
//!
//! * `[x,x]` is the super square when `x` is an odd Lyndon monomial and zero
//!   otherwise (even `x`, or `x` itself a square, which has even degree).
//! * `[[w,w],y] = 2[w,[w,y]]` for odd `w`, with `[[w,w],w] = 0`.
//! * For Lyndon `u > v`, `[u,v] = −(−1)^{|u||v|}[v,u]`.
//! * For Lyndon `u < v`, `uv` is Lyndon; if `u` is a letter or the right
//!   standard factor `u₂` of `u = (u₁,u₂)` satisfies `u₂ ≥ v`, then `(u,v)`
//!   is the standard factorization of `uv` and `[u,v] = P_{uv}`. Otherwise
//!   `[[u₁,u₂],v] = [u₁,[u₂,v]] − (−1)^{|u₁||u₂|}[u₂,[u₁,v]]`.
//!
//! Basis brackets are memoized per alphabet. A bracket of two monomials is
//! homogeneous in the multidegree, so its value does not depend on the
//! truncation. Truncation happens in [`bracket`] before any basis product of
//! total length above `N` is requested.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::element::LieElement;
use crate::error::Result;
use crate::monomial::{koszul_negative, LieMonomial};
use crate::rational::{int, Rational};

type Combo = Arc<[(LieMonomial, Rational)]>;
type Acc = BTreeMap<LieMonomial, Rational>;

const MAX_DEPTH: usize = 4096;

fn accumulate(acc: &mut Acc, m: &LieMonomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(m.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(m);
    }
}

fn accumulate_combo(acc: &mut Acc, combo: &[(LieMonomial, Rational)], scale: &Rational) {
    for (m, c) in combo {
        accumulate(acc, m, c * scale);
    }
}

/// `acc += scale · [u, Σ cᵢ mᵢ]`.
fn bracket_left_into(
    acc: &mut Acc,
    u: &LieMonomial,
    combo: &[(LieMonomial, Rational)],
    scale: &Rational,
    al: &Alphabet,
    depth: usize,
) {
    for (m, c) in combo {
        let inner = basis_bracket_at(u, m, al, depth + 1);
        accumulate_combo(acc, &inner, &(c * scale));
    }
}

/// Normal form of `[x, y]` for basis monomials `x`, `y`, as a sorted list
/// of nonzero terms.
pub fn basis_bracket(x: &LieMonomial, y: &LieMonomial, al: &Alphabet) -> Combo {
    basis_bracket_at(x, y, al, 0)
}

fn basis_bracket_at(x: &LieMonomial, y: &LieMonomial, al: &Alphabet, depth: usize) -> Combo {
    assert!(
        depth < MAX_DEPTH,
        "bracket rewriting did not terminate on [{:?}, {:?}]",
        x,
        y
    );
    let key = (x.clone(), y.clone());
    if let Some(hit) = al.brackets.read().expect("bracket table poisoned").get(&key) {
        return hit.clone();
    }
    let value: Combo = rewrite(x, y, al, depth).into_iter().collect::<Vec<_>>().into();
    al.brackets
        .write()
        .expect("bracket table poisoned")
        .entry(key)
        .or_insert(value)
        .clone()
}

fn rewrite(x: &LieMonomial, y: &LieMonomial, al: &Alphabet, depth: usize) -> Acc {
    let mut acc = Acc::new();
    let one = Rational::one();

    if x == y {
        if let Some(sq) = x.squared() {
            acc.insert(sq, one);
        }
        return acc;
    }

    if x.is_square() {
        let (w, _) = x.split(al).expect("squares split");
        if &w == y {
            // [[w,w],w] = 0 for odd w, since 3[[w,w],w] = 0
            return acc;
        }
        let wy = basis_bracket_at(&w, y, al, depth + 1);
        bracket_left_into(&mut acc, &w, &wy, &int(2), al, depth);
        return acc;
    }

    if y.is_square() {
        // y has even degree, so [x,y] = −[y,x]
        let yx = basis_bracket_at(y, x, al, depth + 1);
        accumulate_combo(&mut acc, &yx, &-one);
        return acc;
    }

    let (u, v) = (x.root(), y.root());
    if u > v {
        let sign = if koszul_negative(x.degree(), y.degree()) {
            one
        } else {
            -one
        };
        let yx = basis_bracket_at(y, x, al, depth + 1);
        accumulate_combo(&mut acc, &yx, &sign);
        return acc;
    }

    match x.split(al) {
        Some((u1, u2)) if u2.root() < v => {
            // [[u1,u2],v] = [u1,[u2,v]] − (−1)^{|u1||u2|}[u2,[u1,v]]
            let u2v = basis_bracket_at(&u2, y, al, depth + 1);
            bracket_left_into(&mut acc, &u1, &u2v, &one, al, depth);
            let u1v = basis_bracket_at(&u1, y, al, depth + 1);
            let sign = if koszul_negative(u1.degree(), u2.degree()) {
                one
            } else {
                -one
            };
            bracket_left_into(&mut acc, &u2, &u1v, &sign, al, depth);
        }
        _ => {
            let mut word = u.to_vec();
            word.extend_from_slice(v);
            let m = LieMonomial::lyndon(&word, al).expect("uv is Lyndon for Lyndon u < v");
            acc.insert(m, one);
        }
    }
    acc
}

/// Bilinear bracket of two elements in the same context.
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    x.context().ensure_same(y.context())?;
    let ctx = x.context();
    let n = ctx.max_length();
    let al = ctx.alphabet();
    let mut out = LieElement::zero(ctx);
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            if mx.len() + my.len() > n {
                continue;
            }
            let c = cx * cy;
            for (m, k) in basis_bracket(mx, my, al).iter() {
                out.add_term(m.clone(), k * &c);
            }
        }
    }
    Ok(out)
}

/// `(ad_v)^k (x)`.
pub fn ad_power(v: &LieElement, k: usize, x: &LieElement) -> Result<LieElement> {
    v.context().ensure_same(x.context())?;
    let mut cur = x.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        cur = bracket(v, &cur)?;
    }
    Ok(cur)
}
