//! Test-only generators and brute-force oracles. Nothing here calls the
//! bracket kernel except where a test wants the normal form explicitly.

#![allow(dead_code)]

use std::collections::BTreeMap;

use lsdgla::basis::full_basis;
use lsdgla::expr::expand_raw;
use lsdgla::rational::ratio;
use lsdgla::{Alphabet, LieElement, LieMonomial, NcPolynomial, Rational, RawExpr, TruncationContext};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    rand::SeedableRng::seed_from_u64(seed)
}

const NAMES: [&str; 3] = ["a", "b", "e"];

pub fn small_rational(rng: &mut TestRng) -> Rational {
    let p: i64 = *[-3, -2, -1, 1, 1, 2, 3, 5].choose(rng).unwrap();
    let q: i64 = *[1, 1, 2, 3, 7].choose(rng).unwrap();
    ratio(p, q)
}

/// A uniformly shaped random bracket tree with `len` leaves.
pub fn random_tree(rng: &mut TestRng, len: usize) -> RawExpr {
    if len == 1 {
        return RawExpr::generator(*NAMES.choose(rng).unwrap());
    }
    let split = rng.gen_range(1..len);
    RawExpr::bracket(random_tree(rng, split), random_tree(rng, len - split))
}

/// A random combination of up to `terms` trees, each of length ≤ `max_len`.
pub fn random_expr(rng: &mut TestRng, max_len: usize, terms: usize) -> RawExpr {
    let k = rng.gen_range(1..=terms);
    RawExpr::Sum(
        (0..k)
            .map(|_| {
                let len = rng.gen_range(1..=max_len);
                (small_rational(rng), random_tree(rng, len))
            })
            .collect(),
    )
}

fn tree_degree(raw: &RawExpr, al: &Alphabet) -> i64 {
    match raw {
        RawExpr::Generator(n) => al.degree(al.index_of(n).unwrap()),
        RawExpr::Bracket(l, r) => tree_degree(l, al) + tree_degree(r, al),
        // rewrites only produce homogeneous sums
        RawExpr::Sum(ts) => tree_degree(&ts[0].1, al),
    }
}

fn koszul(p: i64, q: i64) -> Rational {
    if p.rem_euclid(2) == 1 && q.rem_euclid(2) == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Rewrites a bracket tree by randomly applying graded antisymmetry and the
/// Jacobi identity at random nodes. The result denotes the same element but
/// is a different raw expression.
pub fn random_rewrite(rng: &mut TestRng, raw: &RawExpr, al: &Alphabet) -> RawExpr {
    match raw {
        RawExpr::Generator(_) => raw.clone(),
        RawExpr::Sum(ts) => RawExpr::Sum(
            ts.iter()
                .map(|(c, t)| (c.clone(), random_rewrite(rng, t, al)))
                .collect(),
        ),
        RawExpr::Bracket(l, r) => {
            let l = random_rewrite(rng, l, al);
            let r = random_rewrite(rng, r, al);
            let (dl, dr) = (tree_degree(&l, al), tree_degree(&r, al));
            match rng.gen_range(0..3) {
                // [x,y] = −(−1)^{|x||y|}[y,x]
                0 => RawExpr::Sum(vec![(-koszul(dl, dr), RawExpr::bracket(r, l))]),
                // [[p,q],r] = [p,[q,r]] − (−1)^{|p||q|}[q,[p,r]]
                1 => match l {
                    RawExpr::Bracket(p, q) => {
                        let (dp, dq) = (tree_degree(&p, al), tree_degree(&q, al));
                        RawExpr::Sum(vec![
                            (
                                Rational::one(),
                                RawExpr::bracket((*p).clone(), RawExpr::bracket((*q).clone(), r.clone())),
                            ),
                            (
                                -koszul(dp, dq),
                                RawExpr::bracket(*q, RawExpr::bracket(*p, r)),
                            ),
                        ])
                    }
                    other => RawExpr::bracket(other, r),
                },
                _ => RawExpr::bracket(l, r),
            }
        }
    }
}

/// A random element built from basis monomials of degree `degree` and
/// length at most `max_len` (zero if there are none).
pub fn random_homogeneous(
    rng: &mut TestRng,
    ctx: &TruncationContext,
    degree: i64,
    max_len: usize,
    terms: usize,
) -> LieElement {
    let pool: Vec<LieMonomial> = full_basis(ctx)
        .into_iter()
        .filter(|m| m.degree() == degree && m.len() <= max_len)
        .collect();
    let mut out = LieElement::zero(ctx);
    if pool.is_empty() {
        return out;
    }
    for _ in 0..rng.gen_range(1..=terms) {
        let m = pool.choose(rng).unwrap().clone();
        out = &out + &LieElement::monomial(ctx, m, small_rational(rng));
    }
    out
}

/// Every word of `len` letters with the given degree.
pub fn words(al: &Alphabet, len: usize, degree: i64) -> Vec<Vec<u8>> {
    let mut all: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..len {
        all = all
            .into_iter()
            .flat_map(|w| {
                (0..al.len() as u8).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    all.retain(|w| al.word_degree(w) == degree);
    all
}

/// Every binary bracketing of a word.
pub fn bracketings(word: &[u8], al: &Alphabet) -> Vec<RawExpr> {
    if word.len() == 1 {
        return vec![RawExpr::generator(al.name(word[0]))];
    }
    let mut out = Vec::new();
    for split in 1..word.len() {
        for l in bracketings(&word[..split], al) {
            for r in bracketings(&word[split..], al) {
                out.push(RawExpr::bracket(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Rank over ℚ of a set of polynomials, by Gaussian elimination on their
/// coefficient vectors.
pub fn rank(polys: &[NcPolynomial]) -> usize {
    let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for p in polys {
        for (w, _) in p.terms() {
            let n = index.len();
            index.entry(w.to_vec()).or_insert(n);
        }
    }
    let cols = index.len();
    let mut rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); cols];
            for (w, c) in p.terms() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / rows[rank][col].clone();
        let pivot_row: Vec<Rational> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Dimension of the length-`len`, degree-`degree` piece, computed as the
/// rank of the associative images of all bracketings.
pub fn brute_force_dimension(al: &Alphabet, len: usize, degree: i64) -> usize {
    let polys: Vec<NcPolynomial> = words(al, len, degree)
        .iter()
        .flat_map(|w| bracketings(w, al))
        .map(|t| expand_raw(&t, al, len).unwrap())
        .filter(|p| !p.is_zero())
        .collect();
    rank(&polys)
}
