//! Enumeration of the super-Lyndon basis by length and degree.

use crate::alphabet::TruncationContext;
use crate::error::{Error, Result};
use crate::lyndon::lyndon_words;
use crate::monomial::LieMonomial;

/// All basis monomials of word length `length` and degree `degree`, in the
/// crate's monomial order.
pub fn basis_enumerate(
    ctx: &TruncationContext,
    length: usize,
    degree: i64,
) -> Result<Vec<LieMonomial>> {
    if length > ctx.max_length() {
        return Err(Error::LengthExceedsTruncation {
            length,
            max_length: ctx.max_length(),
        });
    }
    let al = ctx.alphabet();
    let mut out: Vec<LieMonomial> = lyndon_words(al.len(), length)
        .iter()
        .filter(|w| al.word_degree(w) == degree)
        .filter_map(|w| LieMonomial::lyndon(w, al))
        .collect();
    if length.is_multiple_of(2) && degree % 2 == 0 {
        out.extend(
            lyndon_words(al.len(), length / 2)
                .iter()
                .filter(|w| 2 * al.word_degree(w) == degree)
                .filter_map(|w| LieMonomial::square_of(w, al)),
        );
    }
    out.sort();
    Ok(out)
}

/// Every basis monomial of length `1..=max_length`.
pub fn full_basis(ctx: &TruncationContext) -> Vec<LieMonomial> {
    let al = ctx.alphabet();
    let mut out = Vec::new();
    for len in 1..=ctx.max_length() {
        for w in lyndon_words(al.len(), len) {
            out.extend(LieMonomial::lyndon(&w, al));
        }
        if len % 2 == 0 {
            for w in lyndon_words(al.len(), len / 2) {
                out.extend(LieMonomial::square_of(&w, al));
            }
        }
    }
    out.sort();
    out
}
