//! Exact Bernoulli numbers, normalized by `x/(eˣ − 1) = Σ Bᵢ xⁱ/i!`
//! (so `B₁ = −1/2`).

use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.values.get(i)
    }

    /// A copy with `B_i` replaced. Only meant for negative controls; the
    /// result is no longer a Bernoulli table. Entries past the end are
    /// ignored.
    pub fn with_override(&self, i: usize, value: Rational) -> BernoulliTable {
        let mut out = self.clone();
        if let Some(slot) = out.values.get_mut(i) {
            *slot = value;
        }
        out
    }
}

impl Index<usize> for BernoulliTable {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.values[i]
    }
}

/// Row `m` of Pascal's triangle.
fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..m {
        let next = &row[k] * BigInt::from(m - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `B_0 ..= B_n` from `Σ_{k=0}^{m} C(m+1,k) B_k = 0` for `m ≥ 1`.
pub fn bernoulli_upto(n: usize) -> BernoulliTable {
    let mut values: Vec<Rational> = Vec::with_capacity(n + 1);
    values.push(Rational::one());
    for m in 1..=n {
        let row = binomial_row(m + 1);
        let mut sum = Rational::zero();
        for (k, b) in values.iter().enumerate() {
            if !b.is_zero() {
                sum += b * Rational::from_integer(row[k].clone());
            }
        }
        values.push(-sum / Rational::from_integer(row[m].clone()));
    }
    BernoulliTable { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn first_entries() {
        assert_eq!(bernoulli_upto(0).values(), &[int(1)]);
        assert_eq!(bernoulli_upto(2).values(), &[int(1), ratio(-1, 2), ratio(1, 6)]);
        let t = bernoulli_upto(12);
        assert_eq!(t[4], ratio(-1, 30));
        assert_eq!(t[6], ratio(1, 42));
        assert_eq!(t[8], ratio(-1, 30));
        assert_eq!(t[10], ratio(5, 66));
        assert_eq!(t[12], ratio(-691, 2730));
    }

    #[test]
    fn recurrence_residual_vanishes() {
        let n = 30;
        let t = bernoulli_upto(n);
        for m in 1..=n {
            let row = binomial_row(m + 1);
            let s: Rational = (0..=m)
                .map(|k| &t[k] * Rational::from_integer(row[k].clone()))
                .sum();
            assert!(s.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn override_keeps_length() {
        let t = bernoulli_upto(4).with_override(2, ratio(1, 10));
        assert_eq!(t[2], ratio(1, 10));
        assert_eq!(t.len(), 5);
        assert_eq!(bernoulli_upto(1).with_override(9, int(3)), bernoulli_upto(1));
    }
}
