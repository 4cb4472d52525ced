//! Basis monomials of the free graded Lie algebra.
//!
//! A basis monomial is either the standard bracketing `P_w` of a Lyndon word
//! `w`, or the square `[P_w, P_w]` of an odd-degree Lyndon monomial. Both are
//! determined by the root word `w` and a flag, so that is all we store; the
//! bracket tree is rebuilt from the standard factorization when needed.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::lyndon::{is_lyndon, standard_factorization};

/// A binary bracket tree with generator leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(u8),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn bracket(l: Tree, r: Tree) -> Tree {
        Tree::Node(Box::new(l), Box::new(r))
    }

    pub fn len(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self, alphabet: &Alphabet) -> i64 {
        match self {
            Tree::Leaf(g) => alphabet.degree(*g),
            Tree::Node(l, r) => l.degree(alphabet) + r.degree(alphabet),
        }
    }

    /// Leaves left to right.
    pub fn word(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len());
        self.push_word(&mut out);
        out
    }

    fn push_word(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(g) => out.push(*g),
            Tree::Node(l, r) => {
                l.push_word(out);
                r.push_word(out);
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        TreeDisplay {
            tree: self,
            alphabet,
        }
    }
}

struct TreeDisplay<'a> {
    tree: &'a Tree,
    alphabet: &'a Alphabet,
}

impl fmt::Display for TreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            Tree::Leaf(g) => f.write_str(self.alphabet.name(*g)),
            Tree::Node(l, r) => write!(
                f,
                "[{},{}]",
                l.display(self.alphabet),
                r.display(self.alphabet)
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieMonomial {
    root: Arc<[u8]>,
    square: bool,
    degree: i64,
}

pub(crate) fn is_odd(degree: i64) -> bool {
    degree.rem_euclid(2) == 1
}

/// `(−1)^{pq}`, which only depends on the parities.
pub(crate) fn koszul_negative(p: i64, q: i64) -> bool {
    is_odd(p) && is_odd(q)
}

impl LieMonomial {
    pub fn generator(letter: u8, alphabet: &Alphabet) -> Self {
        LieMonomial {
            root: Arc::from(vec![letter]),
            square: false,
            degree: alphabet.degree(letter),
        }
    }

    /// `P_w` for a Lyndon word `w`; `None` if `w` is not Lyndon.
    pub fn lyndon(word: &[u8], alphabet: &Alphabet) -> Option<Self> {
        if !is_lyndon(word) || word.iter().any(|&l| l as usize >= alphabet.len()) {
            return None;
        }
        Some(LieMonomial {
            root: Arc::from(word),
            square: false,
            degree: alphabet.word_degree(word),
        })
    }

    /// `[P_w, P_w]` for an odd-degree Lyndon word `w`; `None` otherwise.
    pub fn square_of(word: &[u8], alphabet: &Alphabet) -> Option<Self> {
        let base = LieMonomial::lyndon(word, alphabet)?;
        base.squared()
    }

    /// The super square of a Lyndon monomial of odd degree.
    pub(crate) fn squared(&self) -> Option<Self> {
        if self.square || !is_odd(self.degree) {
            return None;
        }
        Some(LieMonomial {
            root: self.root.clone(),
            square: true,
            degree: 2 * self.degree,
        })
    }

    pub fn is_square(&self) -> bool {
        self.square
    }

    /// The Lyndon word `w` (for a square `[w,w]`, the repeated half).
    pub fn root(&self) -> &[u8] {
        &self.root
    }

    pub fn len(&self) -> usize {
        if self.square {
            2 * self.root.len()
        } else {
            self.root.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        is_odd(self.degree)
    }

    pub fn word(&self) -> Vec<u8> {
        self.word_iter().collect()
    }

    fn word_iter(&self) -> impl Iterator<Item = u8> + '_ {
        let repeat = if self.square { &self.root[..] } else { &[][..] };
        self.root.iter().chain(repeat).copied()
    }

    pub fn as_generator(&self) -> Option<u8> {
        (!self.square && self.root.len() == 1).then(|| self.root[0])
    }

    /// The two basis factors whose bracket is this monomial, `None` for a
    /// generator.
    pub fn split(&self, alphabet: &Alphabet) -> Option<(LieMonomial, LieMonomial)> {
        if self.square {
            let half = LieMonomial {
                root: self.root.clone(),
                square: false,
                degree: self.degree / 2,
            };
            return Some((half.clone(), half));
        }
        let (u, v) = standard_factorization(&self.root)?;
        let mk = |w: &[u8]| LieMonomial {
            root: Arc::from(w),
            square: false,
            degree: alphabet.word_degree(w),
        };
        Some((mk(u), mk(v)))
    }

    pub fn tree(&self, alphabet: &Alphabet) -> Tree {
        match self.split(alphabet) {
            None => Tree::Leaf(self.root[0]),
            Some((l, r)) => Tree::bracket(l.tree(alphabet), r.tree(alphabet)),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        MonomialDisplay {
            monomial: self,
            alphabet,
        }
    }
}

struct MonomialDisplay<'a> {
    monomial: &'a LieMonomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.monomial
            .tree(self.alphabet)
            .display(self.alphabet)
            .fmt(f)
    }
}

impl fmt::Debug for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.square {
            write!(f, "Sq{:?}", &self.root[..])
        } else {
            write!(f, "L{:?}", &self.root[..])
        }
    }
}

/// Output order: by length, then degree, then the underlying word. A
/// square's word `ww` is never Lyndon, so the word alone separates
/// monomials of equal length.
impl Ord for LieMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.degree.cmp(&other.degree))
            .then_with(|| self.word_iter().cmp(other.word_iter()))
            .then(self.square.cmp(&other.square))
    }
}

impl PartialOrd for LieMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
