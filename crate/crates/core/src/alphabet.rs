//! Generator alphabets and truncation contexts.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::monomial::LieMonomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedGenerator {
    pub name: String,
    pub degree: i64,
}

impl GradedGenerator {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        GradedGenerator {
            name: name.into(),
            degree,
        }
    }
}

pub(crate) type BracketTable = HashMap<(LieMonomial, LieMonomial), Arc<[(LieMonomial, Rational)]>>;

/// An ordered list of graded generators. The declaration order is the letter
/// order used for Lyndon words.
///
/// The alphabet also owns the memo table of basis brackets. Entries depend
/// only on the generator parities, are exact, and are never invalidated, so
/// sharing them between threads does not change any observable result.
pub struct Alphabet {
    generators: Vec<GradedGenerator>,
    pub(crate) brackets: RwLock<BracketTable>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new(generators: Vec<GradedGenerator>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidAlphabet("no generators".into()));
        }
        if generators.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet("too many generators".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if !valid_name(&g.name) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{}` is not an identifier",
                    g.name
                )));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        Ok(Alphabet {
            generators,
            brackets: RwLock::new(HashMap::new()),
        })
    }

    /// `a:−1 < b:−1 < e:0`.
    pub fn interval() -> Self {
        Alphabet::new(vec![
            GradedGenerator::new("a", -1),
            GradedGenerator::new("b", -1),
            GradedGenerator::new("e", 0),
        ])
        .expect("default alphabet is valid")
    }

    /// Parses `name:degree,name:degree,...`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for item in spec.split(',') {
            let (name, degree) = item
                .split_once(':')
                .ok_or_else(|| Error::InvalidAlphabet(format!("expected name:degree, got `{item}`")))?;
            let degree = degree
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidAlphabet(format!("bad degree in `{item}`")))?;
            gens.push(GradedGenerator::new(name.trim(), degree));
        }
        Alphabet::new(gens)
    }

    pub fn generators(&self) -> &[GradedGenerator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as u8)
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.generators[letter as usize].name
    }

    pub fn degree(&self, letter: u8) -> i64 {
        self.generators[letter as usize].degree
    }

    pub fn word_degree(&self, word: &[u8]) -> i64 {
        word.iter().map(|&l| self.degree(l)).sum()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.generators).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", g.name, g.degree)?;
        }
        Ok(())
    }
}

/// The cutoff `N` together with the alphabet it applies to. Every element
/// carries one; binary operations require both sides to agree.
#[derive(Debug, Clone)]
pub struct TruncationContext {
    alphabet: Arc<Alphabet>,
    max_length: usize,
}

impl TruncationContext {
    pub fn new(alphabet: Arc<Alphabet>, max_length: usize) -> Result<Self> {
        if max_length == 0 {
            return Err(Error::InvalidTruncation(max_length));
        }
        Ok(TruncationContext {
            alphabet,
            max_length,
        })
    }

    /// The default interval alphabet truncated at `max_length`.
    pub fn interval(max_length: usize) -> Result<Self> {
        TruncationContext::new(Arc::new(Alphabet::interval()), max_length)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn shared_alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    /// Same alphabet, different cutoff.
    pub fn with_max_length(&self, max_length: usize) -> Result<Self> {
        TruncationContext::new(self.alphabet.clone(), max_length)
    }

    pub(crate) fn ensure_same(&self, other: &TruncationContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

impl PartialEq for TruncationContext {
    fn eq(&self, other: &Self) -> bool {
        self.max_length == other.max_length
            && (Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet)
    }
}

impl Eq for TruncationContext {}
