//! The JSON element format.
//!
//! An element is a list of term records
//! `{"coeff": "p/q", "tree": <tree>, "length": n, "degree": d}` in monomial
//! order (length, then degree, then word), where a tree is a generator name
//! or a two-element array `[left, right]`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::alphabet::{Alphabet, TruncationContext};
use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::expr::{normalize, RawExpr};
use crate::monomial::{LieMonomial, Tree};
use crate::rational::{parse_rational, to_pq};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub tree: Value,
    pub length: usize,
    pub degree: i64,
}

pub fn tree_to_json(tree: &Tree, alphabet: &Alphabet) -> Value {
    match tree {
        Tree::Leaf(l) => Value::String(alphabet.name(*l).to_string()),
        Tree::Node(l, r) => Value::Array(vec![tree_to_json(l, alphabet), tree_to_json(r, alphabet)]),
    }
}

pub fn monomial_to_json(m: &LieMonomial, alphabet: &Alphabet) -> Value {
    tree_to_json(&m.tree(alphabet), alphabet)
}

fn tree_from_json(v: &Value) -> Result<RawExpr> {
    match v {
        Value::String(name) => Ok(RawExpr::Generator(name.clone())),
        Value::Array(items) if items.len() == 2 => Ok(RawExpr::bracket(
            tree_from_json(&items[0])?,
            tree_from_json(&items[1])?,
        )),
        other => Err(Error::MalformedRecord(format!("not a bracket tree: {other}"))),
    }
}

pub fn element_records(x: &LieElement) -> Vec<TermRecord> {
    let al = x.context().alphabet();
    x.terms()
        .map(|(m, c)| TermRecord {
            coeff: to_pq(c),
            tree: monomial_to_json(m, al),
            length: m.len(),
            degree: m.degree(),
        })
        .collect()
}

pub fn element_to_json(x: &LieElement) -> Value {
    serde_json::to_value(element_records(x)).expect("records serialize")
}

/// Reads an element back. Trees need not be in normal form; they are
/// normalized in `ctx`. The recorded length and degree must match the tree.
pub fn element_from_json(v: &Value, ctx: &TruncationContext) -> Result<LieElement> {
    let records: Vec<TermRecord> = serde_json::from_value(v.clone())
        .map_err(|e| Error::MalformedRecord(e.to_string()))?;
    let mut out = LieElement::zero(ctx);
    for r in records {
        let raw = tree_from_json(&r.tree)?;
        let coeff = parse_rational(&r.coeff)?;
        let (len, deg) = raw_shape(&raw, ctx.alphabet())?;
        if len != r.length || deg != r.degree {
            return Err(Error::MalformedRecord(format!(
                "record claims length {} degree {}, tree has length {len} degree {deg}",
                r.length, r.degree
            )));
        }
        out = out.checked_add(&normalize(&raw, ctx)?.scale(&coeff))?;
    }
    Ok(out)
}

fn raw_shape(raw: &RawExpr, al: &Alphabet) -> Result<(usize, i64)> {
    match raw {
        RawExpr::Generator(name) => {
            let g = al
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            Ok((1, al.degree(g)))
        }
        RawExpr::Bracket(l, r) => {
            let (ll, dl) = raw_shape(l, al)?;
            let (lr, dr) = raw_shape(r, al)?;
            Ok((ll + lr, dl + dr))
        }
        RawExpr::Sum(_) => Err(Error::MalformedRecord("sums are not trees".into())),
    }
}
