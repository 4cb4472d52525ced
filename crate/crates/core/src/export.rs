//! A finite presentation of the truncated algebra: the bracket of every
//! pair of basis monomials that fits under the cutoff, and the differential
//! of every basis monomial.

use serde_json::{json, Value};

use crate::basis::full_basis;
use crate::bracket::bracket;
use crate::derivation::Derivation;
use crate::element::LieElement;
use crate::error::Result;
use crate::monomial::LieMonomial;
use crate::rational::Rational;
use crate::serialize::{element_to_json, monomial_to_json};

#[derive(Debug, Clone, PartialEq)]
pub struct StructureTable {
    pub max_length: usize,
    /// `(x, y, [x,y])` for basis monomials `x ≤ y` with `|x| + |y| ≤ N`.
    pub brackets: Vec<(LieMonomial, LieMonomial, LieElement)>,
    /// `(m, ∂m)` for every basis monomial.
    pub differential: Vec<(LieMonomial, LieElement)>,
}

pub fn structure_table(d: &Derivation) -> Result<StructureTable> {
    let ctx = d.context();
    let n = ctx.max_length();
    let basis = full_basis(ctx);
    let one = Rational::from_integer(1.into());
    let as_element = |m: &LieMonomial| LieElement::monomial(ctx, m.clone(), one.clone());

    let mut brackets = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            if x.len() + y.len() > n {
                continue;
            }
            let xy = bracket(&as_element(x), &as_element(y))?;
            brackets.push((x.clone(), y.clone(), xy));
        }
    }
    let differential = basis
        .iter()
        .map(|m| Ok((m.clone(), d.apply(&as_element(m))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(StructureTable {
        max_length: n,
        brackets,
        differential,
    })
}

impl StructureTable {
    pub fn to_json(&self, d: &Derivation) -> Value {
        let al = d.context().alphabet();
        let brackets: Vec<Value> = self
            .brackets
            .iter()
            .map(|(x, y, r)| {
                json!({
                    "left": monomial_to_json(x, al),
                    "right": monomial_to_json(y, al),
                    "result": element_to_json(r),
                })
            })
            .collect();
        let differential: Vec<Value> = self
            .differential
            .iter()
            .map(|(m, r)| json!({ "monomial": monomial_to_json(m, al), "result": element_to_json(r) }))
            .collect();
        json!({
            "max_length": self.max_length,
            "alphabet": al.to_string(),
            "brackets": brackets,
            "differential": differential,
        })
    }

    pub fn to_human(&self, d: &Derivation) -> String {
        let al = d.context().alphabet();
        let mut out = String::new();
        for (x, y, r) in &self.brackets {
            out.push_str(&format!("[{}, {}] = {}\n", x.display(al), y.display(al), r));
        }
        for (m, r) in &self.differential {
            out.push_str(&format!("d({}) = {}\n", m.display(al), r));
        }
        out
    }
}
