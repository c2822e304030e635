//! JSON form of elements and tensors: a list of terms with rational
//! coefficients as strings and trees in the text syntax.

use serde::{Deserialize, Serialize};

use super::element::{parse_element, tensor_of, FreeElement, TensorElement};
use crate::foundation::{format_scalar, parse_scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub tree: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTermJson {
    pub coeff: String,
    pub slots: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub terms: Vec<TensorTermJson>,
}

pub fn element_to_json(a: &FreeElement) -> ElementJson {
    ElementJson {
        terms: a
            .iter()
            .map(|(t, c)| TermJson {
                coeff: format_scalar(c),
                tree: t.to_string(),
            })
            .collect(),
    }
}

pub fn element_from_json(json: &ElementJson, dim: usize) -> Result<FreeElement, Error> {
    let mut out = FreeElement::zero();
    for term in &json.terms {
        out.add_scaled(
            &parse_scalar(&term.coeff)?,
            &parse_element(&term.tree, dim)?,
        );
    }
    Ok(out)
}

pub fn tensor_to_json(t: &TensorElement) -> TensorJson {
    TensorJson {
        terms: t
            .iter()
            .map(|(tp, c)| TensorTermJson {
                coeff: format_scalar(c),
                slots: tp.iter().map(ToString::to_string).collect(),
            })
            .collect(),
    }
}

pub fn tensor_from_json(json: &TensorJson, dim: usize) -> Result<TensorElement, Error> {
    let mut out = TensorElement::zero();
    for term in &json.terms {
        let slots = term
            .slots
            .iter()
            .map(|s| parse_element(s, dim))
            .collect::<Result<Vec<_>, _>>()?;
        out.add_scaled(&parse_scalar(&term.coeff)?, &tensor_of(&slots));
    }
    Ok(out)
}
