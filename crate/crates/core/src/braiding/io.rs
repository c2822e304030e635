//! JSON braiding definitions.
//!
//! ```json
//! { "dim": 2, "kind": "diagonal", "q": [["1", "2"], ["1/2", "-1"]] }
//! { "dim": 2, "kind": "general",
//!   "entries": [ { "in": [1, 2], "out": [ { "coeff": "1/1", "pair": [2, 1] } ] }, ... ] }
//! ```
//!
//! Generator indices are 1-based. Coefficients are written as `"num/den"`
//! strings; plain JSON integers are also accepted on input.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Braiding;
use crate::foundation::scalar::format_scalar_fraction;
use crate::foundation::{parse_scalar, Scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Text(String),
    Integer(i64),
}

impl Coefficient {
    fn value(&self) -> Result<Scalar, Error> {
        match self {
            Coefficient::Text(s) => parse_scalar(s),
            Coefficient::Integer(n) => Ok(crate::foundation::scalar(*n)),
        }
    }

    fn from_scalar(c: &Scalar) -> Self {
        Coefficient::Text(format_scalar_fraction(c))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutTerm {
    pub coeff: Coefficient,
    pub pair: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    #[serde(rename = "in")]
    pub input: [usize; 2],
    pub out: Vec<OutTerm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Diagonal,
    General,
}

/// The on-disk form of a braiding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingFile {
    pub dim: usize,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<Vec<Coefficient>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Entry>>,
}

fn zero_based(index: usize, dim: usize) -> Result<usize, Error> {
    if index == 0 || index > dim {
        return Err(Error::UnknownGenerator { index, dim });
    }
    Ok(index - 1)
}

impl BraidingFile {
    pub fn into_braiding(self) -> Result<Braiding, Error> {
        match self.kind {
            Kind::Diagonal => {
                let q = self.q.ok_or_else(|| {
                    Error::InvalidBraiding("diagonal braiding needs a `q` matrix".into())
                })?;
                if q.len() != self.dim {
                    return Err(Error::InvalidBraiding(format!(
                        "`q` has {} rows, expected {}",
                        q.len(),
                        self.dim
                    )));
                }
                let q = q
                    .iter()
                    .map(|row| row.iter().map(Coefficient::value).collect())
                    .collect::<Result<Vec<Vec<Scalar>>, Error>>()?;
                Braiding::diagonal(q)
            }
            Kind::General => {
                let entries = self.entries.ok_or_else(|| {
                    Error::InvalidBraiding("general braiding needs `entries`".into())
                })?;
                let dim = self.dim;
                let converted = entries
                    .into_iter()
                    .map(|e| {
                        let i = zero_based(e.input[0], dim)?;
                        let s = zero_based(e.input[1], dim)?;
                        let out = e
                            .out
                            .iter()
                            .map(|t| {
                                Ok((
                                    t.coeff.value()?,
                                    (zero_based(t.pair[0], dim)?, zero_based(t.pair[1], dim)?),
                                ))
                            })
                            .collect::<Result<Vec<_>, Error>>()?;
                        Ok(((i, s), out))
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                Braiding::general(dim, converted)
            }
        }
    }

    pub fn from_braiding(b: &Braiding) -> Self {
        if let Some(q) = b.diagonal_parameters() {
            return BraidingFile {
                dim: b.dim(),
                kind: Kind::Diagonal,
                q: Some(
                    q.iter()
                        .map(|row| row.iter().map(Coefficient::from_scalar).collect())
                        .collect(),
                ),
                entries: None,
            };
        }
        let d = b.dim() as u8;
        let entries = (0..d)
            .flat_map(|i| (0..d).map(move |s| (i, s)))
            .map(|(i, s)| Entry {
                input: [i as usize + 1, s as usize + 1],
                out: b
                    .image(i, s)
                    .iter()
                    .map(|t| OutTerm {
                        coeff: Coefficient::from_scalar(&t.coeff),
                        pair: [t.left as usize + 1, t.right as usize + 1],
                    })
                    .collect(),
            })
            .collect();
        BraidingFile {
            dim: b.dim(),
            kind: Kind::General,
            q: None,
            entries: Some(entries),
        }
    }
}

impl Braiding {
    pub fn from_json(text: &str) -> Result<Braiding, Error> {
        serde_json::from_str::<BraidingFile>(text)?.into_braiding()
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Braiding, Error> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&BraidingFile::from_braiding(self))
            .expect("braiding files always serialize")
    }
}
