//! `{"coords":[..],"grade":k,"terms":[{"idx":[..],"coef":".."}]}`
//!
//! Terms are written in lexicographic `idx` order with canonical polynomial
//! strings, so serializing a parsed canonical document reproduces it byte
//! for byte.

use serde::{Deserialize, Serialize};

use super::{Graded, Kind};
use crate::coords::Coords;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{Rational, Scalar};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct GradedDoc {
    coords: Vec<String>,
    grade: usize,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    idx: Vec<usize>,
    coef: String,
}

impl<T: Scalar, K: Kind> Graded<T, K> {
    pub(crate) fn to_doc(&self) -> GradedDoc {
        GradedDoc {
            coords: self.coords.names().to_vec(),
            grade: self.grade,
            terms: self.terms().map(|(idx, c)| TermDoc { idx: idx.to_vec(), coef: c.to_string() }).collect(),
        }
    }

    /// Compact JSON document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("plain data serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("plain data serializes")
    }
}

impl<K: Kind> Graded<Rational, K> {
    /// Reads a JSON document. Index tuples may come in any order; a
    /// permuted tuple contributes its sign and repeated tuples are summed.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GradedDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_doc(doc)
    }

    pub(crate) fn from_doc(doc: GradedDoc) -> Result<Self> {
        let coords = Coords::new(&doc.coords)?;
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            if t.idx.iter().enumerate().any(|(i, x)| t.idx[..i].contains(x)) {
                return Err(Error::Json(format!("repeated index in {:?}", t.idx)));
            }
            terms.push((t.idx, Polynomial::parse(&t.coef, &coords)?));
        }
        Self::from_terms(&coords, doc.grade, terms)
    }
}
