//! JSON algebra definition files.
//!
//! ```json
//! {
//!   "name": "complex",
//!   "dimension": 2,
//!   "basis": ["1", "i"],
//!   "constants": [
//!     { "i": 0, "j": 0, "k": 0, "value": "1" },
//!     { "i": 1, "j": 1, "k": 0, "value": "-1" }
//!   ]
//! }
//! ```
//!
//! A record `{i, j, k, value}` sets `C^k_{ij}`, the coefficient of `e_k` in
//! `e_i * e_j`. Omitted triples are zero; duplicates are rejected.

use std::collections::HashSet;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{validate_spec, Algebra, AlgebraSpec};
use crate::error::Error;
use crate::exact::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub constants: Vec<ConstantRecord>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::File(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Nonzero constants in `(i, j, k)` order.
    pub fn from_algebra(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = algebra.constant(i, j, k);
                    if !c.is_zero() {
                        constants.push(ConstantRecord {
                            i,
                            j,
                            k,
                            value: c.to_string(),
                        });
                    }
                }
            }
        }
        Self {
            name: algebra.name().to_string(),
            dimension: n,
            basis: algebra.basis_names().to_vec(),
            constants,
        }
    }

    /// Expands the sparse records into a dense, still unvalidated, spec.
    pub fn to_spec(&self) -> Result<AlgebraSpec, Error> {
        let n = self.dimension;
        let mut spec = AlgebraSpec {
            name: self.name.clone(),
            dim: n,
            basis_names: self.basis.clone(),
            constants: vec![Rational::zero(); n * n * n],
        };
        let mut seen = HashSet::new();
        for rec in &self.constants {
            let (i, j, k) = (rec.i, rec.j, rec.k);
            if i >= n || j >= n || k >= n {
                return Err(Error::File(format!(
                    "constant ({i},{j},{k}) out of range for dimension {n}"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::File(format!("duplicate constant ({i},{j},{k})")));
            }
            spec.set_constant(i, j, k, parse_rational(&rec.value)?);
        }
        Ok(spec)
    }
}

/// Parses and validates an algebra file.
pub fn load_algebra(text: &str) -> Result<Algebra, Error> {
    validate_spec(AlgebraFile::from_json(text)?.to_spec()?)
}
