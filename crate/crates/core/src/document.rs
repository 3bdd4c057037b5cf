//! JSON interchange: algebras, twists, elements and dynamical twist data.
//!
//! Scalars are strings, tables are sparse lists sorted by index, so a parsed
//! and re-emitted document is byte-identical to its canonical form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::twisting::{DynamicalTwistData, Twist};
use crate::wha::{Element, WeakHopfAlgebra};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WhaDocument {
    pub schema_version: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// [i, j, k, c]: e_i e_j has coefficient c at e_k.
    pub mult: Vec<(usize, usize, usize, String)>,
    /// [i, j, k, c]: Δ(e_i) has coefficient c at e_j⊗e_k.
    pub comult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<(usize, String)>,
    pub counit: Vec<(usize, String)>,
    /// [r, c, x]: S(e_c) has coefficient x at e_r.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn check_version(v: &str) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(schema(format!("unsupported schema_version '{}'", v)));
    }
    Ok(())
}

pub fn sparse_pairs(v: &[Scalar]) -> Vec<(usize, String)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.to_string()))
        .collect()
}

pub fn dense_from_pairs(n: usize, pairs: &[(usize, String)], field: FieldSpec) -> Result<Vector> {
    let mut out = zero_vector(n);
    for (i, c) in pairs {
        if *i >= n {
            return Err(schema(format!("index {} out of range", i)));
        }
        out[*i] += &Scalar::parse(c, field)?;
    }
    Ok(out)
}

fn tensor_triples(v: &[Scalar], n: usize) -> Vec<(usize, usize, String)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(ab, c)| (ab / n, ab % n, c.to_string()))
        .collect()
}

fn dense_from_triples(n: usize, triples: &[(usize, usize, String)], field: FieldSpec) -> Result<Vector> {
    let mut out = zero_vector(n * n);
    for (a, b, c) in triples {
        if *a >= n || *b >= n {
            return Err(schema(format!("index ({}, {}) out of range", a, b)));
        }
        out[a * n + b] += &Scalar::parse(c, field)?;
    }
    Ok(out)
}

impl WhaDocument {
    pub fn from_algebra(h: &WeakHopfAlgebra, name: &str) -> Self {
        let n = h.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in h.mul_basis(i, j) {
                    mult.push((i, j, *k, c.to_string()));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..n {
            for (jk, c) in h.comul_basis(i) {
                comult.push((i, jk / n, jk % n, c.to_string()));
            }
        }
        let antipode = h.antipode().ok().map(|s| {
            let mut out = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    let x = s.get(r, c);
                    if !x.is_zero() {
                        out.push((r, c, x.to_string()));
                    }
                }
            }
            out
        });
        let mut metadata = BTreeMap::new();
        metadata.insert("name".to_string(), serde_json::Value::String(name.to_string()));
        WhaDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            field: h.field().to_string(),
            dim: n,
            basis: h.labels().to_vec(),
            mult,
            comult,
            unit: sparse_pairs(h.unit()),
            counit: sparse_pairs(h.counit()),
            antipode,
            metadata,
        }
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.parse()
    }

    pub fn to_algebra(&self) -> Result<WeakHopfAlgebra> {
        check_version(&self.schema_version)?;
        let field = self.field_spec()?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(schema(format!("basis has {} labels, dim is {}", self.basis.len(), n)));
        }
        let mut mult = vec![Vec::new(); n * n];
        for (i, j, k, c) in &self.mult {
            if *i >= n || *j >= n || *k >= n {
                return Err(schema(format!("mult entry ({}, {}, {}) out of range", i, j, k)));
            }
            mult[i * n + j].push((*k, Scalar::parse(c, field)?));
        }
        let mut comult = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comult {
            if *i >= n || *j >= n || *k >= n {
                return Err(schema(format!("comult entry ({}, {}, {}) out of range", i, j, k)));
            }
            comult[*i].push((j * n + k, Scalar::parse(c, field)?));
        }
        let antipode = match &self.antipode {
            None => None,
            Some(entries) => {
                let mut s = Matrix::zeros(n, n);
                for (r, c, x) in entries {
                    if *r >= n || *c >= n {
                        return Err(schema(format!("antipode entry ({}, {}) out of range", r, c)));
                    }
                    let v = s.get(*r, *c) + &Scalar::parse(x, field)?;
                    s.set(*r, *c, v);
                }
                Some(s)
            }
        };
        WeakHopfAlgebra::new(
            field,
            self.basis.clone(),
            mult,
            dense_from_pairs(n, &self.unit, field)?,
            comult,
            dense_from_pairs(n, &self.counit, field)?,
            antipode,
        )
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.get("name").and_then(|v| v.as_str())
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// Parses a document and builds its algebra.
pub fn parse_algebra(text: &str) -> Result<WeakHopfAlgebra> {
    WhaDocument::parse(text)?.to_algebra()
}

/// An element of H as a sparse pair list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementDocument(pub Vec<(usize, String)>);

impl ElementDocument {
    pub fn from_element(v: &[Scalar]) -> Self {
        ElementDocument(sparse_pairs(v))
    }

    pub fn to_element(&self, h: &WeakHopfAlgebra) -> Result<Element> {
        dense_from_pairs(h.dim(), &self.0, h.field())
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Θ and Θ̄ as [a, b, c] lists for e_a⊗e_b.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistDocument {
    pub schema_version: String,
    pub theta: Vec<(usize, usize, String)>,
    pub theta_bar: Vec<(usize, usize, String)>,
}

impl TwistDocument {
    pub fn from_twist(h: &WeakHopfAlgebra, t: &Twist) -> Self {
        TwistDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            theta: tensor_triples(&t.theta, h.dim()),
            theta_bar: tensor_triples(&t.theta_bar, h.dim()),
        }
    }

    pub fn to_twist(&self, h: &WeakHopfAlgebra) -> Result<Twist> {
        check_version(&self.schema_version)?;
        Ok(Twist {
            theta: dense_from_triples(h.dim(), &self.theta, h.field())?,
            theta_bar: dense_from_triples(h.dim(), &self.theta_bar, h.field())?,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The group A as sparse elements of U and one tensor J(λ) per character,
/// in the order of the character table (trivial character first).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DynamicalDocument {
    pub schema_version: String,
    pub group: Vec<Vec<(usize, String)>>,
    pub j: Vec<Vec<(usize, usize, String)>>,
}

impl DynamicalDocument {
    pub fn from_data(d: &DynamicalTwistData) -> Self {
        DynamicalDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            group: d.group.iter().map(|a| sparse_pairs(a)).collect(),
            j: d.j.iter().map(|t| tensor_triples(t, d.u.dim())).collect(),
        }
    }

    pub fn to_data(&self, u: &WeakHopfAlgebra) -> Result<DynamicalTwistData> {
        check_version(&self.schema_version)?;
        let group = self
            .group
            .iter()
            .map(|a| dense_from_pairs(u.dim(), a, u.field()))
            .collect::<Result<_>>()?;
        let j = self
            .j
            .iter()
            .map(|t| dense_from_triples(u.dim(), t, u.field()))
            .collect::<Result<_>>()?;
        Ok(DynamicalTwistData {
            u: u.clone(),
            group,
            j,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn round_trip_is_exact() {
        let k = FieldSpec::cyclotomic(3).unwrap();
        for h in [
            matrix_wha(2),
            sweedler(),
            group_algebra(&FiniteGroup::cyclic(3), k),
            group_algebra(&FiniteGroup::cyclic(3), k).dualize(),
        ] {
            let doc = WhaDocument::from_algebra(&h, "x");
            let text = doc.to_json();
            let back = WhaDocument::parse(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
            assert_eq!(back.to_algebra().unwrap(), h);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(WhaDocument::parse("{"), Err(Error::Parse(_))));
        let mut doc = WhaDocument::from_algebra(&matrix_wha(2), "x");
        doc.mult.push((9, 0, 0, "1".into()));
        assert!(matches!(doc.to_algebra(), Err(Error::Schema(_))));
        let mut doc = WhaDocument::from_algebra(&matrix_wha(2), "x");
        doc.schema_version = "2".into();
        assert!(matches!(doc.to_algebra(), Err(Error::Schema(_))));
    }

    #[test]
    fn twist_round_trip() {
        let h = matrix_wha(2);
        let t = Twist::trivial(&h);
        let doc = TwistDocument::from_twist(&h, &t);
        let back = TwistDocument::parse(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back.to_twist(&h).unwrap(), t);
    }
}
