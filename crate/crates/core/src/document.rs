//! JSON documents for complexes.
//!
//! ```json
//! { "kind": "simplicial",
//!   "vertices": ["v1", ...],
//!   "edges": [{"id": "e1", "tail": "v1", "head": "v2"}, ...],
//!   "faces": [{"id": "f1", "boundary": [{"edge": "e1", "dir": 1}, ...]}, ...] }
//! ```
//!
//! Keys are emitted in that order and arrays in complex order, pretty-printed
//! with two-space indentation and a trailing newline. Parsing then emitting a
//! document produced by [`emit_complex`] reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::complex::{ComplexKind, DirectedComplex, PreComplex, Sign};
use crate::error::ComplexError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub kind: ComplexKind,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    pub faces: Vec<FaceDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceDoc {
    pub id: String,
    pub boundary: Vec<EdgeRefDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRefDoc {
    pub edge: String,
    pub dir: i64,
}

impl ComplexDoc {
    pub fn from_complex(c: &PreComplex) -> ComplexDoc {
        ComplexDoc {
            kind: c.kind(),
            vertices: c.vertices().to_vec(),
            edges: c
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    id: e.id.clone(),
                    tail: c.vertex_id(e.tail).to_string(),
                    head: c.vertex_id(e.head).to_string(),
                })
                .collect(),
            faces: c
                .faces()
                .iter()
                .map(|f| FaceDoc {
                    id: f.id.clone(),
                    boundary: f
                        .boundary
                        .iter()
                        .map(|r| EdgeRefDoc {
                            edge: c.edge_id(r.edge).to_string(),
                            dir: r.sign.as_i64(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn into_precomplex(self) -> Result<PreComplex, ComplexError> {
        let edges = self.edges.into_iter().map(|e| (e.id, e.tail, e.head)).collect();
        let mut faces = Vec::with_capacity(self.faces.len());
        for f in self.faces {
            let mut trail = Vec::with_capacity(f.boundary.len());
            for r in f.boundary {
                let sign = Sign::from_dir(r.dir).ok_or(ComplexError::BadDirection {
                    face: f.id.clone(),
                    dir: r.dir,
                })?;
                trail.push((r.edge, sign));
            }
            faces.push((f.id, trail));
        }
        PreComplex::from_parts(self.kind, self.vertices, edges, faces)
    }
}

/// Parses a document without enforcing the standing assumptions.
pub fn parse_precomplex(text: &str) -> Result<PreComplex, ComplexError> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(|e| ComplexError::Document(e.to_string()))?;
    doc.into_precomplex()
}

/// Parses and validates a complex document.
pub fn parse_complex(text: &str) -> Result<DirectedComplex, ComplexError> {
    DirectedComplex::try_from(parse_precomplex(text)?)
}

/// Canonical pretty JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn emit_complex(c: &PreComplex) -> String {
    to_canonical_json(&ComplexDoc::from_complex(c))
}
