//! Directed 2-complexes: vertices, directed edges and faces given as
//! oriented closed trails of signed edge references.
//!
//! Two types share one representation. [`PreComplex`] only guarantees that
//! every reference resolves and every face boundary is a closed trail;
//! [`DirectedComplex`] additionally satisfies the standing assumptions
//! (every vertex lies on an edge, every edge lies on a face) and, for
//! [`ComplexKind::Simplicial`], the simplicial rules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::ComplexError;

pub type VertexIdx = usize;
pub type EdgeIdx = usize;
pub type FaceIdx = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Simplicial,
    General,
}

/// Traversal direction of an edge reference, relative to the edge's chosen direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_dir(dir: i64) -> Option<Sign> {
        match dir {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// One of the two ends of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: VertexIdx,
    pub head: VertexIdx,
}

impl Edge {
    pub fn endpoint(&self, end: End) -> VertexIdx {
        match end {
            End::Tail => self.tail,
            End::Head => self.head,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedEdgeRef {
    pub edge: EdgeIdx,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub boundary: Vec<SignedEdgeRef>,
}

/// The `pos`-th edge reference of the boundary trail of `face`.
///
/// Incidences identify a face meeting an edge; for simplicial complexes
/// there is exactly one incidence per (face, edge) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Incidence {
    pub face: FaceIdx,
    pub pos: usize,
}

/// A standing-assumption or simplicial-rule violation reported by [`PreComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule")]
pub enum Violation {
    IsolatedVertex { vertex: String },
    EdgeWithoutFace { edge: String },
    Loop { edge: String },
    ParallelEdges { first: String, second: String },
    NotTriangle { face: String },
    RepeatedEdgeInFace { face: String, edge: String },
    RepeatedCornerInFace { face: String },
    DuplicateFace { first: String, second: String },
}

impl Violation {
    /// Violations of the "every vertex on an edge, every edge on a face" assumption.
    pub fn is_unincident(&self) -> bool {
        matches!(
            self,
            Violation::IsolatedVertex { .. } | Violation::EdgeWithoutFace { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IsolatedVertex { vertex } => write!(f, "vertex {vertex} lies on no edge"),
            Violation::EdgeWithoutFace { edge } => write!(f, "edge {edge} lies on no face"),
            Violation::Loop { edge } => write!(f, "edge {edge} is a loop"),
            Violation::ParallelEdges { first, second } => {
                write!(f, "edges {first} and {second} are parallel")
            }
            Violation::NotTriangle { face } => write!(f, "face {face} is not a triangle"),
            Violation::RepeatedEdgeInFace { face, edge } => {
                write!(f, "face {face} uses edge {edge} more than once")
            }
            Violation::RepeatedCornerInFace { face } => {
                write!(f, "face {face} visits a vertex more than once")
            }
            Violation::DuplicateFace { first, second } => {
                write!(f, "faces {first} and {second} span the same vertex set")
            }
        }
    }
}

/// A complex whose references resolve and whose faces are closed trails, with
/// faceless edges and isolated vertices permitted.
#[derive(Clone, Debug)]
pub struct PreComplex {
    kind: ComplexKind,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    vertex_index: HashMap<String, VertexIdx>,
    edge_index: HashMap<String, EdgeIdx>,
    face_index: HashMap<String, FaceIdx>,
    incidences: Vec<Vec<Incidence>>,
}

impl PartialEq for PreComplex {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.faces == other.faces
    }
}

impl Eq for PreComplex {}

/// Face boundary given by edge id and traversal sign, as accepted by [`PreComplex::from_parts`].
pub type FaceSpec = (String, Vec<(String, Sign)>);

fn index_ids(ids: &[String], what: &'static str) -> Result<HashMap<String, usize>, ComplexError> {
    let mut map = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if id.is_empty() {
            return Err(ComplexError::EmptyId { kind: what });
        }
        if map.insert(id.clone(), i).is_some() {
            return Err(ComplexError::DuplicateId {
                kind: what,
                id: id.clone(),
            });
        }
    }
    Ok(map)
}

impl PreComplex {
    /// Builds a complex from identifiers. Fails on duplicate or dangling ids and on
    /// face boundaries that are empty or not closed.
    pub fn from_parts(
        kind: ComplexKind,
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
        faces: Vec<FaceSpec>,
    ) -> Result<PreComplex, ComplexError> {
        let vertex_index = index_ids(&vertices, "vertex")?;
        let edge_ids: Vec<String> = edges.iter().map(|e| e.0.clone()).collect();
        let edge_index = index_ids(&edge_ids, "edge")?;
        let face_ids: Vec<String> = faces.iter().map(|f| f.0.clone()).collect();
        let face_index = index_ids(&face_ids, "face")?;

        let lookup_vertex = |owner: &str, v: &str| {
            vertex_index
                .get(v)
                .copied()
                .ok_or_else(|| ComplexError::UnknownReference {
                    owner: owner.to_string(),
                    reference: v.to_string(),
                })
        };
        let mut built_edges = Vec::with_capacity(edges.len());
        for (id, tail, head) in edges {
            let tail = lookup_vertex(&id, &tail)?;
            let head = lookup_vertex(&id, &head)?;
            built_edges.push(Edge { id, tail, head });
        }

        let mut built_faces = Vec::with_capacity(faces.len());
        for (id, trail) in faces {
            if trail.is_empty() {
                return Err(ComplexError::EmptyTrail { face: id });
            }
            let mut boundary = Vec::with_capacity(trail.len());
            for (edge, sign) in trail {
                let e = edge_index
                    .get(&edge)
                    .copied()
                    .ok_or_else(|| ComplexError::UnknownReference {
                        owner: id.clone(),
                        reference: edge.clone(),
                    })?;
                boundary.push(SignedEdgeRef { edge: e, sign });
            }
            built_faces.push(Face { id, boundary });
        }

        let mut complex = PreComplex {
            kind,
            vertices,
            edges: built_edges,
            faces: built_faces,
            vertex_index,
            edge_index,
            face_index,
            incidences: Vec::new(),
        };
        for f in 0..complex.faces.len() {
            let k = complex.faces[f].boundary.len();
            for i in 0..k {
                let next = complex.faces[f].boundary[(i + 1) % k];
                if complex.ref_end(complex.faces[f].boundary[i]) != complex.ref_start(next) {
                    return Err(ComplexError::NonClosedTrail {
                        face: complex.faces[f].id.clone(),
                        position: i,
                    });
                }
            }
        }
        complex.rebuild_incidences();
        Ok(complex)
    }

    fn rebuild_incidences(&mut self) {
        let mut incidences = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for (pos, r) in face.boundary.iter().enumerate() {
                incidences[r.edge].push(Incidence { face: f, pos });
            }
        }
        for list in &mut incidences {
            list.sort_by(|a, b| self.incidence_cmp(*a, *b));
        }
        self.incidences = incidences;
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex(&self, id: &str) -> Option<VertexIdx> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge(&self, id: &str) -> Option<EdgeIdx> {
        self.edge_index.get(id).copied()
    }

    pub fn face(&self, id: &str) -> Option<FaceIdx> {
        self.face_index.get(id).copied()
    }

    pub fn vertex_id(&self, v: VertexIdx) -> &str {
        &self.vertices[v]
    }

    pub fn edge_id(&self, e: EdgeIdx) -> &str {
        &self.edges[e].id
    }

    pub fn face_id(&self, f: FaceIdx) -> &str {
        &self.faces[f].id
    }

    /// Vertex where a signed reference starts.
    pub fn ref_start(&self, r: SignedEdgeRef) -> VertexIdx {
        let e = &self.edges[r.edge];
        match r.sign {
            Sign::Pos => e.tail,
            Sign::Neg => e.head,
        }
    }

    /// Vertex where a signed reference ends.
    pub fn ref_end(&self, r: SignedEdgeRef) -> VertexIdx {
        let e = &self.edges[r.edge];
        match r.sign {
            Sign::Pos => e.head,
            Sign::Neg => e.tail,
        }
    }

    /// The vertex at corner `j` of `face`: the start of boundary reference `j`.
    pub fn corner(&self, face: FaceIdx, j: usize) -> VertexIdx {
        self.ref_start(self.faces[face].boundary[j])
    }

    pub fn boundary_ref(&self, inc: Incidence) -> SignedEdgeRef {
        self.faces[inc.face].boundary[inc.pos]
    }

    /// All incidences of faces with `e`, ordered by (face id, position).
    pub fn incidences(&self, e: EdgeIdx) -> &[Incidence] {
        &self.incidences[e]
    }

    /// Number of face incidences at `e`.
    pub fn edge_degree(&self, e: EdgeIdx) -> usize {
        self.incidences[e].len()
    }

    pub fn incidence_cmp(&self, a: Incidence, b: Incidence) -> std::cmp::Ordering {
        self.faces[a.face]
            .id
            .as_bytes()
            .cmp(self.faces[b.face].id.as_bytes())
            .then(a.pos.cmp(&b.pos))
    }

    /// Human-readable incidence label: the face id, suffixed with `#k` when the
    /// face meets the edge more than once (k-th meeting in trail order).
    pub fn incidence_label(&self, inc: Incidence) -> String {
        let edge = self.faces[inc.face].boundary[inc.pos].edge;
        let meetings: Vec<usize> = self.faces[inc.face]
            .boundary
            .iter()
            .enumerate()
            .filter(|(_, r)| r.edge == edge)
            .map(|(i, _)| i)
            .collect();
        if meetings.len() == 1 {
            self.faces[inc.face].id.clone()
        } else {
            let k = meetings.iter().position(|&i| i == inc.pos).unwrap_or(0);
            format!("{}#{}", self.faces[inc.face].id, k)
        }
    }

    /// Resolves a label produced by [`Self::incidence_label`] at edge `e`.
    pub fn parse_incidence_label(&self, e: EdgeIdx, label: &str) -> Option<Incidence> {
        let (face_id, k) = match label.rsplit_once('#') {
            Some((f, k)) if self.face_index.contains_key(f) => (f, k.parse::<usize>().ok()?),
            _ => (label, 0),
        };
        let f = self.face(face_id)?;
        self.incidences[e].iter().filter(|inc| inc.face == f).nth(k).copied()
    }

    /// Vertex indices sorted bytewise by id.
    pub fn sorted_vertices(&self) -> Vec<VertexIdx> {
        let mut order: Vec<VertexIdx> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].as_bytes().cmp(self.vertices[b].as_bytes()));
        order
    }

    /// Edge indices sorted bytewise by id.
    pub fn sorted_edges(&self) -> Vec<EdgeIdx> {
        let mut order: Vec<EdgeIdx> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edges[a].id.as_bytes().cmp(self.edges[b].id.as_bytes()));
        order
    }

    /// Face indices sorted bytewise by id.
    pub fn sorted_faces(&self) -> Vec<FaceIdx> {
        let mut order: Vec<FaceIdx> = (0..self.faces.len()).collect();
        order.sort_by(|&a, &b| self.faces[a].id.as_bytes().cmp(self.faces[b].id.as_bytes()));
        order
    }

    /// Edges incident with `v`; a loop appears once.
    pub fn edges_at(&self, v: VertexIdx) -> Vec<EdgeIdx> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].tail == v || self.edges[e].head == v)
            .collect()
    }

    /// Distinct vertices on the boundary of `f`, in first-visit order.
    pub fn face_vertices(&self, f: FaceIdx) -> Vec<VertexIdx> {
        let mut seen = Vec::new();
        for j in 0..self.faces[f].boundary.len() {
            let v = self.corner(f, j);
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen
    }

    /// Number of distinct edges on the boundary of `f`.
    pub fn face_degree(&self, f: FaceIdx) -> usize {
        let mut edges: Vec<EdgeIdx> = self.faces[f].boundary.iter().map(|r| r.edge).collect();
        edges.sort_unstable();
        edges.dedup();
        edges.len()
    }

    /// Reports every standing-assumption and (for simplicial complexes)
    /// simplicial-rule violation. Empty iff the complex is a valid
    /// [`DirectedComplex`].
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut on_edge = vec![false; self.vertices.len()];
        for e in &self.edges {
            on_edge[e.tail] = true;
            on_edge[e.head] = true;
        }
        for (v, used) in on_edge.iter().enumerate() {
            if !used {
                out.push(Violation::IsolatedVertex {
                    vertex: self.vertices[v].clone(),
                });
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if self.incidences[e].is_empty() {
                out.push(Violation::EdgeWithoutFace { edge: edge.id.clone() });
            }
        }
        if self.kind == ComplexKind::Simplicial {
            self.validate_simplicial(&mut out);
        }
        out
    }

    fn validate_simplicial(&self, out: &mut Vec<Violation>) {
        let mut by_ends: BTreeMap<(VertexIdx, VertexIdx), EdgeIdx> = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.is_loop() {
                out.push(Violation::Loop { edge: edge.id.clone() });
                continue;
            }
            let key = (edge.tail.min(edge.head), edge.tail.max(edge.head));
            if let Some(&first) = by_ends.get(&key) {
                out.push(Violation::ParallelEdges {
                    first: self.edges[first].id.clone(),
                    second: edge.id.clone(),
                });
            } else {
                by_ends.insert(key, e);
            }
        }
        let mut by_vertex_set: BTreeMap<Vec<VertexIdx>, FaceIdx> = BTreeMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            if face.boundary.len() != 3 {
                out.push(Violation::NotTriangle { face: face.id.clone() });
            }
            let mut edges: Vec<EdgeIdx> = face.boundary.iter().map(|r| r.edge).collect();
            edges.sort_unstable();
            if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                out.push(Violation::RepeatedEdgeInFace {
                    face: face.id.clone(),
                    edge: self.edges[w[0]].id.clone(),
                });
            }
            let mut corners: Vec<VertexIdx> = (0..face.boundary.len()).map(|j| self.corner(f, j)).collect();
            corners.sort_unstable();
            let before = corners.len();
            corners.dedup();
            if corners.len() != before {
                out.push(Violation::RepeatedCornerInFace { face: face.id.clone() });
            }
            if let Some(&first) = by_vertex_set.get(&corners) {
                out.push(Violation::DuplicateFace {
                    first: self.faces[first].id.clone(),
                    second: face.id.clone(),
                });
            } else {
                by_vertex_set.insert(corners, f);
            }
        }
    }

    /// The subcomplex on `keep` (a membership mask over vertices): the kept
    /// vertices, and the edges and faces all of whose vertices are kept. Order
    /// and ids are preserved.
    pub fn restrict(&self, keep: &[bool]) -> PreComplex {
        let vertices: Vec<String> = (0..self.vertices.len())
            .filter(|&v| keep[v])
            .map(|v| self.vertices[v].clone())
            .collect();
        let edge_kept: Vec<bool> = self.edges.iter().map(|e| keep[e.tail] && keep[e.head]).collect();
        let edges = self
            .edges
            .iter()
            .zip(&edge_kept)
            .filter(|(_, k)| **k)
            .map(|(e, _)| {
                (
                    e.id.clone(),
                    self.vertices[e.tail].clone(),
                    self.vertices[e.head].clone(),
                )
            })
            .collect();
        let faces = self
            .faces
            .iter()
            .filter(|f| f.boundary.iter().all(|r| edge_kept[r.edge]))
            .map(|f| {
                let trail = f
                    .boundary
                    .iter()
                    .map(|r| (self.edges[r.edge].id.clone(), r.sign))
                    .collect();
                (f.id.clone(), trail)
            })
            .collect();
        PreComplex::from_parts(self.kind, vertices, edges, faces)
            .expect("restriction of a well-formed complex is well-formed")
    }

    /// Same complex with a different kind tag.
    pub fn with_kind(mut self, kind: ComplexKind) -> PreComplex {
        self.kind = kind;
        self
    }
}

/// A complex satisfying every invariant checked by [`PreComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedComplex(PreComplex);

impl DirectedComplex {
    pub fn into_inner(self) -> PreComplex {
        self.0
    }

    pub fn as_pre(&self) -> &PreComplex {
        &self.0
    }
}

impl Deref for DirectedComplex {
    type Target = PreComplex;

    fn deref(&self) -> &PreComplex {
        &self.0
    }
}

impl AsRef<PreComplex> for DirectedComplex {
    fn as_ref(&self) -> &PreComplex {
        &self.0
    }
}

impl AsRef<PreComplex> for PreComplex {
    fn as_ref(&self) -> &PreComplex {
        self
    }
}

impl TryFrom<PreComplex> for DirectedComplex {
    type Error = ComplexError;

    fn try_from(pre: PreComplex) -> Result<Self, ComplexError> {
        let violations = pre.validate();
        if violations.is_empty() {
            return Ok(DirectedComplex(pre));
        }
        if violations.iter().all(Violation::is_unincident) {
            Err(ComplexError::EmptyKind(violations))
        } else {
            Err(ComplexError::SimplicialViolation(
                violations.into_iter().filter(|v| !v.is_unincident()).collect(),
            ))
        }
    }
}
