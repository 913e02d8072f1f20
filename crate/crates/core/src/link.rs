//! Link graphs.
//!
//! The link graph at `v` has one vertex per edge-end at `v` (a loop at `v`
//! contributes both of its ends) and one edge per traversal of `v` by a face
//! boundary, joining the edge the face arrives on with the edge it leaves on.
//! Each link edge has two darts: side 0 sits at the arrival edge-end, side 1
//! at the departure edge-end. Dart `d` belongs to link edge `d / 2`.

use rustworkx_core::petgraph::graph::{NodeIndex, UnGraph};
use rustworkx_core::petgraph::unionfind::UnionFind;
use rustworkx_core::planar::is_planar;

use crate::complex::{EdgeIdx, End, FaceIdx, Incidence, PreComplex, Sign, VertexIdx};
use crate::error::TopologyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: EdgeIdx,
    pub end: End,
}

/// A face passing through a vertex: `corner` is the index of the boundary
/// reference the face leaves the vertex on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Traversal {
    pub face: FaceIdx,
    pub corner: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkEdge {
    pub traversal: Traversal,
    /// Which visit of the center this is, counted along the face trail.
    pub ordinal: usize,
    /// Link vertices at side 0 (arrival) and side 1 (departure).
    pub ends: [usize; 2],
}

#[derive(Clone, Debug)]
pub struct LinkGraph {
    pub center: VertexIdx,
    pub vertices: Vec<EdgeEnd>,
    pub edges: Vec<LinkEdge>,
    /// Darts at each link vertex, in link-edge order.
    incident: Vec<Vec<usize>>,
}

impl LinkGraph {
    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn dart_vertex(&self, dart: usize) -> usize {
        self.edges[dart / 2].ends[dart % 2]
    }

    pub fn darts_at(&self, link_vertex: usize) -> &[usize] {
        &self.incident[link_vertex]
    }

    pub fn vertex_of(&self, ee: EdgeEnd) -> Option<usize> {
        self.vertices.iter().position(|x| *x == ee)
    }

    pub fn edge_of(&self, t: Traversal) -> Option<usize> {
        self.edges.iter().position(|e| e.traversal == t)
    }

    /// The dart at edge-end `ee` contributed by incidence `inc` of `ee.edge`.
    pub fn dart_of(&self, c: &PreComplex, inc: Incidence, ee: EdgeEnd) -> Option<usize> {
        let r = c.boundary_ref(inc);
        debug_assert_eq!(r.edge, ee.edge);
        let start_end = match r.sign {
            Sign::Pos => End::Tail,
            Sign::Neg => End::Head,
        };
        let k = c.faces()[inc.face].boundary.len();
        let (corner, side) = if ee.end == start_end {
            (inc.pos, 1)
        } else {
            ((inc.pos + 1) % k, 0)
        };
        let edge = self.edge_of(Traversal { face: inc.face, corner })?;
        Some(2 * edge + side)
    }

    /// Connected components as a label per link vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.ends[0], e.ends[1]);
        }
        let mut seen = vec![usize::MAX; self.vertices.len()];
        let mut labels = vec![0; self.vertices.len()];
        let mut next = 0;
        for (v, label) in labels.iter_mut().enumerate() {
            let r = uf.find(v);
            if seen[r] == usize::MAX {
                seen[r] = next;
                next += 1;
            }
            *label = seen[r];
        }
        (labels, next)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    pub fn to_petgraph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::with_capacity(self.vertices.len(), self.edges.len());
        for _ in &self.vertices {
            g.add_node(());
        }
        for e in &self.edges {
            g.add_edge(NodeIndex::new(e.ends[0]), NodeIndex::new(e.ends[1]), ());
        }
        g
    }

    /// Planarity of the underlying simple graph (loops and repeated edges
    /// never affect planarity).
    pub fn is_planar(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| e.ends[0] != e.ends[1])
            .map(|e| (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1])))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        let mut g: UnGraph<(), ()> = UnGraph::with_capacity(self.vertices.len(), pairs.len());
        for _ in &self.vertices {
            g.add_node(());
        }
        for (a, b) in pairs {
            g.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
        }
        is_planar(&g)
    }

    pub fn vertex_label(&self, c: &PreComplex, i: usize) -> String {
        let ee = self.vertices[i];
        let edge = &c.edges()[ee.edge];
        if edge.is_loop() {
            let end = match ee.end {
                End::Tail => "tail",
                End::Head => "head",
            };
            format!("{}:{end}", edge.id)
        } else {
            edge.id.clone()
        }
    }

    pub fn edge_label(&self, c: &PreComplex, i: usize) -> String {
        format!("{}#{}", c.face_id(self.edges[i].traversal.face), self.edges[i].ordinal)
    }
}

/// Link graph of `c` at `v`. Link vertices are ordered by (edge id, end) and
/// link edges by (face id, corner).
pub fn link_graph(c: &PreComplex, v: VertexIdx) -> Result<LinkGraph, TopologyError> {
    if v >= c.vertex_count() {
        return Err(TopologyError::UnknownVertex(v.to_string()));
    }
    Ok(build_link_graph(c, v))
}

/// Link graph at the vertex with id `id`.
pub fn link_graph_by_id(c: &PreComplex, id: &str) -> Result<LinkGraph, TopologyError> {
    let v = c
        .vertex(id)
        .ok_or_else(|| TopologyError::UnknownVertex(id.to_string()))?;
    Ok(build_link_graph(c, v))
}

fn build_link_graph(c: &PreComplex, v: VertexIdx) -> LinkGraph {
    let edge_rank = {
        let mut rank = vec![0; c.edge_count()];
        for (i, e) in c.sorted_edges().into_iter().enumerate() {
            rank[e] = i;
        }
        rank
    };
    let mut vertices = Vec::new();
    for (e, edge) in c.edges().iter().enumerate() {
        if edge.tail == v {
            vertices.push(EdgeEnd {
                edge: e,
                end: End::Tail,
            });
        }
        if edge.head == v {
            vertices.push(EdgeEnd {
                edge: e,
                end: End::Head,
            });
        }
    }
    vertices.sort_by_key(|ee| (edge_rank[ee.edge], ee.end));
    let position = |ee: EdgeEnd| {
        vertices
            .iter()
            .position(|x| *x == ee)
            .expect("edge-end at the center is a link vertex")
    };

    let mut edges = Vec::new();
    for f in c.sorted_faces() {
        let trail = &c.faces()[f].boundary;
        let k = trail.len();
        let mut ordinal = 0;
        for j in 0..k {
            if c.corner(f, j) != v {
                continue;
            }
            let prev = trail[(j + k - 1) % k];
            let next = trail[j];
            let arrival = EdgeEnd {
                edge: prev.edge,
                end: if prev.sign == Sign::Pos { End::Head } else { End::Tail },
            };
            let departure = EdgeEnd {
                edge: next.edge,
                end: if next.sign == Sign::Pos { End::Tail } else { End::Head },
            };
            edges.push(LinkEdge {
                traversal: Traversal { face: f, corner: j },
                ordinal,
                ends: [position(arrival), position(departure)],
            });
            ordinal += 1;
        }
    }
    let mut incident = vec![Vec::new(); vertices.len()];
    for (i, e) in edges.iter().enumerate() {
        incident[e.ends[0]].push(2 * i);
        incident[e.ends[1]].push(2 * i + 1);
    }
    LinkGraph {
        center: v,
        vertices,
        edges,
        incident,
    }
}

/// Whether every link graph is connected; on failure the witness is the
/// bytewise-least vertex whose link is disconnected.
pub fn is_locally_connected(c: &PreComplex) -> (bool, Option<VertexIdx>) {
    for v in c.sorted_vertices() {
        if !build_link_graph(c, v).is_connected() {
            return (false, Some(v));
        }
    }
    (true, None)
}
