//! Local surfaces.
//!
//! Consecutive incidences `a, b` in σ(e) relate the orientation of `face(a)`
//! that runs along `e` with the orientation of `face(b)` that runs against
//! it; a single-face edge relates the two orientations of its face. Each
//! class of the generated equivalence is glued into a closed oriented surface
//! with one edge per related pair.

use rustworkx_core::petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::cellmap::CellComplex;
use crate::complex::{ComplexKind, EdgeIdx, FaceIdx, Incidence, PreComplex, Sign, VertexIdx};
use crate::document::{ComplexDoc, EdgeDoc, EdgeRefDoc, FaceDoc};
use crate::link::Traversal;
use crate::rotation::RotationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedFace {
    pub face: FaceIdx,
    /// `Pos` follows the stored trail, `Neg` reverses it.
    pub sense: Sign,
}

impl OrientedFace {
    pub fn index(self) -> usize {
        2 * self.face + usize::from(self.sense == Sign::Neg)
    }

    pub fn from_index(i: usize) -> OrientedFace {
        OrientedFace {
            face: i / 2,
            sense: if i.is_multiple_of(2) { Sign::Pos } else { Sign::Neg },
        }
    }

    pub fn label(self, c: &PreComplex) -> String {
        format!("{}{}", c.face_id(self.face), self.sense)
    }

    pub fn cmp_in(self, other: OrientedFace, c: &PreComplex) -> std::cmp::Ordering {
        c.face_id(self.face)
            .as_bytes()
            .cmp(c.face_id(other.face).as_bytes())
            .then(self.sense.cmp(&other.sense))
    }
}

/// A copy of edge `e` shared by `from` (running along `e`) and `to` (running against it).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GluedEdge {
    pub edge: EdgeIdx,
    pub from: OrientedFace,
    pub to: OrientedFace,
    pub from_incidence: Incidence,
    pub to_incidence: Incidence,
    /// Index of `from_incidence` in the cyclic order at `edge`.
    pub slot: usize,
}

#[derive(Clone, Debug)]
pub struct LocalSurface {
    pub id: String,
    /// Sorted by face id, `+` before `-`.
    pub members: Vec<OrientedFace>,
    /// Glued edge `g` of the map has darts `2g` (leaving the tail of `edge`)
    /// and `2g + 1` (leaving its head).
    pub glued: Vec<GluedEdge>,
    /// Cells in member order.
    pub map: CellComplex,
    /// The vertex of `C` each surface vertex is a copy of.
    pub vertex_origin: Vec<VertexIdx>,
    /// For every dart: the member it lies on and the trail position it traverses.
    dart_step: Vec<(usize, usize)>,
}

impl LocalSurface {
    pub fn chi(&self) -> i64 {
        self.map.euler_characteristic()
    }

    pub fn genus(&self) -> i64 {
        let chi = self.chi();
        assert!(chi % 2 == 0 && chi <= 2, "local surface {} has chi {chi}", self.id);
        (2 - chi) / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn contains(&self, of: OrientedFace) -> bool {
        self.members.contains(&of)
    }

    /// Member and trail position traversed by `dart`.
    pub fn dart_step(&self, dart: usize) -> (OrientedFace, usize) {
        let (m, pos) = self.dart_step[dart];
        (self.members[m], pos)
    }

    /// For every surface vertex, its origin and the face traversals of the
    /// origin met walking once around it.
    pub fn corner_words(&self, c: &PreComplex) -> Vec<(VertexIdx, Vec<Traversal>)> {
        (0..self.map.vertex_count())
            .map(|x| {
                let word = self
                    .map
                    .rotator(x)
                    .iter()
                    .map(|&d| {
                        let (of, p) = self.dart_step(d ^ 1);
                        let (_, next) = self.dart_step(self.map.rot_next(d));
                        let k = c.faces()[of.face].boundary.len();
                        debug_assert!(match of.sense {
                            Sign::Pos => next == (p + 1) % k,
                            Sign::Neg => (next + 1) % k == p,
                        });
                        let corner = if of.sense == Sign::Pos { next } else { p };
                        Traversal { face: of.face, corner }
                    })
                    .collect();
                (self.vertex_origin[x], word)
            })
            .collect()
    }

    pub fn to_complex_doc(&self) -> ComplexDoc {
        let labels = self.map.vertex_labels();
        ComplexDoc {
            kind: ComplexKind::General,
            vertices: labels.to_vec(),
            edges: (0..self.glued.len())
                .map(|g| EdgeDoc {
                    id: self.map.edge_labels()[g].clone(),
                    tail: labels[self.map.dart_vertex(2 * g)].clone(),
                    head: labels[self.map.dart_vertex(2 * g + 1)].clone(),
                })
                .collect(),
            faces: self
                .map
                .cells()
                .iter()
                .zip(self.map.cell_labels())
                .map(|(cell, id)| FaceDoc {
                    id: id.clone(),
                    boundary: cell
                        .iter()
                        .map(|&d| EdgeRefDoc {
                            edge: self.map.edge_labels()[d / 2].clone(),
                            dir: if d % 2 == 0 { 1 } else { -1 },
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn report(&self, c: &PreComplex) -> SurfaceReport {
        SurfaceReport {
            id: self.id.clone(),
            chi: self.chi(),
            genus: self.genus(),
            members: self.members.iter().map(|m| m.label(c)).collect(),
            glued: self
                .glued
                .iter()
                .zip(self.map.edge_labels())
                .map(|(g, id)| GluedReport {
                    id: id.clone(),
                    edge: c.edge_id(g.edge).to_string(),
                    from: g.from.label(c),
                    to: g.to.label(c),
                })
                .collect(),
            complex: self.to_complex_doc(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GluedReport {
    pub id: String,
    pub edge: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReport {
    pub id: String,
    pub chi: i64,
    pub genus: i64,
    pub members: Vec<String>,
    pub glued: Vec<GluedReport>,
    pub complex: ComplexDoc,
}

/// All glued edges of `(c, sigma)`, by edge id then slot.
pub fn glued_edges(c: &PreComplex, sigma: &RotationSystem) -> Vec<GluedEdge> {
    let mut out = Vec::new();
    for e in c.sorted_edges() {
        let order = sigma.cyclic_order(c, e);
        let d = order.len();
        for (slot, &a) in order.iter().enumerate() {
            let b = order[(slot + 1) % d];
            let sa = c.boundary_ref(a).sign;
            let sb = c.boundary_ref(b).sign;
            out.push(GluedEdge {
                edge: e,
                from: OrientedFace {
                    face: a.face,
                    sense: sa,
                },
                to: OrientedFace {
                    face: b.face,
                    sense: sb.flip(),
                },
                from_incidence: a,
                to_incidence: b,
                slot,
            });
        }
    }
    out
}

/// Local-surface class of every oriented face (indexed by [`OrientedFace::index`]),
/// classes numbered by least member.
pub fn surface_classes(c: &PreComplex, sigma: &RotationSystem) -> (Vec<usize>, usize) {
    let n = 2 * c.face_count();
    let mut uf = UnionFind::new(n);
    for g in glued_edges(c, sigma) {
        uf.union(g.from.index(), g.to.index());
    }
    let mut order: Vec<OrientedFace> = (0..n).map(OrientedFace::from_index).collect();
    order.sort_by(|a, b| a.cmp_in(*b, c));
    let mut class_of_root = vec![usize::MAX; n];
    let mut class = vec![0; n];
    let mut next = 0;
    for of in order {
        let r = uf.find(of.index());
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = next;
            next += 1;
        }
        class[of.index()] = class_of_root[r];
    }
    (class, next)
}

/// The local surfaces of `(c, sigma)`, ordered by least member; ids `S0`, `S1`, ...
pub fn local_surfaces(c: &PreComplex, sigma: &RotationSystem) -> Vec<LocalSurface> {
    let glued = glued_edges(c, sigma);
    let (class, count) = surface_classes(c, sigma);
    // glued edge leaving each incidence along / against its edge
    let mut along = vec![Vec::new(); c.face_count()];
    let mut against = vec![Vec::new(); c.face_count()];
    for f in 0..c.face_count() {
        along[f] = vec![usize::MAX; c.faces()[f].boundary.len()];
        against[f] = vec![usize::MAX; c.faces()[f].boundary.len()];
    }
    for (g, ge) in glued.iter().enumerate() {
        along[ge.from_incidence.face][ge.from_incidence.pos] = g;
        against[ge.to_incidence.face][ge.to_incidence.pos] = g;
    }

    let mut surfaces = Vec::with_capacity(count);
    for s in 0..count {
        let mut members: Vec<OrientedFace> = (0..2 * c.face_count())
            .filter(|&i| class[i] == s)
            .map(OrientedFace::from_index)
            .collect();
        members.sort_by(|a, b| a.cmp_in(*b, c));
        let mine: Vec<usize> = (0..glued.len())
            .filter(|&g| class[glued[g].from.index()] == s)
            .collect();
        let mut local = vec![usize::MAX; glued.len()];
        for (i, &g) in mine.iter().enumerate() {
            local[g] = i;
        }
        let mut dart_step = vec![(0, 0); 2 * mine.len()];
        let mut cells = Vec::with_capacity(members.len());
        for (m, of) in members.iter().enumerate() {
            let trail = &c.faces()[of.face].boundary;
            let k = trail.len();
            let positions: Vec<usize> = match of.sense {
                Sign::Pos => (0..k).collect(),
                Sign::Neg => (0..k).rev().collect(),
            };
            let cell: Vec<usize> = positions
                .into_iter()
                .map(|pos| {
                    let dart = match of.sense.times(trail[pos].sign) {
                        Sign::Pos => 2 * local[along[of.face][pos]],
                        Sign::Neg => 2 * local[against[of.face][pos]] + 1,
                    };
                    dart_step[dart] = (m, pos);
                    dart
                })
                .collect();
            cells.push(cell);
        }

        let mut copies = vec![0usize; c.edge_count()];
        for &g in &mine {
            copies[glued[g].edge] += 1;
        }
        let edge_labels = mine
            .iter()
            .map(|&g| {
                let e = glued[g].edge;
                if copies[e] == 1 {
                    c.edge_id(e).to_string()
                } else {
                    format!("{}~{}", c.edge_id(e), glued[g].slot)
                }
            })
            .collect();
        let origin_of_dart = |d: usize| {
            let edge = &c.edges()[glued[mine[d / 2]].edge];
            if d.is_multiple_of(2) {
                edge.tail
            } else {
                edge.head
            }
        };
        let map = CellComplex::from_cells(edge_labels, cells, members.iter().map(|m| m.label(c)).collect(), |d| {
            c.vertex_id(origin_of_dart(d)).to_string()
        })
        .expect("local-surface gluing uses every dart exactly once");
        let vertex_origin: Vec<VertexIdx> = (0..map.vertex_count())
            .map(|x| origin_of_dart(map.rotator(x)[0]))
            .collect();
        let mut total = vec![0usize; c.vertex_count()];
        for &v in &vertex_origin {
            total[v] += 1;
        }
        let mut seen = vec![0usize; c.vertex_count()];
        let labels = vertex_origin
            .iter()
            .map(|&v| {
                seen[v] += 1;
                if total[v] == 1 {
                    c.vertex_id(v).to_string()
                } else {
                    format!("{}~{}", c.vertex_id(v), seen[v] - 1)
                }
            })
            .collect();
        surfaces.push(LocalSurface {
            id: format!("S{s}"),
            members,
            glued: mine.iter().map(|&g| glued[g]).collect(),
            map: map.with_vertex_labels(labels),
            vertex_origin,
            dart_step,
        });
    }
    surfaces
}
