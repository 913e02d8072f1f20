//! The dual complex `D` of `(C, Σ)` and the checks relating it to local surfaces.
//!
//! `D` has one vertex per local surface, one edge per face of `C` (directed
//! from the surface holding its reverse to the surface holding its stored
//! orientation) and one face per edge `e` of `C`, whose trail runs through
//! the faces at `e` in the order σ(e). Σ_C orders the faces of `D` at dual
//! edge `f` as they appear along the trail of `f`.

use serde::Serialize;

use crate::cellmap::CellComplex;
use crate::complex::{ComplexKind, DirectedComplex, Incidence, PreComplex, Sign, VertexIdx};
use crate::document::ComplexDoc;
use crate::error::TopologyError;
use crate::link::{link_graph, Traversal};
use crate::rotation::{RotationSystem, SigmaDoc};
use crate::surface::{local_surfaces, LocalSurface, OrientedFace};
use crate::trace::{trace_link_complex, trace_with, tracing_order};

#[derive(Clone, Debug)]
pub struct DualComplex {
    pub complex: DirectedComplex,
    pub sigma: RotationSystem,
    pub surfaces: Vec<LocalSurface>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceSummary {
    pub id: String,
    pub chi: i64,
    pub genus: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualDoc {
    pub complex: ComplexDoc,
    pub sigma_c: SigmaDoc,
    pub surfaces: Vec<SurfaceSummary>,
}

impl DualComplex {
    pub fn to_doc(&self) -> DualDoc {
        DualDoc {
            complex: ComplexDoc::from_complex(&self.complex),
            sigma_c: self.sigma.to_doc(&self.complex),
            surfaces: self
                .surfaces
                .iter()
                .map(|s| SurfaceSummary {
                    id: s.id.clone(),
                    chi: s.chi(),
                    genus: s.genus(),
                })
                .collect(),
        }
    }

    /// Link complexes of `(D, Σ_C)`, one per local surface.
    pub fn link_complexes(&self) -> Vec<CellComplex> {
        (0..self.complex.vertex_count())
            .map(|v| trace_link_complex(&self.complex, &self.sigma, v).expect("dual vertex exists"))
            .collect()
    }
}

pub fn dual_complex(c: &PreComplex, sigma: &RotationSystem) -> DualComplex {
    let surfaces = local_surfaces(c, sigma);
    let mut class = vec![0; 2 * c.face_count()];
    for (s, surface) in surfaces.iter().enumerate() {
        for m in &surface.members {
            class[m.index()] = s;
        }
    }
    let vertex_ids: Vec<String> = surfaces.iter().map(|s| s.id.clone()).collect();
    let edges = (0..c.face_count())
        .map(|f| {
            let tail = class[OrientedFace {
                face: f,
                sense: Sign::Neg,
            }
            .index()];
            let head = class[OrientedFace {
                face: f,
                sense: Sign::Pos,
            }
            .index()];
            (
                c.face_id(f).to_string(),
                vertex_ids[tail].clone(),
                vertex_ids[head].clone(),
            )
        })
        .collect();
    let kept: Vec<usize> = (0..c.edge_count()).filter(|&e| c.edge_degree(e) > 0).collect();
    let orders: Vec<Vec<Incidence>> = (0..c.edge_count()).map(|e| sigma.cyclic_order(c, e)).collect();
    let faces = kept
        .iter()
        .map(|&e| {
            let trail = orders[e]
                .iter()
                .map(|&a| (c.face_id(a.face).to_string(), c.boundary_ref(a).sign))
                .collect();
            (c.edge_id(e).to_string(), trail)
        })
        .collect();
    let pre = PreComplex::from_parts(ComplexKind::General, vertex_ids, edges, faces)
        .expect("dual trails close up by construction");
    let complex = DirectedComplex::try_from(pre).expect("every dual vertex and edge is used");

    let mut dual_face = vec![usize::MAX; c.edge_count()];
    for (i, &e) in kept.iter().enumerate() {
        dual_face[e] = i;
    }
    let sigma_orders = (0..c.face_count())
        .map(|f| {
            c.faces()[f]
                .boundary
                .iter()
                .enumerate()
                .map(|(pos, r)| {
                    let slot = orders[r.edge]
                        .iter()
                        .position(|&a| a == Incidence { face: f, pos })
                        .expect("incidence appears in its edge's order");
                    Incidence {
                        face: dual_face[r.edge],
                        pos: slot,
                    }
                })
                .collect()
        })
        .collect();
    let sigma_c = RotationSystem::new(&complex, sigma_orders).expect("Σ_C lists each dual incidence once");
    DualComplex {
        complex,
        sigma: sigma_c,
        surfaces,
    }
}

fn canonical_word(word: &[Traversal]) -> Vec<Traversal> {
    let mut best: Option<Vec<Traversal>> = None;
    let mut rev = word.to_vec();
    rev.reverse();
    for w in [word, rev.as_slice()] {
        for i in 0..w.len().max(1) {
            let rotated: Vec<Traversal> = w[i.min(w.len())..]
                .iter()
                .chain(&w[..i.min(w.len())])
                .copied()
                .collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IotaReport {
    pub surface_vertices: usize,
    pub link_cells: usize,
}

/// Matches every local-surface vertex with the link-complex cell at its origin
/// that reads the same face traversals, up to rotation and reversal.
pub fn iota_check(c: &PreComplex, sigma: &RotationSystem) -> Result<IotaReport, TopologyError> {
    let mut from_surfaces: Vec<(VertexIdx, Vec<Traversal>)> = Vec::new();
    for s in local_surfaces(c, sigma) {
        for (v, word) in s.corner_words(c) {
            from_surfaces.push((v, canonical_word(&word)));
        }
    }
    let mut from_links: Vec<(VertexIdx, Vec<Traversal>)> = Vec::new();
    for v in 0..c.vertex_count() {
        let g = link_graph(c, v)?;
        let cc = trace_with(c, &g, |ee| tracing_order(c, sigma, ee))?;
        for cell in cc.cells().iter().filter(|cell| !cell.is_empty()) {
            let word: Vec<Traversal> = cell.iter().map(|&d| g.edges[d / 2].traversal).collect();
            from_links.push((v, canonical_word(&word)));
        }
    }
    let report = IotaReport {
        surface_vertices: from_surfaces.len(),
        link_cells: from_links.len(),
    };
    from_surfaces.sort();
    from_links.sort();
    if let Some((a, b)) = from_surfaces.iter().zip(&from_links).find(|(a, b)| a != b) {
        let (v, _) = a.min(b);
        return Err(TopologyError::BijectionFailure(format!(
            "a corner word at {}",
            c.vertex_id(*v)
        )));
    }
    if from_surfaces.len() != from_links.len() {
        return Err(TopologyError::BijectionFailure(format!(
            "{} surface vertices against {} link cells",
            report.surface_vertices, report.link_cells
        )));
    }
    Ok(report)
}

/// Whether every link complex of `(D, Σ_C)` is isomorphic, as an oriented cell
/// complex, to the surface dual of the corresponding local surface.
pub fn surface_duality_holds(dual: &DualComplex) -> bool {
    dual.link_complexes()
        .iter()
        .zip(&dual.surfaces)
        .all(|(link, s)| match s.map.surface_dual() {
            Ok(sd) => link.is_isomorphic(&sd),
            Err(_) => false,
        })
}
