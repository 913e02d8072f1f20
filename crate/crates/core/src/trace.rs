//! Link complexes: link graphs with the rotators induced by a rotation system.

use crate::cellmap::CellComplex;
use crate::complex::{EdgeIdx, End, Incidence, PreComplex, VertexIdx};
use crate::error::TopologyError;
use crate::link::{link_graph, EdgeEnd, LinkGraph};
use crate::rotation::RotationSystem;

/// Cyclic order of face incidences at one end of an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotator {
    pub at: EdgeEnd,
    pub incidences: Vec<Incidence>,
}

/// σ(e) at the head of `e`, its reverse at the tail. For a loop the head end
/// is used. Empty when `e` has a single incident face.
pub fn induced_rotator(
    c: &PreComplex,
    sigma: &RotationSystem,
    e: EdgeIdx,
    v: VertexIdx,
) -> Result<Rotator, TopologyError> {
    let edge = &c.edges()[e];
    let end = if edge.head == v {
        End::Head
    } else if edge.tail == v {
        End::Tail
    } else {
        return Err(TopologyError::NotIncident {
            edge: edge.id.clone(),
            vertex: c.vertex_id(v).to_string(),
        });
    };
    let mut incidences = sigma.sigma(e).to_vec();
    if end == End::Tail {
        incidences.reverse();
    }
    Ok(Rotator {
        at: EdgeEnd { edge: e, end },
        incidences,
    })
}

/// The order used when tracing at edge-end `ee`, including the lone
/// incidence of a single-face edge.
pub fn tracing_order(c: &PreComplex, sigma: &RotationSystem, ee: EdgeEnd) -> Vec<Incidence> {
    let mut order = sigma.cyclic_order(c, ee.edge);
    if ee.end == End::Tail {
        order.reverse();
    }
    order
}

/// Traces the link graph `g` of `c` with the rotator at each link vertex given
/// by `order` (a cyclic sequence of incidences of that vertex's edge).
pub fn trace_with(
    c: &PreComplex,
    g: &LinkGraph,
    mut order: impl FnMut(EdgeEnd) -> Vec<Incidence>,
) -> Result<CellComplex, TopologyError> {
    let rotators = g
        .vertices
        .iter()
        .map(|&ee| {
            order(ee)
                .into_iter()
                .map(|inc| g.dart_of(c, inc, ee).expect("incidence darts lie in the link"))
                .collect()
        })
        .collect();
    CellComplex::from_rotators(
        (0..g.vertices.len()).map(|i| g.vertex_label(c, i)).collect(),
        (0..g.edges.len()).map(|i| g.edge_label(c, i)).collect(),
        (0..g.dart_count()).map(|d| g.dart_vertex(d)).collect(),
        rotators,
    )
}

pub fn trace_link_complex(c: &PreComplex, sigma: &RotationSystem, v: VertexIdx) -> Result<CellComplex, TopologyError> {
    let g = link_graph(c, v)?;
    trace_with(c, &g, |ee| tracing_order(c, sigma, ee))
}

/// Link complexes at every vertex, in vertex order.
pub fn link_complexes(c: &PreComplex, sigma: &RotationSystem) -> Vec<CellComplex> {
    (0..c.vertex_count())
        .map(|v| trace_link_complex(c, sigma, v).expect("vertex exists and rotators are valid"))
        .collect()
}

/// Whether every link complex is a disjoint union of spheres; otherwise the
/// bytewise-least vertex whose link complex is not.
pub fn is_planar_rotation_system(c: &PreComplex, sigma: &RotationSystem) -> (bool, Option<VertexIdx>) {
    for v in c.sorted_vertices() {
        let cc = trace_link_complex(c, sigma, v).expect("vertex exists and rotators are valid");
        if !cc.is_sphere_union() {
            return (false, Some(v));
        }
    }
    (true, None)
}
