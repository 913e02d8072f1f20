//! 1-skeleton connectivity: components, cut vertices and attached complexes.

use rustworkx_core::connectivity::articulation_points;
use rustworkx_core::petgraph::graph::{NodeIndex, UnGraph};
use rustworkx_core::petgraph::unionfind::UnionFind;

use crate::complex::{PreComplex, VertexIdx};
use crate::error::TopologyError;

/// The 1-skeleton as an undirected petgraph multigraph; node `i` is vertex `i`.
pub fn skeleton_graph(c: &PreComplex) -> UnGraph<(), ()> {
    let mut g = UnGraph::with_capacity(c.vertex_count(), c.edge_count());
    for _ in 0..c.vertex_count() {
        g.add_node(());
    }
    for e in c.edges() {
        g.add_edge(NodeIndex::new(e.tail), NodeIndex::new(e.head), ());
    }
    g
}

/// Component label of every vertex; labels are dense and numbered in order of
/// each component's first vertex.
pub fn component_labels(c: &PreComplex) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(c.vertex_count());
    for e in c.edges() {
        uf.union(e.tail, e.head);
    }
    let mut label_of_root = vec![usize::MAX; c.vertex_count()];
    let mut labels = vec![0; c.vertex_count()];
    let mut next = 0;
    for (v, label) in labels.iter_mut().enumerate() {
        let r = uf.find(v);
        if label_of_root[r] == usize::MAX {
            label_of_root[r] = next;
            next += 1;
        }
        *label = label_of_root[r];
    }
    (labels, next)
}

/// Number of connected components of the 1-skeleton; isolated vertices count.
pub fn component_count(c: &PreComplex) -> usize {
    component_labels(c).1
}

/// Vertex sets of the connected components, ordered by least vertex id.
pub fn components(c: &PreComplex) -> Vec<Vec<VertexIdx>> {
    let (labels, n) = component_labels(c);
    let mut out = vec![Vec::new(); n];
    for v in c.sorted_vertices() {
        out[labels[v]].push(v);
    }
    out.sort_by(|a, b| c.vertex_id(a[0]).as_bytes().cmp(c.vertex_id(b[0]).as_bytes()));
    out
}

/// Connected components as subcomplexes, ordered by least vertex id.
pub fn component_complexes(c: &PreComplex) -> Vec<PreComplex> {
    components(c)
        .into_iter()
        .map(|comp| {
            let mut keep = vec![false; c.vertex_count()];
            for v in comp {
                keep[v] = true;
            }
            c.restrict(&keep)
        })
        .collect()
}

/// Vertices whose removal disconnects their component of the 1-skeleton,
/// sorted bytewise by id.
pub fn cut_vertices(c: &PreComplex) -> Vec<VertexIdx> {
    let g = skeleton_graph(c);
    let mut out: Vec<VertexIdx> = articulation_points(&g, None).into_iter().map(|n| n.index()).collect();
    out.sort_by(|&a, &b| c.vertex_id(a).as_bytes().cmp(c.vertex_id(b).as_bytes()));
    out
}

/// The complexes attached at the cut vertex `v`: one per component `K` of the
/// skeleton of `v`'s component minus `v`, spanning `K + v`. Ordered by the
/// least vertex id in `K`.
pub fn attached_complexes(c: &PreComplex, v: VertexIdx) -> Result<Vec<PreComplex>, TopologyError> {
    if !cut_vertices(c).contains(&v) {
        return Err(TopologyError::NotACutVertex(c.vertex_id(v).to_string()));
    }
    let (labels, _) = component_labels(c);
    let mut uf = UnionFind::new(c.vertex_count());
    for e in c.edges() {
        if e.tail != v && e.head != v {
            uf.union(e.tail, e.head);
        }
    }
    let mut groups: Vec<Vec<VertexIdx>> = Vec::new();
    let mut root_group: Vec<Option<usize>> = vec![None; c.vertex_count()];
    for w in c.sorted_vertices() {
        if w == v || labels[w] != labels[v] {
            continue;
        }
        let r = uf.find(w);
        match root_group[r] {
            Some(g) => groups[g].push(w),
            None => {
                root_group[r] = Some(groups.len());
                groups.push(vec![w]);
            }
        }
    }
    Ok(groups
        .into_iter()
        .map(|group| {
            let mut keep = vec![false; c.vertex_count()];
            keep[v] = true;
            for w in group {
                keep[w] = true;
            }
            c.restrict(&keep)
        })
        .collect())
}
