//! Graphviz export of 1-skeleta and link graphs.

use std::fmt::Write;

use crate::complex::PreComplex;
use crate::link::LinkGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The 1-skeleton as a digraph, vertices and edges in bytewise id order.
pub fn complex_dot(c: &PreComplex) -> String {
    let mut out = String::from("digraph complex {\n");
    for v in c.sorted_vertices() {
        writeln!(out, "  {};", quote(c.vertex_id(v))).unwrap();
    }
    for e in c.sorted_edges() {
        let edge = &c.edges()[e];
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(c.vertex_id(edge.tail)),
            quote(c.vertex_id(edge.head)),
            quote(&edge.id)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// A link graph with edges labelled `face#ordinal`.
pub fn link_dot(c: &PreComplex, g: &LinkGraph) -> String {
    let mut out = format!("graph {} {{\n", quote(&format!("link {}", c.vertex_id(g.center))));
    for i in 0..g.vertices.len() {
        writeln!(out, "  {};", quote(&g.vertex_label(c, i))).unwrap();
    }
    for (i, edge) in g.edges.iter().enumerate() {
        writeln!(
            out,
            "  {} -- {} [label={}];",
            quote(&g.vertex_label(c, edge.ends[0])),
            quote(&g.vertex_label(c, edge.ends[1])),
            quote(&g.edge_label(c, i))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::link::link_graph_by_id;

    fn counts(dot: &str) -> (usize, usize) {
        let edges = dot.lines().filter(|l| l.contains(" -- ") || l.contains(" -> ")).count();
        let nodes = dot.lines().filter(|l| l.trim_end().ends_with(';')).count() - edges;
        (nodes, edges)
    }

    #[test]
    fn link_exports() {
        let t = fixtures::tetrahedron();
        assert_eq!(counts(&link_dot(&t, &link_graph_by_id(&t, "v1").unwrap())), (3, 3));
        let k = fixtures::cone_k5();
        assert_eq!(counts(&link_dot(&k, &link_graph_by_id(&k, "vx").unwrap())), (5, 10));
    }

    #[test]
    fn bowtie_cut_link_has_two_components() {
        let c = fixtures::bowtie();
        let cut = crate::skeleton::cut_vertices(&c)[0];
        let g = crate::link::link_graph(&c, cut).unwrap();
        assert_eq!(g.component_labels().1, 2);
        assert_eq!(counts(&link_dot(&c, &g)), (4, 2));
    }

    #[test]
    fn skeleton_export() {
        let dot = complex_dot(&fixtures::tetrahedron());
        assert_eq!(counts(&dot), (4, 6));
        assert!(dot.contains("\"v1\" -> \"v2\" [label=\"e12\"];"));
    }
}
