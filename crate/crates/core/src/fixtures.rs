//! The shipped fixture corpus and small builders for test complexes.

use std::collections::BTreeMap;

use crate::complex::{ComplexKind, DirectedComplex, PreComplex, Sign};
use crate::document::parse_complex;

pub const TRIANGLE: &str = include_str!("../fixtures/triangle.json");
pub const TETRAHEDRON: &str = include_str!("../fixtures/tetrahedron.json");
pub const BOOK3: &str = include_str!("../fixtures/book3.json");
pub const BOWTIE: &str = include_str!("../fixtures/bowtie.json");
pub const CONE_K5: &str = include_str!("../fixtures/cone-k5.json");
pub const RP2_6: &str = include_str!("../fixtures/rp2-6.json");
pub const TORUS7: &str = include_str!("../fixtures/torus7.json");

/// Fixture names and documents, in a stable order.
pub const CORPUS: [(&str, &str); 7] = [
    ("triangle", TRIANGLE),
    ("tetrahedron", TETRAHEDRON),
    ("book3", BOOK3),
    ("bowtie", BOWTIE),
    ("cone-k5", CONE_K5),
    ("rp2-6", RP2_6),
    ("torus7", TORUS7),
];

fn load(doc: &str) -> DirectedComplex {
    parse_complex(doc).expect("shipped fixtures are valid")
}

pub fn triangle() -> DirectedComplex {
    load(TRIANGLE)
}

pub fn tetrahedron() -> DirectedComplex {
    load(TETRAHEDRON)
}

/// Three triangles `v w a`, `v w b`, `v w c` sharing the edge `vw`.
pub fn book3() -> DirectedComplex {
    load(BOOK3)
}

/// Two triangles sharing exactly the vertex `vv`.
pub fn bowtie() -> DirectedComplex {
    load(BOWTIE)
}

/// Cone over the complete graph on five vertices, apex `vx`.
pub fn cone_k5() -> DirectedComplex {
    load(CONE_K5)
}

/// The six-vertex real projective plane.
pub fn rp2_6() -> DirectedComplex {
    load(RP2_6)
}

/// The seven-vertex torus.
pub fn torus7() -> DirectedComplex {
    load(TORUS7)
}

pub fn all() -> Vec<(&'static str, DirectedComplex)> {
    CORPUS.iter().map(|(name, doc)| (*name, load(doc))).collect()
}

/// Simplicial complex on the given vertex labels whose faces are the given
/// triangles. Edges run from the earlier to the later label; each face is
/// oriented `a -> b -> c` for its labels sorted by position.
pub fn from_triangles(labels: &[&str], triangles: &[[usize; 3]]) -> DirectedComplex {
    let mut used = vec![false; labels.len()];
    let mut edges: BTreeMap<(usize, usize), String> = BTreeMap::new();
    let mut faces = Vec::new();
    for t in triangles {
        let mut t = *t;
        t.sort_unstable();
        let [a, b, c] = t;
        for (x, y) in [(a, b), (b, c), (a, c)] {
            used[x] = true;
            used[y] = true;
            edges
                .entry((x, y))
                .or_insert_with(|| format!("e{}_{}", labels[x], labels[y]));
        }
        faces.push((
            format!("f{}_{}_{}", labels[a], labels[b], labels[c]),
            vec![
                (edges[&(a, b)].clone(), Sign::Pos),
                (edges[&(b, c)].clone(), Sign::Pos),
                (edges[&(a, c)].clone(), Sign::Neg),
            ],
        ));
    }
    let vertices = (0..labels.len())
        .filter(|&v| used[v])
        .map(|v| format!("v{}", labels[v]))
        .collect();
    let edges = edges
        .into_iter()
        .map(|((x, y), id)| (id, format!("v{}", labels[x]), format!("v{}", labels[y])))
        .collect();
    let pre = PreComplex::from_parts(ComplexKind::Simplicial, vertices, edges, faces)
        .expect("triangle lists build well-formed complexes");
    DirectedComplex::try_from(pre).expect("triangle lists build valid complexes")
}

/// Triangles `a b p`, `p c q`, `q d e`: a chain with cut vertices `vp` and `vq`.
pub fn triangle_chain() -> DirectedComplex {
    from_triangles(&["a", "b", "p", "c", "q", "d", "e"], &[[0, 1, 2], [2, 3, 4], [4, 5, 6]])
}

fn prefixed(c: &PreComplex, prefix: &str, rename: &dyn Fn(&str) -> String) -> super::complex::PreComplex {
    let vertices: Vec<String> = c.vertices().iter().map(|v| rename(v)).collect();
    let edges = c
        .edges()
        .iter()
        .map(|e| {
            (
                format!("{prefix}{}", e.id),
                rename(c.vertex_id(e.tail)),
                rename(c.vertex_id(e.head)),
            )
        })
        .collect();
    let faces = c
        .faces()
        .iter()
        .map(|f| {
            (
                format!("{prefix}{}", f.id),
                f.boundary
                    .iter()
                    .map(|r| (format!("{prefix}{}", c.edge_id(r.edge)), r.sign))
                    .collect(),
            )
        })
        .collect();
    PreComplex::from_parts(c.kind(), vertices, edges, faces).expect("renaming preserves structure")
}

fn merge(kind: ComplexKind, parts: &[PreComplex]) -> DirectedComplex {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut faces = Vec::new();
    for p in parts {
        for v in p.vertices() {
            if !vertices.contains(v) {
                vertices.push(v.clone());
            }
        }
        edges.extend(p.edges().iter().map(|e| {
            (
                e.id.clone(),
                p.vertex_id(e.tail).to_string(),
                p.vertex_id(e.head).to_string(),
            )
        }));
        faces.extend(p.faces().iter().map(|f| {
            (
                f.id.clone(),
                f.boundary
                    .iter()
                    .map(|r| (p.edge_id(r.edge).to_string(), r.sign))
                    .collect(),
            )
        }));
    }
    let pre = PreComplex::from_parts(kind, vertices, edges, faces).expect("merge of disjoint ids");
    DirectedComplex::try_from(pre).expect("merge of valid complexes is valid")
}

/// Disjoint union; ids of the two parts are prefixed `a:` and `b:`.
pub fn disjoint_union(a: &PreComplex, b: &PreComplex) -> DirectedComplex {
    let pa = prefixed(a, "a:", &|v| format!("a:{v}"));
    let pb = prefixed(b, "b:", &|v| format!("b:{v}"));
    merge(a.kind(), &[pa, pb])
}

/// One-point union identifying vertex `va` of `a` with vertex `vb` of `b`; the
/// shared vertex is called `hub`, other ids are prefixed `a:` and `b:`.
pub fn glue_at_vertex(a: &PreComplex, va: &str, b: &PreComplex, vb: &str) -> DirectedComplex {
    let pa = prefixed(a, "a:", &|v| if v == va { "hub".to_string() } else { format!("a:{v}") });
    let pb = prefixed(b, "b:", &|v| if v == vb { "hub".to_string() } else { format!("b:{v}") });
    merge(a.kind(), &[pa, pb])
}
