//! Parse a complex, check it against the standing assumptions and print counts.

use embed3::document::{emit_complex, parse_complex, parse_precomplex};
use embed3::fixtures;

fn main() {
    let c = parse_complex(fixtures::TETRAHEDRON).expect("fixture is valid");
    println!(
        "tetrahedron: {} vertices, {} edges, {} faces",
        c.vertex_count(),
        c.edge_count(),
        c.face_count()
    );
    assert_eq!(emit_complex(&c), fixtures::TETRAHEDRON);

    // an edge on no face breaks the standing assumptions
    let broken =
        r#"{"kind": "general", "vertices": ["a", "b"], "edges": [{"id": "e", "tail": "a", "head": "b"}], "faces": []}"#;
    let pre = parse_precomplex(broken).unwrap();
    for v in pre.validate() {
        println!("violation: {v:?}");
    }
}
