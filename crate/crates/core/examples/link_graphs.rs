//! Link graphs: connectivity, planarity and DOT output.

use embed3::dot::link_dot;
use embed3::fixtures;
use embed3::link::{is_locally_connected, link_graph_by_id};

fn main() {
    let cone = fixtures::cone_k5();
    let apex = link_graph_by_id(&cone, "vx").unwrap();
    println!(
        "apex link: {} vertices, {} edges, planar {}",
        apex.vertices.len(),
        apex.edges.len(),
        apex.is_planar()
    );

    let bowtie = fixtures::bowtie();
    let (ok, witness) = is_locally_connected(&bowtie);
    println!(
        "bowtie locally connected: {ok}, witness {:?}",
        witness.map(|v| bowtie.vertex_id(v))
    );

    let t = fixtures::tetrahedron();
    print!("{}", link_dot(&t, &link_graph_by_id(&t, "v1").unwrap()));
}
