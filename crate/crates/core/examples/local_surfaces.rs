//! Local surfaces and the dual complex of a planar rotation system.

use embed3::dual::{dual_complex, iota_check, surface_duality_holds};
use embed3::fixtures;
use embed3::search::preferred_rotation_system;
use embed3::surface::local_surfaces;

fn main() {
    for (name, c) in [("rp2-6", fixtures::rp2_6()), ("torus7", fixtures::torus7())] {
        let sigma = preferred_rotation_system(&c);
        for s in local_surfaces(&c, &sigma) {
            println!(
                "{name} {}: χ {} genus {} with {} oriented faces",
                s.id,
                s.chi(),
                s.genus(),
                s.members.len()
            );
        }
        let d = dual_complex(&c, &sigma);
        println!(
            "{name} dual: {} vertices, {} edges, {} faces; dual links are surface duals: {}",
            d.complex.vertex_count(),
            d.complex.edge_count(),
            d.complex.face_count(),
            surface_duality_holds(&d)
        );
        println!("{name} corner bijection: {:?}", iota_check(&c, &sigma).unwrap());
    }
}
