//! Euler characteristic identities between a complex and its dual.

use embed3::fixtures;
use embed3::homology::euler::euler_identity_report;
use embed3::search::preferred_rotation_system;

fn main() {
    for (name, c, p) in [
        ("tetrahedron", fixtures::tetrahedron(), 2),
        ("rp2-6", fixtures::rp2_6(), 3),
        ("torus7", fixtures::torus7(), 2),
    ] {
        let r = euler_identity_report(&c, &preferred_rotation_system(&c), p).unwrap();
        println!(
            "{name} mod {p}: lhs {} = Z_D - Z_C = {} - {}, sphere equality {:?}, consistent {}",
            r.lhs,
            r.z_d,
            r.z_c,
            r.edc_equality,
            r.consistent()
        );
    }
}
