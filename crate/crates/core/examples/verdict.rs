//! Embeddability verdicts, including a complex glued at a cut vertex.

use embed3::document::to_canonical_json;
use embed3::fixtures;
use embed3::verdict::{verdict, VerdictOptions};

fn main() {
    for (name, c) in fixtures::all() {
        let v = verdict(&c, &[2, 3], VerdictOptions::default()).unwrap();
        let reasons: Vec<String> = v.reasons.iter().map(|r| r.to_string()).collect();
        println!(
            "{name}: orientable {:?}, sphere3 {:?}, {reasons:?}",
            v.orientable_3manifold, v.sphere3
        );
    }
    let glued = fixtures::glue_at_vertex(&fixtures::tetrahedron(), "v1", &fixtures::rp2_6(), "v1");
    let v = verdict(&glued, &[3], VerdictOptions::default()).unwrap();
    print!("{}", to_canonical_json(&v));
}
