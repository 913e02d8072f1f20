//! Homology over prime fields and the integers.

use embed3::fixtures;
use embed3::homology::{h1_integral, is_p_nullhomologous};

fn main() {
    for (name, c) in fixtures::all() {
        let null: Vec<u64> = [2, 3, 5]
            .into_iter()
            .filter(|&p| is_p_nullhomologous(&c, p).unwrap())
            .collect();
        let h1 = h1_integral(&c);
        println!(
            "{name}: betti1 {} torsion {:?} nullhomologous mod {null:?}",
            h1.betti1, h1.torsion
        );
    }
}
