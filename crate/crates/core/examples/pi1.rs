//! The fundamental group heuristic on a few complexes.

use embed3::fixtures;
use embed3::pi1::{pi1_trivial_heuristic, presentation, DEFAULT_BUDGET};

fn main() {
    for (name, c) in fixtures::all() {
        let p = presentation(&c);
        let v = pi1_trivial_heuristic(&c, DEFAULT_BUDGET);
        println!(
            "{name}: {} generators, {} relators -> {:?} after {} steps",
            p.generators,
            p.relators.len(),
            v.status,
            v.steps
        );
    }
}
