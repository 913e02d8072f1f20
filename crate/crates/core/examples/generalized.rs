//! Generalised planar rotation systems and Klein-bottle crossing words.

use embed3::fixtures;
use embed3::search::{search_generalized_prs, verify_generalized};
use embed3::words::{klein_word_admissible, WordMode};

fn main() {
    for (name, c) in fixtures::all() {
        let r = search_generalized_prs(&c, 1_000_000).unwrap();
        let verified = r.witness.as_ref().map(|w| verify_generalized(&c, w));
        println!("{name}: {:?}, verified {verified:?}", r.status);
    }
    for windings in [&[1, 2][..], &[1, 1, 2], &[1, 2, 2], &[1, 1, 1, 2]] {
        let cyclic = klein_word_admissible(windings, WordMode::Cyclic).unwrap();
        let linear = klein_word_admissible(windings, WordMode::Linear).unwrap();
        println!("{windings:?}: {cyclic:?} (linear {linear:?})");
    }
}
