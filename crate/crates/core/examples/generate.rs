//! Seeded random complexes and their verdicts.

use embed3::document::emit_complex;
use embed3::generate::{generate_random_complex, GenParams};
use embed3::verdict::{verdict, VerdictOptions};

fn main() {
    for seed in 0..8 {
        match generate_random_complex(GenParams {
            seed,
            n_vertices: 6,
            prob: 0.3,
        }) {
            Ok(c) => {
                let v = verdict(&c, &[2, 3], VerdictOptions::default()).unwrap();
                println!("seed {seed}: {} faces, sphere3 {:?}", c.face_count(), v.sphere3);
            }
            Err(e) => println!("seed {seed}: {e}"),
        }
    }
    let c = generate_random_complex(GenParams {
        seed: 1,
        n_vertices: 4,
        prob: 1.0,
    })
    .unwrap();
    print!("{}", emit_complex(&c));
}
