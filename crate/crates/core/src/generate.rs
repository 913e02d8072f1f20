//! Seeded random simplicial complexes.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Candidate
//! triangles `{a < b < c}` on vertices `1..=n` are visited in lexicographic
//! order; each draws one `u64` `x` and is kept when `(x >> 11) * 2^-53 < prob`.
//! Vertices and edges on no kept triangle are dropped.

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use crate::complex::DirectedComplex;
use crate::error::GenerateError;
use crate::fixtures::from_triangles;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    pub n_vertices: usize,
    pub prob: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 0,
            n_vertices: 6,
            prob: 0.5,
        }
    }
}

pub fn generate_random_complex(p: GenParams) -> Result<DirectedComplex, GenerateError> {
    if p.n_vertices < 3 {
        return Err(GenerateError::TooFewVertices(p.n_vertices));
    }
    if !(0.0..=1.0).contains(&p.prob) {
        return Err(GenerateError::BadProbability(p.prob));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let n = p.n_vertices;
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if x < p.prob {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    if triangles.is_empty() {
        return Err(GenerateError::Unsatisfiable);
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    Ok(from_triangles(&labels, &triangles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::emit_complex;
    use crate::fixtures;

    #[test]
    fn full_probability_on_four_vertices_is_a_tetrahedron() {
        let c = generate_random_complex(GenParams {
            seed: 1,
            n_vertices: 4,
            prob: 1.0,
        })
        .unwrap();
        assert_eq!(
            emit_complex(&c),
            emit_complex(&fixtures::from_triangles(
                &["1", "2", "3", "4"],
                &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
            ))
        );
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (4, 6, 4));
    }

    #[test]
    fn deterministic() {
        let p = GenParams {
            seed: 42,
            n_vertices: 7,
            prob: 0.4,
        };
        let a = emit_complex(&generate_random_complex(p).unwrap());
        let b = emit_complex(&generate_random_complex(p).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn seed_7_is_valid() {
        let c = generate_random_complex(GenParams {
            seed: 7,
            n_vertices: 6,
            prob: 0.5,
        })
        .unwrap();
        assert!(c.validate().is_empty());
    }

    #[test]
    fn errors() {
        let bad = |n, prob| {
            generate_random_complex(GenParams {
                seed: 0,
                n_vertices: n,
                prob,
            })
            .unwrap_err()
        };
        assert_eq!(bad(2, 0.5), GenerateError::TooFewVertices(2));
        assert_eq!(bad(5, 1.5), GenerateError::BadProbability(1.5));
        assert_eq!(bad(5, 0.0), GenerateError::Unsatisfiable);
    }
}
