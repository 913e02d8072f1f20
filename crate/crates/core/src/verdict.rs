//! Embeddability verdicts, decided block by block.
//!
//! A complex is split into connected components and then repeatedly at its
//! least cut vertex. Each block is decided from a planar rotation system
//! search, the fundamental group heuristic and homology; the block answers
//! are combined by conjunction.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::PreComplex;
use crate::error::Error;
use crate::homology::{h1_integral, is_p_nullhomologous, IntegralH1};
use crate::pi1::{pi1_trivial_heuristic, Pi1Status, Pi1Verdict};
use crate::rotation::SigmaDoc;
use crate::search::{search_planar_rotation_system, Mode, SearchOptions};
use crate::skeleton::{attached_complexes, component_complexes, cut_vertices};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    NoPlanarRotationSystem,
    PlanarRotationSystem,
    PlanarPlusSimplyConnected,
    /// `C` is p-nullhomologous for the first prime while `H_1(C; Z)` has
    /// torsion of order divisible by the second.
    MixedPrimeHomology(u64, u64),
    Inconclusive,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::MixedPrimeHomology(p, q) => write!(f, "MixedPrimeHomology({p},{q})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl Serialize for Reason {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockVerdict {
    pub vertices: Vec<String>,
    pub orientable_3manifold: Answer,
    pub sphere3: Answer,
    pub reasons: Vec<Reason>,
    pub sigma: Option<SigmaDoc>,
    pub pi1: Option<Pi1Verdict>,
    pub h1: Option<IntegralH1>,
    pub null_primes: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbedVerdict {
    pub orientable_3manifold: Answer,
    pub sphere3: Answer,
    pub reasons: Vec<Reason>,
    pub blocks: Vec<BlockVerdict>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerdictOptions {
    pub pi1_budget: u64,
    pub search_cap: u64,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions {
            pi1_budget: crate::pi1::DEFAULT_BUDGET,
            search_cap: SearchOptions::default().cap,
        }
    }
}

/// Components first, then recursively the complexes attached at the least cut vertex.
pub fn blocks(c: &PreComplex) -> Vec<PreComplex> {
    let mut out = Vec::new();
    let mut stack: Vec<PreComplex> = component_complexes(c);
    stack.reverse();
    while let Some(b) = stack.pop() {
        match cut_vertices(&b).first() {
            None => out.push(b),
            Some(&v) => {
                let mut parts = attached_complexes(&b, v).expect("v is a cut vertex");
                parts.reverse();
                stack.extend(parts);
            }
        }
    }
    out
}

fn least_prime_factor(n: &num_bigint::BigInt) -> Option<u64> {
    use num_traits::{ToPrimitive, Zero};
    let mut q = 2u64;
    loop {
        if (n % q).is_zero() {
            return Some(q);
        }
        // every torsion coefficient of a desk-scale complex is small
        if num_bigint::BigInt::from(q) * num_bigint::BigInt::from(q) > *n {
            return n.to_u64();
        }
        q += 1;
    }
}

pub fn block_verdict(b: &PreComplex, primes: &[u64], opts: VerdictOptions) -> Result<BlockVerdict, Error> {
    let mut vertices: Vec<String> = b.vertices().to_vec();
    vertices.sort();
    let found = search_planar_rotation_system(
        b,
        SearchOptions {
            mode: Mode::First,
            cap: opts.search_cap,
            parallel: false,
        },
    )?;
    let Some(sigma) = found.sigma else {
        return Ok(BlockVerdict {
            vertices,
            orientable_3manifold: Answer::No,
            sphere3: Answer::No,
            reasons: vec![Reason::NoPlanarRotationSystem],
            sigma: None,
            pi1: None,
            h1: None,
            null_primes: Vec::new(),
        });
    };
    let mut null_primes = Vec::new();
    for &p in primes {
        if is_p_nullhomologous(b, p)? {
            null_primes.push(p);
        }
    }
    null_primes.sort_unstable();
    null_primes.dedup();
    let pi1 = pi1_trivial_heuristic(b, opts.pi1_budget);
    let h1 = h1_integral(b);
    let (sphere3, reason) = if pi1.status == Pi1Status::Trivial {
        (Answer::Yes, Reason::PlanarPlusSimplyConnected)
    } else {
        let q = h1.torsion.iter().filter_map(least_prime_factor).min();
        match (h1.is_trivial(), null_primes.first(), q) {
            (false, Some(&p), Some(q)) => (Answer::No, Reason::MixedPrimeHomology(p, q)),
            _ => (Answer::Unknown, Reason::Inconclusive),
        }
    };
    Ok(BlockVerdict {
        vertices,
        orientable_3manifold: Answer::Yes,
        sphere3,
        reasons: vec![Reason::PlanarRotationSystem, reason],
        sigma: Some(sigma.to_doc(b)),
        pi1: Some(pi1),
        h1: Some(h1),
        null_primes,
    })
}

pub fn verdict(c: &PreComplex, primes: &[u64], opts: VerdictOptions) -> Result<EmbedVerdict, Error> {
    if primes.is_empty() {
        return Err(Error::Usage("at least one prime is required".into()));
    }
    for &p in primes {
        crate::homology::fp::check_prime(p)?;
    }
    let blocks = blocks(c)
        .iter()
        .map(|b| block_verdict(b, primes, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let combine = |answers: &mut dyn Iterator<Item = Answer>| {
        answers.fold(Answer::Yes, |acc, a| match (acc, a) {
            (Answer::No, _) | (_, Answer::No) => Answer::No,
            (Answer::Unknown, _) | (_, Answer::Unknown) => Answer::Unknown,
            _ => Answer::Yes,
        })
    };
    let mut reasons: Vec<Reason> = Vec::new();
    for r in blocks.iter().flat_map(|b| &b.reasons) {
        if !reasons.contains(r) {
            reasons.push(*r);
        }
    }
    Ok(EmbedVerdict {
        orientable_3manifold: combine(&mut blocks.iter().map(|b| b.orientable_3manifold)),
        sphere3: combine(&mut blocks.iter().map(|b| b.sphere3)),
        reasons,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn run(c: &PreComplex, primes: &[u64]) -> EmbedVerdict {
        verdict(c, primes, VerdictOptions::default()).unwrap()
    }

    #[test]
    fn fixture_verdicts() {
        let v = run(&fixtures::tetrahedron(), &[2, 3]);
        assert_eq!((v.orientable_3manifold, v.sphere3), (Answer::Yes, Answer::Yes));

        let v = run(&fixtures::rp2_6(), &[2, 3]);
        assert_eq!((v.orientable_3manifold, v.sphere3), (Answer::Yes, Answer::No));
        assert!(v.reasons.contains(&Reason::MixedPrimeHomology(3, 2)));

        let v = run(&fixtures::cone_k5(), &[2, 3]);
        assert_eq!((v.orientable_3manifold, v.sphere3), (Answer::No, Answer::No));
        assert_eq!(v.reasons, [Reason::NoPlanarRotationSystem]);

        let v = run(&fixtures::torus7(), &[2, 3, 5]);
        assert_eq!((v.orientable_3manifold, v.sphere3), (Answer::Yes, Answer::Unknown));
    }

    #[test]
    fn rp2_needs_an_odd_prime() {
        let v = run(&fixtures::rp2_6(), &[2]);
        assert_eq!(v.sphere3, Answer::Unknown);
    }

    #[test]
    fn bowtie_splits_into_two_blocks() {
        let c = fixtures::bowtie();
        let v = run(&c, &[2]);
        assert_eq!(v.blocks.len(), 2);
        assert_eq!(v.sphere3, Answer::Yes);
    }

    #[test]
    fn glued_blocks_combine() {
        let t = fixtures::tetrahedron();
        let k = fixtures::cone_k5();
        let g = fixtures::glue_at_vertex(&t, "v1", &k, "vx");
        let v = run(&g, &[2, 3]);
        assert_eq!(v.orientable_3manifold, Answer::No);
        assert!(v.blocks.len() >= 2);
    }

    #[test]
    fn reason_tags() {
        assert_eq!(Reason::MixedPrimeHomology(3, 2).to_string(), "MixedPrimeHomology(3,2)");
        assert_eq!(Reason::NoPlanarRotationSystem.to_string(), "NoPlanarRotationSystem");
    }

    #[test]
    fn rejects_empty_or_composite_primes() {
        let c = fixtures::tetrahedron();
        assert!(verdict(&c, &[], VerdictOptions::default()).is_err());
        assert!(verdict(&c, &[4], VerdictOptions::default()).is_err());
    }
}
