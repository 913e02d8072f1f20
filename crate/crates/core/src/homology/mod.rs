//! First homology of complexes over F_p and over the integers.

pub mod euler;
pub mod fp;
pub mod snf;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::complex::PreComplex;
use crate::error::HomologyError;
use crate::skeleton::component_count;

pub use fp::{is_prime, FpMatrix};

/// Integer boundary matrices: `d1` is edges by vertices (head minus tail),
/// `d2` is faces by edges (signed traversal counts).
pub fn integer_boundaries(c: &PreComplex) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut d1 = vec![vec![0i64; c.vertex_count()]; c.edge_count()];
    for (e, edge) in c.edges().iter().enumerate() {
        d1[e][edge.head] += 1;
        d1[e][edge.tail] -= 1;
    }
    let mut d2 = vec![vec![0i64; c.edge_count()]; c.face_count()];
    for (f, face) in c.faces().iter().enumerate() {
        for r in &face.boundary {
            d2[f][r.edge] += r.sign.as_i64();
        }
    }
    (d1, d2)
}

pub fn boundary_matrices(c: &PreComplex, p: u64) -> Result<(FpMatrix, FpMatrix), HomologyError> {
    let (d1, d2) = integer_boundaries(c);
    let vertices = c.vertices().to_vec();
    let edges: Vec<String> = c.edges().iter().map(|e| e.id.clone()).collect();
    let faces: Vec<String> = c.faces().iter().map(|f| f.id.clone()).collect();
    Ok((
        FpMatrix::from_integers(p, edges.clone(), vertices, &d1)?,
        FpMatrix::from_integers(p, faces, edges, &d2)?,
    ))
}

/// Dimension of the cycle space of the 1-skeleton; isolated vertices count as components.
pub fn cycle_space_dim(c: &PreComplex) -> usize {
    c.edge_count() + component_count(c) - c.vertex_count()
}

pub fn is_p_nullhomologous(c: &PreComplex, p: u64) -> Result<bool, HomologyError> {
    let (_, d2) = boundary_matrices(c, p)?;
    Ok(d2.rank() == cycle_space_dim(c))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralH1 {
    pub betti1: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl IntegralH1 {
    pub fn is_trivial(&self) -> bool {
        self.betti1 == 0 && self.torsion.is_empty()
    }
}

/// `H_1(C; Z)` from the Smith normal form of `d2`.
pub fn h1_integral(c: &PreComplex) -> IntegralH1 {
    let (d1, d2) = integer_boundaries(c);
    let rank_d1 = snf::integer_rank(&d1);
    let factors = snf::invariant_factors(&d2);
    let one = BigInt::from(1);
    IntegralH1 {
        betti1: c.edge_count() - rank_d1 - factors.len(),
        torsion: factors.into_iter().filter(|x| *x != one).collect(),
    }
}

fn serialize_bigints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match u64::try_from(x) {
            Ok(n) => seq.serialize_element(&n)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Coefficients of a homology computation: a prime field or the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Prime(u64),
    Integers,
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Coefficients::Prime(p) => s.serialize_u64(*p),
            Coefficients::Integers => s.serialize_str("Z"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub p: Coefficients,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub z_c: usize,
    pub k_c: usize,
    pub h1_trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_bigints")]
    pub torsion: Option<Vec<BigInt>>,
}

fn serialize_opt_bigints<S: Serializer>(xs: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    serialize_bigints(xs.as_deref().unwrap_or(&[]), s)
}

pub fn summary_fp(c: &PreComplex, p: u64) -> Result<HomologySummary, HomologyError> {
    let (d1, d2) = boundary_matrices(c, p)?;
    let rank_d2 = d2.rank();
    let z_c = cycle_space_dim(c);
    Ok(HomologySummary {
        p: Coefficients::Prime(p),
        rank_d1: d1.rank(),
        rank_d2,
        z_c,
        k_c: component_count(c),
        h1_trivial: rank_d2 == z_c,
        betti1: None,
        torsion: None,
    })
}

pub fn summary_integral(c: &PreComplex) -> HomologySummary {
    let (d1, d2) = integer_boundaries(c);
    let h1 = h1_integral(c);
    HomologySummary {
        p: Coefficients::Integers,
        rank_d1: snf::integer_rank(&d1),
        rank_d2: snf::integer_rank(&d2),
        z_c: cycle_space_dim(c),
        k_c: component_count(c),
        h1_trivial: h1.is_trivial(),
        betti1: Some(h1.betti1),
        torsion: Some(h1.torsion),
    }
}
