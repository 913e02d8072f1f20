//! Euler-type identities relating `C`, its dual complex and their link complexes.

use serde::Serialize;

use crate::complex::PreComplex;
use crate::dual::{dual_complex, iota_check, surface_duality_holds};
use crate::error::HomologyError;
use crate::link::is_locally_connected;
use crate::rotation::RotationSystem;
use crate::skeleton::component_count;
use crate::trace::{is_planar_rotation_system, link_complexes};

use super::{boundary_matrices, cycle_space_dim};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub p: u64,
    pub planar: bool,
    /// |V(C)| - |E| + |F| - |V(D)|
    pub lhs: i64,
    pub z_c: i64,
    pub z_d: i64,
    pub k_c: i64,
    pub k_d: i64,
    /// Rank of the face-edge incidence matrix of `C` over F_p.
    pub r: i64,
    pub c_p_null: bool,
    pub d_p_null: bool,
    /// Total cells of the link complexes of `(C, Σ)`.
    pub a: i64,
    /// Total cells of the link complexes of `(D, Σ_C)`.
    pub a_prime: i64,
    pub sum_deg_f: i64,
    pub sum_deg_e: i64,
    pub dual_links_spheres: bool,
    pub sublemma_holds: bool,
    pub iota_holds: bool,
    pub surface_duality_holds: bool,
    /// 2|V(C)| = 2|E| - sum deg(f) + a
    pub eq1_holds: bool,
    /// 2|V(D)| - (2|F| - sum deg(e) + a')
    pub eq2_slack: i64,
    /// `lhs >= 0`; only when Σ is planar and `C` is p-nullhomologous.
    pub geq_holds: Option<bool>,
    /// `lhs = 0` exactly when `D` is p-nullhomologous; same condition.
    pub geq_iff_holds: Option<bool>,
    /// `lhs = 0` and `D` is p-nullhomologous; same condition.
    pub geq_equality: Option<bool>,
    /// `lhs <= 0`; only when Σ is planar.
    pub edc_holds: Option<bool>,
    /// `lhs = 0` exactly when every dual link complex is a sphere union.
    pub edc_iff_holds: Option<bool>,
    /// `lhs = 0` and every dual link complex is a sphere union.
    pub edc_equality: Option<bool>,
}

impl EulerReport {
    /// Every identity and inequality that must hold for this input does.
    pub fn consistent(&self) -> bool {
        self.sublemma_holds
            && self.iota_holds
            && self.surface_duality_holds
            && self.a == self.a_prime
            && self.sum_deg_f == self.sum_deg_e
            && self.eq2_slack >= 0
            && (!self.planar || self.eq1_holds)
            && self.geq_holds.unwrap_or(true)
            && self.geq_iff_holds.unwrap_or(true)
            && self.edc_holds.unwrap_or(true)
            && self.edc_iff_holds.unwrap_or(true)
    }
}

/// Computes every quantity from scratch. `C` must be connected and locally connected.
pub fn euler_identity_report(c: &PreComplex, sigma: &RotationSystem, p: u64) -> Result<EulerReport, HomologyError> {
    let (_, d2) = boundary_matrices(c, p)?;
    if component_count(c) != 1 {
        return Err(HomologyError::NotConnected);
    }
    if let (false, Some(v)) = is_locally_connected(c) {
        return Err(HomologyError::NotLocallyConnected(c.vertex_id(v).to_string()));
    }
    let planar = is_planar_rotation_system(c, sigma).0;
    let links = link_complexes(c, sigma);
    let a: usize = links.iter().map(|l| l.cell_count()).sum();
    let sum_deg_f: usize = links.iter().map(|l| l.edge_count()).sum();

    let dual = dual_complex(c, sigma);
    let d = dual.complex.as_pre();
    let dual_links = dual.link_complexes();
    let a_prime: usize = dual_links.iter().map(|l| l.cell_count()).sum();
    let sum_deg_e: usize = dual_links.iter().map(|l| l.edge_count()).sum();
    let dual_links_spheres = dual_links.iter().all(|l| l.is_sphere_union());

    let n = |x: usize| x as i64;
    let (v, e, f, vd) = (
        n(c.vertex_count()),
        n(c.edge_count()),
        n(c.face_count()),
        n(d.vertex_count()),
    );
    let lhs = v - e + f - vd;
    let z_c = n(cycle_space_dim(c));
    let z_d = n(cycle_space_dim(d));
    let r = n(d2.rank());
    let r_d = n(boundary_matrices(d, p)?.1.rank());
    let c_p_null = r == z_c;
    let d_p_null = r_d == z_d;
    let iota_holds = iota_check(c, sigma).is_ok_and(|rep| n(rep.link_cells) == n(a));

    let geq = planar && c_p_null;
    Ok(EulerReport {
        p,
        planar,
        lhs,
        z_c,
        z_d,
        k_c: n(component_count(c)),
        k_d: n(component_count(d)),
        r,
        c_p_null,
        d_p_null,
        a: n(a),
        a_prime: n(a_prime),
        sum_deg_f: n(sum_deg_f),
        sum_deg_e: n(sum_deg_e),
        dual_links_spheres,
        sublemma_holds: lhs == z_d - z_c,
        iota_holds,
        surface_duality_holds: surface_duality_holds(&dual),
        eq1_holds: 2 * v == 2 * e - n(sum_deg_f) + n(a),
        eq2_slack: 2 * vd - (2 * f - n(sum_deg_e) + n(a_prime)),
        geq_holds: geq.then_some(lhs >= 0),
        geq_iff_holds: geq.then_some((lhs == 0) == d_p_null),
        geq_equality: geq.then_some(lhs == 0 && d_p_null),
        edc_holds: planar.then_some(lhs <= 0),
        edc_iff_holds: planar.then_some((lhs == 0) == dual_links_spheres),
        edc_equality: planar.then_some(lhs == 0 && dual_links_spheres),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn tetrahedron() {
        let c = fixtures::tetrahedron();
        let r = euler_identity_report(&c, &RotationSystem::first(&c), 2).unwrap();
        assert_eq!((r.lhs, r.z_d, r.z_c), (0, 3, 3));
        assert_eq!((r.a, r.sum_deg_f), (8, 12));
        assert!(r.eq1_holds && r.consistent());
        assert_eq!((r.geq_equality, r.edc_equality), (Some(true), Some(true)));
    }

    #[test]
    fn torus() {
        let c = fixtures::torus7();
        let r = euler_identity_report(&c, &RotationSystem::first(&c), 2).unwrap();
        assert_eq!((r.lhs, r.z_d, r.z_c), (-2, 13, 15));
        assert_eq!(r.geq_holds, None);
        assert_eq!(r.edc_equality, Some(false));
        assert!(!r.dual_links_spheres && r.consistent());
    }

    #[test]
    fn projective_plane_mod_3() {
        let c = fixtures::rp2_6();
        let r = euler_identity_report(&c, &RotationSystem::first(&c), 3).unwrap();
        assert_eq!(r.lhs, 0);
        assert_eq!((r.geq_equality, r.edc_equality), (Some(true), Some(true)));
        assert!(r.consistent());
    }

    #[test]
    fn rejects_disconnected_inputs() {
        let bowtie = fixtures::bowtie();
        let sigma = RotationSystem::first(&bowtie);
        assert_eq!(
            euler_identity_report(&bowtie, &sigma, 2),
            Err(HomologyError::NotLocallyConnected("vv".into()))
        );
        let two = fixtures::disjoint_union(&fixtures::triangle(), &fixtures::triangle());
        let sigma = RotationSystem::first(&two);
        assert_eq!(euler_identity_report(&two, &sigma, 2), Err(HomologyError::NotConnected));
    }
}
