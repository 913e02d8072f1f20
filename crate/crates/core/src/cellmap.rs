//! Cell complexes as rotation systems on multigraphs.
//!
//! Edge `k` owns darts `2k` and `2k + 1`; a dart sits at one end of its edge
//! and stands for traversing the edge away from that end. A rotator lists the
//! darts at a vertex in cyclic order. Cells are the orbits of the tracing map
//! `d -> rot(opp(d))`: arrive at a vertex along an edge, then leave along the
//! successor of the arrival dart in that vertex's rotator.
//!
//! A vertex with no darts is closed off by a single empty cell, so it
//! contributes a sphere.

use std::collections::VecDeque;

use crate::error::TopologyError;

#[derive(Clone, Debug)]
pub struct CellComplex {
    vertex_labels: Vec<String>,
    edge_labels: Vec<String>,
    cell_labels: Vec<String>,
    dart_vertex: Vec<usize>,
    rotators: Vec<Vec<usize>>,
    rot_next: Vec<usize>,
    rot_prev: Vec<usize>,
    cells: Vec<Vec<usize>>,
    cell_anchor: Vec<usize>,
    cell_of: Vec<usize>,
}

#[inline]
pub fn opp(d: usize) -> usize {
    d ^ 1
}

impl CellComplex {
    /// Builds the complex from per-vertex rotators and traces its cells.
    pub fn from_rotators(
        vertex_labels: Vec<String>,
        edge_labels: Vec<String>,
        dart_vertex: Vec<usize>,
        rotators: Vec<Vec<usize>>,
    ) -> Result<CellComplex, TopologyError> {
        let darts = dart_vertex.len();
        if darts != 2 * edge_labels.len() || rotators.len() != vertex_labels.len() {
            return Err(TopologyError::NotClosedSurface("inconsistent sizes".into()));
        }
        let mut rot_next = vec![usize::MAX; darts];
        let mut rot_prev = vec![usize::MAX; darts];
        for (v, rot) in rotators.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts || dart_vertex[d] != v || rot_next[d] != usize::MAX {
                    return Err(TopologyError::NotClosedSurface(format!(
                        "rotator at {} does not list its darts exactly once",
                        vertex_labels[v]
                    )));
                }
                let next = rot[(i + 1) % rot.len()];
                rot_next[d] = next;
                rot_prev[next] = d;
            }
        }
        if rot_next.contains(&usize::MAX) {
            return Err(TopologyError::NotClosedSurface("dart missing from its rotator".into()));
        }
        let mut cc = CellComplex {
            vertex_labels,
            edge_labels,
            cell_labels: Vec::new(),
            dart_vertex,
            rotators,
            rot_next,
            rot_prev,
            cells: Vec::new(),
            cell_anchor: Vec::new(),
            cell_of: Vec::new(),
        };
        cc.trace();
        cc.cell_labels = (0..cc.cells.len()).map(|i| format!("c{i}")).collect();
        Ok(cc)
    }

    /// Builds the complex from its cells (each a cyclic dart sequence); vertices
    /// are recovered by walking around corners. `vertex_label` names a vertex
    /// from its least dart.
    pub fn from_cells(
        edge_labels: Vec<String>,
        cells: Vec<Vec<usize>>,
        cell_labels: Vec<String>,
        vertex_label: impl Fn(usize) -> String,
    ) -> Result<CellComplex, TopologyError> {
        let darts = 2 * edge_labels.len();
        let mut phi = vec![usize::MAX; darts];
        for cell in &cells {
            for (i, &d) in cell.iter().enumerate() {
                if d >= darts || phi[d] != usize::MAX {
                    return Err(TopologyError::NotClosedSurface(
                        "cells do not use every dart exactly once".into(),
                    ));
                }
                phi[d] = cell[(i + 1) % cell.len()];
            }
        }
        if phi.contains(&usize::MAX) {
            return Err(TopologyError::NotClosedSurface("dart in no cell".into()));
        }
        // rot(x) = phi(opp(x))
        let rot: Vec<usize> = (0..darts).map(|x| phi[opp(x)]).collect();
        let mut dart_vertex = vec![usize::MAX; darts];
        let mut rotators = Vec::new();
        let mut vertex_labels = Vec::new();
        for start in 0..darts {
            if dart_vertex[start] != usize::MAX {
                continue;
            }
            let v = rotators.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                dart_vertex[d] = v;
                orbit.push(d);
                d = rot[d];
                if d == start {
                    break;
                }
            }
            rotators.push(orbit);
            vertex_labels.push(vertex_label(start));
        }
        let mut cc = CellComplex::from_rotators(vertex_labels, edge_labels, dart_vertex, rotators)?;
        // Tracing reproduces the given cells; keep the caller's order and labels.
        let mut cell_of = vec![0; darts];
        for (i, cell) in cells.iter().enumerate() {
            for &d in cell {
                cell_of[d] = i;
            }
        }
        cc.cell_anchor = cells.iter().map(|cell| cc.dart_vertex[cell[0]]).collect();
        cc.cells = cells;
        cc.cell_of = cell_of;
        cc.cell_labels = cell_labels;
        Ok(cc)
    }

    fn trace(&mut self) {
        let darts = self.dart_vertex.len();
        let mut cell_of = vec![usize::MAX; darts];
        let mut cells = Vec::new();
        let mut anchors = Vec::new();
        for start in 0..darts {
            if cell_of[start] != usize::MAX {
                continue;
            }
            let mut cell = Vec::new();
            let mut d = start;
            loop {
                cell_of[d] = cells.len();
                cell.push(d);
                d = self.rot_next[opp(d)];
                if d == start {
                    break;
                }
            }
            anchors.push(self.dart_vertex[start]);
            cells.push(cell);
        }
        for (v, rot) in self.rotators.iter().enumerate() {
            if rot.is_empty() {
                anchors.push(v);
                cells.push(Vec::new());
            }
        }
        self.cells = cells;
        self.cell_anchor = anchors;
        self.cell_of = cell_of;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_vertex.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, dart: usize) -> usize {
        self.cell_of[dart]
    }

    pub fn rotator(&self, v: usize) -> &[usize] {
        &self.rotators[v]
    }

    pub fn rotators(&self) -> &[Vec<usize>] {
        &self.rotators
    }

    pub fn dart_vertex(&self, d: usize) -> usize {
        self.dart_vertex[d]
    }

    pub fn rot_next(&self, d: usize) -> usize {
        self.rot_next[d]
    }

    pub fn rot_prev(&self, d: usize) -> usize {
        self.rot_prev[d]
    }

    /// Next dart along the cell containing `d`.
    pub fn trace_next(&self, d: usize) -> usize {
        self.rot_next[opp(d)]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn cell_labels(&self) -> &[String] {
        &self.cell_labels
    }

    pub fn with_vertex_labels(mut self, labels: Vec<String>) -> CellComplex {
        assert_eq!(labels.len(), self.vertex_labels.len());
        self.vertex_labels = labels;
        self
    }

    /// Component label per vertex, numbered by first vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &d in &self.rotators[v] {
                    let w = self.dart_vertex[opp(d)];
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        (label, next)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// V - E + #cells per connected component.
    pub fn euler_characteristics(&self) -> Vec<i64> {
        let (label, n) = self.component_labels();
        let mut chi = vec![0i64; n];
        for &l in &label {
            chi[l] += 1;
        }
        for e in 0..self.edge_count() {
            chi[label[self.dart_vertex[2 * e]]] -= 1;
        }
        for &a in &self.cell_anchor {
            chi[label[a]] += 1;
        }
        chi
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.cell_count() as i64
    }

    /// Every component has Euler characteristic 2.
    pub fn is_sphere_union(&self) -> bool {
        self.euler_characteristics().iter().all(|&chi| chi == 2)
    }

    /// The surface dual: vertices and cells swap, edges stay. The rotator at a
    /// dual vertex is its cell read in tracing order, so cells of the dual are
    /// the vertices of `self` and taking the dual twice gives back `self`.
    pub fn surface_dual(&self) -> Result<CellComplex, TopologyError> {
        if self.edge_count() == 0 {
            return Err(TopologyError::NotClosedSurface("no edges".into()));
        }
        if let Some(v) = self.rotators.iter().position(|r| r.is_empty()) {
            return Err(TopologyError::NotClosedSurface(format!(
                "vertex {} has no incident edge",
                self.vertex_labels[v]
            )));
        }
        let dart_vertex: Vec<usize> = (0..self.dart_count()).map(|d| self.cell_of[d]).collect();
        let mut dual = CellComplex::from_rotators(
            self.cell_labels.clone(),
            self.edge_labels.clone(),
            dart_vertex,
            self.cells.clone(),
        )?;
        dual.cell_labels = dual
            .cells
            .iter()
            .map(|cell| self.vertex_labels[self.dart_vertex[cell[0]]].clone())
            .collect();
        Ok(dual)
    }

    fn component_code(&self, root: usize, mirror: bool) -> Vec<(usize, usize)> {
        let darts = self.dart_count();
        let mut number = vec![usize::MAX; darts];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        number[root] = 0;
        order.push(root);
        queue.push_back(root);
        let step = |d: usize| if mirror { self.rot_prev[d] } else { self.rot_next[d] };
        while let Some(d) = queue.pop_front() {
            for next in [opp(d), step(d)] {
                if number[next] == usize::MAX {
                    number[next] = order.len();
                    order.push(next);
                    queue.push_back(next);
                }
            }
        }
        order.iter().map(|&d| (number[opp(d)], number[step(d)])).collect()
    }

    /// Canonical description up to relabelling: one code per component with
    /// edges (minimised over root darts), sorted, plus the number of bare vertices.
    pub fn canonical_form(&self, mirror: bool) -> (Vec<Vec<(usize, usize)>>, usize) {
        let darts = self.dart_count();
        let mut seen = vec![false; darts];
        let mut codes = Vec::new();
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(d) = stack.pop() {
                members.push(d);
                for next in [opp(d), self.rot_next[d]] {
                    if !seen[next] {
                        seen[next] = true;
                        stack.push(next);
                    }
                }
            }
            let best = members.iter().map(|&r| self.component_code(r, mirror)).min();
            codes.push(best.expect("a component has at least one dart"));
        }
        codes.sort();
        let bare = self.rotators.iter().filter(|r| r.is_empty()).count();
        (codes, bare)
    }

    /// Orientation-preserving isomorphism of cell complexes.
    pub fn is_isomorphic(&self, other: &CellComplex) -> bool {
        self.dart_count() == other.dart_count()
            && self.vertex_count() == other.vertex_count()
            && self.cell_count() == other.cell_count()
            && self.canonical_form(false) == other.canonical_form(false)
    }

    /// Isomorphism allowing the orientation of components to be reversed.
    pub fn is_isomorphic_up_to_mirror(&self, other: &CellComplex) -> bool {
        self.is_isomorphic(other) || {
            self.dart_count() == other.dart_count()
                && self.vertex_count() == other.vertex_count()
                && self.cell_count() == other.cell_count()
                && self.canonical_form(false) == other.canonical_form(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A cycle of length n drawn with the only rotators available.
    fn cycle(n: usize) -> CellComplex {
        // edge i joins vertex i (dart 2i) to vertex i+1 (dart 2i+1)
        let mut dart_vertex = vec![0; 2 * n];
        for i in 0..n {
            dart_vertex[2 * i] = i;
            dart_vertex[2 * i + 1] = (i + 1) % n;
        }
        let rotators = (0..n).map(|v| vec![2 * v, 2 * ((v + n - 1) % n) + 1]).collect();
        CellComplex::from_rotators(
            (0..n).map(|i| format!("v{i}")).collect(),
            (0..n).map(|i| format!("e{i}")).collect(),
            dart_vertex,
            rotators,
        )
        .unwrap()
    }

    /// K4 with rotators from a planar drawing, or a twisted variant.
    fn k4(twisted: bool) -> CellComplex {
        // edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(2,3) 5:(3,1)
        let ends = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)];
        let mut dart_vertex = vec![0; 12];
        for (k, (a, b)) in ends.iter().enumerate() {
            dart_vertex[2 * k] = *a;
            dart_vertex[2 * k + 1] = *b;
        }
        // centre 0 with outer triangle 1,2,3 drawn counter-clockwise
        let mut rotators = vec![vec![0, 2, 4], vec![1, 11, 6], vec![3, 7, 8], vec![5, 9, 10]];
        if twisted {
            rotators[0] = vec![0, 4, 2];
        }
        CellComplex::from_rotators(
            (0..4).map(|i| format!("v{i}")).collect(),
            (0..6).map(|i| format!("e{i}")).collect(),
            dart_vertex,
            rotators,
        )
        .unwrap()
    }

    #[test]
    fn cycle_traces_two_cells() {
        let c = cycle(5);
        assert_eq!(c.cell_count(), 2);
        assert_eq!(c.euler_characteristics(), vec![2]);
        assert!(c.is_sphere_union());
    }

    #[test]
    fn k4_planar_and_twisted() {
        let planar = k4(false);
        assert_eq!(planar.cell_count(), 4);
        assert!(planar.is_sphere_union());
        let twisted = k4(true);
        assert_eq!(twisted.euler_characteristics(), vec![0]);
        assert!(!twisted.is_sphere_union());
    }

    #[test]
    fn every_dart_in_one_cell() {
        for cc in [cycle(3), k4(false), k4(true)] {
            let mut count = vec![0; cc.dart_count()];
            for cell in cc.cells() {
                for &d in cell {
                    count[d] += 1;
                }
            }
            assert!(count.iter().all(|&n| n == 1));
            assert!(cc.euler_characteristics().iter().all(|chi| chi % 2 == 0 && *chi <= 2));
        }
    }

    #[test]
    fn bare_vertex_is_a_sphere() {
        let cc = CellComplex::from_rotators(vec!["a".into()], vec![], vec![], vec![vec![]]).unwrap();
        assert_eq!(cc.cell_count(), 1);
        assert_eq!(cc.euler_characteristics(), vec![2]);
        assert!(cc.surface_dual().is_err());
    }

    #[test]
    fn dual_of_tetrahedral_sphere() {
        let planar = k4(false);
        let dual = planar.surface_dual().unwrap();
        assert_eq!((dual.vertex_count(), dual.edge_count(), dual.cell_count()), (4, 6, 4));
        assert!(dual.is_sphere_union());
        assert!(dual.is_isomorphic(&planar));
        let back = dual.surface_dual().unwrap();
        assert!(back.is_isomorphic(&planar));
        assert_eq!(back.rotators(), planar.rotators());
    }

    #[test]
    fn dual_of_torus_map() {
        let twisted = k4(true);
        let dual = twisted.surface_dual().unwrap();
        assert_eq!(dual.euler_characteristic(), twisted.euler_characteristic());
        assert_eq!(dual.surface_dual().unwrap().rotators(), twisted.rotators());
    }

    #[test]
    fn isomorphism_distinguishes_surfaces() {
        assert!(!k4(false).is_isomorphic(&k4(true)));
        assert!(!cycle(3).is_isomorphic(&cycle(4)));
        assert!(cycle(4).is_isomorphic(&cycle(4)));
    }

    #[test]
    fn from_cells_recovers_rotators() {
        let planar = k4(false);
        let rebuilt = CellComplex::from_cells(
            planar.edge_labels().to_vec(),
            planar.cells().to_vec(),
            planar.cell_labels().to_vec(),
            |d| format!("x{d}"),
        )
        .unwrap();
        assert!(rebuilt.is_isomorphic(&planar));
        assert_eq!(rebuilt.vertex_count(), 4);
    }
}
