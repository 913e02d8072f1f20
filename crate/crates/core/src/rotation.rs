//! Rotation systems: a cyclic order of the face incidences at every edge.
//!
//! Cyclic orders are stored in canonical rotation, least incidence first
//! (face id bytewise, then trail position). Edges with fewer than two
//! incidences carry an empty order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{EdgeIdx, Incidence, PreComplex};
use crate::error::TopologyError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    sigma: Vec<Vec<Incidence>>,
}

/// `{"sigma": {"<edge id>": ["<incidence label>", ...]}}`, keys sorted bytewise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaDoc {
    pub sigma: BTreeMap<String, Vec<String>>,
}

/// Rotates `seq` so that its least element comes first.
pub fn canonical_rotation(c: &PreComplex, seq: &[Incidence]) -> Vec<Incidence> {
    let Some(start) = (0..seq.len()).min_by(|&a, &b| c.incidence_cmp(seq[a], seq[b])) else {
        return Vec::new();
    };
    seq[start..].iter().chain(&seq[..start]).copied().collect()
}

/// Rearranges `v` into the next permutation in lexicographic order, returning
/// false (and leaving `v` sorted) after the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All canonical cyclic orders of the incidences at `e`, in lexicographic
/// order: the least incidence first, the others permuted. A single
/// candidate (the empty order) when `e` has fewer than two incidences.
pub fn cyclic_orders(c: &PreComplex, e: EdgeIdx) -> Vec<Vec<Incidence>> {
    let inc = c.incidences(e);
    if inc.len() < 2 {
        return vec![Vec::new()];
    }
    let mut rest: Vec<usize> = (1..inc.len()).collect();
    let mut out = Vec::new();
    loop {
        let mut order = vec![inc[0]];
        order.extend(rest.iter().map(|&i| inc[i]));
        out.push(order);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

/// Number of rotation systems: the product of `(deg(e) - 1)!`, saturating.
pub fn total_space(c: &PreComplex) -> u128 {
    (0..c.edge_count())
        .map(|e| (1..c.edge_degree(e).max(1) as u128).product::<u128>())
        .fold(1u128, |acc, x| acc.saturating_mul(x))
}

impl RotationSystem {
    /// Builds a rotation system from one cyclic sequence per edge (indexed by
    /// edge). Each sequence must list the incidences at its edge exactly once;
    /// an edge with one incidence may list it or be left empty.
    pub fn new(c: &PreComplex, orders: Vec<Vec<Incidence>>) -> Result<RotationSystem, TopologyError> {
        if orders.len() != c.edge_count() {
            return Err(TopologyError::InvalidRotation {
                edge: String::new(),
                reason: format!("expected {} edges, got {}", c.edge_count(), orders.len()),
            });
        }
        let mut sigma = Vec::with_capacity(orders.len());
        for (e, order) in orders.into_iter().enumerate() {
            let expected = c.incidences(e);
            if expected.len() < 2 && (order.is_empty() || order.as_slice() == expected) {
                sigma.push(Vec::new());
                continue;
            }
            let mut sorted = order.clone();
            sorted.sort_by(|a, b| c.incidence_cmp(*a, *b));
            if sorted != expected {
                return Err(TopologyError::InvalidRotation {
                    edge: c.edge_id(e).to_string(),
                    reason: "must list every incident face exactly once".into(),
                });
            }
            sigma.push(canonical_rotation(c, &order));
        }
        Ok(RotationSystem { sigma })
    }

    /// The least rotation system: every order sorted.
    pub fn first(c: &PreComplex) -> RotationSystem {
        let sigma = (0..c.edge_count())
            .map(|e| {
                if c.edge_degree(e) < 2 {
                    Vec::new()
                } else {
                    c.incidences(e).to_vec()
                }
            })
            .collect();
        RotationSystem { sigma }
    }

    /// Assembles a rotation system from trusted canonical orders.
    pub(crate) fn from_canonical(sigma: Vec<Vec<Incidence>>) -> RotationSystem {
        RotationSystem { sigma }
    }

    /// The stored cyclic order at `e`; empty when `e` has fewer than two incidences.
    pub fn sigma(&self, e: EdgeIdx) -> &[Incidence] {
        &self.sigma[e]
    }

    pub fn orders(&self) -> &[Vec<Incidence>] {
        &self.sigma
    }

    /// The cyclic order used for tracing: σ(e), or the lone incidence of a
    /// single-face edge.
    pub fn cyclic_order(&self, c: &PreComplex, e: EdgeIdx) -> Vec<Incidence> {
        if self.sigma[e].is_empty() {
            c.incidences(e).to_vec()
        } else {
            self.sigma[e].clone()
        }
    }

    /// Successor of `inc` in the cyclic order at its edge.
    pub fn successor(&self, c: &PreComplex, e: EdgeIdx, inc: Incidence) -> Incidence {
        let order = self.cyclic_order(c, e);
        let i = order
            .iter()
            .position(|&x| x == inc)
            .expect("incidence lies on the edge");
        order[(i + 1) % order.len()]
    }

    /// Compares two rotation systems in search order: edges bytewise by id,
    /// each order by the sequence of incidences.
    pub fn search_cmp(&self, other: &RotationSystem, c: &PreComplex) -> std::cmp::Ordering {
        for e in c.sorted_edges() {
            for (a, b) in self.sigma[e].iter().zip(&other.sigma[e]) {
                let o = c.incidence_cmp(*a, *b);
                if o.is_ne() {
                    return o;
                }
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn to_doc(&self, c: &PreComplex) -> SigmaDoc {
        let sigma = (0..c.edge_count())
            .map(|e| {
                let labels = self.sigma[e].iter().map(|&i| c.incidence_label(i)).collect();
                (c.edge_id(e).to_string(), labels)
            })
            .collect();
        SigmaDoc { sigma }
    }

    /// Reads a rotation document. Edges with at most one incidence may be omitted.
    pub fn from_doc(c: &PreComplex, doc: &SigmaDoc) -> Result<RotationSystem, TopologyError> {
        let mut orders = vec![None; c.edge_count()];
        for (id, labels) in &doc.sigma {
            let e = c.edge(id).ok_or_else(|| TopologyError::UnknownEdge(id.clone()))?;
            let mut order = Vec::with_capacity(labels.len());
            for label in labels {
                let inc = c
                    .parse_incidence_label(e, label)
                    .ok_or_else(|| TopologyError::InvalidRotation {
                        edge: id.clone(),
                        reason: format!("{label:?} is not an incidence of this edge"),
                    })?;
                order.push(inc);
            }
            orders[e] = Some(order);
        }
        let mut full = Vec::with_capacity(orders.len());
        for (e, order) in orders.into_iter().enumerate() {
            match order {
                Some(o) => full.push(o),
                None if c.edge_degree(e) < 2 => full.push(Vec::new()),
                None => {
                    return Err(TopologyError::InvalidRotation {
                        edge: c.edge_id(e).to_string(),
                        reason: "missing".into(),
                    })
                }
            }
        }
        RotationSystem::new(c, full)
    }

    pub fn parse(c: &PreComplex, text: &str) -> Result<RotationSystem, TopologyError> {
        let doc: SigmaDoc = serde_json::from_str(text).map_err(|e| TopologyError::InvalidRotation {
            edge: String::new(),
            reason: e.to_string(),
        })?;
        RotationSystem::from_doc(c, &doc)
    }
}

/// Every rotation system of `c` in search order, lazily.
pub struct AllRotations<'a> {
    c: &'a PreComplex,
    edges: Vec<EdgeIdx>,
    choices: Vec<Vec<Vec<Incidence>>>,
    index: Vec<usize>,
    done: bool,
}

impl<'a> AllRotations<'a> {
    pub fn new(c: &'a PreComplex) -> AllRotations<'a> {
        let edges = c.sorted_edges();
        let choices = edges.iter().map(|&e| cyclic_orders(c, e)).collect();
        let index = vec![0; edges.len()];
        AllRotations {
            c,
            edges,
            choices,
            index,
            done: false,
        }
    }
}

impl Iterator for AllRotations<'_> {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        if self.done {
            return None;
        }
        let mut sigma = vec![Vec::new(); self.c.edge_count()];
        for (k, &e) in self.edges.iter().enumerate() {
            sigma[e] = self.choices[k][self.index[k]].clone();
        }
        // odometer, last edge fastest
        self.done = true;
        for k in (0..self.edges.len()).rev() {
            self.index[k] += 1;
            if self.index[k] < self.choices[k].len() {
                self.done = false;
                break;
            }
            self.index[k] = 0;
        }
        Some(RotationSystem { sigma })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn permutations_in_order() {
        let mut v = vec![0, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]);
        assert_eq!(v, [0, 1, 2]);
    }

    #[test]
    fn space_sizes() {
        assert_eq!(total_space(&fixtures::tetrahedron()), 1);
        assert_eq!(total_space(&fixtures::book3()), 2);
        assert_eq!(total_space(&fixtures::cone_k5()), 6u128.pow(5));
        assert_eq!(AllRotations::new(&fixtures::book3()).count(), 2);
        assert_eq!(AllRotations::new(&fixtures::cone_k5()).count(), 7776);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let c = fixtures::cone_k5();
        let all: Vec<RotationSystem> = AllRotations::new(&c).take(200).collect();
        for w in all.windows(2) {
            assert!(w[0].search_cmp(&w[1], &c).is_lt());
        }
        assert_eq!(all[0], RotationSystem::first(&c));
    }

    #[test]
    fn doc_round_trip() {
        let c = fixtures::book3();
        for sigma in AllRotations::new(&c) {
            let doc = sigma.to_doc(&c);
            assert_eq!(RotationSystem::from_doc(&c, &doc).unwrap(), sigma);
        }
        let e = c.edge("evw").unwrap();
        let reversed: Vec<Incidence> = c.incidences(e).iter().rev().copied().collect();
        let mut orders = RotationSystem::first(&c).orders().to_vec();
        orders[e] = reversed;
        let sigma = RotationSystem::new(&c, orders).unwrap();
        assert_eq!(sigma.sigma(e)[0], c.incidences(e)[0]);
    }

    #[test]
    fn rejects_bad_orders() {
        let c = fixtures::book3();
        let e = c.edge("evw").unwrap();
        let mut orders = RotationSystem::first(&c).orders().to_vec();
        orders[e].pop();
        assert!(RotationSystem::new(&c, orders).is_err());
        let doc = r#"{"sigma": {"nope": []}}"#;
        assert_eq!(
            RotationSystem::parse(&c, doc),
            Err(TopologyError::UnknownEdge("nope".into()))
        );
    }
}
