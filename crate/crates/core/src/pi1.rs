//! A partial test for trivial fundamental group.
//!
//! The presentation has one generator per edge outside a breadth-first
//! spanning forest of the 1-skeleton and one relator per face. Simplification
//! alternates free and cyclic reduction, elimination of a generator that
//! occurs exactly once in some relator, and substitutions that shorten a
//! relator by multiplying in a conjugate of another. The group is reported
//! trivial only when every generator has been eliminated.

use std::collections::VecDeque;

use serde::Serialize;

use crate::complex::{PreComplex, Sign};

pub const DEFAULT_BUDGET: u64 = 100_000;

/// Letters are `±(g + 1)` for generator `g`.
type Word = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pi1Status {
    Trivial,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Verdict {
    pub status: Pi1Status,
    pub generators_before: usize,
    pub relators_before: usize,
    pub generators_after: usize,
    pub relators_after: usize,
    pub steps: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

/// Generators: edges outside a breadth-first spanning forest (roots and
/// neighbours taken in bytewise id order). Relators: face boundary words.
pub fn presentation(c: &PreComplex) -> Presentation {
    let mut in_tree = vec![false; c.edge_count()];
    let mut reached = vec![false; c.vertex_count()];
    let edges = c.sorted_edges();
    for root in c.sorted_vertices() {
        if reached[root] {
            continue;
        }
        reached[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in &edges {
                let edge = &c.edges()[e];
                let w = if edge.tail == v {
                    edge.head
                } else if edge.head == v {
                    edge.tail
                } else {
                    continue;
                };
                if !reached[w] {
                    reached[w] = true;
                    in_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut generator = vec![0i32; c.edge_count()];
    let mut next = 0;
    for &e in &edges {
        if !in_tree[e] {
            next += 1;
            generator[e] = next;
        }
    }
    let relators = c
        .sorted_faces()
        .into_iter()
        .map(|f| {
            c.faces()[f]
                .boundary
                .iter()
                .filter(|r| generator[r.edge] != 0)
                .map(|r| {
                    if r.sign == Sign::Pos {
                        generator[r.edge]
                    } else {
                        -generator[r.edge]
                    }
                })
                .collect()
        })
        .collect();
    Presentation {
        generators: next as usize,
        relators,
    }
}

fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

struct Simplifier {
    relators: Vec<Word>,
    alive: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl Simplifier {
    fn spend(&mut self, n: u64) -> bool {
        self.steps = self.steps.saturating_add(n);
        self.steps <= self.budget
    }

    fn normalize(&mut self) {
        let mut out: Vec<Word> = self
            .relators
            .iter()
            .map(|r| cyclic_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out.dedup();
        self.relators = out;
    }

    /// Eliminates one generator occurring exactly once in some relator.
    fn eliminate(&mut self) -> Option<bool> {
        let (ri, pos) = self.relators.iter().enumerate().find_map(|(ri, r)| {
            (0..r.len())
                .find(|&i| r.iter().filter(|&&y| y.abs() == r[i].abs()).count() == 1)
                .map(|i| (ri, i))
        })?;
        let r = self.relators.remove(ri);
        let x = r[pos];
        // r = u x v = 1  gives  x = u^-1 v^-1
        let mut value = inverse(&r[..pos]);
        value.extend(inverse(&r[pos + 1..]));
        let value = free_reduce(&value);
        let value_inv = inverse(&value);
        let g = x.abs();
        self.alive[(g - 1) as usize] = false;
        let mut cost = r.len() as u64;
        for s in &mut self.relators {
            if !s.iter().any(|y| y.abs() == g) {
                continue;
            }
            let mut t = Vec::with_capacity(s.len());
            for &y in s.iter() {
                if y == x {
                    t.extend_from_slice(&value);
                } else if y == -x {
                    t.extend_from_slice(&value_inv);
                } else {
                    t.push(y);
                }
            }
            cost += t.len() as u64;
            *s = t;
        }
        Some(self.spend(cost))
    }

    /// Replaces a relator by a shorter product with a conjugate of another.
    fn shorten(&mut self) -> Option<bool> {
        let n = self.relators.len();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let s = self.relators[j].clone();
                for r in [self.relators[i].clone(), inverse(&self.relators[i])] {
                    for a in 0..r.len() {
                        let rot: Word = r[a..].iter().chain(&r[..a]).copied().collect();
                        for b in 0..s.len() {
                            if !self.spend(1) {
                                return Some(false);
                            }
                            let mut t: Word = s[b..].iter().chain(&s[..b]).copied().collect();
                            t.extend_from_slice(&rot);
                            let t = cyclic_reduce(&t);
                            if t.len() < s.len() {
                                self.relators[j] = t;
                                return Some(true);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn run(&mut self) {
        loop {
            self.normalize();
            if !self.alive.iter().any(|&a| a) {
                return;
            }
            let progress = match self.eliminate() {
                Some(within) => within,
                None => match self.shorten() {
                    Some(within) => within,
                    None => return,
                },
            };
            if !progress {
                return;
            }
        }
    }
}

/// Simplifies a presentation within `budget` rewriting steps.
pub fn simplify(p: &Presentation, budget: u64) -> (Presentation, u64) {
    let mut s = Simplifier {
        relators: p.relators.clone(),
        alive: vec![true; p.generators],
        steps: 0,
        budget,
    };
    s.run();
    let generators = s.alive.iter().filter(|&&a| a).count();
    (
        Presentation {
            generators,
            relators: s.relators,
        },
        s.steps.min(budget),
    )
}

pub fn pi1_trivial_heuristic(c: &PreComplex, budget: u64) -> Pi1Verdict {
    let p = presentation(c);
    let (q, steps) = simplify(&p, budget);
    Pi1Verdict {
        status: if q.generators == 0 {
            Pi1Status::Trivial
        } else {
            Pi1Status::Unknown
        },
        generators_before: p.generators,
        relators_before: p.relators.len(),
        generators_after: q.generators,
        relators_after: q.relators.len(),
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), [3]);
        assert_eq!(cyclic_reduce(&[-1, 2, 3, 1]), [2, 3]);
        assert_eq!(inverse(&[1, -2]), [2, -1]);
    }

    #[test]
    fn tetrahedron_is_simply_connected() {
        let v = pi1_trivial_heuristic(&fixtures::tetrahedron(), DEFAULT_BUDGET);
        assert_eq!((v.generators_before, v.relators_before), (3, 4));
        assert_eq!(v.status, Pi1Status::Trivial);
    }

    #[test]
    fn never_trivial_on_nonzero_homology() {
        for c in [fixtures::rp2_6(), fixtures::torus7()] {
            for budget in [0, 10, 1000, DEFAULT_BUDGET] {
                assert_eq!(pi1_trivial_heuristic(&c, budget).status, Pi1Status::Unknown);
            }
        }
    }

    #[test]
    fn cyclic_group_survives() {
        // <a | a^2> must not be eliminated
        let p = Presentation {
            generators: 1,
            relators: vec![vec![1, 1]],
        };
        assert_eq!(simplify(&p, 1000).0.generators, 1);
        // <a, b | ab, b> is trivial
        let p = Presentation {
            generators: 2,
            relators: vec![vec![1, 2], vec![2]],
        };
        assert_eq!(simplify(&p, 1000).0.generators, 0);
    }

    #[test]
    fn contractible_fixtures() {
        for c in [
            fixtures::triangle(),
            fixtures::book3(),
            fixtures::cone_k5(),
            fixtures::bowtie(),
        ] {
            assert_eq!(pi1_trivial_heuristic(&c, DEFAULT_BUDGET).status, Pi1Status::Trivial);
        }
    }
}
