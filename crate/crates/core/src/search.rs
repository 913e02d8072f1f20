//! Backtracking searches for planar and generalised planar rotation systems.
//!
//! Edges are decided in bytewise id order; the candidates at an edge are its
//! canonical cyclic orders in lexicographic order (and, for the generalised
//! search, black before red). A vertex's link complex is traced as soon as
//! every edge at the vertex is decided, and the branch is cut unless it is a
//! union of spheres. Before any branching, every link graph must be planar.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{EdgeIdx, End, Incidence, PreComplex, VertexIdx};
use crate::error::SearchError;
use crate::link::{link_graph, LinkGraph};
use crate::rotation::{cyclic_orders, total_space, RotationSystem, SigmaDoc};
use crate::trace::trace_with;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    First,
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Found,
    Exhausted,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub mode: Mode,
    pub cap: u64,
    /// Split the candidates of the first branching edge across threads.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: Mode::First,
            cap: 10_000_000,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrsSearchResult {
    pub status: Status,
    /// The least planar rotation system, when one was found.
    pub sigma: Option<RotationSystem>,
    /// Number of planar rotation systems (count mode only).
    pub count: Option<u64>,
    pub candidates_examined: u64,
    pub total_space: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrsDoc {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    pub candidates_examined: u64,
    pub total_space: u128,
}

impl PrsSearchResult {
    pub fn to_doc(&self, c: &PreComplex) -> PrsDoc {
        PrsDoc {
            status: self.status,
            sigma: self.sigma.as_ref().map(|s| s.to_doc(c)),
            count: self.count,
            candidates_examined: self.candidates_examined,
            total_space: self.total_space,
        }
    }
}

/// Link graph of one vertex with everything a sphere check needs.
struct LinkData {
    dart_vertex: Vec<usize>,
    /// (edge, end) of every link vertex.
    ends: Vec<(EdgeIdx, End)>,
    /// Dart at link vertex `i` for the `j`-th incidence of its edge.
    dart_by_pos: Vec<Vec<usize>>,
    component: Vec<usize>,
    /// V - E per component, plus one for each isolated link vertex.
    base_chi: Vec<i64>,
}

impl LinkData {
    fn new(c: &PreComplex, g: &LinkGraph) -> LinkData {
        let ends = g.vertices.iter().map(|ee| (ee.edge, ee.end)).collect();
        let dart_by_pos = g
            .vertices
            .iter()
            .map(|&ee| {
                c.incidences(ee.edge)
                    .iter()
                    .map(|&inc| g.dart_of(c, inc, ee).expect("incidence darts lie in the link"))
                    .collect()
            })
            .collect();
        let (component, n) = g.component_labels();
        let mut base_chi = vec![0i64; n];
        for (v, &comp) in component.iter().enumerate() {
            base_chi[comp] += 1;
            if g.darts_at(v).is_empty() {
                base_chi[comp] += 1;
            }
        }
        for e in &g.edges {
            base_chi[component[e.ends[0]]] -= 1;
        }
        LinkData {
            dart_vertex: (0..g.dart_count()).map(|d| g.dart_vertex(d)).collect(),
            ends,
            dart_by_pos,
            component,
            base_chi,
        }
    }

    /// Whether the link complex is a sphere union when edge `e` carries the
    /// cyclic order `orders[e]` (indices into its incidences), reversed at the
    /// tail unless `red[e]`.
    fn is_sphere_union(&self, orders: &[Vec<usize>], red: &[bool], rot_next: &mut Vec<usize>) -> bool {
        let darts = self.dart_vertex.len();
        rot_next.clear();
        rot_next.resize(darts, usize::MAX);
        for (i, &(e, end)) in self.ends.iter().enumerate() {
            let order = &orders[e];
            let k = order.len();
            let reverse = end == End::Tail && !red[e];
            for j in 0..k {
                let (a, b) = if reverse {
                    (order[k - 1 - j], order[(2 * k - 2 - j) % k])
                } else {
                    (order[j], order[(j + 1) % k])
                };
                rot_next[self.dart_by_pos[i][a]] = self.dart_by_pos[i][b];
            }
        }
        let mut chi = self.base_chi.clone();
        let mut seen = vec![false; darts];
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            chi[self.component[self.dart_vertex[start]]] += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = rot_next[d ^ 1];
            }
        }
        chi.iter().all(|&x| x == 2)
    }
}

/// One decision level: an edge and its candidate (order, colour) pairs.
struct Level {
    edge: EdgeIdx,
    candidates: Vec<(Vec<usize>, bool)>,
}

struct Prepared<'a> {
    c: &'a PreComplex,
    links: Vec<LinkData>,
    levels: Vec<Level>,
    /// Vertices whose links are fully decided at each level.
    vertices_after: Vec<Vec<VertexIdx>>,
    /// Faces whose edges are all decided at each level (colour search only).
    faces_after: Vec<Vec<usize>>,
    /// Vertices decided before any branching.
    vertices_before: Vec<VertexIdx>,
    default_orders: Vec<Vec<usize>>,
}

impl<'a> Prepared<'a> {
    fn new(c: &'a PreComplex, colours: bool) -> Prepared<'a> {
        let links = (0..c.vertex_count())
            .map(|v| LinkData::new(c, &link_graph(c, v).expect("vertex exists")))
            .collect();
        let min_degree = if colours { 1 } else { 2 };
        let branching: Vec<EdgeIdx> = c
            .sorted_edges()
            .into_iter()
            .filter(|&e| c.edge_degree(e) >= min_degree)
            .collect();
        let levels: Vec<Level> = branching
            .iter()
            .map(|&e| {
                let orders: Vec<Vec<usize>> = if c.edge_degree(e) < 2 {
                    vec![(0..c.edge_degree(e)).collect()]
                } else {
                    cyclic_orders(c, e)
                        .into_iter()
                        .map(|o| {
                            o.iter()
                                .map(|inc| c.incidences(e).iter().position(|x| x == inc).unwrap())
                                .collect()
                        })
                        .collect()
                };
                let palette: &[bool] = if colours { &[false, true] } else { &[false] };
                let candidates = orders
                    .iter()
                    .flat_map(|o| palette.iter().map(move |&r| (o.clone(), r)))
                    .collect();
                Level { edge: e, candidates }
            })
            .collect();
        let mut level_of = vec![None; c.edge_count()];
        for (k, l) in levels.iter().enumerate() {
            level_of[l.edge] = Some(k);
        }
        let mut vertices_after = vec![Vec::new(); levels.len()];
        let mut vertices_before = Vec::new();
        for v in c.sorted_vertices() {
            match c.edges_at(v).iter().filter_map(|&e| level_of[e]).max() {
                Some(k) => vertices_after[k].push(v),
                None => vertices_before.push(v),
            }
        }
        let mut faces_after = vec![Vec::new(); levels.len()];
        if colours {
            for (f, face) in c.faces().iter().enumerate() {
                let k = face.boundary.iter().filter_map(|r| level_of[r.edge]).max();
                faces_after[k.expect("face edges are decided")].push(f);
            }
        }
        let default_orders = (0..c.edge_count()).map(|e| (0..c.edge_degree(e)).collect()).collect();
        Prepared {
            c,
            links,
            levels,
            vertices_after,
            faces_after,
            vertices_before,
            default_orders,
        }
    }

    fn links_planar(&self) -> bool {
        (0..self.c.vertex_count()).all(|v| link_graph(self.c, v).expect("vertex exists").is_planar())
    }

    fn initial_ok(&self) -> bool {
        let red = vec![false; self.c.edge_count()];
        let mut buf = Vec::new();
        self.vertices_before
            .iter()
            .all(|&v| self.links[v].is_sphere_union(&self.default_orders, &red, &mut buf))
    }

    fn to_incidences(&self, orders: &[Vec<usize>]) -> Vec<Vec<Incidence>> {
        orders
            .iter()
            .enumerate()
            .map(|(e, o)| {
                if o.len() < 2 {
                    Vec::new()
                } else {
                    o.iter().map(|&j| self.c.incidences(e)[j]).collect()
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default)]
struct Outcome {
    examined: u64,
    found: u64,
    first: Option<(Vec<Vec<usize>>, Vec<bool>)>,
    hit_budget: bool,
}

struct Dfs<'p, 'a> {
    prep: &'p Prepared<'a>,
    mode: Mode,
    budget: u64,
    orders: Vec<Vec<usize>>,
    red: Vec<bool>,
    buf: Vec<usize>,
    out: Outcome,
}

impl<'p, 'a> Dfs<'p, 'a> {
    fn new(prep: &'p Prepared<'a>, mode: Mode, budget: u64) -> Self {
        Dfs {
            prep,
            mode,
            budget,
            orders: prep.default_orders.clone(),
            red: vec![false; prep.c.edge_count()],
            buf: Vec::new(),
            out: Outcome::default(),
        }
    }

    /// Runs the search, with the first level restricted to candidate `only`
    /// if given. Returns the outcome.
    fn run(mut self, only: Option<usize>) -> Outcome {
        self.go(0, only);
        self.out
    }

    fn accept(&mut self, k: usize) -> bool {
        let prep = self.prep;
        for &v in &prep.vertices_after[k] {
            if !prep.links[v].is_sphere_union(&self.orders, &self.red, &mut self.buf) {
                return false;
            }
        }
        prep.faces_after[k]
            .iter()
            .all(|&f| prep.c.faces()[f].boundary.iter().filter(|r| self.red[r.edge]).count() % 2 == 0)
    }

    /// Returns true when the search must stop.
    fn go(&mut self, k: usize, only: Option<usize>) -> bool {
        if k == self.prep.levels.len() {
            self.out.found += 1;
            if self.out.first.is_none() {
                self.out.first = Some((self.orders.clone(), self.red.clone()));
            }
            return self.mode == Mode::First;
        }
        let level = &self.prep.levels[k];
        let range = match only {
            Some(i) if k == 0 => i..i + 1,
            _ => 0..level.candidates.len(),
        };
        for i in range {
            if self.out.examined == self.budget {
                self.out.hit_budget = true;
                return true;
            }
            self.out.examined += 1;
            let (order, colour) = &level.candidates[i];
            self.orders[level.edge].clone_from(order);
            self.red[level.edge] = *colour;
            if self.accept(k) && self.go(k + 1, None) {
                return true;
            }
        }
        self.red[level.edge] = false;
        false
    }
}

/// Runs the search sequentially or split over the first level, merging so
/// that the outcome equals the sequential one.
fn run_search(prep: &Prepared, mode: Mode, cap: u64, parallel: bool) -> Outcome {
    if !parallel || prep.levels.is_empty() {
        return Dfs::new(prep, mode, cap).run(None);
    }
    let parts: Vec<Outcome> = (0..prep.levels[0].candidates.len())
        .into_par_iter()
        .map(|i| Dfs::new(prep, mode, cap).run(Some(i)))
        .collect();
    let mut total = Outcome::default();
    for (i, part) in parts.into_iter().enumerate() {
        let part = if part.hit_budget || total.examined + part.examined > cap {
            // replay the partition holding the cap boundary with the exact remaining budget
            Dfs::new(prep, mode, cap - total.examined).run(Some(i))
        } else {
            part
        };
        total.examined += part.examined;
        total.found += part.found;
        if total.first.is_none() {
            total.first = part.first;
        }
        if part.hit_budget {
            total.hit_budget = true;
            return total;
        }
        if mode == Mode::First && total.first.is_some() {
            return total;
        }
    }
    total
}

/// Searches for planar rotation systems of `c`.
pub fn search_planar_rotation_system(c: &PreComplex, opts: SearchOptions) -> Result<PrsSearchResult, SearchError> {
    let prep = Prepared::new(c, false);
    let space = total_space(c);
    if !prep.links_planar() || !prep.initial_ok() {
        return Ok(PrsSearchResult {
            status: Status::Exhausted,
            sigma: None,
            count: (opts.mode == Mode::Count).then_some(0),
            candidates_examined: 0,
            total_space: space,
        });
    }
    let out = run_search(&prep, opts.mode, opts.cap, opts.parallel);
    if out.hit_budget {
        return Err(SearchError::CapExceeded {
            cap: opts.cap,
            examined: out.examined,
            found: out.found,
        });
    }
    let sigma = out
        .first
        .map(|(orders, _)| RotationSystem::from_canonical(prep.to_incidences(&orders)));
    Ok(PrsSearchResult {
        status: if sigma.is_some() {
            Status::Found
        } else {
            Status::Exhausted
        },
        sigma,
        count: (opts.mode == Mode::Count).then_some(out.found),
        candidates_examined: out.examined,
        total_space: space,
    })
}

/// The least planar rotation system when the search finds one within its
/// default cap, otherwise the least rotation system.
pub fn preferred_rotation_system(c: &PreComplex) -> RotationSystem {
    search_planar_rotation_system(c, SearchOptions::default())
        .ok()
        .and_then(|r| r.sigma)
        .unwrap_or_else(|| RotationSystem::first(c))
}

/// Per edge a cyclic order and a colour: a black edge induces its order at
/// the head and the reverse at the tail, a red edge induces its order at both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedRotation {
    pub orders: Vec<Vec<Incidence>>,
    pub red: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneralizedDoc {
    pub sigma: SigmaDoc,
    pub red: Vec<String>,
}

impl GeneralizedRotation {
    pub fn to_doc(&self, c: &PreComplex) -> GeneralizedDoc {
        let sigma = RotationSystem::from_canonical(self.orders.clone()).to_doc(c);
        let mut red: Vec<String> = (0..c.edge_count())
            .filter(|&e| self.red[e])
            .map(|e| c.edge_id(e).to_string())
            .collect();
        red.sort();
        GeneralizedDoc { sigma, red }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GprsSearchResult {
    pub status: Status,
    pub witness: Option<GeneralizedRotation>,
    pub candidates_examined: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GprsDoc {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<GeneralizedDoc>,
    pub candidates_examined: u64,
}

impl GprsSearchResult {
    pub fn to_doc(&self, c: &PreComplex) -> GprsDoc {
        GprsDoc {
            status: self.status,
            witness: self.witness.as_ref().map(|w| w.to_doc(c)),
            candidates_examined: self.candidates_examined,
        }
    }
}

/// Searches for a generalised planar rotation system. The all-black systems
/// (planar rotation systems) are tried first; the full search then runs over
/// (order, colour) pairs per edge.
pub fn search_generalized_prs(c: &PreComplex, cap: u64) -> Result<GprsSearchResult, SearchError> {
    let black = search_planar_rotation_system(
        c,
        SearchOptions {
            mode: Mode::First,
            cap,
            parallel: false,
        },
    )?;
    if let Some(sigma) = black.sigma {
        return Ok(GprsSearchResult {
            status: Status::Found,
            witness: Some(GeneralizedRotation {
                orders: sigma.orders().to_vec(),
                red: vec![false; c.edge_count()],
            }),
            candidates_examined: black.candidates_examined,
        });
    }
    let spent = black.candidates_examined;
    let prep = Prepared::new(c, true);
    if !prep.links_planar() || !prep.initial_ok() {
        return Ok(GprsSearchResult {
            status: Status::Exhausted,
            witness: None,
            candidates_examined: spent,
        });
    }
    let out = Dfs::new(&prep, Mode::First, cap - spent).run(None);
    let examined = spent + out.examined;
    if out.hit_budget {
        return Err(SearchError::CapExceeded {
            cap,
            examined,
            found: 0,
        });
    }
    let witness = out.first.map(|(orders, red)| GeneralizedRotation {
        orders: prep.to_incidences(&orders),
        red,
    });
    Ok(GprsSearchResult {
        status: if witness.is_some() {
            Status::Found
        } else {
            Status::Exhausted
        },
        witness,
        candidates_examined: examined,
    })
}

/// Checks a generalised rotation directly: every link complex traced from the
/// induced rotators is a sphere union and every face has an even number of red edges.
pub fn verify_generalized(c: &PreComplex, g: &GeneralizedRotation) -> bool {
    if g.orders.len() != c.edge_count() || g.red.len() != c.edge_count() {
        return false;
    }
    let sigma = match RotationSystem::new(c, g.orders.clone()) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let parity = c
        .faces()
        .iter()
        .all(|f| f.boundary.iter().filter(|r| g.red[r.edge]).count() % 2 == 0);
    parity
        && (0..c.vertex_count()).all(|v| {
            let link = link_graph(c, v).expect("vertex exists");
            trace_with(c, &link, |ee| {
                let mut order = sigma.cyclic_order(c, ee.edge);
                if ee.end == End::Tail && !g.red[ee.edge] {
                    order.reverse();
                }
                order
            })
            .is_ok_and(|cc| cc.is_sphere_union())
        })
}
