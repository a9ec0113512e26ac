//! Exact planar Turán numbers of matchings at small order.
//!
//! Every planar graph on `n >= 3` vertices is a spanning subgraph of a plane
//! triangulation on the same vertices, so `ex_P(n, M_t)` is the largest
//! `M_t`-free edge subset over all triangulations of order `n`. The inner
//! problem is solved by branch and bound: find an `M_t`, and branch on which
//! of its edges to delete. In branch `i` the edges tried in branches
//! `0..i` are protected from deletion, so the branches partition the
//! solution space and no subproblem is visited twice.

use serde::Serialize;

use crate::constructions::build_turan_extremal;
use crate::error::{domain, Result};
use crate::graph::{EdgeId, Graph};
use crate::matching::Blossom;
use crate::search::{run_queue, Budget, Incumbent};
use crate::triangulation::{generate_triangulations, stacked_triangulation, GENERATION_CAP};

/// Maximum matchings of edge subsets of a fixed graph.
pub(crate) struct SubsetMatcher<'a> {
    g: &'a Graph,
    blossom: Blossom,
    adj: Vec<Vec<usize>>,
    seed: Vec<(usize, usize)>,
}

impl<'a> SubsetMatcher<'a> {
    pub(crate) fn new(g: &'a Graph) -> Self {
        SubsetMatcher {
            g,
            blossom: Blossom::new(),
            adj: vec![Vec::new(); g.n()],
            seed: Vec::new(),
        }
    }

    /// Edge ids of a maximum matching among edges with `active[e]`.
    pub(crate) fn matching(&mut self, active: &[bool]) -> Vec<EdgeId> {
        self.adj.iter_mut().for_each(Vec::clear);
        self.seed.clear();
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if active[e] {
                self.adj[u].push(v);
                self.adj[v].push(u);
                self.seed.push((u, v));
            }
        }
        self.blossom.solve_from(&self.adj, &self.seed);
        let mate = self.blossom.mate();
        (0..self.g.m())
            .filter(|&e| {
                let (u, v) = self.g.endpoints(e);
                active[e] && mate[u] == v
            })
            .collect()
    }
}

/// Outcome of one inner search.
#[derive(Clone, Debug)]
pub(crate) struct InnerOutcome {
    /// Best kept-edge set found above the floor, ascending ids.
    pub kept: Option<Vec<EdgeId>>,
    pub exhausted: bool,
    pub nodes: u64,
    /// Upper bound on the kept-edge count, valid even when not exhausted.
    pub upper: usize,
}

struct Inner<'a> {
    g: &'a Graph,
    t: usize,
    active: Vec<bool>,
    protected: Vec<bool>,
    matcher: SubsetMatcher<'a>,
    /// Solutions must delete fewer than this many edges.
    limit: usize,
    best: Option<Vec<bool>>,
    nodes: u64,
    budget: Budget,
    aborted: bool,
    scratch: Vec<bool>,
}

impl Inner<'_> {
    /// Picks `t` edges of a matching, protected ones first, then unprotected
    /// ones by decreasing degree sum. Returns the unprotected picks.
    fn unprotected_part(&self, active: &[bool], matching: &[EdgeId]) -> Vec<EdgeId> {
        let deg = |v: usize| self.g.incident(v).iter().filter(|&&(_, e)| active[e]).count();
        let mut order: Vec<(bool, usize, EdgeId)> = matching
            .iter()
            .map(|&e| {
                let (u, v) = self.g.endpoints(e);
                (!self.protected[e], usize::MAX - (deg(u) + deg(v)), e)
            })
            .collect();
        order.sort_unstable();
        order
            .into_iter()
            .take(self.t)
            .filter(|&(unprot, _, _)| unprot)
            .map(|(_, _, e)| e)
            .collect()
    }

    /// Number of `M_t`s found greedily with pairwise disjoint unprotected
    /// parts; each needs its own deletion. `None` if some `M_t` is entirely
    /// protected.
    fn packing_bound(&mut self) -> Option<usize> {
        let mut scratch = std::mem::take(&mut self.scratch);
        scratch.clear();
        scratch.extend_from_slice(&self.active);
        let mut count = 0;
        let result = loop {
            let m = self.matcher.matching(&scratch);
            if m.len() < self.t {
                break Some(count);
            }
            let part = self.unprotected_part(&scratch, &m);
            if part.is_empty() {
                break None;
            }
            for e in part {
                scratch[e] = false;
            }
            count += 1;
        };
        self.scratch = scratch;
        result
    }

    fn dfs(&mut self, depth: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) && self.budget.expired() {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let m = self.matcher.matching(&self.active);
        if m.len() < self.t {
            self.limit = depth;
            self.best = Some(self.active.clone());
            return;
        }
        if depth + m.len() + 1 - self.t >= self.limit {
            return;
        }
        match self.packing_bound() {
            None => return,
            Some(p) if depth + p >= self.limit => return,
            _ => {}
        }
        let branch = self.unprotected_part(&self.active, &m);
        for &e in &branch {
            self.active[e] = false;
            self.dfs(depth + 1);
            self.active[e] = true;
            self.protected[e] = true;
            if depth + 1 >= self.limit {
                break;
            }
        }
        for &e in &branch {
            self.protected[e] = false;
        }
    }
}

/// Greedy feasible solution: delete the highest degree-sum edge of some
/// `M_t` until none is left.
fn greedy_mtfree(g: &Graph, t: usize) -> Vec<bool> {
    let mut active = vec![true; g.m()];
    let mut matcher = SubsetMatcher::new(g);
    loop {
        let m = matcher.matching(&active);
        if m.len() < t {
            return active;
        }
        let deg = |v: usize| g.incident(v).iter().filter(|&&(_, e)| active[e]).count();
        let &e = m
            .iter()
            .max_by_key(|&&e| {
                let (u, v) = g.endpoints(e);
                (deg(u) + deg(v), std::cmp::Reverse(e))
            })
            .expect("t >= 1 so the matching is nonempty");
        active[e] = false;
    }
}

fn kept_ids(active: &[bool]) -> Vec<EdgeId> {
    (0..active.len()).filter(|&e| active[e]).collect()
}

/// Searches for an `M_t`-free edge subset of `g` with more than `floor`
/// edges, returning the largest one found.
pub(crate) fn mtfree_search(g: &Graph, t: usize, floor: Option<usize>, budget: Budget) -> InnerOutcome {
    let m = g.m();
    let mut matcher = SubsetMatcher::new(g);
    let nu = matcher.matching(&vec![true; m]).len();
    let trivial_upper = m - (nu + 1).saturating_sub(t);
    if floor.is_some_and(|f| f >= trivial_upper) {
        return InnerOutcome {
            kept: None,
            exhausted: true,
            nodes: 0,
            upper: trivial_upper,
        };
    }
    let greedy = greedy_mtfree(g, t);
    let greedy_kept = greedy.iter().filter(|&&a| a).count();
    let (limit, best) = match floor {
        Some(f) if greedy_kept <= f => (m - f, None),
        _ => (m - greedy_kept, Some(greedy)),
    };
    let mut inner = Inner {
        g,
        t,
        active: vec![true; m],
        protected: vec![false; m],
        matcher,
        limit,
        best,
        nodes: 0,
        budget,
        aborted: false,
        scratch: Vec::new(),
    };
    if inner.limit > 0 {
        inner.dfs(0);
    }
    let kept = inner.best.as_deref().map(kept_ids);
    let exhausted = !inner.aborted;
    let upper = if exhausted {
        kept.as_ref().map_or(floor.unwrap_or(0), Vec::len)
    } else {
        trivial_upper
    };
    InnerOutcome {
        kept,
        exhausted,
        nodes: inner.nodes,
        upper,
    }
}

/// A maximum-cardinality edge subset of `g` with matching number below `t`,
/// as ascending edge ids.
pub fn max_mtfree_subgraph(g: &Graph, t: usize) -> Result<Vec<EdgeId>> {
    if t == 0 {
        return domain("every graph contains M_0");
    }
    let out = mtfree_search(g, t, None, Budget::unlimited());
    Ok(out.kept.expect("unlimited search keeps its greedy start"))
}

#[derive(Clone, Debug, Serialize)]
pub struct TuranCertificate {
    pub n: usize,
    pub t: usize,
    /// Best value found; exact when `exhausted`.
    pub value: usize,
    /// Upper bound; equals `value` when `exhausted`.
    pub upper: usize,
    #[serde(skip)]
    pub witness: Graph,
    pub exhausted: bool,
    pub method: TuranMethod,
    pub triangulations: usize,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TuranMethod {
    /// `n <= 2t - 1`: every triangulation is already `M_t`-free.
    ClosedForm,
    Search,
}

/// `ex_P(n, M_t)` by exhaustive search over triangulations of order `n`.
pub fn planar_turan_matching(n: usize, t: usize, budget: Budget, workers: usize) -> Result<TuranCertificate> {
    if n < 3 {
        return domain(format!("need n >= 3, got {n}"));
    }
    if t == 0 {
        return domain("need t >= 1");
    }
    if n < 2 * t {
        let witness = stacked_triangulation(n)?;
        return Ok(TuranCertificate {
            n,
            t,
            value: 3 * n - 6,
            upper: 3 * n - 6,
            witness,
            exhausted: true,
            method: TuranMethod::ClosedForm,
            triangulations: 0,
            nodes: 0,
        });
    }
    if n > GENERATION_CAP {
        return domain(format!("search needs n <= {GENERATION_CAP}, got {n}"));
    }
    let seed = if t >= 4 {
        build_turan_extremal(n, t)?.graph
    } else {
        Graph::new(n)
    };
    let tris = generate_triangulations(n)?;
    let incumbent = Incumbent::new(seed.m() as u32);
    let outcomes = run_queue(tris.len(), workers, |i| {
        let need = incumbent.threshold(i as u32) as usize;
        let out = mtfree_search(&tris[i], t, need.checked_sub(1), budget);
        if let Some(kept) = &out.kept {
            incumbent.offer(kept.len() as u32, i as u32);
        }
        out
    });
    let (value, idx) = incumbent.get();
    let value = value as usize;
    let exhausted = outcomes.iter().all(|o| o.exhausted);
    let upper = outcomes
        .iter()
        .filter(|o| !o.exhausted)
        .map(|o| o.upper)
        .fold(value, usize::max);
    let mut nodes: u64 = outcomes.iter().map(|o| o.nodes).sum();
    let witness = if idx == Incumbent::SEED_INDEX {
        seed
    } else {
        // recompute with a fixed floor so the witness does not depend on
        // the order in which workers finished
        let g = &tris[idx as usize];
        let out = mtfree_search(g, t, value.checked_sub(1), Budget::unlimited());
        nodes += out.nodes;
        g.spanning_subgraph(out.kept.expect("value was attained"))
    };
    Ok(TuranCertificate {
        n,
        t,
        value,
        upper,
        witness,
        exhausted,
        method: TuranMethod::Search,
        triangulations: tris.len(),
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::matching_number;

    #[test]
    fn k4() {
        let g = Graph::complete(4);
        assert_eq!(max_mtfree_subgraph(&g, 2).unwrap().len(), 3);
        assert_eq!(max_mtfree_subgraph(&g, 3).unwrap().len(), 6);
        assert_eq!(max_mtfree_subgraph(&g, 1).unwrap().len(), 0);
        assert!(max_mtfree_subgraph(&g, 0).is_err());
    }

    #[test]
    fn kept_subgraph_is_free() {
        let g = stacked_triangulation(9).unwrap();
        for t in 1..6 {
            let kept = max_mtfree_subgraph(&g, t).unwrap();
            assert!(matching_number(&g.spanning_subgraph(kept)) < t);
        }
    }

    #[test]
    fn closed_form_branch() {
        let c = planar_turan_matching(7, 4, Budget::unlimited(), 1).unwrap();
        assert_eq!(c.value, 15);
        assert_eq!(c.method, TuranMethod::ClosedForm);
        assert_eq!(c.witness.m(), 15);
    }

    #[test]
    fn small_search() {
        let c = planar_turan_matching(8, 4, Budget::unlimited(), 1).unwrap();
        assert!(c.exhausted);
        assert_eq!(c.value, 15);
        assert_eq!(c.witness.m(), 15);
        assert!(matching_number(&c.witness) < 4);
    }
}
