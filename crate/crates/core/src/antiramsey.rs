//! Exact anti-Ramsey values `ar(G, M_t)` and class rainbow numbers
//! `rb(T_n, M_t)`.
//!
//! `ar(G, M_t)` is bracketed before any search. Below: color a maximum
//! `M_{t-1}`-free subgraph rainbow and everything else with one extra color;
//! a rainbow `M_t` could use at most one extra-colored edge, leaving an
//! `M_{t-1}` in the free part. Above: one edge per color class of a coloring
//! without rainbow `M_t` is an `M_t`-free subgraph.
//!
//! The search assigns edges one at a time, colors numbered in order of first
//! use so each partition of the edges is met once. For every unassigned edge
//! `f` it tracks the rainbow `M_{t-1}`s among assigned edges that avoid
//! `f`'s endpoints: if any exist, `f` is closed (no fresh color allowed) and
//! must repeat a color of each of them. The bound is the number of colors
//! opened plus the number of edges still open.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::matching::matching_number;
use crate::rainbow::max_rainbow_matching;
use crate::search::{run_queue, Budget, Incumbent};
use crate::triangulation::{generate_triangulations, GENERATION_CAP};
use crate::turan::max_mtfree_subgraph;

const FREE: u8 = u8::MAX;

/// Largest edge and vertex count the search accepts (bitmask width).
pub const SEARCH_LIMIT: usize = 64;

/// Rainbow `M_{t-1}`-free subgraph in distinct colors, the rest in one
/// extra color.
fn constructive_coloring(g: &Graph, t: usize) -> Result<EdgeColoring> {
    let free = max_mtfree_subgraph(g, t - 1)?;
    let mut label = vec![free.len(); g.m()];
    for (i, &e) in free.iter().enumerate() {
        label[e] = i;
    }
    Ok(EdgeColoring::normalized(&label))
}

pub(crate) struct ArOutcome {
    /// Best coloring found with more than `floor` colors.
    pub best: Option<EdgeColoring>,
    pub exhausted: bool,
    pub nodes: u64,
}

struct ArSearch {
    m: usize,
    need: usize,
    vmask: Vec<u64>,
    color: Vec<u8>,
    assigned: Vec<usize>,
    k: usize,
    best_k: usize,
    best: Option<Vec<u8>>,
    target: usize,
    stop: bool,
    aborted: bool,
    nodes: u64,
    budget: Budget,
    layers: Vec<Vec<(u64, u64)>>,
}

impl ArSearch {
    /// Rainbow matchings of size `need` among assigned edges, as
    /// `(vertex mask, color mask)` pairs.
    fn collect(&self, out: &mut Vec<(u64, u64)>) {
        fn go(s: &ArSearch, from: usize, left: usize, vm: u64, cm: u64, out: &mut Vec<(u64, u64)>) {
            if left == 0 {
                out.push((vm, cm));
                return;
            }
            for i in from..s.assigned.len() {
                let e = s.assigned[i];
                let c = 1u64 << s.color[e];
                if s.vmask[e] & vm == 0 && c & cm == 0 {
                    go(s, i + 1, left - 1, vm | s.vmask[e], cm | c, out);
                }
            }
        }
        out.clear();
        go(self, 0, self.need, 0, 0, out);
    }

    fn dfs(&mut self, depth: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.budget.expired() {
            self.aborted = true;
        }
        if self.aborted || self.stop {
            return;
        }
        if self.assigned.len() == self.m {
            if self.k > self.best_k {
                self.best_k = self.k;
                self.best = Some(self.color.clone());
                self.stop = self.best_k >= self.target;
            }
            return;
        }
        if self.layers.len() <= depth {
            self.layers.push(Vec::new());
        }
        let mut ms = std::mem::take(&mut self.layers[depth]);
        self.collect(&mut ms);

        let all = if self.k == 64 { u64::MAX } else { (1u64 << self.k) - 1 };
        let mut open = 0;
        // (options, edge, closed, allowed)
        let mut pick: Option<(u32, usize, bool, u64)> = None;
        for f in 0..self.m {
            if self.color[f] != FREE {
                continue;
            }
            let vf = self.vmask[f];
            let mut closed = false;
            let mut allowed = all;
            for &(vm, cm) in &ms {
                if vm & vf == 0 {
                    closed = true;
                    allowed &= cm;
                    if allowed == 0 {
                        break;
                    }
                }
            }
            let options = if closed {
                allowed.count_ones()
            } else {
                open += 1;
                self.k as u32 + 1
            };
            if options == 0 {
                self.layers[depth] = ms;
                return;
            }
            if pick.is_none_or(|(o, ..)| options < o) {
                pick = Some((options, f, closed, allowed));
            }
        }
        self.layers[depth] = ms;
        if self.k + open <= self.best_k {
            return;
        }
        let (_, f, closed, allowed) = pick.expect("an unassigned edge exists");
        self.assigned.push(f);
        if !closed {
            self.color[f] = self.k as u8;
            self.k += 1;
            self.dfs(depth + 1);
            self.k -= 1;
        }
        let mut rest = allowed;
        while rest != 0 && !self.stop && !self.aborted {
            let c = rest.trailing_zeros();
            rest &= rest - 1;
            self.color[f] = c as u8;
            self.dfs(depth + 1);
        }
        self.color[f] = FREE;
        self.assigned.pop();
    }
}

/// Searches for a coloring of `g` with more than `floor` colors and no
/// rainbow `M_t`, stopping early once `target` colors are reached.
pub(crate) fn ar_search(g: &Graph, t: usize, floor: usize, target: usize, budget: Budget) -> ArOutcome {
    let mut s = ArSearch {
        m: g.m(),
        need: t - 1,
        vmask: g.edges().iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect(),
        color: vec![FREE; g.m()],
        assigned: Vec::with_capacity(g.m()),
        k: 0,
        best_k: floor,
        best: None,
        target,
        stop: floor >= target,
        aborted: false,
        nodes: 0,
        budget,
        layers: Vec::new(),
    };
    s.dfs(0);
    ArOutcome {
        best: s.best.map(|c| {
            EdgeColoring::new(c.into_iter().map(usize::from).collect()).expect("search colors are dense")
        }),
        exhausted: !s.aborted,
        nodes: s.nodes,
    }
}

fn check_instance(g: &Graph, t: usize) -> Result<()> {
    if t < 2 {
        return domain(format!("need t >= 2, got {t}"));
    }
    if g.m() > SEARCH_LIMIT || g.n() > SEARCH_LIMIT {
        return domain(format!(
            "search supports at most {SEARCH_LIMIT} vertices and edges, got n = {}, m = {}",
            g.n(),
            g.m()
        ));
    }
    if matching_number(g) < t {
        return domain("vacuous instance: the graph has no M_t");
    }
    Ok(())
}

fn verify_witness(g: &Graph, c: &EdgeColoring, t: usize) -> Result<()> {
    let (size, _) = max_rainbow_matching(g, c)?;
    if size >= t {
        return Err(Error::Invariant(format!(
            "witness coloring with {} colors has a rainbow matching of size {size}",
            c.k()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct ARCertificate {
    pub t: usize,
    /// Colors in the witness; equals `ar(G, M_t)` when `exhausted`.
    pub value: usize,
    /// Upper bound; equals `value` when `exhausted`.
    pub upper: usize,
    #[serde(skip)]
    pub witness: EdgeColoring,
    /// Colors achieved by the rainbow-free-part construction.
    pub constructive_bound: usize,
    /// Edges of a maximum `M_t`-free subgraph.
    pub representative_bound: usize,
    /// Whether every coloring with more than `value` colors was ruled out.
    pub exhausted: bool,
    pub nodes: u64,
}

/// `ar(g, M_t)` with a witness coloring.
pub fn anti_ramsey_value(g: &Graph, t: usize, budget: Budget) -> Result<ARCertificate> {
    check_instance(g, t)?;
    let lower = constructive_coloring(g, t)?;
    let upper = max_mtfree_subgraph(g, t)?.len();
    let out = ar_search(g, t, lower.k(), upper, budget);
    let witness = out.best.unwrap_or_else(|| lower.clone());
    verify_witness(g, &witness, t)?;
    Ok(ARCertificate {
        t,
        value: witness.k(),
        upper: if out.exhausted { witness.k() } else { upper },
        constructive_bound: lower.k(),
        representative_bound: upper,
        exhausted: out.exhausted,
        witness,
        nodes: out.nodes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RainbowCertificate {
    pub n: usize,
    pub t: usize,
    /// `1 + max ar(T, M_t)` over the triangulations searched; exact when
    /// `exhausted`.
    pub value: usize,
    pub upper: usize,
    /// Argmax triangulation (lowest index among ties) and its coloring.
    #[serde(skip)]
    pub host: Graph,
    #[serde(skip)]
    pub coloring: EdgeColoring,
    pub host_index: usize,
    /// Triangulations of order `n` containing `M_t`.
    pub qualifying: usize,
    pub triangulations: usize,
    pub exhausted: bool,
    pub nodes: u64,
}

/// `rb(T_n, M_t)` over all triangulations of order `n` that contain `M_t`.
pub fn rainbow_number_class(n: usize, t: usize, budget: Budget, workers: usize) -> Result<RainbowCertificate> {
    if !(3..=GENERATION_CAP).contains(&n) {
        return domain(format!("need 3 <= n <= {GENERATION_CAP}, got {n}"));
    }
    if t < 2 {
        return domain(format!("need t >= 2, got {t}"));
    }
    let tris = generate_triangulations(n)?;
    let qualifying: Vec<usize> = (0..tris.len()).filter(|&i| matching_number(&tris[i]) >= t).collect();
    if qualifying.is_empty() {
        return domain("vacuous instance: no triangulation of this order contains M_t");
    }
    // (index, constructive coloring, representative bound)
    let mut prepared = Vec::with_capacity(qualifying.len());
    for &i in &qualifying {
        let lower = constructive_coloring(&tris[i], t)?;
        let upper = max_mtfree_subgraph(&tris[i], t)?.len();
        prepared.push((i, lower, upper));
    }
    // promising hosts first so the shared incumbent rises early
    prepared.sort_by_key(|&(i, _, upper)| (std::cmp::Reverse(upper), i));

    let incumbent = Incumbent::new(0);
    let outcomes = run_queue(prepared.len(), workers, |j| {
        let (i, ref lower, upper) = prepared[j];
        let idx = i as u32;
        if lower.k() >= incumbent.threshold(idx) as usize {
            incumbent.offer(lower.k() as u32, idx);
        }
        let need = incumbent.threshold(idx) as usize;
        if upper < need {
            return (true, 0);
        }
        let floor = lower.k().max(need - 1);
        let out = ar_search(&tris[i], t, floor, upper, budget);
        if let Some(c) = &out.best {
            incumbent.offer(c.k() as u32, idx);
        }
        (out.exhausted, out.nodes)
    });
    let (best, idx) = incumbent.get();
    let best = best as usize;
    let host_index = idx as usize;
    let exhausted = outcomes.iter().all(|&(ex, _)| ex);
    let mut nodes: u64 = outcomes.iter().map(|&(_, n)| n).sum();
    let upper_ar = prepared
        .iter()
        .zip(&outcomes)
        .filter(|(_, &(ex, _))| !ex)
        .map(|(&(_, _, upper), _)| upper)
        .fold(best, usize::max);

    let host = tris[host_index].clone();
    let (_, lower, upper) = prepared
        .iter()
        .find(|&&(i, ..)| i == host_index)
        .expect("argmax is a qualifying host");
    // fixed floor and target make the witness independent of worker timing
    let coloring = if lower.k() == best {
        lower.clone()
    } else {
        let out = ar_search(&host, t, best - 1, best.min(*upper), Budget::unlimited());
        nodes += out.nodes;
        out.best.expect("the incumbent value was attained on this host")
    };
    verify_witness(&host, &coloring, t)?;
    Ok(RainbowCertificate {
        n,
        t,
        value: best + 1,
        upper: upper_ar + 1,
        host,
        coloring,
        host_index,
        qualifying: qualifying.len(),
        triangulations: tris.len(),
        exhausted,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_matching_two() {
        let c = anti_ramsey_value(&Graph::complete(4), 2, Budget::unlimited()).unwrap();
        assert!(c.exhausted);
        assert_eq!(c.value, 3);
        assert_eq!(c.witness.k(), 3);
    }

    #[test]
    fn vacuous_and_oversized_instances() {
        assert!(anti_ramsey_value(&Graph::complete(3), 2, Budget::unlimited()).is_err());
        assert!(anti_ramsey_value(&Graph::complete(4), 1, Budget::unlimited()).is_err());
        assert!(anti_ramsey_value(&Graph::complete(12), 2, Budget::unlimited()).is_err());
    }

    #[test]
    fn small_classes() {
        assert_eq!(rainbow_number_class(4, 2, Budget::unlimited(), 1).unwrap().value, 4);
        assert_eq!(rainbow_number_class(5, 2, Budget::unlimited(), 1).unwrap().value, 2);
        assert!(rainbow_number_class(5, 3, Budget::unlimited(), 1).is_err());
    }
}
