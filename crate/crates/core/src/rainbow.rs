//! Maximum rainbow matchings in edge-colored graphs.
//!
//! A rainbow matching uses at most one edge from each color class, and edges
//! whose class is a singleton never collide in color. The exact solver
//! therefore branches only over the classes with two or more edges and
//! finishes each branch with an ordinary maximum matching on the singleton
//! edges.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::Result;
use crate::graph::{EdgeId, Graph};
use crate::matching::Blossom;

/// A matching whose edges have pairwise distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowWitness {
    /// Ascending edge ids.
    pub edges: Vec<EdgeId>,
}

impl RainbowWitness {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_valid_for(&self, g: &Graph, c: &EdgeColoring) -> bool {
        let mut used = vec![false; g.n()];
        let mut colors = vec![false; c.k()];
        for &e in &self.edges {
            if e >= g.m() || e >= c.m() {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if used[u] || used[v] || colors[c.color(e)] {
                return false;
            }
            used[u] = true;
            used[v] = true;
            colors[c.color(e)] = true;
        }
        true
    }
}

/// Maximum matching among `edges`, skipping blocked vertices.
fn matching_avoiding(
    b: &mut Blossom,
    g: &Graph,
    edges: &[EdgeId],
    blocked: &[bool],
) -> Vec<EdgeId> {
    let mut adj = vec![Vec::new(); g.n()];
    let mut seed = Vec::new();
    for &e in edges {
        let (u, v) = g.endpoints(e);
        if !blocked[u] && !blocked[v] {
            adj[u].push(v);
            adj[v].push(u);
            seed.push((u, v));
        }
    }
    b.solve_from(&adj, &seed);
    let mate = b.mate();
    edges
        .iter()
        .copied()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            !blocked[u] && mate[u] == v
        })
        .collect()
}

fn split_classes(c: &EdgeColoring) -> (Vec<EdgeId>, Vec<Vec<EdgeId>>) {
    let mut singles = Vec::new();
    let mut multi = Vec::new();
    for class in c.classes() {
        if class.len() == 1 {
            singles.push(class[0]);
        } else {
            multi.push(class);
        }
    }
    singles.sort_unstable();
    (singles, multi)
}

fn finish(mut edges: Vec<EdgeId>) -> (usize, RainbowWitness) {
    edges.sort_unstable();
    (edges.len(), RainbowWitness { edges })
}

/// Exact maximum rainbow matching by branching over every multi-edge class.
pub fn max_rainbow_matching_general(g: &Graph, c: &EdgeColoring) -> Result<(usize, RainbowWitness)> {
    c.check_host(g)?;
    let (singles, multi) = split_classes(c);
    let mut b = Blossom::new();
    let mut blocked = vec![false; g.n()];
    let single_bound = matching_avoiding(&mut b, g, &singles, &blocked).len();
    let cap = g.n() / 2;

    struct Ctx<'a> {
        g: &'a Graph,
        singles: &'a [EdgeId],
        multi: &'a [Vec<EdgeId>],
        single_bound: usize,
        cap: usize,
        b: Blossom,
        best: Vec<EdgeId>,
        chosen: Vec<EdgeId>,
    }

    fn go(cx: &mut Ctx, i: usize, blocked: &mut [bool]) {
        let optimistic = (cx.chosen.len() + cx.multi.len() - i + cx.single_bound).min(cx.cap);
        if optimistic <= cx.best.len() {
            return;
        }
        if i == cx.multi.len() {
            let mut found = matching_avoiding(&mut cx.b, cx.g, cx.singles, blocked);
            if cx.chosen.len() + found.len() > cx.best.len() {
                found.extend_from_slice(&cx.chosen);
                cx.best = found;
            }
            return;
        }
        for k in 0..cx.multi[i].len() {
            let e = cx.multi[i][k];
            let (u, v) = cx.g.endpoints(e);
            if blocked[u] || blocked[v] {
                continue;
            }
            blocked[u] = true;
            blocked[v] = true;
            cx.chosen.push(e);
            go(cx, i + 1, blocked);
            cx.chosen.pop();
            blocked[u] = false;
            blocked[v] = false;
        }
        go(cx, i + 1, blocked);
    }

    let mut cx = Ctx {
        g,
        singles: &singles,
        multi: &multi,
        single_bound,
        cap,
        b,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    go(&mut cx, 0, &mut blocked);
    Ok(finish(cx.best))
}

/// Polynomial path for colorings with exactly one class of size two or more:
/// either skip the class, or take one of its edges and match the singleton
/// edges around it.
fn max_rainbow_matching_one_shared(
    g: &Graph,
    singles: &[EdgeId],
    shared: &[EdgeId],
) -> (usize, RainbowWitness) {
    let mut b = Blossom::new();
    let mut blocked = vec![false; g.n()];
    let mut best = matching_avoiding(&mut b, g, singles, &blocked);
    for &e in shared {
        let (u, v) = g.endpoints(e);
        blocked[u] = true;
        blocked[v] = true;
        let mut found = matching_avoiding(&mut b, g, singles, &blocked);
        if found.len() + 1 > best.len() {
            found.push(e);
            best = found;
        }
        blocked[u] = false;
        blocked[v] = false;
    }
    finish(best)
}

/// Exact maximum rainbow matching with a witness.
pub fn max_rainbow_matching(g: &Graph, c: &EdgeColoring) -> Result<(usize, RainbowWitness)> {
    c.check_host(g)?;
    let (singles, multi) = split_classes(c);
    if multi.len() == 1 {
        return Ok(max_rainbow_matching_one_shared(g, &singles, &multi[0]));
    }
    max_rainbow_matching_general(g, c)
}

pub fn has_rainbow_matching(g: &Graph, c: &EdgeColoring, t: usize) -> Result<bool> {
    Ok(max_rainbow_matching(g, c)?.0 >= t)
}

/// Lowest edge id of each color class, in color order.
pub fn representative_edges(c: &EdgeColoring) -> Vec<EdgeId> {
    c.classes().into_iter().map(|class| class[0]).collect()
}

/// Spanning subgraph with one edge per color class (the lowest edge id);
/// rainbow by construction.
pub fn representative_subgraph(g: &Graph, c: &EdgeColoring) -> Result<Graph> {
    c.check_host(g)?;
    Ok(g.spanning_subgraph(representative_edges(c)))
}
