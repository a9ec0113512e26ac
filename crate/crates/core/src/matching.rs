//! Maximum cardinality matching (Edmonds' blossom algorithm) and the
//! Gallai–Edmonds decomposition.

use serde::Serialize;

use crate::graph::{EdgeId, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<EdgeId>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Matched edge ids in increasing order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_exposed(&self, v: usize) -> bool {
        self.mate[v].is_none()
    }

    fn from_mate(g: &Graph, mate: &[usize]) -> Self {
        let mut edges: Vec<EdgeId> = (0..g.n())
            .filter(|&v| mate[v] != NONE && v < mate[v])
            .map(|v| g.edge_id(v, mate[v]).expect("matched pair is an edge"))
            .collect();
        edges.sort_unstable();
        Matching {
            edges,
            mate: mate.iter().map(|&w| (w != NONE).then_some(w)).collect(),
        }
    }

    /// True if the edges exist in `g` and are pairwise disjoint.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.edges.iter().all(|&e| {
            if e >= g.m() {
                return false;
            }
            let (u, v) = g.endpoints(e);
            let ok = !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        })
    }
}

/// Reusable blossom-algorithm workspace over plain adjacency lists.
///
/// The search routine is the classic single-root BFS with blossom
/// contraction through a `base` array. One pass over exposed vertices
/// suffices: a vertex with no augmenting path never gains one later.
#[derive(Clone, Debug, Default)]
pub struct Blossom {
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: Vec<usize>,
}

impl Blossom {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self, n: usize) {
        self.mate.clear();
        self.mate.resize(n, NONE);
        self.parent.resize(n, NONE);
        self.base.resize(n, 0);
        self.used.resize(n, false);
        self.in_blossom.resize(n, false);
        self.on_path.resize(n, false);
    }

    /// Maximum matching size of the graph given by `adj`. The mate array is
    /// available through [`Blossom::mate`] afterwards.
    pub fn solve(&mut self, adj: &[Vec<usize>]) -> usize {
        let n = adj.len();
        self.reset(n);
        let mut size = 0;
        // greedy start in adjacency order
        for v in 0..n {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
                size += 1;
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(adj, root) {
                    self.augment(end);
                    size += 1;
                }
            }
        }
        size
    }

    /// Seeds the matching with the given pairs before augmenting.
    pub fn solve_from(&mut self, adj: &[Vec<usize>], seed: &[(usize, usize)]) -> usize {
        let n = adj.len();
        self.reset(n);
        let mut size = 0;
        for &(u, v) in seed {
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
                size += 1;
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(adj, root) {
                    self.augment(end);
                    size += 1;
                }
            }
        }
        size
    }

    pub fn mate(&self) -> &[usize] {
        &self.mate
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`. Returns its exposed far end.
    /// On failure `used` marks exactly the vertices reachable from `root`
    /// by an even-length alternating path.
    fn find_path(&mut self, adj: &[Vec<usize>], root: usize) -> Option<usize> {
        let n = adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).collect()).collect()
}

/// A maximum matching of `g`. The search is seeded greedily with edges in
/// increasing id order, so witnesses are reproducible.
pub fn max_matching(g: &Graph) -> Matching {
    let adj = adjacency(g);
    let mut b = Blossom::new();
    b.solve_from(&adj, g.edges());
    Matching::from_mate(g, b.mate())
}

/// Matching number `ν(g)`.
pub fn matching_number(g: &Graph) -> usize {
    Blossom::new().solve(&adjacency(g))
}

pub fn has_matching_of_size(g: &Graph, t: usize) -> bool {
    t == 0 || matching_number(g) >= t
}

/// `g - v` has a perfect matching for every vertex `v`. The empty graph is
/// not considered factor-critical.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    if n.is_multiple_of(2) {
        return false;
    }
    let mut b = Blossom::new();
    (0..n).all(|v| {
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                if u == v {
                    Vec::new()
                } else {
                    g.neighbors(u).filter(|&w| w != v).collect()
                }
            })
            .collect();
        b.solve(&adj) == (n - 1) / 2
    })
}

/// The Gallai–Edmonds decomposition of a graph.
///
/// `D` is the set of vertices missed by some maximum matching, `A = N(D) \ D`
/// is the Tutte set `S`, and `C` is everything else. The components of
/// `G - S` are the components of `G[D]` (odd, factor-critical) and of `G[C]`
/// (even, with perfect matchings).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GEDecomposition {
    pub s: Vec<usize>,
    pub odd_components: Vec<Vec<usize>>,
    pub even_components: Vec<Vec<usize>>,
    /// Maximum matching size.
    pub d: usize,
}

impl GEDecomposition {
    /// `o(G - S)`.
    pub fn q(&self) -> usize {
        self.odd_components.len()
    }

    /// `o(G - S) - |S|`.
    pub fn deficiency(&self) -> usize {
        self.q() - self.s.len()
    }

    /// Vertices of all even components.
    pub fn even_vertices(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self.even_components.iter().flatten().copied().collect();
        b.sort_unstable();
        b
    }

    /// Re-checks every structural property against `g` with independent
    /// computations. Returns a description of the first failure.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        if self.s.len() > self.d {
            return Err(format!("|S| = {} exceeds d = {}", self.s.len(), self.d));
        }
        if self.q() < self.s.len() || 2 * self.d + self.q() - self.s.len() != n {
            return Err(format!(
                "Berge-Tutte formula fails: n = {n}, q = {}, |S| = {}, d = {}",
                self.q(),
                self.s.len(),
                self.d
            ));
        }
        if matching_number(g) != self.d {
            return Err("d is not the matching number".into());
        }
        let mut removed = vec![false; n];
        for &v in &self.s {
            removed[v] = true;
        }
        let mut actual = g.components_avoiding(&removed);
        let mut claimed: Vec<Vec<usize>> = self
            .odd_components
            .iter()
            .chain(&self.even_components)
            .cloned()
            .collect();
        actual.sort();
        claimed.sort();
        if actual != claimed {
            return Err("components do not match G - S".into());
        }
        for c in &self.odd_components {
            if c.len() % 2 == 0 || !is_factor_critical(&g.induced_subgraph(c).0) {
                return Err(format!("odd component {c:?} not factor-critical"));
            }
        }
        for c in &self.even_components {
            if c.len() % 2 == 1 || 2 * matching_number(&g.induced_subgraph(c).0) != c.len() {
                return Err(format!("even component {c:?} has no perfect matching"));
            }
        }
        Ok(())
    }
}

pub fn gallai_edmonds(g: &Graph) -> GEDecomposition {
    let n = g.n();
    let adj = adjacency(g);
    let mut b = Blossom::new();
    let d = b.solve_from(&adj, g.edges());
    let mut in_d = vec![false; n];
    for root in 0..n {
        if b.mate[root] == NONE {
            let found = b.find_path(&adj, root);
            debug_assert!(found.is_none(), "matching was maximum");
            for v in 0..n {
                in_d[v] |= b.used[v];
            }
        }
    }
    let mut in_a = vec![false; n];
    for v in 0..n {
        if in_d[v] {
            for w in g.neighbors(v) {
                if !in_d[w] {
                    in_a[w] = true;
                }
            }
        }
    }
    let s: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    let mut odd_components = Vec::new();
    let mut even_components = Vec::new();
    for comp in g.components_avoiding(&in_a) {
        if in_d[comp[0]] {
            odd_components.push(comp);
        } else {
            even_components.push(comp);
        }
    }
    GEDecomposition {
        s,
        odd_components,
        even_components,
        d,
    }
}
