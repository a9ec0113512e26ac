use std::collections::HashMap;

use crate::error::{domain, Result};

/// Index of an edge in [`Graph::edges`]. Stable for the lifetime of the graph.
pub type EdgeId = usize;

/// A simple undirected graph on vertices `0..n`.
///
/// Edge ids are assigned in insertion order and never change. Loops and
/// parallel edges are rejected on insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeId)>>,
    index: HashMap<(usize, usize), EdgeId>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            for u in 0..v {
                g.push_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            let w = (v + 1) % n;
            if v != w && !g.has_edge(v, w) {
                g.push_edge(v, w);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.push_edge(u, v);
            }
        }
        g
    }

    /// `K_{1,k}` with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        Graph::complete_bipartite(1, k)
    }

    /// Adds the edge `uv` and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        if u >= self.n || v >= self.n {
            return domain(format!("edge ({u}, {v}) out of range for n = {}", self.n));
        }
        if u == v {
            return domain(format!("loop at vertex {u}"));
        }
        if self.has_edge(u, v) {
            return domain(format!("parallel edge ({u}, {v})"));
        }
        Ok(self.push_edge(u, v))
    }

    pub(crate) fn push_edge(&mut self, u: usize, v: usize) -> EdgeId {
        debug_assert!(u != v && !self.has_edge(u, v));
        let id = self.edges.len();
        let k = key(u, v);
        self.edges.push(k);
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.index.insert(k, id);
        id
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of every edge, indexed by edge id, smaller endpoint first.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    #[inline]
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.index.contains_key(&key(u, v))
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.index.get(&key(u, v)).copied()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Spanning subgraph keeping the given edges; new ids follow the iteration order.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Graph
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut g = Graph::new(self.n);
        for e in edges {
            let (u, v) = self.edges[e];
            if !g.has_edge(u, v) {
                g.push_edge(u, v);
            }
        }
        g
    }

    /// `G[X]` relabelled to `0..|X|` in the order given; returns the map back
    /// to original vertex ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for &(u, v) in &self.edges {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                g.push_edge(pos[u], pos[v]);
            }
        }
        (g, vertices.to_vec())
    }

    /// Graph with `v` mapped to `perm[v]`. Edge ids follow the original order.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for &(u, v) in &self.edges {
            g.push_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n])
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// `e_G(X)`: number of edges with both ends in `set`.
    pub fn count_within(&self, set: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count()
    }
}

/// A pair of disjoint vertex sets `X`, `Y` of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSetPair {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl VertexSetPair {
    pub fn new(g: &Graph, x: &[usize], y: &[usize]) -> Result<Self> {
        let mut mark = vec![0u8; g.n()];
        for (side, set) in [(1u8, x), (2u8, y)] {
            for &v in set {
                if v >= g.n() {
                    return domain(format!("vertex {v} out of range"));
                }
                if mark[v] != 0 {
                    return domain(format!("vertex {v} repeated or shared by X and Y"));
                }
                mark[v] = side;
            }
        }
        Ok(VertexSetPair {
            x: x.to_vec(),
            y: y.to_vec(),
        })
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// The planar bipartite bound `2(|X| + |Y|) - 4`, defined when `|X ∪ Y| >= 3`.
    pub fn planar_bound(&self) -> Option<usize> {
        let s = self.x.len() + self.y.len();
        (s >= 3).then(|| 2 * s - 4)
    }
}

/// `e_G(X, Y)`: edges with one end in `X` and the other in `Y`.
pub fn count_pair_edges(g: &Graph, pair: &VertexSetPair) -> usize {
    let mut side = vec![0u8; g.n()];
    for &v in &pair.x {
        side[v] = 1;
    }
    for &v in &pair.y {
        side[v] = 2;
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| side[u] != 0 && side[v] != 0 && side[u] != side[v])
        .count()
}
