//! Planarity testing.
//!
//! The test is the left-right (LR) planarity algorithm: a DFS orientation,
//! a constraint-merging pass over conflict pairs of return edges, and an
//! embedding pass that turns the resulting sides into a rotation system. It
//! runs in linear time. When the graph is not planar a Kuratowski subdivision
//! is extracted by deleting every edge whose removal keeps the graph
//! non-planar; what remains is edge-minimal non-planar, hence a subdivision of
//! `K5` or `K3,3`.

use std::collections::HashMap;

use crate::graph::{EdgeId, Graph};

/// A combinatorial embedding given by clockwise neighbor orders.
///
/// Faces follow darts: after `u -> v` comes `v -> w` where `w` precedes `u`
/// in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rotation: Vec<Vec<usize>>,
}

impl PlanarEmbedding {
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Self {
        PlanarEmbedding { rotation }
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    fn positions(&self) -> HashMap<(usize, usize), usize> {
        let mut pos = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                pos.insert((v, w), i);
            }
        }
        pos
    }

    /// Face boundary walks as dart sequences `(tail, head)`.
    pub fn face_darts(&self) -> Vec<Vec<(usize, usize)>> {
        let pos = self.positions();
        let mut seen: HashMap<(usize, usize), bool> = HashMap::new();
        let mut faces = Vec::new();
        for (u, rot) in self.rotation.iter().enumerate() {
            for &v in rot {
                if seen.contains_key(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    seen.insert((a, b), true);
                    face.push((a, b));
                    let rb = &self.rotation[b];
                    let i = pos[&(b, a)];
                    let next = rb[(i + rb.len() - 1) % rb.len()];
                    a = b;
                    b = next;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Face boundary walks as vertex sequences.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.face_darts()
            .into_iter()
            .map(|f| f.into_iter().map(|(a, _)| a).collect())
            .collect()
    }

    /// Checks that this is a genus-0 rotation system of `g`: every rotation is
    /// a permutation of the neighborhood and Euler's formula holds per
    /// component.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mut a: Vec<usize> = self.rotation[v].clone();
            let mut b: Vec<usize> = g.neighbors(v).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let comps = g.components().into_iter().filter(|c| c.len() > 1).count();
        let nonisolated = (0..g.n()).filter(|&v| g.degree(v) > 0).count();
        let f = self.face_darts().len();
        // n - m + f = 2c over the non-trivial components
        nonisolated + f == g.m() + 2 * comps
    }

    /// Inserts `w` into the rotation of `v` immediately before `before`, or
    /// as the only entry if `v` has no neighbors yet.
    pub(crate) fn insert_before(&mut self, v: usize, w: usize, before: Option<usize>) {
        match before {
            None => {
                debug_assert!(self.rotation[v].is_empty() || self.rotation[v].len() == 1);
                self.rotation[v].push(w);
            }
            Some(b) => {
                let i = self.rotation[v]
                    .iter()
                    .position(|&x| x == b)
                    .expect("reference neighbor present");
                self.rotation[v].insert(i, w);
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` contained in a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree 4 (`K5`) or 3 (`K3,3`) in the subdivision.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl KuratowskiWitness {
    /// Independently re-checks the subdivision structure against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut h = Graph::new(g.n());
        for &e in &self.edges {
            if e >= g.m() {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if h.add_edge(u, v).is_err() {
                return false;
            }
        }
        let (branch_deg, branches) = match self.kind {
            KuratowskiKind::K5 => (4, 5),
            KuratowskiKind::K33 => (3, 6),
        };
        let mut is_branch = vec![false; g.n()];
        for v in 0..g.n() {
            match h.degree(v) {
                0 | 2 => {}
                d if d == branch_deg => is_branch[v] = true,
                _ => return false,
            }
        }
        let bs: Vec<usize> = (0..g.n()).filter(|&v| is_branch[v]).collect();
        let mut claimed = self.branch_vertices.clone();
        claimed.sort_unstable();
        if bs.len() != branches || bs != claimed {
            return false;
        }
        // Trace every branch-to-branch path through degree-2 vertices.
        let mut used_edges = 0;
        let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
        for &b in &bs {
            for &(first, _) in h.incident(b) {
                let (mut prev, mut cur) = (b, first);
                let mut len = 1;
                while !is_branch[cur] {
                    let next = h
                        .neighbors(cur)
                        .find(|&x| x != prev)
                        .expect("degree-2 vertex");
                    prev = cur;
                    cur = next;
                    len += 1;
                    if len > h.m() {
                        return false;
                    }
                }
                if cur == b {
                    return false;
                }
                used_edges += len;
                *pairs.entry((b.min(cur), b.max(cur))).or_default() += 1;
            }
        }
        // each path was traced once from each end
        if used_edges != 2 * h.m() || pairs.values().any(|&c| c != 2) {
            return false;
        }
        match self.kind {
            KuratowskiKind::K5 => pairs.len() == 10,
            KuratowskiKind::K33 => {
                if pairs.len() != 9 {
                    return false;
                }
                // bipartition: the three branch vertices not adjacent to bs[0], plus bs[0]
                let side: Vec<bool> = bs
                    .iter()
                    .map(|&v| v == bs[0] || !pairs.contains_key(&(bs[0].min(v), bs[0].max(v))))
                    .collect();
                if side.iter().filter(|&&s| s).count() != 3 {
                    return false;
                }
                pairs.keys().all(|&(a, b)| {
                    let ia = bs.iter().position(|&x| x == a).unwrap();
                    let ib = bs.iter().position(|&x| x == b).unwrap();
                    side[ia] != side[ib]
                })
            }
        }
    }
}

/// Outcome of a planarity test, with a certificate either way.
#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(&self) -> Option<&PlanarEmbedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            Planarity::Planar(_) => None,
            Planarity::NonPlanar(w) => Some(w),
        }
    }
}

/// Tests planarity, returning an embedding or a Kuratowski subdivision.
pub fn is_planar(g: &Graph) -> Planarity {
    match planar_embedding(g) {
        Some(emb) => Planarity::Planar(emb),
        None => Planarity::NonPlanar(kuratowski_subdivision(g)),
    }
}

/// The LR test alone: an embedding if `g` is planar.
pub fn planar_embedding(g: &Graph) -> Option<PlanarEmbedding> {
    LrPlanarity::new(g).run()
}

fn kuratowski_subdivision(g: &Graph) -> KuratowskiWitness {
    let mut keep = vec![true; g.m()];
    for e in 0..g.m() {
        keep[e] = false;
        let h = g.spanning_subgraph((0..g.m()).filter(|&i| keep[i]));
        if planar_embedding(&h).is_some() {
            keep[e] = true;
        }
    }
    let edges: Vec<EdgeId> = (0..g.m()).filter(|&e| keep[e]).collect();
    let mut deg = vec![0usize; g.n()];
    for &e in &edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let branch_vertices: Vec<usize> = (0..g.n()).filter(|&v| deg[v] >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        edges,
    }
}

const UNSEEN: isize = -1;

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn single(e: EdgeId) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
    id: u64,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Left-right planarity state. Edges are indexed by graph edge id; each is
/// oriented `src -> dst` by the DFS.
struct LrPlanarity<'a> {
    g: &'a Graph,
    height: Vec<isize>,
    parent_edge: Vec<Option<EdgeId>>,
    roots: Vec<usize>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out: Vec<Vec<EdgeId>>,
    lowpt: Vec<isize>,
    lowpt2: Vec<isize>,
    nesting: Vec<isize>,
    reference: Vec<Option<EdgeId>>,
    side: Vec<isize>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<Option<u64>>,
    lowpt_edge: Vec<EdgeId>,
    next_id: u64,
}

impl<'a> LrPlanarity<'a> {
    fn new(g: &'a Graph) -> Self {
        let (n, m) = (g.n(), g.m());
        LrPlanarity {
            g,
            height: vec![UNSEEN; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            oriented: vec![false; m],
            src: vec![0; m],
            dst: vec![0; m],
            out: vec![Vec::new(); n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![None; m],
            lowpt_edge: vec![usize::MAX; m],
            next_id: 0,
        }
    }

    fn run(mut self) -> Option<PlanarEmbedding> {
        let (n, m) = (self.g.n(), self.g.m());
        if n > 2 && m > 3 * n - 6 {
            return None;
        }
        for v in 0..n {
            if self.height[v] == UNSEEN {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        self.sort_out_edges();
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.test(r) {
                return None;
            }
        }
        for e in 0..m {
            let s = self.sign(e);
            self.nesting[e] *= s;
        }
        self.sort_out_edges();
        let mut rot = Rotation::new(n);
        for v in 0..n {
            let mut prev = None;
            for &e in &self.out[v] {
                let w = self.dst[e];
                rot.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref = vec![usize::MAX; n];
        let mut right_ref = vec![usize::MAX; n];
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            self.embed(r, &mut rot, &mut left_ref, &mut right_ref);
        }
        Some(rot.into_embedding())
    }

    fn sort_out_edges(&mut self) {
        let nesting = &self.nesting;
        for list in &mut self.out {
            list.sort_by_key(|&e| nesting[e]);
        }
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let g = self.g;
        for &(w, e) in g.incident(v) {
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.src[e] = v;
            self.dst[e] = w;
            self.out[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == UNSEEN {
                self.parent_edge[w] = Some(e);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w];
            }
            self.nesting[e] = 2 * self.lowpt[e];
            if self.lowpt2[e] < self.height[v] {
                // chordal
                self.nesting[e] += 1;
            }
            if let Some(p) = parent {
                if self.lowpt[e] < self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt[p].min(self.lowpt2[e]);
                    self.lowpt[p] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt[e]);
                } else {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn fresh_id(&mut self) -> u64 {
        self.next_id += 1;
        self.next_id
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> isize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("nonempty pair")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("nonempty pair")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let outs = self.out[v].clone();
        for (i, &e) in outs.iter().enumerate() {
            let w = self.dst[e];
            self.stack_bottom[e] = self.top_id();
            if self.parent_edge[w] == Some(e) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[e] = e;
                let id = self.fresh_id();
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(e),
                    id,
                });
            }
            if self.lowpt[e] < self.height[v] {
                let p = parent.expect("only non-root vertices have return edges");
                if i == 0 {
                    self.lowpt_edge[p] = self.lowpt_edge[e];
                } else if !self.add_constraints(e, p) {
                    return false;
                }
            }
        }
        if let Some(p) = parent {
            self.remove_back_edges(p);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let id = self.fresh_id();
        let mut p = ConflictPair {
            left: Interval::default(),
            right: Interval::default(),
            id,
        };
        loop {
            let mut q = self.stack.pop().expect("return edges of ei on stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty pair");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left.high = q.left.high;
            } else {
                self.reference[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low {
                    self.reference[l] = p.left.low;
                    self.side[l] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge pending");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: EdgeId) -> isize {
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().unwrap()] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = None;
        }
        self.side[e]
    }

    fn embed(
        &mut self,
        v: usize,
        rot: &mut Rotation,
        left_ref: &mut [usize],
        right_ref: &mut [usize],
    ) {
        let outs = self.out[v].clone();
        for e in outs {
            let w = self.dst[e];
            if self.parent_edge[w] == Some(e) {
                rot.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed(w, rot, left_ref, right_ref);
            } else if self.side[e] == 1 {
                rot.add_cw(w, v, Some(right_ref[w]));
            } else {
                rot.add_ccw(w, v, Some(left_ref[w]));
                left_ref[w] = v;
            }
        }
    }
}

/// Doubly linked cyclic neighbor lists used while the LR embedding is built.
struct Rotation {
    cw: HashMap<(usize, usize), usize>,
    ccw: HashMap<(usize, usize), usize>,
    first: Vec<Option<usize>>,
}

impl Rotation {
    fn new(n: usize) -> Self {
        Rotation {
            cw: HashMap::new(),
            ccw: HashMap::new(),
            first: vec![None; n],
        }
    }

    fn add_cw(&mut self, s: usize, t: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw.insert((s, t), t);
                self.ccw.insert((s, t), t);
                self.first[s] = Some(t);
            }
            Some(r) => {
                let cw_ref = self.cw[&(s, r)];
                self.cw.insert((s, r), t);
                self.cw.insert((s, t), cw_ref);
                self.ccw.insert((s, cw_ref), t);
                self.ccw.insert((s, t), r);
            }
        }
    }

    fn add_ccw(&mut self, s: usize, t: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(s, t, None),
            Some(r) => {
                let ccw_ref = self.ccw[&(s, r)];
                self.add_cw(s, t, Some(ccw_ref));
                if self.first[s] == Some(r) {
                    self.first[s] = Some(t);
                }
            }
        }
    }

    fn add_first(&mut self, s: usize, t: usize) {
        let r = self.first[s];
        self.add_ccw(s, t, r);
    }

    fn into_embedding(self) -> PlanarEmbedding {
        let rotation = self
            .first
            .iter()
            .enumerate()
            .map(|(v, f)| {
                let mut list = Vec::new();
                if let Some(start) = *f {
                    let mut cur = start;
                    loop {
                        list.push(cur);
                        cur = self.cw[&(v, cur)];
                        if cur == start {
                            break;
                        }
                    }
                }
                list
            })
            .collect();
        PlanarEmbedding { rotation }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn k4_is_planar_with_valid_embedding() {
        let g = Graph::complete(4);
        let p = is_planar(&g);
        let emb = p.embedding().expect("planar");
        assert!(emb.is_valid_for(&g));
        assert_eq!(emb.faces().len(), 4);
    }

    #[test]
    fn k5_witness() {
        let g = Graph::complete(5);
        let p = is_planar(&g);
        let w = p.witness().expect("nonplanar");
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(w.validate(&g));
    }

    #[test]
    fn k33_witness() {
        let g = Graph::complete_bipartite(3, 3);
        let w = is_planar(&g).witness().cloned().expect("nonplanar");
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert_eq!(w.edges.len(), 9);
        assert!(w.validate(&g));
    }

    #[test]
    fn petersen_contains_k33_subdivision() {
        let g = petersen();
        let w = is_planar(&g).witness().cloned().expect("nonplanar");
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.validate(&g));
    }

    #[test]
    fn disconnected_and_trivial_graphs() {
        for g in [
            Graph::new(0),
            Graph::new(1),
            Graph::new(5),
            Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ] {
            let emb = planar_embedding(&g).expect("planar");
            assert!(emb.is_valid_for(&g));
        }
    }

    #[test]
    fn witness_validator_rejects_garbage() {
        let g = Graph::complete(5);
        let bad = KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch_vertices: vec![0, 1, 2, 3, 4],
            edges: (0..9).collect(),
        };
        assert!(!bad.validate(&g));
    }
}
