//! Plane triangulations: recognition, completion of planar graphs, and
//! isomorph-free generation.
//!
//! Generation grows triangulations one vertex at a time by vertex splitting,
//! starting from `K4`. Every triangulation on at least five vertices has an
//! edge lying on no separating triangle; contracting it gives a triangulation
//! one vertex smaller, so splitting reaches every class. Duplicates are
//! rejected with a canonical form computed from the (unique up to mirror
//! image) embedding of the 3-connected triangulation.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{domain, Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::planarity::{planar_embedding, PlanarEmbedding};

/// Largest order accepted by [`generate_triangulations`].
pub const GENERATION_CAP: usize = 12;

/// `n >= 3`, connected, planar, and `m = 3n - 6`.
pub fn is_triangulation(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && g.m() == 3 * n - 6 && g.is_connected() && planar_embedding(g).is_some()
}

/// The stacked triangulation in which vertex `k >= 3` sits in the face
/// `{0, 1, k - 1}`.
pub fn stacked_triangulation(n: usize) -> Result<Graph> {
    if n < 3 {
        return domain(format!("a triangulation needs n >= 3, got {n}"));
    }
    let mut g = Graph::new(n);
    g.push_edge(0, 1);
    g.push_edge(0, 2);
    g.push_edge(1, 2);
    for k in 3..n {
        g.push_edge(0, k);
        g.push_edge(1, k);
        g.push_edge(k - 1, k);
    }
    Ok(g)
}

/// A triangulation containing a planar graph, with the added edges listed.
#[derive(Clone, Debug)]
pub struct Completion {
    /// Original edges keep their ids; added edges follow.
    pub graph: Graph,
    pub added: Vec<EdgeId>,
    pub embedding: PlanarEmbedding,
}

/// Completes `g` to a plane triangulation on the same vertex set.
///
/// Components are joined first, then every face walk longer than three is
/// cut by a chord from a face corner to the next corner along the walk that
/// is neither the same vertex nor already adjacent.
pub fn triangulate_completion(g: &Graph, emb: &PlanarEmbedding) -> Result<Completion> {
    if g.n() < 3 {
        return domain(format!("completion needs n >= 3, got {}", g.n()));
    }
    if !emb.is_valid_for(g) {
        return domain("embedding is not a planar rotation system of the graph");
    }
    let mut h = g.clone();
    let mut emb = emb.clone();
    let mut added = Vec::new();

    let comps = h.components();
    let anchor = comps[0][0];
    for comp in &comps[1..] {
        let b = comp[0];
        let before_a = emb.rotation(anchor).first().copied();
        let before_b = emb.rotation(b).first().copied();
        emb.insert_before(anchor, b, before_a);
        emb.insert_before(b, anchor, before_b);
        added.push(h.push_edge(anchor, b));
    }

    'outer: loop {
        for face in emb.faces() {
            let k = face.len();
            if k <= 3 {
                continue;
            }
            for i in 0..k {
                let u = face[i];
                for off in 2..k - 1 {
                    let j = (i + off) % k;
                    let w = face[j];
                    if w == u || h.has_edge(u, w) {
                        continue;
                    }
                    // corner at position p lies between face[p + 1] and face[p - 1]
                    let before_u = face[(i + k - 1) % k];
                    let before_w = face[(j + k - 1) % k];
                    emb.insert_before(u, w, Some(before_u));
                    emb.insert_before(w, u, Some(before_w));
                    added.push(h.push_edge(u, w));
                    continue 'outer;
                }
            }
            return Err(Error::Invariant(format!(
                "face {face:?} has no admissible chord"
            )));
        }
        break;
    }
    debug_assert_eq!(h.m(), 3 * h.n() - 6);
    Ok(Completion {
        graph: h,
        added,
        embedding: emb,
    })
}

/// Embeds `g` and completes it. Fails if `g` is not planar.
pub fn triangulate(g: &Graph) -> Result<Completion> {
    match planar_embedding(g) {
        Some(emb) => triangulate_completion(g, &emb),
        None => domain("graph is not planar"),
    }
}

/// Vertex labeling from a breadth-first sweep of the map starting at dart
/// `u -> v`, visiting each rotation clockwise (`forward`) or counterclockwise
/// from the dart back to the vertex's discoverer.
fn map_bfs_labeling(emb: &PlanarEmbedding, u: usize, v: usize, forward: bool) -> Vec<usize> {
    let n = emb.n();
    let mut label = vec![usize::MAX; n];
    let mut from = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[u] = 0;
    from[u] = v;
    order.push(u);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        let rot = emb.rotation(x);
        let d = rot.len();
        let start = rot.iter().position(|&y| y == from[x]).expect("discoverer is a neighbor");
        for k in 0..d {
            let y = if forward { rot[(start + k) % d] } else { rot[(start + d - k) % d] };
            if label[y] == usize::MAX {
                label[y] = order.len();
                from[y] = x;
                order.push(y);
            }
        }
    }
    label
}

/// Canonical graph6 code of a 3-connected plane graph: the lexicographically
/// smallest adjacency string over the map-BFS labelings rooted at darts whose
/// `(deg tail, deg head)` pair is maximal.
pub fn canonical_code(g: &Graph, emb: &PlanarEmbedding) -> String {
    let deg = g.degrees();
    let best_pair = g
        .edges()
        .iter()
        .flat_map(|&(a, b)| [(deg[a], deg[b]), (deg[b], deg[a])])
        .max()
        .unwrap_or((0, 0));
    let mut best: Option<String> = None;
    for &(a, b) in g.edges() {
        for (u, v) in [(a, b), (b, a)] {
            if (deg[u], deg[v]) != best_pair {
                continue;
            }
            for forward in [true, false] {
                let label = map_bfs_labeling(emb, u, v, forward);
                let code = emit_graph6(&g.relabel(&label));
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_else(|| emit_graph6(g))
}

/// Canonically relabelled copy of a triangulation.
pub fn canonical_triangulation(g: &Graph) -> Result<Graph> {
    if !is_triangulation(g) {
        return domain("not a triangulation");
    }
    if g.n() == 3 {
        return Ok(Graph::complete(3));
    }
    let emb = planar_embedding(g).expect("triangulations are planar");
    Ok(parse_graph6(&canonical_code(g, &emb)).expect("emitted code parses"))
}

/// All splits of vertex `v` of a triangulation with embedding `emb`.
fn splits<'a>(g: &'a Graph, emb: &PlanarEmbedding, v: usize) -> impl Iterator<Item = Graph> + 'a {
    let rot = emb.rotation(v).to_vec();
    let d = rot.len();
    (0..d).flat_map(move |i| {
        let rot = rot.clone();
        (1..d).map(move |len| {
            let x = g.n();
            let mut moved = vec![false; g.n()];
            for k in 1..len {
                moved[rot[(i + k) % d]] = true;
            }
            let mut h = Graph::new(g.n() + 1);
            for &(a, b) in g.edges() {
                if (a == v && moved[b]) || (b == v && moved[a]) {
                    continue;
                }
                h.push_edge(a, b);
            }
            for k in 0..=len {
                h.push_edge(rot[(i + k) % d], x);
            }
            h.push_edge(v, x);
            h
        })
    })
}

fn next_level(level: &[Graph]) -> Vec<Graph> {
    let mut found: BTreeMap<String, ()> = BTreeMap::new();
    for g in level {
        let emb = planar_embedding(g).expect("triangulations are planar");
        for v in 0..g.n() {
            for h in splits(g, &emb, v) {
                let emb_h = planar_embedding(&h).expect("splitting preserves planarity");
                found.entry(canonical_code(&h, &emb_h)).or_insert(());
            }
        }
    }
    found
        .into_keys()
        .map(|code| parse_graph6(&code).expect("emitted code parses"))
        .collect()
}

fn levels() -> &'static Mutex<Vec<Vec<Graph>>> {
    static LEVELS: OnceLock<Mutex<Vec<Vec<Graph>>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        let k4 = parse_graph6("C~").unwrap();
        // index = order
        Mutex::new(vec![vec![], vec![], vec![], vec![Graph::complete(3)], vec![k4]])
    })
}

/// One canonically labelled representative of every isomorphism class of
/// plane triangulations of order `n`, sorted by graph6 code.
pub fn generate_triangulations(n: usize) -> Result<Vec<Graph>> {
    if !(3..=GENERATION_CAP).contains(&n) {
        return domain(format!(
            "triangulation order must lie in 3..={GENERATION_CAP}, got {n}"
        ));
    }
    let mut levels = levels().lock().unwrap_or_else(|e| e.into_inner());
    while levels.len() <= n {
        let next = next_level(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels[n].clone())
}
