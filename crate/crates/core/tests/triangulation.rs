use std::collections::HashSet;

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rainbowtri_core::triangulation::{
    canonical_triangulation, generate_triangulations, is_triangulation, stacked_triangulation,
    triangulate,
};
use rainbowtri_core::{emit_graph6, is_planar, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for &(u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

/// Isomorphism classes reachable from the stacked triangulation by diagonal
/// flips, deduplicated with a generic isomorphism test. The flip graph of
/// triangulations of a given order is connected.
fn flip_closure(n: usize) -> Vec<Graph> {
    let start = stacked_triangulation(n).unwrap();
    let mut classes = vec![(start.clone(), to_petgraph(&start))];
    let mut frontier = vec![start];
    while let Some(g) = frontier.pop() {
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let common: Vec<usize> = g
                .neighbors(u)
                .filter(|&w| g.has_edge(v, w))
                .collect();
            for (i, &x) in common.iter().enumerate() {
                for &y in &common[i + 1..] {
                    if g.has_edge(x, y) {
                        continue;
                    }
                    let edges = g
                        .edges()
                        .iter()
                        .enumerate()
                        .filter(|&(f, _)| f != e)
                        .map(|(_, &p)| p)
                        .chain([(x.min(y), x.max(y))]);
                    let h = Graph::from_edges(n, edges).unwrap();
                    if !is_planar(&h).is_planar() {
                        continue;
                    }
                    let ph = to_petgraph(&h);
                    if classes.iter().any(|(_, pc)| is_isomorphic(pc, &ph)) {
                        continue;
                    }
                    classes.push((h.clone(), ph));
                    frontier.push(h);
                }
            }
        }
    }
    classes.into_iter().map(|(g, _)| g).collect()
}

#[test]
fn class_counts() {
    // plane triangulations up to isomorphism, orders 4..=11
    let expected = [1usize, 1, 2, 5, 14, 50, 233, 1249];
    for (k, &count) in expected.iter().enumerate() {
        let n = k + 4;
        let all = generate_triangulations(n).unwrap();
        assert_eq!(all.len(), count, "n = {n}");
        for g in &all {
            assert_eq!(g.n(), n);
            assert!(is_triangulation(g));
        }
    }
}

#[test]
fn generation_agrees_with_flip_closure() {
    for n in 4..=9 {
        let generated = generate_triangulations(n).unwrap();
        let flipped = flip_closure(n);
        assert_eq!(generated.len(), flipped.len(), "n = {n}");
        let pg: Vec<_> = generated.iter().map(to_petgraph).collect();
        for g in &flipped {
            let p = to_petgraph(g);
            assert!(pg.iter().any(|q| is_isomorphic(q, &p)), "n = {n}");
        }
        for (i, a) in pg.iter().enumerate() {
            for b in &pg[i + 1..] {
                assert!(!is_isomorphic(a, b), "duplicate class at n = {n}");
            }
        }
    }
}

#[test]
fn generated_graphs_are_canonical_and_sorted() {
    for n in 4..=9 {
        let all = generate_triangulations(n).unwrap();
        let codes: Vec<String> = all.iter().map(emit_graph6).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
        for g in &all {
            assert_eq!(&canonical_triangulation(g).unwrap(), g);
        }
        let distinct: HashSet<_> = codes.iter().collect();
        assert_eq!(distinct.len(), codes.len());
    }
}

#[test]
fn canonical_form_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in generate_triangulations(9).unwrap() {
        let mut perm: Vec<usize> = (0..9).collect();
        for i in (1..9).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        assert_eq!(canonical_triangulation(&g.relabel(&perm)).unwrap(), g);
    }
}

#[test]
fn completion_of_random_planar_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    while done < 300 {
        let n = rng.gen_range(3..=30);
        let p: f64 = rng.gen_range(0.02..0.3);
        let mut g = Graph::new(n);
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        if !is_planar(&g).is_planar() {
            continue;
        }
        let c = triangulate(&g).unwrap();
        assert!(is_triangulation(&c.graph));
        assert!(c.embedding.is_valid_for(&c.graph));
        assert_eq!(c.added.len() + g.m(), 3 * n - 6);
        for (e, &uv) in g.edges().iter().enumerate() {
            assert_eq!(c.graph.endpoints(e), uv);
        }
        done += 1;
    }
}
