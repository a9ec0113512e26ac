use rainbowtri_core::{is_planar, Graph, Planarity};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            bit += 1;
        }
    }
    g
}

fn certified(g: &Graph) -> bool {
    match is_planar(g) {
        Planarity::Planar(emb) => {
            assert!(emb.is_valid_for(g), "bad embedding for {:?}", g.edges());
            true
        }
        Planarity::NonPlanar(w) => {
            assert!(w.validate(g), "bad witness for {:?}", g.edges());
            false
        }
    }
}

#[test]
fn every_labeled_graph_up_to_six_vertices() {
    // labeled planar graph counts for n = 1..=6
    let expected = [1u64, 2, 8, 64, 1023, 32071];
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        let planar = (0..1u64 << pairs)
            .filter(|&mask| certified(&graph_from_mask(n, mask)))
            .count() as u64;
        assert_eq!(planar, expected[n - 1], "n = {n}");
    }
}

#[test]
fn random_graphs_have_valid_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let n = rng.gen_range(5..=14);
        let p: f64 = rng.gen_range(0.1..0.7);
        let mut g = Graph::new(n);
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        certified(&g);
    }
}

#[test]
fn random_maximal_planar_graphs_by_greedy_insertion() {
    // Inserting edges in random order while the graph stays planar ends at
    // 3n - 6 edges for connected maximal planar graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(4..=25);
        let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for i in (1..pairs.len()).rev() {
            pairs.swap(i, rng.gen_range(0..=i));
        }
        let mut g = Graph::new(n);
        for (u, v) in pairs {
            let mut h = g.clone();
            h.add_edge(u, v).unwrap();
            if certified(&h) {
                g = h;
            }
        }
        assert_eq!(g.m(), 3 * n - 6);
    }
}
