use proptest::prelude::*;
use rainbowtri_core::matching::{gallai_edmonds, has_matching_of_size, matching_number, max_matching};
use rainbowtri_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exhaustive maximum matching: include or skip each edge in turn.
fn brute_force_nu(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], i: usize, used: u32) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = go(edges, i + 1, used);
        let (u, v) = edges[i];
        if used & (1 << u | 1 << v) == 0 {
            skip.max(1 + go(edges, i + 1, used | 1 << u | 1 << v))
        } else {
            skip
        }
    }
    go(g.edges(), 0, 0)
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.05..0.8);
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn odd_components_after_removing(g: &Graph, s: &[usize]) -> usize {
    let mut removed = vec![false; g.n()];
    for &v in s {
        removed[v] = true;
    }
    g.components_avoiding(&removed)
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

#[test]
fn blossom_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..400 {
        let g = random_graph(&mut rng, 9);
        let m = max_matching(&g);
        assert!(m.is_valid_for(&g));
        assert_eq!(m.size(), brute_force_nu(&g), "{:?}", g.edges());
    }
}

#[test]
fn gallai_edmonds_properties_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 8);
        let ge = gallai_edmonds(&g);
        ge.check(&g).unwrap();
        assert_eq!(ge.d, brute_force_nu(&g));
        // D (the odd-component vertices) is exactly the set of vertices
        // missed by some maximum matching.
        for v in 0..g.n() {
            let without: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
            let (h, _) = g.induced_subgraph(&without);
            let missed = brute_force_nu(&h) == ge.d;
            let in_d = ge.odd_components.iter().any(|c| c.contains(&v));
            assert_eq!(missed, in_d, "vertex {v} of {:?}", g.edges());
        }
        // S minimizes the deficiency among random other subsets.
        let deficiency = ge.deficiency();
        for _ in 0..100 {
            let s: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.3)).collect();
            let q = odd_components_after_removing(&g, &s);
            assert!(q as isize - s.len() as isize <= deficiency as isize);
        }
    }
}

#[test]
fn monotone_under_edge_insertion() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let mut g = random_graph(&mut rng, 12);
        let mut nu = matching_number(&g);
        for _ in 0..10 {
            let n = g.n();
            if n < 2 {
                break;
            }
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
                let next = matching_number(&g);
                assert!(next >= nu);
                nu = next;
            }
        }
    }
}

proptest! {
    #[test]
    fn has_matching_is_antitone(mask in 0u32..(1 << 21), t in 0usize..6) {
        let mut g = Graph::new(7);
        let mut bit = 0;
        for j in 1..7 {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
                bit += 1;
            }
        }
        if has_matching_of_size(&g, t + 1) {
            prop_assert!(has_matching_of_size(&g, t));
        }
    }
}
