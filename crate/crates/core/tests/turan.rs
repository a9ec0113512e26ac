use rainbowtri_core::constructions::{build_turan_extremal, extremal_edge_count};
use rainbowtri_core::matching::matching_number;
use rainbowtri_core::search::Budget;
use rainbowtri_core::triangulation::generate_triangulations;
use rainbowtri_core::turan::{max_mtfree_subgraph, planar_turan_matching, TuranMethod};
use rainbowtri_core::{is_planar, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest edge subset with matching number below `t`, over all subsets.
fn brute_force(g: &Graph, t: usize) -> usize {
    (0u32..1 << g.m())
        .filter(|mask| {
            let h = g.spanning_subgraph((0..g.m()).filter(|&e| mask >> e & 1 == 1));
            matching_number(&h) < t
        })
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

fn checked(g: &Graph, t: usize) -> usize {
    let kept = max_mtfree_subgraph(g, t).unwrap();
    assert!(kept.windows(2).all(|w| w[0] < w[1]));
    assert!(matching_number(&g.spanning_subgraph(kept.iter().copied())) < t);
    kept.len()
}

#[test]
fn inner_solver_against_subset_enumeration_on_triangulations() {
    for n in 3..=6 {
        for g in generate_triangulations(n).unwrap() {
            for t in 1..=3 {
                assert_eq!(checked(&g, t), brute_force(&g, t), "n = {n}, t = {t}");
            }
        }
    }
}

#[test]
fn inner_solver_against_subset_enumeration_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut done = 0;
    while done < 150 {
        let n = rng.gen_range(3..=8);
        let mut g = Graph::new(n);
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(0.5) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        if g.m() > 14 {
            continue;
        }
        let t = rng.gen_range(1..=4);
        assert_eq!(checked(&g, t), brute_force(&g, t), "{:?} t = {t}", g.edges());
        done += 1;
    }
}

#[test]
fn large_t_keeps_everything() {
    for n in 4..=9 {
        for g in generate_triangulations(n).unwrap() {
            assert_eq!(checked(&g, n.div_ceil(2) + 1), 3 * n - 6);
        }
    }
}

#[test]
fn class_values_match_the_construction() {
    for t in 4..=5 {
        for n in 2 * t..=10 {
            let cert = planar_turan_matching(n, t, Budget::unlimited(), 1).unwrap();
            assert!(cert.exhausted);
            assert_eq!(cert.method, TuranMethod::Search);
            assert_eq!(cert.value, extremal_edge_count(n, t), "n = {n}, t = {t}");
            assert_eq!(cert.value, build_turan_extremal(n, t).unwrap().graph.m());
            assert_eq!(cert.witness.m(), cert.value);
            assert!(is_planar(&cert.witness).is_planar());
            assert!(matching_number(&cert.witness) < t);
        }
    }
}

#[test]
fn small_t_witnesses() {
    for (n, t) in [(6, 2), (8, 2), (6, 3), (9, 3)] {
        let cert = planar_turan_matching(n, t, Budget::unlimited(), 2).unwrap();
        assert!(cert.exhausted);
        assert_eq!(cert.witness.m(), cert.value);
        assert!(matching_number(&cert.witness) < t);
        assert!(is_planar(&cert.witness).is_planar());
        let again = planar_turan_matching(n, t, Budget::unlimited(), 1).unwrap();
        assert_eq!(again.witness, cert.witness);
    }
}

#[test]
fn closed_form_and_domain() {
    let c = planar_turan_matching(7, 4, Budget::unlimited(), 1).unwrap();
    assert_eq!((c.value, c.method), (15, TuranMethod::ClosedForm));
    assert!(planar_turan_matching(2, 2, Budget::unlimited(), 1).is_err());
    assert!(planar_turan_matching(13, 3, Budget::unlimited(), 1).is_err());
    assert_eq!(planar_turan_matching(5, 1, Budget::unlimited(), 1).unwrap().value, 0);
}

#[test]
fn expired_budget_brackets() {
    let c = planar_turan_matching(10, 4, Budget::seconds(0.0), 1).unwrap();
    assert!(c.value <= c.upper);
    assert!(c.value >= extremal_edge_count(10, 4));
    assert!(matching_number(&c.witness) < 4);
}
