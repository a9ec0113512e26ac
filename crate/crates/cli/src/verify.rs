//! Verification suites: each runs one block of checks against independent
//! oracles or the known closed forms and reports pass or fail per check.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use rainbowtri_core::antiramsey::rainbow_number_class;
use rainbowtri_core::constructions::{build_rb_lower_coloring, build_turan_extremal, extremal_edge_count};
use rainbowtri_core::matching::{gallai_edmonds, has_matching_of_size, max_matching};
use rainbowtri_core::rainbow::max_rainbow_matching;
use rainbowtri_core::search::Budget;
use rainbowtri_core::triangulation::{generate_triangulations, is_triangulation, triangulate};
use rainbowtri_core::turan::planar_turan_matching;
use rainbowtri_core::{
    count_pair_edges, emit_graph6, is_planar, parse_graph6, Graph, Planarity, VertexSetPair,
};

use crate::config::RunConfig;
use crate::error::CliResult;
use crate::report::{append_report, SearchReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CoreInvariants,
    MatchingOracle,
    Constructions,
    SmallRb,
    SmallTuran,
    LowerBoundColorings,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CoreInvariants,
        Suite::MatchingOracle,
        Suite::Constructions,
        Suite::SmallRb,
        Suite::SmallTuran,
        Suite::LowerBoundColorings,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CoreInvariants => "core-invariants",
            Suite::MatchingOracle => "matching-oracle",
            Suite::Constructions => "constructions",
            Suite::SmallRb => "small-rb",
            Suite::SmallTuran => "small-turan",
            Suite::LowerBoundColorings => "lower-bound-colorings",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// A check comparing an exact result with its expected value.
    fn exact(name: impl Into<String>, got: usize, expected: usize, exhausted: bool) -> Self {
        let detail = if exhausted {
            format!("got {got}, expected {expected}")
        } else {
            format!("bracketed at {got}, expected {expected}")
        };
        Check::new(name, exhausted && got == expected, detail)
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).expect("fresh pair");
            }
        }
    }
    g
}

/// Matching number by trying every edge subset.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], i: usize, used: u64) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = go(edges, i + 1, used);
        let (u, v) = edges[i];
        let mask = 1u64 << u | 1u64 << v;
        if used & mask == 0 {
            skip.max(1 + go(edges, i + 1, used | mask))
        } else {
            skip
        }
    }
    go(g.edges(), 0, 0)
}

fn core_invariants(config: &RunConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();

    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=80);
        let p = rng.gen_range(0.0..0.5);
        let g = random_graph(&mut rng, n, p);
        let line = emit_graph6(&g);
        if parse_graph6(&line).ok().as_ref() != Some(&g) || emit_graph6(&parse_graph6(&line).unwrap()) != line {
            bad += 1;
        }
    }
    checks.push(Check::new("graph6 round trip", bad == 0, format!("{bad} failures in 200 graphs")));

    let mut bad = 0;
    for _ in 0..300 {
        let n = rng.gen_range(5..=14);
        let p = rng.gen_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let ok = match is_planar(&g) {
            Planarity::Planar(emb) => emb.is_valid_for(&g) && g.m() <= 3 * n - 6,
            Planarity::NonPlanar(w) => w.validate(&g),
        };
        bad += usize::from(!ok);
    }
    checks.push(Check::new("planarity certificates", bad == 0, format!("{bad} invalid in 300 graphs")));

    for (n, expected) in (4..=9).zip([1usize, 1, 2, 5, 14, 50]) {
        let check = match generate_triangulations(n) {
            Ok(tris) => {
                let valid = tris.iter().all(is_triangulation);
                let mut codes: Vec<String> = tris.iter().map(emit_graph6).collect();
                codes.sort();
                codes.dedup();
                let distinct = codes.len() == tris.len();
                Check::new(
                    format!("triangulations of order {n}"),
                    valid && distinct && tris.len() == expected,
                    format!("{} classes (expected {expected}), valid {valid}, distinct {distinct}", tris.len()),
                )
            }
            Err(e) => Check::new(format!("triangulations of order {n}"), false, e.to_string()),
        };
        checks.push(check);
    }

    let mut bad = 0;
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(3..=25);
        let p = rng.gen_range(0.02..0.3);
        let g = random_graph(&mut rng, n, p);
        if !is_planar(&g).is_planar() {
            continue;
        }
        done += 1;
        let ok = triangulate(&g).is_ok_and(|c| {
            is_triangulation(&c.graph) && g.edges().iter().all(|&(u, v)| c.graph.has_edge(u, v))
        });
        bad += usize::from(!ok);
    }
    checks.push(Check::new("triangulation completion", bad == 0, format!("{bad} failures in 100 graphs")));

    let tris = generate_triangulations(9).unwrap_or_default();
    let mut bad = 0;
    for _ in 0..300 {
        if tris.is_empty() {
            break;
        }
        let g = &tris[rng.gen_range(0..tris.len())];
        let side: Vec<u8> = (0..g.n()).map(|_| rng.gen_range(0..3)).collect();
        let x: Vec<usize> = (0..g.n()).filter(|&v| side[v] == 1).collect();
        let y: Vec<usize> = (0..g.n()).filter(|&v| side[v] == 2).collect();
        let pair = VertexSetPair::new(g, &x, &y).expect("disjoint by construction");
        if let Some(bound) = pair.planar_bound() {
            bad += usize::from(count_pair_edges(g, &pair) > bound);
        }
    }
    checks.push(Check::new(
        "planar bipartite edge bound",
        bad == 0 && !tris.is_empty(),
        format!("{bad} violations in 300 samples"),
    ));
    checks
}

fn matching_oracle(config: &RunConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (mut size_bad, mut ge_bad) = (0, 0);
    let mut first_failure = String::new();
    for _ in 0..500 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.05..0.8);
        let g = random_graph(&mut rng, n, p);
        let m = max_matching(&g);
        let nu = brute_force_matching_number(&g);
        if !m.is_valid_for(&g) || m.size() != nu {
            size_bad += 1;
            if first_failure.is_empty() {
                first_failure = emit_graph6(&g);
            }
        }
        let ge = gallai_edmonds(&g);
        if ge.check(&g).is_err() || ge.d != nu {
            ge_bad += 1;
            if first_failure.is_empty() {
                first_failure = emit_graph6(&g);
            }
        }
    }
    let tail = |bad: usize| {
        if bad == 0 {
            "0 failures in 500 graphs".to_string()
        } else {
            format!("{bad} failures in 500 graphs, first {first_failure}")
        }
    };
    vec![
        Check::new("blossom equals brute force", size_bad == 0, tail(size_bad)),
        Check::new("Gallai-Edmonds decomposition", ge_bad == 0, tail(ge_bad)),
    ]
}

fn constructions() -> Vec<Check> {
    let mut bad = Vec::new();
    let mut count = 0;
    for t in 4..=12usize {
        for n in t + 3..=200 {
            count += 1;
            let ok = build_turan_extremal(n, t).is_ok_and(|c| {
                c.graph.m() == extremal_edge_count(n, t)
                    && is_planar(&c.graph).is_planar()
                    && !has_matching_of_size(&c.graph, t)
            });
            if !ok {
                bad.push((n, t));
            }
        }
    }
    vec![Check::new(
        "extremal construction sweep",
        bad.is_empty(),
        match bad.first() {
            None => format!("{count} parameter pairs"),
            Some((n, t)) => format!("{} of {count} parameter pairs failed, first ({n}, {t})", bad.len()),
        },
    )]
}

/// Known small rainbow numbers `(n, t, rb)`.
pub const SMALL_RB: [(usize, usize, usize); 8] = [
    (4, 2, 4),
    (5, 2, 2),
    (6, 2, 2),
    (7, 2, 2),
    (6, 3, 8),
    (7, 3, 8),
    (8, 3, 9),
    (8, 4, 15),
];

fn small_rb(config: &RunConfig, budget: Budget) -> Vec<Check> {
    SMALL_RB
        .iter()
        .map(|&(n, t, expected)| {
            let name = format!("rb(T_{n}, M_{t})");
            match rainbow_number_class(n, t, budget, config.workers) {
                Ok(c) => Check::exact(name, c.value, expected, c.exhausted),
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

/// Known planar Turán numbers `(n, t, ex)`.
pub const SMALL_TURAN: [(usize, usize, usize); 6] =
    [(8, 4, 15), (9, 4, 17), (10, 4, 19), (11, 4, 21), (10, 5, 22), (7, 4, 15)];

fn small_turan(config: &RunConfig, budget: Budget) -> Vec<Check> {
    SMALL_TURAN
        .iter()
        .map(|&(n, t, expected)| {
            let name = format!("ex_P({n}, M_{t})");
            match planar_turan_matching(n, t, budget, config.workers) {
                Ok(c) => {
                    let witness_ok =
                        c.witness.m() == c.value && !has_matching_of_size(&c.witness, t) && is_planar(&c.witness).is_planar();
                    let mut check = Check::exact(name, c.value, expected, c.exhausted);
                    check.passed &= witness_ok;
                    check
                }
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

/// Parameters of the lower-bound colorings checked, `(n, t)`.
pub const LOWER_BOUND_POINTS: [(usize, usize); 4] = [(11, 5), (30, 6), (66, 7), (93, 10)];

fn lower_bound_colorings() -> Vec<Check> {
    LOWER_BOUND_POINTS
        .iter()
        .map(|&(n, t)| {
            let name = format!("lower-bound coloring ({n}, {t})");
            match build_rb_lower_coloring(n, t) {
                Ok(l) => {
                    let tri = is_triangulation(&l.host);
                    let colors = l.coloring.k();
                    let rainbow = max_rainbow_matching(&l.host, &l.coloring).map(|(s, _)| s);
                    let passed = tri && colors == 2 * n + 3 * t - 15 && rainbow == Ok(t - 1);
                    Check::new(
                        name,
                        passed,
                        format!("triangulation {tri}, {colors} colors, max rainbow matching {rainbow:?}"),
                    )
                }
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

pub fn run_suite(config: &RunConfig, suite: Suite) -> Vec<Check> {
    let budget = config.budget();
    match suite {
        Suite::CoreInvariants => core_invariants(config),
        Suite::MatchingOracle => matching_oracle(config),
        Suite::Constructions => constructions(),
        Suite::SmallRb => small_rb(config, budget),
        Suite::SmallTuran => small_turan(config, budget),
        Suite::LowerBoundColorings => lower_bound_colorings(),
    }
}

pub fn cmd_verify(config: &RunConfig, suite: Suite) -> CliResult<(SearchReport, Vec<Check>)> {
    let start = Instant::now();
    let checks = run_suite(config, suite);
    let passed = checks.iter().all(|c| c.passed);
    let mut report = SearchReport::new("verify", json!({ "suite": suite.name() }), config);
    report.passed = Some(passed);
    report.value = Some(checks.iter().filter(|c| c.passed).count() as u64);
    report.details = json!({ "checks": checks });
    report.wall_secs = start.elapsed().as_secs_f64();
    append_report(config, &report)?;
    Ok((report, checks))
}
