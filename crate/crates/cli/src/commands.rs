use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use rainbowtri_core::antiramsey::{anti_ramsey_value, rainbow_number_class};
use rainbowtri_core::constructions::{build_rb_lower_coloring, build_turan_extremal};
use rainbowtri_core::matching::gallai_edmonds;
use rainbowtri_core::triangulation::generate_triangulations;
use rainbowtri_core::turan::planar_turan_matching;
use rainbowtri_core::{emit_graph6, parse_graph6, Error, Graph};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::{append_report, write_sidecar, SearchReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ConstructKind {
    /// The M_t-free planar graph with min(3n - 6, 2n + 3t - 13) edges.
    Turan,
    /// A triangulation colored with 2n + 3t - 15 colors and no rainbow M_t.
    RbLower,
}

impl ConstructKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructKind::Turan => "turan",
            ConstructKind::RbLower => "rb-lower",
        }
    }
}

/// Reads the first non-empty line of a graph6 file.
pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| CliError::Usage(format!("{}: no graph6 line", path.display())))?;
    Ok(parse_graph6(line.trim_end())?)
}

fn finish(config: &RunConfig, mut report: SearchReport, start: Instant) -> CliResult<SearchReport> {
    report.wall_secs = start.elapsed().as_secs_f64();
    append_report(config, &report)?;
    Ok(report)
}

fn graph_line(g: &Graph) -> String {
    format!("{}\n", emit_graph6(g))
}

pub fn cmd_gen(config: &RunConfig, n: usize) -> CliResult<SearchReport> {
    let start = Instant::now();
    let tris = generate_triangulations(n)?;
    let text: String = tris.iter().map(graph_line).collect();
    let mut report = SearchReport::new("gen", json!({ "n": n }), config);
    report.witness_files.push(write_sidecar(config, &format!("triangulations-n{n}.g6"), &text)?);
    report.value = Some(tris.len() as u64);
    finish(config, report, start)
}

pub fn cmd_rb(config: &RunConfig, n: usize, t: usize) -> CliResult<SearchReport> {
    let start = Instant::now();
    let cert = rainbow_number_class(n, t, config.budget(), config.workers)?;
    let mut report = SearchReport::new("rb", json!({ "n": n, "t": t }), config);
    let stem = format!("rb-n{n}-t{t}");
    report.witness_files.push(write_sidecar(config, &format!("{stem}.g6"), &graph_line(&cert.host))?);
    report
        .witness_files
        .push(write_sidecar(config, &format!("{stem}.col"), &cert.coloring.to_text(&cert.host)?)?);
    report.value = Some(cert.value as u64);
    report.upper = (!cert.exhausted).then_some(cert.upper as u64);
    report.exhausted = cert.exhausted;
    report.nodes = cert.nodes;
    report.details = serde_json::to_value(&cert).expect("certificate serializes");
    finish(config, report, start)
}

pub fn cmd_ar(config: &RunConfig, graph: &Path, t: usize) -> CliResult<SearchReport> {
    let start = Instant::now();
    let g = read_graph(graph)?;
    let cert = anti_ramsey_value(&g, t, config.budget())?;
    let mut report = SearchReport::new(
        "ar",
        json!({ "graph": graph.display().to_string(), "graph6": emit_graph6(&g), "t": t }),
        config,
    );
    let stem = graph.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    report.witness_files.push(write_sidecar(
        config,
        &format!("ar-{stem}-t{t}.col"),
        &cert.witness.to_text(&g)?,
    )?);
    report.value = Some(cert.value as u64);
    report.upper = (!cert.exhausted).then_some(cert.upper as u64);
    report.exhausted = cert.exhausted;
    report.nodes = cert.nodes;
    report.details = serde_json::to_value(&cert).expect("certificate serializes");
    finish(config, report, start)
}

pub fn cmd_turan(config: &RunConfig, n: usize, t: usize) -> CliResult<SearchReport> {
    let start = Instant::now();
    let cert = planar_turan_matching(n, t, config.budget(), config.workers)?;
    let mut report = SearchReport::new("turan", json!({ "n": n, "t": t }), config);
    report.witness_files.push(write_sidecar(
        config,
        &format!("turan-n{n}-t{t}.g6"),
        &graph_line(&cert.witness),
    )?);
    report.value = Some(cert.value as u64);
    report.upper = (!cert.exhausted).then_some(cert.upper as u64);
    report.exhausted = cert.exhausted;
    report.nodes = cert.nodes;
    report.details = serde_json::to_value(&cert).expect("certificate serializes");
    finish(config, report, start)
}

pub fn cmd_construct(config: &RunConfig, n: usize, t: usize, kind: ConstructKind) -> CliResult<SearchReport> {
    let start = Instant::now();
    let mut report = SearchReport::new(
        "construct",
        json!({ "n": n, "t": t, "kind": kind.name() }),
        config,
    );
    match kind {
        ConstructKind::Turan => {
            let c = build_turan_extremal(n, t)?;
            report.witness_files.push(write_sidecar(
                config,
                &format!("construct-turan-n{n}-t{t}.g6"),
                &graph_line(&c.graph),
            )?);
            report.value = Some(c.graph.m() as u64);
            report.details = json!({ "edges": c.graph.m(), "u": c.u, "v": c.v });
        }
        ConstructKind::RbLower => {
            let l = build_rb_lower_coloring(n, t)?;
            let stem = format!("construct-rb-lower-n{n}-t{t}");
            report.witness_files.push(write_sidecar(config, &format!("{stem}.g6"), &graph_line(&l.host))?);
            report
                .witness_files
                .push(write_sidecar(config, &format!("{stem}.col"), &l.coloring.to_text(&l.host)?)?);
            report.value = Some(l.coloring.k() as u64);
            report.details = json!({
                "colors": l.coloring.k(),
                "extra_color": l.extra_color,
                "rainbow_part": l.rainbow_part.len(),
            });
        }
    }
    finish(config, report, start)
}

pub fn cmd_decompose(config: &RunConfig, graph: &Path) -> CliResult<SearchReport> {
    let start = Instant::now();
    let g = read_graph(graph)?;
    let ge = gallai_edmonds(&g);
    ge.check(&g).map_err(|msg| CliError::Core(Error::Invariant(msg)))?;
    let mut report = SearchReport::new(
        "decompose",
        json!({ "graph": graph.display().to_string(), "graph6": emit_graph6(&g) }),
        config,
    );
    report.value = Some(ge.d as u64);
    let mut details = serde_json::to_value(&ge).expect("decomposition serializes");
    if let Value::Object(map) = &mut details {
        map.insert("q".into(), json!(ge.q()));
        map.insert("s_size".into(), json!(ge.s.len()));
    }
    report.details = details;
    finish(config, report, start)
}
