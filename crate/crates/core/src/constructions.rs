//! The extremal `M_t`-free planar graph and the rainbow lower-bound coloring
//! built on top of it.
//!
//! The extremal graph has a triangulated part `U` on `t - 1` vertices and an
//! independent part `V`. Every edge meets `U`, so no matching exceeds
//! `t - 1` edges. `V`-vertices are first dropped into the triangular faces of
//! `U` (degree 3), then stacked between the two `U`-corners of the mixed
//! faces this creates (degree 2).

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{domain, Result};
use crate::graph::{EdgeId, Graph};
use crate::triangulation::triangulate;

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalConstruction {
    #[serde(skip)]
    pub graph: Graph,
    /// Vertices `0..t - 1`, inducing a triangulation.
    pub u: Vec<usize>,
    /// Vertices `t - 1..n`, independent.
    pub v: Vec<usize>,
    pub n: usize,
    pub t: usize,
}

/// `min(3n - 6, 2n + 3t - 13)`.
pub fn extremal_edge_count(n: usize, t: usize) -> usize {
    (3 * n - 6).min(2 * n + 3 * t - 13)
}

/// Stacked triangulation on `s >= 3` vertices together with its faces as
/// sorted corner triples. Vertex `k >= 3` goes into face `{0, 1, k - 1}`.
fn stacked_with_faces(s: usize) -> (Graph, Vec<[usize; 3]>) {
    let mut g = Graph::new(s);
    g.push_edge(0, 1);
    g.push_edge(0, 2);
    g.push_edge(1, 2);
    // K3 bounds two faces with the same corners
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for k in 3..s {
        let i = faces
            .iter()
            .position(|f| *f == [0, 1, k - 1])
            .expect("the face {0, 1, k - 1} exists");
        faces.swap_remove(i);
        faces.extend([[0, 1, k], [1, k - 1, k], [0, k - 1, k]]);
        g.push_edge(0, k);
        g.push_edge(1, k);
        g.push_edge(k - 1, k);
    }
    faces.sort_unstable();
    (g, faces)
}

pub fn build_turan_extremal(n: usize, t: usize) -> Result<ExtremalConstruction> {
    if t < 4 {
        return domain(format!("the extremal construction needs t >= 4, got {t}"));
    }
    if n < t - 1 {
        return domain(format!("need n >= t - 1 = {}, got {n}", t - 1));
    }
    let s = t - 1;
    let (mut g, faces) = stacked_with_faces(s);
    for _ in s..n {
        g.add_vertex();
    }
    let mut next = s;
    let mut mixed: Vec<(usize, usize)> = Vec::new();
    for &[a, b, c] in &faces {
        if next == n {
            break;
        }
        g.push_edge(a, next);
        g.push_edge(b, next);
        g.push_edge(c, next);
        mixed.extend([(a, b), (b, c), (a, c)]);
        next += 1;
    }
    // a degree-2 vertex in face {a, b, x} leaves a face {a, b, y} behind,
    // so each pair can be reused
    for j in 0..n - next {
        let (a, b) = mixed[j % mixed.len()];
        g.push_edge(a, next);
        g.push_edge(b, next);
        next += 1;
    }
    debug_assert_eq!(g.m(), extremal_edge_count(n, t));
    Ok(ExtremalConstruction {
        graph: g,
        u: (0..s).collect(),
        v: (s..n).collect(),
        n,
        t,
    })
}

/// A plane triangulation colored with `2n + 3t - 15` colors and no rainbow
/// `M_t`.
#[derive(Clone, Debug)]
pub struct LowerBoundColoring {
    pub host: Graph,
    pub coloring: EdgeColoring,
    /// Edges of the embedded `M_{t-1}`-free extremal graph, each its own color.
    pub rainbow_part: Vec<EdgeId>,
    /// Shared by every other host edge; the largest color id.
    pub extra_color: usize,
    pub n: usize,
    pub t: usize,
}

pub fn build_rb_lower_coloring(n: usize, t: usize) -> Result<LowerBoundColoring> {
    if t < 5 {
        return domain(format!("the lower-bound coloring needs t >= 5, got {t}"));
    }
    if n < 3 * t - 9 {
        return domain(format!("need n >= 3(t - 1) - 6 = {}, got {n}", 3 * t - 9));
    }
    let base = build_turan_extremal(n, t - 1)?;
    let completion = triangulate(&base.graph)?;
    let kept = base.graph.m();
    // completion keeps the original ids, so the extremal edges are 0..kept
    let colors = (0..completion.graph.m()).map(|e| e.min(kept)).collect();
    let coloring = EdgeColoring::new(colors)?;
    Ok(LowerBoundColoring {
        host: completion.graph,
        coloring,
        rainbow_part: (0..kept).collect(),
        extra_color: kept,
        n,
        t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_pair_edges, VertexSetPair};
    use crate::matching::has_matching_of_size;
    use crate::planarity::is_planar;
    use crate::triangulation::is_triangulation;

    #[test]
    fn small_constructions() {
        let c = build_turan_extremal(9, 4).unwrap();
        assert_eq!(c.graph.m(), 17);
        assert!(!has_matching_of_size(&c.graph, 4));
        assert!(has_matching_of_size(&c.graph, 3));
        assert!(!is_triangulation(&c.graph));
        assert_eq!(build_turan_extremal(8, 5).unwrap().graph.m(), 18);
        let c = build_turan_extremal(8, 4).unwrap();
        assert_eq!(c.graph.m(), 15);
        assert!(!has_matching_of_size(&c.graph, 4));
    }

    #[test]
    fn bipartite_part_and_degrees() {
        for t in 4..10 {
            for n in 3 * t - 6..3 * t + 10 {
                let c = build_turan_extremal(n, t).unwrap();
                let pair = VertexSetPair::new(&c.graph, &c.u, &c.v).unwrap();
                assert_eq!(count_pair_edges(&c.graph, &pair), 2 * n - 4);
                let cubic = c.v.iter().filter(|&&x| c.graph.degree(x) == 3).count();
                let quad = c.v.iter().filter(|&&x| c.graph.degree(x) == 2).count();
                assert_eq!(cubic, 2 * (t - 1) - 4);
                assert_eq!(quad, n + 7 - 3 * t);
                assert!(is_planar(&c.graph).is_planar());
            }
        }
    }

    #[test]
    fn completion_of_the_small_construction() {
        let c = build_turan_extremal(9, 4).unwrap();
        let done = triangulate(&c.graph).unwrap();
        assert_eq!(done.graph.m(), 21);
        assert!(c.graph.edges().iter().all(|&(u, v)| done.graph.has_edge(u, v)));
    }

    #[test]
    fn domain_errors() {
        assert!(build_turan_extremal(9, 3).is_err());
        assert!(build_turan_extremal(4, 6).is_err());
        assert!(build_rb_lower_coloring(11, 4).is_err());
        assert!(build_rb_lower_coloring(5, 5).is_err());
    }

    #[test]
    fn lower_coloring_counts() {
        let l = build_rb_lower_coloring(11, 5).unwrap();
        assert!(is_triangulation(&l.host));
        assert_eq!(l.coloring.k(), 22);
        assert_eq!(l.extra_color, 21);
    }
}
