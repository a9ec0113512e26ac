//! Edge colorings and their text format.
//!
//! A coloring file starts with `colors k` and then has one `u v c` line per
//! edge, with vertex ids matching the companion graph6 labeling.

use crate::error::{domain, Error, Result};
use crate::graph::{EdgeId, Graph};

/// A total, surjective map from edge ids `0..m` onto color ids `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    color_of: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// Validates surjectivity onto `0..k` where `k - 1` is the largest id used.
    pub fn new(color_of: Vec<usize>) -> Result<Self> {
        let k = color_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut seen = vec![false; k];
        for &c in &color_of {
            seen[c] = true;
        }
        if let Some(c) = seen.iter().position(|&s| !s) {
            return domain(format!("color {c} is unused; ids must be dense"));
        }
        Ok(EdgeColoring { color_of, k })
    }

    /// Renumbers arbitrary labels densely in order of first use by edge id.
    pub fn normalized(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let color_of = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        EdgeColoring {
            color_of,
            k: map.len(),
        }
    }

    /// Every edge gets the same color.
    pub fn monochromatic(m: usize) -> Self {
        EdgeColoring {
            color_of: vec![0; m],
            k: usize::from(m > 0),
        }
    }

    /// Edge `e` gets color `e`.
    pub fn rainbow(m: usize) -> Self {
        EdgeColoring {
            color_of: (0..m).collect(),
            k: m,
        }
    }

    pub fn m(&self) -> usize {
        self.color_of.len()
    }

    /// Number of colors.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.color_of[e]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color_of
    }

    /// Edge ids of each color class, ascending.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut classes = vec![Vec::new(); self.k];
        for (e, &c) in self.color_of.iter().enumerate() {
            classes[c].push(e);
        }
        classes
    }

    pub(crate) fn check_host(&self, g: &Graph) -> Result<()> {
        if self.m() != g.m() {
            return domain(format!(
                "coloring covers {} edges but the graph has {}",
                self.m(),
                g.m()
            ));
        }
        Ok(())
    }

    pub fn to_text(&self, g: &Graph) -> Result<String> {
        self.check_host(g)?;
        let mut out = format!("colors {}\n", self.k);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            out.push_str(&format!("{u} {v} {}\n", self.color_of[e]));
        }
        Ok(out)
    }

    /// Parses the text format against `g`; every edge must appear exactly once.
    pub fn parse_text(g: &Graph, text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::ColoringFormat { line, message };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (first, header) = lines
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| err(1, "missing header".into()))?;
        let k: usize = header
            .strip_prefix("colors ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| err(first, format!("expected `colors k`, found {header:?}")))?;
        let mut color_of = vec![usize::MAX; g.m()];
        for (line, l) in lines {
            if l.is_empty() {
                continue;
            }
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| err(line, format!("bad number {x:?}"))))
                .collect::<Result<_>>()?;
            let &[u, v, c] = nums.as_slice() else {
                return Err(err(line, "expected `u v color`".into()));
            };
            let e = (u < g.n() && v < g.n())
                .then(|| g.edge_id(u, v))
                .flatten()
                .ok_or_else(|| err(line, format!("{u} {v} is not an edge")))?;
            if color_of[e] != usize::MAX {
                return Err(err(line, format!("edge {u} {v} colored twice")));
            }
            if c >= k {
                return Err(err(line, format!("color {c} exceeds declared count {k}")));
            }
            color_of[e] = c;
        }
        if let Some(e) = color_of.iter().position(|&c| c == usize::MAX) {
            let (u, v) = g.endpoints(e);
            return Err(err(0, format!("edge {u} {v} has no color")));
        }
        let coloring = Self::new(color_of).map_err(|e| err(0, e.to_string()))?;
        if coloring.k != k {
            return Err(err(first, format!("declared {k} colors, found {}", coloring.k)));
        }
        Ok(coloring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjectivity_is_enforced() {
        assert!(EdgeColoring::new(vec![0, 2, 2]).is_err());
        let c = EdgeColoring::new(vec![1, 0, 1]).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.classes(), vec![vec![1], vec![0, 2]]);
    }

    #[test]
    fn normalization_uses_first_use_order() {
        let c = EdgeColoring::normalized(&[7, 3, 7, 9]);
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(c.k(), 3);
    }

    #[test]
    fn text_roundtrip() {
        let g = Graph::complete(4);
        let c = EdgeColoring::new(vec![0, 1, 2, 2, 1, 0]).unwrap();
        let text = c.to_text(&g).unwrap();
        assert!(text.starts_with("colors 3\n"));
        assert_eq!(EdgeColoring::parse_text(&g, &text).unwrap(), c);
    }

    #[test]
    fn text_errors_name_lines() {
        let g = Graph::complete(3);
        let bad_edge = "colors 1\n0 1 0\n0 2 0\n1 5 0\n";
        assert!(matches!(
            EdgeColoring::parse_text(&g, bad_edge),
            Err(Error::ColoringFormat { line: 4, .. })
        ));
        let missing = "colors 1\n0 1 0\n0 2 0\n";
        assert!(EdgeColoring::parse_text(&g, missing).is_err());
        let wrong_count = "colors 2\n0 1 0\n0 2 0\n1 2 0\n";
        assert!(EdgeColoring::parse_text(&g, wrong_count).is_err());
        assert!(EdgeColoring::parse_text(&g, "k 1\n").is_err());
    }
}
