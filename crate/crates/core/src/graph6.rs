//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column-major order, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Graph6 {
        offset,
        message: message.into(),
    })
}

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

/// Encodes `g` under its current labeling. No header, no trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + BIAS) as char);
    }
    out
}

/// Parses one graph6 line. A single trailing `\n` (or `\r\n`) is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return err(i, format!("byte 0x{b:02x} outside the printable range 63..=126"));
        }
    }
    if bytes.is_empty() {
        return err(0, "empty input");
    }
    let (n, mut pos) = if bytes[0] != b'~' {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        if bytes.len() < 4 {
            return err(bytes.len(), "truncated size field");
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return err(bytes.len(), "truncated size field");
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return err(
            bytes.len().min(pos + need),
            format!("expected {need} data bytes for n = {n}, found {}", bytes.len() - pos),
        );
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - BIAS;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.push_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        pos += need - 1;
        let pad = 6 - bits % 6;
        if (bytes[pos] - BIAS) & ((1u8 << pad) - 1) != 0 {
            return err(pos, "nonzero padding bits");
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(emit_graph6(&Graph::new(1)), "@");
    }

    #[test]
    fn petgraph_reference_string() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        let h = parse_graph6("DQc\n").unwrap();
        assert_eq!(emit_graph6(&h), "DQc");
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("C}x") {
            Err(Error::Graph6 { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6("C").is_err());
        // n = 3 uses 3 bits, padding must be zero: 'r' = 63 + 51 = 0b110011.
        match parse_graph6("Br") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("C\u{7}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6(">>graph6<<C~").is_err());
    }

    #[test]
    fn long_size_form() {
        let g = Graph::cycle(70);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        let h = parse_graph6(&s).unwrap();
        assert_eq!(h.n(), 70);
        assert_eq!(h.m(), 70);
        assert_eq!(emit_graph6(&h), s);
    }
}
