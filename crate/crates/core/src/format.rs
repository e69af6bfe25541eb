//! graph6 and DOT serialisation.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

/// Encodes a graph in header-less graph6.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes a graph6 string; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<SimpleGraph> {
    let bad = || Error::Parse {
        token: text.to_string(),
    };
    let body = text.trim();
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body).as_bytes();
    if body.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(bad());
    }
    let (n, rest) = match body.first() {
        None => return Err(bad()),
        Some(&126) => {
            if body.len() < 4 || body[1] == 126 {
                return Err(bad());
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &c| (acc << 6) | usize::from(c - 63));
            (n, &body[4..])
        }
        Some(&c) => (usize::from(c - 63), &body[1..]),
    };
    if n > MAX_VERTICES {
        return Err(Error::Resource {
            what: "graph6 input",
            n,
            limit: MAX_VERTICES,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(bad());
    }
    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// DOT rendering; vertices keep their 0-based labels.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        // Reference strings as produced by nauty's geng/showg.
        assert_eq!(to_graph6(&SimpleGraph::new(0)), "?");
        assert_eq!(to_graph6(&SimpleGraph::new(1)), "@");
        assert_eq!(to_graph6(&SimpleGraph::complete(2)), "A_");
        assert_eq!(to_graph6(&SimpleGraph::complete(4)), "C~");
        assert_eq!(to_graph6(&SimpleGraph::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&SimpleGraph::path(3)), "Bg");
    }

    #[test]
    fn long_header() {
        let g = SimpleGraph::path(64);
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("Dhc?").is_err());
        assert!(from_graph6("D h").is_err());
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap(), SimpleGraph::cycle(5));
    }

    #[test]
    fn dot_lists_edges() {
        let dot = to_dot(&SimpleGraph::path(3), "P3");
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.starts_with("graph P3 {"));
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..20, seed in any::<u64>()) {
            let mut g = SimpleGraph::new(n);
            let mut x = seed | 1;
            for u in 0..n {
                for v in (u + 1)..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { g.add_edge(u, v); }
                }
            }
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
