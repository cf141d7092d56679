//! graph6 encoding: order header, then the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) packed big-endian into 6-bit chunks
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(malformed("truncated order header"));
        }
        if bytes[1] == b'~' {
            return Err(Error::OrderOutOfRange {
                n: usize::MAX,
                max: MAX_ORDER,
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange { n, max: MAX_ORDER });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "order {n} needs {expected} edge bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::graph::all_labeled_graphs;

    #[test]
    fn known_strings() {
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        // Same 5-vertex example petgraph uses: edges ac, ae, bd, de.
        let g = Graph::build(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&FamilySpec::Complete(4).build().unwrap()), "C~");
        assert_eq!(to_graph6(&FamilySpec::Path(4).build().unwrap()), "Ch");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("D?"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("D? {"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("?"), Err(Error::OrderOutOfRange { .. })));
        // Order 65 in the long header form.
        assert!(matches!(parse_graph6("~?@@"), Err(Error::OrderOutOfRange { n: 65, .. })));
    }

    #[test]
    fn large_order_header() {
        let g = FamilySpec::Path(64).build().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = FamilySpec::Cycle(63).build().unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn round_trip_all_small() {
        for n in 1..=5 {
            for g in all_labeled_graphs(n).unwrap() {
                assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }
}
