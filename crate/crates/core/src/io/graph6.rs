//! The graph6 format: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OPTIONAL_HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: u64 = (1 << 36) - 1;

fn check_byte(b: u8) -> Result<u8> {
    if (BIAS..=126).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(Error::Graph6Byte(b))
    }
}

fn read_wide(bytes: &[u8], count: usize) -> Result<u64> {
    if bytes.len() < count {
        return Err(Error::Graph6Header(format!(
            "expected {count} size bytes, found {}",
            bytes.len()
        )));
    }
    bytes[..count]
        .iter()
        .try_fold(0u64, |acc, &b| Ok(acc << 6 | u64::from(check_byte(b)?)))
}

/// Decodes one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6Header("empty line".into()))?;
    let (n, data) = if first != 126 {
        (u64::from(check_byte(first)?), &bytes[1..])
    } else if bytes.get(1) == Some(&126) {
        (read_wide(&bytes[2..], 6)?, &bytes[8..])
    } else {
        (read_wide(&bytes[1..], 3)?, &bytes[4..])
    };

    // Validate the length before allocating anything proportional to n.
    let n128 = u128::from(n);
    let bits = n128 * n128.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if expected != data.len() as u128 {
        return Err(Error::Graph6Length {
            expected: usize::try_from(expected).unwrap_or(usize::MAX),
            found: data.len(),
        });
    }
    let n = n as usize;
    let values: Vec<u8> = data.iter().map(|&b| check_byte(b)).collect::<Result<_>>()?;

    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
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
    if (k..values.len() * 6).any(bit) {
        return Err(Error::Graph6Padding);
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g`, using the long size header when `n > 62`.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else {
        let width = if n <= MEDIUM_MAX { 3 } else { 6 };
        assert!(n as u64 <= LONG_MAX, "graph6 cannot encode order {n}");
        out.push(126);
        if width == 6 {
            out.push(126);
        }
        out.extend(
            (0..width)
                .rev()
                .map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS),
        );
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes every non-empty line of a graph6 stream, reporting the 1-based
/// line number of the first failure.
pub fn parse_graph6_stream(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim_end()).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.order(), g.edges()), (2, vec![(0, 1)]));
        assert_eq!(emit_graph6(&g), "A_");
    }

    #[test]
    fn star_round_trip() {
        // Five vertices, the last joined to the other four.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn small_orders() {
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(70);
        let text = emit_graph6(&g);
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_graph6("A\u{7f}").unwrap_err().to_string(),
            "invalid graph6 byte 0x7f"
        );
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Error::Graph6Length { .. })
        ));
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6Length { .. })));
        assert_eq!(parse_graph6("A`"), Err(Error::Graph6Padding));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6Header(_))));
        assert!(matches!(parse_graph6("~~"), Err(Error::Graph6Header(_))));
        assert!(matches!(
            parse_graph6("~~~~~~~~"),
            Err(Error::Graph6Length { .. })
        ));
    }

    #[test]
    fn streams_report_line_numbers() {
        let gs = parse_graph6_stream("A_\n\nC~\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(parse_graph6_stream("A_\nA!\n").unwrap_err().0, 2);
    }
}
