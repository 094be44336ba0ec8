//! Text formats: graph6, JSON documents, DOT, vertex sets and run reports.

mod dot;
mod graph6;
mod json;
mod report;

pub use dot::{emit_dot, parse_dot};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_stream};
pub use json::{emit_json, parse_json, CertificateDocument, GraphDocument, VertexRef};
pub use report::Report;

use crate::error::{Error, Result};
use crate::graph::{Graph, TripleSet, VertexId};

/// Picks the format from the first non-blank character: `{` for JSON, a
/// `graph` header for DOT, graph6 otherwise (first non-empty line only).
pub fn parse_graph_auto(text: &str) -> Result<(Graph, Option<Vec<String>>)> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(trimmed)
    } else if trimmed.starts_with("graph") {
        parse_dot(trimmed)
    } else {
        let line = trimmed.lines().next().unwrap_or("");
        Ok((parse_graph6(line.trim_end())?, None))
    }
}

/// Parses `a,b,c` where each item is an integer id or, when `labels` is
/// given, a vertex label.
pub fn parse_vertex_set(text: &str, labels: Option<&[String]>) -> Result<Vec<VertexId>> {
    let bad = || Error::VertexSet(text.to_string());
    if text.trim().is_empty() {
        return Err(bad());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            if !item.is_empty() && item.bytes().all(|b| b.is_ascii_digit()) {
                return item.parse().map_err(|_| bad());
            }
            labels
                .and_then(|ls| ls.iter().position(|l| l == item))
                .ok_or_else(|| Error::UnknownLabel(item.to_string()))
        })
        .collect()
}

/// [`parse_vertex_set`] restricted to three distinct vertices of `g`.
pub fn parse_triple(text: &str, g: &Graph, labels: Option<&[String]>) -> Result<TripleSet> {
    let vs = parse_vertex_set(text, labels)?;
    let [a, b, c] =
        <[VertexId; 3]>::try_from(vs).map_err(|_| Error::VertexSet(text.to_string()))?;
    TripleSet::in_graph(g, a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::ExtremalGraph;
    use proptest::prelude::*;

    #[test]
    fn vertex_sets() {
        let h = ExtremalGraph::build(3).unwrap();
        let labels = h.labels();
        assert_eq!(
            parse_vertex_set("x1, x2,z1", Some(&labels)).unwrap(),
            vec![0, 2, 12]
        );
        assert_eq!(parse_vertex_set("0,2,12", None).unwrap(), vec![0, 2, 12]);
        assert!(parse_vertex_set("x1,x2", None).is_err());
        assert!(parse_vertex_set("", None).is_err());
        assert!(parse_vertex_set("1,,2", None).is_err());
        let s = parse_triple("z1,x1,x2", h.graph(), Some(&labels)).unwrap();
        assert_eq!(s.vertices(), [0, 2, 12]);
        assert!(parse_triple("x1,x1,x2", h.graph(), Some(&labels)).is_err());
        assert!(parse_triple("0,1,15", h.graph(), None).is_err());
        assert!(parse_triple("0,1", h.graph(), None).is_err());
    }

    #[test]
    fn auto_detection() {
        let h = ExtremalGraph::build(3).unwrap();
        let labels = h.labels();
        for text in [
            emit_graph6(h.graph()),
            emit_json(h.graph(), Some(&labels)),
            emit_dot(h.graph(), None),
        ] {
            assert_eq!(&parse_graph_auto(&text).unwrap().0, h.graph());
        }
        assert_eq!(
            parse_graph_auto(&emit_json(h.graph(), Some(&labels)))
                .unwrap()
                .1,
            Some(labels)
        );
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..80).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn every_format_round_trips(g in arb_graph()) {
            prop_assert_eq!(&parse_graph6(&emit_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_json(&emit_json(&g, None)).unwrap().0, &g);
            prop_assert_eq!(&parse_dot(&emit_dot(&g, None)).unwrap().0, &g);
            let text = emit_graph6(&g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&text).unwrap()), text);
        }

        #[test]
        fn graph6_parser_never_panics(s in "\\PC{0,40}") {
            let _ = parse_graph6(&s);
        }
    }
}
