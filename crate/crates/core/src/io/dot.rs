//! DOT export, and a reader for the subset the exporter writes.
//!
//! ```text
//! graph G {
//!   0 [label="x1"];
//!   0 -- 1;
//! }
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::json::validate_labels;

pub fn emit_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels {
            Some(ls) => writeln!(out, "  {v} [label=\"{}\"];", escape(&ls[v])),
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a string");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a string");
    }
    out.push_str("}\n");
    out
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn unescape(quoted: &str) -> Option<String> {
    let mut out = String::new();
    let mut chars = quoted.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => out.push(chars.next()?),
            '"' => return None,
            c => out.push(c),
        }
    }
    Some(out)
}

fn vertex(token: &str) -> Option<VertexId> {
    let token = token.trim();
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Reads the DOT subset produced by [`emit_dot`]. Every node must be declared
/// and node ids must be exactly `0..n`. Labels are returned only if every
/// node has one.
pub fn parse_dot(text: &str) -> Result<(Graph, Option<Vec<String>>)> {
    let err = |line: usize, reason: &str| Error::Dot {
        line,
        reason: reason.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("//"));

    let (first, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let name = header
        .strip_prefix("graph")
        .and_then(|r| r.strip_suffix('{'))
        .ok_or_else(|| err(first, "expected `graph NAME {`"))?;
    if !name
        .trim()
        .chars()
        .all(|c| c.is_ascii_alphanumeric() || c == '_')
    {
        return Err(err(first, "unsupported graph name"));
    }

    let mut nodes: Vec<(VertexId, Option<String>)> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut closed = false;
    for (line, body) in lines {
        if closed {
            return Err(err(line, "content after closing brace"));
        }
        if body == "}" {
            closed = true;
            continue;
        }
        let stmt = body
            .strip_suffix(';')
            .ok_or_else(|| err(line, "statement must end with `;`"))?;
        if let Some((u, v)) = stmt.split_once("--") {
            let u = vertex(u).ok_or_else(|| err(line, "bad edge endpoint"))?;
            let v = vertex(v).ok_or_else(|| err(line, "bad edge endpoint"))?;
            edges.push((u, v));
        } else if let Some((id, attrs)) = stmt.split_once('[') {
            let id = vertex(id).ok_or_else(|| err(line, "bad node id"))?;
            let label = attrs
                .trim()
                .strip_prefix("label=\"")
                .and_then(|r| r.strip_suffix("\"]"))
                .and_then(unescape)
                .ok_or_else(|| err(line, "expected `[label=\"...\"]`"))?;
            nodes.push((id, Some(label)));
        } else {
            let id = vertex(stmt).ok_or_else(|| err(line, "bad node id"))?;
            nodes.push((id, None));
        }
    }
    if !closed {
        return Err(err(text.lines().count().max(1), "missing closing brace"));
    }

    nodes.sort_by_key(|(id, _)| *id);
    if nodes.iter().enumerate().any(|(i, (id, _))| i != *id) {
        return Err(err(
            first,
            "node ids must be exactly 0..n, each declared once",
        ));
    }
    let n = nodes.len();
    let labels: Option<Vec<String>> = nodes.into_iter().map(|(_, l)| l).collect();
    if let Some(ls) = &labels {
        validate_labels(ls, n)?;
    }
    Ok((Graph::from_edges(n, edges)?, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::ExtremalGraph;

    #[test]
    fn one_line_per_node_and_edge() {
        let g = Graph::cycle(4);
        let text = emit_dot(&g, None);
        assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 4);
        assert_eq!(text.lines().count(), 2 + 4 + 4);
        assert_eq!(parse_dot(&text).unwrap(), (g, None));
    }

    #[test]
    fn labels_round_trip() {
        let h = ExtremalGraph::build(2).unwrap();
        let text = emit_dot(h.graph(), Some(&h.labels()));
        assert!(text.contains("  8 [label=\"z1\"];\n"));
        let (g, labels) = parse_dot(&text).unwrap();
        assert_eq!(&g, h.graph());
        assert_eq!(labels, Some(h.labels()));
    }

    #[test]
    fn rejects_malformed_input() {
        for text in [
            "",
            "digraph G {\n}\n",
            "graph G {\n  0;\n",
            "graph G {\n  1;\n}\n",
            "graph G {\n  0;\n  0;\n}\n",
            "graph G {\n  0;\n  1;\n  0 -- 0;\n}\n",
            "graph G {\n  0\n}\n",
            "graph G {\n  0 [color=red];\n}\n",
            "graph G {\n}\n}\n",
        ] {
            assert!(parse_dot(text).is_err(), "{text:?}");
        }
    }
}
