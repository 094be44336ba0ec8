//! JSON graph documents and certificate documents.

use serde::{Deserialize, Serialize};

use crate::certificate::TreeCertificate;
use crate::error::{Error, Result};
use crate::extremal::ExtremalGraph;
use crate::graph::{Graph, TripleSet, VertexId};

/// `{"n": 5, "edges": [[0, 1], …], "labels": ["x1", …]}` with edges sorted and
/// each pair written smaller id first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn new(g: &Graph, labels: Option<Vec<String>>) -> Self {
        GraphDocument {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels,
        }
    }

    pub fn of_extremal(h: &ExtremalGraph) -> Self {
        Self::new(h.graph(), Some(h.labels()))
    }

    pub fn to_graph(&self) -> Result<Graph> {
        if let Some(labels) = &self.labels {
            validate_labels(labels, self.n)?;
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

pub(crate) fn validate_labels(labels: &[String], n: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::Document(format!(
            "{} labels for {} vertices",
            labels.len(),
            n
        )));
    }
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Document(format!("duplicate label {:?}", w[0])));
    }
    if let Some(l) = labels
        .iter()
        .find(|l| l.is_empty() || l.bytes().all(|b| b.is_ascii_digit()))
    {
        return Err(Error::Document(format!("label {l:?} is empty or numeric")));
    }
    Ok(())
}

pub fn parse_json(text: &str) -> Result<(Graph, Option<Vec<String>>)> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    let g = doc.to_graph()?;
    Ok((g, doc.labels))
}

pub fn emit_json(g: &Graph, labels: Option<&[String]>) -> String {
    let doc = GraphDocument::new(g, labels.map(<[String]>::to_vec));
    serde_json::to_string(&doc).expect("documents serialize")
}

/// A vertex written by label when the host graph has labels, by id otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Id(VertexId),
    Label(String),
}

/// `{"k": 3, "S": ["x1", "x2", "z1"], "case": "3.1", "trees": [[["x1", "y1"], …], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(rename = "S")]
    pub set: Vec<VertexRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub trees: Vec<Vec<[VertexRef; 2]>>,
}

impl CertificateDocument {
    /// Uses `H(k)` labels when `h` is given.
    pub fn new(cert: &TreeCertificate, h: Option<&ExtremalGraph>) -> Self {
        let labels = h.map(ExtremalGraph::labels);
        Self::with_labels(cert, h.map(ExtremalGraph::k), labels.as_deref())
    }

    /// Writes vertices by `labels[v]` when labels are given.
    pub fn with_labels(
        cert: &TreeCertificate,
        k: Option<usize>,
        labels: Option<&[String]>,
    ) -> Self {
        let r = |v: VertexId| match labels {
            Some(ls) => VertexRef::Label(ls[v].clone()),
            None => VertexRef::Id(v),
        };
        CertificateDocument {
            k,
            set: cert.set.vertices().map(r).to_vec(),
            case: cert.case_tag.clone(),
            trees: cert
                .trees
                .iter()
                .map(|t| t.iter().map(|&(u, v)| [r(u), r(v)]).collect())
                .collect(),
        }
    }

    /// Resolves labels against `labels` (indexed by vertex id).
    pub fn to_certificate(&self, labels: Option<&[String]>) -> Result<TreeCertificate> {
        let resolve = |r: &VertexRef| match r {
            VertexRef::Id(v) => Ok(*v),
            VertexRef::Label(l) => labels
                .and_then(|ls| ls.iter().position(|x| x == l))
                .ok_or_else(|| Error::UnknownLabel(l.clone())),
        };
        let set: Vec<VertexId> = self.set.iter().map(resolve).collect::<Result<_>>()?;
        let [a, b, c] = <[VertexId; 3]>::try_from(set)
            .map_err(|s| Error::Document(format!("S has {} vertices, expected 3", s.len())))?;
        let trees = self
            .trees
            .iter()
            .map(|t| {
                t.iter()
                    .map(|[u, v]| Ok((resolve(u)?, resolve(v)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TreeCertificate::new(
            TripleSet::new(a, b, c)?,
            trees,
            self.case.clone(),
        ))
    }
}
