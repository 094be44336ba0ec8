//! Tree certificates witnessing `κ(S) ≥ ℓ` and their checker.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{edge, Edge, Graph, TripleSet, VertexId};

/// `ℓ` trees, each given by its edge set, claimed to be internally disjoint
/// trees connecting `set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCertificate {
    pub set: TripleSet,
    pub trees: Vec<BTreeSet<Edge>>,
    /// Subcase of the H(k) construction that produced the trees, if any.
    pub case_tag: Option<String>,
}

impl TreeCertificate {
    pub fn new<I, T>(set: TripleSet, trees: I, case_tag: Option<String>) -> Self
    where
        I: IntoIterator<Item = T>,
        T: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let trees = trees
            .into_iter()
            .map(|t| t.into_iter().map(|(u, v)| edge(u, v)).collect())
            .collect();
        TreeCertificate {
            set,
            trees,
            case_tag,
        }
    }

    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    pub fn tree_vertices(&self, i: usize) -> BTreeSet<VertexId> {
        self.trees[i].iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// The certificate with every vertex `v` replaced by `map[v]`.
    pub fn mapped(&self, map: &[VertexId]) -> Option<TreeCertificate> {
        let [a, b, c] = self.set.vertices();
        let set = TripleSet::new(map[a], map[b], map[c]).ok()?;
        Some(TreeCertificate::new(
            set,
            self.trees
                .iter()
                .map(|t| t.iter().map(|&(u, v)| (map[u], map[v])).collect::<Vec<_>>()),
            self.case_tag.clone(),
        ))
    }
}

/// The first clause a certificate violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// An edge of tree `tree` is not an edge of the host graph.
    EdgeExistence { tree: usize, edge: Edge },
    /// Two trees share an edge.
    EdgeDisjointness { trees: (usize, usize), edge: Edge },
    /// A tree misses a vertex of `S`.
    SContainment { tree: usize, missing: VertexId },
    /// A tree is disconnected or contains a cycle.
    TreeShape { tree: usize, reason: &'static str },
    /// Two trees share a vertex outside `S`.
    InternalDisjointness {
        trees: (usize, usize),
        vertex: VertexId,
    },
}

impl Violation {
    /// Short name of the violated clause.
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::EdgeExistence { .. } => "edge-existence",
            Violation::EdgeDisjointness { .. } => "edge-disjointness",
            Violation::SContainment { .. } => "S-containment",
            Violation::TreeShape { .. } => "tree-shape",
            Violation::InternalDisjointness { .. } => "internal-disjointness",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeExistence { tree, edge } => {
                write!(
                    f,
                    "edge-existence: T{} uses non-edge {}-{}",
                    tree + 1,
                    edge.0,
                    edge.1
                )
            }
            Violation::EdgeDisjointness { trees, edge } => write!(
                f,
                "edge-disjointness: T{} and T{} share edge {}-{}",
                trees.0 + 1,
                trees.1 + 1,
                edge.0,
                edge.1
            ),
            Violation::SContainment { tree, missing } => {
                write!(f, "S-containment: T{} misses vertex {}", tree + 1, missing)
            }
            Violation::TreeShape { tree, reason } => {
                write!(f, "tree-shape: T{} {}", tree + 1, reason)
            }
            Violation::InternalDisjointness { trees, vertex } => write!(
                f,
                "internal-disjointness: T{} and T{} share vertex {} outside S",
                trees.0 + 1,
                trees.1 + 1,
                vertex
            ),
        }
    }
}

/// Checks a certificate against `g`.
///
/// Clauses are checked in a fixed order: edge existence, pairwise edge
/// disjointness, containment of `S`, tree shape, and finally that pairwise
/// vertex intersections are exactly `S`.
pub fn verify_certificate(g: &Graph, cert: &TreeCertificate) -> Result<(), Violation> {
    for (i, tree) in cert.trees.iter().enumerate() {
        if let Some(&e) = tree.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Violation::EdgeExistence { tree: i, edge: e });
        }
    }

    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, tree) in cert.trees.iter().enumerate() {
        for &e in tree {
            if let Some(&j) = owner.get(&e) {
                return Err(Violation::EdgeDisjointness {
                    trees: (j, i),
                    edge: e,
                });
            }
            owner.insert(e, i);
        }
    }

    let vertex_sets: Vec<BTreeSet<VertexId>> = (0..cert.trees.len())
        .map(|i| cert.tree_vertices(i))
        .collect();
    for (i, vs) in vertex_sets.iter().enumerate() {
        if let Some(&s) = cert.set.vertices().iter().find(|s| !vs.contains(s)) {
            return Err(Violation::SContainment {
                tree: i,
                missing: s,
            });
        }
    }

    for (i, tree) in cert.trees.iter().enumerate() {
        if let Some(reason) = tree_shape_defect(tree, &vertex_sets[i]) {
            return Err(Violation::TreeShape { tree: i, reason });
        }
    }

    let mut seen: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, vs) in vertex_sets.iter().enumerate() {
        for &v in vs.iter().filter(|v| !cert.set.contains(**v)) {
            if let Some(&j) = seen.get(&v) {
                return Err(Violation::InternalDisjointness {
                    trees: (j, i),
                    vertex: v,
                });
            }
            seen.insert(v, i);
        }
    }
    Ok(())
}

fn tree_shape_defect(
    edges: &BTreeSet<Edge>,
    vertices: &BTreeSet<VertexId>,
) -> Option<&'static str> {
    if edges.len() + 1 != vertices.len() {
        return Some(if edges.len() >= vertices.len() {
            "contains a cycle"
        } else {
            "is disconnected"
        });
    }
    // |E| = |V| - 1, so connectivity is equivalent to being a tree.
    let mut parent: BTreeMap<VertexId, VertexId> = vertices.iter().map(|&v| (v, v)).collect();
    fn find(parent: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
        let p = parent[&v];
        if p == v {
            return v;
        }
        let root = find(parent, p);
        parent.insert(v, root);
        root
    }
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Some("contains a cycle");
        }
        parent.insert(ru, rv);
    }
    None
}
