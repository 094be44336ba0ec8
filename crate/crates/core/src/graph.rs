//! Simple undirected graphs and the basic predicates used throughout the crate.
//!
//! Graphs are immutable once built. Vertices are `0..n`; an edge is identified
//! by the ordered pair `(min, max)` of its ends.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge stored as `(min, max)`.
pub type Edge = (VertexId, VertexId);

/// Normalizes an unordered pair to `(min, max)`.
#[inline]
pub fn edge(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<BTreeSet<VertexId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adjacency[u].insert(v) {
                let (a, b) = edge(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
            adjacency[v].insert(u);
        }
        Ok(Graph { adjacency })
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid complete graph")
    }

    /// `v(G)`.
    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// `e(G)`.
    pub fn size(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    /// Neighbor set without the range check.
    #[inline]
    pub(crate) fn adj(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adjacency[u].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(BTreeSet::len).collect()
    }

    /// `δ(G)`.
    pub fn min_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(BTreeSet::len)
            .min()
            .ok_or(Error::EmptyGraph)
    }

    /// `Δ(G)`.
    pub fn max_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(BTreeSet::len)
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// All edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// True iff no two members of `vset` are adjacent.
    pub fn is_stable<'a, I>(&self, vset: I) -> Result<bool>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let members: BTreeSet<VertexId> = vset.into_iter().copied().collect();
        for &v in &members {
            self.check_vertex(v)?;
        }
        Ok(members
            .iter()
            .all(|v| self.adjacency[*v].is_disjoint(&members)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let all: Vec<bool> = vec![true; n];
        self.reach(0, &all).iter().filter(|&&r| r).count() == n
    }

    /// True iff every vertex of `terminals` lies in one component of the
    /// subgraph induced on `vset ∪ terminals`.
    pub fn connected_within(&self, vset: &[VertexId], terminals: &[VertexId]) -> Result<bool> {
        for &v in vset.iter().chain(terminals) {
            self.check_vertex(v)?;
        }
        let Some(&start) = terminals.first() else {
            return Ok(true);
        };
        let mut allowed = vec![false; self.order()];
        for &v in vset.iter().chain(terminals) {
            allowed[v] = true;
        }
        let seen = self.reach(start, &allowed);
        Ok(terminals.iter().all(|&t| seen[t]))
    }

    fn reach(&self, start: VertexId, allowed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if allowed[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// `G[vset]`, re-indexed in increasing order of the original ids. The
    /// returned map sends new ids to original ids.
    pub fn induced_subgraph(&self, vset: &[VertexId]) -> Result<(Graph, Vec<VertexId>)> {
        let mut keep: Vec<VertexId> = vset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|(u, v)| (new_id[u], new_id[v]));
        let sub = Graph::from_edges(keep.len(), edges)?;
        Ok((sub, keep))
    }

    /// The image of this graph under the vertex permutation `perm`
    /// (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Graph> {
        Graph::from_edges(
            self.order(),
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
    }

    /// Vertices of degree exactly `d`.
    pub fn vertices_of_degree(&self, d: usize) -> Vec<VertexId> {
        (0..self.order())
            .filter(|&v| self.adjacency[v].len() == d)
            .collect()
    }
}

/// An unordered set of three distinct vertices, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleSet([VertexId; 3]);

impl TripleSet {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::TripleNotDistinct([a, b, c]));
        }
        Ok(TripleSet(v))
    }

    /// Builds a triple and checks that every member is a vertex of `g`.
    pub fn in_graph(g: &Graph, a: VertexId, b: VertexId, c: VertexId) -> Result<Self> {
        let t = Self::new(a, b, c)?;
        for v in t.0 {
            g.check_vertex(v)?;
        }
        Ok(t)
    }

    #[inline]
    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// All 3-subsets of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = TripleSet> {
        (0..n).flat_map(move |a| {
            (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| TripleSet([a, b, c])))
        })
    }
}

impl fmt::Display for TripleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_of_small_graphs() {
        let c4 = Graph::cycle(4);
        assert!((0..4).all(|v| c4.degree(v).unwrap() == 2));
        let k4 = Graph::complete(4);
        assert!((0..4).all(|v| k4.degree(v).unwrap() == 3));
        assert!(matches!(
            k4.degree(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
        let p3 = Graph::path(3);
        assert_eq!(p3.min_degree().unwrap(), 1);
        assert_eq!(p3.max_degree().unwrap(), 2);
        assert_eq!(k4.min_degree().unwrap(), 3);
        assert_eq!(k4.max_degree().unwrap(), 3);
        assert_eq!(Graph::empty(0).min_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn stable_sets() {
        let k4 = Graph::complete(4);
        assert!(k4.is_stable(&[]).unwrap());
        assert!(!k4.is_stable(&[0, 1]).unwrap());
        assert!(k4.is_stable(&[2]).unwrap());
        assert!(k4.is_stable(&[7]).is_err());
        let c6 = Graph::cycle(6);
        assert!(c6.is_stable(&[0, 2, 4]).unwrap());
    }

    #[test]
    fn connectivity() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::cycle(5).is_connected());
        let c6 = Graph::cycle(6);
        assert!(!c6.connected_within(&[], &[0, 2, 4]).unwrap());
        assert!(c6.connected_within(&[1, 3], &[0, 2, 4]).unwrap());
        assert!(c6.connected_within(&[5, 1], &[0, 2, 4]).unwrap());
        assert!(!c6.connected_within(&[1], &[0, 2, 4]).unwrap());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let (tri, map) = k4.induced_subgraph(&[3, 0, 2]).unwrap();
        assert_eq!(tri, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 3]);
        let c6 = Graph::cycle(6);
        let (iso, _) = c6.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(iso.size(), 0);
        let (same, _) = c6.induced_subgraph(&(0..6).collect::<Vec<_>>()).unwrap();
        assert_eq!(same, c6);
    }

    #[test]
    fn triples() {
        assert_eq!(TripleSet::new(5, 1, 3).unwrap().vertices(), [1, 3, 5]);
        assert!(TripleSet::new(1, 1, 3).is_err());
        assert_eq!(TripleSet::all(5).count(), 10);
        assert_eq!(TripleSet::all(15).count(), 455);
        let k4 = Graph::complete(4);
        assert!(TripleSet::in_graph(&k4, 0, 1, 4).is_err());
    }
}
