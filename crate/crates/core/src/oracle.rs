//! Exact `κ(S)` for 3-sets and `κ₃(G)` by exhaustive labeling search.
//!
//! A packing of `ℓ` internally disjoint trees connecting `S` exists iff the
//! vertices outside `S` can be labeled with `0..=ℓ` (0 = unused) and the edges
//! inside `S` with `0..=ℓ` so that, for every class `i ≥ 1`, `S` is connected
//! in the subgraph formed by `S`, the class-`i` vertices, and the class-`i`
//! edges inside `S`. Edges with an endpoint outside `S` need no label: they
//! belong to the class of that endpoint.
//!
//! The search assigns variables in a fixed canonical order, tries values in
//! increasing order, breaks the symmetry between classes by only opening the
//! next unused class, and prunes a branch as soon as some class can no longer
//! connect `S` through its own and still-unlabeled vertices. The first
//! labeling found is therefore the lexicographically smallest canonical one.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::certificate::TreeCertificate;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, TripleSet, VertexId};

/// Largest graph order the bitset search supports.
pub const MAX_ORACLE_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingResult {
    pub set: TripleSet,
    pub kappa: usize,
    /// A certificate with exactly `kappa` trees; `None` iff `kappa == 0`.
    pub witness: Option<TreeCertificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Vertex(VertexId),
    /// Index into `Search::s_edges`.
    SEdge(usize),
}

struct Search<'g> {
    g: &'g Graph,
    adj: Vec<u64>,
    set: [VertexId; 3],
    s_mask: u64,
    s_edges: Vec<Edge>,
    classes: usize,
    order: Vec<Var>,
    /// `u8::MAX` = unassigned.
    vertex_label: Vec<u8>,
    edge_label: Vec<u8>,
}

const UNSET: u8 = u8::MAX;

impl<'g> Search<'g> {
    fn new(g: &'g Graph, set: TripleSet, classes: usize) -> Self {
        let n = g.order();
        let adj: Vec<u64> = (0..n)
            .map(|v| g.adj(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        let s = set.vertices();
        let s_mask = s.iter().fold(0u64, |m, &v| m | (1 << v));
        let s_edges: Vec<Edge> = [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])]
            .into_iter()
            .filter(|&(u, v)| g.has_edge(u, v))
            .collect();

        // Variables: edges inside S, then the vertices of the component
        // containing S in breadth-first order. Other vertices stay unused.
        let mut order: Vec<Var> = (0..s_edges.len()).map(Var::SEdge).collect();
        let mut seen = s_mask;
        let mut queue: VecDeque<VertexId> = s.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            for &w in g.adj(u) {
                if seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    order.push(Var::Vertex(w));
                    queue.push_back(w);
                }
            }
        }

        let mut vertex_label = vec![0u8; n];
        for var in &order {
            if let Var::Vertex(v) = var {
                vertex_label[*v] = UNSET;
            }
        }
        Search {
            g,
            adj,
            set: s,
            s_mask,
            edge_label: vec![UNSET; s_edges.len()],
            s_edges,
            classes,
            order,
            vertex_label,
        }
    }

    /// Whether class `class` connects `S`, using assigned members only
    /// (`optimistic == false`) or also unassigned ones.
    fn class_connects(&self, class: u8, optimistic: bool) -> bool {
        let ok = |label: u8| label == class || (optimistic && label == UNSET);
        let mut members = self.s_mask;
        for (v, &label) in self.vertex_label.iter().enumerate() {
            if ok(label) {
                members |= 1 << v;
            }
        }
        let mut s_links = [0u64; 64];
        for (i, &(u, v)) in self.s_edges.iter().enumerate() {
            if ok(self.edge_label[i]) {
                s_links[u] |= 1 << v;
                s_links[v] |= 1 << u;
            }
        }
        let start = self.set[0];
        let mut reached = 1u64 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = if self.s_mask & (1 << u) != 0 {
                (self.adj[u] & members & !self.s_mask) | s_links[u]
            } else {
                self.adj[u] & members
            };
            let fresh = next & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached & self.s_mask == self.s_mask
    }

    fn feasible(&self) -> bool {
        (1..=self.classes as u8).all(|c| self.class_connects(c, true))
    }

    fn complete(&self) -> bool {
        (1..=self.classes as u8).all(|c| self.class_connects(c, false))
    }

    fn run(&mut self) -> bool {
        if !self.feasible() {
            return false;
        }
        self.descend(0, 0)
    }

    fn descend(&mut self, depth: usize, used: u8) -> bool {
        if self.complete() {
            // Remaining variables take label 0, the smallest completion.
            for var in &self.order[depth..] {
                match *var {
                    Var::Vertex(v) => self.vertex_label[v] = 0,
                    Var::SEdge(i) => self.edge_label[i] = 0,
                }
            }
            return true;
        }
        let Some(&var) = self.order.get(depth) else {
            return false;
        };
        let top = (used + 1).min(self.classes as u8);
        for label in 0..=top {
            self.assign(var, label);
            if self.feasible() && self.descend(depth + 1, used.max(label)) {
                return true;
            }
        }
        self.assign(var, UNSET);
        false
    }

    fn assign(&mut self, var: Var, label: u8) {
        match var {
            Var::Vertex(v) => self.vertex_label[v] = label,
            Var::SEdge(i) => self.edge_label[i] = label,
        }
    }

    /// Extracts one tree per class: a breadth-first spanning tree of the
    /// class component containing `S`, with non-`S` leaves pruned.
    fn certificate(&self, set: TripleSet) -> TreeCertificate {
        let trees = (1..=self.classes as u8).map(|class| {
            let member = |v: VertexId| self.s_mask & (1 << v) != 0 || self.vertex_label[v] == class;
            let s_edge_ok = |u: VertexId, v: VertexId| {
                self.s_edges
                    .iter()
                    .position(|&e| e == edge(u, v))
                    .is_some_and(|i| self.edge_label[i] == class)
            };
            let mut parent: Vec<Option<VertexId>> = vec![None; self.g.order()];
            let mut seen = vec![false; self.g.order()];
            let start = self.set[0];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.g.adj(u) {
                    if seen[w] || !member(w) {
                        continue;
                    }
                    let both_in_s = self.s_mask & (1 << u) != 0 && self.s_mask & (1 << w) != 0;
                    if both_in_s && !s_edge_ok(u, w) {
                        continue;
                    }
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
            // Keep exactly the union of the tree paths from S to the root.
            let mut edges = BTreeSet::new();
            for &s in &self.set {
                let mut v = s;
                while let Some(p) = parent[v] {
                    if !edges.insert(edge(v, p)) {
                        break;
                    }
                    v = p;
                }
            }
            edges
        });
        TreeCertificate {
            set,
            trees: trees.collect(),
            case_tag: None,
        }
    }
}

fn check_oracle_input(g: &Graph, set: TripleSet) -> Result<()> {
    if g.order() > MAX_ORACLE_ORDER {
        return Err(Error::GraphTooLarge {
            n: g.order(),
            max: MAX_ORACLE_ORDER,
        });
    }
    for v in set.vertices() {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// Searches for `trees` internally disjoint trees connecting `set`.
pub fn packing_exists(g: &Graph, set: TripleSet, trees: usize) -> Result<Option<TreeCertificate>> {
    if trees < 1 {
        return Err(Error::InvalidTreeCount(trees));
    }
    check_oracle_input(g, set)?;
    Ok(search(g, set, trees))
}

fn search(g: &Graph, set: TripleSet, trees: usize) -> Option<TreeCertificate> {
    // Each tree uses its own edge at every vertex of S.
    let cap = set
        .vertices()
        .iter()
        .map(|&v| g.adj(v).len())
        .min()
        .unwrap_or(0);
    if trees > cap {
        return None;
    }
    let mut s = Search::new(g, set, trees);
    s.run().then(|| s.certificate(set))
}

/// `κ(S)` with a witness. Sets that are not connected in `g` have `κ(S) = 0`.
pub fn kappa_s(g: &Graph, set: TripleSet) -> Result<PackingResult> {
    check_oracle_input(g, set)?;
    Ok(kappa_s_capped(g, set, usize::MAX))
}

/// `min(κ(S), cap)` with a witness.
fn kappa_s_capped(g: &Graph, set: TripleSet, cap: usize) -> PackingResult {
    let mut best = PackingResult {
        set,
        kappa: 0,
        witness: None,
    };
    let mut l = 1;
    while l <= cap {
        match search(g, set, l) {
            Some(cert) => {
                best.kappa = l;
                best.witness = Some(cert);
                l += 1;
            }
            None => break,
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kappa3 {
    pub value: usize,
    /// Canonically smallest triple attaining the minimum.
    pub argmin: TripleSet,
    /// `κ(S)` and its witness for the argmin triple.
    pub witness: PackingResult,
}

/// `κ₃(G)`: the minimum of `κ(S)` over all 3-sets `S`.
///
/// Every triple is first probed in parallel for a packing of `δ(G)` trees
/// (no triple can exceed that); the triples that fail are then resolved
/// exactly in canonical order, so the reported argmin does not depend on
/// scheduling.
pub fn kappa3(g: &Graph) -> Result<Kappa3> {
    let n = g.order();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if n > MAX_ORACLE_ORDER {
        return Err(Error::GraphTooLarge {
            n,
            max: MAX_ORACLE_ORDER,
        });
    }
    let delta = g.min_degree()?;
    let probe = delta.max(1);
    let triples: Vec<TripleSet> = TripleSet::all(n).collect();

    let probe_fails: Vec<bool> = triples
        .par_iter()
        .map(|&t| search(g, t, probe).is_none())
        .collect();

    // A failed probe means κ(S) < probe. Capping the exact search at the
    // running minimum keeps it exact for every value that can lower it.
    let mut best: Option<PackingResult> = None;
    for (t, _) in triples.iter().zip(&probe_fails).filter(|(_, f)| **f) {
        let cap = best.as_ref().map_or(probe - 1, |b| b.kappa);
        let r = kappa_s_capped(g, *t, cap);
        if best.as_ref().is_none_or(|b| r.kappa < b.kappa) {
            let done = r.kappa == 0;
            best = Some(r);
            if done {
                break;
            }
        }
    }
    let witness = match best {
        Some(r) => r,
        None => kappa_s_capped(g, triples[0], delta),
    };
    let result = Kappa3 {
        value: witness.kappa,
        argmin: witness.set,
        witness,
    };
    if g.is_connected() {
        let bound = lemma1_upper_bound(g)?;
        assert!(
            result.value <= bound,
            "κ₃ = {} exceeds the minimum-degree bound {}",
            result.value,
            bound
        );
        if result.value == 2 {
            assert!(
                g.is_stable(&g.vertices_of_degree(2))?,
                "κ₃ = 2 but two degree-2 vertices are adjacent"
            );
        }
    }
    Ok(result)
}

/// The upper bound on `κ₃` from the minimum degree: `δ`, or `δ - 1` when two
/// vertices of minimum degree are adjacent.
pub fn lemma1_upper_bound(g: &Graph) -> Result<usize> {
    let delta = g.min_degree()?;
    let minimal = g.vertices_of_degree(delta);
    Ok(if g.is_stable(&minimal)? {
        delta
    } else {
        delta.saturating_sub(1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn k4_has_two_trees_for_every_triple() {
        let k4 = Graph::complete(4);
        for t in TripleSet::all(4) {
            let r = kappa_s(&k4, t).unwrap();
            assert_eq!(r.kappa, 2);
            let w = r.witness.unwrap();
            assert_eq!(w.tree_count(), 2);
            verify_certificate(&k4, &w).unwrap();
        }
    }

    #[test]
    fn k4_certificate_is_path_plus_star() {
        let k4 = Graph::complete(4);
        let w = packing_exists(&k4, TripleSet::new(0, 1, 2).unwrap(), 2)
            .unwrap()
            .unwrap();
        let mut trees = w.trees.clone();
        trees.sort_by_key(|t| t.iter().any(|&(_, v)| v == 3));
        let path: BTreeSet<Edge> = trees[0].clone();
        assert_eq!(path.len(), 2);
        assert!(path.iter().all(|&(u, v)| u < 3 && v < 3));
        assert_eq!(trees[1], BTreeSet::from([(0, 3), (1, 3), (2, 3)]));
    }

    #[test]
    fn c6_admits_no_two_packings() {
        let c6 = Graph::cycle(6);
        for t in TripleSet::all(6) {
            assert_eq!(packing_exists(&c6, t, 2).unwrap(), None);
            let one = packing_exists(&c6, t, 1).unwrap().unwrap();
            verify_certificate(&c6, &one).unwrap();
        }
    }

    #[test]
    fn disconnected_sets_have_kappa_zero() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = kappa_s(&g, TripleSet::new(0, 1, 2).unwrap()).unwrap();
        assert_eq!(r.kappa, 0);
        assert!(r.witness.is_none());
        let k = kappa3(&g).unwrap();
        assert_eq!(k.value, 0);
        assert_eq!(k.argmin, TripleSet::new(0, 1, 2).unwrap());
    }

    #[test]
    fn rejects_bad_requests() {
        let k4 = Graph::complete(4);
        let t = TripleSet::new(0, 1, 2).unwrap();
        assert_eq!(packing_exists(&k4, t, 0), Err(Error::InvalidTreeCount(0)));
        assert_eq!(kappa3(&Graph::path(2)), Err(Error::TooFewVertices(2)));
        let big = Graph::cycle(65);
        assert!(matches!(kappa3(&big), Err(Error::GraphTooLarge { .. })));
        assert!(kappa_s(&k4, TripleSet::new(0, 1, 9).unwrap()).is_err());
    }

    #[test]
    fn cycles_have_kappa3_one() {
        for n in 3..=9 {
            let c = Graph::cycle(n);
            assert_eq!(kappa3(&c).unwrap().value, 1, "C{n}");
        }
    }

    #[test]
    fn lemma1_bound_examples() {
        assert_eq!(lemma1_upper_bound(&Graph::cycle(6)).unwrap(), 1);
        assert_eq!(lemma1_upper_bound(&Graph::complete(4)).unwrap(), 2);
        assert_eq!(lemma1_upper_bound(&Graph::path(4)).unwrap(), 1);
    }

    #[test]
    fn complete_graphs() {
        // K5: every S has two S-S edges usable plus two outside vertices.
        let k5 = Graph::complete(5);
        let k = kappa3(&k5).unwrap();
        assert_eq!(k.value, 3);
        verify_certificate(&k5, k.witness.witness.as_ref().unwrap()).unwrap();
    }
}
