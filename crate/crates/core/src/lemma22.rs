//! Connected graphs of order 10 and size 12 cannot have `κ₃ = 2`.
//!
//! Such a graph meets `5e = 6n` with equality, so if `κ₃ = 2` it has six
//! pairwise non-adjacent degree-2 vertices `x₁…x₆` and four pairwise
//! non-adjacent degree-3 vertices `y₁…y₄`. Each `xᵢ` therefore picks a 2-subset
//! of `Y` and every `yⱼ` is picked exactly three times. This module enumerates
//! all such graphs, removes isomorphic copies and runs the oracle on each.
//!
//! Vertex ids: `xᵢ ↦ i - 1`, `yⱼ ↦ 5 + j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::audit::audit;
use crate::error::Result;
use crate::graph::{Graph, TripleSet, VertexId};
use crate::oracle::{kappa3, kappa_s};

pub const X_COUNT: usize = 6;
pub const Y_COUNT: usize = 4;

/// The six 2-subsets of `{0, 1, 2, 3}` in lexicographic order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// For each `x`, the index into [`PAIRS`] of its two `y` neighbors.
pub type Assignment = [u8; X_COUNT];

pub fn x_vertex(i: usize) -> VertexId {
    i - 1
}

pub fn y_vertex(j: usize) -> VertexId {
    X_COUNT + j - 1
}

pub fn graph_of(assignment: &Assignment) -> Graph {
    let edges = assignment.iter().enumerate().flat_map(|(x, &p)| {
        let (a, b) = PAIRS[p as usize];
        [(x, X_COUNT + a), (x, X_COUNT + b)]
    });
    Graph::from_edges(X_COUNT + Y_COUNT, edges).expect("assignment graph is simple")
}

fn pair_index(a: usize, b: usize) -> u8 {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    PAIRS
        .iter()
        .position(|&p| p == (a, b))
        .expect("distinct y pair") as u8
}

/// `K₄` on `Y` with every edge subdivided once:
/// `x₁{y₁,y₂}, x₂{y₁,y₃}, x₃{y₁,y₄}, x₄{y₂,y₃}, x₅{y₂,y₄}, x₆{y₃,y₄}`.
pub fn subdivided_k4() -> Graph {
    graph_of(&[0, 1, 2, 3, 4, 5])
}

/// The 4-cycle `y₁y₃y₄y₂` with `y₁y₂` and `y₃y₄` doubled, every edge subdivided:
/// `x₁{y₁,y₂}, x₂{y₁,y₂}, x₃{y₁,y₃}, x₄{y₂,y₄}, x₅{y₃,y₄}, x₆{y₃,y₄}`.
pub fn subdivided_doubled_c4() -> Graph {
    graph_of(&[0, 0, 1, 4, 5, 5])
}

/// Canonical form under relabelings that preserve the two sides: the
/// lexicographically smallest sorted assignment over all 24 relabelings of
/// `Y` (sorting absorbs the 720 relabelings of `X`).
pub fn canonical_key(assignment: &Assignment) -> Assignment {
    let mut best: Option<Assignment> = None;
    for perm in permutations4() {
        let mut mapped: Assignment = assignment.map(|p| {
            let (a, b) = PAIRS[p as usize];
            pair_index(perm[a], perm[b])
        });
        mapped.sort_unstable();
        if best.is_none_or(|b| mapped < b) {
            best = Some(mapped);
        }
    }
    best.expect("24 permutations")
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Reads a graph with six degree-2 and four degree-3 vertices, each degree-2
/// vertex adjacent to two degree-3 vertices, as an assignment (sides ordered by
/// vertex id). `None` if the graph does not have this shape.
pub fn assignment_of(g: &Graph) -> Option<Assignment> {
    let xs = g.vertices_of_degree(2);
    let ys = g.vertices_of_degree(3);
    if xs.len() != X_COUNT || ys.len() != Y_COUNT || g.order() != X_COUNT + Y_COUNT {
        return None;
    }
    let mut out = [0u8; X_COUNT];
    for (i, &x) in xs.iter().enumerate() {
        let ns: Vec<usize> = g
            .neighbors(x)
            .ok()?
            .iter()
            .map(|w| ys.iter().position(|y| y == w))
            .collect::<Option<_>>()?;
        out[i] = pair_index(ns[0], ns[1]);
    }
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFamily {
    /// Assignments with every `y` used three times, before the connectivity filter.
    pub labelled_total: usize,
    /// Connected labelled assignments.
    pub labelled_connected: usize,
    /// One assignment per isomorphism class of connected candidates, in order
    /// of canonical key.
    pub classes: Vec<Assignment>,
}

/// All connected candidates, counted in labelled form and up to isomorphism.
pub fn enumerate_lemma22_candidates() -> CandidateFamily {
    let mut labelled_total = 0;
    let mut labelled_connected = 0;
    let mut classes: BTreeMap<Assignment, ()> = BTreeMap::new();
    let mut assignment = [0u8; X_COUNT];
    loop {
        let mut uses = [0usize; Y_COUNT];
        for &p in &assignment {
            let (a, b) = PAIRS[p as usize];
            uses[a] += 1;
            uses[b] += 1;
        }
        if uses == [3; Y_COUNT] {
            labelled_total += 1;
            if graph_of(&assignment).is_connected() {
                labelled_connected += 1;
                classes.insert(canonical_key(&assignment), ());
            }
        }
        // Odometer over 6^6 assignments.
        let mut i = 0;
        loop {
            if i == X_COUNT {
                return CandidateFamily {
                    labelled_total,
                    labelled_connected,
                    classes: classes.into_keys().collect(),
                };
            }
            assignment[i] += 1;
            if assignment[i] < PAIRS.len() as u8 {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateResult {
    /// `y` neighbors of `x₁…x₆`, 1-based.
    pub neighbors: Vec<(usize, usize)>,
    pub kappa3: usize,
    /// Minimizing triple, as vertex ids.
    pub argmin: [VertexId; 3],
    pub m_prime_zero: bool,
    pub delta_is_3: bool,
    pub x_size_is_3n_over_5: bool,
}

/// Why the candidate family is exhaustive: an order-10 size-12 graph meets the
/// bound with equality, which forces the shape below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub n: usize,
    pub e: usize,
    pub equality: bool,
    pub x_size: usize,
    pub y_size: usize,
    pub y_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma22Report {
    pub reduction: Reduction,
    pub labelled_total: usize,
    pub labelled_connected: usize,
    pub classes: usize,
    pub candidates: Vec<CandidateResult>,
    /// Candidates with `κ₃ ≠ 1`.
    pub counterexamples: Vec<CandidateResult>,
    pub subdivided_k4_in_family: bool,
    pub subdivided_doubled_c4_in_family: bool,
    pub h2_in_family: bool,
    /// `κ({x₁, x₂, x₄})` in [`subdivided_k4`].
    pub subdivided_k4_triple_kappa: usize,
    /// `κ({x₁, x₃, x₅})` in [`subdivided_doubled_c4`].
    pub subdivided_doubled_c4_triple_kappa: usize,
}

impl Lemma22Report {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
            && self.subdivided_k4_in_family
            && self.subdivided_doubled_c4_in_family
            && self.h2_in_family
            && self.subdivided_k4_triple_kappa == 1
            && self.subdivided_doubled_c4_triple_kappa == 1
    }
}

pub fn verify_lemma22() -> Result<Lemma22Report> {
    let (n, e) = (X_COUNT + Y_COUNT, 12);
    // 5e = 6n forces |X| = 3n/5 and all of Y at degree exactly 3.
    let x_size = 3 * n / 5;
    let reduction = Reduction {
        n,
        e,
        equality: 5 * e == 6 * n,
        x_size,
        y_size: n - x_size,
        y_degree: 2 * x_size / (n - x_size),
    };

    let family = enumerate_lemma22_candidates();
    let mut candidates = Vec::with_capacity(family.classes.len());
    for assignment in &family.classes {
        let g = graph_of(assignment);
        let k = kappa3(&g)?;
        let a = audit(&g);
        candidates.push(CandidateResult {
            neighbors: assignment
                .iter()
                .map(|&p| (PAIRS[p as usize].0 + 1, PAIRS[p as usize].1 + 1))
                .collect(),
            kappa3: k.value,
            argmin: k.argmin.vertices(),
            m_prime_zero: a.equality_conditions.m_prime_zero,
            delta_is_3: a.equality_conditions.delta_is_3,
            x_size_is_3n_over_5: a.equality_conditions.x_size_is_3n_over_5,
        });
    }
    let counterexamples = candidates
        .iter()
        .filter(|c| c.kappa3 != 1)
        .cloned()
        .collect();

    let in_family = |g: &Graph| {
        assignment_of(g)
            .map(|a| family.classes.binary_search(&canonical_key(&a)).is_ok())
            .unwrap_or(false)
    };
    let h2 = crate::extremal::ExtremalGraph::build(2)?;
    let named = |g: &Graph, [a, b, c]: [usize; 3]| -> Result<usize> {
        let s = TripleSet::new(x_vertex(a), x_vertex(b), x_vertex(c))?;
        Ok(kappa_s(g, s)?.kappa)
    };

    Ok(Lemma22Report {
        reduction,
        labelled_total: family.labelled_total,
        labelled_connected: family.labelled_connected,
        classes: family.classes.len(),
        candidates,
        counterexamples,
        subdivided_k4_in_family: in_family(&subdivided_k4()),
        subdivided_doubled_c4_in_family: in_family(&subdivided_doubled_c4()),
        h2_in_family: in_family(h2.graph()),
        subdivided_k4_triple_kappa: named(&subdivided_k4(), [1, 2, 4])?,
        subdivided_doubled_c4_triple_kappa: named(&subdivided_doubled_c4(), [1, 3, 5])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_classes_have_the_expected_shape() {
        for g in [subdivided_k4(), subdivided_doubled_c4()] {
            assert_eq!((g.order(), g.size()), (10, 12));
            assert!(g.is_connected());
            let a = audit(&g);
            assert!(a.equality && a.x_stable && a.equality_conditions.m_prime_zero);
        }
        assert!(subdivided_doubled_c4().has_edge(x_vertex(2), y_vertex(2)));
        assert!(subdivided_k4().has_edge(x_vertex(6), y_vertex(4)));
    }

    #[test]
    fn canonical_key_is_invariant_under_y_relabeling() {
        let a: Assignment = [0, 0, 1, 4, 5, 5];
        for perm in permutations4() {
            let relabeled = a.map(|p| {
                let (u, v) = PAIRS[p as usize];
                pair_index(perm[u], perm[v])
            });
            assert_eq!(canonical_key(&relabeled), canonical_key(&a));
        }
        assert_ne!(canonical_key(&a), canonical_key(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(permutations4().len(), 24);
    }

    #[test]
    fn assignment_round_trip() {
        let a: Assignment = [0, 1, 2, 3, 4, 5];
        assert_eq!(assignment_of(&graph_of(&a)), Some(a));
        assert_eq!(assignment_of(&Graph::cycle(10)), None);
    }
}
