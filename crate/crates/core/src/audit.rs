//! The edge lower bound `e ≥ 6n/5` for graphs with `κ₃ = 2`, checked on
//! concrete graphs in exact integer arithmetic.
//!
//! `X` is the set of degree-2 vertices, `Y` the rest, and `m'` the number of
//! edges with both ends in `Y`. When `X` is stable, `e = 2|X| + m'`; when every
//! `Y` vertex also has degree at least 3, `5|X| + 2m' ≥ 3n`, and together
//! these give `5e ≥ 6n`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::oracle::{kappa3, lemma1_upper_bound};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityConditions {
    pub m_prime_zero: bool,
    pub delta_is_3: bool,
    pub x_size_is_3n_over_5: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundAudit {
    pub n: usize,
    pub e: usize,
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
    pub m_prime: usize,
    pub x_stable: bool,
    /// Every vertex outside `X` has degree at least 3.
    pub y_degrees_at_least_3: bool,
    /// `5e ≥ 6n`.
    pub bound_holds: bool,
    /// `5e = 6n`.
    pub equality: bool,
    pub equality_conditions: EqualityConditions,
}

impl BoundAudit {
    /// `e = 2|X| + m'`; meaningful when `x_stable`.
    pub fn edge_identity_holds(&self) -> bool {
        self.e == 2 * self.x.len() + self.m_prime
    }

    /// `5|X| + 2m' ≥ 3n`; meaningful when every `Y` vertex has degree ≥ 3.
    pub fn degree_inequality_holds(&self) -> bool {
        5 * self.x.len() + 2 * self.m_prime >= 3 * self.n
    }

    /// `5e ≥ 2(5|X| + 2m')`, the first link of the chain to `5e ≥ 6n`.
    pub fn chain_holds(&self) -> bool {
        5 * self.e >= 2 * (5 * self.x.len() + 2 * self.m_prime)
    }
}

pub fn audit(g: &Graph) -> BoundAudit {
    let n = g.order();
    let e = g.size();
    let degrees = g.degrees();
    let (x, y): (Vec<VertexId>, Vec<VertexId>) = (0..n).partition(|&v| degrees[v] == 2);
    let m_prime = g
        .edges()
        .iter()
        .filter(|&&(u, v)| degrees[u] != 2 && degrees[v] != 2)
        .count();
    let x_stable = g.is_stable(&x).expect("vertices of g");
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    BoundAudit {
        n,
        e,
        y_degrees_at_least_3: y.iter().all(|&v| degrees[v] >= 3),
        bound_holds: 5 * e >= 6 * n,
        equality: 5 * e == 6 * n,
        equality_conditions: EqualityConditions {
            m_prime_zero: m_prime == 0,
            delta_is_3: max_degree == 3,
            x_size_is_3n_over_5: 5 * x.len() == 3 * n,
        },
        x,
        y,
        m_prime,
        x_stable,
    }
}

/// Whenever `5e ≤ 6n`, the minimum-degree bound gives `κ₃ ≤ 2`. Vacuously
/// true for denser graphs.
pub fn kappa3_le_2_when_sparse(g: &Graph) -> Result<bool> {
    if 5 * g.size() > 6 * g.order() {
        return Ok(true);
    }
    Ok(lemma1_upper_bound(g)? <= 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub index: usize,
    pub n: usize,
    pub e: usize,
    pub kappa3: usize,
    pub bound_holds: bool,
    pub equality: bool,
    pub m_prime: usize,
    pub max_degree: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub graphs: usize,
    pub skipped: Vec<(usize, String)>,
    /// Graphs with `κ₃ = 2` and `5e < 6n`.
    pub violations: Vec<SweepEntry>,
    /// Graphs with `κ₃ = 2` where `5e = 6n` does not coincide with
    /// `m' = 0 ∧ Δ = 3`.
    pub equality_mismatches: Vec<SweepEntry>,
    pub kappa3_two: usize,
    /// Per order, the smallest `(e, n)` ratio among graphs with `κ₃ = 2`.
    pub min_ratio: BTreeMap<usize, (usize, usize)>,
    /// Number of graphs per `κ₃` value.
    pub kappa3_histogram: BTreeMap<usize, usize>,
}

/// Computes `κ₃` and the audit for every graph, collecting counterexamples to
/// the bound and to the equality characterization. Disconnected or too small
/// graphs are skipped and listed.
pub fn sweep_bound<I>(corpus: I) -> SweepReport
where
    I: IntoIterator<Item = Graph>,
{
    use rayon::prelude::*;

    let graphs: Vec<Graph> = corpus.into_iter().collect();
    let outcomes: Vec<std::result::Result<SweepEntry, String>> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            if !g.is_connected() {
                return Err("graph is disconnected".to_string());
            }
            let k = kappa3(g).map_err(|e| e.to_string())?;
            let a = audit(g);
            Ok(SweepEntry {
                index,
                n: a.n,
                e: a.e,
                kappa3: k.value,
                bound_holds: a.bound_holds,
                equality: a.equality,
                m_prime: a.m_prime,
                max_degree: g.max_degree().unwrap_or(0),
            })
        })
        .collect();

    let mut report = SweepReport {
        graphs: graphs.len(),
        ..SweepReport::default()
    };
    for (index, outcome) in outcomes.into_iter().enumerate() {
        let entry = match outcome {
            Ok(entry) => entry,
            Err(reason) => {
                report.skipped.push((index, reason));
                continue;
            }
        };
        *report.kappa3_histogram.entry(entry.kappa3).or_default() += 1;
        if entry.kappa3 != 2 {
            continue;
        }
        report.kappa3_two += 1;
        let ratio = report
            .min_ratio
            .entry(entry.n)
            .or_insert((entry.e, entry.n));
        if entry.e * ratio.1 < ratio.0 * entry.n {
            *ratio = (entry.e, entry.n);
        }
        if !entry.bound_holds {
            report.violations.push(entry.clone());
        }
        let conditions = entry.m_prime == 0 && entry.max_degree == 3;
        if entry.equality != conditions {
            report.equality_mismatches.push(entry);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::ExtremalGraph;

    #[test]
    fn h3_meets_the_bound_with_equality() {
        let h = ExtremalGraph::build(3).unwrap();
        let a = audit(h.graph());
        assert_eq!((a.n, a.e, a.x.len(), a.m_prime), (15, 18, 9, 0));
        assert!(a.x_stable && a.bound_holds && a.equality);
        assert_eq!(
            a.equality_conditions,
            EqualityConditions {
                m_prime_zero: true,
                delta_is_3: true,
                x_size_is_3n_over_5: true
            }
        );
        assert!(a.edge_identity_holds() && a.degree_inequality_holds() && a.chain_holds());
    }

    #[test]
    fn k4_and_c5() {
        let a = audit(&Graph::complete(4));
        assert_eq!((a.n, a.e, a.x.len(), a.m_prime), (4, 6, 0, 6));
        assert!(a.bound_holds && !a.equality);
        let a = audit(&Graph::cycle(5));
        assert_eq!((a.n, a.e), (5, 5));
        assert!(!a.bound_holds);
        assert!(!a.x_stable);
        assert_eq!(kappa3(&Graph::cycle(5)).unwrap().value, 1);
    }

    #[test]
    fn sparse_graphs_have_small_bound() {
        assert!(kappa3_le_2_when_sparse(ExtremalGraph::build(5).unwrap().graph()).unwrap());
        assert!(kappa3_le_2_when_sparse(&Graph::cycle(9)).unwrap());
        assert!(kappa3_le_2_when_sparse(&Graph::complete(5)).unwrap());
    }

    #[test]
    fn sweep_small_corpora() {
        let h1 = ExtremalGraph::build(1).unwrap().graph().clone();
        let r = sweep_bound([h1]);
        assert_eq!(r.kappa3_two, 1);
        assert_eq!(r.min_ratio[&5], (6, 5));
        assert!(r.violations.is_empty() && r.equality_mismatches.is_empty());

        let r = sweep_bound([Graph::cycle(5), Graph::complete(4)]);
        assert!(r.violations.is_empty());
        assert_eq!(r.kappa3_histogram, BTreeMap::from([(1, 1), (2, 1)]));

        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = sweep_bound([disconnected]);
        assert_eq!(r.skipped.len(), 1);
    }
}
