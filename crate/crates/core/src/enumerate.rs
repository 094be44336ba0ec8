//! Small connected graphs up to isomorphism.
//!
//! Canonical forms come from colour refinement followed by a pruned search over
//! the orderings compatible with the refined partition. Graphs of order `n`
//! are generated by attaching a new vertex to every non-empty subset of each
//! class of order `n - 1`; every connected graph has a vertex whose removal
//! leaves it connected, so nothing is missed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order whose upper triangle fits in a `u64` code.
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Upper-triangle adjacency bits in column order under the canonical
/// labeling, most significant bit first. Equal codes mean isomorphic graphs of
/// the same order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u64,
}

fn rows(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.adj(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Ordered cells of the coarsest equitable partition reachable from the
/// unit partition. Cells are ordered by invariant signatures, never by ids.
fn refine(rows: &[u64]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = (0..n)
                    .filter(|&w| rows[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut sorted: Vec<_> = signatures.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted
                .into_iter()
                .enumerate()
                .map(|(i, s)| (s, i))
                .collect()
        };
        colour = signatures.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            break;
        }
        classes = ranks.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

struct Search<'a> {
    rows: &'a [u64],
    cells: Vec<Vec<usize>>,
    n: usize,
    total: u32,
    order: Vec<usize>,
    used: u64,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | (self.rows[v] >> u & 1))
    }

    /// Places the vertex for position `order.len()`; `code` holds the bits of
    /// the columns placed so far.
    fn run(&mut self, cell: usize, code: u64) {
        let depth = self.order.len();
        if depth == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = if self.cells[cell].iter().all(|&v| self.used >> v & 1 == 1) {
            cell + 1
        } else {
            cell
        };
        let width = depth as u32;
        let prefix_len = width * (width + 1) / 2;
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let next = code << width | self.column(v);
            if let Some((best, _)) = &self.best {
                let best_prefix = best >> (self.total - prefix_len);
                if next < best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.run(cell, next);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

fn canonical_order(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::GraphTooLarge {
            n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let rows = rows(g);
    let mut search = Search {
        cells: refine(&rows),
        rows: &rows,
        n,
        total: (n * n.saturating_sub(1) / 2) as u32,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    if n == 0 {
        return Ok((CanonicalCode { n, bits: 0 }, Vec::new()));
    }
    search.run(0, 0);
    let (bits, order) = search.best.expect("at least one ordering");
    Ok((CanonicalCode { n, bits }, order))
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_order(g)?.0)
}

/// `g` relabeled canonically: isomorphic graphs give equal results.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_order(g)?;
    let mut perm = vec![0; order.len()];
    for (position, &v) in order.iter().enumerate() {
        perm[v] = position;
    }
    g.relabel(&perm)
}

/// One canonical representative per isomorphism class of connected graphs of
/// order `n`, sorted by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.pop().unwrap_or_default())
}

/// `result[i]` holds the connected graphs of order `i + 1`, for orders `1..=max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    use rayon::prelude::*;

    if max_n > MAX_CANONICAL_ORDER {
        return Err(Error::GraphTooLarge {
            n: max_n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)]);
    for n in 2..=max_n {
        let previous = levels.last().expect("previous level");
        let mut found: Vec<(CanonicalCode, Graph)> = previous
            .par_iter()
            .flat_map_iter(|g| {
                (1u64..1 << (n - 1)).map(move |mask| {
                    let mut edges = g.edges();
                    edges.extend(
                        (0..n - 1)
                            .filter(|&v| mask >> v & 1 == 1)
                            .map(|v| (v, n - 1)),
                    );
                    let h = Graph::from_edges(n, edges).expect("new vertex adds fresh edges");
                    let form = canonical_form(&h).expect("order checked");
                    (canonical_code(&form).expect("order checked"), form)
                })
            })
            .collect();
        found.sort_by_key(|(code, _)| *code);
        found.dedup_by_key(|(code, _)| *code);
        levels.push(found.into_iter().map(|(_, g)| g).collect());
    }
    Ok(levels)
}
