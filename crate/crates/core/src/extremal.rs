//! The extremal family `H(k)`: a cycle `x₁y₁x₂y₂…x₂ₖy₂ₖx₁` of length `4k`
//! plus vertices `z₁…zₖ`, with `zᵢ` joined to the antipodal pair `xᵢ`, `xᵢ₊ₖ`.
//!
//! Vertex ids follow the cycle: position `p ∈ 1..=4k` is vertex `p - 1`, odd
//! positions carry `x_{(p+1)/2}` and even positions `y_{p/2}`. The `z`
//! vertices follow as `4k..5k`.

use std::fmt;
use std::str::FromStr;

use crate::cycle::wrap;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Role of a vertex of `H(k)`, with the 1-based index used in labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    X(usize),
    Y(usize),
    Z(usize),
}

impl Role {
    pub fn index(self) -> usize {
        match self {
            Role::X(i) | Role::Y(i) | Role::Z(i) => i,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X(i) => write!(f, "x{i}"),
            Role::Y(i) => write!(f, "y{i}"),
            Role::Z(i) => write!(f, "z{i}"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || digits.starts_with('0')
        {
            return Err(bad());
        }
        let i: usize = digits.parse().map_err(|_| bad())?;
        match kind {
            'x' => Ok(Role::X(i)),
            'y' => Ok(Role::Y(i)),
            'z' => Ok(Role::Z(i)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalGraph {
    k: usize,
    graph: Graph,
}

impl ExtremalGraph {
    /// Builds `H(k)` for any `k ≥ 1`.
    pub fn build(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidK(k));
        }
        let len = 4 * k;
        let mut edges: Vec<(VertexId, VertexId)> = (0..len).map(|p| (p, (p + 1) % len)).collect();
        for i in 1..=k {
            let z = len + i - 1;
            edges.push((z, 2 * i - 2));
            edges.push((z, 2 * (i + k) - 2));
        }
        // For k = 1 the cycle x₁y₁x₂y₂ has length 4 and the edge list is still simple.
        let graph = Graph::from_edges(5 * k, edges)?;
        Ok(ExtremalGraph { k, graph })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Length of the defining cycle, `4k`.
    pub fn cycle_len(&self) -> usize {
        4 * self.k
    }

    pub fn vertex_of_role(&self, role: Role) -> Result<VertexId> {
        let k = self.k;
        let in_range = |i: usize, hi: usize| (1..=hi).contains(&i);
        match role {
            Role::X(i) if in_range(i, 2 * k) => Ok(2 * i - 2),
            Role::Y(i) if in_range(i, 2 * k) => Ok(2 * i - 1),
            Role::Z(i) if in_range(i, k) => Ok(4 * k + i - 1),
            _ => Err(Error::RoleOutOfRange(role.to_string())),
        }
    }

    pub fn role_of_vertex(&self, v: VertexId) -> Result<Role> {
        self.graph.check_vertex(v)?;
        let len = self.cycle_len();
        Ok(if v >= len {
            Role::Z(v - len + 1)
        } else if v.is_multiple_of(2) {
            Role::X(v / 2 + 1)
        } else {
            Role::Y(v / 2 + 1)
        })
    }

    /// 1-based position on the cycle for `x`/`y` vertices, `None` for `z`.
    pub fn cycle_position(&self, v: VertexId) -> Option<usize> {
        (v < self.cycle_len()).then_some(v + 1)
    }

    pub fn vertex_at_position(&self, p: usize) -> VertexId {
        wrap(p as i64, self.cycle_len()) - 1
    }

    /// `x_{[i]_{2k}}`.
    pub fn x(&self, i: i64) -> VertexId {
        2 * wrap(i, 2 * self.k) - 2
    }

    /// `y_{[i]_{2k}}`.
    pub fn y(&self, i: i64) -> VertexId {
        2 * wrap(i, 2 * self.k) - 1
    }

    /// `z_{[i]_k}`.
    pub fn z(&self, i: i64) -> VertexId {
        4 * self.k + wrap(i, self.k) - 1
    }

    pub fn label(&self, v: VertexId) -> String {
        self.role_of_vertex(v)
            .map(|r| r.to_string())
            .unwrap_or_else(|_| v.to_string())
    }

    /// Labels `x1…`, `y1…`, `z1…` indexed by vertex id.
    pub fn labels(&self) -> Vec<String> {
        (0..self.graph.order()).map(|v| self.label(v)).collect()
    }

    pub fn vertex_of_label(&self, label: &str) -> Result<VertexId> {
        self.vertex_of_role(label.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn h1_matches_small_construction() {
        let h = ExtremalGraph::build(1).unwrap();
        let g = h.graph();
        assert_eq!((g.order(), g.size()), (5, 6));
        let v = |l: &str| h.vertex_of_label(l).unwrap();
        for (a, b) in [
            ("x1", "y1"),
            ("y1", "x2"),
            ("x2", "y2"),
            ("y2", "x1"),
            ("z1", "x1"),
            ("z1", "x2"),
        ] {
            assert!(g.has_edge(v(a), v(b)), "{a}{b}");
        }
        assert_eq!(h.labels(), ["x1", "y1", "x2", "y2", "z1"]);
        let zn: BTreeSet<Role> = g
            .neighbors(v("z1"))
            .unwrap()
            .iter()
            .map(|&w| h.role_of_vertex(w).unwrap())
            .collect();
        assert_eq!(zn, BTreeSet::from([Role::X(1), Role::X(2)]));
        assert_eq!(g.degree(v("y1")).unwrap(), 2);
    }

    #[test]
    fn sizes_and_degrees() {
        for k in 1..=12 {
            let h = ExtremalGraph::build(k).unwrap();
            let g = h.graph();
            assert_eq!(g.order(), 5 * k);
            assert_eq!(g.size(), 6 * k);
            assert_eq!(5 * g.size(), 6 * g.order());
            for v in 0..g.order() {
                let expected = match h.role_of_vertex(v).unwrap() {
                    Role::X(_) => 3,
                    Role::Y(_) | Role::Z(_) => 2,
                };
                assert_eq!(g.degree(v).unwrap(), expected);
            }
            assert!(g.is_stable(&g.vertices_of_degree(2)).unwrap());
            for i in 1..=k {
                let z = h.vertex_of_role(Role::Z(i)).unwrap();
                let expect = BTreeSet::from([
                    h.vertex_of_role(Role::X(i)).unwrap(),
                    h.vertex_of_role(Role::X(i + k)).unwrap(),
                ]);
                assert_eq!(g.neighbors(z).unwrap(), &expect);
            }
        }
        let h3 = ExtremalGraph::build(3).unwrap();
        assert_eq!(h3.graph().min_degree().unwrap(), 2);
        assert_eq!(h3.graph().max_degree().unwrap(), 3);
    }

    #[test]
    fn role_lookup_round_trips() {
        let h = ExtremalGraph::build(3).unwrap();
        assert_eq!(h.vertex_of_role(Role::X(4)).unwrap(), 6);
        assert_eq!(h.cycle_position(6), Some(7));
        for v in 0..15 {
            let r = h.role_of_vertex(v).unwrap();
            assert_eq!(h.vertex_of_role(r).unwrap(), v);
        }
        let z2 = h.vertex_of_role(Role::Z(2)).unwrap();
        assert_eq!(h.role_of_vertex(z2).unwrap(), Role::Z(2));
        assert!(h.vertex_of_role(Role::Z(4)).is_err());
        assert!(h.vertex_of_role(Role::X(7)).is_err());
        assert!(h.vertex_of_role(Role::Y(0)).is_err());
        assert!(h.role_of_vertex(15).is_err());
    }

    #[test]
    fn label_parsing() {
        assert_eq!("x12".parse::<Role>().unwrap(), Role::X(12));
        for bad in ["", "x", "w1", "x01", "y-1", "z1a"] {
            assert!(bad.parse::<Role>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rejects_k_zero() {
        assert_eq!(ExtremalGraph::build(0), Err(Error::InvalidK(0)));
    }

    #[test]
    fn h2_edge_from_z1() {
        // z₁ is joined to x₁ and x₃ in H(2).
        let h = ExtremalGraph::build(2).unwrap();
        let v = |l: &str| h.vertex_of_label(l).unwrap();
        let (sub, map) = h
            .graph()
            .induced_subgraph(&[v("x1"), v("x2"), v("z1")])
            .unwrap();
        assert_eq!(sub.size(), 1);
        let (a, b) = sub.edges()[0];
        let mut e = [map[a], map[b]];
        e.sort();
        let mut want = [v("x1"), v("z1")];
        want.sort();
        assert_eq!(e, want);
    }
}
