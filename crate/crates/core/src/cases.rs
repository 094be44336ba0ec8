//! Two internally disjoint trees for every 3-set of `H(k)`, `k ≠ 2`.
//!
//! A 3-set is classified by the multiset of its roles into one of ten cases.
//! Each case has a normal form: an ordering of `S` and a position of its
//! members on the cycle under which the trees are given by explicit segment
//! and chord formulas. A set that is not in normal form is brought there by an
//! automorphism of `H(k)` (a rotation of the cycle by whole `x`/`y` steps,
//! optionally composed with a reflection) together with a reordering of `S`;
//! the trees are built in that frame and mapped back. Every certificate is
//! checked before it is returned.
//!
//! Case tags name the subcase that fired. See `CASE_NOTES.md` at the crate
//! root for the tag list and for the normal forms that differ from a literal
//! reading of the formulas.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::certificate::{verify_certificate, TreeCertificate};
use crate::cycle::{distance, on_walk, wrap};
use crate::error::{Error, Result};
use crate::extremal::{ExtremalGraph, Role};
use crate::graph::{edge, Edge, TripleSet, VertexId};

/// Case number `1..=10` of a 3-set of `H(k)` by its role multiset:
/// `xxx→1, zzz→2, xxz→3, xzz→4, yyy→5, yyx→6, yyz→7, yxx→8, yzz→9, yxz→10`.
pub fn classify(h: &ExtremalGraph, set: TripleSet) -> Result<u8> {
    let mut counts = [0u8; 3];
    for v in set.vertices() {
        match h.role_of_vertex(v)? {
            Role::X(_) => counts[0] += 1,
            Role::Y(_) => counts[1] += 1,
            Role::Z(_) => counts[2] += 1,
        }
    }
    Ok(match counts {
        [3, 0, 0] => 1,
        [0, 0, 3] => 2,
        [2, 0, 1] => 3,
        [1, 0, 2] => 4,
        [0, 3, 0] => 5,
        [1, 2, 0] => 6,
        [0, 2, 1] => 7,
        [2, 1, 0] => 8,
        [0, 1, 2] => 9,
        [1, 1, 1] => 10,
        _ => unreachable!("three roles always sum to 3"),
    })
}

/// An automorphism of `H(k)`: optional reflection `p ↦ 2 - p` of cycle
/// positions, followed by a rotation by `shift` steps of `x` indices.
#[derive(Clone, Copy, Debug)]
struct Symmetry {
    reflect: bool,
    shift: i64,
}

impl Symmetry {
    fn all(k: usize) -> impl Iterator<Item = Symmetry> {
        let steps = 2 * k as i64;
        [false, true]
            .into_iter()
            .flat_map(move |reflect| (0..steps).map(move |shift| Symmetry { reflect, shift }))
    }

    fn apply(self, role: Role, k: usize) -> Role {
        let (k1, k2) = (k, 2 * k);
        let role = if self.reflect {
            match role {
                Role::X(i) => Role::X(wrap(2 - i as i64, k2)),
                Role::Y(i) => Role::Y(wrap(1 - i as i64, k2)),
                Role::Z(i) => Role::Z(wrap(2 - i as i64, k1)),
            }
        } else {
            role
        };
        let s = self.shift;
        match role {
            Role::X(i) => Role::X(wrap(i as i64 + s, k2)),
            Role::Y(i) => Role::Y(wrap(i as i64 + s, k2)),
            Role::Z(i) => Role::Z(wrap(i as i64 + s, k1)),
        }
    }

    fn permutation(self, h: &ExtremalGraph) -> Vec<VertexId> {
        (0..h.graph().order())
            .map(|v| {
                let r = h.role_of_vertex(v).expect("vertex of H");
                h.vertex_of_role(self.apply(r, h.k())).expect("role of H")
            })
            .collect()
    }
}

/// Cycle arithmetic and tree assembly in a normalized frame.
struct Frame<'h> {
    h: &'h ExtremalGraph,
    k: i64,
    len: usize,
}

impl<'h> Frame<'h> {
    fn new(h: &'h ExtremalGraph) -> Self {
        Frame {
            h,
            k: h.k() as i64,
            len: h.cycle_len(),
        }
    }

    fn x(&self, i: i64) -> VertexId {
        self.h.x(i)
    }

    fn y(&self, i: i64) -> VertexId {
        self.h.y(i)
    }

    fn z(&self, i: i64) -> VertexId {
        self.h.z(i)
    }

    fn pos(&self, v: VertexId) -> usize {
        self.h.cycle_position(v).expect("cycle vertex")
    }

    /// Whether `v` lies on `from C to`, endpoints included as requested.
    fn on(&self, v: VertexId, from: VertexId, to: VertexId, start: bool, end: bool) -> bool {
        on_walk(
            self.len,
            self.pos(from),
            self.pos(to),
            self.pos(v),
            start,
            end,
        )
    }

    /// `v ∈ V(from C to)`.
    fn on_closed(&self, v: VertexId, from: VertexId, to: VertexId) -> bool {
        self.on(v, from, to, true, true)
    }

    /// `v ∈ V(from^ C to^)`.
    fn on_open(&self, v: VertexId, from: VertexId, to: VertexId) -> bool {
        self.on(v, from, to, false, false)
    }

    /// `|from C to|`.
    fn dist(&self, from: VertexId, to: VertexId) -> usize {
        distance(self.len, self.pos(from), self.pos(to))
    }

    fn tree(&self) -> TreeBuilder<'_, 'h> {
        TreeBuilder {
            frame: self,
            edges: BTreeSet::new(),
        }
    }
}

struct TreeBuilder<'f, 'h> {
    frame: &'f Frame<'h>,
    edges: BTreeSet<Edge>,
}

impl TreeBuilder<'_, '_> {
    /// Adds the segment `from C to`.
    fn walk(mut self, from: VertexId, to: VertexId) -> Self {
        let f = self.frame;
        let (a, steps) = (f.pos(from), f.dist(from, to));
        for i in 0..steps {
            let u = f.h.vertex_at_position(a + i);
            let v = f.h.vertex_at_position(a + i + 1);
            self.edges.insert(edge(u, v));
        }
        self
    }

    /// Adds the path through `vs` in order.
    fn path(mut self, vs: &[VertexId]) -> Self {
        for w in vs.windows(2) {
            self.edges.insert(edge(w[0], w[1]));
        }
        self
    }

    fn done(self) -> BTreeSet<Edge> {
        self.edges
    }
}

type Built = (&'static str, [BTreeSet<Edge>; 2]);

/// `S = {x_a, x_b, x_c}` with cyclic order `a, b, c` and `|x_a C x_b| ≤ |C|/3`.
fn case1(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let (xa, xb, xc) = (f.x(a), f.x(b), f.x(c));
    if !f.on_open(xc, xb, xa) || 3 * f.dist(xa, xb) > f.len {
        return None;
    }
    let k = f.k;
    let xb2 = f.x(b + k);
    if f.on(xb2, xc, xa, true, false) {
        let t1 = f.tree().walk(xa, xb).walk(xb, xc).done();
        let t2 = f
            .tree()
            .walk(xc, xb2)
            .walk(xb2, xa)
            .path(&[xb2, f.z(b), xb])
            .done();
        Some(("1.1", [t1, t2]))
    } else if f.on_open(xb2, xb, xc) {
        let xa2 = f.x(a + k);
        let t1 = f.tree().walk(xc, xa).walk(xa, xb).done();
        let t2 = f
            .tree()
            .walk(xb, xa2)
            .walk(xa2, xc)
            .path(&[xa2, f.z(a), xa])
            .done();
        Some(("1.2", [t1, t2]))
    } else {
        None
    }
}

/// `S = {z_a, z_b, z_c}` with `a < b < c`.
fn case2(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    if !(a < b && b < c) {
        return None;
    }
    let k = f.k;
    let t1 = f
        .tree()
        .path(&[f.z(a), f.x(a)])
        .walk(f.x(a), f.x(b))
        .walk(f.x(b), f.x(c))
        .path(&[f.x(c), f.z(c)])
        .path(&[f.x(b), f.z(b)])
        .done();
    let t2 = f
        .tree()
        .path(&[f.z(a), f.x(a + k)])
        .walk(f.x(a + k), f.x(b + k))
        .walk(f.x(b + k), f.x(c + k))
        .path(&[f.x(c + k), f.z(c)])
        .path(&[f.x(b + k), f.z(b)])
        .done();
    Some(("2", [t1, t2]))
}

/// `S = {x_a, x_b, z_c}`.
fn case3(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    let (xa, xb, xc, xck, zc) = (f.x(a), f.x(b), f.x(c), f.x(c + k), f.z(c));
    if f.on_closed(xa, xc, xck) && f.on_closed(xb, xck, xc) {
        let t1 = f.tree().walk(xa, xck).walk(xck, xb).path(&[xck, zc]).done();
        let t2 = f.tree().walk(xb, xc).walk(xc, xa).path(&[xc, zc]).done();
        return Some(("3.1", [t1, t2]));
    }
    // Both in the open half x_c^ C x_{c+k}^, in the order x_a, x_b.
    if f.on_open(xa, xc, xck) && f.on_open(xb, xa, xck) {
        let xb2 = f.x(b + k);
        let t1 = f.tree().walk(xa, xb).walk(xb, xck).path(&[xck, zc]).done();
        let t2 = f
            .tree()
            .path(&[xb, f.z(b), xb2])
            .walk(xb2, xc)
            .walk(xc, xa)
            .path(&[xc, zc])
            .done();
        return Some(("3.2", [t1, t2]));
    }
    None
}

/// `S = {x_a, z_b, z_c}` with `b < c` and `x_a ∈ V(x_b C x_c)`.
fn case4(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    let (xa, xb, xc) = (f.x(a), f.x(b), f.x(c));
    if b >= c || !f.on_closed(xa, xb, xc) {
        return None;
    }
    let t1 = f
        .tree()
        .walk(xa, xc)
        .walk(xc, f.x(b + k))
        .path(&[f.x(b + k), f.z(b)])
        .path(&[xc, f.z(c)])
        .done();
    let t2 = f
        .tree()
        .path(&[f.z(c), f.x(c + k)])
        .walk(f.x(c + k), xb)
        .walk(xb, xa)
        .path(&[xb, f.z(b)])
        .done();
    Some(("4", [t1, t2]))
}

/// `S = {y_a, y_b, y_c}` with cyclic order `a, b, c` and `|y_a C y_b| ≤ |C|/3`.
fn case5(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    debug_assert!(f.k >= 3, "three y vertices need k ≥ 3");
    let k = f.k;
    let (ya, yb, yc) = (f.y(a), f.y(b), f.y(c));
    if !f.on_open(yc, yb, ya) || 3 * f.dist(ya, yb) > f.len {
        return None;
    }
    let (xa1, xa1k) = (f.x(a + 1), f.x(a + 1 + k));
    if f.on_open(yc, yb, xa1k) {
        let (xb1, xb1k) = (f.x(b + 1), f.x(b + 1 + k));
        let t1 = f
            .tree()
            .path(&[ya, xa1])
            .walk(xa1, yb)
            .walk(yc, xa1k)
            .path(&[xa1, f.z(a + 1), xa1k])
            .done();
        let t2 = f
            .tree()
            .path(&[yb, xb1])
            .walk(xb1, yc)
            .path(&[xb1, f.z(b + 1), xb1k])
            .walk(xb1k, ya)
            .done();
        Some(("5.1", [t1, t2]))
    } else if f.on_open(yc, xa1k, ya) {
        let (xa, xak) = (f.x(a), f.x(a + k));
        let t1 = f
            .tree()
            .path(&[ya, xa1])
            .walk(xa1, yb)
            .path(&[xa1, f.z(a + 1), xa1k])
            .walk(xa1k, yc)
            .done();
        let t2 = f
            .tree()
            .walk(yb, xak)
            .path(&[xak, f.z(a), xa])
            .walk(yc, xa)
            .path(&[xa, ya])
            .done();
        Some(("5.2", [t1, t2]))
    } else {
        None
    }
}

/// `S = {y_a, y_b, x_c}`.
fn case6(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    let (ya, yb, xc, xc2) = (f.y(a), f.y(b), f.x(c), f.x(c + k));
    if f.on_closed(xc, ya, yb) && f.on_closed(xc2, yb, ya) {
        let t1 = f.tree().walk(ya, xc).walk(xc, yb).done();
        let t2 = f
            .tree()
            .walk(yb, xc2)
            .walk(xc2, ya)
            .path(&[xc, f.z(c), xc2])
            .done();
        return Some(("6.1", [t1, t2]));
    }
    // Cyclic order y_a, y_b, x_c, x_{c'}.
    if f.on_open(xc, yb, ya) && f.on_open(xc2, xc, ya) {
        let (xa1, xa1k) = (f.x(a + 1), f.x(a + 1 + k));
        let t1 = f
            .tree()
            .path(&[ya, xa1])
            .walk(xa1, yb)
            .path(&[xa1, f.z(a + 1), xa1k])
            .walk(xc, xa1k)
            .done();
        let t2 = f
            .tree()
            .walk(yb, xc)
            .path(&[xc, f.z(c), xc2])
            .walk(xc2, ya)
            .done();
        return Some(("6.2", [t1, t2]));
    }
    None
}

/// `S = {y_a, y_b, z_c}`.
fn case7(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    if k == 1 {
        if (a, b) != (1, 2) {
            return None;
        }
        let (x1, x2, y1, y2, z1) = (f.x(1), f.x(2), f.y(1), f.y(2), f.z(1));
        let t1 = f.tree().path(&[y2, x1, y1]).path(&[x1, z1]).done();
        let t2 = f.tree().path(&[y1, x2, y2]).path(&[x2, z1]).done();
        return Some(("7", [t1, t2]));
    }
    let (ya, yb, xc, xck, zc) = (f.y(a), f.y(b), f.x(c), f.x(c + k), f.z(c));
    if f.on_closed(xc, ya, yb) && f.on_closed(xck, yb, ya) {
        let t1 = f.tree().walk(ya, xc).walk(xc, yb).path(&[xc, zc]).done();
        let t2 = f.tree().walk(yb, xck).walk(xck, ya).path(&[xck, zc]).done();
        return Some(("7.1", [t1, t2]));
    }
    // Cyclic order y_a, y_b, x_c, x_{c+k}.
    if !(f.on_open(xc, yb, ya) && f.on_open(xck, xc, ya)) {
        return None;
    }
    let (xa1, xb) = (f.x(a + 1), f.x(b));
    if xa1 != xb {
        let xa1k = f.x(a + 1 + k);
        let xbk = f.x(b + k);
        let t1 = f
            .tree()
            .path(&[ya, xa1, f.z(a + 1), xa1k])
            .walk(yb, xc)
            .walk(xc, xa1k)
            .path(&[xc, zc])
            .done();
        let t2 = f
            .tree()
            .path(&[yb, xb, f.z(b), xbk])
            .walk(xbk, xck)
            .walk(xck, ya)
            .path(&[xck, zc])
            .done();
        return Some(("7.2.1", [t1, t2]));
    }
    let xb2 = f.x(b + k);
    if f.x(c + 1) != xb2 {
        let (xc1, xc1k) = (f.x(c + 1), f.x(c + k + 1));
        let t1 = f
            .tree()
            .path(&[ya, xb, yb])
            .path(&[xb, f.z(b), xb2])
            .walk(xb2, xck)
            .path(&[xck, zc])
            .done();
        let t2 = f
            .tree()
            .walk(yb, xc)
            .path(&[xc, f.y(c), xc1, f.z(c + 1), xc1k])
            .walk(xc1k, ya)
            .path(&[xc, zc])
            .done();
        Some(("7.2.2a", [t1, t2]))
    } else {
        let (xcm, xckm) = (f.x(c - 1), f.x(c + k - 1));
        let t1 = f
            .tree()
            .path(&[ya, xb, yb])
            .path(&[xb, f.z(b), xb2])
            .path(&[zc, xc])
            .walk(xc, xb2)
            .done();
        let t2 = f
            .tree()
            .walk(yb, xcm)
            .path(&[xcm, f.z(c - 1), xckm, f.y(c + k - 1), xck])
            .walk(xck, ya)
            .path(&[xck, zc])
            .done();
        Some(("7.2.2b", [t1, t2]))
    }
}

/// `S = {y_a, x_b, x_c}`.
fn case8(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    let (ya, xb, xc, xb2, xc2) = (f.y(a), f.x(b), f.x(c), f.x(b + k), f.x(c + k));
    if xb2 == xc {
        if !f.on_closed(ya, xb, xc) {
            return None;
        }
        let t1 = f.tree().walk(ya, xc).path(&[xc, f.z(c), xb]).done();
        let t2 = f.tree().walk(xc, xb).walk(xb, ya).done();
        return Some(("8.0", [t1, t2]));
    }
    // Cyclic order x_b, x_c, x_{b'}, x_{c'}.
    if !(f.on_open(xc, xb, xb2) && f.on_open(xc2, xb2, xb)) {
        return None;
    }
    if f.on_closed(ya, xb, xc) {
        let t1 = f
            .tree()
            .walk(xb, ya)
            .walk(xc, xb2)
            .path(&[xb2, f.z(b), xb])
            .done();
        let t2 = f
            .tree()
            .walk(ya, xc)
            .path(&[xc, f.z(c), xc2])
            .walk(xc2, xb)
            .done();
        Some(("8.1", [t1, t2]))
    } else if f.on_closed(ya, xc, xb2) {
        let t1 = f.tree().walk(xb, xc).walk(xc, ya).done();
        let t2 = f
            .tree()
            .walk(ya, xb2)
            .walk(xb2, xc2)
            .path(&[xc2, f.z(c), xc])
            .path(&[xb2, f.z(b), xb])
            .done();
        Some(("8.2", [t1, t2]))
    } else if f.on_closed(ya, xb2, xc2) {
        let t1 = f
            .tree()
            .walk(xb, xc)
            .path(&[xb, f.z(b), xb2])
            .walk(xb2, ya)
            .done();
        let t2 = f
            .tree()
            .walk(ya, xc2)
            .walk(xc2, xb)
            .path(&[xc2, f.z(c), xc])
            .done();
        Some(("8.3", [t1, t2]))
    } else {
        None
    }
}

/// `S = {y_a, z_b, z_c}` with `b < c` and `y_a ∈ V(x_b C x_c)`.
fn case9(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    let (ya, xb, xc) = (f.y(a), f.x(b), f.x(c));
    if b >= c || !f.on_closed(ya, xb, xc) {
        return None;
    }
    let t1 = f
        .tree()
        .walk(ya, xc)
        .walk(xc, f.x(b + k))
        .path(&[f.x(b + k), f.z(b)])
        .path(&[xc, f.z(c)])
        .done();
    let t2 = f
        .tree()
        .path(&[f.z(c), f.x(c + k)])
        .walk(f.x(c + k), xb)
        .walk(xb, ya)
        .path(&[xb, f.z(b)])
        .done();
    Some(("9", [t1, t2]))
}

/// `S = {y_a, x_b, z_c}`.
fn case10(f: &Frame, a: i64, b: i64, c: i64) -> Option<Built> {
    let k = f.k;
    let (ya, xb, xc, xck, zc) = (f.y(a), f.x(b), f.x(c), f.x(c + k), f.z(c));
    if xb == xck {
        return None;
    }
    if xb == xc {
        if !f.on_closed(ya, xck, xb) {
            return None;
        }
        let t1 = f.tree().walk(ya, xb).path(&[xb, zc]).done();
        let t2 = f.tree().walk(xb, xck).walk(xck, ya).path(&[xck, zc]).done();
        return Some(("10.1", [t1, t2]));
    }
    let xb2 = f.x(b + k);
    // Cyclic order x_b, x_c, x_{b'}, x_{c+k}.
    if !f.on_open(xc, xb, xb2) {
        return None;
    }
    if f.on_closed(ya, xb, xc) {
        let t1 = f
            .tree()
            .walk(ya, xc)
            .walk(xc, xb2)
            .path(&[xb2, f.z(b), xb])
            .path(&[xc, zc])
            .done();
        let t2 = f.tree().path(&[zc, xck]).walk(xck, xb).walk(xb, ya).done();
        Some(("10.2.1", [t1, t2]))
    } else if f.on_closed(ya, xc, xck) {
        let t1 = f.tree().walk(xb, xc).walk(xc, ya).path(&[xc, zc]).done();
        let t2 = f.tree().walk(ya, xck).walk(xck, xb).path(&[xck, zc]).done();
        Some(("10.2.2", [t1, t2]))
    } else {
        let t1 = f.tree().walk(ya, xb).walk(xb, xc).path(&[xc, zc]).done();
        let t2 = f
            .tree()
            .path(&[xb, f.z(b), xb2])
            .walk(xb2, xck)
            .walk(xck, ya)
            .path(&[xck, zc])
            .done();
        Some(("10.2.3", [t1, t2]))
    }
}

/// Role pattern expected by each case, in argument order.
fn pattern(case: u8) -> [char; 3] {
    match case {
        1 => ['x', 'x', 'x'],
        2 => ['z', 'z', 'z'],
        3 => ['x', 'x', 'z'],
        4 => ['x', 'z', 'z'],
        5 => ['y', 'y', 'y'],
        6 => ['y', 'y', 'x'],
        7 => ['y', 'y', 'z'],
        8 => ['y', 'x', 'x'],
        9 => ['y', 'z', 'z'],
        10 => ['y', 'x', 'z'],
        _ => unreachable!(),
    }
}

fn kind(r: Role) -> char {
    match r {
        Role::X(_) => 'x',
        Role::Y(_) => 'y',
        Role::Z(_) => 'z',
    }
}

fn build_case(f: &Frame, case: u8, roles: [Role; 3]) -> Option<Built> {
    let [a, b, c] = roles.map(|r| r.index() as i64);
    match case {
        1 => case1(f, a, b, c),
        2 => case2(f, a, b, c),
        3 => case3(f, a, b, c),
        4 => case4(f, a, b, c),
        5 => case5(f, a, b, c),
        6 => case6(f, a, b, c),
        7 => case7(f, a, b, c),
        8 => case8(f, a, b, c),
        9 => case9(f, a, b, c),
        10 => case10(f, a, b, c),
        _ => unreachable!(),
    }
}

const ORDERINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Two internally disjoint trees connecting `set` in `H(k)`.
///
/// Fails with [`Error::KEqualsTwo`] for `H(2)`. Any other error means a
/// construction produced an invalid certificate, which is a bug.
pub fn two_trees(h: &ExtremalGraph, set: TripleSet) -> Result<TreeCertificate> {
    if h.k() == 2 {
        return Err(Error::KEqualsTwo);
    }
    let case = classify(h, set)?;
    let want = pattern(case);
    let frame = Frame::new(h);
    let roles: Vec<Role> = set
        .vertices()
        .iter()
        .map(|&v| h.role_of_vertex(v))
        .collect::<Result<_>>()?;

    for sym in Symmetry::all(h.k()) {
        let mapped: Vec<Role> = roles.iter().map(|&r| sym.apply(r, h.k())).collect();
        for ord in ORDERINGS {
            let args = ord.map(|i| mapped[i]);
            if args.map(kind) != want {
                continue;
            }
            let Some((tag, trees)) = build_case(&frame, case, args) else {
                continue;
            };
            // Trees live in the image frame; pull them back.
            let perm = sym.permutation(h);
            let mut inverse = vec![0; perm.len()];
            for (v, &w) in perm.iter().enumerate() {
                inverse[w] = v;
            }
            let cert = TreeCertificate::new(
                set,
                trees.map(|t| t.into_iter().map(|(u, v)| (inverse[u], inverse[v]))),
                Some(tag.to_string()),
            );
            return match verify_certificate(h.graph(), &cert) {
                Ok(()) => Ok(cert),
                Err(violation) => Err(Error::CaseConstruction {
                    set: set.vertices(),
                    case: tag.to_string(),
                    reason: violation.to_string(),
                }),
            };
        }
    }
    Err(Error::CaseConstruction {
        set: set.vertices(),
        case: case.to_string(),
        reason: "no normal form applies".to_string(),
    })
}

/// Outcome of checking every 3-set of `H(k)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CertifyReport {
    pub k: usize,
    pub triples: usize,
    pub verified: usize,
    /// Number of certificates per subcase tag.
    pub by_tag: BTreeMap<String, usize>,
    /// Number of triples per case number.
    pub by_case: BTreeMap<u8, usize>,
}

/// Runs [`two_trees`] on all `C(5k, 3)` triples. The first failure in
/// canonical triple order aborts the run.
pub fn certify_all(h: &ExtremalGraph) -> Result<CertifyReport> {
    let (report, _) = certify_all_with(h, false)?;
    Ok(report)
}

/// Like [`certify_all`], also returning the certificates when `keep` is set.
pub fn certify_all_with(
    h: &ExtremalGraph,
    keep: bool,
) -> Result<(CertifyReport, Vec<TreeCertificate>)> {
    if h.k() == 2 {
        return Err(Error::KEqualsTwo);
    }
    let triples: Vec<TripleSet> = TripleSet::all(h.graph().order()).collect();
    let results: Vec<Result<(u8, TreeCertificate)>> = triples
        .par_iter()
        .map(|&t| Ok((classify(h, t)?, two_trees(h, t)?)))
        .collect();
    let mut report = CertifyReport {
        k: h.k(),
        triples: triples.len(),
        verified: 0,
        by_tag: BTreeMap::new(),
        by_case: BTreeMap::new(),
    };
    let mut certs = Vec::new();
    for r in results {
        let (case, cert) = r?;
        report.verified += 1;
        *report.by_case.entry(case).or_default() += 1;
        let tag = cert.case_tag.clone().unwrap_or_default();
        *report.by_tag.entry(tag).or_default() += 1;
        if keep {
            certs.push(cert);
        }
    }
    Ok((report, certs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::Role::{X, Y, Z};

    fn set(h: &ExtremalGraph, roles: [Role; 3]) -> TripleSet {
        let [a, b, c] = roles.map(|r| h.vertex_of_role(r).unwrap());
        TripleSet::new(a, b, c).unwrap()
    }

    fn edges(h: &ExtremalGraph, pairs: &[(&str, &str)]) -> BTreeSet<Edge> {
        pairs
            .iter()
            .map(|(a, b)| edge(h.vertex_of_label(a).unwrap(), h.vertex_of_label(b).unwrap()))
            .collect()
    }

    #[test]
    fn classification_examples() {
        let h = ExtremalGraph::build(3).unwrap();
        assert_eq!(classify(&h, set(&h, [X(1), X(3), X(5)])).unwrap(), 1);
        assert_eq!(classify(&h, set(&h, [Z(1), Z(2), Z(3)])).unwrap(), 2);
        assert_eq!(classify(&h, set(&h, [Y(1), X(2), Z(2)])).unwrap(), 10);
        assert_eq!(classify(&h, set(&h, [Y(1), Y(4), X(2)])).unwrap(), 6);
        assert!(classify(&h, TripleSet::new(0, 1, 15).unwrap()).is_err());
    }

    #[test]
    fn all_z_in_h3_uses_two_half_cycles() {
        let h = ExtremalGraph::build(3).unwrap();
        let cert = two_trees(&h, set(&h, [Z(1), Z(2), Z(3)])).unwrap();
        assert_eq!(cert.case_tag.as_deref(), Some("2"));
        let t1 = edges(
            &h,
            &[
                ("x1", "y1"),
                ("y1", "x2"),
                ("x2", "y2"),
                ("y2", "x3"),
                ("z1", "x1"),
                ("z2", "x2"),
                ("z3", "x3"),
            ],
        );
        let t2 = edges(
            &h,
            &[
                ("x4", "y4"),
                ("y4", "x5"),
                ("x5", "y5"),
                ("y5", "x6"),
                ("z1", "x4"),
                ("z2", "x5"),
                ("z3", "x6"),
            ],
        );
        assert_eq!(cert.trees, vec![t1, t2]);
    }

    #[test]
    fn h1_case7_trees() {
        let h = ExtremalGraph::build(1).unwrap();
        let cert = two_trees(&h, set(&h, [Y(1), Y(2), Z(1)])).unwrap();
        assert_eq!(cert.case_tag.as_deref(), Some("7"));
        let t1 = edges(&h, &[("y2", "x1"), ("x1", "y1"), ("x1", "z1")]);
        let t2 = edges(&h, &[("y1", "x2"), ("x2", "y2"), ("x2", "z1")]);
        assert_eq!(cert.trees, vec![t1, t2]);
    }

    #[test]
    fn short_segment_case1_in_h3() {
        let h = ExtremalGraph::build(3).unwrap();
        let cert = two_trees(&h, set(&h, [X(1), X(2), X(4)])).unwrap();
        assert!(matches!(
            cert.case_tag.as_deref(),
            Some("1.1") | Some("1.2")
        ));
        verify_certificate(h.graph(), &cert).unwrap();
    }

    #[test]
    fn rejects_h2() {
        let h = ExtremalGraph::build(2).unwrap();
        assert_eq!(
            two_trees(&h, TripleSet::new(0, 1, 2).unwrap()),
            Err(Error::KEqualsTwo)
        );
        assert_eq!(certify_all(&h), Err(Error::KEqualsTwo));
    }

    #[test]
    fn symmetries_are_automorphisms() {
        for k in [1, 3, 4, 5] {
            let h = ExtremalGraph::build(k).unwrap();
            for sym in Symmetry::all(k) {
                let perm = sym.permutation(&h);
                assert_eq!(
                    h.graph().relabel(&perm).unwrap(),
                    *h.graph(),
                    "k={k} {sym:?}"
                );
            }
        }
    }

    #[test]
    fn certificates_are_deterministic() {
        let h = ExtremalGraph::build(4).unwrap();
        for t in TripleSet::all(20).step_by(37) {
            assert_eq!(two_trees(&h, t).unwrap(), two_trees(&h, t).unwrap());
        }
    }

    #[test]
    fn small_families_certify() {
        for k in [1, 3, 4] {
            let h = ExtremalGraph::build(k).unwrap();
            let r = certify_all(&h).unwrap();
            assert_eq!(r.verified, r.triples);
        }
    }
}
