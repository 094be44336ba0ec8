//! Modular indices `[a]_k` and walks along a fixed orientation of a cycle.
//!
//! Cycle positions are 1-based (`1..=len`) and every walk steps `+1` modulo the
//! cycle length. A walk in the opposite direction is written by swapping its
//! endpoints.

use crate::error::{Error, Result};

/// The representative of an integer modulo `k` that lies in `1..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModIndex {
    value: usize,
    modulus: usize,
}

impl ModIndex {
    #[inline]
    pub fn value(self) -> usize {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> usize {
        self.modulus
    }
}

/// `[a]_k`: the unique value in `1..=k` congruent to `a` modulo `k`.
pub fn mod_index(a: i64, k: i64) -> Result<ModIndex> {
    if k < 1 {
        return Err(Error::InvalidModulus(k));
    }
    let r = a.rem_euclid(k);
    let value = if r == 0 { k } else { r };
    Ok(ModIndex {
        value: value as usize,
        modulus: k as usize,
    })
}

/// Infallible `[a]_k` for a positive modulus.
#[inline]
pub(crate) fn wrap(a: i64, k: usize) -> usize {
    debug_assert!(k >= 1);
    let k = k as i64;
    let r = a.rem_euclid(k);
    (if r == 0 { k } else { r }) as usize
}

/// An ordered list of cycle positions visited in the `+1` direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWalk {
    len: usize,
    positions: Vec<usize>,
}

impl CycleWalk {
    pub fn cycle_len(&self) -> usize {
        self.len
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `|P|`: number of edges on the walk.
    pub fn length(&self) -> Result<usize> {
        if self.positions.is_empty() {
            Err(Error::EmptyWalk)
        } else {
            Ok(self.positions.len() - 1)
        }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.positions.contains(&p)
    }

    /// Consecutive position pairs, i.e. the edges of the walk on the cycle.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.positions.windows(2).map(|w| (w[0], w[1]))
    }
}

/// The walk from `a` to `b` along the cycle of length `len`, optionally
/// dropping either endpoint. With `a == b` the full walk is the single
/// position `a`.
pub fn segment(
    len: usize,
    a: usize,
    b: usize,
    include_start: bool,
    include_end: bool,
) -> Result<CycleWalk> {
    for p in [a, b] {
        if p == 0 || p > len {
            return Err(Error::PositionOutOfRange { position: p, len });
        }
    }
    let steps = (b + len - a) % len;
    let mut positions: Vec<usize> = (0..=steps).map(|i| (a - 1 + i) % len + 1).collect();
    if !include_start && !positions.is_empty() {
        positions.remove(0);
    }
    if !include_end && !positions.is_empty() {
        positions.pop();
    }
    Ok(CycleWalk { len, positions })
}

/// `|P|` for a walk.
pub fn walk_length(w: &CycleWalk) -> Result<usize> {
    w.length()
}

/// Whether `p` lies on the walk from `a` to `b`, with the given endpoint
/// inclusion, without materializing the walk.
#[inline]
pub(crate) fn on_walk(len: usize, a: usize, b: usize, p: usize, start: bool, end: bool) -> bool {
    let steps = (b + len - a) % len;
    let offset = (p + len - a) % len;
    if offset > steps {
        return false;
    }
    if offset == 0 && !start {
        return false;
    }
    if offset == steps && !end {
        return false;
    }
    true
}

/// Number of `+1` steps from `a` to `b`.
#[inline]
pub(crate) fn distance(len: usize, a: usize, b: usize) -> usize {
    (b + len - a) % len
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn modular_representatives() {
        assert_eq!(mod_index(5, 3).unwrap().value(), 2);
        assert_eq!(mod_index(3, 3).unwrap().value(), 3);
        assert_eq!(mod_index(-1, 4).unwrap().value(), 3);
        assert_eq!(mod_index(0, 1).unwrap().value(), 1);
        assert_eq!(mod_index(4, 0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn segments() {
        assert_eq!(
            segment(8, 7, 2, true, true).unwrap().positions(),
            &[7, 8, 1, 2]
        );
        assert_eq!(segment(8, 3, 5, false, true).unwrap().positions(), &[4, 5]);
        assert_eq!(segment(8, 3, 5, false, false).unwrap().positions(), &[4]);
        assert!(segment(8, 3, 4, false, false).unwrap().is_empty());
        assert_eq!(segment(8, 4, 4, true, true).unwrap().positions(), &[4]);
        assert!(segment(8, 4, 4, false, true).unwrap().is_empty());
        assert!(segment(8, 0, 4, true, true).is_err());
        assert!(segment(8, 1, 9, true, true).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(walk_length(&segment(8, 7, 2, true, true).unwrap()), Ok(3));
        assert_eq!(walk_length(&segment(8, 4, 4, true, true).unwrap()), Ok(0));
        assert_eq!(
            walk_length(&segment(8, 3, 4, false, false).unwrap()),
            Err(Error::EmptyWalk)
        );
        assert_eq!(walk_length(&segment(12, 3, 9, true, true).unwrap()), Ok(6));
    }

    #[test]
    fn membership() {
        let w = segment(12, 10, 2, true, true).unwrap();
        assert!(w.contains(12));
        assert!(!w.contains(5));
        assert!(!segment(12, 10, 2, false, true).unwrap().contains(10));
    }

    proptest! {
        #[test]
        fn mod_index_is_periodic(a in -1000i64..1000, k in 1i64..50) {
            prop_assert_eq!(mod_index(a + k, k).unwrap(), mod_index(a, k).unwrap());
            let v = mod_index(a, k).unwrap().value() as i64;
            prop_assert!((1..=k).contains(&v));
            prop_assert_eq!((a - v).rem_euclid(k), 0);
        }

        #[test]
        fn on_walk_matches_materialized_walk(
            len in 1usize..30, a in 1usize..30, b in 1usize..30, p in 1usize..30,
            start: bool, end: bool,
        ) {
            prop_assume!(a <= len && b <= len && p <= len);
            let w = segment(len, a, b, start, end).unwrap();
            prop_assert_eq!(w.contains(p), on_walk(len, a, b, p, start, end));
        }

        #[test]
        fn walk_positions_form_a_path(len in 3usize..40, a in 1usize..40, b in 1usize..40) {
            prop_assume!(a <= len && b <= len);
            let w = segment(len, a, b, true, true).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            prop_assert!(w.positions().iter().all(|p| seen.insert(*p)));
            for (u, v) in w.steps() {
                prop_assert_eq!(v, u % len + 1);
            }
        }
    }
}
