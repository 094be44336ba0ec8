//! `κ(S)` from the search oracle against a brute force that tries every
//! assignment of edges to trees.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gencon::oracle::{kappa_s, packing_exists};
use gencon::{verify_certificate, Graph, TreeCertificate, TripleSet};

/// Whether some assignment of each edge to one of `trees` trees (or to none)
/// is a valid packing. `(trees + 1)^e` candidates.
fn brute_force_packing(g: &Graph, s: TripleSet, trees: usize) -> bool {
    let edges = g.edges();
    let base = trees + 1;
    let total = base.pow(edges.len() as u32);
    (0..total).any(|mut code| {
        let mut parts = vec![Vec::new(); trees];
        for &e in &edges {
            let slot = code % base;
            code /= base;
            if slot > 0 {
                parts[slot - 1].push(e);
            }
        }
        // Require tree i to be lexicographically no larger than tree i+1 to
        // skip relabelled duplicates cheaply.
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        verify_certificate(g, &TreeCertificate::new(s, parts, None)).is_ok()
    })
}

fn random_graph(rng: &mut StdRng, n: usize, max_edges: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut edges = Vec::new();
    while edges.len() < max_edges && !pairs.is_empty() {
        let i = rng.gen_range(0..pairs.len());
        let p = pairs.swap_remove(i);
        if rng.gen_bool(0.6) {
            edges.push(p);
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn kappa_s_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(3..=6);
        let g = random_graph(&mut rng, n, 8);
        let s = TripleSet::new(0, 1, 2).unwrap();
        let oracle = kappa_s(&g, s).unwrap().kappa;
        let mut brute = 0;
        while brute < 3 && brute_force_packing(&g, s, brute + 1) {
            brute += 1;
        }
        assert_eq!(oracle.min(3), brute, "{:?}", g.edges());
    }
}

#[test]
fn named_small_graphs() {
    let s = TripleSet::new(0, 2, 4).unwrap();
    assert!(!brute_force_packing(&Graph::cycle(6), s, 2));
    assert!(packing_exists(&Graph::cycle(6), s, 2).unwrap().is_none());

    let k4 = Graph::complete(4);
    let s = TripleSet::new(0, 1, 3).unwrap();
    assert!(brute_force_packing(&k4, s, 2));
    assert!(!brute_force_packing(&k4, s, 3));
    assert_eq!(kappa_s(&k4, s).unwrap().kappa, 2);
}
