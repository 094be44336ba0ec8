//! Exact tools for generalized 3-connectivity `κ₃`.
//!
//! * [`oracle`] computes `κ(S)` and `κ₃(G)` by exhaustive search.
//! * [`extremal`] builds the sparse family `H(k)` with `e = 6v/5`.
//! * [`cases`] emits explicit two-tree certificates for every 3-set of `H(k)`.
//! * [`audit`] checks the edge lower bound and the order-10 boundary family.
//! * [`io`] reads and writes graph6, JSON and DOT.

pub mod audit;
pub mod cases;
pub mod certificate;
pub mod cycle;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod lemma22;
pub mod oracle;

pub use certificate::{verify_certificate, TreeCertificate, Violation};
pub use error::{Error, Result};
pub use extremal::{ExtremalGraph, Role};
pub use graph::{Graph, TripleSet, VertexId};
