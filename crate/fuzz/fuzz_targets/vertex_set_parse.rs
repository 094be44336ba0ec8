#![no_main]

use gencon::io::{parse_triple, parse_vertex_set};
use gencon::ExtremalGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let h = ExtremalGraph::build(3).expect("H(3)");
    let labels = h.labels();
    let _ = parse_vertex_set(text, None);
    let _ = parse_vertex_set(text, Some(&labels));
    if let Ok(s) = parse_triple(text, h.graph(), Some(&labels)) {
        assert!(s.vertices().iter().all(|&v| v < h.graph().order()));
    }
});
