#![no_main]

use gencon::io::{emit_graph6, parse_graph6, parse_graph6_stream};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Anything that decodes must re-encode to a line that decodes to the same graph.
    if let Ok(g) = parse_graph6(text) {
        let line = emit_graph6(&g);
        assert_eq!(parse_graph6(&line).as_ref(), Ok(&g));
    }
    let _ = parse_graph6_stream(text);
});
