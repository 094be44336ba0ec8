#![no_main]

use gencon::io::{emit_dot, parse_dot};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((g, labels)) = parse_dot(text) {
        let again = parse_dot(&emit_dot(&g, labels.as_deref())).expect("emitted DOT parses");
        assert_eq!(again, (g, labels));
    }
});
