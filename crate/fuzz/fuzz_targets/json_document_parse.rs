#![no_main]

use gencon::io::{emit_json, parse_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((g, labels)) = parse_json(text) {
        let again = parse_json(&emit_json(&g, labels.as_deref())).expect("emitted documents parse");
        assert_eq!(again, (g, labels));
    }
});
