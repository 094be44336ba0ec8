#![no_main]

use gencon::io::CertificateDocument;
use gencon::{verify_certificate, ExtremalGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(doc) = serde_json::from_slice::<CertificateDocument>(data) else {
        return;
    };
    let h = ExtremalGraph::build(3).expect("H(3)");
    if let Ok(cert) = doc.to_certificate(Some(&h.labels())) {
        // The checker must reject or accept, never panic, on arbitrary trees.
        let _ = verify_certificate(h.graph(), &cert);
    }
});
