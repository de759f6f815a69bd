#![no_main]

use berge_turan::hypergraph::Hypergraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(h) = serde_json::from_str::<Hypergraph>(text) {
            // Accepted hypergraphs re-serialize canonically and byte-stably.
            let json = serde_json::to_string(&h).unwrap();
            let back: Hypergraph = serde_json::from_str(&json).unwrap();
            assert_eq!(back, h);
            assert_eq!(serde_json::to_string(&back).unwrap(), json);
            let _ = h.is_connected();
            let _ = h.degrees();
        }
    }
});
