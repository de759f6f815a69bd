#![no_main]

use berge_turan::family::FamilySpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = FamilySpec::parse(text) {
            // The canonical printer must round-trip every accepted spec.
            let printed = spec.to_string();
            let back = FamilySpec::parse(&printed).expect("canonical form parses");
            assert_eq!(back, spec);
            let _ = spec.skeleton_graph();
        }
    }
});
