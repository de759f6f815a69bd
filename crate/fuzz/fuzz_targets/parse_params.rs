#![no_main]

use berge_turan::bounds::parse_params;
use berge_turan::suites::GridSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_params(text);
        if let Ok(grid) = GridSpec::parse(text) {
            // Printing and re-parsing a grid is the identity.
            let printed = grid.to_string();
            assert_eq!(GridSpec::parse(&printed), Ok(grid));
        }
    }
});
