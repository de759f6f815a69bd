#![no_main]

use berge_turan::berge::BergeWitness;
use berge_turan::bounds::BoundResult;
use berge_turan::constructions::ConstructionReport;
use berge_turan::search::SearchOutcome;
use libfuzzer_sys::fuzz_target;

// Every document the CLI reads or writes must deserialize without panicking.
fuzz_target!(|data: &[u8]| {
    let _ = serde_json::from_slice::<BoundResult>(data);
    let _ = serde_json::from_slice::<SearchOutcome>(data);
    let _ = serde_json::from_slice::<ConstructionReport>(data);
    let _ = serde_json::from_slice::<BergeWitness>(data);
});
