#![no_main]
use libfuzzer_sys::fuzz_target;
use short_cycles::report::{from_json, to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = from_json(text) {
        let emitted = to_json(&report);
        let again = from_json(&emitted).expect("re-parse emitted report");
        assert_eq!(to_json(&again), emitted);
    }
});
