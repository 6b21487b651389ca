#![no_main]
use libfuzzer_sys::fuzz_target;
use short_cycles::graph::parse_edge_list;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_edge_list(text);
    }
});
