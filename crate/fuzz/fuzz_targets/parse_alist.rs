#![no_main]
use libfuzzer_sys::fuzz_target;
use short_cycles::graph::parse_alist;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(graph) = parse_alist(text) {
            let (c, d) = graph.biregular_profile();
            assert_eq!(graph.left_count() * c, graph.right_count() * d);
        }
    }
});
