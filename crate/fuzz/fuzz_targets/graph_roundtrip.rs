#![no_main]
use libfuzzer_sys::fuzz_target;
use short_cycles::graph::{parse_alist, parse_edge_list, to_alist, to_edge_list};

// Anything either parser accepts must survive both serializations unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let parsed = parse_alist(text).or_else(|_| parse_edge_list(text));
    if let Ok(graph) = parsed {
        let alist = to_alist(&graph);
        assert_eq!(parse_alist(&alist).expect("own alist output parses"), graph);
        let edges = to_edge_list(&graph);
        assert_eq!(parse_edge_list(&edges).expect("own edge list parses"), graph);
    }
});
