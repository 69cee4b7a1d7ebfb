#![no_main]

//! Parses a poset and, when it is a small CFPO, runs the tree construction
//! and checks the round trip.

use libfuzzer_sys::fuzz_target;

const MAX_ELEMENTS: usize = 8;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = cfpo::json::parse_poset(text) else { return };
    if p.is_empty() || p.len() > MAX_ELEMENTS || !cfpo::paths::is_cfpo(&p) {
        return;
    }
    let _ = cfpo::alt::classify(&p).expect("non-empty");
    let t = cfpo::treeify::treeify(&p).expect("every finite CFPO has a tree");
    let back = cfpo::treeify::interpret_back(&t.tree, !p.is_connected()).expect("output is a tree");
    assert_eq!(back, p);
});
