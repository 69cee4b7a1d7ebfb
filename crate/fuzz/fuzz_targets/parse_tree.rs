#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok((t, has_root)) = cfpo::json::parse_tree(text) {
            if t.len() <= 16 {
                let _ = cfpo::treeify::interpret_back(&t, has_root);
            }
        }
    }
});
