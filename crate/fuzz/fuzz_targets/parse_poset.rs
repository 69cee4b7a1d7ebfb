#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = cfpo::json::parse_poset(text) {
            let again = cfpo::json::parse_poset(&cfpo::json::to_json(&p)).expect("written documents parse");
            assert_eq!(again, p);
        }
    }
});
