#![no_main]
use libfuzzer_sys::fuzz_target;
use quadcross::io::{cross_from_json, cross_to_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(cross) = cross_from_json(data) {
        let text = serde_json::to_vec(&cross_to_json(&cross)).unwrap();
        assert_eq!(cross_from_json(&text).unwrap(), cross);
    }
});
