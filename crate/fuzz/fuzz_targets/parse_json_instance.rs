#![no_main]
use libfuzzer_sys::fuzz_target;
use quadcross::io::{parse_instance, serialize_instance, Format};

fuzz_target!(|data: &[u8]| {
    if let Ok(set) = parse_instance(data, Format::Json) {
        let out = serialize_instance(&set, Format::Json);
        assert_eq!(parse_instance(&out, Format::Json).unwrap(), set);
    }
});
