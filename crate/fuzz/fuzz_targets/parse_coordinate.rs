#![no_main]
use libfuzzer_sys::fuzz_target;
use quadcross::Coordinate;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(c) = s.parse::<Coordinate>() {
            // canonical text must parse back to the same value
            let again: Coordinate = c.to_string().parse().unwrap();
            assert_eq!(again, c);
        }
    }
});
