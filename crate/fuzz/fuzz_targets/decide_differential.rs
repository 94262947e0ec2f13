#![no_main]
use libfuzzer_sys::fuzz_target;
use quadcross::io::{parse_instance, Format};
use quadcross::oracle::oracle_centers;

fuzz_target!(|data: &[u8]| {
    let fmt = Format::sniff(data);
    let Ok(set) = parse_instance(data, fmt) else {
        return;
    };
    if set.len() > 48 {
        return;
    }
    let fast = quadcross::decide(&set);
    let slow = oracle_centers(&set);
    assert_eq!(fast.is_some(), slow.is_some(), "{:?}", set.points());
    if let Some(c) = fast {
        c.verify(&set).unwrap();
    }
});
