#![no_main]
use libfuzzer_sys::fuzz_target;
use quadcross::io::{parse_coug, serialize_coug, CougFormat};
use quadcross::reductions::{reduce_cns_to_4cc, reduce_coug_to_cns, solve_2cns, solve_2coug};

fuzz_target!(|data: &[u8]| {
    let Ok(inst) = parse_coug(data) else { return };
    for fmt in [CougFormat::Text, CougFormat::Json] {
        assert_eq!(parse_coug(&serialize_coug(&inst, fmt)).unwrap(), inst);
    }
    if inst.len() <= 64 {
        let cns = reduce_coug_to_cns(&inst);
        let expected = solve_2coug(&inst);
        assert_eq!(solve_2cns(&cns), expected);
        let set = reduce_cns_to_4cc(&cns).unwrap();
        assert_eq!(quadcross::decide(&set).is_some(), expected);
    }
});
