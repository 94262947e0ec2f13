use proptest::prelude::*;
use quadcross::io::{
    cross_from_json, cross_to_json, parse_coug, parse_instance, serialize_coug, serialize_instance,
    CougFormat, Format,
};
use quadcross::reductions::CougInstance;
use quadcross::{decide, ColorId, ColoredPoint, Coordinate, PointSet};

fn arb_coord() -> impl Strategy<Value = Coordinate> {
    prop_oneof![
        any::<i64>().prop_map(Coordinate::from_integer),
        (any::<i32>(), 1i64..1000).prop_map(|(n, d)| Coordinate::from_ratio(n as i64, d)),
        // force the arbitrary-precision representation
        (any::<i64>(), any::<i64>()).prop_map(|(a, b)| &(&Coordinate::from_integer(a)
            * &Coordinate::from_integer(b))
            * &Coordinate::from_ratio(1, 3)),
    ]
}

fn arb_set() -> impl Strategy<Value = PointSet> {
    prop::collection::vec((arb_coord(), arb_coord(), any::<u32>()), 0..20).prop_map(|v| {
        v.into_iter()
            .map(|(x, y, c)| ColoredPoint {
                x,
                y,
                color: ColorId(c),
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn coordinate_text_round_trip(c in arb_coord()) {
        prop_assert_eq!(c.to_string().parse::<Coordinate>().unwrap(), c);
    }

    #[test]
    fn decimals_are_exact(int in -10_000i64..10_000, frac in 0u32..10_000) {
        let text = format!("{int}.{frac:04}");
        let parsed: Coordinate = text.parse().unwrap();
        let sign = if text.starts_with('-') { -1 } else { 1 };
        let expect = &Coordinate::from_integer(int) + &Coordinate::from_ratio(sign * frac as i64, 10_000);
        prop_assert_eq!(parsed, expect);
    }

    #[test]
    fn instance_round_trips(set in arb_set()) {
        for fmt in [Format::Json, Format::Csv] {
            let bytes = serialize_instance(&set, fmt);
            prop_assert_eq!(&parse_instance(&bytes, fmt).unwrap(), &set);
            prop_assert_eq!(serialize_instance(&parse_instance(&bytes, fmt).unwrap(), fmt), bytes);
        }
    }

    #[test]
    fn coug_round_trips(pairs in prop::collection::vec((arb_coord(), arb_coord()), 1..15)) {
        let (xs, ys) = pairs.into_iter().unzip();
        let inst = CougInstance::new(xs, ys).unwrap();
        for fmt in [CougFormat::Text, CougFormat::Json] {
            prop_assert_eq!(&parse_coug(&serialize_coug(&inst, fmt)).unwrap(), &inst);
        }
    }

    #[test]
    fn parsers_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let _ = parse_instance(&bytes, Format::Json);
        let _ = parse_instance(&bytes, Format::Csv);
        let _ = parse_coug(&bytes);
        let _ = cross_from_json(&bytes);
        if let Ok(s) = std::str::from_utf8(&bytes) {
            let _ = s.parse::<Coordinate>();
        }
    }
}

#[test]
fn cross_json_round_trip() {
    let set = PointSet::new(vec![
        ColoredPoint::new(Coordinate::from_ratio(1, 2), 1, 0),
        ColoredPoint::new(-1, 1, 1),
        ColoredPoint::new(-1, -1, 2),
        ColoredPoint::new(1, -1, 3),
    ]);
    let cross = decide(&set).unwrap();
    let text = serde_json::to_vec(&cross_to_json(&cross)).unwrap();
    assert_eq!(cross_from_json(&text).unwrap(), cross);
}

#[test]
fn errors_carry_positions() {
    let err = parse_instance(b"x,y,color\n1,2,0\n1,oops,0\n", Format::Csv).unwrap_err();
    assert_eq!((err.line, err.column), (3, 2));
    let err = parse_instance(
        b"{\"points\": [{\"x\": \"1\", \"y\": \"2\", \"color\": 0, \"z\": 1}]}",
        Format::Json,
    )
    .unwrap_err();
    assert_eq!(err.line, 1);
    assert!(parse_instance(
        b"{\"points\": [{\"x\": 0.5, \"y\": \"2\", \"color\": 0}]}",
        Format::Json
    )
    .is_err());
}
