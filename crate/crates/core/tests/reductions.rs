use proptest::prelude::*;
use quadcross::reductions::{
    reduce_cns_to_4cc, reduce_coug_to_cns, solve_2cns, solve_2coug, CnsInstance, CougInstance,
    BLUE, RED,
};
use quadcross::{decide, ColorId, ColoredPoint, Coordinate};

/// Values in quarters, so exact gaps of 0, 1/4, ..., 1 and beyond all occur.
fn quarter() -> impl Strategy<Value = Coordinate> {
    (-12i64..12).prop_map(|v| Coordinate::from_ratio(v, 4))
}

fn quarters(max_len: usize) -> impl Strategy<Value = Vec<Coordinate>> {
    prop::collection::vec(quarter(), 1..=max_len)
}

fn arb_coug() -> impl Strategy<Value = CougInstance> {
    quarters(8)
        .prop_flat_map(|xs| {
            let n = xs.len();
            (Just(xs), prop::collection::vec(quarter(), n))
        })
        .prop_map(|(xs, ys)| CougInstance::new(xs, ys).unwrap())
}

fn brute_coug(inst: &CougInstance) -> bool {
    let one = Coordinate::from_integer(1);
    let zero = Coordinate::zero();
    inst.xs.iter().any(|x| {
        inst.ys.iter().any(|y| {
            let d = if x > y { x - y } else { y - x };
            d > zero && d < one
        })
    })
}

fn brute_cns(inst: &CnsInstance) -> bool {
    let pts = inst.points();
    pts.iter().any(|a| {
        pts.iter()
            .any(|b| a.color != b.color && a.x < b.x && a.y > b.y)
    })
}

fn arb_cns() -> impl Strategy<Value = CnsInstance> {
    prop::collection::vec((0i64..6, 0i64..6, 0u32..2), 0..12).prop_map(|v| {
        CnsInstance::new(
            v.into_iter()
                .map(|(x, y, c)| ColoredPoint::new(x, y, c))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gap_solver_matches_brute_force(inst in arb_coug()) {
        prop_assert_eq!(solve_2coug(&inst), brute_coug(&inst));
    }

    #[test]
    fn slope_solver_matches_brute_force(inst in arb_cns()) {
        prop_assert_eq!(solve_2cns(&inst), brute_cns(&inst));
    }

    #[test]
    fn chain_preserves_answers(inst in arb_coug()) {
        let expected = solve_2coug(&inst);
        let cns = reduce_coug_to_cns(&inst);
        prop_assert_eq!(cns.len(), 4 * inst.len());
        prop_assert_eq!(solve_2cns(&cns), expected);
        let set = reduce_cns_to_4cc(&cns).unwrap();
        prop_assert_eq!(set.len(), 4 * inst.len() + 2);
        let cross = decide(&set);
        prop_assert_eq!(cross.is_some(), expected);
        if let Some(c) = cross {
            prop_assert!(c.verify(&set).is_ok());
        }
    }

    #[test]
    fn slope_to_cross_preserves_answers(inst in arb_cns()) {
        prop_assume!(!inst.is_empty());
        let set = reduce_cns_to_4cc(&inst).unwrap();
        prop_assert_eq!(set.len(), inst.len() + 2);
        prop_assert_eq!(decide(&set).is_some(), solve_2cns(&inst));
    }
}

#[test]
fn reduction_colors() {
    let inst = CougInstance::new(
        vec![Coordinate::from_integer(3)],
        vec![Coordinate::from_integer(7)],
    )
    .unwrap();
    let cns = reduce_coug_to_cns(&inst);
    let colors: Vec<ColorId> = cns.points().iter().map(|p| p.color).collect();
    assert_eq!(colors, vec![RED, BLUE, RED, BLUE]);
    let set = reduce_cns_to_4cc(&cns).unwrap();
    assert_eq!(set.num_colors(), 4);
}
