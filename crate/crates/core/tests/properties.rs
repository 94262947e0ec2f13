mod common;

use common::{arb_point, arb_set, cp};
use proptest::prelude::*;
use quadcross::decider::{candidate_sweeps, Direction};
use quadcross::geom::positive_area_rh4;
use quadcross::oracle::{
    candidate_set_oracle, oracle_centers, oracle_subsets, rh4_by_midlines, Side,
};
use quadcross::{decide, ColorId, ColoredPoint, Coordinate, Cross, Point, PointSet, Quadrant};

fn map_points(set: &PointSet, f: impl Fn(&ColoredPoint) -> ColoredPoint) -> PointSet {
    set.points().iter().map(f).collect()
}

fn transpose(set: &PointSet) -> PointSet {
    map_points(set, |p| ColoredPoint {
        x: p.y.clone(),
        y: p.x.clone(),
        color: p.color,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn decide_agrees_with_both_oracles(set in arb_set(10, 5, 5)) {
        let fast = decide(&set);
        let centers = oracle_centers(&set);
        let subsets = oracle_subsets(&set);
        prop_assert_eq!(fast.is_some(), centers.is_some());
        prop_assert_eq!(fast.is_some(), subsets.is_some());
        for cross in [fast, centers, subsets].into_iter().flatten() {
            prop_assert!(cross.verify(&set).is_ok(), "{:?}", cross);
        }
    }

    #[test]
    fn translation_and_scaling(
        set in arb_set(14, 6, 5),
        dx in -50i64..50,
        dy in -50i64..50,
        (sn, sd) in (1i64..7, 1i64..7),
        (tn, td) in (1i64..7, 1i64..7),
    ) {
        let (dx, dy) = (Coordinate::from_integer(dx), Coordinate::from_integer(dy));
        let (sx, sy) = (Coordinate::from_ratio(sn, sd), Coordinate::from_ratio(tn, td));
        let moved = map_points(&set, |p| ColoredPoint {
            x: &(&p.x * &sx) + &dx,
            y: &(&p.y * &sy) + &dy,
            color: p.color,
        });
        prop_assert_eq!(decide(&set).is_some(), decide(&moved).is_some());
    }

    #[test]
    fn permutation_and_recoloring(set in arb_set(14, 6, 6), shift in 1u32..100, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut pts = set.points().to_vec();
        pts.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        // an injective relabeling
        let relabeled: PointSet = pts
            .into_iter()
            .map(|p| ColoredPoint { color: ColorId(p.color.0 * 7 + shift), ..p })
            .collect();
        prop_assert_eq!(decide(&set).is_some(), decide(&relabeled).is_some());
    }

    #[test]
    fn reflections(set in arb_set(14, 6, 5)) {
        let answer = decide(&set).is_some();
        let t = transpose(&set);
        prop_assert_eq!(answer, decide(&t).is_some());
        let mirrored = map_points(&set, |p| ColoredPoint { x: -&p.x, ..p.clone() });
        prop_assert_eq!(answer, decide(&mirrored).is_some());
    }

    #[test]
    fn transposed_witness_swaps_off_diagonal_quadrants(set in arb_set(14, 6, 5)) {
        if let Some(cross) = decide(&set) {
            let mut witnesses = cross.witnesses.clone();
            for q in Quadrant::ALL {
                let p = cross.witness(q);
                witnesses[q.transposed().index()] = ColoredPoint { x: p.y.clone(), y: p.x.clone(), color: p.color };
            }
            let flipped = Cross {
                center: Point { x: cross.center.y.clone(), y: cross.center.x.clone() },
                witnesses,
            };
            prop_assert!(flipped.verify(&transpose(&set)).is_ok());
        }
    }

    #[test]
    fn swept_sets_match_characterization(set in arb_set(40, 12, 7)) {
        for lc in candidate_sweeps(&set) {
            let checks = [
                (&lc.ne, Side::Above, Direction::East),
                (&lc.nw, Side::Above, Direction::West),
                (&lc.sw, Side::Below, Direction::West),
                (&lc.se, Side::Below, Direction::East),
            ];
            for (swept, side, dir) in checks {
                let reference = candidate_set_oracle(&set, &lc.line, side, dir);
                prop_assert!(reference.accepts(swept), "line {:?} {:?} {:?}", lc.line, side, dir);
            }
        }
    }

    #[test]
    fn four_point_predicates_agree(pts in prop::array::uniform4(arb_point(4, 1))) {
        let rh = positive_area_rh4(&pts).unwrap();
        prop_assert_eq!(rh.is_some(), rh4_by_midlines(&pts));
        if let Some(c) = rh {
            prop_assert!(c.check_quadrants().is_ok());
        }
    }
}

#[test]
fn crowded_center_column() {
    // many colors stacked on the center's x-coordinate never count
    let mut pts: Vec<_> = (0..20).map(|i| cp(5, i, 10 + i as u32)).collect();
    pts.extend([cp(6, 19, 0), cp(4, 19, 1), cp(4, 0, 2)]);
    let set = PointSet::new(pts.clone());
    assert_eq!(decide(&set).is_some(), oracle_centers(&set).is_some());
    pts.push(cp(6, 0, 3));
    let set = PointSet::new(pts);
    decide(&set).unwrap().verify(&set).unwrap();
}

#[test]
fn large_values_take_the_big_path() {
    let huge = Coordinate::from_integer(i64::MAX);
    let set = PointSet::new(
        [(1, 1, 0), (-1, 1, 1), (-1, -1, 2), (1, -1, 3)]
            .iter()
            .map(|&(x, y, c)| ColoredPoint {
                x: &huge * &Coordinate::from_integer(x),
                y: &huge * &Coordinate::from_integer(y),
                color: ColorId(c),
            })
            .collect(),
    );
    let cross = decide(&set).unwrap();
    cross.verify(&set).unwrap();
    assert_eq!(cross.center, Point::new(0, 0));
}
