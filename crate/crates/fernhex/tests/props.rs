//! Property tests: structural invariants over randomly generated regions and
//! dent patterns, each checked against an independent route.

mod common;

use common::brute_force_count;
use fernhex::{
    count_frontier_dp, count_kasteleyn, trapezoid_count, trapezoid_with_dents, LatticeVec, Orient,
    RegionTransform, TriRegion, UnitTriangle,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_cell() -> impl Strategy<Value = UnitTriangle> {
    (0..4i64, -2..3i64, any::<bool>()).prop_map(|(u, v, up)| UnitTriangle {
        u,
        v,
        orient: if up { Orient::Up } else { Orient::Down },
    })
}

fn arb_region() -> impl Strategy<Value = TriRegion> {
    prop::collection::btree_set(arb_cell(), 0..12).prop_map(TriRegion::from_cells)
}

proptest! {
    #[test]
    fn transforms_preserve_counts_and_negate_balance(region in arb_region(), cu2 in -4i64..5, cv2 in -4i64..5, line in -2i64..3) {
        for t in [
            RegionTransform::Rotate180 { center: LatticeVec::from_doubled(cu2, cv2) },
            RegionTransform::MirrorHorizontal { line_v2: 2 * line },
        ] {
            let image = region.transform(t).unwrap();
            prop_assert_eq!(image.len(), region.len());
            prop_assert_eq!(image.balance(), -region.balance());
            prop_assert_eq!(image.transform(t).unwrap(), region.clone());
            prop_assert_eq!(
                count_frontier_dp(&image, 22).unwrap(),
                count_frontier_dp(&region, 22).unwrap()
            );
        }
    }

    #[test]
    fn engines_agree_with_backtracking(region in arb_region()) {
        let expected = BigUint::from(brute_force_count(&region));
        prop_assert_eq!(&count_frontier_dp(&region, 22).unwrap(), &expected);
        prop_assert_eq!(&count_kasteleyn(&region), &expected);
    }

    #[test]
    fn region_json_round_trips(region in arb_region()) {
        let json = serde_json::to_string(&region).unwrap();
        let back: TriRegion = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, region);
    }

    #[test]
    fn dent_product_matches_the_sweep(top in 0u32..4, dents in prop::collection::btree_set(1u32..9, 0..5)) {
        let dents: Vec<u32> = dents.into_iter().collect();
        let legs = dents.len() as u32;
        prop_assume!(dents.iter().all(|&d| d <= top + legs));
        let region = trapezoid_with_dents(top, legs, &dents).unwrap();
        let formula = trapezoid_count(top, legs, &dents).unwrap();
        prop_assert_eq!(count_frontier_dp(&region, 22).unwrap(), formula);
    }
}
