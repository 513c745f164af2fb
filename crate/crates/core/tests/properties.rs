use lozenge::counting::{count_matchings_frontier, count_matchings_oracle, count_symmetric_tilings, count_tilings, SymMethod};
use lozenge::duality::dual_graph;
use lozenge::formulas::macmahon_box;
use lozenge::lattice::{deserialize_region, hexagon, holed_hexagon, serialize_region, SymmetryKind::*};
use lozenge::verify::{check, IdentityId, Params};
use proptest::prelude::*;

fn holes() -> impl Strategy<Value = (u32, u32, Vec<u32>)> {
    (2u32..=7, 1u32..=2).prop_flat_map(|(a, b)| {
        proptest::sample::subsequence((1..=a / 2).collect::<Vec<_>>(), 0..=(a / 2) as usize)
            .prop_map(move |ks| (a, b, ks))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn engines_agree_on_hexagons(a in 1u32..=3, b in 1u32..=3, c in 1u32..=3) {
        let g = dual_graph(&hexagon(a, b, c).unwrap());
        let o = count_matchings_oracle(&g).unwrap();
        prop_assert_eq!(&o, &count_matchings_frontier(&g).unwrap());
        prop_assert_eq!(o, macmahon_box(a, b, c));
    }

    #[test]
    fn orbit_graph_matches_listing((a, b, ks) in holes()) {
        let r = holed_hexagon(a, b, &ks).unwrap();
        prop_assume!(count_tilings(&r).unwrap() <= 20_000u32.into());
        for gens in [vec![Rot180], vec![Rot180, ReflV], vec![ReflV]] {
            prop_assert_eq!(
                count_symmetric_tilings(&r, &gens, SymMethod::Enumerate).unwrap(),
                count_symmetric_tilings(&r, &gens, SymMethod::Quotient).unwrap()
            );
        }
    }

    #[test]
    fn half_turn_is_a_square((a, b, ks) in holes()) {
        let c = check(IdentityId::T2_1_even, &Params::new(a, b).with_ks(&ks)).unwrap();
        prop_assert!(c.verdict, "{}", c);
    }

    #[test]
    fn json_round_trip((a, b, ks) in holes()) {
        let r = holed_hexagon(a, b, &ks).unwrap();
        let back = deserialize_region(&serialize_region(&r)).unwrap();
        prop_assert_eq!(count_tilings(&back).unwrap(), count_tilings(&r).unwrap());
        prop_assert_eq!(back, r);
    }
}
