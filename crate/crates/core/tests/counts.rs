//! Counts frozen from an independent brute-force enumerator.

use lozenge::counting::{count_symmetric_tilings, count_tilings, SymMethod};
use lozenge::formulas::reduce_k1;
use lozenge::lattice::{cored_hexagon, holed_hexagon, Region, SymmetryKind::*};
use num_bigint::BigUint;

fn half_turn(r: &Region) -> BigUint {
    count_symmetric_tilings(r, &[Rot180], SymMethod::Quotient).unwrap()
}

fn both(r: &Region) -> BigUint {
    count_symmetric_tilings(r, &[Rot180, ReflV], SymMethod::Quotient).unwrap()
}

#[test]
fn holed_hexagon_values() {
    // (full side, b, holes, half-turn count, doubly symmetric count)
    let table: &[(u32, u32, &[u32], u64, u64)] = &[
        (4, 2, &[], 400, 20),
        (6, 2, &[2, 3], 441, 21),
        (7, 3, &[2], 777924, 882),
        (8, 1, &[2, 4], 4096, 64),
        (8, 2, &[2, 4], 254016, 504),
        (9, 2, &[3, 4], 291600, 540),
        (9, 3, &[2], 1506060864, 38808),
    ];
    for &(a, b, ks, mo, mov) in table {
        let r = holed_hexagon(a, b, ks).unwrap();
        assert_eq!(half_turn(&r), BigUint::from(mo), "{a} {b} {ks:?}");
        assert_eq!(both(&r), BigUint::from(mov), "{a} {b} {ks:?}");
    }
}

type CoredRow = (u32, u32, &'static [u32], u32, u64, u64, u64);

#[test]
fn cored_hexagon_values() {
    // (a, b, holes, x, total or 0 if not recorded, half-turn, doubly symmetric)
    let table: &[CoredRow] = &[
        (2, 1, &[], 1, 85, 9, 3),
        (2, 2, &[], 1, 1372, 36, 6),
        (3, 1, &[], 1, 11004, 100, 10),
        (3, 1, &[2], 1, 629, 25, 5),
        (3, 2, &[], 2, 51129, 225, 15),
        (4, 1, &[], 3, 2405, 49, 7),
        (5, 2, &[2], 2, 0, 1102500, 1050),
    ];
    for &(a, b, ks, x, m, mo, mov) in table {
        let r = cored_hexagon(a, b, ks, x).unwrap();
        if m > 0 {
            assert_eq!(count_tilings(&r).unwrap(), BigUint::from(m));
        }
        assert_eq!(half_turn(&r), BigUint::from(mo));
        assert_eq!(both(&r), BigUint::from(mov));
    }
}

#[test]
fn boundary_holes_strip_off() {
    for (a, b, ks) in [(4, 1, vec![1]), (6, 2, vec![1, 3]), (7, 1, vec![1, 2]), (8, 1, vec![1, 2, 4]), (5, 2, vec![1])] {
        let (a2, b2, ks2) = reduce_k1(a, b, &ks);
        let r = holed_hexagon(a, b, &ks).unwrap();
        let s = holed_hexagon(a2, b2, &ks2).unwrap();
        assert_eq!(count_tilings(&r).unwrap(), count_tilings(&s).unwrap(), "{a} {b} {ks:?}");
        assert_eq!(half_turn(&r), half_turn(&s));
        assert_eq!(both(&r), both(&s));
    }
}

#[test]
fn stripping_to_nothing() {
    let (a, b, ks) = reduce_k1(2, 3, &[1]);
    assert_eq!((a, b, ks.len()), (0, 4, 0));
    let r = holed_hexagon(a, b, &ks).unwrap();
    assert!(r.is_empty());
    assert_eq!(count_tilings(&holed_hexagon(2, 3, &[1]).unwrap()).unwrap(), BigUint::from(1u32));
}
