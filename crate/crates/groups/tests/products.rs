//! The Frobenius class-product formula against direct convolution, and coverage reports.

use hookline_groups::classical::{build_group, Family};
use hookline_groups::dixon::character_table;
use hookline_groups::products::{frobenius_count, frobenius_vs_convolution, thompson_coverage};
use hookline_groups::support::coxeter_torus_generator;
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn frobenius_equals_convolution() {
    for (family, n, q) in [(Family::SL, 2, 3), (Family::SL, 2, 5), (Family::SL, 2, 7), (Family::GL, 3, 2)] {
        let g = build_group(family, n, q).unwrap();
        let t = character_table(&g).unwrap();
        let check = frobenius_vs_convolution(&g, &t).unwrap();
        let r = g.class_count() as u64;
        assert_eq!(check.triples, r * r * r);
        assert!(check.mismatches.is_empty(), "{family}_{n}({q}): {:?}", check.mismatches.first());
    }
}

#[test]
fn involution_squares_to_identity_once() {
    // in SL₂(3) the central involution −I is its own class; (−I)² = I exactly once
    let g = build_group(Family::SL, 2, 3).unwrap();
    let t = character_table(&g).unwrap();
    let c = (0..g.class_count()).find(|&c| g.classes()[c].size == 1 && g.classes()[c].order == 2).unwrap();
    assert_eq!(frobenius_count(&t, c, c, 0).unwrap(), BigRational::from_integer(BigInt::from(1)));
}

#[test]
fn coxeter_class_coverage() {
    for (p, q) in [(3u32, 2u64), (3, 3)] {
        let g = build_group(Family::SL, p as usize, q).unwrap();
        let t = character_table(&g).unwrap();
        let torus = coxeter_torus_generator(p, q).unwrap();
        let rep = thompson_coverage(&g, &t, torus.t.pack()).unwrap();
        assert_eq!(rep.entries.len(), g.class_count());
        if g.order() <= 10_000 {
            assert!(rep.cross_validated);
        }
        // the identity is covered iff t⁻¹ is conjugate to t
        let self_inverse = g.inverse_class(rep.class) == rep.class;
        assert_eq!(rep.entries[0].covered, self_inverse);
    }
}

#[test]
fn small_class_leaves_gaps() {
    let g = build_group(Family::SL, 2, 5).unwrap();
    let t = character_table(&g).unwrap();
    let c = (0..g.class_count()).find(|&c| g.classes()[c].order == 3).unwrap();
    let rep = thompson_coverage(&g, &t, g.elements()[g.classes()[c].rep as usize]).unwrap();
    assert!(rep.cross_validated);
    assert!(!rep.uncovered.is_empty());
}
