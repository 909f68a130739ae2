//! Every character table in the mandatory range validates exactly.

use hookline_groups::classical::{build_group, group_order, Family};
use hookline_groups::dixon::character_table;

const MANDATORY: &[(Family, usize, u64)] = &[
    (Family::SL, 2, 2),
    (Family::SL, 2, 3),
    (Family::SL, 2, 4),
    (Family::SL, 2, 5),
    (Family::SL, 2, 7),
    (Family::SL, 2, 8),
    (Family::SL, 2, 9),
    (Family::SL, 3, 2),
    (Family::SL, 3, 3),
    (Family::GL, 3, 2),
    (Family::GL, 3, 3),
    (Family::GL, 3, 4),
    (Family::Sp, 4, 2),
    (Family::Sp, 4, 3),
];

#[test]
fn mandatory_tables_validate() {
    for &(family, n, q) in MANDATORY {
        let g = build_group(family, n, q).unwrap();
        assert_eq!(g.order() as u128, group_order(family, n as u32, q));
        let t = character_table(&g).unwrap();
        let v = t.validate();
        assert!(v.ok(), "{family}_{n}({q}): {:?}", v.failure);
        assert_eq!(t.class_count(), g.class_count());
        let sum: u64 = t.degrees.iter().map(|d| d * d).sum();
        assert_eq!(sum, g.order());
        assert!(t.degrees.iter().all(|d| g.order() % d == 0));
    }
}

#[test]
fn known_degree_multisets() {
    let t = character_table(&build_group(Family::GL, 3, 2).unwrap()).unwrap();
    assert_eq!(t.degree_multiset(), vec![1, 3, 3, 6, 7, 8]);
    // Sp₄(2) ≅ S₆
    let t = character_table(&build_group(Family::Sp, 4, 2).unwrap()).unwrap();
    assert_eq!(t.degree_multiset(), vec![1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]);
    // SL₂(5): degrees of the binary icosahedral group
    let t = character_table(&build_group(Family::SL, 2, 5).unwrap()).unwrap();
    assert_eq!(t.degree_multiset(), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
}
