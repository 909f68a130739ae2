//! Unipotent degrees against the hook formula, the Dixon tables and the counting audits.

use hookline::degrees::{
    audit_products, borel_crosscheck, count_degree_at_most, labels_of_kind, type_a_labels, unip_degree_a,
    unip_degree_a_by_hooks, unip_degree_bcd, CountKind,
};
use hookline::enumerate::{enumerate_symbols, SymbolKind};
use hookline::{BetaSet, Partition};
use hookline_groups::classical::{build_group, group_order, Family};
use hookline_groups::dixon::character_table;
use num_bigint::BigInt;

#[test]
fn beta_formula_matches_hook_formula() {
    for n in 1..=8 {
        for lambda in Partition::all(n) {
            let b = BetaSet::from_partition(&lambda);
            for q in [2, 3, 4, 5] {
                for twisted in [false, true] {
                    let d = unip_degree_a(&b, q, twisted).unwrap().value;
                    assert_eq!(d, unip_degree_a_by_hooks(&lambda, q, twisted).unwrap(), "{lambda} q={q}");
                }
            }
        }
    }
}

#[test]
fn type_a_degrees_in_gl3_2() {
    let t = character_table(&build_group(Family::GL, 3, 2).unwrap()).unwrap();
    for lambda in Partition::all(3) {
        let d = unip_degree_a(&BetaSet::from_partition(&lambda), 2, false).unwrap().value;
        assert!(t.degrees.iter().any(|&x| BigInt::from(x) == d), "{lambda}: {d}");
    }
}

#[test]
fn label_counts() {
    for r in 0..=9 {
        assert_eq!(type_a_labels(r).len() as u64, hookline::beta::partition_count(r as u32 + 1));
    }
    assert_eq!(enumerate_symbols(2, SymbolKind::OddDefect).len(), 6);
}

#[test]
fn borel_constituents_of_sp4() {
    for q in [2, 3] {
        let c = borel_crosscheck(2, q).unwrap();
        assert!(c.ok(), "{c:?}");
        assert_eq!(c.principal_degrees.len(), 5);
        assert!(c.multiplicities.iter().all(|&m| m >= 1));
        // the remaining rank-2 symbol {0,1,2|} has degree q(q−1)²/2
        assert_eq!(c.other_degrees.len(), 1);
        assert_eq!(c.other_degrees[0].1, q * (q - 1) * (q - 1) / 2);
    }
}

#[test]
fn counting_audits() {
    for kind in [CountKind::A, CountKind::OddDefect, CountKind::Split, CountKind::Twisted] {
        for rank in 1..=8 {
            for q in [2, 3] {
                let d = num_traits::pow(BigInt::from(q), rank as usize);
                let r = count_degree_at_most(kind, rank, q, &d).unwrap();
                assert!(r.ok(), "{kind:?} rank {rank} q {q}: {:?}", r.failures.first());
                assert!(r.count >= 1);
            }
        }
    }
    let r = count_degree_at_most(CountKind::OddDefect, 6, 2, &BigInt::from(64)).unwrap();
    assert!(r.ok());
}

#[test]
fn sum_of_squares_below_group_order() {
    for n in 1..=3u64 {
        for q in [2u64, 3] {
            let sum: BigInt = labels_of_kind(CountKind::OddDefect, n)
                .iter()
                .map(|s| {
                    let d = unip_degree_bcd(s, q).unwrap().value;
                    &d * &d
                })
                .sum();
            assert!(sum <= BigInt::from(group_order(Family::Sp, 2 * n as u32, q)), "n={n} q={q}");
        }
    }
}

#[test]
fn product_bounds() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        assert!(audit_products(q, 40));
    }
}
