//! Randomized invariants of β-sets, arrays, similarity classes and symbols.

use hookline::asai::{asai_verify, AsaiConfig};
use hookline::enumerate::{enumerate_symbols, SymbolKind};
use hookline::{Array, BetaSet, Partition, Symbol};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn row() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(0u32..=6, 0..=5).prop_map(|s| s.into_iter().collect())
}

fn array() -> impl Strategy<Value = Array> {
    (row(), row()).prop_map(|(t, b)| Array::new(t, b).unwrap())
}

proptest! {
    #[test]
    fn beta_shift_and_reduce(elems in row(), k in 0u32..=4) {
        let a = BetaSet::new(elems).unwrap();
        let s = a.shift(k);
        prop_assert_eq!(s.rank(), a.rank());
        prop_assert_eq!(s.reduce(), a.reduce());
        prop_assert_eq!(a.reduce().reduce(), a.reduce());
    }

    #[test]
    fn partition_roundtrip(parts in prop::collection::vec(1u32..=6, 0..=6)) {
        let lambda = Partition::from_parts(parts);
        let b = BetaSet::from_partition(&lambda);
        prop_assert_eq!(b.rank(), lambda.size());
        prop_assert_eq!(b.to_partition(), lambda);
    }

    #[test]
    fn rank_routes(x in array(), k in 0u32..=4) {
        prop_assert_eq!(x.rank_by_sum(), x.rank_by_beta());
        let y = x.shift(k);
        prop_assert_eq!(y.rk(), x.rk());
        prop_assert_eq!(y.defect(), x.defect());
        let rho = |r: &[u32]| BetaSet::new(r.to_vec()).unwrap().rank() as i64;
        let def = x.defect();
        let gap = if def.rem_euclid(2) == 1 { (def * def - 1) / 4 } else { def * def / 4 };
        prop_assert_eq!(x.rk() as i64, rho(x.top()) + rho(x.bottom()) + gap);
    }

    #[test]
    fn similarity_classes(x in array()) {
        let sim = x.similarity_class();
        let diff = x.sym_diff();
        prop_assert_eq!(sim.len(), 1usize << diff.len());
        let sp = x.special();
        prop_assert!(sp.defect() == 0 || sp.defect() == 1);
        prop_assert_eq!(sp.defect().rem_euclid(2) as usize, diff.len() % 2);
        let mut sharps = BTreeSet::new();
        for y in &sim {
            prop_assert_eq!(y.rk(), x.rk());
            prop_assert_eq!(y.special(), sp.clone());
            prop_assert_eq!(y.s(), x.s());
            let s = y.sharp();
            prop_assert!(s.iter().all(|v| diff.contains(v)));
            sharps.insert(s);
        }
        prop_assert_eq!(sharps.len(), sim.len());
    }

    #[test]
    fn symbol_canonical_form(x in array(), k in 0u32..=3) {
        let s = Symbol::new(&x, None);
        prop_assert_eq!(Symbol::new(&x.shift(k), None), s.clone());
        prop_assert_eq!(Symbol::new(&x.op(), None), s.clone());
        prop_assert_eq!(s.rank(), x.rk());
        prop_assert_eq!(s.defect(), x.defect().unsigned_abs());
        prop_assert_eq!(s.is_degenerate(), x.top() == x.bottom());
    }
}

#[test]
fn worked_examples() {
    let x: Array = "{1|0}".parse().unwrap();
    assert_eq!((x.rk(), x.defect()), (1, 0));
    assert_eq!(x.similarity_class().len(), 4);
    assert_eq!((x.s(), x.d()), (2, 0));
    assert!(x.sharp().is_empty());
    let y: Array = "{|0,1}".parse().unwrap();
    assert_eq!(y.sharp(), vec![1]);
    assert_eq!(y.special(), x);
    assert!("{1,1|}".parse::<Array>().is_err());
}

#[test]
fn symbol_counts() {
    assert_eq!(enumerate_symbols(0, SymbolKind::OddDefect).len(), 1);
    assert_eq!(enumerate_symbols(2, SymbolKind::OddDefect).len(), 6);
    for n in 0..=10 {
        assert_eq!(Partition::all(n).len() as u64, hookline::beta::partition_count(n));
    }
}

#[test]
fn operator_identities_small_range() {
    let r = asai_verify(&AsaiConfig { max_entry: 4, max_union: 4, max_rank: None, d_max: 4 });
    assert!(r.ok(), "{:?}", r.failures.first());
    assert!(r.flipped_sign_witness.is_some());
}
