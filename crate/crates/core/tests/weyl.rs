//! Hyperoctahedral characters against independent constructions.

use hookline::mn::{phi_value_symbol, rho_value, sym_char_value, PhiRoute};
use hookline::signed::{centralizer_order, class_list, factorial, sym_centralizer_order};
use hookline::weyl::{audit_bounds, audit_type_d, phi_cross_route, rho_table, BoundMode};
use hookline::{enumerate, Array, Partition, SignedCycleType, SignedPermutation};
use proptest::prelude::*;

/// Characters of S_a for a ≤ 3 indexed by (partition, cycle type).
fn sym_table(lambda: &[u32], mu: &[u32]) -> i64 {
    match (lambda, mu) {
        ([], []) => 1,
        ([1], [1]) => 1,
        ([2], _) => 1,
        ([1, 1], [1, 1]) => 1,
        ([1, 1], [2]) => -1,
        ([3], _) => 1,
        ([1, 1, 1], [1, 1, 1]) | ([1, 1, 1], [3]) => 1,
        ([1, 1, 1], [2, 1]) => -1,
        ([2, 1], [1, 1, 1]) => 2,
        ([2, 1], [2, 1]) => 0,
        ([2, 1], [3]) => -1,
        _ => panic!("no hardcoded value for {lambda:?} at {mu:?}"),
    }
}

/// Cycle type of the permutation w induces on the blocks {±a} for a in `points`.
fn block_cycle_type(w: &SignedPermutation, points: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; w.degree() + 1];
    let mut out = Vec::new();
    for &p in points {
        if seen[p] {
            continue;
        }
        let mut len = 0;
        let mut a = p;
        while !seen[a] {
            seen[a] = true;
            len += 1;
            a = w.apply(a as i32).unsigned_abs() as usize;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Ind from W_a × W_b of χ_α ⊗ (χ_β · η), η = product of signs on the second factor.
fn induced(alpha: &[u32], beta: &[u32], w: &SignedPermutation, all: &[SignedPermutation]) -> i64 {
    let a = alpha.iter().sum::<u32>() as usize;
    let n = w.degree();
    let first: Vec<usize> = (1..=a).collect();
    let second: Vec<usize> = (a + 1..=n).collect();
    let in_h = |x: &SignedPermutation| (1..=a).all(|i| x.apply(i as i32).unsigned_abs() as usize <= a);
    let mut total = 0i64;
    let mut h_order = 0i64;
    for x in all {
        if in_h(x) {
            h_order += 1;
        }
        let c = x.compose(w).compose(&x.inverse());
        if !in_h(&c) {
            continue;
        }
        let sign: i64 = second.iter().map(|&i| if c.apply(i as i32) < 0 { -1 } else { 1 }).product();
        total += sym_table(alpha, &block_cycle_type(&c, &first)) * sym_table(beta, &block_cycle_type(&c, &second)) * sign;
    }
    total / h_order
}

#[test]
fn mn_tables_match_induced_characters() {
    for n in 1..=3usize {
        let all = SignedPermutation::all(n);
        let classes = class_list(n as u32);
        let reps: Vec<SignedPermutation> = classes.iter().map(SignedPermutation::from_cycle_type).collect();
        let mut induced_rows = Vec::new();
        for a in 0..=n as u32 {
            for alpha in Partition::all(a) {
                for beta in Partition::all(n as u32 - a) {
                    induced_rows.push(reps.iter().map(|w| induced(alpha.parts(), beta.parts(), w, &all)).collect::<Vec<_>>());
                }
            }
        }
        induced_rows.sort();
        for defect in [0, 1] {
            let mut rows = rho_table(n as u64, defect).unwrap().values;
            rows.sort();
            assert_eq!(rows, induced_rows, "n = {n}, defect {defect}");
        }
    }
}

#[test]
fn mn_orthogonality() {
    for n in 0..=6 {
        for defect in [0, 1] {
            let t = rho_table(n, defect).unwrap();
            let o = t.orthogonality();
            assert!(o.ok(), "n = {n}, defect {defect}: {o:?}");
        }
    }
}

#[test]
fn phi_routes_agree() {
    for n in 0..=6 {
        let r = phi_cross_route(n).unwrap();
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches.first());
    }
}

#[test]
fn bound_audits() {
    for n in 1..=6 {
        assert!(audit_bounds(n, BoundMode::Rho).unwrap().ok);
        assert!(audit_bounds(n, BoundMode::Phi).unwrap().ok);
    }
    for n in 1..=4 {
        let r = audit_type_d(n).unwrap();
        assert!(r.ok && r.table_valid, "{r:?}");
    }
}

#[test]
fn centralizers_by_brute_force() {
    for n in 1..=5usize {
        let all = SignedPermutation::all(n);
        for t in class_list(n as u32) {
            let w = SignedPermutation::from_cycle_type(&t);
            let brute = all.iter().filter(|x| x.compose(&w) == w.compose(x)).count() as u64;
            assert_eq!(brute, centralizer_order(&t), "{t}");
            let k = t.len() as u32;
            if k == 1 {
                assert_eq!(brute, 2 * n as u64);
            }
            if t.pairwise_distinct() {
                assert!(brute <= 2u64.pow(k) * (n as u64).pow(k));
            }
        }
    }
}

#[test]
fn symmetric_centralizer_bound() {
    for n in 1..=8u32 {
        for mu in Partition::all(n) {
            let k = mu.len() as u64;
            assert!(sym_centralizer_order(&mu) <= factorial(k) * (n as u64).pow(k as u32));
        }
    }
}

#[test]
fn symmetric_group_values() {
    assert_eq!(sym_char_value(&Partition::from_parts(vec![2, 1]), &Partition::from_parts(vec![1, 1, 1])).unwrap(), 2);
    // non-hook shapes vanish on the n-cycle
    for lambda in Partition::all(6) {
        let hook = lambda.parts().get(1).map_or(true, |&p| p == 1);
        let v = sym_char_value(&lambda, &Partition::from_parts(vec![6])).unwrap();
        assert_eq!(v == 0, !hook, "{lambda}");
    }
}

#[test]
fn restriction_parity() {
    // on the coset W^e, ρ of the opposite array is (−1)^e times ρ
    for n in 1..=5 {
        let classes = class_list(n as u32);
        for defect in [0i64, 2] {
            for y in enumerate::ordered_symbols_with_defect(n, defect) {
                let yo = y.op();
                for t in &classes {
                    let a = rho_value(&y, t).unwrap();
                    let b = rho_value(&yo, t).unwrap();
                    let sign = if t.delta() == 1 { -1 } else { 1 };
                    assert_eq!(b, sign * a, "{y} on {t}");
                }
            }
        }
    }
}

#[test]
fn phi_on_symbols() {
    let x: Array = "{1|}".parse().unwrap();
    let t = SignedCycleType::new(vec![1]);
    assert_eq!(rho_value(&x, &t).unwrap(), 1);
    let s = hookline::Symbol::new(&x, None);
    assert_eq!(phi_value_symbol(&s, &t, PhiRoute::Definition).unwrap(), phi_value_symbol(&s, &t, PhiRoute::Recursion).unwrap());
}

fn label_and_class() -> impl Strategy<Value = (Array, Vec<i32>, Vec<usize>)> {
    (1u64..=5, 0i64..=1).prop_flat_map(|(n, defect)| {
        let labels = enumerate::ordered_symbols_with_defect(n, defect);
        let classes = class_list(n as u32);
        (prop::sample::select(labels), prop::sample::select(classes)).prop_flat_map(|(x, t)| {
            let cycles = t.cycles().to_vec();
            let len = cycles.len();
            (Just(x), Just(cycles), Just((0..len).collect::<Vec<_>>()).prop_shuffle())
        })
    })
}

proptest! {
    #[test]
    fn stripping_order_is_irrelevant((x, cycles, perm) in label_and_class()) {
        let sorted = SignedCycleType::new(cycles.clone());
        let shuffled = SignedCycleType::unsorted(perm.iter().map(|&i| cycles[i]).collect());
        prop_assert_eq!(rho_value(&x, &sorted).unwrap(), rho_value(&x, &shuffled).unwrap());
    }
}
