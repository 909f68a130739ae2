//! Kostka numbers, flag counts, stable flags and the level-n character pipeline.

use hookline::degrees::unip_degree_a;
use hookline::flags::{
    flag_bounds, flag_count, level_char_value, stable_flag_count, stable_flag_epsilon, EigStructure, FlagType,
    StableRoute,
};
use hookline::young::{inverse_kostka_row, kostka, kostka_stable, with_head};
use hookline::{BetaSet, Partition};
use hookline_groups::classical::{build_group, Family};
use hookline_groups::dixon::character_table;
use hookline_groups::field::Field;
use hookline_groups::parabolic::parabolic_permutation_character;

#[test]
fn kostka_unitriangular() {
    for n in 1..=8 {
        let ps = Partition::all(n);
        for l in &ps {
            for m in &ps {
                let k = kostka(l, m).unwrap();
                if l == m {
                    assert_eq!(k, 1);
                } else if !l.dominates(m) {
                    assert_eq!(k, 0, "{l} {m}");
                }
            }
        }
    }
}

#[test]
fn kostka_stability() {
    let tails: Vec<Partition> = (0..=4).flat_map(Partition::all).collect();
    for lt in &tails {
        for mt in &tails {
            for n in 2..=12u64 {
                let (Ok(l), Ok(m)) = (with_head(lt, n), with_head(mt, n)) else { continue };
                if 2 * (m.first() as u64) < n || l.first() < lt.first() {
                    continue;
                }
                let direct = kostka(&l, &m).unwrap();
                assert_eq!(kostka_stable(lt, mt, n).unwrap(), direct, "{lt} {mt} N={n}");
            }
        }
    }
}

#[test]
fn inverse_rows_invert() {
    for n in 1..=12u32 {
        for lambda in Partition::all(n) {
            if n - lambda.first() > 4 {
                continue;
            }
            let row = inverse_kostka_row(&lambda, 4).unwrap();
            for nu in Partition::all(n) {
                let s: i128 = row.iter().map(|(mu, c)| c * kostka(&nu, mu).unwrap() as i128).sum();
                assert_eq!(s, i128::from(nu == lambda), "{lambda} against {nu}");
            }
        }
    }
}

#[test]
fn flag_counts_match_enumeration() {
    let k = Field::new(2).unwrap();
    for n in 1..=6u32 {
        for dims in [vec![], vec![1], vec![2], vec![1, 2]] {
            let Ok(a) = FlagType::new(dims, n) else { continue };
            let brute = stable_flag_count(&k, &EigStructure::identity(n), &a, StableRoute::Brute).unwrap();
            assert_eq!(brute, flag_count(&a, 2), "{a:?}");
        }
    }
}

#[test]
fn flag_bounds_and_ratios() {
    for q in [2, 3, 4, 5] {
        // nonempty types; the empty flag is counted exactly once
        for mask in 1u32..16 {
            let dims: Vec<u32> = (1..=4).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            for n in 4..=50 {
                let a = FlagType::new(dims.clone(), n).unwrap();
                let b = flag_bounds(&a, q).unwrap();
                assert!(b.lower && b.upper && b.ratio, "{a:?} q={q}: {b:?}");
            }
        }
    }
}

/// All ways to write n as an ordered sum of `parts` positive multiplicities.
fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (1..n).flat_map(|first| compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
        rest.insert(0, first);
        rest
    })).collect()
}

#[test]
fn stable_flag_routes_agree() {
    for (q, max_n) in [(2u64, 12u32), (3, 7), (4, 6), (5, 5)] {
        let k = Field::new(q).unwrap();
        let eigen: Vec<u8> = k.nonzero().collect();
        for n in 1..=max_n {
            for used in 1..=eigen.len().min(n as usize) {
                for mults in compositions(n, used) {
                    let g = EigStructure::Split(eigen.iter().copied().zip(mults).collect());
                    for dims in [vec![1], vec![2], vec![1, 2]] {
                        let Ok(a) = FlagType::new(dims, n) else { continue };
                        let f = stable_flag_count(&k, &g, &a, StableRoute::Formula).unwrap();
                        let b = stable_flag_count(&k, &g, &a, StableRoute::Brute).unwrap();
                        assert_eq!(f, b, "q={q} {g:?} {a:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn level_values_at_identity() {
    for q in [2u64, 3] {
        let k = Field::new(q).unwrap();
        for n in 1..=16u32 {
            for lambda in Partition::all(n) {
                if n - lambda.first() > 4 {
                    continue;
                }
                let v = level_char_value(&k, &lambda, &EigStructure::identity(n)).unwrap();
                assert!(v.degree_matches, "{lambda} q={q}");
                let d = unip_degree_a(&BetaSet::from_partition(&lambda), q, false).unwrap().value;
                assert_eq!(v.value, d.to_string());
            }
        }
    }
}

fn desk_elements(k: &Field, n: u32) -> Vec<EigStructure> {
    vec![
        EigStructure::transvection(n).unwrap(),
        EigStructure::jordan(&[2, 2], n).unwrap(),
        EigStructure::jordan(&[3], n).unwrap(),
        EigStructure::irreducible_block(k, 2, n).unwrap(),
    ]
}

#[test]
fn stable_flags_at_forty() {
    let k = Field::new(2).unwrap();
    let a = FlagType::new(vec![1, 2], 40).unwrap();
    for g in desk_elements(&k, 40) {
        let r = stable_flag_epsilon(&k, &g, &a).unwrap();
        assert!(r.support <= 2);
        assert!(r.log2_abs_epsilon < -20.0, "{g:?}: {r:?}");
    }
}

#[test]
fn low_level_ratios_at_forty() {
    let k = Field::new(2).unwrap();
    for g in desk_elements(&k, 40) {
        for parts in [vec![39, 1], vec![38, 2], vec![38, 1, 1]] {
            let v = level_char_value(&k, &Partition::from_parts(parts), &g).unwrap();
            assert!(v.degree_matches);
            assert!(v.log2_abs_ratio_minus_one < -13.0, "{g:?}: {v:?}");
        }
    }
}

/// φ_μ = Σ_λ K_{λμ} χ_λ inside GL_n(q), with χ_λ identified in the Dixon table.
#[test]
fn permutation_characters_decompose() {
    for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
        let g = build_group(Family::GL, n, q).unwrap();
        let t = character_table(&g).unwrap();
        let parts = Partition::all(n as u32);
        let perm = |mu: &Partition| {
            let mut blocks: Vec<usize> = mu.parts().iter().map(|&p| p as usize).collect();
            blocks.reverse();
            parabolic_permutation_character(&g, &blocks).unwrap()
        };
        let phis: Vec<Vec<i64>> = parts.iter().map(perm).collect();
        let mut chis = Vec::new();
        for lambda in &parts {
            let row = inverse_kostka_row(lambda, n as u32).unwrap();
            let mut theta = vec![0i64; g.class_count()];
            for (mu, c) in &row {
                let idx = parts.iter().position(|p| p == mu).unwrap();
                for (x, y) in theta.iter_mut().zip(&phis[idx]) {
                    *x += *c as i64 * y;
                }
            }
            let hits: Vec<usize> = (0..t.class_count()).filter(|&c| t.multiplicity(&theta, c).unwrap() != 0).collect();
            assert_eq!(hits.len(), 1, "GL_{n}({q}) {lambda}");
            assert_eq!(t.multiplicity(&theta, hits[0]).unwrap(), 1);
            let d = unip_degree_a(&BetaSet::from_partition(lambda), q, false).unwrap().value;
            assert_eq!(d, t.degrees[hits[0]].into());
            chis.push(theta);
        }
        for (mi, mu) in parts.iter().enumerate() {
            for c in 0..g.class_count() {
                let s: i64 = parts.iter().zip(&chis).map(|(l, chi)| kostka(l, mu).unwrap() as i64 * chi[c]).sum();
                assert_eq!(s, phis[mi][c]);
            }
        }
    }
}
