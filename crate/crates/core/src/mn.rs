//! Murnaghan–Nakayama evaluation: classical characters of S_n on β-sets,
//! irreducible characters ρ of W(B_n) on ordered symbols, and the class
//! functions φ obtained from them by the defect-filtered Fourier sum.

use crate::array::{Array, Symbol};
use crate::beta::{BetaSet, Partition};
use crate::error::{Error, Result};
use crate::hooks;
use crate::sets;
use crate::signed::SignedCycleType;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// How to evaluate φ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhiRoute {
    /// The Fourier-type sum over the similarity class.
    Definition,
    /// The hook-removal recursion with (d,j)-hooks.
    Recursion,
}

fn strip_classical(beta: &[u32], parts: &[u32]) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for &b in beta {
        if b < r || sets::contains(beta, b - r) {
            continue;
        }
        let leg = hooks::abacus_leg_length(beta, b, r);
        let mut next: Vec<u32> = beta.iter().map(|&c| if c == b { b - r } else { c }).collect();
        next.sort_unstable();
        let v = strip_classical(&next, rest);
        total += if leg % 2 == 1 { -v } else { v };
    }
    total
}

/// χ_λ(μ) for S_n, removing rim hooks of the parts of μ in the given order.
pub fn sym_char_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let beta = BetaSet::from_partition(lambda);
    Ok(strip_classical(beta.elements(), mu.parts()))
}

fn check_rank(x: &Array, t: &SignedCycleType) -> Result<()> {
    if x.rk() != t.size() {
        return Err(Error::RankMismatch { symbol: x.rk(), class: t.size() });
    }
    Ok(())
}

fn rho_ordered(x: &Array, cycles: &[i32]) -> i64 {
    let Some((&c, rest)) = cycles.split_first() else {
        return 1;
    };
    let (d, j) = (c.abs() as i64, u8::from(c < 0));
    let mut total = 0;
    for h in hooks::hooks_unchecked(x, d, 0) {
        let y = hooks::remove_known(x, d, 0, h);
        let sign = (j * h.row + hooks::leg_parity_with(x, &y, d, 0, h)) & 1;
        let v = rho_ordered(&y, rest);
        total += if sign == 1 { -v } else { v };
    }
    total
}

/// ρ_⟦X⟧(w), stripping the cycles of `t` in their stored order. Meaningful as an
/// irreducible character when Def(X) ∈ {0, 1}; evaluated by the same rule otherwise.
pub fn rho_value(x: &Array, t: &SignedCycleType) -> Result<i64> {
    check_rank(x, t)?;
    Ok(rho_ordered(x, t.cycles()))
}

/// Memoized evaluator for ρ and φ, keyed by (reduced array, remaining cycles).
/// Each instance is single-owner; parallel sweeps use one per task.
#[derive(Default)]
pub struct Evaluator {
    rho: HashMap<(Array, Vec<i32>), i64>,
    phi: HashMap<(Array, Vec<i32>), BigRational>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    fn rho_rec(&mut self, x: &Array, cycles: &[i32]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (x.reduce(), cycles.to_vec());
        if let Some(&v) = self.rho.get(&key) {
            return v;
        }
        let (d, j) = (c.abs() as i64, u8::from(c < 0));
        let mut total = 0;
        for h in hooks::hooks_unchecked(x, d, 0) {
            let y = hooks::remove_known(x, d, 0, h);
            let sign = (j * h.row + hooks::leg_parity_with(x, &y, d, 0, h)) & 1;
            let v = self.rho_rec(&y, rest);
            total += if sign == 1 { -v } else { v };
        }
        self.rho.insert(key, total);
        total
    }

    /// ρ_⟦X⟧ on the class `t` (cycles taken in sorted order).
    pub fn rho(&mut self, x: &Array, t: &SignedCycleType) -> Result<i64> {
        check_rank(x, t)?;
        Ok(self.rho_rec(x, t.cycles()))
    }

    fn phi_definition_rec(&mut self, x: &Array, cycles: &[i32]) -> BigRational {
        let sp = x.special();
        let delta = sp.defect();
        let x_sharp = x.sharp();
        let mut total = BigInt::zero();
        for y in x.similarity_class() {
            if y.defect() != delta {
                continue;
            }
            let v = BigInt::from(self.rho_rec(&y, cycles));
            if sets::pairing(&x_sharp, &y.sharp()) == 1 {
                total -= v;
            } else {
                total += v;
            }
        }
        BigRational::new(total, BigInt::from(x.s()))
    }

    fn phi_recursion_rec(&mut self, x: &Array, cycles: &[i32]) -> BigRational {
        let Some((&c, rest)) = cycles.split_first() else {
            return self.phi_definition_rec(x, cycles);
        };
        let key = (x.reduce(), cycles.to_vec());
        if let Some(v) = self.phi.get(&key) {
            return v.clone();
        }
        let (d, j) = (c.abs() as i64, u8::from(c < 0));
        let mut total = BigRational::zero();
        for h in hooks::hooks_unchecked(x, d, j) {
            let y = hooks::remove_known(x, d, j, h);
            let v = self.phi_recursion_rec(&y, rest);
            if hooks::leg_parity_with(x, &y, d, j, h) == 1 {
                total -= v;
            } else {
                total += v;
            }
        }
        if j == 1 && x.defect().rem_euclid(2) == 0 {
            total = -total;
        }
        self.phi.insert(key, total.clone());
        total
    }

    /// φ_⟦X⟧ on the class `t` by the chosen route.
    pub fn phi(&mut self, x: &Array, t: &SignedCycleType, route: PhiRoute) -> Result<BigRational> {
        check_rank(x, t)?;
        Ok(match route {
            PhiRoute::Definition => self.phi_definition_rec(x, t.cycles()),
            PhiRoute::Recursion => self.phi_recursion_rec(x, t.cycles()),
        })
    }

    /// φ_⟨X⟩ for an unordered symbol. Even-defect symbols live on the coset W^e,
    /// e = d(X) mod 2, and reject classes outside it.
    pub fn phi_symbol(&mut self, sym: &Symbol, t: &SignedCycleType, route: PhiRoute) -> Result<BigRational> {
        let x = sym.canonical();
        if x.defect().rem_euclid(2) == 0 {
            let e = x.d().rem_euclid(2) as u8;
            if t.delta() != e {
                return Err(Error::CosetMismatch { symbol: sym.to_string(), class: t.to_string(), expected: e });
            }
        }
        self.phi(x, t, route)
    }
}

/// φ_⟦X⟧(w) with a fresh evaluator.
pub fn phi_value(x: &Array, t: &SignedCycleType, route: PhiRoute) -> Result<BigRational> {
    Evaluator::new().phi(x, t, route)
}

/// φ_⟨X⟩(w) with a fresh evaluator (coset-checked for even defect).
pub fn phi_value_symbol(sym: &Symbol, t: &SignedCycleType, route: PhiRoute) -> Result<BigRational> {
    Evaluator::new().phi_symbol(sym, t, route)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal::rational;

    fn a(s: &str) -> Array {
        s.parse().unwrap()
    }
    fn t(v: &[i32]) -> SignedCycleType {
        SignedCycleType::new(v.to_vec())
    }
    fn p(v: &[u32]) -> Partition {
        Partition::from_parts(v.to_vec())
    }

    #[test]
    fn classical() {
        assert_eq!(sym_char_value(&p(&[3]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(sym_char_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sym_char_value(&p(&[2, 2]), &p(&[4])).unwrap(), 0);
        assert_eq!(sym_char_value(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert!(sym_char_value(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_value(&a("{1|}"), &t(&[1])).unwrap(), 1);
        assert_eq!(rho_value(&a("{1|}"), &t(&[-1])).unwrap(), 1);
        assert_eq!(rho_value(&a("{0,1|1}"), &t(&[-1])).unwrap(), -1);
        assert!(rho_value(&a("{1|}"), &t(&[1, 1])).is_err());
    }

    #[test]
    fn phi_examples() {
        let x = a("{1|}");
        for c in [t(&[1]), t(&[-1])] {
            let r = BigRational::from_integer(rho_value(&x, &c).unwrap().into());
            assert_eq!(phi_value(&x, &c, PhiRoute::Definition).unwrap(), r);
            assert_eq!(phi_value(&x, &c, PhiRoute::Recursion).unwrap(), r);
        }
        let e = t(&[]);
        assert_eq!(phi_value(&a("{0,1|0}"), &e, PhiRoute::Definition).unwrap(), rational(1, 1));
        assert_eq!(phi_value(&a("{0,1|0}"), &e, PhiRoute::Recursion).unwrap(), rational(1, 1));
    }

    #[test]
    fn coset_check() {
        let sym = Symbol::new(&a("{1|0}"), None);
        assert!(phi_value_symbol(&sym, &t(&[1]), PhiRoute::Definition).is_ok());
        assert!(matches!(
            phi_value_symbol(&sym, &t(&[-1]), PhiRoute::Definition),
            Err(Error::CosetMismatch { .. })
        ));
    }
}
