//! Linear operators on formal sums of arrays: the Fourier transform R̃ and its
//! parity pieces R̃_e, hook operators H̃^j_{d,i}, and the sign maps Θ, ε, op.

use crate::array::{Array, DegenerateSign, Symbol};
use crate::error::Result;
use crate::formal::FormalSum;
use crate::hooks::{self, HookPosition};
use crate::sets;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub type ArraySum = FormalSum<Array>;

fn signed(coeff: &BigRational, negative: bool) -> BigRational {
    if negative {
        -coeff.clone()
    } else {
        coeff.clone()
    }
}

/// R̃ restricted to a single array. `parity` selects R̃_e (only Y with |Y♯| ≡ e).
pub fn fourier_array(x: &Array, parity: Option<u8>) -> ArraySum {
    let sp = x.special();
    let diff = x.sym_diff();
    let x_sharp = sets::sym_diff(x.bottom(), sp.bottom());
    let s_exp = (diff.len() as i64 - sp.defect()) / 2;
    let coeff = BigRational::new(BigInt::one(), BigInt::one() << s_exp as usize);
    let mut out = FormalSum::zero();
    for y in x.similarity_class() {
        let y_sharp = sets::sym_diff(y.bottom(), sp.bottom());
        if let Some(e) = parity {
            if y_sharp.len() % 2 != e as usize % 2 {
                continue;
            }
        }
        let sign = sets::pairing(&x_sharp, &y_sharp);
        out.add_term(y, signed(&coeff, sign == 1));
    }
    out
}

/// R̃(s) = Σ_X c_X · s(X)^{-1} Σ_{Y ∈ Sim(X)} (−1)^{⟨X♯, Y♯⟩} Y.
pub fn fourier(s: &ArraySum) -> ArraySum {
    s.map_linear(|x| fourier_array(x, None))
}

/// R̃_e: the part of R̃ supported on Y with d(Y) ≡ e (mod 2).
pub fn fourier_e(s: &ArraySum, e: u8) -> ArraySum {
    s.map_linear(|x| fourier_array(x, Some(e & 1)))
}

/// H̃^j_{d,i}(X) = Σ_{λ ∈ H_{d,i}(X)} (−1)^{j·δ(λ) + l_{d,i}(λ,X)} X ∖ λ.
pub fn hook_operator_array(x: &Array, d: i64, i: u8, j: u8) -> ArraySum {
    let mut out = FormalSum::zero();
    for h in hooks::hooks_unchecked(x, d, i) {
        let y = hooks::remove_known(x, d, i, h);
        let l = hooks::leg_parity_with(x, &y, d, i, h);
        let sign = ((j & 1) * h.row + l) & 1;
        out.add_term(y, signed(&BigRational::one(), sign == 1));
    }
    out
}

/// Linear extension of [`hook_operator_array`]. Requires d ≠ 0.
pub fn hook_operator(s: &ArraySum, d: i64, i: u8, j: u8) -> Result<ArraySum> {
    if d == 0 {
        return Err(crate::error::Error::Precondition("hook operators need d ≠ 0".into()));
    }
    Ok(s.map_linear(|x| hook_operator_array(x, d, i, j)))
}

/// Θ(X) = (−1)^{Def X} X.
pub fn theta(s: &ArraySum) -> ArraySum {
    s.map_sign(|x| x.defect().rem_euclid(2) == 1)
}

/// ε(X) = (−1)^{d(X)} X.
pub fn eps(s: &ArraySum) -> ArraySum {
    s.map_sign(|x| x.d().rem_euclid(2) == 1)
}

/// X ↦ X^op.
pub fn op(s: &ArraySum) -> ArraySum {
    s.map_keys(|x| x.op())
}

/// Projection to ordered symbols (shift classes).
pub fn to_ordered(s: &ArraySum) -> ArraySum {
    s.map_keys(|x| x.reduce())
}

/// The map ⟨−⟩ to unordered symbols: a degenerate array goes to ⟨X⟩₊ + ⟨X⟩₋.
pub fn to_unordered(s: &ArraySum) -> FormalSum<Symbol> {
    let mut out = FormalSum::zero();
    for (x, c) in s.iter() {
        let sym = Symbol::new(x, None);
        if sym.is_degenerate() {
            out.add_term(sym.clone(), c.clone());
            out.add_term(Symbol::new(x, Some(DegenerateSign::Minus)), c.clone());
        } else {
            out.add_term(sym, c.clone());
        }
    }
    out
}

/// All (d,i)-hooks of every term's array (convenience for reports).
pub fn hook_positions(x: &Array, d: i64, i: u8) -> Vec<HookPosition> {
    hooks::hooks_unchecked(x, d, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal::rational;

    fn a(s: &str) -> Array {
        s.parse().unwrap()
    }

    fn t(s: &str) -> ArraySum {
        FormalSum::term(a(s))
    }

    #[test]
    fn fourier_examples() {
        let r = fourier(&t("{1|}"));
        assert_eq!(r, t("{1|}").add(&t("{|1}")));
        let r = fourier(&t("{1|0}"));
        let half = rational(1, 2);
        let mut e = FormalSum::zero();
        for s in ["{1|0}", "{0|1}", "{0,1|}", "{|0,1}"] {
            e.add_term(a(s), half.clone());
        }
        assert_eq!(r, e);
        assert_eq!(fourier_e(&t("{1|0}"), 0).add(&fourier_e(&t("{1|0}"), 1)), r);
    }

    #[test]
    fn hook_operator_examples() {
        assert_eq!(hook_operator(&t("{1|}"), 1, 0, 0).unwrap(), t("{0|}"));
        assert!(hook_operator(&t("{0,1|0}"), 1, 0, 1).unwrap().is_zero());
        assert!(hook_operator(&t("{1|}"), 0, 1, 0).is_err());
    }

    #[test]
    fn unordered_projection() {
        let u = to_unordered(&t("{1|1}"));
        assert_eq!(u.len(), 2);
        let u = to_unordered(&t("{1|}").add(&t("{0,2|0}").neg()));
        assert!(u.is_zero());
    }
}
