//! (d,i)-hooks, hook removal and leg parity.

use crate::array::Array;
use crate::error::{Error, Result};
use crate::sets;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A point (x, j) of an array: entry `x` in row `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HookPosition {
    pub entry: u32,
    pub row: u8,
}

impl HookPosition {
    pub fn new(entry: u32, row: u8) -> Self {
        HookPosition { entry, row: row & 1 }
    }

    /// D_{d,i}(x, j) = (x − d, j + i), or `None` if it leaves ℕ₀ × {0,1}.
    pub fn displaced(self, d: i64, i: u8) -> Option<HookPosition> {
        let x = self.entry as i64 - d;
        (0..=u32::MAX as i64)
            .contains(&x)
            .then(|| HookPosition::new(x as u32, self.row ^ (i & 1)))
    }
}

impl fmt::Display for HookPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.entry, self.row)
    }
}

fn check_displacement(d: i64, i: u8) -> Result<()> {
    if d == 0 && i & 1 == 0 {
        Err(Error::ZeroDisplacement)
    } else {
        Ok(())
    }
}

/// H_{d,i}(X) = {λ ∈ X : D_{d,i}(λ) ∈ ℕ₀^{(2)} ∖ X}, row 0 first, entries ascending.
pub fn hooks(x: &Array, d: i64, i: u8) -> Result<Vec<HookPosition>> {
    check_displacement(d, i)?;
    Ok(hooks_unchecked(x, d, i))
}

pub(crate) fn hooks_unchecked(x: &Array, d: i64, i: u8) -> Vec<HookPosition> {
    let mut out = Vec::new();
    for j in 0..2u8 {
        for &e in x.row(j) {
            let h = HookPosition::new(e, j);
            if let Some(t) = h.displaced(d, i) {
                if !x.contains(t.entry, t.row) {
                    out.push(h);
                }
            }
        }
    }
    out
}

pub fn is_hook(x: &Array, d: i64, i: u8, h: HookPosition) -> bool {
    x.contains(h.entry, h.row)
        && h.displaced(d, i).map_or(false, |t| !x.contains(t.entry, t.row))
}

/// X ∖_{d,i} H = X ⊖ H ⊖ D_{d,i}(H).
pub fn remove_hooks(x: &Array, d: i64, i: u8, hs: &[HookPosition]) -> Result<Array> {
    let mut out = x.clone();
    for &h in hs {
        let t = h
            .displaced(d, i)
            .ok_or_else(|| Error::NotAHook(h.to_string(), d, i))?;
        sets::toggle(out.row_mut(h.row), h.entry);
        sets::toggle(out.row_mut(t.row), t.entry);
    }
    Ok(out)
}

pub fn remove_hook(x: &Array, d: i64, i: u8, h: HookPosition) -> Result<Array> {
    remove_hooks(x, d, i, &[h])
}

/// Removal of a single known hook: move `h` to its displaced position.
pub(crate) fn remove_known(x: &Array, d: i64, i: u8, h: HookPosition) -> Array {
    let t = h.displaced(d, i).expect("hook displacement stays in range");
    let mut out = x.clone();
    sets::toggle(out.row_mut(h.row), h.entry);
    sets::toggle(out.row_mut(t.row), t.entry);
    out
}

/// l_{d,i}(λ, X) = ⟨{0..x}, X^j⟩ + ⟨{0..x−d}, (X∖λ)^{i+j}⟩ mod 2.
pub fn leg_parity(x: &Array, d: i64, i: u8, h: HookPosition) -> Result<u8> {
    check_displacement(d, i)?;
    if !is_hook(x, d, i, h) {
        return Err(Error::NotAHook(h.to_string(), d, i));
    }
    let y = remove_known(x, d, i, h);
    Ok(leg_parity_with(x, &y, d, i, h))
}

pub(crate) fn leg_parity_with(x: &Array, removed: &Array, d: i64, i: u8, h: HookPosition) -> u8 {
    let a = sets::initial_pairing(h.entry as i64, x.row(h.row));
    let b = sets::initial_pairing(h.entry as i64 - d, removed.row(h.row ^ (i & 1)));
    (a + b) & 1
}

/// Classical leg length of the hook of a β-set: entry `x` moved down to `x − d`
/// passes over the elements strictly between.
pub fn abacus_leg_length(beta: &[u32], x: u32, d: u32) -> u32 {
    beta.iter().filter(|&&b| b > x - d && b < x).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Array {
        s.parse().unwrap()
    }

    #[test]
    fn hook_sets() {
        assert_eq!(hooks(&a("{1|}"), 1, 0).unwrap(), vec![HookPosition::new(1, 0)]);
        assert!(hooks(&a("{0|0}"), 0, 1).unwrap().is_empty());
        assert_eq!(hooks(&a("{1|0}"), 0, 1).unwrap().len(), 2);
        assert_eq!(hooks(&a("{1|}"), 0, 0), Err(Error::ZeroDisplacement));
    }

    #[test]
    fn removal() {
        let x = a("{1|}");
        assert_eq!(remove_hook(&x, 1, 0, HookPosition::new(1, 0)).unwrap(), a("{0|}"));
        let x = a("{1|0}");
        let hs = hooks(&x, 0, 1).unwrap();
        assert_eq!(remove_hooks(&x, 0, 1, &hs).unwrap(), a("{0|1}"));
        assert!(remove_hook(&x, 2, 0, HookPosition::new(0, 1)).is_err());
    }

    #[test]
    fn leg_parities() {
        assert_eq!(leg_parity(&a("{1|}"), 1, 0, HookPosition::new(1, 0)).unwrap(), 0);
        // β-set {0,1,3}: removing the 3-hook at 3 passes 0 and 1... only those in (0,3)
        let x = a("{1,2,3|}");
        let h = HookPosition::new(3, 0);
        assert_eq!(leg_parity(&x, 3, 0, h).unwrap(), (abacus_leg_length(&[1, 2, 3], 3, 3) % 2) as u8);
        assert!(leg_parity(&x, 1, 0, HookPosition::new(2, 0)).is_err());
    }
}
