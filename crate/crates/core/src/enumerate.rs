//! Enumeration of ordered and unordered symbols of a given rank.

use crate::array::{Array, DegenerateSign, Symbol};
use crate::beta::{BetaSet, Partition};
use serde::{Deserialize, Serialize};

/// Which family of labels to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymbolKind {
    /// Unordered symbols of odd defect (types B and C).
    OddDefect,
    /// Unordered symbols of even defect, degenerate ones twice (type D).
    EvenDefect,
}

/// Largest |defect| with ⌊Def²/4⌋ ≤ rank.
pub fn max_defect(rank: u64) -> i64 {
    let mut d = 0i64;
    while ((d + 1) * (d + 1) / 4) as u64 <= rank {
        d += 1;
    }
    d
}

/// The reduced array with rows encoding (α, β) and the given defect.
pub fn array_from_bipartition(alpha: &Partition, beta: &Partition, defect: i64) -> Array {
    let (la, lb) = (alpha.len() as i64, beta.len() as i64);
    // smallest row lengths t, b with t − b = defect, t ≥ len α, b ≥ len β
    let b = lb.max(la - defect);
    let t = b + defect;
    let top = BetaSet::from_partition_with_len(alpha, t as usize).expect("row long enough");
    let bottom = BetaSet::from_partition_with_len(beta, b as usize).expect("row long enough");
    Array::from_rows([top.elements().to_vec(), bottom.elements().to_vec()])
}

/// All ordered symbols (reduced arrays) of the given rank and defect.
pub fn ordered_symbols_with_defect(rank: u64, defect: i64) -> Vec<Array> {
    let base = (defect * defect / 4) as u64;
    if base > rank {
        return Vec::new();
    }
    let rest = (rank - base) as u32;
    let mut out = Vec::new();
    for a in (0..=rest).rev() {
        for alpha in Partition::all(a) {
            for beta in Partition::all(rest - a) {
                out.push(array_from_bipartition(&alpha, &beta, defect));
            }
        }
    }
    out
}

/// All ordered symbols of the given rank, every defect, defects in the order 0, 1, −1, 2, −2, …
pub fn ordered_symbols(rank: u64) -> Vec<Array> {
    let dm = max_defect(rank);
    let mut out = ordered_symbols_with_defect(rank, 0);
    for d in 1..=dm {
        out.extend(ordered_symbols_with_defect(rank, d));
        out.extend(ordered_symbols_with_defect(rank, -d));
    }
    out
}

/// Unordered symbols of the given rank in canonical form.
pub fn enumerate_symbols(rank: u64, kind: SymbolKind) -> Vec<Symbol> {
    let dm = max_defect(rank);
    let mut out = Vec::new();
    match kind {
        SymbolKind::OddDefect => {
            for d in (1..=dm).step_by(2) {
                out.extend(ordered_symbols_with_defect(rank, d).iter().map(|x| Symbol::new(x, None)));
            }
        }
        SymbolKind::EvenDefect => {
            for x in ordered_symbols_with_defect(rank, 0) {
                if x.top() == x.bottom() {
                    out.push(Symbol::new(&x, Some(DegenerateSign::Plus)));
                    out.push(Symbol::new(&x, Some(DegenerateSign::Minus)));
                } else if x <= x.op() {
                    out.push(Symbol::new(&x, None));
                }
            }
            for d in (2..=dm).step_by(2) {
                out.extend(ordered_symbols_with_defect(rank, d).iter().map(|x| Symbol::new(x, None)));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_symbols(2, SymbolKind::OddDefect).len(), 6);
        assert_eq!(enumerate_symbols(0, SymbolKind::OddDefect).len(), 1);
        // four of defect ≡ 0 (mod 4), two of defect 2
        assert_eq!(enumerate_symbols(2, SymbolKind::EvenDefect).len(), 6);
        for n in 0..6 {
            for x in ordered_symbols(n) {
                assert!(x.is_reduced(), "{x}");
                assert_eq!(x.rk(), n, "{x}");
            }
        }
    }

    #[test]
    fn examples() {
        let x = array_from_bipartition(&Partition::from_parts(vec![]), &Partition::from_parts(vec![1]), 1);
        assert_eq!(x.to_string(), "{0,1|1}");
        let x = array_from_bipartition(&Partition::from_parts(vec![1]), &Partition::from_parts(vec![]), 1);
        assert_eq!(x.to_string(), "{1|}");
    }
}
