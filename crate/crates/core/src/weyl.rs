//! Character tables of W(B_n) from the MN rule, their orthogonality checks,
//! the φ cross-route sweep and the bound audits.

use crate::array::Array;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::mn::{Evaluator, PhiRoute};
use crate::signed::{centralizer_order, class_list, factorial, SignedCycleType, SignedPermOps, SignedPermutation};
use hookline_groups::dixon::character_table;
use hookline_groups::group::SmallGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Rows ρ_⟦X⟧ for the ordered symbols of rank n and defect δ ∈ {0, 1}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RhoTable {
    pub n: u64,
    pub defect: i64,
    pub labels: Vec<Array>,
    pub classes: Vec<SignedCycleType>,
    pub values: Vec<Vec<i64>>,
}

pub fn group_order(n: u64) -> u64 {
    factorial(n) << n
}

pub fn rho_table(n: u64, defect: i64) -> Result<RhoTable> {
    let labels = enumerate::ordered_symbols_with_defect(n, defect);
    let classes = class_list(n as u32);
    let mut ev = Evaluator::new();
    let mut values = Vec::with_capacity(labels.len());
    for x in &labels {
        values.push(classes.iter().map(|t| ev.rho(x, t)).collect::<Result<Vec<_>>>()?);
    }
    Ok(RhoTable { n, defect, labels, classes, values })
}

/// Outcome of the two orthogonality relations, with the first offending pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Orthogonality {
    pub rows: bool,
    pub columns: bool,
    pub row_failure: Option<(usize, usize)>,
    pub column_failure: Option<(usize, usize)>,
}

impl Orthogonality {
    pub fn ok(&self) -> bool {
        self.rows && self.columns
    }
}

impl RhoTable {
    pub fn orthogonality(&self) -> Orthogonality {
        let order = group_order(self.n) as i128;
        let cents: Vec<i128> = self.classes.iter().map(|t| centralizer_order(t) as i128).collect();
        let mut row_failure = None;
        'rows: for a in 0..self.values.len() {
            for b in a..self.values.len() {
                let s: i128 = (0..cents.len())
                    .map(|c| (order / cents[c]) * self.values[a][c] as i128 * self.values[b][c] as i128)
                    .sum();
                if s != if a == b { order } else { 0 } {
                    row_failure = Some((a, b));
                    break 'rows;
                }
            }
        }
        let mut column_failure = None;
        'cols: for c in 0..cents.len() {
            for e in c..cents.len() {
                let s: i128 = self.values.iter().map(|r| r[c] as i128 * r[e] as i128).sum();
                if s != if c == e { cents[c] } else { 0 } {
                    column_failure = Some((c, e));
                    break 'cols;
                }
            }
        }
        Orthogonality {
            rows: row_failure.is_none() && self.values.len() == cents.len(),
            columns: column_failure.is_none(),
            row_failure,
            column_failure,
        }
    }
}

/// A disagreement between the two φ routes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiMismatch {
    pub symbol: String,
    pub class: String,
    pub definition: String,
    pub recursion: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct PhiReport {
    pub checked: u64,
    pub mismatches: Vec<PhiMismatch>,
}

/// Compares both φ routes for every ordered symbol of rank `n` and every class.
pub fn phi_cross_route(n: u64) -> Result<PhiReport> {
    let labels = enumerate::ordered_symbols(n);
    let classes = class_list(n as u32);
    let parts: Vec<Result<PhiReport>> = labels
        .par_chunks(16)
        .map(|chunk| {
            let mut ev = Evaluator::new();
            let mut rep = PhiReport::default();
            for x in chunk {
                for t in &classes {
                    let a = ev.phi(x, t, PhiRoute::Definition)?;
                    let b = ev.phi(x, t, PhiRoute::Recursion)?;
                    rep.checked += 1;
                    if a != b {
                        rep.mismatches.push(PhiMismatch {
                            symbol: x.to_string(),
                            class: t.to_string(),
                            definition: a.to_string(),
                            recursion: b.to_string(),
                        });
                    }
                }
            }
            Ok(rep)
        })
        .collect();
    let mut out = PhiReport::default();
    for p in parts {
        let p = p?;
        out.checked += p.checked;
        out.mismatches.extend(p.mismatches);
    }
    Ok(out)
}

/// Which family of values is audited against its bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMode {
    Rho,
    Phi,
}

/// Largest |value| / (2^{k−1}·k!) over all labels and classes of rank n.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub mode: BoundMode,
    pub checked: u64,
    pub max_ratio: String,
    pub max_ratio_f64: f64,
    pub witness: Option<(String, String)>,
    pub ok: bool,
}

/// 2^{k−1}·k! for k ≥ 1, and 1 for the empty class.
pub fn b_bound(k: usize) -> u64 {
    if k == 0 {
        1
    } else {
        (1u64 << (k - 1)) * factorial(k as u64)
    }
}

pub fn audit_bounds(n: u64, mode: BoundMode) -> Result<BoundReport> {
    let labels = match mode {
        BoundMode::Rho => {
            let mut v = enumerate::ordered_symbols_with_defect(n, 0);
            v.extend(enumerate::ordered_symbols_with_defect(n, 1));
            v
        }
        BoundMode::Phi => enumerate::ordered_symbols(n),
    };
    let classes = class_list(n as u32);
    let mut ev = Evaluator::new();
    let mut best = BigRational::zero();
    let mut witness = None;
    let mut checked = 0;
    for x in &labels {
        for t in &classes {
            let v = match mode {
                BoundMode::Rho => BigRational::from_integer(BigInt::from(ev.rho(x, t)?)),
                BoundMode::Phi => ev.phi(x, t, PhiRoute::Recursion)?,
            };
            let r = v.abs() / BigRational::from_integer(BigInt::from(b_bound(t.len())));
            checked += 1;
            if r > best {
                best = r;
                witness = Some((x.to_string(), t.to_string()));
            }
        }
    }
    let one = BigRational::from_integer(BigInt::from(1));
    Ok(BoundReport {
        n,
        mode,
        checked,
        max_ratio_f64: num_traits::ToPrimitive::to_f64(&best).unwrap_or(f64::NAN),
        ok: best <= one,
        max_ratio: best.to_string(),
        witness,
    })
}

/// Largest |χ(w)| / (2^{2k}·k!) over the irreducible characters χ of W(D_n) = W_I^0,
/// computed from an explicit character table; k is the number of cycles of w.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TypeDReport {
    pub n: u64,
    pub group_order: u64,
    pub classes: usize,
    pub checked: u64,
    pub table_valid: bool,
    pub max_ratio: String,
    pub max_ratio_f64: f64,
    /// (character degree, signed cycle type) attaining the maximum.
    pub witness: Option<(u64, String)>,
    pub ok: bool,
}

/// 2^{2k}·k!.
pub fn d_bound(k: usize) -> u64 {
    (1u64 << (2 * k)) * factorial(k as u64)
}

/// W(D_n) generated by the transpositions (i, i+1) and the signed swap 1 ↦ −2, 2 ↦ −1.
pub fn type_d_group(n: usize) -> Result<SmallGroup<SignedPermOps>> {
    let ops = SignedPermOps::new(n)?;
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut im: Vec<i32> = (1..=n as i32).collect();
        im.swap(i, i + 1);
        gens.push(ops.encode(&SignedPermutation::new(im)?));
        if i == 0 {
            let mut im: Vec<i32> = (1..=n as i32).collect();
            im[0] = -2;
            im[1] = -1;
            gens.push(ops.encode(&SignedPermutation::new(im)?));
        }
    }
    Ok(SmallGroup::generate(ops, gens, hookline_groups::group::ORDER_CAP)?)
}

pub fn audit_type_d(n: u64) -> Result<TypeDReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::Precondition(format!("type D audit needs 1 ≤ n ≤ 4, got {n}")));
    }
    let g = type_d_group(n as usize)?;
    let table = character_table(&g)?;
    let mut best = BigRational::zero();
    let mut witness = None;
    let mut checked = 0;
    for c in 0..g.class_count() {
        let w = g.ops().decode(g.rep(c));
        let t = w.cycle_type();
        let bound = BigRational::from_integer(BigInt::from(d_bound(t.len())));
        for (row, &deg) in table.values.iter().zip(&table.degrees) {
            let v = row[c]
                .as_integer()
                .ok_or_else(|| Error::Precondition(format!("irrational value on {t}")))?;
            let r = BigRational::from_integer(BigInt::from(v)).abs() / &bound;
            checked += 1;
            if r > best {
                best = r;
                witness = Some((deg, t.to_string()));
            }
        }
    }
    let one = BigRational::from_integer(BigInt::from(1));
    Ok(TypeDReport {
        n,
        group_order: g.order(),
        classes: g.class_count(),
        checked,
        table_valid: table.validate().ok(),
        max_ratio_f64: num_traits::ToPrimitive::to_f64(&best).unwrap_or(f64::NAN),
        ok: best <= one,
        max_ratio: best.to_string(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_table() {
        for delta in [0, 1] {
            let t = rho_table(2, delta).unwrap();
            assert_eq!(t.values.len(), 5);
            assert!(t.orthogonality().ok());
        }
        let r = audit_bounds(2, BoundMode::Rho).unwrap();
        assert!(r.ok);
    }

    #[test]
    fn type_d_orders() {
        // W(D_n) has order 2^{n−1} n!; W(D_3) ≅ S_4 has 5 classes
        let g = type_d_group(3).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.class_count(), 5);
        let r = audit_type_d(2).unwrap();
        assert!(r.ok && r.table_valid);
        assert_eq!(r.group_order, 4);
    }

    #[test]
    fn small_cross_route() {
        for n in 0..=3 {
            let r = phi_cross_route(n).unwrap();
            assert!(r.mismatches.is_empty(), "{:?}", r.mismatches.first());
        }
    }
}
