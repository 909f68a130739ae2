//! Class-product counts from the Frobenius formula, their convolution oracle,
//! and coverage reports C·C ⊇ (class) for a chosen class C.

use crate::classical::MatrixGroup;
use crate::cyclo::CycloAccumulator;
use crate::dixon::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{GroupOps, SmallGroup};
use crate::support::support;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// #{(a, b) ∈ C₁ × C₂ : ab = g₃} = |C₁||C₂|/|G| · Σ_χ χ(g₁)χ(g₂)χ̄(g₃)/χ(1), computed
/// exactly; the character sum must collapse to a rational number.
pub fn frobenius_count(t: &CharacterTable, c1: usize, c2: usize, c3: usize) -> Result<BigRational> {
    let r = t.class_count();
    for c in [c1, c2, c3] {
        if c >= r {
            return Err(Error::ClassIndex(c));
        }
    }
    let o = &t.class_orders;
    let l = num_integer::lcm(num_integer::lcm(o[c1], o[c2]), o[c3]);
    let mut acc = CycloAccumulator::new(t.exponent, l);
    for (row, &deg) in t.values.iter().zip(&t.degrees) {
        // |G|/χ(1) is an integer, keeping the sum in ℤ[ζ]
        let scale = (t.order / deg) as i128;
        acc.add_product(&[&row[c1], &row[c2], &row[c3]], true, scale);
    }
    let s = acc
        .rational()
        .ok_or_else(|| Error::Irrational(format!("character sum for classes ({c1}, {c2}, {c3})")))?;
    let num = BigInt::from(t.class_sizes[c1]) * BigInt::from(t.class_sizes[c2]) * BigInt::from(s);
    let den = BigInt::from(t.order) * BigInt::from(t.order);
    let v = BigRational::new(num, den);
    if v.is_negative() {
        return Err(Error::Negative(format!("classes ({c1}, {c2}, {c3}): {v}")));
    }
    Ok(v)
}

/// Comparison of the Frobenius formula with direct convolution on every class triple.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductCheck {
    pub triples: u64,
    pub mismatches: Vec<(usize, usize, usize, String, u64)>,
}

pub fn frobenius_vs_convolution<O: GroupOps>(g: &SmallGroup<O>, t: &CharacterTable) -> Result<ProductCheck> {
    let r = g.class_count();
    let coeffs = g.class_coefficients();
    let mut mismatches = Vec::new();
    let mut triples = 0;
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let f = frobenius_count(t, a, b, c)?;
                let direct = coeffs.get(a, b, c) as u64;
                triples += 1;
                if f != BigRational::from_integer(BigInt::from(direct)) {
                    mismatches.push((a, b, c, f.to_string(), direct));
                }
            }
        }
    }
    Ok(ProductCheck { triples, mismatches })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverageEntry {
    pub class: usize,
    pub size: u64,
    pub order: u32,
    pub support: u64,
    pub central: bool,
    /// Number of (a, b) ∈ C × C with ab the class representative.
    pub frobenius_count: String,
    pub covered: bool,
    pub convolution_count: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverageReport {
    pub group_order: u64,
    pub class: usize,
    pub class_size: u64,
    pub entries: Vec<CoverageEntry>,
    pub uncovered: Vec<usize>,
    pub noncentral_uncovered: Vec<usize>,
    /// True when convolution was run and agrees with every Frobenius count.
    pub cross_validated: bool,
}

/// Convolution cross-checks run when |G| is at most this.
pub const CONVOLUTION_LIMIT: u64 = 10_000;

/// Which classes lie in C·C for the class C of `rep`.
pub fn thompson_coverage(g: &MatrixGroup, t: &CharacterTable, rep: u64) -> Result<CoverageReport> {
    let c = g.class_of(rep)?;
    let k = g.ops().field();
    let convolve = g.order() <= CONVOLUTION_LIMIT;
    let mut entries = Vec::new();
    let mut agree = convolve;
    for class in 0..g.class_count() {
        let f = frobenius_count(t, c, c, class)?;
        let conv = convolve.then(|| g.convolution_count(c, c, class));
        if let Some(v) = conv {
            agree &= f == BigRational::from_integer(BigInt::from(v));
        }
        let info = &g.classes()[class];
        entries.push(CoverageEntry {
            class,
            size: info.size,
            order: info.order,
            support: support(k, &g.ops().decode(g.rep(class))),
            central: info.size == 1,
            covered: !f.is_zero(),
            frobenius_count: f.to_string(),
            convolution_count: conv,
        });
    }
    let uncovered: Vec<usize> = entries.iter().filter(|e| !e.covered).map(|e| e.class).collect();
    let noncentral_uncovered = entries.iter().filter(|e| !e.covered && !e.central).map(|e| e.class).collect();
    Ok(CoverageReport {
        group_order: g.order(),
        class: c,
        class_size: g.classes()[c].size,
        entries,
        uncovered,
        noncentral_uncovered,
        cross_validated: agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{build_group, Family};
    use crate::dixon::character_table;

    #[test]
    fn sl2_3_products() {
        let g = build_group(Family::SL, 2, 3).unwrap();
        let t = character_table(&g).unwrap();
        let check = frobenius_vs_convolution(&g, &t).unwrap();
        assert_eq!(check.triples, 343);
        assert!(check.mismatches.is_empty());
        // the identity class: 1·1 = 1 once
        assert_eq!(frobenius_count(&t, 0, 0, 0).unwrap(), BigRational::from_integer(1.into()));
        assert!(frobenius_count(&t, 0, 0, 99).is_err());
    }
}
