//! Unipotent character degrees: the β-set formula for SL_n^ε(q), the symbol
//! formula for types B, C and D, enumeration of labels by rank, bounded-degree
//! counts, and the inequalities used to bound those counts.

use crate::array::Symbol;
use crate::beta::{BetaSet, Partition};
use crate::enumerate::{enumerate_symbols, SymbolKind};
use crate::error::{Error, Result};
use hookline_groups::field::prime_power;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The group family a degree belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegreeType {
    A,
    #[serde(rename = "2A")]
    TwistedA,
    B,
    C,
    D,
    #[serde(rename = "2D")]
    TwistedD,
}

impl fmt::Display for DegreeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeType::A => "A",
            DegreeType::TwistedA => "2A",
            DegreeType::B => "B",
            DegreeType::C => "C",
            DegreeType::D => "D",
            DegreeType::TwistedD => "2D",
        })
    }
}

impl FromStr for DegreeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => DegreeType::A,
            "2A" => DegreeType::TwistedA,
            "B" => DegreeType::B,
            "C" => DegreeType::C,
            "D" => DegreeType::D,
            "2D" => DegreeType::TwistedD,
            other => return Err(Error::Parse(format!("unknown type {other:?}"))),
        })
    }
}

/// An exact unipotent degree at a concrete q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeValue {
    #[serde(with = "bigint_string")]
    pub value: BigInt,
    pub q: u64,
    pub type_tag: DegreeType,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_q(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

fn pow(base: &BigInt, e: u64) -> BigInt {
    num_traits::pow(base.clone(), e as usize)
}

fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Unipotent degree of SL_n^ε(q) labelled by the reduced β-set `a` (0 ∉ a) with
/// ρ(a) = n, evaluated from the β-set product formula. `twisted` selects ε = −1.
pub fn unip_degree_a(a: &BetaSet, q: u64, twisted: bool) -> Result<DegreeValue> {
    check_q(q)?;
    let a = a.reduce();
    let lam = a.elements();
    let n = a.rank();
    let m = lam.len();
    let eq = if twisted { -BigInt::from(q) } else { BigInt::from(q) };
    let qq = BigInt::from(q);
    let one = BigInt::one();
    let mut num = BigInt::one();
    for i in 0..m {
        for j in 0..i {
            num *= pow(&eq, lam[i] as u64) - pow(&eq, lam[j] as u64);
        }
    }
    for i in 1..=n {
        num *= pow(&eq, i) - &one;
    }
    let mut den = BigInt::one();
    for &l in lam {
        for j in 1..=l as u64 {
            den *= pow(&eq, j) - &one;
        }
    }
    for k in 2..m.max(2) as u64 {
        den *= pow(&qq, binom2(k));
    }
    let (value, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegral(format!("{a} at q = {q}")));
    }
    Ok(DegreeValue {
        value: value.abs(),
        q,
        type_tag: if twisted { DegreeType::TwistedA } else { DegreeType::A },
    })
}

/// The same degree from the partition: q^{n(λ)} ∏_{i≤n}(q^i − 1) / ∏_{hooks}(q^h − 1),
/// with q replaced by −q in the twisted case.
pub fn unip_degree_a_by_hooks(lambda: &Partition, q: u64, twisted: bool) -> Result<BigInt> {
    check_q(q)?;
    let eq = if twisted { -BigInt::from(q) } else { BigInt::from(q) };
    let one = BigInt::one();
    let mut num = pow(&eq, lambda.n_invariant());
    for i in 1..=lambda.size() {
        num *= pow(&eq, i) - &one;
    }
    let den: BigInt = lambda.hook_lengths().iter().map(|&h| pow(&eq, h as u64) - &one).product();
    let (v, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{lambda} at q = {q}")));
    }
    Ok(v.abs())
}

/// |G|_{p'} for the group attached to a symbol of rank r and the given |defect|.
pub fn order_p_prime(rank: u64, defect: u64, q: u64) -> BigInt {
    let qq = BigInt::from(q);
    let one = BigInt::one();
    match defect % 4 {
        1 | 3 => (1..=rank).map(|i| pow(&qq, 2 * i) - &one).product(),
        d => {
            let lead = if d == 0 { pow(&qq, rank) - &one } else { pow(&qq, rank) + &one };
            lead * (1..rank).map(|i| pow(&qq, 2 * i) - &one).product::<BigInt>()
        }
    }
}

/// Degree attached to an unordered symbol of type B, C or D.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BcdDegree {
    pub symbol: String,
    pub rank: u64,
    pub defect: u64,
    pub q: u64,
    pub type_tag: DegreeType,
    /// The product formula with denominator 2^{⌊n/2⌋}, n = |X⁰| + |X¹|, as a reduced rational.
    pub printed: String,
    pub printed_two_power: u32,
    /// The degree of the unipotent character: the same product with the 2-power
    /// (n−1)/2 for odd n, (n−2)/2 for even n with distinct rows, n/2 for equal rows.
    #[serde(with = "bigint_string")]
    pub value: BigInt,
    pub two_power: u32,
    /// Whether the printed rational equals the degree.
    pub printed_exact: bool,
}

impl BcdDegree {
    pub fn degree(&self) -> DegreeValue {
        DegreeValue { value: self.value.clone(), q: self.q, type_tag: self.type_tag }
    }
}

/// The 2-free part of the symbol formula, as numerator and denominator.
fn bcd_parts(sym: &Symbol, q: u64) -> (BigInt, BigInt) {
    let x = sym.canonical().reduce();
    let qq = BigInt::from(q);
    let one = BigInt::one();
    let r = sym.rank();
    let (x0, x1) = (x.top(), x.bottom());
    let n = (x0.len() + x1.len()) as u64;
    let mut num = order_p_prime(r, sym.defect(), q);
    for row in [x0, x1] {
        for i in 0..row.len() {
            for j in 0..i {
                num *= pow(&qq, row[i] as u64) - pow(&qq, row[j] as u64);
            }
        }
    }
    for &a in x0 {
        for &b in x1 {
            num *= pow(&qq, a as u64) + pow(&qq, b as u64);
        }
    }
    let mut den = BigInt::one();
    for &l in x0.iter().chain(x1) {
        for j in 1..=l as u64 {
            den *= pow(&qq, 2 * j) - &one;
        }
    }
    for k in 1..=(n.saturating_sub(2)) / 2 {
        den *= pow(&qq, binom2(n - 2 * k));
    }
    (num, den)
}

/// Evaluates the symbol degree formula at q; the representative used has 0 ∉ X⁰ ∩ X¹.
pub fn unip_degree_bcd(sym: &Symbol, q: u64) -> Result<BcdDegree> {
    check_q(q)?;
    let x = sym.canonical().reduce();
    let n = (x.top().len() + x.bottom().len()) as u32;
    let defect = sym.defect();
    let type_tag = match defect % 4 {
        1 | 3 => DegreeType::C,
        0 => DegreeType::D,
        _ => DegreeType::TwistedD,
    };
    let printed_two_power = n / 2;
    let two_power = if n % 2 == 1 {
        (n - 1) / 2
    } else if sym.is_degenerate() {
        n / 2
    } else {
        n.saturating_sub(2) / 2
    };
    let (num, den) = bcd_parts(sym, q);
    let two = BigInt::from(2);
    let printed = BigRational::new(num.clone(), &den * pow(&two, printed_two_power as u64));
    let exact = BigRational::new(num, den * pow(&two, two_power as u64));
    if !exact.is_integer() || !exact.is_positive() {
        return Err(Error::NonIntegral(format!("{sym} at q = {q}: {exact}")));
    }
    Ok(BcdDegree {
        symbol: sym.to_string(),
        rank: sym.rank(),
        defect,
        q,
        type_tag,
        printed_exact: printed == exact,
        printed: printed.to_string(),
        printed_two_power,
        value: exact.to_integer(),
        two_power,
    })
}

/// Label families for counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CountKind {
    /// Partitions of rank + 1 (SL_{rank+1}(q)).
    A,
    /// Odd-defect symbols (Sp_{2·rank}(q)).
    OddDefect,
    /// Defect ≡ 0 (mod 4), degenerate symbols twice (Spin⁺_{2·rank}(q)).
    Split,
    /// Defect ≡ 2 (mod 4) (Spin⁻_{2·rank}(q)).
    Twisted,
}

impl FromStr for CountKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "a" | "apartitions" => CountKind::A,
            "b" | "c" | "odd" | "odddefect" => CountKind::OddDefect,
            "d" | "d+" | "split" => CountKind::Split,
            "2d" | "d-" | "twisted" => CountKind::Twisted,
            other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
        })
    }
}

/// All type-A labels of rank r: reduced β-sets of partitions of r + 1.
pub fn type_a_labels(rank: u64) -> Vec<BetaSet> {
    Partition::all(rank as u32 + 1).iter().map(BetaSet::from_partition).collect()
}

/// Symbols labelling the unipotent characters of the B/C/D group of the given kind.
pub fn labels_of_kind(kind: CountKind, rank: u64) -> Vec<Symbol> {
    match kind {
        CountKind::A => Vec::new(),
        CountKind::OddDefect => enumerate_symbols(rank, SymbolKind::OddDefect),
        CountKind::Split | CountKind::Twisted => {
            let want = if kind == CountKind::Split { 0 } else { 2 };
            enumerate_symbols(rank, SymbolKind::EvenDefect).into_iter().filter(|s| s.defect() % 4 == want).collect()
        }
    }
}

/// ν: the merged, sorted rows of the representative with 0 ∉ X⁰ ∩ X¹.
pub fn merged_sequence(sym: &Symbol) -> Vec<u32> {
    let x = sym.canonical().reduce();
    let mut nu: Vec<u32> = x.top().iter().chain(x.bottom()).copied().collect();
    nu.sort_unstable();
    nu
}

/// Per-label outcome of the inequality checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LabelAudit {
    pub label: String,
    pub degree: String,
    /// For symbols: the three rank formulas agree.
    pub rank_routes: bool,
    /// For symbols: r ≥ ρ(X⁰) + ρ(X¹) with the defect-dependent gap.
    pub rank_gap: bool,
    /// For symbols: ν₁ < ν₃ < ⋯ and 0 < ν₂ < ν₄ < ⋯, and r ≥ ⌊n/2⌋.
    pub merge_conditions: bool,
    /// Whether the max-ν inequality was applicable (odd defect, r ≥ 1) and held.
    pub nu_bound_applicable: bool,
    pub nu_bound: bool,
    /// For type A: d_A ≥ q^{n(n−μ_max)/2 − 4m}.
    pub a_bound: bool,
}

impl LabelAudit {
    pub fn ok(&self) -> bool {
        self.rank_routes && self.rank_gap && self.merge_conditions && self.nu_bound && self.a_bound
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CountReport {
    pub kind: CountKind,
    pub rank: u64,
    pub q: u64,
    pub max_degree: String,
    pub labels: usize,
    pub count: usize,
    /// log(count) / (log D / rank), the least exponent C' with count ≤ D^{C'/rank}.
    pub exponent: Option<f64>,
    pub failures: Vec<LabelAudit>,
    pub audited: usize,
}

impl CountReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn log_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits < 1000 {
        v.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 60;
        (v >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Audits the rank identities, merge conditions and degree lower bound for a symbol.
pub fn audit_symbol(sym: &Symbol, q: u64) -> Result<LabelAudit> {
    let d = unip_degree_bcd(sym, q)?;
    let x = sym.canonical().reduce();
    let r = sym.rank() as i64;
    let nu = merged_sequence(sym);
    let n = nu.len() as i64;
    let sum: i64 = nu.iter().map(|&v| v as i64).sum();
    let by_sum = sum - (n - 1).max(0).pow(2) / 4;
    let by_offsets: i64 = nu.iter().enumerate().map(|(k, &v)| v as i64 - k as i64 / 2).sum();
    let rank_routes = by_sum == r && by_offsets == r && x.rank_by_sum() == r;
    let rho0 = BetaSet::new(x.top().to_vec())?.rank() as i64;
    let rho1 = BetaSet::new(x.bottom().to_vec())?.rank() as i64;
    let def = x.defect();
    let gap = if n % 2 == 1 { (def * def - 1) / 4 } else { def * def / 4 };
    let rank_gap = r == rho0 + rho1 + gap && r >= rho0 + rho1;
    let odd_ok = nu.iter().step_by(2).collect::<Vec<_>>().windows(2).all(|w| w[0] < w[1]);
    let even: Vec<u32> = nu.iter().skip(1).step_by(2).copied().collect();
    let even_ok = even.first().map_or(true, |&v| v > 0) && even.windows(2).all(|w| w[0] < w[1]);
    let merge_conditions = odd_ok && even_ok && r >= n / 2;
    let applicable = def % 2 != 0 && r >= 1;
    let nu_bound = !applicable || {
        let maxv = nu.iter().enumerate().map(|(i, &v)| v as i64 - i as i64 / 2).max().unwrap_or(0) as f64;
        let ratio = log_big(&d.value) / (r as f64 * (q as f64).ln());
        maxv >= r as f64 - ratio - 7.5
    };
    Ok(LabelAudit {
        label: sym.to_string(),
        degree: d.value.to_string(),
        rank_routes,
        rank_gap,
        merge_conditions,
        nu_bound_applicable: applicable,
        nu_bound,
        a_bound: true,
    })
}

/// Audits d_A ≥ q^{n(n−μ_max)/2 − 4m} (squared to stay integral).
pub fn audit_type_a(a: &BetaSet, q: u64) -> Result<LabelAudit> {
    let d = unip_degree_a(a, q, false)?;
    let lambda = a.to_partition();
    let n = lambda.size();
    let m = lambda.len() as u64;
    let qq = BigInt::from(q);
    let lhs = &d.value * &d.value * pow(&qq, 8 * m);
    let rhs = pow(&qq, n * (n - lambda.first() as u64));
    Ok(LabelAudit {
        label: lambda.to_string(),
        degree: d.value.to_string(),
        rank_routes: true,
        rank_gap: true,
        merge_conditions: true,
        nu_bound_applicable: false,
        nu_bound: true,
        a_bound: lhs >= rhs,
    })
}

/// Number of unipotent characters of degree ≤ D for the family and rank, with
/// every label audited.
pub fn count_degree_at_most(kind: CountKind, rank: u64, q: u64, max_degree: &BigInt) -> Result<CountReport> {
    check_q(q)?;
    if max_degree < &BigInt::one() {
        return Err(Error::Precondition("D must be at least 1".into()));
    }
    let mut audits = Vec::new();
    match kind {
        CountKind::A => {
            for a in type_a_labels(rank) {
                audits.push(audit_type_a(&a, q)?);
            }
        }
        CountKind::OddDefect | CountKind::Split | CountKind::Twisted => {
            for s in labels_of_kind(kind, rank) {
                audits.push(audit_symbol(&s, q)?);
            }
        }
    }
    let count = audits
        .iter()
        .filter(|a| a.degree.parse::<BigInt>().map(|v| &v <= max_degree).unwrap_or(false))
        .count();
    let exponent = (count > 1 && max_degree > &BigInt::one() && rank > 0)
        .then(|| (count as f64).ln() / (log_big(max_degree) / rank as f64));
    Ok(CountReport {
        kind,
        rank,
        q,
        max_degree: max_degree.to_string(),
        labels: audits.len(),
        count,
        exponent,
        audited: audits.len(),
        failures: audits.into_iter().filter(|a| !a.ok()).collect(),
    })
}

/// Truncated products ∏_{i≤K}(1 − q^{−i}) and ∏_{i≤K}(1 + q^{−i}) for K = 1..=terms,
/// checked against 1/4 and 12/5 exactly.
pub fn audit_products(q: u64, terms: u32) -> bool {
    let qq = BigInt::from(q);
    let mut lower = BigRational::one();
    let mut upper = BigRational::one();
    let quarter = BigRational::new(1.into(), 4.into());
    let cap = BigRational::new(12.into(), 5.into());
    for i in 1..=terms as u64 {
        let t = BigRational::new(BigInt::one(), pow(&qq, i));
        lower *= BigRational::one() - &t;
        upper *= BigRational::one() + &t;
        if lower <= quarter || upper >= cap {
            return false;
        }
    }
    true
}

/// Comparison of symbol degrees with the Borel permutation character of Sp_{2r}(q).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BorelCheck {
    pub rank: u64,
    pub q: u64,
    /// Degrees of the irreducible constituents of 1_B^G, one entry per constituent.
    pub constituent_degrees: Vec<u64>,
    /// Multiplicities of those constituents.
    pub multiplicities: Vec<i128>,
    /// Degrees of the defect-1 symbols of rank r.
    pub principal_degrees: Vec<u64>,
    /// Degrees of the remaining odd-defect symbols, with whether the table has that degree.
    pub other_degrees: Vec<(String, u64, bool)>,
    pub principal_match: bool,
}

impl BorelCheck {
    pub fn ok(&self) -> bool {
        self.principal_match && self.other_degrees.iter().all(|(_, _, found)| *found)
    }
}

/// Decomposes the Borel permutation character of Sp_{2·rank}(q) in the Dixon table
/// and compares with the degrees of odd-defect symbols.
pub fn borel_crosscheck(rank: u64, q: u64) -> Result<BorelCheck> {
    use hookline_groups::classical::{build_group, Family};
    use hookline_groups::dixon::character_table;
    use hookline_groups::parabolic::parabolic_permutation_character;
    let g = build_group(Family::Sp, 2 * rank as usize, q)?;
    let table = character_table(&g)?;
    let borel = parabolic_permutation_character(&g, &vec![1; 2 * rank as usize])?;
    let mut constituent_degrees = Vec::new();
    let mut multiplicities = Vec::new();
    for chi in 0..table.class_count() {
        let m = table.multiplicity(&borel, chi)?;
        if m != 0 {
            constituent_degrees.push(table.degrees[chi]);
            multiplicities.push(m);
        }
    }
    let mut principal_degrees = Vec::new();
    let mut other_degrees = Vec::new();
    for s in enumerate_symbols(rank, SymbolKind::OddDefect) {
        let d = unip_degree_bcd(&s, q)?.value.to_u64().ok_or_else(|| Error::Precondition("degree overflow".into()))?;
        if s.defect() == 1 {
            principal_degrees.push(d);
        } else {
            other_degrees.push((s.to_string(), d, table.degrees.contains(&d)));
        }
    }
    let mut a = constituent_degrees.clone();
    let mut b = principal_degrees.clone();
    a.sort_unstable();
    b.sort_unstable();
    Ok(BorelCheck { rank, q, principal_match: a == b, constituent_degrees, multiplicities, principal_degrees, other_degrees })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg_a(parts: &[u32], q: u64) -> BigInt {
        let b = BetaSet::from_partition(&Partition::from_parts(parts.to_vec()));
        unip_degree_a(&b, q, false).unwrap().value
    }

    #[test]
    fn type_a_small() {
        assert_eq!(deg_a(&[3], 2), 1.into());
        assert_eq!(deg_a(&[1, 1], 5), 5.into());
        assert_eq!(deg_a(&[2, 1], 2), 6.into());
        let mut gl4: Vec<BigInt> = Partition::all(4).iter().map(|l| deg_a(l.parts(), 2)).collect();
        gl4.sort();
        assert_eq!(gl4, [1, 14, 20, 56, 64].map(BigInt::from).to_vec());
        assert!(unip_degree_a(&BetaSet::new(vec![1]).unwrap(), 6, false).is_err());
    }

    #[test]
    fn symbol_degrees() {
        let cusp: Symbol = "{0,1,2|}".parse().unwrap();
        for q in [2u64, 3, 4, 5] {
            let d = unip_degree_bcd(&cusp, q).unwrap();
            assert_eq!(d.value, BigInt::from(q * (q - 1) * (q - 1) / 2));
            assert!(d.printed_exact);
        }
        let triv: Symbol = "{2|}".parse().unwrap();
        assert_eq!(unip_degree_bcd(&triv, 3).unwrap().value, BigInt::one());
        // the degenerate pair of D₂ = A₁ × A₁ has degree q each
        let deg: Symbol = "{1|1}".parse().unwrap();
        let d = unip_degree_bcd(&deg, 3).unwrap();
        assert_eq!(d.value, 3.into());
        assert!(d.printed_exact);
        let nondeg: Symbol = "{2|0}".parse().unwrap();
        let d = unip_degree_bcd(&nondeg, 3).unwrap();
        assert_eq!(d.value, BigInt::one());
        assert!(!d.printed_exact);
    }

    #[test]
    fn counting() {
        let r = count_degree_at_most(CountKind::A, 3, 2, &BigInt::from(8)).unwrap();
        assert_eq!((r.labels, r.count), (5, 1));
        assert!(r.ok());
        for kind in [CountKind::A, CountKind::OddDefect, CountKind::Split, CountKind::Twisted] {
            assert_eq!(count_degree_at_most(kind, 3, 3, &BigInt::one()).unwrap().count, 1);
        }
    }

    #[test]
    fn sp4_2_borel() {
        let c = borel_crosscheck(2, 2).unwrap();
        assert!(c.ok(), "{c:?}");
        assert_eq!(c.constituent_degrees.len(), 5);
    }

    #[test]
    fn products() {
        for q in [2, 3, 4, 5] {
            assert!(audit_products(q, 40));
        }
    }
}
