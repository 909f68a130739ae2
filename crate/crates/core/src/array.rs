//! Arrays (pairs of rows of non-negative integers) and symbols.

use crate::beta::BetaSet;
use crate::error::{Error, Result};
use crate::sets;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// An array X = (X⁰, X¹). Ordering compares (top, bottom) lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Array {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Array {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if !sets::is_strictly_increasing(&top) {
            return Err(Error::NotIncreasing(top));
        }
        if !sets::is_strictly_increasing(&bottom) {
            return Err(Error::NotIncreasing(bottom));
        }
        Ok(Array { top, bottom })
    }

    /// Builds from rows known to be strictly increasing.
    pub(crate) fn from_sorted(top: Vec<u32>, bottom: Vec<u32>) -> Self {
        debug_assert!(sets::is_strictly_increasing(&top) && sets::is_strictly_increasing(&bottom));
        Array { top, bottom }
    }

    pub fn from_rows(rows: [Vec<u32>; 2]) -> Self {
        let [top, bottom] = rows;
        Array::from_sorted(top, bottom)
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn row(&self, j: u8) -> &[u32] {
        if j & 1 == 0 {
            &self.top
        } else {
            &self.bottom
        }
    }

    pub(crate) fn row_mut(&mut self, j: u8) -> &mut Vec<u32> {
        if j & 1 == 0 {
            &mut self.top
        } else {
            &mut self.bottom
        }
    }

    pub fn contains(&self, x: u32, j: u8) -> bool {
        sets::contains(self.row(j), x)
    }

    /// |X| = |X⁰| + |X¹|.
    pub fn size(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn union(&self) -> Vec<u32> {
        sets::union(&self.top, &self.bottom)
    }

    pub fn intersection(&self) -> Vec<u32> {
        sets::intersection(&self.top, &self.bottom)
    }

    pub fn sym_diff(&self) -> Vec<u32> {
        sets::sym_diff(&self.top, &self.bottom)
    }

    /// Def(X) = |X⁰| − |X¹|.
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Rank from the entry sum: ΣX⁰ + ΣX¹ − ⌊((|X|−1)/2)²⌋.
    pub fn rank_by_sum(&self) -> i64 {
        let n = self.size() as i64 - 1;
        (sets::sum(&self.top) + sets::sum(&self.bottom)) as i64 - (n * n) / 4
    }

    /// Rank from the rows: ρ(X⁰) + ρ(X¹) + ⌊(Def/2)²⌋.
    pub fn rank_by_beta(&self) -> i64 {
        let d = self.defect();
        let rho = |row: &[u32]| {
            let k = row.len() as i64;
            sets::sum(row) as i64 - k * (k - 1) / 2
        };
        rho(&self.top) + rho(&self.bottom) + d * d / 4
    }

    /// The rank, after checking that both evaluation routes agree.
    pub fn rank(&self) -> Result<u64> {
        let (a, b) = (self.rank_by_sum(), self.rank_by_beta());
        if a != b || a < 0 {
            return Err(Error::RankRoutes { array: self.to_string(), sum_route: a, beta_route: b });
        }
        Ok(a as u64)
    }

    /// Rank without the cross-check; both routes are proven equal in tests.
    pub fn rk(&self) -> u64 {
        self.rank_by_sum() as u64
    }

    /// X^op: rows swapped.
    pub fn op(&self) -> Array {
        Array { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// X^{→k}: both rows shifted.
    pub fn shift(&self, k: u32) -> Array {
        let sh = |r: &[u32]| BetaSet::new(r.to_vec()).expect("sorted").shift(k).elements().to_vec();
        Array { top: sh(&self.top), bottom: sh(&self.bottom) }
    }

    /// Removes the common shift prefix: while 0 lies in both rows, drop it and decrement.
    pub fn reduce(&self) -> Array {
        let mut k = 0u32;
        while sets::contains(&self.top, k) && sets::contains(&self.bottom, k) {
            k += 1;
        }
        let cut = |r: &[u32]| r.iter().filter(|&&a| a >= k).map(|&a| a - k).collect();
        // every element below k sits in both rows, so dropping them and
        // subtracting k is exactly k inverse shifts
        Array { top: cut(&self.top), bottom: cut(&self.bottom) }
    }

    pub fn is_reduced(&self) -> bool {
        !(sets::contains(&self.top, 0) && sets::contains(&self.bottom, 0))
    }

    /// Sim(X): all arrays with the same union and intersection, indexed by the
    /// subset of X^⊖ placed in the bottom row (bit i ↔ i-th smallest element).
    pub fn similarity_class(&self) -> Vec<Array> {
        let inter = self.intersection();
        let diff = self.sym_diff();
        let k = diff.len();
        (0u64..1 << k)
            .map(|mask| {
                let mut top = inter.clone();
                let mut bottom = inter.clone();
                for (i, &x) in diff.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        bottom.push(x);
                    } else {
                        top.push(x);
                    }
                }
                top.sort_unstable();
                bottom.sort_unstable();
                Array { top, bottom }
            })
            .collect()
    }

    /// X_sp: common entries in both rows; x ∈ X^⊖ in row |X^⊖| + ⟨X^⊖, {0..x}⟩ mod 2.
    pub fn special(&self) -> Array {
        let inter = self.intersection();
        let diff = self.sym_diff();
        let k = diff.len();
        let mut top = inter.clone();
        let mut bottom = inter;
        for (i, &x) in diff.iter().enumerate() {
            // ⟨X^⊖, {0..x}⟩ = number of elements of X^⊖ that are ≤ x = i + 1
            if (k + i + 1) % 2 == 0 {
                top.push(x);
            } else {
                bottom.push(x);
            }
        }
        top.sort_unstable();
        bottom.sort_unstable();
        Array { top, bottom }
    }

    /// X♯ = X¹ ⊖ X_sp¹ ⊆ X^⊖.
    pub fn sharp(&self) -> Vec<u32> {
        sets::sym_diff(&self.bottom, self.special().bottom())
    }

    /// log₂ s(X) = (|X^⊖| − Def(X_sp)) / 2.
    pub fn s_exponent(&self) -> u32 {
        let k = self.sym_diff().len() as i64;
        ((k - self.special().defect()) / 2) as u32
    }

    /// s(X) = 2^{(|X^⊖| − Def(X_sp))/2}.
    pub fn s(&self) -> u64 {
        1u64 << self.s_exponent()
    }

    /// d(X) = (Def(X) − Def(X_sp)) / 2.
    pub fn d(&self) -> i64 {
        (self.defect() - self.special().defect()) / 2
    }

    /// Parses `{a,b|c,d}`; whitespace is ignored and rows may be empty.
    pub fn parse(s: &str) -> Result<Array> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected {{top|bottom}}, got {s:?}")))?;
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        let row = |r: &str| -> Result<Vec<u32>> {
            if r.is_empty() {
                return Ok(Vec::new());
            }
            let v = r
                .split(',')
                .map(|x| x.parse::<u32>().map_err(|e| Error::Parse(format!("{x:?} in {s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            sets::normalize(v).ok_or_else(|| Error::Parse(format!("duplicate entry in row {r:?}")))
        };
        Ok(Array { top: row(a)?, bottom: row(b)? })
    }
}

impl fmt::Display for Array {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}|{}}}", sets::render(&self.top), sets::render(&self.bottom))
    }
}

impl FromStr for Array {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Array::parse(s)
    }
}

/// Sign tag carried by a degenerate symbol (equal rows).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DegenerateSign {
    Plus,
    Minus,
}

/// An unordered symbol ⟨X⟩: the shift- and op-class of an array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol {
    canonical: Array,
    sign: Option<DegenerateSign>,
}

impl Symbol {
    /// Canonical representative: fully reduced, then the smaller of X and X^op.
    /// Degenerate arrays get a `+` tag unless `sign` says otherwise.
    pub fn new(x: &Array, sign: Option<DegenerateSign>) -> Symbol {
        let r = x.reduce();
        let o = r.op();
        let canonical = if o < r { o } else { r };
        let degenerate = canonical.top == canonical.bottom;
        let sign = degenerate.then(|| sign.unwrap_or(DegenerateSign::Plus));
        Symbol { canonical, sign }
    }

    pub fn canonical(&self) -> &Array {
        &self.canonical
    }

    pub fn sign(&self) -> Option<DegenerateSign> {
        self.sign
    }

    pub fn is_degenerate(&self) -> bool {
        self.sign.is_some()
    }

    pub fn rank(&self) -> u64 {
        self.canonical.rk()
    }

    /// |Def|.
    pub fn defect(&self) -> u64 {
        self.canonical.defect().unsigned_abs()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)?;
        match self.sign {
            Some(DegenerateSign::Plus) => write!(f, "+"),
            Some(DegenerateSign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, sign) = if let Some(b) = t.strip_suffix('+') {
            (b, Some(DegenerateSign::Plus))
        } else if let Some(b) = t.strip_suffix('-') {
            (b, Some(DegenerateSign::Minus))
        } else {
            (t, None)
        };
        Ok(Symbol::new(&Array::parse(body)?, sign))
    }
}

/// Ordered symbol ⟦X⟧: the shift class of an array, represented by its reduction.
pub fn ordered_symbol(x: &Array) -> Array {
    x.reduce()
}

/// All arrays whose entries are at most `max_entry`, in a fixed order.
pub fn arrays_upto(max_entry: u32) -> Vec<Array> {
    let rows: Vec<Vec<u32>> = sets::subsets_upto(max_entry).collect();
    let mut out = Vec::with_capacity(rows.len() * rows.len());
    for t in &rows {
        for b in &rows {
            out.push(Array::from_sorted(t.clone(), b.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Array {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(a("{1|0}").to_string(), "{1|0}");
        assert_eq!(a("{ 2 ,0 | }"), Array::new(vec![0, 2], vec![]).unwrap());
        assert!(Array::parse("{1,1|0}").is_err());
        assert!(Array::parse("1|0").is_err());
    }

    #[test]
    fn ranks_and_defects() {
        for (s, r, d) in [("{|}", 0, 0), ("{1|}", 1, 1), ("{0,2|0}", 1, 1), ("{1|0}", 1, 0)] {
            assert_eq!(a(s).rank().unwrap(), r, "{s}");
            assert_eq!(a(s).defect(), d, "{s}");
        }
        assert_eq!(a("{0,2|0}").reduce(), a("{1|}"));
        assert_eq!(a("{1|}").shift(1), a("{0,2|0}"));
    }

    #[test]
    fn similarity() {
        assert_eq!(a("{0|0}").similarity_class(), vec![a("{0|0}")]);
        let mut s = a("{1|}").similarity_class();
        s.sort();
        assert_eq!(s, vec![a("{|1}"), a("{1|}")]);
        let mut s = a("{1|0}").similarity_class();
        s.sort();
        let mut e = vec![a("{1|0}"), a("{0|1}"), a("{0,1|}"), a("{|0,1}")];
        e.sort();
        assert_eq!(s, e);
    }

    #[test]
    fn special_and_scalars() {
        assert_eq!(a("{0|0}").special(), a("{0|0}"));
        assert_eq!(a("{1|0}").special(), a("{1|0}"));
        assert_eq!(a("{1|}").special(), a("{1|}"));
        assert_eq!(a("{1|0}").sharp(), Vec::<u32>::new());
        assert_eq!(a("{|0,1}").special(), a("{1|0}"));
        assert_eq!(a("{|0,1}").sharp(), vec![1]);
        assert_eq!(a("{1|0}").s(), 2);
        assert_eq!(a("{1|0}").d(), 0);
        assert_eq!(a("{0,1|}").d(), 1);
    }

    #[test]
    fn symbols() {
        let s = Symbol::new(&a("{0,2|0}"), None);
        assert_eq!(s.canonical(), &a("{|1}"));
        assert_eq!(s.to_string(), "{|1}");
        assert_eq!(s.defect(), 1);
        assert_eq!(Symbol::new(&a("{0,1|0,2}"), None).canonical(), &a("{0|1}"));
        let deg: Symbol = "{1|1}-".parse().unwrap();
        assert!(deg.is_degenerate());
        assert_eq!(deg.sign(), Some(DegenerateSign::Minus));
        assert_eq!(Symbol::new(&a("{0,2|0,2}"), None).sign(), Some(DegenerateSign::Plus));
    }
}
