//! β-sets and partitions.

use crate::error::{Error, Result};
use crate::sets;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite set of non-negative integers, read as an encoding of a partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct BetaSet(Vec<u32>);

impl BetaSet {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if !sets::is_strictly_increasing(&elements) {
            return Err(Error::NotIncreasing(elements));
        }
        Ok(BetaSet(elements))
    }

    pub fn from_unsorted(elements: Vec<u32>) -> Result<Self> {
        let copy = elements.clone();
        sets::normalize(elements).map(BetaSet).ok_or(Error::NotIncreasing(copy))
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// ρ(A) = Σa − C(|A|, 2).
    pub fn rank(&self) -> u64 {
        let k = self.0.len() as u64;
        sets::sum(&self.0) - k * k.saturating_sub(1) / 2
    }

    /// A^{→k} = {0, …, k−1} ⊔ {a + k : a ∈ A}.
    pub fn shift(&self, k: u32) -> BetaSet {
        let mut v: Vec<u32> = (0..k).collect();
        v.extend(self.0.iter().map(|&a| a + k));
        BetaSet(v)
    }

    /// The unique shift-equivalent set not containing 0.
    pub fn reduce(&self) -> BetaSet {
        let k = self.0.iter().enumerate().take_while(|&(i, &a)| a as usize == i).count();
        BetaSet(self.0[k..].iter().map(|&a| a - k as u32).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.first().map_or(true, |&a| a > 0)
    }

    /// Parts λ_i = a_i + 1 − i read from the largest element down; zero parts dropped.
    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| a - i as u32)
            .filter(|&p| p > 0)
            .collect();
        parts.reverse();
        Partition(parts)
    }

    /// β-set of `lambda` with exactly `len` elements; `len` must be at least the number of parts.
    pub fn from_partition_with_len(lambda: &Partition, len: usize) -> Result<BetaSet> {
        let parts = lambda.parts();
        if len < parts.len() {
            return Err(Error::Precondition(format!(
                "β-set of length {len} cannot hold {} parts",
                parts.len()
            )));
        }
        let mut v: Vec<u32> = (0..len)
            .map(|i| {
                // i-th smallest element pairs with part index len-1-i (0 beyond the parts)
                let idx = len - 1 - i;
                parts.get(idx).copied().unwrap_or(0) + i as u32
            })
            .collect();
        v.sort_unstable();
        Ok(BetaSet(v))
    }

    pub fn from_partition(lambda: &Partition) -> BetaSet {
        BetaSet::from_partition_with_len(lambda, lambda.len()).expect("length equals part count")
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", sets::render(&self.0))
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into weakly decreasing order.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        sets::sum(&self.0)
    }

    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Drops the first part.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// n(λ) = Σ (i−1) λ_i.
    pub fn n_invariant(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Hook lengths of all boxes.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j as usize] - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// λ ⊵ μ in dominance order (sizes assumed equal).
    pub fn dominates(&self, mu: &Partition) -> bool {
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(mu.len()) {
            a += self.0.get(i).copied().unwrap_or(0) as u64;
            b += mu.0.get(i).copied().unwrap_or(0) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order starting from (n).
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses `2,1,1`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", sets::render(&self.0))
    }
}

/// p(n), the number of partitions of n, by Euler's recurrence-free DP.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[u32]) -> BetaSet {
        BetaSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(b(&[0, 1, 2]).rank(), 0);
        assert_eq!(b(&[3]).rank(), 3);
        assert_eq!(b(&[1, 3]).rank(), 3);
        assert_eq!(b(&[]).rank(), 0);
    }

    #[test]
    fn shift_and_reduce() {
        assert_eq!(b(&[1]).shift(1), b(&[0, 2]));
        assert_eq!(b(&[0, 1, 2]).reduce(), b(&[]));
        assert_eq!(b(&[0, 2]).reduce(), b(&[1]));
        assert_eq!(b(&[0, 3, 5]).reduce(), b(&[2, 4]));
    }

    #[test]
    fn partitions_roundtrip() {
        let l = Partition::new(vec![2, 1]).unwrap();
        let beta = BetaSet::from_partition(&l);
        assert_eq!(beta, b(&[1, 3]));
        assert_eq!(beta.to_partition(), l);
        assert_eq!(BetaSet::from_partition(&Partition::default()), b(&[]));
        let row = Partition::new(vec![5]).unwrap();
        assert_eq!(BetaSet::from_partition(&row), b(&[5]));
        assert_eq!(BetaSet::from_partition_with_len(&l, 4).unwrap(), b(&[0, 1, 3, 5]));
    }

    #[test]
    fn partition_helpers() {
        let l = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(l.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
        let mut h = l.hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 2, 4]);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(partition_count(10), 42);
        assert!(Partition::new(vec![3]).unwrap().dominates(&Partition::new(vec![2, 1]).unwrap()));
        assert!(!Partition::new(vec![2, 2]).unwrap().dominates(&Partition::new(vec![3, 1]).unwrap()));
    }
}
