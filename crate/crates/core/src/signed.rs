//! Signed permutations of {±1, …, ±n}, their signed cycle types and centralizers.

use crate::beta::Partition;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// w ∈ W_I stored by the images of 1..=n; w(−a) = −w(a).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::Precondition(format!("{images:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn apply(&self, a: i32) -> i32 {
        let v = self.images[a.unsigned_abs() as usize - 1];
        if a < 0 {
            -v
        } else {
            v
        }
    }

    /// (self ∘ other)(a) = self(other(a)).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation { images: other.images.iter().map(|&b| self.apply(b)).collect() }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let a = i as i32 + 1;
            inv[v.unsigned_abs() as usize - 1] = if v < 0 { -a } else { a };
        }
        SignedPermutation { images: inv }
    }

    /// Number of a > 0 with w(a) < 0.
    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// δ_I(w): parity of w as a permutation of the 2n points.
    pub fn delta(&self) -> u8 {
        let n = self.images.len();
        let idx = |a: i32| if a > 0 { a as usize - 1 } else { n + (-a) as usize - 1 };
        let mut seen = vec![false; 2 * n];
        let mut parity = 0usize;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                let a = if p < n { p as i32 + 1 } else { -((p - n) as i32 + 1) };
                p = idx(self.apply(a));
            }
            parity += len - 1;
        }
        (parity % 2) as u8
    }

    /// Orbits of ⟨w, σ⟩ on 1..=n (as absolute values), each listed from its
    /// smallest point in w-order, with the sign of the cycle.
    pub fn cycles(&self) -> Vec<(Vec<i32>, bool)> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for a in 1..=n as i32 {
            if seen[a as usize] {
                continue;
            }
            let mut orbit = vec![a];
            seen[a as usize] = true;
            let mut b = self.apply(a);
            while b.abs() != a {
                seen[b.unsigned_abs() as usize] = true;
                orbit.push(b);
                b = self.apply(b);
            }
            out.push((orbit, b == -a));
        }
        out
    }

    /// Signed cycle type, checking δ of each cycle against its shape: a negative
    /// cycle of length m is one 2m-cycle on I, a positive one is two m-cycles.
    pub fn cycle_type(&self) -> SignedCycleType {
        let mut v: Vec<i32> = Vec::new();
        let mut delta = 0u8;
        for (orbit, negative) in self.cycles() {
            let m = orbit.len() as i32;
            // parity of a 2m-cycle is 1; two m-cycles give 2(m−1) ≡ 0
            if negative {
                delta ^= 1;
            }
            v.push(if negative { -m } else { m });
        }
        debug_assert_eq!(delta, self.delta());
        SignedCycleType::new(v)
    }

    /// A representative of the class with the given signed cycle type.
    pub fn from_cycle_type(t: &SignedCycleType) -> SignedPermutation {
        let n = t.size() as usize;
        let mut images = vec![0i32; n];
        let mut next = 1i32;
        for &c in t.cycles() {
            let m = c.abs();
            for k in 0..m {
                let a = next + k;
                images[a as usize - 1] = if k + 1 < m { a + 1 } else { next };
            }
            if c < 0 {
                let last = next + m - 1;
                images[last as usize - 1] = -next;
            }
            next += m;
        }
        SignedPermutation { images }
    }

    /// All 2ⁿ·n! elements of W(B_n).
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms: Vec<Vec<i32>> = vec![vec![]];
        for k in 1..=n as i32 {
            let mut next = Vec::new();
            for p in &perms {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    next.push(q);
                }
            }
            perms = next;
        }
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0u32..1 << n {
                let images = p
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                out.push(SignedPermutation { images });
            }
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Signed permutations of degree n ≤ 8 packed four bits per image, for use with
/// the finite-group engine.
#[derive(Clone, Copy, Debug)]
pub struct SignedPermOps {
    n: usize,
}

impl SignedPermOps {
    pub fn new(n: usize) -> Result<Self> {
        if n > 8 {
            return Err(Error::Precondition(format!("degree {n} is above 8")));
        }
        Ok(SignedPermOps { n })
    }

    pub fn encode(&self, w: &SignedPermutation) -> u64 {
        w.images.iter().enumerate().fold(0u64, |acc, (i, &v)| acc | (((v + 8) as u64) << (4 * i)))
    }

    pub fn decode(&self, code: u64) -> SignedPermutation {
        SignedPermutation { images: (0..self.n).map(|i| ((code >> (4 * i)) & 15) as i32 - 8).collect() }
    }
}

impl hookline_groups::GroupOps for SignedPermOps {
    fn identity(&self) -> u64 {
        self.encode(&SignedPermutation::identity(self.n))
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.encode(&self.decode(a).compose(&self.decode(b)))
    }

    fn inv(&self, a: u64) -> u64 {
        self.encode(&self.decode(a).inverse())
    }
}

/// Signed cycle lengths sorted weakly decreasing by signed value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedCycleType {
    cycles: Vec<i32>,
}

impl SignedCycleType {
    pub fn new(mut cycles: Vec<i32>) -> Self {
        cycles.retain(|&c| c != 0);
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType { cycles }
    }

    /// Keeps the given order; used to strip cycles in a chosen sequence.
    pub fn unsorted(cycles: Vec<i32>) -> Self {
        SignedCycleType { cycles }
    }

    pub fn cycles(&self) -> &[i32] {
        &self.cycles
    }

    pub fn size(&self) -> u64 {
        self.cycles.iter().map(|c| c.unsigned_abs() as u64).sum()
    }

    /// The cycle length k.
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// δ_I: parity of the number of negative cycles.
    pub fn delta(&self) -> u8 {
        (self.cycles.iter().filter(|&&c| c < 0).count() % 2) as u8
    }

    pub fn pairwise_distinct(&self) -> bool {
        let mut v = self.cycles.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }

    /// (α, β): positive and negative cycle lengths.
    pub fn bipartition(&self) -> (Partition, Partition) {
        let pos = self.cycles.iter().filter(|&&c| c > 0).map(|&c| c as u32).collect();
        let neg = self.cycles.iter().filter(|&&c| c < 0).map(|&c| (-c) as u32).collect();
        (Partition::from_parts(pos), Partition::from_parts(neg))
    }

    /// Parses `2,-1` (empty for the identity of W(B_0)).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(SignedCycleType::new(vec![]));
        }
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if v.contains(&0) {
            return Err(Error::Parse("cycle lengths are nonzero".into()));
        }
        Ok(SignedCycleType::new(v))
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycles.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Classes of W(B_n), one per bipartition of n.
pub fn class_list(n: u32) -> Vec<SignedCycleType> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for alpha in Partition::all(a) {
            for beta in Partition::all(n - a) {
                let mut v: Vec<i32> = alpha.parts().iter().map(|&p| p as i32).collect();
                v.extend(beta.parts().iter().map(|&p| -(p as i32)));
                out.push(SignedCycleType::new(v));
            }
        }
    }
    out
}

/// |C_{W_I}(w)| = Π over groups of r cycles of equal signed size m of r!·(2m)^r.
pub fn centralizer_order(t: &SignedCycleType) -> u64 {
    let mut groups: BTreeMap<i32, u32> = BTreeMap::new();
    for &c in t.cycles() {
        *groups.entry(c).or_default() += 1;
    }
    groups
        .into_iter()
        .map(|(c, r)| {
            let m = 2 * c.unsigned_abs() as u64;
            (1..=r as u64).product::<u64>() * m.pow(r)
        })
        .product()
}

/// |C_{S_n}(w)| for cycle type μ: Π m^{a_m}·a_m!.
pub fn sym_centralizer_order(mu: &Partition) -> u64 {
    let mut groups: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *groups.entry(p).or_default() += 1;
    }
    groups
        .into_iter()
        .map(|(m, r)| (1..=r as u64).product::<u64>() * (m as u64).pow(r))
        .product()
}

pub fn factorial(k: u64) -> u64 {
    (1..=k).product()
}
