//! A generic finite group given by generators, with elements encoded as u64
//! codes: closure, inverses, conjugacy classes, element orders, power maps and
//! class multiplication coefficients.

use crate::error::{Error, Result};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

/// Multiplication on u64-encoded elements.
pub trait GroupOps: Sync {
    fn identity(&self) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn inv(&self, a: u64) -> u64;
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjugacyClass {
    /// Index of the representative in the element list.
    pub rep: u32,
    pub size: u64,
    /// Order of the elements in the class.
    pub order: u32,
}

pub struct SmallGroup<O: GroupOps> {
    ops: O,
    gens: Vec<u64>,
    elements: Vec<u64>,
    index: FxHashMap<u64, u32>,
    inverse: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
}

/// Default cap on the number of elements.
pub const ORDER_CAP: usize = 200_000;

impl<O: GroupOps> SmallGroup<O> {
    /// Closure of the generators by breadth-first search, then classes.
    pub fn generate(ops: O, gens: Vec<u64>, cap: usize) -> Result<Self> {
        let id = ops.identity();
        let mut elements = vec![id];
        let mut index = FxHashMap::default();
        index.insert(id, 0u32);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            head += 1;
            for &g in &gens {
                let y = ops.mul(x, g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCap { cap });
                    }
                    index.insert(y, elements.len() as u32);
                    elements.push(y);
                }
            }
        }
        let inverse = elements.iter().map(|&x| index[&ops.inv(x)]).collect();
        let mut g = SmallGroup {
            ops,
            gens,
            elements,
            index,
            inverse,
            class_of: Vec::new(),
            classes: Vec::new(),
        };
        g.compute_classes();
        Ok(g)
    }

    /// Conjugacy classes as orbits of conjugation by the generators.
    fn compute_classes(&mut self) {
        const UNSET: u32 = u32::MAX;
        let n = self.elements.len();
        let gen_pairs: Vec<(u64, u64)> = self.gens.iter().map(|&g| (g, self.ops.inv(g))).collect();
        let mut class_of = vec![UNSET; n];
        let mut classes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if class_of[start] != UNSET {
                continue;
            }
            let c = classes.len() as u32;
            class_of[start] = c;
            stack.push(start as u32);
            let mut size = 0u64;
            while let Some(x) = stack.pop() {
                size += 1;
                let e = self.elements[x as usize];
                for &(g, gi) in &gen_pairs {
                    let y = self.index[&self.ops.mul(gi, self.ops.mul(e, g))];
                    if class_of[y as usize] == UNSET {
                        class_of[y as usize] = c;
                        stack.push(y);
                    }
                }
            }
            let order = self.element_order(self.elements[start]);
            classes.push(ConjugacyClass { rep: start as u32, size, order });
        }
        self.class_of = class_of;
        self.classes = classes;
    }

    pub fn ops(&self) -> &O {
        &self.ops
    }
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
    pub fn index_of(&self, code: u64) -> Option<u32> {
        self.index.get(&code).copied()
    }
    pub fn class_of_index(&self, idx: u32) -> usize {
        self.class_of[idx as usize] as usize
    }
    pub fn class_of(&self, code: u64) -> Result<usize> {
        self.index_of(code).map(|i| self.class_of_index(i)).ok_or(Error::NotMember)
    }
    pub fn inverse_index(&self, idx: u32) -> u32 {
        self.inverse[idx as usize]
    }
    pub fn rep(&self, class: usize) -> u64 {
        self.elements[self.classes[class].rep as usize]
    }
    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order() / self.classes[class].size
    }
    /// Members of a class, in element-list order.
    pub fn class_members(&self, class: usize) -> Vec<u64> {
        self.elements
            .iter()
            .zip(&self.class_of)
            .filter(|(_, &c)| c as usize == class)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn element_order(&self, x: u64) -> u32 {
        let id = self.ops.identity();
        let mut y = x;
        let mut k = 1;
        while y != id {
            y = self.ops.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (x, self.ops.identity());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.ops.mul(acc, base);
            }
            base = self.ops.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The class of g^{-1} for g in `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        let r = self.classes[class].rep;
        self.class_of_index(self.inverse[r as usize])
    }

    /// power_map()[k][t] = class of g_k^t for 0 ≤ t < order(g_k).
    pub fn power_map(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let g = self.rep(k);
                let mut y = self.ops.identity();
                let mut out = Vec::with_capacity(c.order as usize);
                for _ in 0..c.order {
                    out.push(self.class_of(y).expect("powers stay in the group"));
                    y = self.ops.mul(y, g);
                }
                out
            })
            .collect()
    }

    /// Exponent: lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.order as u64))
    }

    /// a[(i, j, k)] = #{x ∈ C_i : x^{-1} g_k ∈ C_j}, so C_i C_j = Σ_k a_{ijk} C_k.
    pub fn class_coefficients(&self) -> ClassCoefficients {
        let r = self.classes.len();
        let per_k: Vec<Vec<u32>> = (0..r)
            .into_par_iter()
            .map(|k| {
                let gk = self.rep(k);
                let mut counts = vec![0u32; r * r];
                for (x, &cx) in self.class_of.iter().enumerate() {
                    let xi = self.elements[self.inverse[x] as usize];
                    let j = self.class_of[self.index[&self.ops.mul(xi, gk)] as usize];
                    counts[cx as usize * r + j as usize] += 1;
                }
                counts
            })
            .collect();
        ClassCoefficients { r, per_k }
    }

    /// Number of pairs (a, b) ∈ C_1 × C_2 with ab equal to the representative of `target`,
    /// counted by enumerating C_1 and testing membership of a^{-1} g in C_2.
    pub fn convolution_count(&self, c1: usize, c2: usize, target: usize) -> u64 {
        let g = self.rep(target);
        self.class_of
            .iter()
            .enumerate()
            .filter(|(_, &c)| c as usize == c1)
            .filter(|(x, _)| {
                let xi = self.elements[self.inverse[*x] as usize];
                self.class_of[self.index[&self.ops.mul(xi, g)] as usize] as usize == c2
            })
            .count() as u64
    }
}

/// Class multiplication coefficients a_{ijk}.
#[derive(Clone, Debug)]
pub struct ClassCoefficients {
    r: usize,
    per_k: Vec<Vec<u32>>,
}

impl ClassCoefficients {
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.per_k[k][i * self.r + j]
    }
    pub fn rank(&self) -> usize {
        self.r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cyclic group of order m under addition.
    struct Cyclic(u64);
    impl GroupOps for Cyclic {
        fn identity(&self) -> u64 {
            0
        }
        fn mul(&self, a: u64, b: u64) -> u64 {
            (a + b) % self.0
        }
        fn inv(&self, a: u64) -> u64 {
            (self.0 - a) % self.0
        }
    }

    #[test]
    fn cyclic_group() {
        let g = SmallGroup::generate(Cyclic(6), vec![1], ORDER_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.class_count(), 6);
        assert_eq!(g.exponent(), 6);
        assert!(SmallGroup::generate(Cyclic(6), vec![1], 4).is_err());
        let a = g.class_coefficients();
        let c1 = g.class_of(1).unwrap();
        let c2 = g.class_of(2).unwrap();
        let c3 = g.class_of(3).unwrap();
        assert_eq!(a.get(c1, c2, c3), 1);
        assert_eq!(g.convolution_count(c1, c2, c3), 1);
        assert_eq!(g.convolution_count(c1, c1, c3), 0);
    }
}
