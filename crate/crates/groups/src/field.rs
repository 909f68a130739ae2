//! Finite fields 𝔽_q, q = p^a ≤ 16, by addition and multiplication tables.
//!
//! An element is the index Σ c_i p^i of its coordinate vector (c_0, …, c_{a−1})
//! in the polynomial basis modulo a fixed irreducible polynomial; 0 and 1 are
//! the field's zero and one, and the prime field is {0, …, p−1}.

use crate::error::{Error, Result};

/// Returns (p, a) with q = p^a, or `None` if q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    let mut a = 0;
    while r % p == 0 {
        r /= p;
        a += 1;
    }
    (r == 1).then_some((p, a))
}

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    a: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn digits(x: u32, p: u32, a: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(a as usize);
    let mut y = x;
    for _ in 0..a {
        v.push(y % p);
        y /= p;
    }
    v
}

fn undigits(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies two coordinate vectors modulo the monic `modulus` over 𝔽_p.
fn poly_mulmod(x: &[u32], y: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let a = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * a];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi * yj) % p;
        }
    }
    for k in (a..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            for (t, &m) in modulus.iter().enumerate() {
                let idx = k - a + t;
                prod[idx] = (prod[idx] + (p - c) * m % p) % p;
            }
        }
    }
    prod.truncate(a);
    prod
}

/// A monic irreducible polynomial of degree a over 𝔽_p (coefficients low→high):
/// the first monic polynomial with no monic factor of degree ≤ a/2.
fn irreducible(p: u32, a: u32) -> Vec<u32> {
    if a == 1 {
        return vec![0, 1];
    }
    let divides = |f: &[u32], g: &[u32]| -> bool {
        let mut r = f.to_vec();
        let dg = g.len() - 1;
        while r.len() > dg {
            let c = *r.last().unwrap();
            let shift = r.len() - 1 - dg;
            for (t, &gc) in g.iter().enumerate() {
                r[shift + t] = (r[shift + t] + (p - c) * gc % p) % p;
            }
            r.pop();
        }
        r.iter().all(|&c| c == 0)
    };
    let count = p.pow(a);
    'cand: for low in 0..count {
        let mut f = digits(low, p, a);
        f.push(1);
        for deg in 1..=a / 2 {
            for glow in 0..p.pow(deg) {
                let mut g = digits(glow, p, deg);
                g.push(1);
                if divides(&f, &g) {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > 16 {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = irreducible(p, a);
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for x in 0..q {
            let dx = digits(x, p, a);
            for y in 0..q {
                let dy = digits(y, p, a);
                let s: Vec<u32> = dx.iter().zip(&dy).map(|(u, v)| (u + v) % p).collect();
                add[(x * q + y) as usize] = undigits(&s, p) as u8;
                mul[(x * q + y) as usize] = undigits(&poly_mulmod(&dx, &dy, &modulus, p), p) as u8;
            }
        }
        let mut neg = vec![0u8; n];
        let mut inv = vec![0u8; n];
        for x in 0..q as usize {
            for y in 0..q as usize {
                if add[x * n + y] == 0 {
                    neg[x] = y as u8;
                }
                if mul[x * n + y] == 1 {
                    inv[x] = y as u8;
                }
            }
        }
        Ok(Field { p, a, q, modulus, add, mul, neg, inv })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.a
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// The defining polynomial of 𝔽_q over 𝔽_p, coefficients low→high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    #[inline]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q as usize + y as usize]
    }
    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q as usize + y as usize]
    }
    #[inline]
    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }
    #[inline]
    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg(y))
    }
    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, x: u8) -> u8 {
        self.inv[x as usize]
    }
    pub fn pow(&self, x: u8, mut e: u64) -> u8 {
        let (mut base, mut acc) = (x, 1u8);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
    /// The image of an integer in the prime field.
    pub fn from_int(&self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }
    pub fn mult_order(&self, x: u8) -> u32 {
        assert!(x != 0, "0 has no multiplicative order");
        let mut y = x;
        let mut k = 1;
        while y != 1 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
    /// The first generator of 𝔽_q^×.
    pub fn primitive_element(&self) -> u8 {
        self.nonzero().find(|&x| self.mult_order(x) == self.q - 1).expect("cyclic group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(Field::new(6).is_err());
        assert!(Field::new(32).is_err());
    }

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::new(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x)), 1);
                }
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in f.elements() {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                        assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
                    }
                }
            }
            assert_eq!(f.mult_order(f.primitive_element()), q as u32 - 1);
        }
    }
}
