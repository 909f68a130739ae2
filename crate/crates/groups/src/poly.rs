//! Polynomials over 𝔽_q, coefficients stored low→high without trailing zeros.

use crate::field::Field;

pub type Poly = Vec<u8>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Degree, with −1 for the zero polynomial.
pub fn degree(f: &[u8]) -> i64 {
    f.len() as i64 - 1
}

pub fn add(k: &Field, f: &[u8], g: &[u8]) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| k.add(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn sub(k: &Field, f: &[u8], g: &[u8]) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| k.sub(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn mul(k: &Field, f: &[u8], g: &[u8]) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(a, b));
        }
    }
    trim(out)
}

/// (quotient, remainder) of f by a nonzero g.
pub fn divrem(k: &Field, f: &[u8], g: &[u8]) -> (Poly, Poly) {
    assert!(!g.is_empty(), "division by the zero polynomial");
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lead_inv = k.inv(g[dg]);
    let mut quo = vec![0u8; f.len().saturating_sub(dg).max(1)];
    while r.len() > dg && !r.is_empty() {
        let c = k.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - dg;
        quo[shift] = c;
        for (t, &gc) in g.iter().enumerate() {
            r[shift + t] = k.sub(r[shift + t], k.mul(c, gc));
        }
        r.pop();
        r = trim(r);
    }
    (trim(quo), trim(r))
}

pub fn monic(k: &Field, f: &[u8]) -> Poly {
    match f.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = k.inv(l);
            f.iter().map(|&c| k.mul(c, li)).collect()
        }
    }
}

pub fn gcd(k: &Field, f: &[u8], g: &[u8]) -> Poly {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let (_, r) = divrem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn derivative(k: &Field, f: &[u8]) -> Poly {
    let out = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| k.mul(c, k.from_int(i as i64)))
        .collect();
    trim(out)
}

/// All monic polynomials of the given degree.
pub fn monic_polys(k: &Field, deg: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = k.q() as u64;
    (0..q.pow(deg as u32)).map(move |mut idx| {
        let mut f = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            f.push((idx % q) as u8);
            idx /= q;
        }
        f.push(1);
        f
    })
}

pub fn is_irreducible(k: &Field, f: &[u8]) -> bool {
    let d = degree(f);
    if d < 1 {
        return false;
    }
    for e in 1..=(d as usize) / 2 {
        for g in monic_polys(k, e) {
            if divrem(k, f, &g).1.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Factorization of a monic polynomial into monic irreducibles with multiplicities,
/// by trial division in increasing degree.
pub fn factor(k: &Field, f: &[u8]) -> Vec<(Poly, u32)> {
    let mut rest = monic(k, f);
    let mut out = Vec::new();
    let mut e = 1;
    while degree(&rest) >= 2 * e as i64 {
        for g in monic_polys(k, e) {
            if !is_irreducible(k, &g) {
                continue;
            }
            let mut m = 0;
            loop {
                let (quo, r) = divrem(k, &rest, &g);
                if !r.is_empty() {
                    break;
                }
                rest = quo;
                m += 1;
            }
            if m > 0 {
                out.push((g, m));
            }
        }
        e += 1;
    }
    if degree(&rest) >= 1 {
        match out.iter_mut().find(|(g, _)| *g == rest) {
            Some(entry) => entry.1 += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    out
}

pub fn eval(k: &Field, f: &[u8], x: u8) -> u8 {
    f.iter().rev().fold(0, |acc, &c| k.add(k.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        let k = Field::new(2).unwrap();
        // x^3 + x + 1 is irreducible over 𝔽_2
        assert!(is_irreducible(&k, &[1, 1, 0, 1]));
        // x^2 + 1 = (x + 1)^2
        assert_eq!(factor(&k, &[1, 0, 1]), vec![(vec![1, 1], 2)]);
        // (x^2 + x + 1)(x + 1) = x^3 + 1
        assert_eq!(factor(&k, &[1, 0, 0, 1]), vec![(vec![1, 1], 1), (vec![1, 1, 1], 1)]);
        let k3 = Field::new(3).unwrap();
        let f = mul(&k3, &[1, 1], &[2, 0, 1]);
        let (qq, r) = divrem(&k3, &f, &[1, 1]);
        assert!(r.is_empty());
        assert_eq!(qq, vec![2, 0, 1]);
        assert_eq!(gcd(&k3, &f, &[1, 1]), vec![1, 1]);
        assert_eq!(derivative(&k3, &[0, 0, 0, 1]), Vec::<u8>::new());
    }
}
