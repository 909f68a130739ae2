//! Arithmetic and linear algebra modulo a word-sized prime ℓ.

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub l: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Fp {
    pub fn new(l: u64) -> Fp {
        debug_assert!(is_prime(l));
        Fp { l }
    }
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.l
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.l - b) % self.l
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (a % self.l, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.l != 0, "inverse of zero mod {}", self.l);
        self.pow(a, self.l - 2)
    }
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.l as i64) as u64
    }
    /// The smallest generator of 𝔽_ℓ^×.
    pub fn primitive_root(&self) -> u64 {
        let fs = prime_factors(self.l - 1);
        (2..self.l)
            .find(|&g| fs.iter().all(|&f| self.pow(g, (self.l - 1) / f) != 1))
            .expect("𝔽_ℓ^× is cyclic")
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = self.inv(rows[r][c]);
            for v in rows[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of {v : A v = 0} for a square matrix given by rows.
    pub fn kernel(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.len();
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, rows[r][f]);
                }
                v
            })
            .collect()
    }

    /// det(xI − A), monic, low→high, via upper Hessenberg reduction.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(p) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if p != m {
                h.swap(p, m);
                for row in h.iter_mut() {
                    row.swap(p, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let f = self.mul(h[i][m - 1], inv);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    h[i][j] = self.sub(h[i][j], self.mul(f, h[m][j]));
                }
                for row in h.iter_mut() {
                    row[m] = self.add(row[m], self.mul(f, row[i]));
                }
            }
        }
        let mut ps: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            // (x − h_mm)·p_m
            let pm = &ps[m];
            let mut next = vec![0u64; pm.len() + 1];
            for (i, &c) in pm.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(h[m][m], c));
            }
            let mut prod = 1u64;
            for i in (0..m).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let c = self.mul(h[i][m], prod);
                if c != 0 {
                    for (t, &pc) in ps[i].iter().enumerate() {
                        next[t] = self.sub(next[t], self.mul(c, pc));
                    }
                }
            }
            ps.push(next);
        }
        ps.pop().unwrap()
    }

    pub fn eval(&self, f: &[u64], x: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots of f in 𝔽_ℓ by exhaustive evaluation.
    pub fn roots(&self, f: &[u64]) -> Vec<u64> {
        (0..self.l).filter(|&x| self.eval(f, x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let f = Fp::new(13);
        assert_eq!(f.mul(f.inv(5), 5), 1);
        assert_eq!(f.primitive_root(), 2);
        let a = vec![vec![2, 1], vec![0, 3]];
        let cp = f.charpoly(&a);
        assert_eq!(f.roots(&cp), vec![2, 3]);
        let k = f.kernel(&[vec![0, 1], vec![0, 1]]);
        assert_eq!(k, vec![vec![1, 0]]);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }
}
