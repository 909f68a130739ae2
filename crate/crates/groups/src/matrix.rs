//! Dense square matrices over 𝔽_q and the packed 64-bit encoding used for group
//! elements (4 bits per entry, at most 16 entries).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{self, Poly};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    n: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn new(n: usize, data: Vec<u8>) -> Result<Matrix> {
        if data.len() != n * n {
            return Err(Error::Dimension(format!("{} entries for a {n}×{n} matrix", data.len())));
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Matrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("rows must have length n".into()));
        }
        Matrix::new(n, rows.concat())
    }

    pub fn zero(n: usize) -> Matrix {
        Matrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::scalar(n, 1)
    }

    pub fn scalar(n: usize, c: u8) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn mul(&self, k: &Field, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = k.add(m.get(i, j), k.mul(a, other.get(l, j)));
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn add(&self, k: &Field, other: &Matrix) -> Matrix {
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| k.add(a, b)).collect();
        Matrix { n: self.n, data }
    }

    pub fn scale(&self, k: &Field, c: u8) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|&a| k.mul(a, c)).collect() }
    }

    pub fn pow(&self, k: &Field, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(k, &base);
            }
            base = base.mul(k, &base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form in place (nonzero rows first); returns the pivot columns.
    pub fn echelon(k: &Field, rows: &mut [Vec<u8>], ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = k.inv(rows[r][c]);
            for v in rows[r].iter_mut() {
                *v = k.mul(*v, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    let pivot_row = rows[r].clone();
                    for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = k.sub(*x, k.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self, k: &Field) -> usize {
        let mut rows = self.rows();
        Matrix::echelon(k, &mut rows, self.n).len()
    }

    pub fn nullity(&self, k: &Field) -> usize {
        self.n - self.rank(k)
    }

    pub fn det(&self, k: &Field) -> u8 {
        let n = self.n;
        let mut rows = self.rows();
        let mut det = 1u8;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| rows[i][c] != 0) else {
                return 0;
            };
            if p != c {
                rows.swap(p, c);
                det = k.neg(det);
            }
            det = k.mul(det, rows[c][c]);
            let inv = k.inv(rows[c][c]);
            for i in c + 1..n {
                if rows[i][c] != 0 {
                    let f = k.mul(rows[i][c], inv);
                    let pivot_row = rows[c].clone();
                    for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = k.sub(*x, k.mul(f, y));
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self, k: &Field) -> Result<Matrix> {
        let n = self.n;
        let mut rows: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut r = self.data[i * n..(i + 1) * n].to_vec();
                r.extend((0..n).map(|j| u8::from(i == j)));
                r
            })
            .collect();
        let pivots = Matrix::echelon(k, &mut rows, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Matrix::new(n, rows.into_iter().flat_map(|r| r[n..].to_vec()).collect())
    }

    /// Basis of the (right) kernel {v : A v = 0}.
    pub fn kernel(&self, k: &Field) -> Vec<Vec<u8>> {
        let n = self.n;
        let mut rows = self.rows();
        let pivots = Matrix::echelon(k, &mut rows, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u8; n];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = k.neg(rows[r][f]);
                }
                v
            })
            .collect()
    }

    /// det(xI − A), monic, via reduction to upper Hessenberg form.
    pub fn charpoly(&self, k: &Field) -> Poly {
        let n = self.n;
        let mut h: Vec<Vec<u8>> = self.rows();
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
            let inv = k.inv(h[m][m - 1]);
            for i in m + 1..n {
                let f = k.mul(h[i][m - 1], inv);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = k.sub(h[i][j], k.mul(f, h[m][j]));
                    h[i][j] = v;
                }
                for row in h.iter_mut() {
                    let v = k.add(row[m], k.mul(f, row[i]));
                    row[m] = v;
                }
            }
        }
        // p_0 = 1, p_{m+1} = (x − h_mm) p_m − Σ_{i<m} h_{i,m} (Π_{j=i+1}^{m} h_{j,j−1}) p_i
        let mut ps: Vec<Poly> = vec![vec![1]];
        for m in 0..n {
            let mut next = poly::mul(k, &[k.neg(h[m][m]), 1], &ps[m]);
            let mut prod = 1u8;
            for i in (0..m).rev() {
                prod = k.mul(prod, h[i + 1][i]);
                let c = k.mul(h[i][m], prod);
                if c != 0 {
                    next = poly::sub(k, &next, &poly::mul(k, &[c], &ps[i]));
                }
            }
            ps.push(next);
        }
        ps.pop().unwrap()
    }

    /// f(A) by Horner's rule.
    pub fn poly_eval(&self, k: &Field, f: &[u8]) -> Matrix {
        let mut acc = Matrix::zero(self.n);
        for &c in f.iter().rev() {
            acc = acc.mul(k, self).add(k, &Matrix::scalar(self.n, c));
        }
        acc
    }

    pub fn is_scalar(&self) -> bool {
        let d = self.get(0, 0);
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == if i == j { d } else { 0 }))
    }

    pub fn pack(&self) -> u64 {
        assert!(self.n * self.n <= 16, "packing holds at most 16 entries");
        self.data.iter().enumerate().fold(0u64, |acc, (i, &v)| acc | (v as u64) << (4 * i))
    }

    pub fn unpack(code: u64, n: usize) -> Matrix {
        Matrix { n, data: (0..n * n).map(|i| ((code >> (4 * i)) & 15) as u8).collect() }
    }

    /// Companion matrix of a monic polynomial of degree n.
    pub fn companion(k: &Field, f: &[u8]) -> Matrix {
        let n = f.len() - 1;
        let mut m = Matrix::zero(n);
        for i in 1..n {
            m.set(i, i - 1, 1);
        }
        for i in 0..n {
            m.set(i, n - 1, k.neg(f[i]));
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Product of packed n×n matrices (n ≤ 4) without unpacking to a heap buffer.
#[inline]
pub fn packed_mul(k: &Field, n: usize, a: u64, b: u64) -> u64 {
    let mut x = [0u8; 16];
    let mut y = [0u8; 16];
    for i in 0..n * n {
        x[i] = ((a >> (4 * i)) & 15) as u8;
        y[i] = ((b >> (4 * i)) & 15) as u8;
    }
    let mut out = 0u64;
    for i in 0..n {
        for j in 0..n {
            let mut s = 0u8;
            for l in 0..n {
                s = k.add(s, k.mul(x[i * n + l], y[l * n + j]));
            }
            out |= (s as u64) << (4 * (i * n + j));
        }
    }
    out
}

/// Parses the matrix file format: a line "n q", then n rows of n residues.
pub fn parse_matrix_file(text: &str) -> Result<(Field, Matrix)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let nums = |l: &str| -> Result<Vec<u64>> {
        l.split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect()
    };
    let h = nums(header)?;
    if h.len() != 2 {
        return Err(Error::Parse("header must be \"n q\"".into()));
    }
    let (n, q) = (h[0] as usize, h[1]);
    let k = Field::new(q)?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let l = lines.next().ok_or_else(|| Error::Parse("too few rows".into()))?;
        let r = nums(l)?;
        if r.len() != n || r.iter().any(|&v| v >= q) {
            return Err(Error::Parse(format!("row {l:?} must hold {n} residues below {q}")));
        }
        rows.push(r.into_iter().map(|v| v as u8).collect());
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing input after the matrix".into()));
    }
    Ok((k, Matrix::from_rows(&rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_algebra() {
        let k = Field::new(3).unwrap();
        let a = Matrix::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(a.det(&k), 1);
        let ai = a.inverse(&k).unwrap();
        assert_eq!(a.mul(&k, &ai), Matrix::identity(2));
        assert_eq!(a.charpoly(&k), vec![1, 1, 1]); // (x−1)² = x² − 2x + 1 = x² + x + 1
        assert_eq!(a.pow(&k, 3), Matrix::identity(2));
        assert_eq!(Matrix::unpack(a.pack(), 2), a);
        assert_eq!(packed_mul(&k, 2, a.pack(), ai.pack()), Matrix::identity(2).pack());
    }

    #[test]
    fn charpoly_matches_companion() {
        let k = Field::new(5).unwrap();
        let f = vec![3, 0, 4, 2, 1];
        let c = Matrix::companion(&k, &f);
        assert_eq!(c.charpoly(&k), f);
        assert!(c.poly_eval(&k, &f).data().iter().all(|&v| v == 0));
        let d = c.mul(&k, &c).add(&k, &Matrix::identity(4));
        assert!(d.poly_eval(&k, &d.charpoly(&k)).data().iter().all(|&v| v == 0));
    }

    #[test]
    fn file_format() {
        let (k, m) = parse_matrix_file("2 4\n0 1\n1 3\n").unwrap();
        assert_eq!(k.q(), 4);
        assert_eq!(m.get(1, 1), 3);
        assert!(parse_matrix_file("2 4\n0 1\n").is_err());
        assert!(parse_matrix_file("2 4\n0 5\n1 1\n").is_err());
    }
}
