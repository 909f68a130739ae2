//! Eigenspace data of matrices over 𝔽_q: support, regular semisimplicity,
//! factor data of the characteristic polynomial, and Coxeter-torus generators.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly;
use serde::{Deserialize, Serialize};

/// supp(x) = N − max_f dim ker f(x) / deg f over the irreducible factors f of the
/// characteristic polynomial: the codimension of the largest eigenspace over 𝔽̄_q.
pub fn support(k: &Field, x: &Matrix) -> u64 {
    let n = x.n() as u64;
    let best = poly::factor(k, &x.charpoly(k))
        .iter()
        .map(|(f, _)| x.poly_eval(k, f).nullity(k) as u64 / (f.len() as u64 - 1))
        .max()
        .unwrap_or(0);
    n - best
}

/// One irreducible factor of the characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorData {
    pub factor: Vec<u8>,
    pub degree: u32,
    pub multiplicity: u32,
}

pub fn cycle_data(k: &Field, x: &Matrix) -> Vec<FactorData> {
    poly::factor(k, &x.charpoly(k))
        .into_iter()
        .map(|(f, m)| FactorData { degree: f.len() as u32 - 1, factor: f, multiplicity: m })
        .collect()
}

/// True iff the characteristic polynomial is squarefree.
pub fn regular_semisimple(k: &Field, x: &Matrix) -> bool {
    cycle_data(k, x).iter().all(|f| f.multiplicity == 1)
}

/// Multiplicative order of an invertible matrix.
pub fn matrix_order(k: &Field, x: &Matrix) -> u64 {
    let id = Matrix::identity(x.n());
    let mut y = x.clone();
    let mut o = 1;
    while y != id {
        y = y.mul(k, x);
        o += 1;
    }
    o
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoxeterTorus {
    pub t: Matrix,
    pub order: u64,
    /// Candidate polynomials examined before success.
    pub tried: u64,
}

/// t = M^{q−1} for the first companion matrix M of a monic irreducible degree-p
/// polynomial such that t has order (q^p − 1)/(q − 1) and an irreducible
/// characteristic polynomial.
pub fn coxeter_torus_generator(p: u32, q: u64) -> Result<CoxeterTorus> {
    let k = Field::new(q)?;
    let target = (q.pow(p) - 1) / (q - 1);
    let mut tried = 0;
    for f in poly::monic_polys(&k, p as usize) {
        if f[0] == 0 || !poly::is_irreducible(&k, &f) {
            continue;
        }
        tried += 1;
        let m = Matrix::companion(&k, &f);
        let t = m.pow(&k, q - 1);
        if t.det(&k) == 1 && matrix_order(&k, &t) == target && poly::is_irreducible(&k, &t.charpoly(&k)) {
            return Ok(CoxeterTorus { t, order: target, tried });
        }
    }
    Err(Error::Exhausted(format!("no Coxeter torus generator for p = {p}, q = {q} after {tried} candidates")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supports() {
        let k = Field::new(2).unwrap();
        assert_eq!(support(&k, &Matrix::identity(3)), 0);
        let j = Matrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(support(&k, &j), 1);
        assert!(!regular_semisimple(&k, &j));
        let c = Matrix::companion(&k, &[1, 1, 0, 1]);
        assert_eq!(support(&k, &c), 2);
        assert!(regular_semisimple(&k, &c));
        // (x + 1)(x² + x + 1) = x³ + 1
        let d = Matrix::companion(&k, &[1, 0, 0, 1]);
        assert!(regular_semisimple(&k, &d));
        assert_eq!(cycle_data(&k, &d).len(), 2);
        assert!(!regular_semisimple(&k, &Matrix::identity(2)));
    }

    #[test]
    fn tori() {
        let t = coxeter_torus_generator(3, 2).unwrap();
        assert_eq!(t.order, 7);
        let t = coxeter_torus_generator(3, 3).unwrap();
        assert_eq!(t.order, 13);
        let k = Field::new(3).unwrap();
        assert!(regular_semisimple(&k, &t.t));
        assert_eq!(cycle_data(&k, &t.t).len(), 1);
    }
}
