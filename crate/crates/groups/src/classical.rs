//! Classical matrix groups SL_n(q), GL_n(q) and Sp_{2m}(q) generated by
//! transvections (plus a diagonal torus element for GL).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{GroupOps, SmallGroup, ORDER_CAP};
use crate::matrix::{packed_mul, Matrix};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Group law on packed n×n matrices over 𝔽_q (n ≤ 4, q ≤ 16).
#[derive(Clone, Debug)]
pub struct MatrixOps {
    field: Field,
    n: usize,
}

impl MatrixOps {
    pub fn new(field: Field, n: usize) -> Result<MatrixOps> {
        if n == 0 || n > 4 {
            return Err(Error::Dimension(format!("packed matrices need 1 ≤ n ≤ 4, got {n}")));
        }
        Ok(MatrixOps { field, n })
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn decode(&self, code: u64) -> Matrix {
        Matrix::unpack(code, self.n)
    }
}

impl GroupOps for MatrixOps {
    fn identity(&self) -> u64 {
        Matrix::identity(self.n).pack()
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        packed_mul(&self.field, self.n, a, b)
    }
    fn inv(&self, a: u64) -> u64 {
        self.decode(a).inverse(&self.field).expect("group elements are invertible").pack()
    }
}

pub type MatrixGroup = SmallGroup<MatrixOps>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    SL,
    GL,
    Sp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::SL => "SL",
            Family::GL => "GL",
            Family::Sp => "Sp",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "SL" => Ok(Family::SL),
            "GL" => Ok(Family::GL),
            "SP" => Ok(Family::Sp),
            _ => Err(Error::Parse(format!("unknown family {s:?} (SL, GL or Sp)"))),
        }
    }
}

/// |GL_n(q)|, |SL_n(q)| or |Sp_n(q)| (n even for Sp).
pub fn group_order(family: Family, n: u32, q: u64) -> u128 {
    let q = q as u128;
    match family {
        Family::GL => q.pow(n * (n - 1) / 2) * (1..=n).map(|i| q.pow(i) - 1).product::<u128>(),
        Family::SL => group_order(Family::GL, n, q as u64) / (q - 1),
        Family::Sp => {
            let m = n / 2;
            q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<u128>()
        }
    }
}

/// The additive basis 1, x, …, x^{a−1} of 𝔽_q over 𝔽_p.
fn additive_basis(k: &Field) -> Vec<u8> {
    (0..k.degree()).map(|m| k.p().pow(m) as u8).collect()
}

/// Gram matrix of the symplectic form on e_1..e_m, f_m..f_1: B(e_i, f_i) = 1.
pub fn symplectic_form(k: &Field, n: usize) -> Matrix {
    let mut j = Matrix::zero(n);
    for i in 0..n {
        j.set(i, n - 1 - i, if i < n / 2 { 1 } else { k.neg(1) });
    }
    j
}

fn generators(k: &Field, family: Family, n: usize) -> Result<Vec<Matrix>> {
    let mut gens = Vec::new();
    match family {
        Family::SL | Family::GL => {
            for t in additive_basis(k) {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let mut m = Matrix::identity(n);
                            m.set(i, j, t);
                            gens.push(m);
                        }
                    }
                }
            }
            if family == Family::GL && k.q() > 2 {
                let mut d = Matrix::identity(n);
                d.set(0, 0, k.primitive_element());
                gens.push(d);
            }
            if n == 1 && family == Family::SL {
                gens.push(Matrix::identity(1));
            }
        }
        Family::Sp => {
            if n % 2 != 0 {
                return Err(Error::Dimension("symplectic groups need even n".into()));
            }
            let form = symplectic_form(k, n);
            // transvections x ↦ x + t·B(x, v)·v along v = e_a or e_a + e_b
            let mut vs = Vec::new();
            for a in 0..n {
                let mut v = vec![0u8; n];
                v[a] = 1;
                vs.push(v.clone());
                for b in a + 1..n {
                    let mut w = v.clone();
                    w[b] = 1;
                    vs.push(w);
                }
            }
            for v in vs {
                // row vector (v^T J)
                let vj: Vec<u8> = (0..n)
                    .map(|c| (0..n).fold(0u8, |s, r| k.add(s, k.mul(v[r], form.get(r, c)))))
                    .collect();
                for t in additive_basis(k) {
                    let mut m = Matrix::identity(n);
                    for r in 0..n {
                        for c in 0..n {
                            // T = I − t·v·(v^T J): then T x = x − t·v·B(v, x) = x + t·B(x, v)·v
                            let e = k.mul(t, k.mul(v[r], vj[c]));
                            m.set(r, c, k.sub(m.get(r, c), e));
                        }
                    }
                    gens.push(m);
                }
            }
        }
    }
    Ok(gens)
}

/// g^T J g = J.
pub fn preserves_form(k: &Field, g: &Matrix, form: &Matrix) -> bool {
    g.transpose().mul(k, form).mul(k, g) == *form
}

/// Builds SL_n(q), GL_n(q) or Sp_n(q) by closure of standard generators. The
/// closure's order is checked against the order formula, and for Sp every
/// member is checked to preserve the symplectic form.
pub fn build_group(family: Family, n: usize, q: u64) -> Result<MatrixGroup> {
    let k = Field::new(q)?;
    let expected = group_order(family, n as u32, q);
    if expected > ORDER_CAP as u128 {
        return Err(Error::OrderCap { cap: ORDER_CAP });
    }
    let gens = generators(&k, family, n)?;
    if family == Family::Sp {
        let form = symplectic_form(&k, n);
        if let Some(i) = gens.iter().position(|g| !preserves_form(&k, g, &form)) {
            return Err(Error::FormViolation(i));
        }
    }
    let codes = gens.iter().map(Matrix::pack).collect();
    let g = SmallGroup::generate(MatrixOps::new(k, n)?, codes, ORDER_CAP)?;
    if g.order() as u128 != expected {
        return Err(Error::Precondition(format!(
            "closure of the generators of {family}_{n}({q}) has order {} instead of {expected}",
            g.order()
        )));
    }
    if family == Family::Sp {
        let form = symplectic_form(g.ops().field(), n);
        let field = g.ops().field();
        if let Some(i) = g.elements().iter().position(|&e| !preserves_form(field, &g.ops().decode(e), &form)) {
            return Err(Error::FormViolation(i));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let g = build_group(Family::SL, 2, 3).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.class_count(), 7);
        let g = build_group(Family::GL, 3, 2).unwrap();
        assert_eq!(g.order(), 168);
        assert_eq!(g.class_count(), 6);
        let g = build_group(Family::Sp, 4, 2).unwrap();
        assert_eq!(g.order(), 720);
        assert_eq!(g.class_count(), 11);
        let g = build_group(Family::GL, 2, 4).unwrap();
        assert_eq!(g.order(), 180);
    }

    #[test]
    fn class_sizes_sum_and_divide() {
        let g = build_group(Family::SL, 2, 5).unwrap();
        let total: u64 = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
        assert!(g.classes().iter().all(|c| g.order() % c.size == 0));
        assert_eq!(g.class_count(), 9);
    }

    #[test]
    fn caps_and_parsing() {
        assert!(matches!(build_group(Family::GL, 4, 3), Err(Error::OrderCap { .. })));
        assert_eq!("sp".parse::<Family>().unwrap(), Family::Sp);
        assert!(build_group(Family::Sp, 3, 2).is_err());
    }
}
