//! Character tables by the Dixon–Schneider method.
//!
//! The class matrices M_i = (a_{ijk})_{j,k} act on ℂ^r and their common
//! eigenvectors are the central characters ω_χ(C_j) = |C_j| χ(g_j)/χ(1). Working
//! modulo a prime ℓ ≡ 1 (mod exp G) with ℓ > 2√|G|, the common eigenspaces are
//! split one class matrix at a time; degrees follow from Σ_j ω_j ω_{j'}/|C_j| =
//! |G|/χ(1)², and each value χ(g) is lifted to ℤ[ζ_e] from the multiplicities of
//! its eigenvalues, which are recovered from χ on the powers of g.

use crate::cyclo::{CycloAccumulator, RootSum};
use crate::error::{Error, Result};
use crate::group::{GroupOps, SmallGroup};
use crate::modp::{is_prime, Fp};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTable {
    pub order: u64,
    /// Exponent e of the group; values are written over ζ_e.
    pub exponent: u32,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u32>,
    pub inverse_class: Vec<usize>,
    /// power_map[k][t] = class of g_k^t, 0 ≤ t < order(g_k).
    pub power_map: Vec<Vec<usize>>,
    pub degrees: Vec<u64>,
    /// values[χ][class].
    pub values: Vec<Vec<RootSum>>,
    /// The prime used for the modular computation.
    pub modulus: u64,
}

/// Which exact checks a table passes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableValidation {
    pub square: bool,
    pub degrees_divide_order: bool,
    pub degree_square_sum: bool,
    pub row_orthogonality: bool,
    pub column_orthogonality: bool,
    /// First violated criterion, named.
    pub failure: Option<String>,
}

impl TableValidation {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Smallest prime ℓ ≡ 1 (mod e) with ℓ > 2√|G|.
pub fn dixon_prime(order: u64, e: u64) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let mut l = e + 1;
    while (l as f64) <= bound || !is_prime(l) {
        l += e;
    }
    l
}

/// Eigen-decomposition of the subspace spanned by `basis` (rows in RREF with
/// pivot columns `pivots`) under the matrix `m`; returns the eigenspaces.
fn split(fp: &Fp, m: &[Vec<u64>], basis: &[Vec<u64>], pivots: &[usize]) -> Result<Vec<Vec<Vec<u64>>>> {
    let dim = basis.len();
    let r = m.len();
    // A[t][s] = coordinate t of M b_s
    let mut a = vec![vec![0u64; dim]; dim];
    for (s, b) in basis.iter().enumerate() {
        let w: Vec<u64> = (0..r)
            .map(|j| m[j].iter().zip(b).fold(0u64, |acc, (&x, &y)| fp.add(acc, fp.mul(x, y))))
            .collect();
        for (t, &p) in pivots.iter().enumerate() {
            a[t][s] = w[p];
        }
        // the image must lie in the span
        let mut check = vec![0u64; r];
        for (t, bt) in basis.iter().enumerate() {
            for (c, &v) in bt.iter().enumerate() {
                check[c] = fp.add(check[c], fp.mul(a[t][s], v));
            }
        }
        if check != w {
            return Err(Error::Table("class matrix does not preserve an eigenspace".into()));
        }
    }
    let cp = fp.charpoly(&a);
    let roots = fp.roots(&cp);
    let mut spaces = Vec::new();
    let mut total = 0;
    for lam in roots {
        let shifted: Vec<Vec<u64>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { fp.sub(a[i][j], lam) } else { a[i][j] }).collect())
            .collect();
        let ker = fp.kernel(&shifted);
        total += ker.len();
        let mut vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|coords| {
                let mut v = vec![0u64; r];
                for (t, &c) in coords.iter().enumerate() {
                    for (x, &y) in v.iter_mut().zip(&basis[t]) {
                        *x = fp.add(*x, fp.mul(c, y));
                    }
                }
                v
            })
            .collect();
        fp.rref(&mut vecs);
        spaces.push(vecs);
    }
    if total != dim {
        return Err(Error::Table("class matrix is not diagonalizable modulo ℓ".into()));
    }
    Ok(spaces)
}

/// Computes the character table of a group and validates it exactly.
pub fn character_table<O: GroupOps>(g: &SmallGroup<O>) -> Result<CharacterTable> {
    let r = g.class_count();
    let order = g.order();
    let e = g.exponent();
    let l = dixon_prime(order, e);
    let fp = Fp::new(l);
    let coeffs = g.class_coefficients();
    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
    let orders: Vec<u32> = g.classes().iter().map(|c| c.order).collect();
    let inverse_class: Vec<usize> = (0..r).map(|k| g.inverse_class(k)).collect();
    let power_map = g.power_map();

    // common eigenspaces
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()];
    for i in 1..r {
        if pending.is_empty() {
            break;
        }
        let m: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| coeffs.get(i, j, k) as u64 % l).collect())
            .collect();
        let mut next = Vec::new();
        for mut basis in pending {
            let pivots = fp.rref(&mut basis);
            for sp in split(&fp, &m, &basis, &pivots)? {
                if sp.len() == 1 {
                    done.push(sp.into_iter().next().unwrap());
                } else {
                    next.push(sp);
                }
            }
        }
        pending = next;
    }
    for basis in pending {
        if basis.len() == 1 {
            done.extend(basis);
        } else {
            return Err(Error::Table(format!("a {}-dimensional common eigenspace did not split", basis.len())));
        }
    }
    if done.len() != r {
        return Err(Error::Table(format!("found {} characters for {r} classes", done.len())));
    }

    let z = fp.primitive_root();
    let zeta_e = fp.pow(z, (l - 1) / e);
    let order_mod = order % l;
    let mut chars: Vec<(u64, Vec<RootSum>)> = Vec::with_capacity(r);
    for v in done {
        let n0 = fp.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| fp.mul(x, n0)).collect();
        // Σ_j ω_j ω_{j'} / |C_j| = |G| / χ(1)²
        let s = (0..r).fold(0u64, |acc, j| {
            fp.add(acc, fp.mul(fp.mul(omega[j], omega[inverse_class[j]]), fp.inv(sizes[j] % l)))
        });
        let d2 = fp.mul(order_mod, fp.inv(s));
        let max_deg = (order as f64).sqrt() as u64 + 1;
        let deg = (1..=max_deg)
            .find(|&d| fp.mul(d, d) == d2)
            .ok_or_else(|| Error::Table("no degree matches the central character".into()))?;
        let modvals: Vec<u64> = (0..r).map(|j| fp.mul(fp.mul(omega[j], deg), fp.inv(sizes[j] % l))).collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = orders[k] as u64;
            let zeta_o = fp.pow(zeta_e, e / o);
            let o_inv = fp.inv(o % l);
            let mut terms = Vec::new();
            let mut total = 0u64;
            for s in 0..o {
                // m_s = (1/o) Σ_t χ(g^t) ζ_o^{−st}
                let mut acc = 0u64;
                for t in 0..o {
                    let w = fp.pow(zeta_o, (o - (s * t) % o) % o);
                    acc = fp.add(acc, fp.mul(modvals[power_map[k][t as usize]], w));
                }
                let ms = fp.mul(acc, o_inv);
                if ms > deg {
                    return Err(Error::Table(format!("eigenvalue multiplicity {ms} exceeds degree {deg}")));
                }
                total += ms;
                if ms > 0 {
                    terms.push(((s * (e / o)) as u32, ms as i64));
                }
            }
            if total != deg {
                return Err(Error::Table("eigenvalue multiplicities do not sum to the degree".into()));
            }
            row.push(RootSum::from_terms(e as u32, terms));
        }
        chars.push((deg, row));
    }
    let trivial = RootSum::integer(e as u32, 1);
    chars.sort_by(|a, b| {
        let ta = a.1.iter().all(|v| *v == trivial);
        let tb = b.1.iter().all(|v| *v == trivial);
        (a.0, !ta, &a.1).cmp(&(b.0, !tb, &b.1))
    });
    let table = CharacterTable {
        order,
        exponent: e as u32,
        class_sizes: sizes,
        class_orders: orders,
        inverse_class,
        power_map,
        degrees: chars.iter().map(|c| c.0).collect(),
        values: chars.into_iter().map(|c| c.1).collect(),
        modulus: l,
    };
    let check = table.validate();
    match check.failure {
        None => Ok(table),
        Some(f) => Err(Error::Table(f)),
    }
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order / self.class_sizes[class]
    }

    /// Exact row and column orthogonality, degree divisibility and Σ χ(1)² = |G|.
    pub fn validate(&self) -> TableValidation {
        let r = self.class_count();
        let e = self.exponent;
        let square = self.values.len() == r && self.values.iter().all(|row| row.len() == r);
        let degrees_match = square
            && self
                .values
                .iter()
                .zip(&self.degrees)
                .all(|(row, &d)| row[0] == RootSum::integer(e, d as i64));
        let degrees_divide_order = self.degrees.iter().all(|&d| d > 0 && self.order % d == 0);
        let degree_square_sum = self.degrees.iter().map(|&d| d as u128 * d as u128).sum::<u128>() == self.order as u128;
        let mut failure = None;
        let set_fail = |f: &mut Option<String>, s: String| {
            if f.is_none() {
                *f = Some(s);
            }
        };
        if !square {
            set_fail(&mut failure, "table is not square".into());
        }
        if !degrees_match {
            set_fail(&mut failure, "identity column disagrees with the degrees".into());
        }
        if !degrees_divide_order {
            set_fail(&mut failure, "degree-divides-order".into());
        }
        if !degree_square_sum {
            set_fail(&mut failure, "sum of squared degrees".into());
        }
        let mut row_orthogonality = square;
        if square {
            // Σ_j |C_j| χ_a(g_j) conj χ_b(g_j), grouped by element order: each group
            // is Galois-stable, so every partial sum is rational.
            let mut by_order: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for (j, &o) in self.class_orders.iter().enumerate() {
                by_order.entry(o).or_default().push(j);
            }
            'rows: for a in 0..r {
                for b in a..r {
                    let mut total: i128 = 0;
                    for (&o, classes) in &by_order {
                        let mut acc = CycloAccumulator::new(e, o);
                        for &j in classes {
                            acc.add_product(&[&self.values[a][j], &self.values[b][j]], true, self.class_sizes[j] as i128);
                        }
                        match acc.rational() {
                            Some(v) => total += v,
                            None => {
                                row_orthogonality = false;
                                set_fail(&mut failure, format!("row orthogonality (rows {a}, {b})"));
                                break 'rows;
                            }
                        }
                    }
                    let expected = if a == b { self.order as i128 } else { 0 };
                    if total != expected {
                        row_orthogonality = false;
                        set_fail(&mut failure, format!("row orthogonality (rows {a}, {b})"));
                        break 'rows;
                    }
                }
            }
        }
        let mut column_orthogonality = square;
        if square {
            'cols: for c in 0..r {
                for d in c..r {
                    let l = num_integer::lcm(self.class_orders[c], self.class_orders[d]);
                    let mut acc = CycloAccumulator::new(e, l);
                    for row in &self.values {
                        acc.add_product(&[&row[c], &row[d]], true, 1);
                    }
                    let expected = if c == d { self.centralizer_order(c) as i128 } else { 0 };
                    if acc.rational() != Some(expected) {
                        column_orthogonality = false;
                        set_fail(&mut failure, format!("column orthogonality (classes {c}, {d})"));
                        break 'cols;
                    }
                }
            }
        }
        TableValidation {
            square,
            degrees_divide_order,
            degree_square_sum,
            row_orthogonality,
            column_orthogonality,
            failure,
        }
    }

    /// Degree multiset in increasing order.
    pub fn degree_multiset(&self) -> Vec<u64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    /// ⟨θ, χ⟩ for a class function θ with integer values.
    pub fn multiplicity(&self, theta: &[i64], chi: usize) -> Result<i128> {
        let r = self.class_count();
        let e = self.exponent;
        let mut acc = CycloAccumulator::new(e, e);
        for j in 0..r {
            let t = RootSum::integer(e, theta[j]);
            acc.add_product(&[&t, &self.values[chi][j]], true, self.class_sizes[j] as i128);
        }
        let v = acc.rational().ok_or_else(|| Error::Irrational("inner product".into()))?;
        if v % self.order as i128 != 0 {
            return Err(Error::Table(format!("inner product {v}/{} is not an integer", self.order)));
        }
        Ok(v / self.order as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{build_group, Family};

    #[test]
    fn gl3_2() {
        let g = build_group(Family::GL, 3, 2).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degree_multiset(), vec![1, 3, 3, 6, 7, 8]);
        assert!(t.validate().ok());
    }

    #[test]
    fn sl2_3_and_corruption() {
        let g = build_group(Family::SL, 2, 3).unwrap();
        let mut t = character_table(&g).unwrap();
        assert_eq!(t.degree_multiset(), vec![1, 1, 1, 2, 2, 2, 3]);
        let e = t.exponent;
        t.values[1][2] = RootSum::integer(e, 5);
        let v = t.validate();
        assert!(!v.ok());
        assert!(v.failure.unwrap().contains("orthogonality"));
    }
}
