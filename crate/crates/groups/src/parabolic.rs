//! Standard parabolic subgroups of matrix groups (block upper triangular
//! elements), their permutation characters, Harish-Chandra cuspidality in
//! GL_n(q), and the cuspidal sum identity at a Coxeter-torus generator.

use crate::classical::{build_group, Family, MatrixGroup};
use crate::cyclo::{CycloAccumulator, RootSum};
use crate::dixon::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::support::coxeter_torus_generator;
use serde::{Deserialize, Serialize};

/// Block index of each row for the given block sizes.
fn block_of(blocks: &[usize]) -> Vec<usize> {
    blocks.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat(b).take(s)).collect()
}

/// True iff every entry below the block diagonal vanishes.
pub fn in_parabolic(m: &Matrix, blocks: &[usize]) -> bool {
    let b = block_of(blocks);
    (0..m.n()).all(|i| (0..m.n()).all(|j| b[i] <= b[j] || m.get(i, j) == 0))
}

/// Permutation character of G on G/P for the standard parabolic P with the given
/// block sizes: 1_P^G(g) = |C_G(g)|·|g^G ∩ P|/|P|.
pub fn parabolic_permutation_character(g: &MatrixGroup, blocks: &[usize]) -> Result<Vec<i64>> {
    if blocks.iter().sum::<usize>() != g.ops().n() {
        return Err(Error::Dimension("block sizes must sum to n".into()));
    }
    let mut hits = vec![0u64; g.class_count()];
    let mut p_order = 0u64;
    for &e in g.elements() {
        if in_parabolic(&g.ops().decode(e), blocks) {
            p_order += 1;
            hits[g.class_of(e)?] += 1;
        }
    }
    Ok((0..g.class_count())
        .map(|c| (g.centralizer_order(c) * hits[c] / p_order) as i64)
        .collect())
}

/// Elements of the unipotent radical of the standard parabolic with the given blocks.
pub fn unipotent_radical(g: &MatrixGroup, blocks: &[usize]) -> Vec<u64> {
    let n = g.ops().n();
    let q = g.ops().field().q() as u64;
    let b = block_of(blocks);
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| b[i] < b[j]).collect();
    let count = q.pow(slots.len() as u32);
    (0..count)
        .map(|mut idx| {
            let mut m = Matrix::identity(n);
            for &(i, j) in &slots {
                m.set(i, j, (idx % q) as u8);
                idx /= q;
            }
            m.pack()
        })
        .collect()
}

/// All compositions of n with at least two parts.
pub fn proper_compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        if mask == 0 {
            continue;
        }
        let mut parts = Vec::new();
        let mut cur = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(cur);
                cur = 1;
            } else {
                cur += 1;
            }
        }
        parts.push(cur);
        out.push(parts);
    }
    out
}

/// Σ_{u ∈ U} χ(u) for every character, as exact integers.
fn radical_sums(g: &MatrixGroup, t: &CharacterTable, blocks: &[usize]) -> Result<Vec<i128>> {
    let mut counts = vec![0i128; g.class_count()];
    for u in unipotent_radical(g, blocks) {
        counts[g.class_of(u)?] += 1;
    }
    let l = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .fold(1u32, |acc, (c, _)| num_integer::lcm(acc, t.class_orders[c]));
    let one = RootSum::integer(t.exponent, 1);
    t.values
        .iter()
        .map(|row| {
            let mut acc = CycloAccumulator::new(t.exponent, l);
            for (c, &n) in counts.iter().enumerate() {
                if n > 0 {
                    acc.add_product(&[&row[c], &one], false, n);
                }
            }
            acc.rational().ok_or_else(|| Error::Irrational("unipotent radical sum".into()))
        })
        .collect()
}

/// Characters of GL_n(q) with no nonzero vector fixed by the unipotent radical of
/// any proper standard parabolic.
pub fn cuspidal_set(g: &MatrixGroup, t: &CharacterTable) -> Result<Vec<usize>> {
    let n = g.ops().n();
    if n < 2 {
        return Ok((0..t.values.len()).collect());
    }
    let mut cusp = vec![true; t.values.len()];
    for blocks in proper_compositions(n) {
        for (i, s) in radical_sums(g, t, &blocks)?.into_iter().enumerate() {
            if s != 0 {
                cusp[i] = false;
            }
        }
    }
    Ok(cusp.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i).collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CancelTerm {
    /// The scalar z = c·I as a field element index.
    pub scalar: u8,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CancelReport {
    pub p: u32,
    pub q: u64,
    pub torus_order: u64,
    pub cuspidal: Vec<usize>,
    pub cuspidal_degree: u64,
    pub terms: Vec<CancelTerm>,
}

impl CancelReport {
    pub fn ok(&self) -> bool {
        !self.terms.is_empty() && self.terms.iter().all(|t| t.equal)
    }
}

/// Σ_{χ cuspidal} χ(t)²χ(z) against p(1 − q)χ(1) in GL_p(q) for every central z of
/// SL_p(q), with t the Coxeter-torus generator.
pub fn cancel_verify(p: u32, q: u64) -> Result<CancelReport> {
    let g = build_group(Family::GL, p as usize, q)?;
    let table = character_table(&g)?;
    cancel_verify_with(&g, &table, p, q)
}

pub fn cancel_verify_with(g: &MatrixGroup, table: &CharacterTable, p: u32, q: u64) -> Result<CancelReport> {
    let k = g.ops().field().clone();
    let cusp = cuspidal_set(g, table)?;
    let degree = *cusp
        .first()
        .map(|&i| &table.degrees[i])
        .ok_or_else(|| Error::Precondition("no cuspidal characters".into()))?;
    if cusp.iter().any(|&i| table.degrees[i] != degree) {
        return Err(Error::Precondition("cuspidal degrees differ".into()));
    }
    let torus = coxeter_torus_generator(p, q)?;
    let ct = g.class_of(torus.t.pack())?;
    let mut terms = Vec::new();
    for c in k.nonzero() {
        if k.pow(c, p as u64) != 1 {
            continue;
        }
        let cz = g.class_of(Matrix::scalar(p as usize, c).pack())?;
        let l = num_integer::lcm(table.class_orders[ct], table.class_orders[cz]);
        let mut acc = CycloAccumulator::new(table.exponent, l);
        for &i in &cusp {
            let row = &table.values[i];
            acc.add_product(&[&row[ct], &row[ct], &row[cz]], false, 1);
        }
        let lhs = acc.rational().ok_or_else(|| Error::Irrational("cuspidal sum".into()))?;
        let rhs = p as i128 * (1 - q as i128) * degree as i128;
        terms.push(CancelTerm { scalar: c, lhs: lhs.to_string(), rhs: rhs.to_string(), equal: lhs == rhs });
    }
    Ok(CancelReport { p, q, torus_order: torus.order, cuspidal: cusp, cuspidal_degree: degree, terms })
}

/// True iff no conjugate of `x` lies in a proper standard parabolic.
pub fn avoids_parabolics(g: &MatrixGroup, x: u64) -> Result<bool> {
    let class = g.class_of(x)?;
    let comps = proper_compositions(g.ops().n());
    for (idx, &e) in g.elements().iter().enumerate() {
        if g.class_of_index(idx as u32) == class {
            let m = g.ops().decode(e);
            if comps.iter().any(|b| in_parabolic(&m, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl3_2_cuspidal() {
        let g = build_group(Family::GL, 3, 2).unwrap();
        let t = character_table(&g).unwrap();
        let cusp = cuspidal_set(&g, &t).unwrap();
        assert_eq!(cusp.iter().map(|&i| t.degrees[i]).collect::<Vec<_>>(), vec![3, 3]);
        let rep = cancel_verify_with(&g, &t, 3, 2).unwrap();
        assert!(rep.ok());
        assert_eq!(rep.terms[0].lhs, "-9");
    }

    #[test]
    fn gl2_2_cuspidal_is_sign() {
        let g = build_group(Family::GL, 2, 2).unwrap();
        let t = character_table(&g).unwrap();
        let cusp = cuspidal_set(&g, &t).unwrap();
        assert_eq!(cusp.len(), 1);
        assert_eq!(t.degrees[cusp[0]], 1);
        assert_ne!(cusp[0], 0);
    }

    #[test]
    fn compositions() {
        assert_eq!(proper_compositions(3), vec![vec![1, 2], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(proper_compositions(1).len(), 0);
    }
}
