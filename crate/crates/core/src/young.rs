//! Kostka numbers, their stability in the first row, and rows of the inverse
//! Kostka matrix restricted to partitions with a long first row.

use crate::beta::Partition;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Number of semistandard tableaux of shape λ and content μ (μ any composition).
pub fn kostka_composition(lambda: &[u32], mu: &[u32]) -> u128 {
    let mut memo = HashMap::new();
    kostka_rec(lambda, mu, &mut memo)
}

/// Removes the largest letter as a horizontal strip of size μ_last.
fn kostka_rec(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u128>) -> u128 {
    let Some((&last, rest)) = mu.split_last() else {
        return u128::from(lambda.iter().all(|&p| p == 0));
    };
    let key = (lambda.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0u128;
    let mut nu = lambda.to_vec();
    strips(lambda, 0, last, &mut nu, &mut |nu| {
        let trimmed: Vec<u32> = nu.iter().copied().take_while(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerates ν ⊆ λ with λ/ν a horizontal strip of the given size.
fn strips(lambda: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == lambda.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let floor = lambda.get(i + 1).copied().unwrap_or(0);
    let room = lambda[i] - floor;
    for take in 0..=room.min(left) {
        nu[i] = lambda[i] - take;
        strips(lambda, i + 1, left - take, nu, f);
    }
    nu[i] = lambda[i];
}

/// K_{λμ}.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u128> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(kostka_composition(lambda.parts(), mu.parts()))
}

/// Attaches a first row so that the partition has size n.
pub fn with_head(tail: &Partition, n: u64) -> Result<Partition> {
    let head = n
        .checked_sub(tail.size())
        .filter(|&h| h >= tail.first() as u64)
        .ok_or_else(|| Error::Precondition(format!("{tail} does not fit below a first row in size {n}")))?;
    let mut parts = vec![head as u32];
    parts.extend_from_slice(tail.parts());
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
}

/// K_{(N−|λ'|, λ'), (N−|μ'|, μ')} for tails λ', μ', requiring μ₁ ≥ N/2; the value is
/// recomputed at N + 1 and must not change.
pub fn kostka_stable(lambda_tail: &Partition, mu_tail: &Partition, n: u64) -> Result<u128> {
    let lambda = with_head(lambda_tail, n)?;
    let mu = with_head(mu_tail, n)?;
    if 2 * (mu.first() as u64) < n {
        return Err(Error::Precondition(format!("first row of {mu} is shorter than N/2")));
    }
    let here = kostka(&lambda, &mu)?;
    let next = kostka(&with_head(lambda_tail, n + 1)?, &with_head(mu_tail, n + 1)?)?;
    if here != next {
        return Err(Error::Precondition(format!("K changes from {here} to {next} between N = {n} and N + 1")));
    }
    Ok(here)
}

/// Partitions of n whose first part is at least `min_first`, in increasing lexicographic order.
pub fn partitions_with_first_at_least(n: u32, min_first: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for first in min_first..=n {
        for tail in Partition::all(n - first) {
            if tail.first() <= first {
                let mut parts = vec![first];
                parts.extend_from_slice(tail.parts());
                out.push(Partition::from_parts(parts));
            }
        }
    }
    out.sort_by(|a, b| a.parts().cmp(b.parts()));
    out
}

/// Coefficients c_μ with χ_λ = Σ_μ c_μ φ_μ, where φ_μ = Σ_ν K_{νμ} χ_ν is the
/// permutation character on μ-flags. Nonzero coefficients need μ ⊵ λ, so only the
/// block μ₁ ≥ λ₁ is involved. `level_cap` bounds N − λ₁.
pub fn inverse_kostka_row(lambda: &Partition, level_cap: u32) -> Result<Vec<(Partition, i128)>> {
    let n = lambda.size() as u32;
    if n - lambda.first() > level_cap {
        return Err(Error::Precondition(format!("{lambda} has level above {level_cap}")));
    }
    // increasing lexicographic order refines dominance
    let block: Vec<Partition> = partitions_with_first_at_least(n, lambda.first())
        .into_iter()
        .filter(|mu| mu.dominates(lambda))
        .collect();
    let mut coeffs: Vec<(Partition, i128)> = Vec::with_capacity(block.len());
    for nu in &block {
        let c = if nu == lambda {
            1
        } else {
            let mut s = 0i128;
            for (mu, cm) in &coeffs {
                if *cm != 0 && nu.dominates(mu) {
                    s += cm * kostka(nu, mu)? as i128;
                }
            }
            -s
        };
        coeffs.push((nu.clone(), c));
    }
    Ok(coeffs.into_iter().filter(|(_, c)| *c != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::from_parts(v.to_vec())
    }

    #[test]
    fn small_values() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])).unwrap(), 0);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[3, 2])).unwrap(), 1);
        // K_{λ,1^n} counts standard tableaux
        assert_eq!(kostka(&p(&[3, 2]), &p(&[1; 5])).unwrap(), 5);
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn stability() {
        let t = |v: &[u32]| Partition::from_parts(v.to_vec());
        assert_eq!(kostka_stable(&t(&[]), &t(&[]), 5).unwrap(), 1);
        let a: Vec<u128> = (6..=8).map(|n| kostka_stable(&t(&[1]), &t(&[1]), n).unwrap()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(kostka_stable(&t(&[2]), &t(&[1, 1]), 8).unwrap(), kostka_stable(&t(&[2]), &t(&[1, 1]), 9).unwrap());
    }

    #[test]
    fn inverse_rows() {
        assert_eq!(inverse_kostka_row(&p(&[6]), 4).unwrap(), vec![(p(&[6]), 1)]);
        let row = inverse_kostka_row(&p(&[5, 1]), 4).unwrap();
        assert_eq!(row, vec![(p(&[5, 1]), 1), (p(&[6]), -1)]);
    }
}
