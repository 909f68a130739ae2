//! Finite sets of non-negative integers stored as strictly increasing vectors.
//!
//! Everything symbol-shaped in this crate is built from these; the operations
//! are linear merges so iteration order is always deterministic.

use std::cmp::Ordering;

/// Sorts and deduplicates. Returns `None` if `v` contained a repeat.
pub fn normalize(mut v: Vec<u32>) -> Option<Vec<u32>> {
    v.sort_unstable();
    let len = v.len();
    v.dedup();
    (v.len() == len).then_some(v)
}

pub fn is_strictly_increasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

pub fn contains(a: &[u32], x: u32) -> bool {
    a.binary_search(&x).is_ok()
}

fn merge(a: &[u32], b: &[u32], keep_a: bool, keep_b: bool, keep_both: bool) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                if keep_a {
                    out.push(a[i]);
                }
                i += 1;
            }
            Ordering::Greater => {
                if keep_b {
                    out.push(b[j]);
                }
                j += 1;
            }
            Ordering::Equal => {
                if keep_both {
                    out.push(a[i]);
                }
                i += 1;
                j += 1;
            }
        }
    }
    if keep_a {
        out.extend_from_slice(&a[i..]);
    }
    if keep_b {
        out.extend_from_slice(&b[j..]);
    }
    out
}

pub fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    merge(a, b, true, true, true)
}

pub fn intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    merge(a, b, false, false, true)
}

pub fn sym_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    merge(a, b, true, true, false)
}

pub fn difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    merge(a, b, true, false, false)
}

pub fn intersection_len(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// The F₂-bilinear pairing ⟨A, B⟩ = |A ∩ B| mod 2.
pub fn pairing(a: &[u32], b: &[u32]) -> u8 {
    (intersection_len(a, b) % 2) as u8
}

/// ⟨{0..=x}, A⟩: parity of the number of elements of `a` that are ≤ x.
/// Negative `x` gives the empty initial segment.
pub fn initial_pairing(x: i64, a: &[u32]) -> u8 {
    if x < 0 {
        return 0;
    }
    let x = x.min(u32::MAX as i64) as u32;
    (a.partition_point(|&v| v <= x) % 2) as u8
}

/// Toggles membership of `x`.
pub fn toggle(a: &mut Vec<u32>, x: u32) {
    match a.binary_search(&x) {
        Ok(i) => {
            a.remove(i);
        }
        Err(i) => a.insert(i, x),
    }
}

pub fn sum(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

/// Renders as `a,b,c`.
pub fn render(a: &[u32]) -> String {
    a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// All subsets of `{0..=max}`, each sorted, in binary-counter order.
pub fn subsets_upto(max: u32) -> impl Iterator<Item = Vec<u32>> {
    let n = max + 1;
    (0u64..(1u64 << n)).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges() {
        let a = [0, 2, 3, 7];
        let b = [2, 5, 7, 9];
        assert_eq!(union(&a, &b), vec![0, 2, 3, 5, 7, 9]);
        assert_eq!(intersection(&a, &b), vec![2, 7]);
        assert_eq!(sym_diff(&a, &b), vec![0, 3, 5, 9]);
        assert_eq!(difference(&a, &b), vec![0, 3]);
        assert_eq!(pairing(&a, &b), 0);
        assert_eq!(pairing(&a, &[3]), 1);
    }

    #[test]
    fn initial_segments() {
        assert_eq!(initial_pairing(-1, &[0, 1]), 0);
        assert_eq!(initial_pairing(0, &[0, 1]), 1);
        assert_eq!(initial_pairing(1, &[0, 1]), 0);
        assert_eq!(initial_pairing(5, &[3]), 1);
    }

    #[test]
    fn toggling() {
        let mut a = vec![1, 4];
        toggle(&mut a, 2);
        toggle(&mut a, 4);
        assert_eq!(a, vec![1, 2]);
        assert_eq!(normalize(vec![3, 1, 1]), None);
        assert_eq!(normalize(vec![3, 1]), Some(vec![1, 3]));
    }
}
