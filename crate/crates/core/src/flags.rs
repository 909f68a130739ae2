//! Flags in 𝔽_q^N: exact counts F_a(N), counts of flags stable under an element,
//! and the evaluation of unipotent characters of GL_N(q) with a long first row
//! through the inverse Kostka matrix.

use crate::beta::{BetaSet, Partition};
use crate::degrees::unip_degree_a;
use crate::error::{Error, Result};
use crate::young::inverse_kostka_row;
use hookline_groups::field::Field;
use hookline_groups::matrix::Matrix;
use hookline_groups::poly;
use hookline_groups::support::support;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Dimensions a₁ < ⋯ < a_k of an a-flag in 𝔽_q^N.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlagType {
    dims: Vec<u32>,
    ambient: u32,
}

impl FlagType {
    pub fn new(dims: Vec<u32>, ambient: u32) -> Result<FlagType> {
        if dims.windows(2).any(|w| w[0] >= w[1]) || dims.first() == Some(&0) {
            return Err(Error::Precondition(format!("flag dimensions {dims:?} must be positive and strictly increasing")));
        }
        if dims.last().is_some_and(|&top| top > ambient) {
            return Err(Error::Precondition(format!("flag dimensions {dims:?} exceed N = {ambient}")));
        }
        Ok(FlagType { dims, ambient })
    }

    /// The flag type of the parabolic with blocks μ₂, μ₃, … below a first block μ₁
    /// (tail parts taken smallest first).
    pub fn from_partition(mu: &Partition) -> FlagType {
        let mut tail: Vec<u32> = mu.tail().parts().to_vec();
        tail.reverse();
        let dims = tail
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect();
        FlagType { dims, ambient: mu.size() as u32 }
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn with_ambient(&self, ambient: u32) -> Result<FlagType> {
        FlagType::new(self.dims.clone(), ambient)
    }

    pub fn top(&self) -> u32 {
        self.dims.last().copied().unwrap_or(0)
    }

    /// Successive block sizes a₁, a₂ − a₁, …, N − a_k.
    pub fn blocks(&self) -> Vec<u32> {
        let mut prev = 0;
        let mut out: Vec<u32> = self
            .dims
            .iter()
            .map(|&d| {
                let b = d - prev;
                prev = d;
                b
            })
            .collect();
        out.push(self.ambient - prev);
        out
    }

    /// d_a(N) = Σ_{i<j} b_i b_j over the block sizes: the dimension of the flag variety.
    pub fn dimension(&self) -> u64 {
        let b = self.blocks();
        let mut s = 0u64;
        for j in 0..b.len() {
            for i in 0..j {
                s += b[i] as u64 * b[j] as u64;
            }
        }
        s
    }
}

fn qpow(q: u64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(q), e as usize)
}

/// Gaussian binomial [n choose k]_q.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as u64 {
        num *= qpow(q, n as u64 - i) - 1;
        den *= qpow(q, i + 1) - 1;
    }
    let (v, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    v
}

/// Number of chains of subspaces of 𝔽_q^n with the given (weakly increasing) dimensions.
fn chains(n: u32, dims: &[u32], q: u64) -> BigInt {
    let mut total = BigInt::one();
    let mut upper = n;
    for &d in dims.iter().rev() {
        total *= gaussian_binomial(upper, d, q);
        upper = d;
    }
    total
}

/// F_a(N), the number of a-flags in 𝔽_q^N.
pub fn flag_count(a: &FlagType, q: u64) -> BigInt {
    chains(a.ambient, &a.dims, q)
}

/// Exact checks, for a nonempty type, of q^{d}/4 < F_a(N) < 4^k q^{d} and of
/// F_a(N+1)(q^{N+1−a_k} − 1) = F_a(N)(q^{N+1} − 1).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlagBounds {
    pub lower: bool,
    pub upper: bool,
    pub ratio: bool,
}

pub fn flag_bounds(a: &FlagType, q: u64) -> Result<FlagBounds> {
    let f = flag_count(a, q);
    let main = qpow(q, a.dimension());
    let k = a.dims.len() as u64;
    let next = flag_count(&a.with_ambient(a.ambient + 1)?, q);
    let n1 = a.ambient as u64 + 1;
    Ok(FlagBounds {
        lower: &main < &(&f * 4),
        upper: f < main * qpow(4, k),
        ratio: next * (qpow(q, n1 - a.top() as u64) - 1) == f * (qpow(q, n1) - 1),
    })
}

/// The element whose stable flags are counted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum EigStructure {
    /// Diagonalizable over 𝔽_q: distinct eigenvalues (field element indices) with multiplicities.
    Split(Vec<(u8, u32)>),
    /// A small matrix acting on the first coordinates, identity on the remaining ones.
    Block { rows: Vec<Vec<u8>>, identity: u32 },
}

impl EigStructure {
    pub fn identity(n: u32) -> EigStructure {
        EigStructure::Split(vec![(1, n)])
    }

    /// A transvection: one 2×2 Jordan block.
    pub fn transvection(n: u32) -> Result<EigStructure> {
        EigStructure::jordan(&[2], n)
    }

    /// Unipotent Jordan blocks of the given sizes, then the identity up to dimension n.
    pub fn jordan(sizes: &[u32], n: u32) -> Result<EigStructure> {
        let s: u32 = sizes.iter().sum();
        if s > n {
            return Err(Error::Precondition(format!("Jordan blocks of total size {s} exceed N = {n}")));
        }
        let mut rows = vec![vec![0u8; s as usize]; s as usize];
        let mut at = 0usize;
        for &b in sizes {
            for i in 0..b as usize {
                rows[at + i][at + i] = 1;
                if i + 1 < b as usize {
                    rows[at + i][at + i + 1] = 1;
                }
            }
            at += b as usize;
        }
        Ok(EigStructure::Block { rows, identity: n - s })
    }

    /// The companion matrix of the first monic irreducible of the given degree, then the identity.
    pub fn irreducible_block(k: &Field, degree: u32, n: u32) -> Result<EigStructure> {
        if degree > n {
            return Err(Error::Precondition(format!("block of size {degree} exceeds N = {n}")));
        }
        let f = poly::monic_polys(k, degree as usize)
            .into_iter()
            .find(|f| f[0] != 0 && poly::is_irreducible(k, f))
            .ok_or_else(|| Error::Precondition(format!("no irreducible of degree {degree}")))?;
        Ok(EigStructure::Block { rows: Matrix::companion(k, &f).rows(), identity: n - degree })
    }

    /// Parses `1:39,c:1` (eigenvalue:multiplicity, with `c` the primitive element)
    /// or `J2+J2` / `J3` / `C2` (Jordan or irreducible companion blocks) together with N.
    pub fn parse(k: &Field, s: &str, n: u32) -> Result<EigStructure> {
        let s = s.trim();
        if s.contains(':') {
            let mut parts = Vec::new();
            for item in s.split(',') {
                let (e, m) = item
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected eigenvalue:multiplicity, got {item:?}")))?;
                let e = match e.trim() {
                    "c" if k.q() == 2 => {
                        return Err(Error::Precondition(
                            "over F_2 the only nonzero scalar is 1; describe non-identity elements by blocks (J2, J2+J2, J3, C2)"
                                .into(),
                        ))
                    }
                    "c" => k.primitive_element(),
                    t => {
                        let v: u32 = t.parse().map_err(|_| Error::Parse(format!("bad eigenvalue {t:?}")))?;
                        if v == 0 || v >= k.q() {
                            return Err(Error::Parse(format!("eigenvalue {v} is not a nonzero element of F_{}", k.q())));
                        }
                        v as u8
                    }
                };
                let m: u32 = m.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity {m:?}")))?;
                parts.push((e, m));
            }
            let g = EigStructure::Split(parts);
            if g.ambient() != n {
                return Err(Error::Precondition(format!("multiplicities sum to {}, not N = {n}", g.ambient())));
            }
            return g.validate();
        }
        if let Some(d) = s.strip_prefix('C') {
            let d: u32 = d.parse().map_err(|_| Error::Parse(format!("bad block {s:?}")))?;
            return EigStructure::irreducible_block(k, d, n);
        }
        let sizes = s
            .split('+')
            .map(|t| {
                t.trim()
                    .strip_prefix('J')
                    .and_then(|v| v.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad block {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        EigStructure::jordan(&sizes, n)
    }

    fn validate(self) -> Result<EigStructure> {
        if let EigStructure::Split(parts) = &self {
            let mut seen: Vec<u8> = parts.iter().map(|p| p.0).collect();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != parts.len() || parts.iter().any(|p| p.0 == 0) {
                return Err(Error::Precondition("eigenvalues must be distinct and nonzero".into()));
            }
        }
        Ok(self)
    }

    pub fn ambient(&self) -> u32 {
        match self {
            EigStructure::Split(parts) => parts.iter().map(|p| p.1).sum(),
            EigStructure::Block { rows, identity } => rows.len() as u32 + identity,
        }
    }

    /// The full N × N matrix.
    pub fn matrix(&self) -> Matrix {
        let n = self.ambient() as usize;
        let mut m = Matrix::identity(n);
        match self {
            EigStructure::Split(parts) => {
                let mut at = 0;
                for &(e, mult) in parts {
                    for _ in 0..mult {
                        m.set(at, at, e);
                        at += 1;
                    }
                }
            }
            EigStructure::Block { rows, .. } => {
                for (i, row) in rows.iter().enumerate() {
                    for (j, &v) in row.iter().enumerate() {
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    /// supp(g).
    pub fn support(&self, k: &Field) -> u64 {
        match self {
            EigStructure::Split(parts) => {
                self.ambient() as u64 - parts.iter().map(|p| p.1 as u64).max().unwrap_or(0)
            }
            EigStructure::Block { .. } => support(k, &self.matrix()),
        }
    }
}

/// How g-stable flags are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StableRoute {
    /// Closed-form sums: eigenspace decomposition for split elements, and the
    /// block-plus-identity decomposition otherwise.
    Formula,
    /// Enumeration of all subspaces (q^N ≤ 2¹⁴).
    Brute,
}

/// Number of g-stable a-flags.
pub fn stable_flag_count(k: &Field, g: &EigStructure, a: &FlagType, route: StableRoute) -> Result<BigInt> {
    if g.ambient() != a.ambient {
        return Err(Error::SizeMismatch(g.ambient() as u64, a.ambient as u64));
    }
    let q = k.q() as u64;
    match route {
        StableRoute::Formula => match g {
            EigStructure::Split(parts) => {
                let mults: Vec<u32> = parts.iter().map(|p| p.1).collect();
                Ok(split_count(&mults, &a.dims, q))
            }
            EigStructure::Block { rows, identity } => block_count(k, rows, *identity, &a.dims),
        },
        StableRoute::Brute => {
            if (q as f64).powi(a.ambient as i32) > (1u64 << 14) as f64 {
                return Err(Error::Precondition(format!("q^N = {q}^{} is too large to enumerate", a.ambient)));
            }
            Ok(brute_count(k, &g.matrix(), &a.dims))
        }
    }
}

/// Stable flags of a split element decompose across eigenspaces: each W_i is the sum
/// of its intersections with the eigenspaces.
fn split_count(mults: &[u32], dims: &[u32], q: u64) -> BigInt {
    fn rec(mults: &[u32], remaining: &[u32], q: u64, cur: &mut Vec<u32>) -> BigInt {
        let Some((&m, rest)) = mults.split_first() else {
            return if remaining.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
        };
        if rest.is_empty() {
            // the last eigenspace takes everything that is left
            if remaining.last().copied().unwrap_or(0) > m {
                return BigInt::zero();
            }
            return chains(m, remaining, q);
        }
        choose(m, rest, remaining, q, 0, cur)
    }
    // pick d_i ≤ r_i for this eigenspace, with d and r − d both weakly increasing
    fn choose(m: u32, rest: &[u32], remaining: &[u32], q: u64, i: usize, cur: &mut Vec<u32>) -> BigInt {
        if i == remaining.len() {
            let left: Vec<u32> = remaining.iter().zip(cur.iter()).map(|(r, d)| r - d).collect();
            let here = chains(m, cur, q);
            if here.is_zero() {
                return here;
            }
            return here * rec(rest, &left, q, &mut Vec::new());
        }
        let lo_d = if i == 0 { 0 } else { cur[i - 1] };
        let prev_left = if i == 0 { 0 } else { remaining[i - 1] - cur[i - 1] };
        let mut total = BigInt::zero();
        for d in lo_d..=remaining[i].min(m) {
            if remaining[i] - d < prev_left {
                continue;
            }
            cur.push(d);
            total += choose(m, rest, remaining, q, i + 1, cur);
            cur.pop();
        }
        total
    }
    rec(mults, dims, q, &mut Vec::new())
}

/// A subspace of 𝔽_q^s in reduced echelon form, with its image under h − 1.
struct BlockSubspace {
    rows: Vec<Vec<u8>>,
    dim: u32,
    /// dim (h − 1)B.
    image_dim: u32,
}

/// g = h ⊕ 1_M. A g-stable W has projection B onto the h-part, which is h-stable, and
/// W ∩ 𝔽_q^M = C; W is the graph of a map φ: B → 𝔽_q^M/C with (h − 1)B ⊆ ker φ,
/// and as a module W ≅ B ⊕ 1_{dim C}. Summing over (B, C) gives the recursion
/// S(B, c; a₁ < ⋯ < a_k) = Σ_{B' ⊆ B, c' = a_k − dim B'} [c choose c']_q q^{(dim B' − dim (h−1)B')(c − c')} S(B', c'; a₁ < ⋯ < a_{k−1}).
fn block_count(k: &Field, rows: &[Vec<u8>], identity: u32, dims: &[u32]) -> Result<BigInt> {
    let s = rows.len();
    let h = Matrix::from_rows(rows)?;
    let q = k.q() as u64;
    let n_op = h.add(k, &Matrix::scalar(s, k.neg(1)));
    let mut stable: Vec<BlockSubspace> = Vec::new();
    for d in 0..=s {
        for sub in all_subspaces(k, s, d) {
            if is_stable(k, &h, &sub) {
                let image: Vec<Vec<u8>> = sub.iter().map(|v| apply(k, &n_op, v)).collect();
                let image_dim = rank_of(k, image, s) as u32;
                stable.push(BlockSubspace { rows: sub, dim: d as u32, image_dim });
            }
        }
    }
    // containment among stable subspaces
    let contains = |outer: &BlockSubspace, inner: &BlockSubspace| {
        inner.dim <= outer.dim && {
            let mut all = outer.rows.clone();
            all.extend(inner.rows.iter().cloned());
            rank_of(k, all, s) as u32 == outer.dim
        }
    };
    let top = stable.iter().position(|b| b.dim as usize == s).expect("whole space is stable");
    let mut memo: HashMap<(usize, u32, usize), BigInt> = HashMap::new();
    fn rec(
        b: usize,
        c: u32,
        len: usize,
        dims: &[u32],
        stable: &[BlockSubspace],
        q: u64,
        contains: &dyn Fn(&BlockSubspace, &BlockSubspace) -> bool,
        memo: &mut HashMap<(usize, u32, usize), BigInt>,
    ) -> BigInt {
        if len == 0 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&(b, c, len)) {
            return v.clone();
        }
        let target = dims[len - 1];
        let mut total = BigInt::zero();
        for (i, sub) in stable.iter().enumerate() {
            if sub.dim > target || target - sub.dim > c || !contains(&stable[b], sub) {
                continue;
            }
            let c2 = target - sub.dim;
            let weight = gaussian_binomial(c, c2, q) * qpow(q, ((sub.dim - sub.image_dim) * (c - c2)) as u64);
            total += weight * rec(i, c2, len - 1, dims, stable, q, contains, memo);
        }
        memo.insert((b, c, len), total.clone());
        total
    }
    Ok(rec(top, identity, dims.len(), dims, &stable, q, &contains, &mut memo))
}

fn apply(k: &Field, m: &Matrix, v: &[u8]) -> Vec<u8> {
    (0..m.n())
        .map(|i| v.iter().enumerate().fold(0u8, |acc, (j, &x)| k.add(acc, k.mul(m.get(i, j), x))))
        .collect()
}

fn rank_of(k: &Field, mut rows: Vec<Vec<u8>>, ncols: usize) -> usize {
    Matrix::echelon(k, &mut rows, ncols).len()
}

/// Reduces v against reduced echelon rows; true iff v lies in their span.
fn in_span(k: &Field, basis: &[Vec<u8>], v: &mut [u8]) -> bool {
    for row in basis {
        let pivot = row.iter().position(|&x| x != 0).expect("nonzero basis row");
        let f = v[pivot];
        if f != 0 {
            for (x, &y) in v.iter_mut().zip(row) {
                *x = k.sub(*x, k.mul(f, y));
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

fn is_stable(k: &Field, g: &Matrix, basis: &[Vec<u8>]) -> bool {
    basis.iter().all(|v| in_span(k, basis, &mut apply(k, g, v)))
}

/// Every d-dimensional subspace of 𝔽_q^n as reduced echelon rows.
pub fn all_subspaces(k: &Field, n: usize, d: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    fn pick(k: &Field, n: usize, d: usize, start: usize, pivots: &mut Vec<usize>, out: &mut Vec<Vec<Vec<u8>>>) {
        if pivots.len() == d {
            fill(k, n, pivots, out);
            return;
        }
        for c in start..n {
            pivots.push(c);
            pick(k, n, d, c + 1, pivots, out);
            pivots.pop();
        }
    }
    fn fill(k: &Field, n: usize, pivots: &[usize], out: &mut Vec<Vec<Vec<u8>>>) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let q = k.q() as u64;
        let total = q.pow(free.len() as u32);
        for mut idx in 0..total {
            let mut rows = vec![vec![0u8; n]; pivots.len()];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (idx % q) as u8;
                idx /= q;
            }
            out.push(rows);
        }
    }
    pick(k, n, d, 0, &mut pivots, &mut out);
    out
}

/// Counts stable flags by listing stable subspaces of the top dimension and recursing
/// into their subspaces.
fn brute_count(k: &Field, g: &Matrix, dims: &[u32]) -> BigInt {
    let n = g.n();
    let Some((&top, lower)) = dims.split_last() else {
        return BigInt::one();
    };
    let mut total = BigInt::zero();
    for w in all_subspaces(k, n, top as usize) {
        if is_stable(k, g, &w) {
            total += chains_inside(k, g, &w, lower);
        }
    }
    total
}

fn chains_inside(k: &Field, g: &Matrix, w: &[Vec<u8>], dims: &[u32]) -> BigInt {
    let Some((&top, lower)) = dims.split_last() else {
        return BigInt::one();
    };
    let n = g.n();
    let mut total = BigInt::zero();
    for coords in all_subspaces(k, w.len(), top as usize) {
        let mut sub: Vec<Vec<u8>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u8; n];
                for (x, row) in c.iter().zip(w) {
                    for (vi, &ri) in v.iter_mut().zip(row) {
                        *vi = k.add(*vi, k.mul(*x, ri));
                    }
                }
                v
            })
            .collect();
        Matrix::echelon(k, &mut sub, n);
        if is_stable(k, g, &sub) {
            total += chains_inside(k, g, &sub, lower);
        }
    }
    total
}

/// ε in #stable = q^{−a_k m}(1 + ε)F_a(N), m = supp(g).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StableFlagReport {
    pub n: u32,
    pub q: u64,
    pub dims: Vec<u32>,
    pub support: u64,
    pub stable: String,
    pub total: String,
    pub epsilon: String,
    pub log2_abs_epsilon: f64,
}

pub fn stable_flag_epsilon(k: &Field, g: &EigStructure, a: &FlagType) -> Result<StableFlagReport> {
    let q = k.q() as u64;
    let m = g.support(k);
    let stable = stable_flag_count(k, g, a, StableRoute::Formula)?;
    let total = flag_count(a, q);
    let eps = BigRational::new(&stable * qpow(q, a.top() as u64 * m), total.clone()) - BigRational::one();
    Ok(StableFlagReport {
        n: a.ambient,
        q,
        dims: a.dims.clone(),
        support: m,
        stable: stable.to_string(),
        total: total.to_string(),
        log2_abs_epsilon: log2_abs(&eps),
        epsilon: eps.to_string(),
    })
}

/// log₂ |r| (−∞ for zero), robust to huge numerators and denominators.
pub fn log2_abs(r: &BigRational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    let lg = |v: &BigInt| {
        let v = v.abs();
        let bits = v.bits();
        if bits <= 60 {
            v.to_f64().unwrap().log2()
        } else {
            (v >> (bits - 60)).to_f64().unwrap().log2() + (bits - 60) as f64
        }
    };
    lg(r.numer()) - lg(r.denom())
}

/// χ_λ(g) for λ₁ = N − n through χ_λ = Σ_μ c_μ φ_μ with φ_μ(g) the number of
/// g-stable μ-flags, plus χ_λ(1) by the same route and the ratio audit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LevelValue {
    pub lambda: String,
    pub level: u32,
    pub support: u64,
    pub value: String,
    pub degree: String,
    /// χ_λ(1) from flags equals the β-set degree formula.
    pub degree_matches: bool,
    /// q^{mn}χ(g)/χ(1) − 1.
    pub ratio_minus_one: String,
    pub log2_abs_ratio_minus_one: f64,
}

pub const LEVEL_CAP: u32 = 4;

pub fn level_char_value(k: &Field, lambda: &Partition, g: &EigStructure) -> Result<LevelValue> {
    let q = k.q() as u64;
    let n_total = lambda.size() as u32;
    if g.ambient() != n_total {
        return Err(Error::SizeMismatch(g.ambient() as u64, n_total as u64));
    }
    let level = n_total - lambda.first();
    let row = inverse_kostka_row(lambda, LEVEL_CAP)?;
    let mut value = BigInt::zero();
    let mut degree = BigInt::zero();
    for (mu, c) in &row {
        let a = FlagType::from_partition(mu);
        value += stable_flag_count(k, g, &a, StableRoute::Formula)? * c;
        degree += flag_count(&a, q) * c;
    }
    let beta = BetaSet::from_partition(lambda);
    let expected = unip_degree_a(&beta, q, false)?.value;
    let m = g.support(k);
    let ratio = BigRational::new(&value * qpow(q, m * level as u64), degree.clone()) - BigRational::one();
    Ok(LevelValue {
        lambda: lambda.to_string(),
        level,
        support: m,
        degree_matches: degree == expected,
        value: value.to_string(),
        degree: degree.to_string(),
        log2_abs_ratio_minus_one: log2_abs(&ratio),
        ratio_minus_one: ratio.to_string(),
    })
}
