//! Exact cyclotomic arithmetic.
//!
//! Character values are kept as integer combinations of powers of a fixed
//! primitive e-th root of unity ζ_e ([`RootSum`]). Sums are accumulated densely
//! in ℤ[x]/(x^L − 1) for the conductor L they live in and reduced modulo the
//! cyclotomic polynomial Φ_L to decide equality exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};
use std::fmt;

/// Φ_n with integer coefficients, low→high (memoized).
pub fn cyclotomic_poly(n: u32) -> Vec<i128> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i128>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&n) {
        return v.clone();
    }
    let v = compute_cyclotomic(n);
    cache.lock().expect("cache lock").insert(n, v.clone());
    v
}

fn compute_cyclotomic(n: u32) -> Vec<i128> {
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(f: &[i128], g: &[i128]) -> Vec<i128> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let mut q = vec![0i128; f.len() - dg];
    for k in (0..q.len()).rev() {
        let c = r[k + dg] / g[dg];
        q[k] = c;
        for (t, &gc) in g.iter().enumerate() {
            r[k + t] -= c * gc;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    let (mut m, mut out, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Remainder of a polynomial modulo Φ_l (length φ(l)).
pub fn reduce_mod_cyclotomic(v: &[i128], l: u32) -> Vec<i128> {
    let phi = cyclotomic_poly(l);
    let deg = phi.len() - 1;
    let mut r = v.to_vec();
    if r.len() < deg {
        r.resize(deg, 0);
    }
    for k in (deg..r.len()).rev() {
        let c = r[k];
        if c != 0 {
            for (t, &pc) in phi.iter().enumerate() {
                r[k - deg + t] -= c * pc;
            }
        }
    }
    r.truncate(deg);
    r
}

/// Σ c_s ζ_e^s with integer coefficients (exponents reduced mod e, sorted, no zeros).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSum {
    pub e: u32,
    pub terms: Vec<(u32, i64)>,
}

impl RootSum {
    pub fn from_terms(e: u32, terms: impl IntoIterator<Item = (u32, i64)>) -> RootSum {
        let mut m: BTreeMap<u32, i64> = BTreeMap::new();
        for (s, c) in terms {
            *m.entry(s % e).or_default() += c;
        }
        RootSum { e, terms: m.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    pub fn integer(e: u32, c: i64) -> RootSum {
        RootSum::from_terms(e, [(0, c)])
    }

    pub fn conj(&self) -> RootSum {
        RootSum::from_terms(self.e, self.terms.iter().map(|&(s, c)| ((self.e - s) % self.e, c)))
    }

    pub fn mul(&self, other: &RootSum) -> RootSum {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(s, a) in &self.terms {
            for &(t, b) in &other.terms {
                out.push((s + t, a * b));
            }
        }
        RootSum::from_terms(self.e, out)
    }

    /// Galois action ζ ↦ ζ^t.
    pub fn galois(&self, t: u32) -> RootSum {
        RootSum::from_terms(self.e, self.terms.iter().map(|&(s, c)| ((s as u64 * t as u64 % self.e as u64) as u32, c)))
    }

    /// Smallest L | e such that every exponent is a multiple of e/L.
    pub fn conductor(&self) -> u32 {
        let g = self.terms.iter().fold(self.e, |g, &(s, _)| num_integer::gcd(g, s));
        self.e / g
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for &(s, c) in &self.terms {
            let a = 2.0 * std::f64::consts::PI * s as f64 / self.e as f64;
            re += c as f64 * a.cos();
            im += c as f64 * a.sin();
        }
        (re, im)
    }

    /// Exact coordinates in the power basis of ζ_e modulo Φ_e.
    pub fn reduced(&self) -> Cyclotomic {
        let mut dense = vec![0i128; self.e as usize];
        for &(s, c) in &self.terms {
            dense[s as usize] += c as i128;
        }
        let coords = reduce_mod_cyclotomic(&dense, self.e);
        Cyclotomic {
            e: self.e,
            coords: coords.into_iter().map(|c| BigRational::from_integer(BigInt::from(c))).collect(),
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i128> {
        let l = self.conductor();
        let mut acc = CycloAccumulator::new(self.e, l);
        acc.add_product(&[self], false, 1);
        acc.rational()
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(s, c)| if s == 0 { c.to_string() } else { format!("{c}*z{}^{s}", self.e) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of ℚ(ζ_e) in reduced power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    pub e: u32,
    pub coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c == &BigRational::from_integer(BigInt::from(0)))
    }
    /// Coordinates rendered as "p/q" strings.
    pub fn coordinate_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

/// Dense accumulator in ℤ[x]/(x^L − 1) for values whose exponents (over ζ_e) are
/// multiples of e/L.
#[derive(Clone, Debug)]
pub struct CycloAccumulator {
    e: u32,
    l: u32,
    step: u32,
    data: Vec<i128>,
}

impl CycloAccumulator {
    pub fn new(e: u32, l: u32) -> Self {
        assert!(e % l == 0, "conductor {l} must divide {e}");
        CycloAccumulator { e, l, step: e / l, data: vec![0; l as usize] }
    }

    /// Adds scale · Π factors (with the last factor conjugated if `conj_last`).
    pub fn add_product(&mut self, factors: &[&RootSum], conj_last: bool, scale: i128) {
        let mut terms: Vec<(u64, i128)> = vec![(0, scale)];
        let last = factors.len().saturating_sub(1);
        for (idx, f) in factors.iter().enumerate() {
            let mut next = Vec::with_capacity(terms.len() * f.terms.len());
            for &(s, a) in &terms {
                for &(t, b) in &f.terms {
                    let t = if conj_last && idx == last { (self.e - t) % self.e } else { t };
                    next.push(((s + t as u64) % self.e as u64, a * b as i128));
                }
            }
            terms = next;
        }
        for (s, c) in terms {
            assert!(s % self.step as u64 == 0, "value outside ℚ(ζ_{})", self.l);
            self.data[(s / self.step as u64) as usize] += c;
        }
    }

    /// The accumulated value if it is rational (an integer here), else `None`.
    pub fn rational(&self) -> Option<i128> {
        let r = reduce_mod_cyclotomic(&self.data, self.l);
        r.iter().skip(1).all(|&c| c == 0).then(|| r[0])
    }

    pub fn is_zero(&self) -> bool {
        reduce_mod_cyclotomic(&self.data, self.l).iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12).len() as u32 - 1, euler_phi(12));
        assert_eq!(euler_phi(1260), 288);
    }

    #[test]
    fn root_sums() {
        // 1 + ζ_3 + ζ_3² = 0
        let z = RootSum::from_terms(3, [(0, 1), (1, 1), (2, 1)]);
        assert_eq!(z.as_integer(), Some(0));
        // ζ_7 + ζ_7^2 + ζ_7^4 is not rational
        let g = RootSum::from_terms(7, [(1, 1), (2, 1), (4, 1)]);
        assert_eq!(g.as_integer(), None);
        // |ζ_7 + ζ_7^2 + ζ_7^4|² = 2
        let mut acc = CycloAccumulator::new(7, 7);
        acc.add_product(&[&g, &g], true, 1);
        assert_eq!(acc.rational(), Some(2));
        assert_eq!(RootSum::from_terms(12, [(4, 1)]).conductor(), 3);
        let (re, im) = RootSum::from_terms(4, [(1, 2)]).to_complex();
        assert!(re.abs() < 1e-12 && (im - 2.0).abs() < 1e-12);
        assert!(RootSum::from_terms(6, [(0, 1), (3, 1)]).reduced().is_rational());
    }
}
