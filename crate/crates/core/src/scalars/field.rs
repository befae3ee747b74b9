//! Registry of cyclotomic fields ℚ(ζ_m), keyed by conductor.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

/// Largest conductor any element may live in.
pub const MAX_CONDUCTOR: u32 = 10_000;

/// Static data for one field: the cyclotomic modulus and trig tables.
pub(crate) struct CycloField {
    pub m: u32,
    pub degree: usize,
    /// Coefficients of Φ_m, lowest first; monic, length `degree + 1`.
    pub modulus: Vec<i64>,
    /// cos(2πj/m) and sin(2πj/m) for j < m.
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl std::fmt::Debug for CycloField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q(z{})", self.m)
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycloField>>> = OnceLock::new();

/// Field of conductor `m`. The conductor must already be normalized (not ≡ 2 mod 4).
pub(crate) fn field(m: u32) -> &'static CycloField {
    debug_assert!(m >= 1 && m % 4 != 2 && m <= MAX_CONDUCTOR);
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(f) = guard.get(&m) {
        return f;
    }
    let modulus = cyclotomic_polynomial(m);
    let degree = modulus.len() - 1;
    let (cos, sin) = (0..m)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / m as f64;
            (t.cos(), t.sin())
        })
        .unzip();
    let f: &'static CycloField = Box::leak(Box::new(CycloField { m, degree, modulus, cos, sin }));
    guard.insert(m, f);
    f
}

/// Φ_m(x) = Π_{d | m} (x^{m/d} − 1)^{μ(d)}.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    let mut num: Vec<i128> = vec![1];
    let mut den: Vec<i128> = vec![1];
    for d in divisors(m) {
        let k = (m / d) as usize;
        match mobius(d) {
            1 => num = mul_binomial(&num, k),
            -1 => den = mul_binomial(&den, k),
            _ => {}
        }
    }
    let quot = exact_div(&num, &den);
    quot.into_iter().map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow")).collect()
}

// p(x) * (x^k - 1)
fn mul_binomial(p: &[i128], k: usize) -> Vec<i128> {
    let mut out = vec![0i128; p.len() + k];
    for (i, &c) in p.iter().enumerate() {
        out[i + k] += c;
        out[i] -= c;
    }
    out
}

// Exact division by a monic polynomial.
fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i128; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

pub fn divisors(m: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn mobius(mut m: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn euler_phi(m: u32) -> u32 {
    prime_factors(m).iter().fold(m, |acc, &p| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first polynomial with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn degree_is_totient() {
        for m in 1..200 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m) as usize, "m = {m}");
        }
    }
}
