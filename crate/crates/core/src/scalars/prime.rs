//! Arithmetic modulo a word-sized prime.

use std::fmt;

/// An element of 𝔽_p, p < 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldScalar {
    value: u64,
    modulus: u64,
}

impl PrimeFieldScalar {
    pub fn new(value: u64, modulus: u64) -> Self {
        PrimeFieldScalar { value: value % modulus, modulus }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        PrimeFieldScalar { value: value.rem_euclid(modulus as i64) as u64, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Symmetric representative in (−p/2, p/2].
    pub fn signed(self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    pub fn add(self, o: Self) -> Self {
        let s = self.value + o.value;
        PrimeFieldScalar { value: if s >= self.modulus { s - self.modulus } else { s }, modulus: self.modulus }
    }

    pub fn sub(self, o: Self) -> Self {
        let v = if self.value >= o.value { self.value - o.value } else { self.value + self.modulus - o.value };
        PrimeFieldScalar { value: v, modulus: self.modulus }
    }

    pub fn mul(self, o: Self) -> Self {
        PrimeFieldScalar { value: mul_mod(self.value, o.value, self.modulus), modulus: self.modulus }
    }

    pub fn neg(self) -> Self {
        PrimeFieldScalar { value: if self.value == 0 { 0 } else { self.modulus - self.value }, modulus: self.modulus }
    }

    pub fn pow(self, e: u64) -> Self {
        PrimeFieldScalar { value: pow_mod(self.value, e, self.modulus), modulus: self.modulus }
    }

    /// Inverse by Fermat; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| self.pow(self.modulus - 2))
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Debug for PrimeFieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest prime p ≥ `floor` with p ≡ 1 (mod e).
pub fn prime_congruent_one(e: u64, floor: u64) -> u64 {
    let mut p = floor.div_ceil(e) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn congruent_prime() {
        let p = prime_congruent_one(120, 1 << 40);
        assert!(is_prime(p) && p % 120 == 1 && p >= 1 << 40);
    }

    #[test]
    fn field_ops() {
        let p = 1_000_000_007;
        let a = PrimeFieldScalar::new(123_456_789, p);
        let b = a.inv().unwrap();
        assert_eq!(a.mul(b).value(), 1);
        assert_eq!(a.sub(a).value(), 0);
        assert_eq!(a.add(a.neg()).value(), 0);
        assert_eq!(PrimeFieldScalar::from_i64(-1, p).signed(), -1);
    }
}
