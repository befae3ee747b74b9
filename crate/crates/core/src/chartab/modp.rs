//! Matrices and polynomials over 𝔽_p, p < 2^63. Polynomials are coefficient
//! vectors, lowest degree first, without trailing zeros.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::scalars::pow_mod;

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod p");
    pow_mod(a, p - 2, p)
}

fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Characteristic polynomial det(x − A), via reduction to Hessenberg form.
pub fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if i != c + 1 {
            h.swap(i, c + 1);
            for row in h.iter_mut() {
                row.swap(i, c + 1);
            }
        }
        let piv = inv(h[c + 1][c], p);
        for j in c + 2..n {
            let u = mul(h[j][c], piv, p);
            if u == 0 {
                continue;
            }
            for col in 0..n {
                let t = mul(u, h[c + 1][col], p);
                h[j][col] = sub(h[j][col], t, p);
            }
            for row in h.iter_mut() {
                let t = mul(u, row[j], p);
                row[c + 1] = (row[c + 1] + t) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        // (x − h[m−1][m−1])·p_{m−1}
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], mul(h[m - 1][m - 1], c, p), p);
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul(t, h[i][i - 1], p);
            let coef = mul(h[i - 1][m - 1], t, p);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = sub(next[d], mul(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    trim(polys.pop().unwrap())
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    let lead_inv = inv(f[df], p);
    while r.len() > df && !r.is_empty() {
        let top = r.len() - 1;
        let q = mul(r[top], lead_inv, p);
        if q != 0 {
            for (i, &c) in f.iter().enumerate() {
                let idx = top - df + i;
                r[idx] = sub(r[idx], mul(q, c, p), p);
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul(x, y, p)) % p;
        }
    }
    rem(&out, f, p)
}

fn pow_poly(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn monic(a: Vec<u64>, p: u64) -> Vec<u64> {
    match a.last() {
        None => a,
        Some(&l) => {
            let li = inv(l, p);
            a.into_iter().map(|c| mul(c, li, p)).collect()
        }
    }
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(x, p)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p)).collect())
}

fn quotient(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    let lead_inv = inv(f[df], p);
    let mut q = vec![0u64; r.len().saturating_sub(df)];
    while r.len() > df {
        let top = r.len() - 1;
        let c = mul(r[top], lead_inv, p);
        q[top - df] = c;
        for (i, &fc) in f.iter().enumerate() {
            let idx = top - df + i;
            r[idx] = sub(r[idx], mul(c, fc, p), p);
        }
        r.pop();
    }
    trim(q)
}

/// The roots of `f` in 𝔽_p that are simple roots lying in 𝔽_p, sorted.
/// Equals the full root set exactly when `f` splits with distinct roots.
pub fn distinct_roots(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let f = monic(trim(f.to_vec()), p);
    if f.len() <= 1 {
        return Vec::new();
    }
    let xp = pow_poly(&[0, 1], p, &f, p);
    let split = gcd(&f, &poly_sub(&xp, &[0, 1], p), p);
    let mut roots = Vec::new();
    let mut stack = vec![split];
    while let Some(g) = stack.pop() {
        match g.len() {
            0 | 1 => {}
            2 => roots.push(sub(0, g[0], p)),
            _ => loop {
                let a = rng.gen_range(0..p);
                let h = pow_poly(&[a, 1], (p - 1) / 2, &g, p);
                let d = gcd(&g, &poly_sub(&h, &[1], p), p);
                if d.len() > 1 && d.len() < g.len() {
                    let other = quotient(&g, &d, p);
                    stack.push(d);
                    stack.push(monic(other, p));
                    break;
                }
            },
        }
    }
    roots.sort_unstable();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn roots_of_split_polynomial() {
        let p = 1_000_000_007u64;
        // (x − 3)(x − 5)(x − 11)
        let mut f = vec![1u64];
        for r in [3u64, 5, 11] {
            let mut next = vec![0u64; f.len() + 1];
            for (d, &c) in f.iter().enumerate() {
                next[d + 1] = (next[d + 1] + c) % p;
                next[d] = sub(next[d], mul(r, c, p), p);
            }
            f = next;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(distinct_roots(&f, p, &mut rng), vec![3, 5, 11]);
    }

    #[test]
    fn char_poly_of_small_matrix() {
        let p = 101;
        // [[2,1,0],[1,3,1],[0,1,4]]: x³ − 9x² + 24x − 18
        let a = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        assert_eq!(char_poly(&a, p), vec![p - 18, 24, p - 9, 1]);
        let b = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(char_poly(&b, p), vec![p - 1, 0, 0, 1]);
    }
}
