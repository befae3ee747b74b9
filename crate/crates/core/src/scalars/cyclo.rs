//! Elements of cyclotomic fields ℚ(ζ_m) in the power basis modulo Φ_m.
//!
//! Coefficients are kept as integer numerators over one common denominator.
//! Everything that fits is computed with `i64` storage and checked `i128`
//! intermediates; on overflow the same operation is redone with `BigInt`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{field, CycloField, MAX_CONDUCTOR};
use super::ScalarError;

pub type Rational = BigRational;

/// An element of ℚ(ζ_m). Equality is numeric equality, across conductors.
#[derive(Clone)]
pub struct Cyclo {
    field: &'static CycloField,
    num: Num,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Num {
    // numerators (trailing zeros trimmed) over a positive denominator, gcd 1
    Small { coeffs: Vec<i64>, den: i64 },
    Big { coeffs: Vec<BigInt>, den: BigInt },
}

impl Num {
    fn zero() -> Num {
        Num::Small { coeffs: Vec::new(), den: 1 }
    }

    fn len(&self) -> usize {
        match self {
            Num::Small { coeffs, .. } => coeffs.len(),
            Num::Big { coeffs, .. } => coeffs.len(),
        }
    }

    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Num::Small { coeffs, den } => {
                (coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den))
            }
            Num::Big { coeffs, den } => (coeffs.clone(), den.clone()),
        }
    }

    fn coeff(&self, j: usize) -> Rational {
        match self {
            Num::Small { coeffs, den } => {
                Rational::new(BigInt::from(coeffs.get(j).copied().unwrap_or(0)), BigInt::from(*den))
            }
            Num::Big { coeffs, den } => {
                Rational::new(coeffs.get(j).cloned().unwrap_or_default(), den.clone())
            }
        }
    }

    fn negate(&self) -> Num {
        match self {
            Num::Small { coeffs, den } => {
                if coeffs.iter().all(|&c| c != i64::MIN) {
                    return Num::Small { coeffs: coeffs.iter().map(|&c| -c).collect(), den: *den };
                }
                let (c, d) = self.to_big();
                norm_big(c.into_iter().map(|x| -x).collect(), d)
            }
            Num::Big { coeffs, den } => Num::Big { coeffs: coeffs.iter().map(|c| -c).collect(), den: den.clone() },
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn norm_i128(mut c: Vec<i128>, den: i128) -> Num {
    while c.last() == Some(&0) {
        c.pop();
    }
    if c.is_empty() {
        return Num::zero();
    }
    let mut g = den.unsigned_abs();
    for x in &c {
        if g == 1 {
            break;
        }
        g = gcd_u128(g, x.unsigned_abs());
    }
    let sign: i128 = if den < 0 { -1 } else { 1 };
    let g = g as i128;
    let den = den / g * sign;
    let fits = |x: i128| x >= i64::MIN as i128 && x <= i64::MAX as i128;
    if fits(den) && c.iter().all(|&x| fits(x / g)) {
        Num::Small { coeffs: c.iter().map(|&x| (x / g * sign) as i64).collect(), den: den as i64 }
    } else {
        let g = BigInt::from(g);
        let s = BigInt::from(sign);
        Num::Big {
            coeffs: c.into_iter().map(|x| BigInt::from(x) / &g * &s).collect(),
            den: BigInt::from(den),
        }
    }
}

fn norm_big(mut c: Vec<BigInt>, mut den: BigInt) -> Num {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.is_empty() {
        return Num::zero();
    }
    let mut g = den.abs();
    for x in &c {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    if den.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for x in c.iter_mut() {
            *x /= &g;
        }
        den /= &g;
    }
    match (den.to_i64(), c.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>()) {
        (Some(d), Some(cs)) => Num::Small { coeffs: cs, den: d },
        _ => Num::Big { coeffs: c, den },
    }
}

// In-place reduction modulo Φ_m of a polynomial given lowest-first.
fn reduce_i128(f: &CycloField, v: &mut Vec<i128>) -> Option<()> {
    let d = f.degree;
    while v.len() > d {
        let c = v.pop().unwrap();
        if c != 0 {
            let base = v.len() - d;
            for j in 0..d {
                let t = c.checked_mul(f.modulus[j] as i128)?;
                v[base + j] = v[base + j].checked_sub(t)?;
            }
        }
    }
    Some(())
}

fn reduce_big(f: &CycloField, v: &mut Vec<BigInt>) {
    let d = f.degree;
    while v.len() > d {
        let c = v.pop().unwrap();
        if !c.is_zero() {
            let base = v.len() - d;
            for j in 0..d {
                if f.modulus[j] != 0 {
                    v[base + j] -= &c * f.modulus[j];
                }
            }
        }
    }
}

fn add_nums(a: &Num, b: &Num, negate: bool) -> Num {
    if let (Num::Small { coeffs: a, den: da }, Num::Small { coeffs: b, den: db }) = (a, b) {
        let add = || -> Option<Num> {
            let (da, db) = (*da as i128, *db as i128);
            let g = gcd_u128(da as u128, db as u128) as i128;
            let fa = db / g;
            let fb = da / g;
            let den = da.checked_mul(fa)?;
            let n = a.len().max(b.len());
            let mut v = vec![0i128; n];
            for (i, slot) in v.iter_mut().enumerate() {
                let x = a.get(i).copied().unwrap_or(0) as i128 * fa;
                let y = b.get(i).copied().unwrap_or(0) as i128 * fb;
                *slot = if negate { x.checked_sub(y)? } else { x.checked_add(y)? };
            }
            Some(norm_i128(v, den))
        };
        if let Some(num) = add() {
            return num;
        }
    }
    let (a, da) = a.to_big();
    let (b, db) = b.to_big();
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let v = (0..n)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero) * &db;
            let y = b.get(i).unwrap_or(&zero) * &da;
            if negate {
                x - y
            } else {
                x + y
            }
        })
        .collect();
    norm_big(v, da * db)
}

fn mul_nums(a: &Num, b: &Num, f: &CycloField) -> Num {
    if a.len() == 0 || b.len() == 0 {
        return Num::zero();
    }
    if let (Num::Small { coeffs: a, den: da }, Num::Small { coeffs: b, den: db }) = (a, b) {
        let mul = || -> Option<Num> {
            let mut v = vec![0i128; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    v[i + j] = v[i + j].checked_add(x as i128 * y as i128)?;
                }
            }
            reduce_i128(f, &mut v)?;
            Some(norm_i128(v, *da as i128 * *db as i128))
        };
        if let Some(num) = mul() {
            return num;
        }
    }
    let (a, da) = a.to_big();
    let (b, db) = b.to_big();
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    reduce_big(f, &mut v);
    norm_big(v, da * db)
}

impl Cyclo {
    fn from_num(field: &'static CycloField, num: Num) -> Cyclo {
        Cyclo { field, num }
    }

    pub fn zero() -> Cyclo {
        Cyclo::from_num(field(1), Num::zero())
    }

    pub fn one() -> Cyclo {
        Cyclo::from_int(1)
    }

    pub fn from_int(n: i64) -> Cyclo {
        Cyclo::from_num(field(1), norm_i128(vec![n as i128], 1))
    }

    /// `p/q`; panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Cyclo {
        assert!(q != 0, "zero denominator");
        Cyclo::from_num(field(1), norm_i128(vec![p as i128], q as i128))
    }

    pub fn from_rational(q: &Rational) -> Cyclo {
        Cyclo::from_num(field(1), norm_big(vec![q.numer().clone()], q.denom().clone()))
    }

    /// ζ_m^j = exp(2πij/m).
    pub fn root_of_unity(m: u32, j: i64) -> Result<Cyclo, ScalarError> {
        if m == 0 || m > MAX_CONDUCTOR {
            return Err(ScalarError::ConductorOverflow(m as u64));
        }
        let j = j.rem_euclid(m as i64) as u32;
        if m % 4 == 2 {
            // ζ_{2k} = −ζ_k^{(k+1)/2} for odd k
            let k = m / 2;
            let e = (j as u64 * (k as u64).div_ceil(2)) % k as u64;
            let base = Cyclo::root_of_unity(k, e as i64)?;
            return Ok(if j % 2 == 1 { -base } else { base });
        }
        let f = field(m);
        let mut v = vec![0i128; j as usize + 1];
        v[j as usize] = 1;
        let num = match reduce_i128(f, &mut v) {
            Some(()) => norm_i128(v, 1),
            None => unreachable!("unit reduction overflow"),
        };
        Ok(Cyclo::from_num(f, num))
    }

    /// Panicking form of [`Cyclo::root_of_unity`].
    pub fn zeta(m: u32, j: i64) -> Cyclo {
        Cyclo::root_of_unity(m, j).expect("conductor out of range")
    }

    /// Element with the given power-basis coordinates at conductor `m`.
    pub fn from_coefficients(m: u32, coeffs: &[Rational]) -> Result<Cyclo, ScalarError> {
        if m == 0 || m > MAX_CONDUCTOR {
            return Err(ScalarError::ConductorOverflow(m as u64));
        }
        let mut acc = Cyclo::zero();
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.try_add(&Cyclo::root_of_unity(m, j as i64)?.scale(c))?;
            }
        }
        Ok(acc)
    }

    /// Conductor of the field the element is currently stored in (not necessarily minimal).
    pub fn conductor(&self) -> u32 {
        if self.is_rational() {
            1
        } else {
            self.field.m
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.len() == 0
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.num.coeff(0))
    }

    /// Power-basis coordinates at the stored conductor.
    pub fn coefficients(&self) -> Vec<Rational> {
        (0..self.field.degree.max(1)).map(|j| self.num.coeff(j)).collect()
    }

    pub fn scale(&self, q: &Rational) -> Cyclo {
        self.mul_same(&Cyclo::from_rational(q).num, self.field)
    }

    // Re-express Σ c_j ζ^{map(j)} in `target`, reducing modulo its polynomial.
    fn remap(&self, target: &'static CycloField, map: impl Fn(usize) -> usize) -> Cyclo {
        if self.is_rational() {
            return Cyclo::from_num(target, self.num.clone());
        }
        match &self.num {
            Num::Small { coeffs, den } => {
                let mut v = vec![0i128; target.m as usize];
                for (j, &c) in coeffs.iter().enumerate() {
                    v[map(j)] += c as i128;
                }
                if reduce_i128(target, &mut v).is_some() {
                    return Cyclo::from_num(target, norm_i128(v, *den as i128));
                }
            }
            Num::Big { .. } => {}
        }
        let (coeffs, den) = self.num.to_big();
        let mut v = vec![BigInt::zero(); target.m as usize];
        for (j, c) in coeffs.iter().enumerate() {
            v[map(j)] += c;
        }
        reduce_big(target, &mut v);
        Cyclo::from_num(target, norm_big(v, den))
    }

    fn promote(&self, target: &'static CycloField) -> Cyclo {
        if target.m == self.field.m {
            return self.clone();
        }
        debug_assert_eq!(target.m % self.field.m, 0);
        let step = (target.m / self.field.m) as usize;
        self.remap(target, |j| j * step)
    }

    /// Image under the automorphism ζ ↦ ζ^k, `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclo {
        let m = self.field.m as i64;
        let k = k.rem_euclid(m) as usize;
        debug_assert_eq!(k.gcd(&(m as usize)), 1);
        self.remap(self.field, |j| (j * k) % m as usize)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.conj().num == self.num
    }

    // Bring both operands into one field.
    fn common(a: &Cyclo, b: &Cyclo) -> Result<(&'static CycloField, Option<Cyclo>, Option<Cyclo>), ScalarError> {
        if a.field.m == b.field.m || b.is_rational() {
            return Ok((a.field, None, None));
        }
        if a.is_rational() {
            return Ok((b.field, None, None));
        }
        let l = (a.field.m as u64).lcm(&(b.field.m as u64));
        if l > MAX_CONDUCTOR as u64 {
            return Err(ScalarError::ConductorOverflow(l));
        }
        let f = field(l as u32);
        Ok((f, Some(a.promote(f)), Some(b.promote(f))))
    }

    fn binary(&self, other: &Cyclo, op: Op) -> Result<Cyclo, ScalarError> {
        let (f, pa, pb) = Cyclo::common(self, other)?;
        let a = &pa.as_ref().unwrap_or(self).num;
        let b = &pb.as_ref().unwrap_or(other).num;
        let num = match op {
            Op::Add => add_nums(a, b, false),
            Op::Sub => add_nums(a, b, true),
            Op::Mul => mul_nums(a, b, f),
        };
        Ok(Cyclo::from_num(f, num))
    }

    fn mul_same(&self, other: &Num, f: &'static CycloField) -> Cyclo {
        Cyclo::from_num(f, mul_nums(&self.num, other, f))
    }

    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        self.binary(other, Op::Add)
    }

    pub fn try_sub(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        self.binary(other, Op::Sub)
    }

    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        self.binary(other, Op::Mul)
    }

    pub fn try_div(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inv(&self) -> Result<Cyclo, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Cyclo::from_rational(&q.recip()));
        }
        let m = self.field.m as i64;
        let mut others = Cyclo::one();
        for k in 2..m {
            if k.gcd(&m) == 1 {
                others = others.mul_same(&self.galois(k).num, self.field);
            }
        }
        let norm = self.mul_same(&others.num, self.field);
        let norm = norm.to_rational().expect("field norm must be rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating-point value (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let f = self.field;
        match &self.num {
            Num::Small { coeffs, den } => {
                let (mut re, mut im) = (0.0, 0.0);
                for (j, &c) in coeffs.iter().enumerate() {
                    re += c as f64 * f.cos[j];
                    im += c as f64 * f.sin[j];
                }
                (re / *den as f64, im / *den as f64)
            }
            Num::Big { .. } => {
                let (mut re, mut im) = (0.0, 0.0);
                for j in 0..self.num.len() {
                    let c = self.num.coeff(j).to_f64().unwrap_or(f64::NAN);
                    re += c * f.cos[j];
                    im += c * f.sin[j];
                }
                (re, im)
            }
        }
    }

    /// Real part in floating point, with a rigorous bound on its absolute error.
    pub(crate) fn real_approx(&self) -> (f64, f64) {
        let f = self.field;
        let slack = (f.degree as f64 + 4.0) * f64::EPSILON;
        match &self.num {
            Num::Small { coeffs, den } => {
                let (mut s, mut mag) = (0.0f64, 0.0f64);
                for (j, &c) in coeffs.iter().enumerate() {
                    let c = c as f64;
                    s += c * f.cos[j];
                    mag += c.abs();
                }
                let d = *den as f64;
                (s / d, mag * slack / d * 1.01)
            }
            Num::Big { .. } => {
                let (mut s, mut mag) = (0.0f64, 0.0f64);
                for j in 0..self.num.len() {
                    let c = self.num.coeff(j).to_f64().unwrap_or(f64::NAN);
                    s += c * f.cos[j];
                    mag += c.abs();
                }
                (s, mag * slack * 1.01)
            }
        }
    }

    /// Upper bound on |σ(x)| over all embeddings: Σ |c_j| / den.
    pub(crate) fn embedding_bound(&self) -> f64 {
        (0..self.num.len()).map(|j| self.num.coeff(j).abs().to_f64().unwrap_or(f64::INFINITY)).sum()
    }

    /// Field norm down to ℚ at the stored conductor.
    pub fn norm(&self) -> Rational {
        if let Some(q) = self.to_rational() {
            return num_traits::pow(q, self.field.degree);
        }
        let m = self.field.m as i64;
        let mut acc = self.clone();
        for k in 2..m {
            if k.gcd(&m) == 1 {
                acc = acc.mul_same(&self.galois(k).num, self.field);
            }
        }
        acc.to_rational().expect("field norm must be rational")
    }

    pub(crate) fn field_degree(&self) -> usize {
        self.field.degree
    }

    /// The same number stored at the smallest possible conductor.
    pub fn minimal(&self) -> Cyclo {
        if self.is_rational() {
            return Cyclo::from_num(field(1), self.num.clone());
        }
        let m = self.field.m;
        for d in super::field::divisors(m) {
            if d == m {
                break;
            }
            if d % 4 == 2 || d == 1 {
                continue;
            }
            if let Some(y) = subfield_map(m, d).pull_back(self) {
                return y;
            }
        }
        self.clone()
    }

    /// Structural comparison on minimal forms: a deterministic total order
    /// (not the numeric order, which only exists on real elements).
    pub fn canonical_cmp(&self, other: &Cyclo) -> Ordering {
        let a = self.minimal();
        let b = other.minimal();
        let ma = if a.is_rational() { 1 } else { a.field.m };
        let mb = if b.is_rational() { 1 } else { b.field.m };
        ma.cmp(&mb).then_with(|| {
            let n = a.num.len().max(b.num.len());
            for j in 0..n {
                let o = a.num.coeff(j).cmp(&b.num.coeff(j));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    /// Nonzero terms (exponent, coefficient) of the minimal form, with its conductor.
    pub fn terms(&self) -> (u32, Vec<(usize, Rational)>) {
        let x = self.minimal();
        let m = if x.is_rational() { 1 } else { x.field.m };
        let terms = (0..x.num.len())
            .map(|j| (j, x.num.coeff(j)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        (m, terms)
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

/// Linear data to test membership of ℚ(ζ_m) elements in ℚ(ζ_d) and pull them back.
struct SubfieldMap {
    small: &'static CycloField,
    // rows of the big field picked as pivots, and the inverse of that square block
    pivots: Vec<usize>,
    inverse: Vec<Vec<Rational>>,
}

impl SubfieldMap {
    fn pull_back(&self, x: &Cyclo) -> Option<Cyclo> {
        let coords: Vec<Rational> = self
            .inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.pivots)
                    .fold(Rational::zero(), |acc, (a, &p)| acc + a * x.num.coeff(p))
            })
            .collect();
        let mut y = Cyclo::zero();
        for (j, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                y = &y + &Cyclo::zeta(self.small.m, j as i64).scale(c);
            }
        }
        let y = Cyclo::from_num(self.small, y.promote_or_same(self.small).num);
        if y == *x {
            Some(y)
        } else {
            None
        }
    }
}

impl Cyclo {
    fn promote_or_same(&self, f: &'static CycloField) -> Cyclo {
        if self.is_rational() {
            Cyclo::from_num(f, self.num.clone())
        } else {
            self.promote(f)
        }
    }
}

type SubfieldCache = Mutex<std::collections::HashMap<(u32, u32), Arc<SubfieldMap>>>;

fn subfield_map(m: u32, d: u32) -> Arc<SubfieldMap> {
    static CACHE: OnceLock<SubfieldCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&(m, d)) {
        return s.clone();
    }
    let big = field(m);
    let small = field(d);
    // columns: images of ζ_d^j in the power basis of ℚ(ζ_m)
    let cols: Vec<Vec<Rational>> = (0..small.degree)
        .map(|j| {
            let z = Cyclo::from_num(small, norm_i128(unit_vec(small, j), 1)).promote(big);
            (0..big.degree).map(|i| z.num.coeff(i)).collect()
        })
        .collect();
    let rows: Vec<Vec<Rational>> =
        (0..big.degree).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let pivots = crate::linalg::independent_rows(&rows);
    let block: Vec<Vec<Rational>> = pivots.iter().map(|&i| rows[i].clone()).collect();
    let inverse = crate::linalg::inverse(&block).expect("embedding has full column rank");
    let map = Arc::new(SubfieldMap { small, pivots, inverse });
    cache.lock().unwrap_or_else(|e| e.into_inner()).insert((m, d), map.clone());
    map
}

fn unit_vec(f: &CycloField, j: usize) -> Vec<i128> {
    let mut v = vec![0i128; f.degree];
    v[j] = 1;
    v
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.field.m == other.field.m || (self.is_rational() && other.is_rational()) {
            return self.num == other.num;
        }
        match Cyclo::common(self, other) {
            Ok((_, Some(a), Some(b))) => a.num == b.num,
            Ok(_) => self.num == other.num,
            Err(_) => self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false),
        }
    }
}

impl Eq for Cyclo {}

// Hashes the minimal form so that it agrees with numeric equality.
impl std::hash::Hash for Cyclo {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let x = self.minimal();
        x.conductor().hash(state);
        x.num.hash(state);
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::from_num(self.field, self.num.negate())
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Cyclo {
        Cyclo::from_ratio(p, d)
    }

    #[test]
    fn roots_of_unity_multiply() {
        let z = Cyclo::zeta(5, 1);
        assert_eq!(z.pow(5), Cyclo::one());
        assert_ne!(z.pow(2), Cyclo::one());
        let w = Cyclo::zeta(12, 5);
        assert_eq!(w.pow(12), Cyclo::one());
        assert_eq!(Cyclo::zeta(10, 5), Cyclo::from_int(-1));
        assert_eq!(Cyclo::zeta(10, 2), Cyclo::zeta(5, 1));
    }

    #[test]
    fn sqrt2_squared() {
        let s = Cyclo::zeta(8, 1) + Cyclo::zeta(8, -1);
        assert_eq!(&s * &s, Cyclo::from_int(2));
    }

    #[test]
    fn golden_ratio_product() {
        let sqrt5 = Cyclo::zeta(5, 1) * Cyclo::from_int(2) + Cyclo::zeta(5, 4) * Cyclo::from_int(2) + Cyclo::one();
        assert_eq!(&sqrt5 * &sqrt5, Cyclo::from_int(5));
        let tau = (Cyclo::one() + &sqrt5) * q(1, 2);
        let tau_bar = (Cyclo::one() - &sqrt5) * q(1, 2);
        assert_eq!(&tau * &tau_bar, Cyclo::from_int(-1));
        assert_eq!(&tau + &tau_bar, Cyclo::one());
    }

    #[test]
    fn mixed_conductors_compare() {
        let a = Cyclo::zeta(4, 1);
        let b = Cyclo::zeta(20, 5);
        assert_eq!(a, b);
        assert_eq!((&a * &b).conductor(), 1);
        let c = Cyclo::zeta(5, 1) + Cyclo::zeta(8, 1);
        assert_eq!(c.conductor(), 40);
        assert_eq!(c.minimal().conductor(), 40);
        let d = &c - &Cyclo::zeta(8, 1);
        assert_eq!(d.minimal().conductor(), 5);
    }

    #[test]
    fn inverse_and_division() {
        let x = Cyclo::zeta(7, 1) + q(3, 2);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Cyclo::one());
        assert!(Cyclo::zero().inv().is_err());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let mut x = Cyclo::zeta(5, 1) + q(1_000_003, 7);
        for _ in 0..6 {
            x = &x * &x;
        }
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Cyclo::one());
        let back = &(&x + &Cyclo::one()) - &x;
        assert_eq!(back, Cyclo::one());
    }

    #[test]
    fn conductor_bound_is_an_error() {
        assert!(Cyclo::root_of_unity(MAX_CONDUCTOR + 1, 1).is_err());
        let a = Cyclo::zeta(9973, 1);
        let b = Cyclo::zeta(7, 1);
        assert!(matches!(a.try_add(&b), Err(ScalarError::ConductorOverflow(_))));
    }

    #[test]
    fn complex_value() {
        let (re, im) = Cyclo::zeta(8, 1).to_complex();
        assert!((re - 0.5f64.sqrt()).abs() < 1e-15 && (im - 0.5f64.sqrt()).abs() < 1e-15);
    }
}
