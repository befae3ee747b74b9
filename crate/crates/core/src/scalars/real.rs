//! Real cyclotomic numbers with an exact total order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive, Zero};

use super::cyclo::{Cyclo, Rational};
use super::ScalarError;

/// A real element of some ℚ(ζ_m). Ordered exactly.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloReal(Cyclo);

impl CycloReal {
    pub fn new(x: Cyclo) -> Result<CycloReal, ScalarError> {
        if x.is_real() {
            Ok(CycloReal(x))
        } else {
            Err(ScalarError::NotReal(x.to_string()))
        }
    }

    pub fn zero() -> CycloReal {
        CycloReal(Cyclo::zero())
    }

    pub fn one() -> CycloReal {
        CycloReal(Cyclo::one())
    }

    pub fn from_int(n: i64) -> CycloReal {
        CycloReal(Cyclo::from_int(n))
    }

    pub fn from_ratio(p: i64, q: i64) -> CycloReal {
        CycloReal(Cyclo::from_ratio(p, q))
    }

    pub fn from_rational(q: &Rational) -> CycloReal {
        CycloReal(Cyclo::from_rational(q))
    }

    /// cos(kπ/n), living in the real subfield of ℚ(ζ_{2n}).
    pub fn make_cos(k: i64, n: u32) -> CycloReal {
        assert!(n > 0, "make_cos needs n > 0");
        let m = 2 * n;
        let z = Cyclo::zeta(m, k);
        let w = Cyclo::zeta(m, -k);
        CycloReal((z + w) * Cyclo::from_ratio(1, 2))
    }

    /// sin(kπ/n) = cos((n − 2k)π/(2n)).
    pub fn make_sin(k: i64, n: u32) -> CycloReal {
        CycloReal::make_cos(n as i64 - 2 * k, 2 * n)
    }

    pub fn sqrt2() -> CycloReal {
        CycloReal(Cyclo::zeta(8, 1) + Cyclo::zeta(8, -1))
    }

    pub fn sqrt5() -> CycloReal {
        CycloReal::make_cos(1, 5) * CycloReal::from_int(4) - CycloReal::one()
    }

    /// τ = (1 + √5)/2.
    pub fn golden() -> CycloReal {
        CycloReal::make_cos(1, 5) * CycloReal::from_int(2)
    }

    /// τ̄ = (1 − √5)/2.
    pub fn golden_conj() -> CycloReal {
        CycloReal::one() - CycloReal::golden()
    }

    pub fn as_cyclo(&self) -> &Cyclo {
        &self.0
    }

    pub fn into_cyclo(self) -> Cyclo {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.0.to_rational()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_complex().0
    }

    pub fn inv(&self) -> Result<CycloReal, ScalarError> {
        Ok(CycloReal(self.0.inv()?))
    }

    pub fn try_add(&self, o: &CycloReal) -> Result<CycloReal, ScalarError> {
        Ok(CycloReal(self.0.try_add(&o.0)?))
    }

    pub fn try_sub(&self, o: &CycloReal) -> Result<CycloReal, ScalarError> {
        Ok(CycloReal(self.0.try_sub(&o.0)?))
    }

    pub fn try_mul(&self, o: &CycloReal) -> Result<CycloReal, ScalarError> {
        Ok(CycloReal(self.0.try_mul(&o.0)?))
    }

    pub fn try_div(&self, o: &CycloReal) -> Result<CycloReal, ScalarError> {
        Ok(CycloReal(self.0.try_div(&o.0)?))
    }

    pub fn pow(&self, e: u32) -> CycloReal {
        CycloReal(self.0.pow(e))
    }

    pub fn minimal(&self) -> CycloReal {
        CycloReal(self.0.minimal())
    }

    /// Exact sign. A double-precision estimate with a rigorous error bound
    /// decides almost always; otherwise a norm lower bound separates the value from 0.
    pub fn signum(&self) -> Ordering {
        if self.0.is_zero() {
            return Ordering::Equal;
        }
        if let Some(q) = self.0.to_rational() {
            return q.numer().sign().cmp_zero();
        }
        let (v, err) = self.0.real_approx();
        if v.abs() > 2.0 * err {
            return v.partial_cmp(&0.0).unwrap();
        }
        // |x| ≥ |N(x)| / B^{d−1} where B bounds every conjugate
        let norm = self.0.norm().abs().to_f64().unwrap_or(0.0);
        let bound = self.0.embedding_bound().max(1.0);
        let d = self.0.field_degree() as i32;
        let lower = norm / bound.powi(d - 1) * 0.99;
        if lower > 2.0 * err && v.abs() > 0.0 {
            return v.partial_cmp(&0.0).unwrap();
        }
        panic!("cannot certify the sign of {} at double precision", self.0);
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> CycloReal {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialOrd for CycloReal {
    fn partial_cmp(&self, other: &CycloReal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycloReal {
    fn cmp(&self, other: &CycloReal) -> Ordering {
        if let (Some(a), Some(b)) = (self.0.to_rational(), other.0.to_rational()) {
            return a.cmp(&b);
        }
        (self - other).signum()
    }
}

impl TryFrom<Cyclo> for CycloReal {
    type Error = ScalarError;
    fn try_from(x: Cyclo) -> Result<CycloReal, ScalarError> {
        CycloReal::new(x)
    }
}

impl From<CycloReal> for Cyclo {
    fn from(x: CycloReal) -> Cyclo {
        x.0
    }
}

impl fmt::Display for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (~{:.6})", self.0, self.to_f64())
    }
}

impl std::str::FromStr for CycloReal {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<CycloReal, ScalarError> {
        CycloReal::new(s.parse()?)
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&CycloReal> for &CycloReal {
            type Output = CycloReal;
            fn $method(self, rhs: &CycloReal) -> CycloReal {
                CycloReal((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<CycloReal> for CycloReal {
            type Output = CycloReal;
            fn $method(self, rhs: CycloReal) -> CycloReal {
                CycloReal((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<&CycloReal> for CycloReal {
            type Output = CycloReal;
            fn $method(self, rhs: &CycloReal) -> CycloReal {
                CycloReal((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<CycloReal> for &CycloReal {
            type Output = CycloReal;
            fn $method(self, rhs: CycloReal) -> CycloReal {
                CycloReal((&self.0).$method(&rhs.0))
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &CycloReal {
    type Output = CycloReal;
    fn neg(self) -> CycloReal {
        CycloReal(-&self.0)
    }
}

impl Neg for CycloReal {
    type Output = CycloReal;
    fn neg(self) -> CycloReal {
        CycloReal(-self.0)
    }
}

impl std::iter::Sum for CycloReal {
    fn sum<I: Iterator<Item = CycloReal>>(iter: I) -> CycloReal {
        iter.fold(CycloReal::zero(), |a, b| a + b)
    }
}

impl Zero for CycloReal {
    fn zero() -> CycloReal {
        CycloReal::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_values() {
        assert_eq!(CycloReal::make_cos(0, 5), CycloReal::one());
        assert_eq!(CycloReal::make_cos(1, 3), CycloReal::from_ratio(1, 2));
        assert_eq!(CycloReal::make_cos(1, 5), CycloReal::golden() * CycloReal::from_ratio(1, 2));
        assert_eq!(CycloReal::make_cos(1, 4), CycloReal::sqrt2() * CycloReal::from_ratio(1, 2));
        assert_eq!(CycloReal::make_cos(7, 7), CycloReal::from_int(-1));
        assert_eq!(CycloReal::make_sin(1, 6), CycloReal::from_ratio(1, 2));
    }

    #[test]
    fn golden_identities() {
        let t = CycloReal::golden();
        let tb = CycloReal::golden_conj();
        assert_eq!(&t * &tb, CycloReal::from_int(-1));
        assert_eq!(&t * &t, &t + &CycloReal::one());
        assert!((t.to_f64() - 1.618033988749895).abs() < 1e-14);
        assert_eq!(CycloReal::sqrt2() * CycloReal::sqrt2(), CycloReal::from_int(2));
    }

    #[test]
    fn ordering_is_exact() {
        let t = CycloReal::golden();
        assert!(t > CycloReal::from_ratio(1618033, 1000000));
        assert!(t < CycloReal::from_ratio(1618034, 1000000));
        // a difference far below double precision
        let close = CycloReal::from_ratio(1, 1_000_000_000) * CycloReal::from_ratio(1, 1_000_000_000);
        let a = &t + &close;
        assert!(a > t);
        assert!(CycloReal::golden_conj().is_negative());
        let mut v = vec![CycloReal::sqrt2(), CycloReal::golden(), CycloReal::one(), CycloReal::sqrt5()];
        v.sort();
        assert_eq!(v, vec![CycloReal::one(), CycloReal::sqrt2(), CycloReal::golden(), CycloReal::sqrt5()]);
    }

    #[test]
    fn non_real_rejected() {
        assert!(CycloReal::new(Cyclo::zeta(4, 1)).is_err());
    }
}
