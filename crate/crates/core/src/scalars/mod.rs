//! Exact scalars: cyclotomic numbers, their real subfields, and word-sized prime fields.

mod cyclo;
mod field;
mod prime;
mod real;
mod text;

pub use cyclo::{Cyclo, Rational};
pub use field::{cyclotomic_polynomial, divisors, euler_phi, prime_factors, MAX_CONDUCTOR};
pub use prime::{is_prime, pow_mod, prime_congruent_one, PrimeFieldScalar};
pub use real::CycloReal;
pub use text::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the supported bound")]
    ConductorOverflow(u64),
    #[error("{0} is not real")]
    NotReal(String),
    #[error("{0}")]
    Parse(String),
}

/// Integer rational shorthand.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
