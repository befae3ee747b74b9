//! Lossless text form: `p/q` for rationals, `(p/q)*z{m}^{j} + …` otherwise.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::cyclo::{Cyclo, Rational};
use super::ScalarError;

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(format!("malformed rational {s:?}"));
    let q = Rational::from_str(s).map_err(|_| bad())?;
    Ok(q)
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, terms) = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        if m == 1 {
            return f.write_str(&format_rational(&terms[0].1));
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(j, c)| {
                if *j == 0 {
                    format!("({})", format_rational(c))
                } else {
                    format!("({})*z{}^{}", format_rational(c), m, j)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for Cyclo {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Cyclo, ScalarError> {
        let s = s.trim();
        if !s.starts_with('(') {
            return Ok(Cyclo::from_rational(&parse_rational(s)?));
        }
        let mut acc = Cyclo::zero();
        for term in s.split(" + ") {
            let bad = || ScalarError::Parse(format!("malformed term {term:?}"));
            let term = term.trim();
            let close = term.find(')').ok_or_else(bad)?;
            let coeff = parse_rational(term.get(1..close).ok_or_else(bad)?)?;
            let rest = &term[close + 1..];
            let value = if rest.is_empty() {
                Cyclo::from_rational(&coeff)
            } else {
                let body = rest.strip_prefix("*z").ok_or_else(bad)?;
                let (m, j) = body.split_once('^').ok_or_else(bad)?;
                let m: u32 = m.parse().map_err(|_| bad())?;
                let j: i64 = j.parse().map_err(|_| bad())?;
                if coeff.is_zero() {
                    continue;
                }
                Cyclo::root_of_unity(m, j)?.scale(&coeff)
            };
            acc = acc.try_add(&value)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::CycloReal;

    #[test]
    fn round_trip() {
        let samples = [
            Cyclo::zero(),
            Cyclo::from_ratio(-3, 7),
            Cyclo::zeta(8, 3) * Cyclo::from_ratio(5, 2) + Cyclo::from_int(1),
            CycloReal::golden().into_cyclo(),
            CycloReal::make_cos(3, 20).into_cyclo(),
        ];
        for x in samples {
            let s = x.to_string();
            let y: Cyclo = s.parse().unwrap();
            assert_eq!(x, y, "{s}");
            assert_eq!(s, y.to_string());
        }
    }

    #[test]
    fn golden_text() {
        assert_eq!(CycloReal::golden().to_string(), "(-1)*z5^2 + (-1)*z5^3");
        assert_eq!(Cyclo::from_ratio(6, -4).to_string(), "-3/2");
    }

    #[test]
    fn garbage_rejected() {
        assert!("1/0x".parse::<Cyclo>().is_err());
        assert!("(1)*q5^2".parse::<Cyclo>().is_err());
    }
}
