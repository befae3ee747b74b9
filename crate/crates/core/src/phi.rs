//! The scalar by which Ω acts on each genuine character, and the map Φ from
//! sign-twist classes of genuine characters to orbits of solvable points.

use rayon::prelude::*;

use crate::points::{PointRecord, PointSpace};
use crate::rootsys::{ParameterFunction, RootType};
use crate::scalars::{rat, Cyclo, CycloReal, Rational};
use crate::system::SpinSystem;
use crate::Error;

/// a(χ) for one genuine row of the W̃ table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AValue {
    pub row: usize,
    pub dim: usize,
    pub value: CycloReal,
}

/// Genuine rows identified up to χ ∼ sgn ⊗ χ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistClass {
    pub rows: Vec<usize>,
    pub dim: usize,
    pub a_value: CycloReal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub surjective: bool,
    pub injective: bool,
    pub unique: bool,
}

#[derive(Clone, Debug)]
pub struct PhiMap {
    pub classes: Vec<TwistClass>,
    pub orbits: Vec<PointRecord>,
    /// For each twist class, every orbit whose norm equals its a-value.
    pub assignments: Vec<Vec<usize>>,
    /// For each orbit, the twist classes sent to it.
    pub fibers: Vec<Vec<usize>>,
    pub verdicts: Verdicts,
    /// Expected bijectivity, when the parameters are not identically zero.
    pub predicted_bijective: Option<bool>,
    pub violations: Vec<String>,
}

impl PhiMap {
    pub fn is_bijective(&self) -> bool {
        self.verdicts.surjective && self.verdicts.injective && self.verdicts.unique
    }

    /// Sizes of the fibers with more than one class, keyed by orbit id.
    pub fn collisions(&self) -> Vec<(usize, usize)> {
        self.fibers.iter().enumerate().filter(|(_, f)| f.len() > 1).map(|(i, f)| (i, f.len())).collect()
    }
}

fn real(x: Cyclo) -> Result<CycloReal, Error> {
    Ok(CycloReal::new(x)?)
}

/// a(χ) for every genuine row, evaluated from the group-algebra form of Ω and
/// cross-checked against the pairwise trace expansion.
pub fn a_values(sys: &SpinSystem, c: &ParameterFunction) -> Result<Vec<AValue>, Error> {
    let cover = sys.cover()?;
    let ct = sys.cover_table()?;
    let rs = sys.root_system();
    let g = cover.group();
    let omega = cover.omega(c);
    let omega_classes: Vec<(usize, &Rational)> = omega.terms.iter().map(|(x, q)| (g.class_of(*x), q)).collect();

    let diagonal: Rational =
        (0..rs.num_positive()).map(|a| c.value(rs, a) * c.value(rs, a)).fold(rat(0, 1), |s, x| s + x) * rat(1, 2);
    let pairs: Vec<(usize, Rational)> = cover
        .negative_pairs()
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| {
            let x = g.mul(cover.f_index(a), cover.f_index(b));
            (g.class_of(x), rat(-1, 2) * c.value(rs, a) * c.value(rs, b))
        })
        .filter(|(_, q)| *q != rat(0, 1))
        .collect();

    ct.genuine
        .par_iter()
        .map(|&row| {
            let chi = ct.table.char(row);
            let dim = ct.table.dim(row);
            let per_dim = rat(1, dim as i64);
            let from_terms: Cyclo = omega_classes.iter().map(|(k, q)| chi[*k].scale(q)).sum::<Cyclo>().scale(&per_dim);
            let from_pairs: Cyclo = Cyclo::from_rational(&diagonal)
                + pairs.iter().map(|(k, q)| chi[*k].scale(q)).sum::<Cyclo>().scale(&per_dim);
            if from_terms != from_pairs {
                return Err(Error::Consistency(format!("two evaluations of a(χ) differ on row {row}")));
            }
            Ok(AValue { row, dim, value: real(from_terms)? })
        })
        .collect()
}

/// The scalar part of Ω in the Clifford algebra, after checking Ω has no other part.
pub fn omega_scalar(sys: &SpinSystem, c: &ParameterFunction) -> Result<CycloReal, Error> {
    let omega = sys.cover()?.omega(c);
    let e = &omega.element;
    let full = (1usize << e.rank()) - 1;
    if (1..=full).any(|b| !e.coeff(b).is_zero()) {
        return Err(Error::Consistency("Ω is not a scalar in the Clifford algebra".into()));
    }
    Ok(e.coeff(0).clone())
}

/// Group genuine rows into classes {χ, sgn ⊗ χ}, checking a is constant on each.
pub fn twist_classes(sys: &SpinSystem, avalues: &[AValue]) -> Result<Vec<TwistClass>, Error> {
    let ct = sys.cover_table()?;
    let by_row = |r: usize| avalues.iter().find(|a| a.row == r);
    let mut out = Vec::new();
    for a in avalues {
        let partner = ct.sign_twist[a.row];
        if partner < a.row {
            continue;
        }
        let mut rows = vec![a.row];
        if partner != a.row {
            let b = by_row(partner).ok_or_else(|| Error::Consistency("sgn twist left the genuine rows".into()))?;
            if b.value != a.value {
                return Err(Error::TheoremViolation(format!("a(χ) ≠ a(sgn ⊗ χ) for rows {} and {}", a.row, partner)));
            }
            rows.push(partner);
        }
        out.push(TwistClass { rows, dim: a.dim, a_value: a.value.clone() });
    }
    Ok(out)
}

/// Which parameters the main correspondence predicts to be bijective.
pub fn predicted_bijective(kind: RootType, c: &ParameterFunction) -> Option<bool> {
    if c.is_zero() {
        return None;
    }
    Some(match kind {
        RootType::I2(n) if n % 2 == 1 => true,
        RootType::I2(n) => {
            let v = c.values();
            bijectivity_condition(n, &v[0], &v[1]).holds
        }
        RootType::H3 => true,
        RootType::H4 => false,
    })
}

/// Match twist classes to solvable orbits by exact norm, and record every
/// departure from the expected behaviour.
pub fn build_phi(classes: Vec<TwistClass>, orbits: Vec<PointRecord>, predicted: Option<bool>) -> PhiMap {
    let assignments: Vec<Vec<usize>> = classes
        .iter()
        .map(|t| orbits.iter().filter(|o| o.norm2 == t.a_value).map(|o| o.orbit_id).collect())
        .collect();
    let mut fibers = vec![Vec::new(); orbits.len()];
    for (i, hits) in assignments.iter().enumerate() {
        for &o in hits {
            fibers[o].push(i);
        }
    }
    let verdicts = Verdicts {
        surjective: fibers.iter().all(|f| !f.is_empty()),
        injective: fibers.iter().all(|f| f.len() <= 1),
        unique: assignments.iter().all(|a| a.len() == 1),
    };
    let mut violations = Vec::new();
    for (i, hits) in assignments.iter().enumerate() {
        if hits.is_empty() {
            violations.push(format!("class {:?} with a = {} matches no solvable orbit", classes[i].rows, classes[i].a_value));
        }
    }
    if !verdicts.surjective {
        violations.push("Φ is not surjective".into());
    }
    match predicted {
        Some(expect) => {
            if !verdicts.unique {
                violations.push("some class matches more than one orbit".into());
            }
            let bijective = verdicts.surjective && verdicts.injective && verdicts.unique;
            if bijective != expect {
                violations.push(format!("Φ bijective = {bijective}, expected {expect}"));
            }
        }
        None => {
            if orbits.len() != 1 || classes.iter().any(|t| !t.a_value.is_zero()) {
                violations.push("zero parameters must give the single point 0 and vanishing a-values".into());
            }
            if classes.len() > 1 && verdicts.injective {
                violations.push("Φ is injective for zero parameters".into());
            }
        }
    }
    PhiMap { classes, orbits, assignments, fibers, verdicts, predicted_bijective: predicted, violations }
}

/// Full pipeline for one root system and parameter function.
pub fn compute(sys: &SpinSystem, c: &ParameterFunction) -> Result<PhiMap, Error> {
    let avalues = a_values(sys, c)?;
    let classes = twist_classes(sys, &avalues)?;
    let spin = omega_scalar(sys, c)?;
    if !classes.iter().any(|t| t.a_value == spin) {
        return Err(Error::Consistency("the scalar part of Ω is not an a-value".into()));
    }
    let orbits = PointSpace::new(sys.root_system())?.solvable_points(c);
    Ok(build_phi(classes, orbits, predicted_bijective(sys.kind(), c)))
}

/// A pair (k, l) of distinct parity with cos(kπ/n)·c1 = cos(lπ/n)·c2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosWitness {
    pub k: u32,
    pub l: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosCondition {
    pub holds: bool,
    pub witnesses: Vec<CosWitness>,
}

/// Scan 0 < k, l < 2n, k, l ≠ n, of distinct parity for cos(kπ/n)c1 = cos(lπ/n)c2.
pub fn bijectivity_condition(n: u32, c1: &Rational, c2: &Rational) -> CosCondition {
    let a = CycloReal::from_rational(c1);
    let b = CycloReal::from_rational(c2);
    let usable = |k: u32| k != 0 && k != n;
    let mut witnesses = Vec::new();
    for k in (0..2 * n).filter(|&k| usable(k)) {
        let lhs = CycloReal::make_cos(k as i64, n) * &a;
        for l in (0..2 * n).filter(|&l| usable(l) && (l + k) % 2 == 1) {
            if lhs == CycloReal::make_cos(l as i64, n) * &b {
                witnesses.push(CosWitness { k, l });
            }
        }
    }
    CosCondition { holds: witnesses.is_empty(), witnesses }
}

/// Σ_{k=1}^{A} cos(kθ) with θ = qπ/n, summed term by term.
pub fn cos_sum_direct(a: u32, q: i64, n: u32) -> CycloReal {
    (1..=a as i64).map(|k| CycloReal::make_cos(k * q, n)).sum()
}

/// Σ_{k=1}^{A} k·cos(kθ) with θ = qπ/n, summed term by term.
pub fn weighted_cos_sum_direct(a: u32, q: i64, n: u32) -> CycloReal {
    (1..=a as i64).map(|k| CycloReal::make_cos(k * q, n) * CycloReal::from_int(k)).sum()
}

fn half_angle_sin(j: i64, n: u32) -> CycloReal {
    CycloReal::make_sin(j, 2 * n)
}

/// Closed form of Σ_{k=1}^{A} cos(kθ), θ = qπ/n, valid when sin(θ/2) ≠ 0.
pub fn cos_sum_closed(a: u32, q: i64, n: u32) -> Result<CycloReal, Error> {
    let a = a as i64;
    let s = half_angle_sin(q, n);
    let top = half_angle_sin(q * (2 * a + 1), n);
    Ok(CycloReal::from_ratio(-1, 2) + top.try_div(&(s * CycloReal::from_int(2)))?)
}

/// Closed form of Σ_{k=1}^{A} k·cos(kθ), θ = qπ/n, valid when sin(θ/2) ≠ 0.
pub fn weighted_cos_sum_closed(a: u32, q: i64, n: u32) -> Result<CycloReal, Error> {
    let a = a as i64;
    let s = half_angle_sin(q, n);
    let s2 = (&s * &s) * CycloReal::from_int(2);
    let h = half_angle_sin(q * (a + 1), n);
    let first = -(&h * &h).try_div(&s2)?;
    let second = (half_angle_sin(q * (2 * a + 1), n) * CycloReal::from_int(a + 1)).try_div(&(s * CycloReal::from_int(2)))?;
    Ok(first + second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(sys: &SpinSystem, c: i64) -> ParameterFunction {
        ParameterFunction::constant(sys.root_system(), rat(c, 1))
    }

    #[test]
    fn dihedral_odd_values() {
        for n in [3u32, 5, 7] {
            let sys = SpinSystem::new(RootType::I2(n)).unwrap();
            let phi = compute(&sys, &constant(&sys, 1)).unwrap();
            assert!(phi.violations.is_empty(), "{:?}", phi.violations);
            assert!(phi.is_bijective());
            assert_eq!(phi.classes.len() as u32, n.div_ceil(2));
        }
    }

    #[test]
    fn zero_parameters() {
        let sys = SpinSystem::new(RootType::I2(6)).unwrap();
        let phi = compute(&sys, &constant(&sys, 0)).unwrap();
        assert!(phi.violations.is_empty(), "{:?}", phi.violations);
        assert!(phi.verdicts.surjective && !phi.verdicts.injective);
    }

    #[test]
    fn cos_scan_small_cases() {
        assert!(bijectivity_condition(4, &rat(1, 1), &rat(1, 1)).holds);
        assert!(!bijectivity_condition(6, &rat(0, 1), &rat(1, 1)).holds);
    }

    #[test]
    fn closed_sums() {
        for n in [3u32, 5, 8] {
            for q in 1..(2 * n as i64) {
                for a in 1..6 {
                    assert_eq!(cos_sum_closed(a, q, n).unwrap(), cos_sum_direct(a, q, n));
                    assert_eq!(weighted_cos_sum_closed(a, q, n).unwrap(), weighted_cos_sum_direct(a, q, n));
                }
            }
        }
    }
}
