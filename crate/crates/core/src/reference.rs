//! Published closed forms and tables for the noncrystallographic types, and
//! routines that locate them inside the computed character tables.

use std::fmt;

use crate::chartab;
use crate::rootsys::{ParameterFunction, RootType};
use crate::scalars::{rat, Cyclo, CycloReal, Rational};
use crate::system::SpinSystem;
use crate::Error;

pub fn tau() -> CycloReal {
    CycloReal::golden()
}

pub fn tau_bar() -> CycloReal {
    CycloReal::golden_conj()
}

/// p·τ + q·τ̄.
pub fn golden_combination(p: Rational, q: Rational) -> CycloReal {
    CycloReal::from_rational(&p) * tau() + CycloReal::from_rational(&q) * tau_bar()
}

fn int(n: i64) -> CycloReal {
    CycloReal::from_int(n)
}

/// An element of the dihedral double cover: (f₁f₂)^k, or an odd element sorted
/// by whether it is conjugate to f₁.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralElement {
    Rotation(i64),
    Reflection { like_first: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralLabel {
    Trivial,
    Sign,
    /// n even: −1 on f₁ (first) or on f₂ (second).
    SignFirst,
    SignSecond,
    Phi(u32),
    /// n odd: the linear genuine characters, χ̃₁(f₁) = −i.
    Chi1,
    Chi2,
    Rho(u32),
}

impl fmt::Display for DihedralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralLabel::Trivial => f.write_str("triv"),
            DihedralLabel::Sign => f.write_str("sgn"),
            DihedralLabel::SignFirst => f.write_str("sigma_1"),
            DihedralLabel::SignSecond => f.write_str("sigma_2"),
            DihedralLabel::Phi(i) => write!(f, "phi_{i}"),
            DihedralLabel::Chi1 => f.write_str("chi~_1"),
            DihedralLabel::Chi2 => f.write_str("chi~_2"),
            DihedralLabel::Rho(i) => write!(f, "rho~_{i}"),
        }
    }
}

impl DihedralLabel {
    pub fn is_genuine(self) -> bool {
        matches!(self, DihedralLabel::Chi1 | DihedralLabel::Chi2 | DihedralLabel::Rho(_))
    }
}

pub fn dihedral_labels(n: u32) -> Vec<DihedralLabel> {
    let mut out = vec![DihedralLabel::Trivial, DihedralLabel::Sign];
    if n % 2 == 1 {
        out.extend((1..=(n - 1) / 2).map(DihedralLabel::Phi));
        out.extend([DihedralLabel::Chi1, DihedralLabel::Chi2]);
        out.extend((1..=(n - 1) / 2).map(DihedralLabel::Rho));
    } else {
        out.extend([DihedralLabel::SignFirst, DihedralLabel::SignSecond]);
        out.extend((1..=(n - 2) / 2).map(DihedralLabel::Phi));
        out.extend((1..=n / 2).map(DihedralLabel::Rho));
    }
    out
}

/// Closed-form character value; valid for every integer rotation exponent.
pub fn dihedral_value(n: u32, label: DihedralLabel, x: DihedralElement) -> Cyclo {
    let parity = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
    let twice_cos = |k: i64| (CycloReal::make_cos(k, n) * int(2)).into_cyclo();
    let i = Cyclo::zeta(4, 1);
    match (label, x) {
        (DihedralLabel::Trivial, _) => Cyclo::one(),
        (DihedralLabel::Sign, DihedralElement::Rotation(_)) => Cyclo::one(),
        (DihedralLabel::Sign, DihedralElement::Reflection { .. }) => Cyclo::from_int(-1),
        (DihedralLabel::SignFirst | DihedralLabel::SignSecond, DihedralElement::Rotation(k)) => Cyclo::from_int(parity(k)),
        (DihedralLabel::SignFirst, DihedralElement::Reflection { like_first }) => Cyclo::from_int(if like_first { -1 } else { 1 }),
        (DihedralLabel::SignSecond, DihedralElement::Reflection { like_first }) => Cyclo::from_int(if like_first { 1 } else { -1 }),
        (DihedralLabel::Phi(j), DihedralElement::Rotation(k)) => twice_cos(2 * j as i64 * k),
        (DihedralLabel::Chi1 | DihedralLabel::Chi2, DihedralElement::Rotation(k)) => Cyclo::from_int(parity(k)),
        (DihedralLabel::Chi1, DihedralElement::Reflection { like_first }) => if like_first { -i } else { i },
        (DihedralLabel::Chi2, DihedralElement::Reflection { like_first }) => if like_first { i } else { -i },
        (DihedralLabel::Rho(j), DihedralElement::Rotation(k)) if n % 2 == 1 => {
            twice_cos(2 * j as i64 * k).scale(&rat(parity(k), 1))
        }
        (DihedralLabel::Rho(j), DihedralElement::Rotation(k)) => twice_cos((2 * j as i64 - 1) * k),
        (DihedralLabel::Phi(_) | DihedralLabel::Rho(_), DihedralElement::Reflection { .. }) => Cyclo::zero(),
    }
}

/// The dihedral form of every class representative of W̃(I2(n)).
pub fn dihedral_classes(sys: &SpinSystem) -> Result<Vec<DihedralElement>, Error> {
    let RootType::I2(n) = sys.kind() else {
        return Err(Error::Unsupported(format!("{} is not dihedral", sys.kind())));
    };
    let cover = sys.cover()?;
    let g = cover.group();
    let simple = sys.root_system().simple();
    let f1 = cover.f_index(simple[0]);
    // For even n the presentation admits f₂ ↦ −f₂, which swaps ρ̃_i and ρ̃_{n/2+1−i};
    // labels are attached through the lift pair (f₁, −f₂).
    let f2 = cover.f_index(simple[1]);
    let rotation = g.mul(f1, if n % 2 == 0 { cover.negate(f2) } else { f2 });
    let powers: Vec<usize> = (0..2 * n as usize).map(|k| g.pow(rotation, k)).collect();
    let first_class = g.class_of(f1);
    g.classes()
        .iter()
        .map(|c| {
            if cover.is_even(c.rep) {
                let k = powers.iter().position(|&p| p == c.rep).ok_or_else(|| Error::Consistency("even element is not a rotation".into()))?;
                Ok(DihedralElement::Rotation(k as i64))
            } else {
                Ok(DihedralElement::Reflection { like_first: g.class_of(c.rep) == first_class })
            }
        })
        .collect()
}

/// Every closed-form row paired with the computed W̃ row equal to it.
pub fn match_dihedral(sys: &SpinSystem) -> Result<Vec<(DihedralLabel, usize)>, String> {
    let RootType::I2(n) = sys.kind() else {
        return Err(format!("{} is not dihedral", sys.kind()));
    };
    let elements = dihedral_classes(sys).map_err(|e| e.to_string())?;
    let ct = sys.cover_table().map_err(|e| e.to_string())?;
    let labels = dihedral_labels(n);
    if labels.len() != ct.table.num_chars() {
        return Err(format!("{} closed-form rows against {} characters", labels.len(), ct.table.num_chars()));
    }
    let reference: Vec<chartab::ClassFunction> =
        labels.iter().map(|&l| elements.iter().map(|&x| dihedral_value(n, l, x)).collect()).collect();
    let columns: Vec<usize> = (0..elements.len()).collect();
    let rows = chartab::match_rows(&ct.table, &columns, &reference)?;
    Ok(labels.into_iter().zip(rows).collect())
}

/// a(χ) of a genuine dihedral row at constant parameter c, n odd.
pub fn dihedral_odd_a_value(n: u32, label: DihedralLabel, c: &Rational) -> Option<CycloReal> {
    let c2 = CycloReal::from_rational(&(c * c));
    match label {
        DihedralLabel::Chi1 | DihedralLabel::Chi2 => Some(c2 * CycloReal::from_ratio(1, 2)),
        DihedralLabel::Rho(i) => {
            let s = CycloReal::make_sin(n as i64 - 2 * i as i64, 2 * n);
            (c2 * CycloReal::from_ratio(1, 2)).try_div(&(&s * &s)).ok()
        }
        _ => None,
    }
}

/// Coefficients (c₁², c₂², c₁c₂) of a(ρ̃_i) for n even.
pub fn dihedral_even_coefficients(n: u32, i: u32) -> [CycloReal; 3] {
    let theta = 2 * i as i64 - 1;
    let s = CycloReal::make_sin(theta, n);
    let s2 = &s * &s;
    let square = CycloReal::from_ratio(1, 2).try_div(&s2).expect("sin ≠ 0");
    let mixed = (-CycloReal::make_cos(theta, n)).try_div(&s2).expect("sin ≠ 0");
    [square.clone(), square, mixed]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IcosahedralLabel {
    Two,
    TwoBar,
    Six,
    Four,
}

impl fmt::Display for IcosahedralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IcosahedralLabel::Two => "chi~_2",
            IcosahedralLabel::TwoBar => "chi~bar_2",
            IcosahedralLabel::Six => "chi~_6",
            IcosahedralLabel::Four => "chi~_4",
        })
    }
}

/// A genuine H3 row restricted to ⟨f₁f₂, f₂f₃⟩: values on
/// 1, f₁f₂, (f₁f₂)², f₂f₃, f₁f₃, and the solvable point its a-value equals (c ≡ 1).
pub struct IcosahedralRow {
    pub label: IcosahedralLabel,
    pub values: [CycloReal; 5],
    pub point: usize,
}

pub fn h3_genuine_rows() -> Vec<IcosahedralRow> {
    use IcosahedralLabel::*;
    vec![
        IcosahedralRow { label: Two, values: [int(2), tau_bar(), -tau(), int(1), int(0)], point: 4 },
        IcosahedralRow { label: TwoBar, values: [int(2), tau(), -tau_bar(), int(1), int(0)], point: 1 },
        IcosahedralRow { label: Six, values: [int(6), int(-1), int(1), int(0), int(0)], point: 2 },
        IcosahedralRow { label: Four, values: [int(4), int(1), int(-1), int(-1), int(0)], point: 3 },
    ]
}

/// The nine elements ±1, ±f₁f₂, ±(f₁f₂)², ±f₂f₃, f₁f₃ of W̃(H3) as group indices,
/// paired with (position in the fixture row, sign).
fn icosahedral_columns(sys: &SpinSystem) -> Result<Vec<(usize, usize, i64)>, Error> {
    let cover = sys.cover()?;
    let g = cover.group();
    let simple = sys.root_system().simple();
    let f: Vec<usize> = simple.iter().map(|&a| cover.f_index(a)).collect();
    let f12 = g.mul(f[0], f[1]);
    let base = [0, f12, g.mul(f12, f12), g.mul(f[1], f[2]), g.mul(f[0], f[2])];
    let mut out = Vec::new();
    for (pos, &x) in base.iter().enumerate() {
        out.push((x, pos, 1));
        if pos < 4 {
            out.push((cover.negate(x), pos, -1));
        }
    }
    Ok(out)
}

/// For each fixture row, the two computed genuine rows restricting to it.
pub fn match_h3(sys: &SpinSystem) -> Result<Vec<(IcosahedralLabel, Vec<usize>)>, String> {
    if sys.kind() != RootType::H3 {
        return Err("expected H3".into());
    }
    let ct = sys.cover_table().map_err(|e| e.to_string())?;
    let g = sys.cover().map_err(|e| e.to_string())?.group();
    let cols = icosahedral_columns(sys).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    let mut used = Vec::new();
    for row in h3_genuine_rows() {
        let hits: Vec<usize> = ct
            .genuine
            .iter()
            .copied()
            .filter(|&i| {
                cols.iter().all(|&(x, pos, sign)| {
                    ct.table.char(i)[g.class_of(x)] == (row.values[pos].clone() * int(sign)).into_cyclo()
                })
            })
            .collect();
        if hits.len() != 2 {
            return Err(format!("{} restricts from {} genuine rows, expected 2", row.label, hits.len()));
        }
        used.extend(hits.iter().copied());
        out.push((row.label, hits));
    }
    used.sort_unstable();
    used.dedup();
    if used.len() != ct.genuine.len() {
        return Err("the fixture rows do not exhaust the genuine characters".into());
    }
    Ok(out)
}

/// A published solvable point at c ≡ 1: coords are divided by `scale`.
pub struct PointFixture {
    pub index: usize,
    pub scale: CycloReal,
    pub numerators: Vec<CycloReal>,
    pub norm: CycloReal,
}

impl PointFixture {
    pub fn coords(&self) -> Vec<CycloReal> {
        let inv = self.scale.inv().expect("nonzero scale");
        self.numerators.iter().map(|x| x * &inv).collect()
    }
}

/// a + b·τ.
fn gold(a: i64, b: i64) -> CycloReal {
    int(a) + int(b) * tau()
}

fn halves(p: i64, q: i64) -> CycloReal {
    golden_combination(rat(p, 2), rat(q, 2))
}

fn point(index: usize, scale: CycloReal, numerators: [(i64, i64); 4], rank: usize, norm: CycloReal) -> PointFixture {
    let numerators = numerators[..rank].iter().map(|&(a, b)| gold(a, b)).collect();
    PointFixture { index, scale, numerators, norm }
}

pub fn h3_points() -> Vec<PointFixture> {
    let z = (0, 0);
    vec![
        point(1, gold(1, 0), [(1, 0), (1, 0), (1, 0), z], 3, halves(43, 19)),
        point(2, gold(1, 1), [(1, 0), (1, 0), (0, 1), z], 3, CycloReal::from_ratio(11, 2)),
        point(3, gold(1, 1), [(1, 0), (1, 0), (1, 1), z], 3, int(8)),
        point(4, gold(2, 3), [(1, 1), (0, 1), (1, 0), z], 3, halves(19, 43)),
    ]
}

pub fn h4_points() -> Vec<PointFixture> {
    let (one, t, z) = ((1, 0), (0, 1), (0, 0));
    let g = |p: i64, q: i64| golden_combination(rat(p, 1), rat(q, 1));
    vec![
        point(1, gold(1, 0), [one, one, one, one], 4, g(238, 94)),
        point(2, gold(1, 1), [one, one, t, one], 4, g(48, 24)),
        point(3, gold(1, 1), [one, one, t, (1, 1)], 4, g(64, 28)),
        point(4, gold(1, 1), [one, one, (1, 1), (1, 1)], 4, g(90, 42)),
        point(5, gold(2, 3), [(1, 1), t, one, (1, 2)], 4, int(30)),
        point(6, gold(2, 3), [(1, 1), t, one, (1, 3)], 4, int(36)),
        point(7, gold(2, 3), [(1, 1), t, one, (2, 3)], 4, int(40)),
        point(8, gold(3, 5), [(1, 2), one, t, t], 4, g(42, 90)),
        point(9, gold(2, 4), [one, t, t, one], 4, CycloReal::from_ratio(17, 2)),
        point(10, gold(2, 3), [one, one, t, one], 4, g(24, 48)),
        point(11, gold(3, 5), [t, t, one, t], 4, g(28, 64)),
        point(12, gold(5, 8), [one, (1, 2), one, t], 4, g(94, 238)),
        point(13, gold(1, 2), [z, one, t, t], 4, int(16)),
        point(14, gold(2, 3), [z, t, t, one], 4, g(18, 34)),
        point(15, gold(1, 1), [one, one, z, (1, 1)], 4, g(34, 18)),
        point(16, gold(1, 2), [z, one, t, z], 4, int(10)),
        point(17, gold(1, 1), [z, one, z, z], 4, int(6)),
    ]
}

/// A published genuine H4 row: dimension, values at −f₁f₂, −(f₁f₂)², −f₂f₃,
/// and the point whose norm is its a-value (c ≡ 1).
pub struct H4Row {
    pub label: u32,
    pub dim: usize,
    pub values: [CycloReal; 3],
    pub point: usize,
}

pub fn h4_rows() -> Vec<H4Row> {
    let (t, tb) = (tau(), tau_bar());
    let two = |x: &CycloReal| x * &int(2);
    let row = |label, dim, values: [CycloReal; 3], point| H4Row { label, dim, values, point };
    vec![
        row(35, 4, [-two(&tb), two(&t), int(-2)], 12),
        row(36, 4, [-two(&t), two(&tb), int(-2)], 1),
        row(37, 12, [int(2), int(-2), int(0)], 17),
        row(38, 8, [int(-2), int(2), int(2)], 13),
        row(39, 16, [two(&tb), -two(&t), int(-2)], 3),
        row(40, 16, [two(&t), -two(&tb), int(-2)], 11),
        row(41, 48, [int(-2), int(2), int(0)], 6),
        row(42, 32, [int(2), int(-2), int(2)], 9),
        row(43, 12, [int(2), int(-2), int(0)], 17),
        row(44, 12, [int(2), int(-2), int(0)], 17),
        row(45, 12, [-two(&(&t * &t)), two(&(&tb * &tb)), int(0)], 4),
        row(46, 12, [-two(&(&tb * &tb)), two(&(&t * &t)), int(0)], 8),
        row(47, 36, [two(&tb), -two(&t), int(0)], 15),
        row(48, 36, [two(&t), -two(&tb), int(0)], 14),
        row(49, 24, [-two(&t), two(&tb), int(0)], 2),
        row(50, 24, [-two(&tb), two(&t), int(0)], 10),
        row(51, 20, [int(0), int(0), int(2)], 16),
        row(52, 20, [int(0), int(0), int(2)], 16),
        row(53, 60, [int(0), int(0), int(0)], 5),
        row(54, 40, [int(0), int(0), int(-2)], 7),
    ]
}

/// Class indices of −f₁f₂, −(f₁f₂)², −f₂f₃ in W̃.
pub fn published_columns(sys: &SpinSystem) -> Result<[usize; 3], Error> {
    let cover = sys.cover()?;
    let g = cover.group();
    let simple = sys.root_system().simple();
    let f: Vec<usize> = simple.iter().map(|&a| cover.f_index(a)).collect();
    let f12 = g.mul(f[0], f[1]);
    let minus = |x| g.class_of(cover.negate(x));
    Ok([minus(f12), minus(g.mul(f12, f12)), minus(g.mul(f[1], f[2]))])
}

/// Every published H4 row paired with a computed genuine row agreeing in
/// dimension, the three published values, and the a-value at c ≡ 1. Rows
/// sharing all of these are matched as a set.
pub fn match_h4(sys: &SpinSystem, a_values: &[(usize, CycloReal)]) -> Result<Vec<(u32, usize)>, String> {
    if sys.kind() != RootType::H4 {
        return Err("expected H4".into());
    }
    let ct = sys.cover_table().map_err(|e| e.to_string())?;
    let cols = published_columns(sys).map_err(|e| e.to_string())?;
    let norms = h4_points();
    let rows = h4_rows();
    let reference: Vec<chartab::ClassFunction> = rows
        .iter()
        .map(|r| {
            let mut v = vec![Cyclo::from_int(r.dim as i64), Cyclo::from_int(-(r.dim as i64))];
            v.extend(r.values.iter().map(|x| x.as_cyclo().clone()));
            v
        })
        .collect();
    let mut columns = vec![0, ct.minus_one_class];
    columns.extend(cols);
    let matched = chartab::match_rows(&ct.table, &columns, &reference)?;
    for (r, &row) in rows.iter().zip(&matched) {
        if !ct.genuine.contains(&row) {
            return Err(format!("chi~_{} matched a non-genuine row", r.label));
        }
        let a = a_values.iter().find(|(i, _)| *i == row).map(|(_, a)| a);
        if a != Some(&norms[r.point - 1].norm) {
            return Err(format!("chi~_{}: a-value differs from the norm of gamma_{}", r.label, r.point));
        }
    }
    Ok(rows.iter().map(|r| r.label).zip(matched).collect())
}

/// Angle census of pairs (α, β), α ≠ β, with s_α(β) < 0: (angle as kπ/d, count).
pub fn angle_census(kind: RootType) -> Option<[((u32, u32), usize); 3]> {
    match kind {
        RootType::H3 => Some([((1, 5), 36), ((2, 5), 12), ((1, 3), 20)]),
        RootType::H4 => Some([((1, 5), 432), ((2, 5), 144), ((1, 3), 400)]),
        RootType::I2(_) => None,
    }
}

/// Constant parameter function c ≡ 1.
pub fn unit_parameters(sys: &SpinSystem) -> ParameterFunction {
    ParameterFunction::constant(sys.root_system(), rat(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi;

    #[test]
    fn dihedral_tables_match() {
        for n in 3..=9 {
            let sys = SpinSystem::new(RootType::I2(n)).unwrap();
            let m = match_dihedral(&sys).unwrap();
            assert_eq!(m.len() as u32, n + 3);
        }
    }

    #[test]
    fn icosahedral_rows_match() {
        let sys = SpinSystem::new(RootType::H3).unwrap();
        assert_eq!(match_h3(&sys).unwrap().len(), 4);
    }

    #[test]
    fn dihedral_a_values() {
        let n = 7;
        let sys = SpinSystem::new(RootType::I2(n)).unwrap();
        let labels = match_dihedral(&sys).unwrap();
        let c = rat(3, 2);
        let values = phi::a_values(&sys, &ParameterFunction::constant(sys.root_system(), c.clone())).unwrap();
        for (label, row) in labels.into_iter().filter(|(l, _)| l.is_genuine()) {
            let a = values.iter().find(|v| v.row == row).unwrap();
            assert_eq!(Some(a.value.clone()), dihedral_odd_a_value(n, label, &c), "{label}");
        }
    }
}
