//! The full verification suite, one entry per checked statement.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::elliptic;
use crate::phi;
use crate::points::PointSpace;
use crate::reference::{self, DihedralLabel, IcosahedralLabel};
use crate::rootsys::{ParameterFunction, RootType};
use crate::scalars::{rat, Cyclo, CycloReal, Rational};
use crate::system::SpinSystem;
use crate::Error;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    /// Failed sub-checks, or a short summary when everything held.
    pub detail: String,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!("[{}] {:>2}. {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.title, self.detail)
    }
}

/// Shared systems so each group and table is built once per run.
#[derive(Default)]
pub struct Context {
    systems: Mutex<HashMap<RootType, Arc<SpinSystem>>>,
}

impl Context {
    pub fn system(&self, kind: RootType) -> Result<Arc<SpinSystem>, Error> {
        let mut map = self.systems.lock().expect("system cache lock");
        if let Some(s) = map.get(&kind) {
            return Ok(s.clone());
        }
        let s = Arc::new(SpinSystem::new(kind)?);
        map.insert(kind, s.clone());
        Ok(s)
    }
}

/// Collects failures of one criterion.
struct Checks {
    failures: Vec<String>,
    count: usize,
}

impl Checks {
    fn new() -> Checks {
        Checks { failures: Vec::new(), count: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        self.count += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, expected {want:?}", what()));
        }
    }

    fn result<T>(&mut self, r: Result<T, impl std::fmt::Display>, what: impl FnOnce() -> String) -> Option<T> {
        self.count += 1;
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(self, id: u32, title: &'static str) -> Outcome {
        let passed = self.failures.is_empty();
        let detail = if passed { format!("{} checks", self.count) } else { self.failures.join("; ") };
        Outcome { id, title: title.to_string(), passed, detail }
    }
}

pub const TITLES: [&str; 14] = [
    "group orders",
    "double-cover relations",
    "centrality of Omega",
    "dihedral and icosahedral character tables",
    "H4 cover character table",
    "a-values",
    "solvable points",
    "Phi verdicts",
    "zero parameters",
    "elliptic counts and radical",
    "spin modules",
    "isometry and image of the spin map",
    "dihedral orthonormal basis",
    "spin difference lemma",
];

pub fn run(ctx: &Context, id: u32) -> Outcome {
    let mut c = Checks::new();
    match id {
        1 => group_orders(ctx, &mut c),
        2 => relations(ctx, &mut c),
        3 => centrality(ctx, &mut c),
        4 => small_tables(ctx, &mut c),
        5 => h4_table(ctx, &mut c),
        6 => a_values(ctx, &mut c),
        7 => solvable_points(ctx, &mut c),
        8 => phi_verdicts(ctx, &mut c),
        9 => zero_parameters(ctx, &mut c),
        10 => elliptic_counts(ctx, &mut c),
        11 => spin_modules(ctx, &mut c),
        12 => isometry(ctx, &mut c),
        13 => orthonormal(ctx, &mut c),
        14 => lemma(ctx, &mut c),
        _ => c.check(false, || format!("no criterion {id}")),
    }
    c.finish(id, TITLES.get(id as usize - 1).copied().unwrap_or("unknown"))
}

pub fn run_all(ctx: &Context) -> Vec<Outcome> {
    (1..=TITLES.len() as u32).map(|id| run(ctx, id)).collect()
}

fn dihedral(range: std::ops::RangeInclusive<u32>) -> impl Iterator<Item = RootType> {
    range.map(RootType::I2)
}

fn all_types(range: std::ops::RangeInclusive<u32>) -> impl Iterator<Item = RootType> {
    dihedral(range).chain([RootType::H3, RootType::H4])
}

fn constant(sys: &SpinSystem, c: i64) -> ParameterFunction {
    ParameterFunction::constant(sys.root_system(), rat(c, 1))
}

fn pair(sys: &SpinSystem, a: i64, b: i64) -> ParameterFunction {
    ParameterFunction::per_orbit(sys.root_system(), vec![rat(a, 1), rat(b, 1)]).expect("two root orbits")
}

fn group_orders(ctx: &Context, c: &mut Checks) {
    for kind in all_types(3..=15) {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let (w, wt) = match kind {
            RootType::I2(n) => (2 * n as usize, 4 * n as usize),
            RootType::H3 => (120, 240),
            RootType::H4 => (14400, 28800),
        };
        c.eq(sys.weyl().order(), w, || format!("|W({kind})|"));
        if let Some(cover) = c.result(sys.cover(), || format!("cover of {kind}")) {
            c.eq(cover.order(), wt, || format!("|W~({kind})|"));
        }
    }
}

fn relations(ctx: &Context, c: &mut Checks) {
    for kind in dihedral(3..=15) {
        let RootType::I2(n) = kind else { unreachable!() };
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(cover) = c.result(sys.cover(), || format!("cover of {kind}")) else { continue };
        let g = cover.group();
        let simple = sys.root_system().simple();
        let (f1, f2) = (cover.f_index(simple[0]), cover.f_index(simple[1]));
        let m = cover.minus_one();
        c.eq(g.pow(g.mul(f1, f2), n as usize), m, || format!("{kind}: (f1 f2)^n"));
        c.eq(g.mul(f1, f1), m, || format!("{kind}: f1^2"));
        c.eq(g.mul(f2, f2), m, || format!("{kind}: f2^2"));
    }
    let Some(sys) = c.result(ctx.system(RootType::H3), || "H3".into()) else { return };
    let Some(cover) = c.result(sys.cover(), || "cover of H3".into()) else { return };
    let g = cover.group();
    let lift = cover.lift(sys.weyl().longest());
    let central = (0..g.num_generators()).all(|i| g.mul(lift, g.generator(i)) == g.mul(g.generator(i), lift));
    c.check(central, || "H3: the lift of w0 is not central".into());
    let square = g.mul(lift, lift);
    c.check(square == cover.minus_one(), || {
        format!("H3: lift of w0 squares to {}, expected -1", if square == 0 { "+1" } else { "another element" })
    });
}

fn centrality(ctx: &Context, c: &mut Checks) {
    for kind in all_types(3..=12) {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(cover) = c.result(sys.cover(), || format!("cover of {kind}")) else { continue };
        let mut params = vec![("c=1", constant(&sys, 1)), ("c=2", constant(&sys, 2))];
        if matches!(kind, RootType::I2(n) if n % 2 == 0) {
            params.push(("(1,3)", pair(&sys, 1, 3)));
        }
        let g = cover.group();
        for (name, p) in params {
            let omega = cover.omega(&p);
            c.check(omega.is_central(), || format!("{kind} {name}: Omega does not commute with the generators"));
            // the group-algebra form must be constant on conjugacy classes
            let coeff: HashMap<usize, &Rational> = omega.terms.iter().map(|(x, q)| (*x, q)).collect();
            let class_constant = omega.terms.iter().all(|(x, q)| {
                (0..g.num_generators()).all(|i| coeff.get(&g.conj(*x, g.generator(i))) == Some(&q))
            });
            c.check(class_constant, || format!("{kind} {name}: Omega is not a class sum combination"));
        }
    }
}

fn small_tables(ctx: &Context, c: &mut Checks) {
    for kind in dihedral(3..=9) {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        c.result(reference::match_dihedral(&sys), || format!("{kind} closed-form table"));
    }
    if let Some(sys) = c.result(ctx.system(RootType::H3), || "H3".into()) {
        c.result(reference::match_h3(&sys), || "H3 genuine rows".into());
    }
}

fn h4_table(ctx: &Context, c: &mut Checks) {
    let Some(sys) = c.result(ctx.system(RootType::H4), || "H4".into()) else { return };
    let Some(ct) = c.result(sys.cover_table(), || "H4 cover table".into()) else { return };
    let t = &ct.table;
    let n = t.num_chars();
    c.eq(n, t.num_classes(), || "rows against classes".into());
    let orthonormal = (0..n).all(|i| (0..n).all(|j| t.inner(t.char(i), t.char(j)) == Cyclo::from_int(i64::from(i == j))));
    c.check(orthonormal, || "row orthogonality".into());
    // column orthogonality: Σ_χ |χ(g)|² = |C_G(g)|
    let columns_ok = (0..t.num_classes()).all(|k| {
        let s: Cyclo = (0..n).map(|i| &t.char(i)[k] * &t.char(i)[k].conj()).sum();
        s == Cyclo::from_int((t.order() / t.class_sizes()[k]) as i64)
    });
    c.check(columns_ok, || "column orthogonality".into());
    c.eq((0..n).map(|i| t.dim(i) * t.dim(i)).sum::<usize>(), 28800, || "sum of squared degrees".into());
    let mut dims: Vec<usize> = ct.genuine.iter().map(|&i| t.dim(i)).collect();
    dims.sort_unstable();
    let mut want = vec![4, 4, 12, 8, 16, 16, 48, 32, 12, 12, 12, 12, 36, 36, 24, 24, 20, 20, 60, 40];
    want.sort_unstable();
    c.eq(dims, want, || "genuine degrees".into());
}

fn a_values(ctx: &Context, c: &mut Checks) {
    // I2 odd against the closed forms, at two parameter values
    for kind in dihedral(3..=15).filter(|k| matches!(k, RootType::I2(n) if n % 2 == 1)) {
        let RootType::I2(n) = kind else { unreachable!() };
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(labels) = c.result(reference::match_dihedral(&sys), || format!("{kind} labels")) else { continue };
        for value in [rat(1, 1), rat(3, 2)] {
            let p = ParameterFunction::constant(sys.root_system(), value.clone());
            let Some(av) = c.result(phi::a_values(&sys, &p), || format!("{kind} a-values")) else { continue };
            for &(label, row) in labels.iter().filter(|(l, _)| l.is_genuine()) {
                let got = av.iter().find(|a| a.row == row).map(|a| a.value.clone());
                c.eq(got, reference::dihedral_odd_a_value(n, label, &value), || format!("{kind} a({label}) at c={value}"));
            }
        }
    }
    // I2 even: coefficients of c1², c2², c1c2
    for n in [4u32, 6, 8, 10, 12] {
        let kind = RootType::I2(n);
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(labels) = c.result(reference::match_dihedral(&sys), || format!("{kind} labels")) else { continue };
        let eval = |a, b| phi::a_values(&sys, &pair(&sys, a, b));
        let (Some(x), Some(y), Some(xy)) = (
            c.result(eval(1, 0), || format!("{kind} a at (1,0)")),
            c.result(eval(0, 1), || format!("{kind} a at (0,1)")),
            c.result(eval(1, 1), || format!("{kind} a at (1,1)")),
        ) else {
            continue;
        };
        for &(label, row) in &labels {
            let DihedralLabel::Rho(i) = label else { continue };
            let get = |v: &[phi::AValue]| v.iter().find(|a| a.row == row).map(|a| a.value.clone()).unwrap_or_default();
            let (sq1, sq2) = (get(&x), get(&y));
            let mixed = get(&xy) - &sq1 - &sq2;
            c.eq([sq1, sq2, mixed], reference::dihedral_even_coefficients(n, i), || format!("{kind} coefficients of a({label})"));
        }
    }
    // H3 through the icosahedral labels
    if let Some(sys) = c.result(ctx.system(RootType::H3), || "H3".into()) {
        let points = reference::h3_points();
        if let (Some(labels), Some(av)) = (
            c.result(reference::match_h3(&sys), || "H3 labels".into()),
            c.result(phi::a_values(&sys, &constant(&sys, 1)), || "H3 a-values".into()),
        ) {
            for (label, rows) in labels {
                let want = reference::h3_genuine_rows().into_iter().find(|r| r.label == label).map(|r| r.point).unwrap_or(0);
                for row in rows {
                    let got = av.iter().find(|a| a.row == row).map(|a| a.value.clone());
                    c.eq(got, Some(points[want - 1].norm.clone()), || format!("H3 a({label}) against gamma_{want}"));
                }
            }
        }
    }
    // H4: multiset and the published labels
    if let Some(sys) = c.result(ctx.system(RootType::H4), || "H4".into()) {
        if let Some(av) = c.result(phi::a_values(&sys, &constant(&sys, 1)), || "H4 a-values".into()) {
            let points = reference::h4_points();
            let mut want: Vec<CycloReal> = points.iter().map(|p| p.norm.clone()).collect();
            want.push(points[15].norm.clone());
            want.extend([points[16].norm.clone(), points[16].norm.clone()]);
            want.sort();
            let mut got: Vec<CycloReal> = av.iter().map(|a| a.value.clone()).collect();
            got.sort();
            c.eq(got, want, || "H4 a-value multiset".into());
            let pairs: Vec<(usize, CycloReal)> = av.into_iter().map(|a| (a.row, a.value)).collect();
            c.result(reference::match_h4(&sys, &pairs), || "H4 published rows".into());
        }
    }
}

fn solvable_points(ctx: &Context, c: &mut Checks) {
    for kind in dihedral(3..=15) {
        let RootType::I2(n) = kind else { unreachable!() };
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(space) = c.result(PointSpace::new(sys.root_system()), || format!("{kind} points")) else { continue };
        let params: Vec<(Rational, Rational)> =
            if n % 2 == 1 { vec![(rat(1, 1), rat(1, 1))] } else { vec![(rat(1, 1), rat(1, 1)), (rat(1, 1), rat(2, 1)), (rat(2, 1), rat(3, 1))] };
        for (c1, c2) in params {
            let p = if n % 2 == 1 {
                ParameterFunction::constant(sys.root_system(), c1.clone())
            } else {
                ParameterFunction::per_orbit(sys.root_system(), vec![c1.clone(), c2.clone()]).expect("two root orbits")
            };
            let name = format!("{kind} at {}", crate::report::params_text(&p).join(","));
            let pts = space.solvable_points(&p);
            let mut got: Vec<CycloReal> = pts.iter().map(|q| q.norm2.clone()).collect();
            got.sort();
            let mut want: Vec<CycloReal> = if n % 2 == 1 {
                (1..=(n as i64 + 1) / 2).map(|k| dihedral_odd_norm(n, k, &c1)).collect()
            } else {
                (1..=n as i64 / 2).map(|k| dihedral_even_norm(n, k, &c1, &c2)).collect()
            };
            want.sort();
            c.eq(got, want, || format!("{name}: norms"));
            let distinguished = pts.iter().filter(|q| q.distinguished).count();
            let want_distinguished = if n % 2 == 1 { (n as usize - 1) / 2 } else { n as usize / 2 };
            c.eq(distinguished, want_distinguished, || format!("{name}: distinguished orbits"));
        }
    }
    for (kind, fixtures) in [(RootType::H3, reference::h3_points()), (RootType::H4, reference::h4_points())] {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(space) = c.result(PointSpace::new(sys.root_system()), || format!("{kind} points")) else { continue };
        let pts = space.solvable_points(&constant(&sys, 1));
        c.eq(pts.len(), fixtures.len(), || format!("{kind} orbit count"));
        c.check(pts.iter().all(|p| p.distinguished), || format!("{kind}: a solvable point is not distinguished"));
        for f in &fixtures {
            let hit = pts.iter().find(|p| p.coords == f.coords());
            c.check(hit.is_some(), || format!("{kind} gamma_{} not found", f.index));
            if let Some(p) = hit {
                c.eq(&p.norm2, &f.norm, || format!("{kind} norm of gamma_{}", f.index));
            }
        }
    }
}

/// c²/(2sin²((2k−1)π/2n)).
fn dihedral_odd_norm(n: u32, k: i64, c: &Rational) -> CycloReal {
    let s = CycloReal::make_sin(2 * k - 1, 2 * n);
    (CycloReal::from_rational(&(c * c)) * CycloReal::from_ratio(1, 2)).try_div(&(&s * &s)).expect("sin ≠ 0")
}

/// (c₁² − 2c₁c₂cos θ + c₂²)/(2sin²θ) with θ = (n−2k+1)π/n.
fn dihedral_even_norm(n: u32, k: i64, c1: &Rational, c2: &Rational) -> CycloReal {
    let theta = n as i64 - 2 * k + 1;
    let (cos, sin) = (CycloReal::make_cos(theta, n), CycloReal::make_sin(theta, n));
    let num = CycloReal::from_rational(&(c1 * c1 + c2 * c2)) - CycloReal::from_rational(&(c1 * c2 * rat(2, 1))) * cos;
    num.try_div(&(&sin * &sin * CycloReal::from_int(2))).expect("sin ≠ 0")
}

fn phi_verdicts(ctx: &Context, c: &mut Checks) {
    let run = |c: &mut Checks, sys: &SpinSystem, p: &ParameterFunction, name: String| -> Option<phi::PhiMap> {
        let map = c.result(phi::compute(sys, p), || name.clone())?;
        c.check(map.violations.is_empty(), || format!("{name}: {}", map.violations.join(", ")));
        c.check(map.verdicts.surjective, || format!("{name}: not surjective"));
        Some(map)
    };
    for kind in dihedral(3..=15).filter(|k| matches!(k, RootType::I2(n) if n % 2 == 1)).chain([RootType::H3]) {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        if let Some(m) = run(c, &sys, &constant(&sys, 1), format!("{kind} c=1")) {
            c.check(m.is_bijective(), || format!("{kind}: Phi not bijective"));
        }
    }
    if let Some(sys) = c.result(ctx.system(RootType::H4), || "H4".into()) {
        if let Some(m) = run(c, &sys, &constant(&sys, 1), "H4 c=1".into()) {
            c.check(!m.verdicts.injective, || "H4: Phi injective".into());
            let points = reference::h4_points();
            let label = |orbit: usize| points.iter().find(|p| p.norm == m.orbits[orbit].norm2).map(|p| p.index);
            let collisions: BTreeMap<Option<usize>, usize> = m.collisions().into_iter().map(|(o, k)| (label(o), k)).collect();
            c.eq(collisions, BTreeMap::from([(Some(16), 2), (Some(17), 3)]), || "H4 fibers".into());
        }
    }
    for n in [4u32, 6, 8] {
        let kind = RootType::I2(n);
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 3)] {
            let scan = phi::bijectivity_condition(n, &rat(a, 1), &rat(b, 1));
            if let Some(m) = run(c, &sys, &pair(&sys, a, b), format!("{kind} ({a},{b})")) {
                c.eq(m.is_bijective(), scan.holds, || format!("{kind} ({a},{b}): Phi against the cos scan"));
            }
        }
    }
}

fn zero_parameters(ctx: &Context, c: &mut Checks) {
    for kind in [RootType::I2(5), RootType::I2(6), RootType::H3, RootType::H4] {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        let Some(m) = c.result(phi::compute(&sys, &constant(&sys, 0)), || format!("{kind} c=0")) else { continue };
        c.eq(m.orbits.len(), 1, || format!("{kind}: orbit count"));
        c.check(m.orbits.iter().all(|o| o.coords.iter().all(|x| x.is_zero())), || format!("{kind}: the point is not 0"));
        c.check(m.classes.iter().all(|t| t.a_value.is_zero()), || format!("{kind}: nonzero a-value"));
        c.check(m.verdicts.surjective, || format!("{kind}: not surjective"));
        c.check(!m.is_bijective(), || format!("{kind}: bijective"));
        c.check(m.violations.is_empty(), || format!("{kind}: {}", m.violations.join(", ")));
    }
}

fn elliptic_reports(ctx: &Context, c: &mut Checks, kinds: impl Iterator<Item = RootType>) -> Vec<(Arc<SpinSystem>, elliptic::EllipticReport)> {
    let mut out = Vec::new();
    for kind in kinds {
        let Some(sys) = c.result(ctx.system(kind), || format!("{kind}")) else { continue };
        if let Some(r) = c.result(elliptic::analyze(&sys), || format!("{kind} elliptic analysis")) {
            out.push((sys, r));
        }
    }
    out
}

fn elliptic_counts(ctx: &Context, c: &mut Checks) {
    for (sys, r) in elliptic_reports(ctx, c, all_types(3..=15)) {
        let kind = sys.kind();
        let (ell, split) = match kind {
            RootType::I2(n) if n % 2 == 1 => ((n as usize - 1) / 2, (n as usize + 3) / 2),
            RootType::I2(n) => (n as usize / 2, n as usize / 2),
            RootType::H3 => (4, 8),
            RootType::H4 => (20, 20),
        };
        c.eq(r.elliptic_count, ell, || format!("{kind} elliptic classes"));
        c.eq(r.split_classes, split, || format!("{kind} split classes"));
        c.eq(r.genuine_count, split, || format!("{kind} genuine characters"));
        c.eq(r.elliptic_rank, ell, || format!("{kind} rank of the pairing"));
        c.check(r.radical_is_induced, || format!("{kind}: radical differs from the induced span"));
    }
}

fn spin_modules(ctx: &Context, c: &mut Checks) {
    for (sys, r) in elliptic_reports(ctx, c, all_types(3..=15)) {
        let kind = sys.kind();
        c.eq(r.spin_dim, 1 << (sys.rank() / 2), || format!("{kind} dim S"));
        c.check(r.iota_swaps_spin, || format!("{kind}: iota does not swap S+ and S-"));
        match kind {
            RootType::I2(n) => {
                let want = DihedralLabel::Rho(if n % 2 == 1 { (n - 1) / 2 } else { n / 2 });
                let labels = reference::match_dihedral(&sys).unwrap_or_default();
                let got = labels.iter().find(|(_, row)| *row == r.spin.spin).map(|(l, _)| *l);
                c.eq(got, Some(want), || format!("{kind} S"));
            }
            RootType::H3 => {
                let labels = reference::match_h3(&sys).unwrap_or_default();
                let got = labels.iter().find(|(_, rows)| rows.contains(&r.spin.spin)).map(|(l, _)| *l);
                c.eq(got, Some(IcosahedralLabel::TwoBar), || "H3 S".into());
            }
            RootType::H4 => {
                let av = phi::a_values(&sys, &constant(&sys, 1)).unwrap_or_default();
                let pairs: Vec<(usize, CycloReal)> = av.into_iter().map(|a| (a.row, a.value)).collect();
                let labels = reference::match_h4(&sys, &pairs).unwrap_or_default();
                let got = labels.iter().find(|(_, row)| *row == r.spin.spin).map(|(l, _)| *l);
                c.eq(got, Some(36), || "H4 S".into());
            }
        }
    }
}

fn isometry(ctx: &Context, c: &mut Checks) {
    for (sys, r) in elliptic_reports(ctx, c, all_types(3..=12)) {
        let kind = sys.kind();
        c.check(r.isometry_ok, || format!("{kind}: isometry"));
        c.check(r.image_kernel_ok, || format!("{kind}: image against ker(1 + iota)"));
        c.check(r.kernel_count_ok, || format!("{kind}: dimension of ker(1 + iota)"));
        let odd_dihedral = matches!(kind, RootType::I2(n) if n % 2 == 1);
        c.eq(r.spin_surjective, !odd_dihedral, || format!("{kind}: sigma -> sigma x S onto"));
    }
}

fn orthonormal(ctx: &Context, c: &mut Checks) {
    for (sys, r) in elliptic_reports(ctx, c, (5..=15).filter(|n| n % 2 == 1).map(RootType::I2)) {
        let kind = sys.kind();
        let Some(b) = c.result(elliptic::dihedral_orthonormal_basis(&sys, &r), || format!("{kind} basis")) else { continue };
        c.check(b.is_orthonormal(), || format!("{kind}: Gram matrix {:?}", b.gram));
        c.check(b.images_ok, || format!("{kind}: omega_i does not map to sigma~_i"));
        c.check(b.shape_ok, || format!("{kind}: matrix {:?} is not I - J", b.matrix));
    }
}

fn lemma(ctx: &Context, c: &mut Checks) {
    for (sys, r) in elliptic_reports(ctx, c, all_types(3..=12)) {
        c.check(r.lemma_ok, || format!("{}: (S+ - S-)(S+ - S-)* against det(1 - w)", sys.kind()));
    }
}
