//! Distinguished points found by exhaustive equation solving, compared with the library search.

use std::collections::BTreeSet;

use spinrefl::linalg;
use spinrefl::points::PointSpace;
use spinrefl::reference;
use spinrefl::rootsys::{dot, ParameterFunction, RootSystem, RootType};
use spinrefl::scalars::{rat, CycloReal, Rational};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n).flat_map(|last| combinations(last, k - 1).into_iter().map(move |mut c| {
        c.push(last);
        c
    })).collect()
}

/// Straight from the definition: |{α ∈ R : (α,γ) = c_α}| = |{α ∈ R : (α,γ) = 0}| + rank.
fn is_distinguished(rs: &RootSystem, c: &ParameterFunction, gamma: &[CycloReal]) -> bool {
    let (mut on, mut zero) = (0, 0);
    for a in 0..rs.num_roots() {
        let p = rs.pairing(a, gamma);
        if p == CycloReal::from_rational(c.value(rs, a)) {
            on += 1;
        }
        if p.is_zero() {
            zero += 1;
        }
    }
    on == zero + rs.rank()
}

fn dominant(rs: &RootSystem, gamma: &[CycloReal]) -> Vec<CycloReal> {
    let mut g = gamma.to_vec();
    'outer: loop {
        for &s in rs.simple() {
            let p = rs.pairing(s, &g);
            if p < CycloReal::zero() {
                let alpha = rs.coroot(s);
                g = g.iter().zip(&alpha).map(|(x, a)| x - &(&p * a)).collect();
                continue 'outer;
            }
        }
        return g;
    }
}

/// Dominant distinguished points, as (coweight coordinates, norm²).
fn brute_force(rs: &RootSystem, c: &ParameterFunction) -> BTreeSet<(Vec<CycloReal>, CycloReal)> {
    let positive: Vec<usize> = (0..rs.num_roots()).filter(|&a| rs.is_positive(a)).collect();
    let r = rs.rank();
    let mut found = BTreeSet::new();
    for subset in combinations(positive.len(), r) {
        let rows: Vec<Vec<CycloReal>> = subset.iter().map(|&i| rs.coroot(positive[i])).collect();
        if linalg::rank(&rows) < r {
            continue;
        }
        for code in 0..3usize.pow(r as u32) {
            let targets: Vec<CycloReal> = subset
                .iter()
                .enumerate()
                .map(|(j, &i)| {
                    let ca = CycloReal::from_rational(c.value(rs, positive[i]));
                    match code / 3usize.pow(j as u32) % 3 {
                        0 => CycloReal::zero(),
                        1 => ca,
                        _ => -ca,
                    }
                })
                .collect();
            let gamma = linalg::solve(&rows, &targets).expect("independent rows");
            if is_distinguished(rs, c, &gamma) {
                let d = dominant(rs, &gamma);
                let coords = rs.simple().iter().map(|&s| rs.pairing(s, &d)).collect();
                found.insert((coords, dot(&d, &d)));
            }
        }
    }
    found
}

fn library(rs: &RootSystem, c: &ParameterFunction) -> BTreeSet<(Vec<CycloReal>, CycloReal)> {
    PointSpace::new(rs)
        .unwrap()
        .solvable_points(c)
        .into_iter()
        .filter(|p| p.distinguished)
        .map(|p| (p.coords, p.norm2))
        .collect()
}

fn per_orbit(rs: &RootSystem, values: &[Rational]) -> ParameterFunction {
    if rs.num_orbits() == 1 {
        ParameterFunction::constant(rs, values[0].clone())
    } else {
        ParameterFunction::per_orbit(rs, values.to_vec()).unwrap()
    }
}

#[test]
fn dihedral_distinguished_points_match() {
    for n in 3..=12 {
        let rs = RootSystem::build(RootType::I2(n)).unwrap();
        for values in [[rat(1, 1), rat(1, 1)], [rat(1, 1), rat(2, 1)], [rat(3, 2), rat(1, 3)]] {
            if rs.num_orbits() == 1 && values[0] != values[1] {
                continue;
            }
            let c = per_orbit(&rs, &values);
            let oracle = brute_force(&rs, &c);
            assert_eq!(library(&rs, &c), oracle, "I2({n}) at {values:?}");
            if n % 2 == 1 {
                assert_eq!(oracle.len(), (n as usize - 1) / 2);
            }
        }
    }
}

#[test]
fn h3_distinguished_points_match() {
    let rs = RootSystem::build(RootType::H3).unwrap();
    let c = ParameterFunction::constant(&rs, rat(1, 1));
    let oracle = brute_force(&rs, &c);
    assert_eq!(library(&rs, &c), oracle);
    let fixtures: BTreeSet<(Vec<CycloReal>, CycloReal)> =
        reference::h3_points().into_iter().map(|p| (p.coords(), p.norm)).collect();
    assert_eq!(oracle, fixtures);
}

#[test]
fn h3_scales_with_the_parameter() {
    let rs = RootSystem::build(RootType::H3).unwrap();
    let t = rat(5, 3);
    let base = library(&rs, &ParameterFunction::constant(&rs, rat(1, 1)));
    let scaled = library(&rs, &ParameterFunction::constant(&rs, t.clone()));
    let tr = CycloReal::from_rational(&t);
    let expected: BTreeSet<_> =
        base.into_iter().map(|(x, n)| (x.iter().map(|v| v * &tr).collect::<Vec<_>>(), n * (&tr * &tr))).collect();
    assert_eq!(scaled, expected);
}
