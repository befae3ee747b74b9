//! Structural invariants checked across every supported type.

use std::collections::BTreeMap;

use spinrefl::clifford::{f_alpha, CliffordElement};
use spinrefl::elliptic;
use spinrefl::linalg;
use spinrefl::phi;
use spinrefl::points::PointSpace;
use spinrefl::rootsys::{dot, ParameterFunction, RootType};
use spinrefl::scalars::{rat, Cyclo, CycloReal};
use spinrefl::system::SpinSystem;

fn types() -> Vec<RootType> {
    (3..=10).map(RootType::I2).chain([RootType::H3, RootType::H4]).collect()
}

fn small_types() -> Vec<RootType> {
    (3..=10).map(RootType::I2).chain([RootType::H3]).collect()
}

fn mat_vec(m: &[Vec<CycloReal>], v: &[CycloReal]) -> Vec<CycloReal> {
    m.iter().map(|row| dot(row, v)).collect()
}

#[test]
fn weyl_group_geometry() {
    for kind in types() {
        let sys = SpinSystem::new(kind).unwrap();
        let (rs, w) = (sys.root_system(), sys.weyl());
        assert_eq!(w.reflections().len(), rs.num_positive(), "{kind}");
        let c = ParameterFunction::per_orbit(rs, (0..rs.num_orbits()).map(|i| rat(i as i64 + 2, 3)).collect()).unwrap();
        for x in 0..w.order() {
            let m = w.matrix(x);
            let t: Vec<Vec<CycloReal>> = (0..m.len()).map(|i| m.iter().map(|row| row[i].clone()).collect()).collect();
            let id: Vec<Vec<CycloReal>> =
                (0..m.len()).map(|i| (0..m.len()).map(|j| CycloReal::from_int((i == j) as i64)).collect()).collect();
            assert_eq!(linalg::mat_mul(&t, &m), id, "{kind}: element {x} is not orthogonal");
            let det = linalg::det(&m);
            if w.is_elliptic(x) {
                assert_eq!(det, CycloReal::from_int(if rs.rank() % 2 == 0 { 1 } else { -1 }), "{kind}: elliptic {x}");
                assert!(w.in_w_prime(x));
            }
            if x % 7 == 0 || !matches!(kind, RootType::H4) {
                for a in 0..rs.num_roots() {
                    let image = w.act(x, a);
                    assert_eq!(mat_vec(&m, rs.unit(a)), rs.unit(image).to_vec(), "{kind}: root closure");
                    assert_eq!(c.value(rs, image), c.value(rs, a), "{kind}: parameter invariance");
                }
            }
        }
    }
}

#[test]
fn pin_membership_and_grading() {
    for kind in types() {
        let sys = SpinSystem::new(kind).unwrap();
        let cover = sys.cover().unwrap();
        let one = CliffordElement::one(sys.rank());
        for x in 0..cover.order() {
            let a = cover.element(x);
            assert_eq!(a.transpose().mul(&a), one, "{kind}: {x}");
            let parity = a.parity().expect("homogeneous");
            assert_eq!(parity == 1, cover.is_even(x), "{kind}: parity of {x}");
            let det = linalg::det(&sys.weyl().matrix(cover.project(x)));
            assert_eq!(cover.is_even(x), det == CycloReal::one(), "{kind}: grading of {x}");
        }
    }
}

#[test]
fn quadruple_products_permute_root_pairs() {
    for kind in [RootType::I2(5), RootType::H3] {
        let sys = SpinSystem::new(kind).unwrap();
        let rs = sys.root_system();
        for &g in rs.simple() {
            let fg = f_alpha(rs, g);
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    let lhs = fg.mul(&f_alpha(rs, a)).mul(&f_alpha(rs, b)).mul(&fg).neg();
                    let rhs = f_alpha(rs, rs.reflect_index(g, a)).mul(&f_alpha(rs, rs.reflect_index(g, b)));
                    assert_eq!(lhs, rhs, "{kind}: γ={g} α={a} β={b}");
                }
            }
        }
    }
}

#[test]
fn character_tables() {
    for kind in small_types() {
        let sys = SpinSystem::new(kind).unwrap();
        let ct = sys.cover_table().unwrap();
        for t in [sys.weyl_table().unwrap(), &ct.table] {
            let n = t.num_chars();
            assert_eq!(n, t.num_classes());
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(t.inner(t.char(i), t.char(j)), Cyclo::from_int((i == j) as i64), "{kind}");
                }
                assert_eq!(t.order() % t.dim(i), 0, "{kind}: degree divides the order");
            }
            for k in 0..n {
                let s: Cyclo = (0..n).map(|i| &t.char(i)[k] * &t.char(i)[k].conj()).sum();
                assert_eq!(s, Cyclo::from_int((t.order() / t.class_sizes()[k]) as i64), "{kind}: column {k}");
            }
            assert_eq!((0..n).map(|i| t.dim(i) * t.dim(i)).sum::<usize>(), t.order());
        }
        for i in 0..ct.table.num_chars() {
            let at_minus = &ct.table.char(i)[ct.minus_one_class];
            let dim = Cyclo::from_int(ct.table.dim(i) as i64);
            if ct.genuine.contains(&i) {
                assert_eq!(at_minus, &-dim, "{kind}: genuine row {i}");
            } else {
                assert_eq!(at_minus, &dim, "{kind}: row {i}");
            }
        }
    }
}

fn parameters(sys: &SpinSystem) -> Vec<ParameterFunction> {
    let rs = sys.root_system();
    if rs.num_orbits() == 2 {
        vec![
            ParameterFunction::per_orbit(rs, vec![rat(1, 1), rat(1, 1)]).unwrap(),
            ParameterFunction::per_orbit(rs, vec![rat(1, 1), rat(3, 1)]).unwrap(),
            ParameterFunction::per_orbit(rs, vec![rat(2, 3), rat(1, 2)]).unwrap(),
        ]
    } else {
        vec![ParameterFunction::constant(rs, rat(1, 1)), ParameterFunction::constant(rs, rat(3, 2))]
    }
}

#[test]
fn solvable_points_are_certified() {
    for kind in types() {
        let sys = SpinSystem::new(kind).unwrap();
        let space = PointSpace::new(sys.root_system()).unwrap();
        for c in parameters(&sys) {
            let points = space.solvable_points(&c);
            for p in &points {
                assert!(p.certificate.holds(), "{kind}: certificate of orbit {}", p.orbit_id);
                assert!(p.solvable);
                if p.subset.len() == sys.rank() {
                    assert!(p.distinguished, "{kind}: J = Δ point is not distinguished");
                }
                if !matches!(kind, RootType::H4) {
                    let y = space.from_coweight_coords(&p.coords).unwrap();
                    assert!(space.orbit(&y).iter().all(|z| space.norm2(z) == p.norm2), "{kind}: norm is not W-invariant");
                }
            }
            if sys.root_system().num_orbits() == 1 {
                let mut norms: Vec<&CycloReal> = points.iter().map(|p| &p.norm2).collect();
                norms.sort();
                norms.dedup();
                assert_eq!(norms.len(), points.len(), "{kind}: two orbits share a norm");
            }
        }
    }
}

#[test]
fn a_values_match_norms_with_multiplicity() {
    for kind in small_types() {
        let sys = SpinSystem::new(kind).unwrap();
        for c in parameters(&sys) {
            let map = phi::compute(&sys, &c).unwrap();
            assert!(map.verdicts.surjective, "{kind}");
            let from_classes: BTreeMap<CycloReal, usize> = map.classes.iter().fold(BTreeMap::new(), |mut m, t| {
                *m.entry(t.a_value.clone()).or_default() += 1;
                m
            });
            let from_orbits: BTreeMap<CycloReal, usize> =
                map.orbits.iter().zip(&map.fibers).fold(BTreeMap::new(), |mut m, (o, f)| {
                    *m.entry(o.norm2.clone()).or_default() += f.len();
                    m
                });
            assert_eq!(from_classes, from_orbits, "{kind}");
            // a(χ) = a(sgn ⊗ χ)
            let av = phi::a_values(&sys, &c).unwrap();
            let twist = &sys.cover_table().unwrap().sign_twist;
            for a in &av {
                let partner = av.iter().find(|b| b.row == twist[a.row]).unwrap();
                assert_eq!(a.value, partner.value, "{kind}: row {}", a.row);
            }
        }
    }
}

#[test]
fn spin_map_images() {
    for kind in small_types() {
        let sys = SpinSystem::new(kind).unwrap();
        let report = elliptic::analyze(&sys).unwrap();
        let iota = elliptic::iota(&sys).unwrap();
        for v in &report.maps.tensor_difference {
            assert_eq!(v.iter().map(|x| x * x).sum::<i64>() % 2, 0, "{kind}: odd self-pairing");
            for i in 0..v.len() {
                assert_eq!(v[iota[i]], -v[i], "{kind}: iota does not negate the image");
            }
        }
        assert!(report.consistent(), "{kind}");

        // the other choice of S⁺ negates the map and leaves every pairing and span alone
        let swapped = elliptic::SpinModules {
            spin: report.spin.spin,
            plus: report.spin.minus,
            minus: report.spin.plus,
            difference: report.spin.difference.iter().map(|x| -x).collect(),
        };
        let flipped = elliptic::spin_maps(&sys, &swapped).unwrap();
        let negated: Vec<Vec<i64>> = report.maps.tensor_difference.iter().map(|v| v.iter().map(|x| -x).collect()).collect();
        assert_eq!(flipped.tensor_difference, negated, "{kind}");
        assert_eq!(flipped.spin_surjective, report.maps.spin_surjective);
        let prime = &sys.prime_cover().unwrap().table;
        let images = |m: &[Vec<i64>]| -> Vec<Vec<Cyclo>> { m.iter().map(|v| prime.combine(v)).collect() };
        let (a, b) = (images(&report.maps.tensor_difference), images(&flipped.tensor_difference));
        for i in 0..a.len() {
            for j in 0..a.len() {
                assert_eq!(prime.inner(&a[i], &a[j]), prime.inner(&b[i], &b[j]), "{kind}");
            }
        }
    }
}
