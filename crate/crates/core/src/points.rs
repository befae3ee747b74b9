//! Distinguished and solvable points of V∨ for a parameter function.
//!
//! Points are stored by their coordinates in the simple-coroot basis,
//! γ = Σ y_j α_j∨, and reported by their fundamental-coweight coordinates
//! (α_j, γ). Orbit representatives are the unique dominant conjugates.

use std::collections::{BTreeMap, HashSet};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::linalg::{nullspace, row_reduce, Matrix};
use crate::rootsys::{ParameterFunction, RootSystem, RootType};
use crate::scalars::{CycloReal, Rational};
use crate::Error;

/// Counts behind a counting-condition verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// |{α ∈ R : (α,γ) = c_α}|
    pub n_c: usize,
    /// |{α ∈ R : (α,γ) = 0}|
    pub n_0: usize,
    pub target: usize,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.n_c == self.n_0 + self.target
    }
}

/// One W-orbit of solvable points.
#[derive(Clone, Debug)]
pub struct PointRecord {
    pub orbit_id: usize,
    /// Positions (into the simple roots) of the subset J the point comes from.
    pub subset: Vec<usize>,
    /// Coroot-basis coordinates of the dominant representative.
    pub coroot_coords: Vec<CycloReal>,
    /// Fundamental-coweight coordinates (α_j, γ) of the dominant representative.
    pub coords: Vec<CycloReal>,
    pub norm2: CycloReal,
    pub distinguished: bool,
    pub solvable: bool,
    pub certificate: Certificate,
}

/// Pairing data of a root system: (α, α_j∨) for positive α, and the root supports.
pub struct PointSpace<'a> {
    rs: &'a RootSystem,
    rows: Vec<Vec<CycloReal>>,
    support: Vec<u32>,
}

impl<'a> PointSpace<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<PointSpace<'a>, Error> {
        let r = rs.rank();
        let simple = rs.simple();
        let rows: Vec<Vec<CycloReal>> =
            (0..rs.num_positive()).map(|a| simple.iter().map(|&s| rs.cartan(a, s)).collect()).collect();
        // α∨ = Σ x_j α_j∨ with Gram · x = rows[α]
        let gram: Matrix<CycloReal> = (0..r).map(|i| rows[simple[i]].clone()).collect();
        let mut support = Vec::with_capacity(rows.len());
        for row in &rows {
            let x = crate::linalg::solve(&gram, row)
                .ok_or_else(|| Error::Consistency("simple coroots are dependent".into()))?;
            support.push(x.iter().enumerate().filter(|(_, v)| !v.is_zero()).fold(0u32, |m, (j, _)| m | 1 << j));
        }
        Ok(PointSpace { rs, rows, support })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// (α, γ) for a positive root α.
    pub fn pairing(&self, root: usize, y: &[CycloReal]) -> CycloReal {
        self.rows[root].iter().zip(y).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
    }

    /// Fundamental-coweight coordinates (α_j, γ).
    pub fn coweight_coords(&self, y: &[CycloReal]) -> Vec<CycloReal> {
        self.rs.simple().iter().map(|&s| self.pairing(s, y)).collect()
    }

    /// Coroot-basis coordinates from fundamental-coweight coordinates.
    pub fn from_coweight_coords(&self, w: &[CycloReal]) -> Result<Vec<CycloReal>, Error> {
        let gram: Matrix<CycloReal> = self.rs.simple().iter().map(|&s| self.rows[s].clone()).collect();
        crate::linalg::solve(&gram, w).ok_or_else(|| Error::Consistency("singular Cartan matrix".into()))
    }

    pub fn norm2(&self, y: &[CycloReal]) -> CycloReal {
        self.coweight_coords(y).iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// The dominant W-conjugate, reached by reflecting in simple roots with negative pairing.
    pub fn dominant(&self, y: &[CycloReal]) -> Vec<CycloReal> {
        let mut y = y.to_vec();
        let simple = self.rs.simple();
        loop {
            let bad = (0..simple.len()).find(|&i| self.pairing(simple[i], &y).is_negative());
            match bad {
                Some(i) => {
                    let w = self.pairing(simple[i], &y);
                    y[i] = &y[i] - &w;
                }
                None => return y,
            }
        }
    }

    /// Every point of the W-orbit, as coroot coordinates.
    pub fn orbit(&self, y: &[CycloReal]) -> Vec<Vec<CycloReal>> {
        let simple = self.rs.simple();
        let mut seen: HashSet<Vec<CycloReal>> = HashSet::from([y.to_vec()]);
        let mut out = vec![y.to_vec()];
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            for (i, &s) in simple.iter().enumerate() {
                let w = self.pairing(s, &cur);
                if w.is_zero() {
                    continue;
                }
                let mut next = cur.clone();
                next[i] = &next[i] - &w;
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
            head += 1;
        }
        out
    }

    /// Counting certificate over the roots supported on `mask` (all roots for the full mask).
    pub fn certificate(&self, c: &ParameterFunction, y: &[CycloReal], mask: u32, target: usize) -> Certificate {
        let (mut n_c, mut n_0) = (0, 0);
        for a in 0..self.rows.len() {
            if self.support[a] & !mask != 0 {
                continue;
            }
            let p = self.pairing(a, y);
            let ca = CycloReal::from_rational(c.value(self.rs, a));
            // the negative root has pairing −p and the same parameter
            if p.is_zero() {
                n_0 += 2;
                if ca.is_zero() {
                    n_c += 2;
                }
            } else if p == ca || p == -&ca {
                n_c += 1;
            }
        }
        Certificate { n_c, n_0, target }
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.rs.rank()) - 1
    }

    /// J-dominant points of V_J∨ that are distinguished for the sub-root-system R_J.
    ///
    /// Such a point satisfies |J| independent equations (α,γ) = |c_α| with α ∈ R_J positive.
    /// The search fixes |J| − 1 of them, walks the resulting line, and cuts it with
    /// the remaining roots inside the J-dominant cone.
    pub fn distinguished_points(&self, c: &ParameterFunction, subset: &[usize]) -> Vec<Vec<CycloReal>> {
        let r = self.rs.rank();
        let k = subset.len();
        if k == 0 {
            return vec![vec![CycloReal::zero(); r]];
        }
        let mask = subset.iter().fold(0u32, |m, &j| m | 1 << j);
        let simple = self.rs.simple();
        let local: Vec<usize> = (0..self.rows.len()).filter(|&a| self.support[a] & !mask == 0).collect();
        let rows: Vec<Vec<CycloReal>> =
            local.iter().map(|&a| subset.iter().map(|&j| self.rows[a][j].clone()).collect()).collect();
        let rhs: Vec<CycloReal> =
            local.iter().map(|&a| CycloReal::from_rational(&c.value(self.rs, a).abs())).collect();
        let walls: Vec<usize> = subset.iter().map(|&j| local.iter().position(|&a| a == simple[j]).unwrap()).collect();

        let dot = |a: &[CycloReal], b: &[CycloReal]| -> CycloReal {
            a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
        };

        let mut found: HashSet<Vec<CycloReal>> = HashSet::new();
        let mut out = Vec::new();
        for_each_subset(local.len(), k - 1, &mut |fixed: &[usize]| {
            let Some((base, dir)) = solve_line(&rows, &rhs, fixed, k) else {
                return;
            };
            let Some(window) = Window::from_walls(walls.iter().map(|&w| (dot(&rows[w], &base), dot(&rows[w], &dir))))
            else {
                return;
            };
            let start = fixed.last().map_or(0, |&m| m + 1);
            for idx in start..local.len() {
                let slope = dot(&rows[idx], &dir);
                if slope.is_zero() {
                    continue;
                }
                let t = (&rhs[idx] - &dot(&rows[idx], &base)) / slope;
                if !window.contains(&t) {
                    continue;
                }
                let point: Vec<CycloReal> = base.iter().zip(&dir).map(|(b, d)| b + &(&t * d)).collect();
                if found.insert(point.clone()) {
                    let mut y = vec![CycloReal::zero(); r];
                    for (pos, &j) in subset.iter().enumerate() {
                        y[j] = point[pos].clone();
                    }
                    if self.certificate(c, &y, mask, k).holds() {
                        out.push(y);
                    }
                }
            }
        });
        out.sort();
        out
    }

    /// Solvable W-orbits, ordered by norm² and then by coordinates.
    pub fn solvable_points(&self, c: &ParameterFunction) -> Vec<PointRecord> {
        let r = self.rs.rank();
        let mut subsets: Vec<Vec<usize>> =
            (0u32..1 << r).map(|m| (0..r).filter(|&j| m >> j & 1 == 1).collect()).collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

        let mut orbits: BTreeMap<Vec<CycloReal>, PointRecord> = BTreeMap::new();
        for subset in subsets {
            for y in self.distinguished_points(c, &subset) {
                let cert = self.certificate(c, &y, self.full_mask(), subset.len());
                if !cert.holds() {
                    continue;
                }
                let rep = self.dominant(&y);
                let coords = self.coweight_coords(&rep);
                if orbits.contains_key(&coords) {
                    continue;
                }
                let distinguished = self.certificate(c, &rep, self.full_mask(), r).holds();
                let record = PointRecord {
                    orbit_id: 0,
                    subset: subset.clone(),
                    norm2: self.norm2(&rep),
                    coroot_coords: rep,
                    coords: coords.clone(),
                    distinguished,
                    solvable: true,
                    certificate: cert,
                };
                orbits.insert(coords, record);
            }
        }
        let mut list: Vec<PointRecord> = orbits.into_values().collect();
        list.sort_by(|a, b| a.norm2.cmp(&b.norm2).then_with(|| a.coords.cmp(&b.coords)));
        for (i, p) in list.iter_mut().enumerate() {
            p.orbit_id = i;
        }
        list
    }

    /// Position of the orbit containing `y` in a solvable list, if any.
    pub fn locate(&self, list: &[PointRecord], y: &[CycloReal]) -> Option<usize> {
        let coords = self.coweight_coords(&self.dominant(y));
        list.iter().position(|p| p.coords == coords)
    }
}

/// Parameter interval of the line `base + t·dir` inside the cone {(α_j, γ) ≥ 0}.
struct Window {
    lo: Option<CycloReal>,
    hi: Option<CycloReal>,
}

impl Window {
    /// Each wall contributes p + t·q ≥ 0.
    fn from_walls(walls: impl Iterator<Item = (CycloReal, CycloReal)>) -> Option<Window> {
        let mut w = Window { lo: None, hi: None };
        for (p, q) in walls {
            if q.is_zero() {
                if p.is_negative() {
                    return None;
                }
                continue;
            }
            let t = -(&p / &q);
            if q.is_positive() {
                if w.lo.as_ref().is_none_or(|lo| t > *lo) {
                    w.lo = Some(t);
                }
            } else if w.hi.as_ref().is_none_or(|hi| t < *hi) {
                w.hi = Some(t);
            }
        }
        match (&w.lo, &w.hi) {
            (Some(lo), Some(hi)) if lo > hi => None,
            _ => Some(w),
        }
    }

    fn contains(&self, t: &CycloReal) -> bool {
        self.lo.as_ref().is_none_or(|lo| t >= lo) && self.hi.as_ref().is_none_or(|hi| t <= hi)
    }
}

/// Solution line of the fixed equations in k unknowns, if they are independent.
fn solve_line(
    rows: &[Vec<CycloReal>],
    rhs: &[CycloReal],
    fixed: &[usize],
    k: usize,
) -> Option<(Vec<CycloReal>, Vec<CycloReal>)> {
    if fixed.is_empty() {
        let mut dir = vec![CycloReal::zero(); k];
        dir[0] = CycloReal::one();
        return Some((vec![CycloReal::zero(); k], dir));
    }
    let mut aug: Matrix<CycloReal> = fixed
        .iter()
        .map(|&i| {
            let mut row = rows[i].clone();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != fixed.len() || pivots.contains(&k) {
        return None;
    }
    let mut base = vec![CycloReal::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        base[p] = aug[row][k].clone();
    }
    let coeffs: Matrix<CycloReal> = aug.iter().map(|row| row[..k].to_vec()).collect();
    let dir = nullspace(&coeffs, k, &CycloReal::zero()).pop()?;
    Some((base, dir))
}

/// Calls `f` on every increasing `size`-subset of `0..n`.
fn for_each_subset(n: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in from..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            go(n, size, i + 1, cur, f);
            cur.pop();
        }
    }
    go(n, size, 0, &mut Vec::with_capacity(size), f);
}

/// One of the points γ_k of I2(n), n even, from its two defining equations.
#[derive(Clone, Debug)]
pub struct DihedralPoint {
    pub k: usize,
    pub coroot_coords: Vec<CycloReal>,
    pub norm2: CycloReal,
    pub distinguished: bool,
    /// Index of the W-orbit among the distinct orbits of the γ_k, in order of k.
    pub orbit_id: usize,
}

/// The points γ_k (k = 1..n/2) of I2(n), n even, with parameters c₁ on the orbit of α₁ and c₂ on that of α₂.
///
/// γ_k is fixed by (β_{k−1}, γ) = c_{β_{k−1}} and (β_{n−k}, γ) = c_{β_{n−k}}, where β_i is the positive root
/// at angle iπ/n from α₁.
pub fn i2_even_solvable(n: u32, c1: &Rational, c2: &Rational) -> Result<Vec<DihedralPoint>, Error> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::Unsupported(format!("i2_even_solvable needs an even n >= 4, got {n}")));
    }
    let rs = RootSystem::build(RootType::I2(n))?;
    let space = PointSpace::new(&rs)?;
    let c = ParameterFunction::per_orbit(&rs, vec![c1.clone(), c2.clone()])?;
    let mut out: Vec<DihedralPoint> = Vec::new();
    let mut reps: Vec<Vec<CycloReal>> = Vec::new();
    for k in 1..=(n as usize / 2) {
        let (a, b) = (k - 1, n as usize - k);
        let (ca, cb) = (c.value(&rs, a).clone(), c.value(&rs, b).clone());
        let system: Matrix<CycloReal> = vec![space.rows[a].clone(), space.rows[b].clone()];
        let y = crate::linalg::solve(&system, &[CycloReal::from_rational(&ca), CycloReal::from_rational(&cb)])
            .ok_or_else(|| Error::Consistency("β roots are dependent".into()))?;
        let cos = CycloReal::make_cos(2 * k as i64 - 1, n);
        let (qa, qb) = (CycloReal::from_rational(&ca), CycloReal::from_rational(&cb));
        let distinguished = !((&qa + &(&qb * &cos)) * (&(&qa * &cos) + &qb)).is_zero();
        let rep = space.dominant(&y);
        let orbit_id = match reps.iter().position(|r| *r == rep) {
            Some(i) => i,
            None => {
                reps.push(rep);
                reps.len() - 1
            }
        };
        out.push(DihedralPoint { k, norm2: space.norm2(&y), coroot_coords: y, distinguished, orbit_id });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn golden(a: (i64, i64), b: (i64, i64)) -> CycloReal {
        // a·τ + b·τ̄
        CycloReal::from_ratio(a.0, a.1) * CycloReal::golden() + CycloReal::from_ratio(b.0, b.1) * CycloReal::golden_conj()
    }

    #[test]
    fn dihedral_odd_closed_form() {
        for n in [3u32, 5, 7, 9] {
            let rs = RootSystem::build(RootType::I2(n)).unwrap();
            let space = PointSpace::new(&rs).unwrap();
            let c = ParameterFunction::constant(&rs, rat(1, 1));
            let pts = space.solvable_points(&c);
            assert_eq!(pts.len(), (n as usize).div_ceil(2));
            let mut expect: Vec<CycloReal> = (1..=(n as i64 + 1) / 2)
                .map(|k| {
                    let s = CycloReal::make_sin(2 * k - 1, 2 * n);
                    (CycloReal::from_int(2) * &s * &s).inv().unwrap()
                })
                .collect();
            expect.sort();
            let got: Vec<CycloReal> = pts.iter().map(|p| p.norm2.clone()).collect();
            assert_eq!(got, expect);
            assert_eq!(pts.iter().filter(|p| p.distinguished).count(), (n as usize - 1) / 2);
        }
    }

    #[test]
    fn zero_parameter_gives_origin() {
        for kind in [RootType::I2(6), RootType::H3] {
            let rs = RootSystem::build(kind).unwrap();
            let space = PointSpace::new(&rs).unwrap();
            let pts = space.solvable_points(&ParameterFunction::constant(&rs, rat(0, 1)));
            assert_eq!(pts.len(), 1);
            assert!(pts[0].norm2.is_zero());
            assert!(pts[0].subset.is_empty());
        }
    }

    #[test]
    fn h3_norms() {
        let rs = RootSystem::build(RootType::H3).unwrap();
        let space = PointSpace::new(&rs).unwrap();
        let pts = space.solvable_points(&ParameterFunction::constant(&rs, rat(1, 1)));
        let mut expect = vec![
            golden((43, 2), (19, 2)),
            CycloReal::from_ratio(11, 2),
            CycloReal::from_int(8),
            golden((19, 2), (43, 2)),
        ];
        expect.sort();
        assert_eq!(pts.iter().map(|p| p.norm2.clone()).collect::<Vec<_>>(), expect);
        assert!(pts.iter().all(|p| p.distinguished));
        // c·(ω1 + ω2 + ω3) is the largest
        assert!(pts.last().unwrap().coords.iter().all(|x| *x == CycloReal::one()));
    }

    #[test]
    fn dihedral_even_matches_search() {
        for n in [4u32, 6, 8] {
            for (c1, c2) in [(1, 1), (1, 2), (1, 3), (2, 3), (0, 1)] {
                let (c1, c2) = (rat(c1, 1), rat(c2, 1));
                let rs = RootSystem::build(RootType::I2(n)).unwrap();
                let space = PointSpace::new(&rs).unwrap();
                let c = ParameterFunction::per_orbit(&rs, vec![c1.clone(), c2.clone()]).unwrap();
                let searched = space.solvable_points(&c);
                let closed = i2_even_solvable(n, &c1, &c2).unwrap();
                let orbits = closed.iter().map(|p| p.orbit_id).max().unwrap() + 1;
                assert_eq!(searched.len(), orbits, "n={n} c=({c1},{c2})");
                for p in &closed {
                    let at = space.locate(&searched, &p.coroot_coords).expect("γ_k is solvable");
                    assert_eq!(searched[at].norm2, p.norm2);
                    assert_eq!(searched[at].distinguished, p.distinguished, "n={n} k={}", p.k);
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let rs = RootSystem::build(RootType::H3).unwrap();
        let space = PointSpace::new(&rs).unwrap();
        for p in space.solvable_points(&ParameterFunction::constant(&rs, rat(1, 1))) {
            let orbit = space.orbit(&p.coroot_coords);
            assert_eq!(120 % orbit.len(), 0);
            assert!(orbit.iter().all(|y| space.norm2(y) == p.norm2));
        }
    }
}
