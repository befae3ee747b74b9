//! Root systems of types I2(n), H3 and H4 with exact coordinates.
//!
//! Roots and coroots share one Euclidean space. Each root is stored as the
//! unit vector `u` along it; the coroot is `√2·u`, so `⟨α∨, α∨⟩ = 2` and the
//! pairing is `(α, γ) = ⟨α∨, γ⟩`. Working with unit vectors keeps every
//! reflection and Cartan number inside the small field generated by the
//! coordinates (`√2` only shows up when coroots are printed).

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::scalars::{CycloReal, Rational};
use crate::Error;

/// Supported root system types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    I2(u32),
    H3,
    H4,
}

impl RootType {
    /// Parse a CLI-style tag (`I2` needs `n`).
    pub fn parse(tag: &str, n: Option<u32>) -> Result<RootType, Error> {
        match (tag.to_ascii_uppercase().as_str(), n) {
            ("I2", Some(n)) if n >= 3 => Ok(RootType::I2(n)),
            ("I2", Some(n)) => Err(Error::Unsupported(format!("I2 needs n >= 3, got {n}"))),
            ("I2", None) => Err(Error::Unsupported("I2 needs --n".into())),
            ("H3", None) => Ok(RootType::H3),
            ("H4", None) => Ok(RootType::H4),
            ("H3" | "H4", Some(_)) => Err(Error::Unsupported(format!("{tag} takes no n"))),
            _ => Err(Error::Unsupported(format!("unknown root system type {tag:?}"))),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            RootType::I2(_) => 2,
            RootType::H3 => 3,
            RootType::H4 => 4,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::I2(n) => write!(f, "I2({n})"),
            RootType::H3 => f.write_str("H3"),
            RootType::H4 => f.write_str("H4"),
        }
    }
}

pub type Vector = Vec<CycloReal>;

pub fn dot(a: &[CycloReal], b: &[CycloReal]) -> CycloReal {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

/// A reduced root system in an orthonormal ambient space.
///
/// Root indices: `0..N` are the positive roots, `i + N` is `−(root i)`.
pub struct RootSystem {
    kind: RootType,
    units: Vec<Vector>,
    n_pos: usize,
    simple: Vec<usize>,
    reflections: Vec<Vec<u16>>,
    orbit: Vec<usize>,
    n_orbits: usize,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} positive roots)", self.kind, self.n_pos)
    }
}

impl RootSystem {
    pub fn build(kind: RootType) -> Result<RootSystem, Error> {
        let (units, generic) = match kind {
            RootType::I2(n) if n < 3 => return Err(Error::Unsupported(format!("I2 needs n >= 3, got {n}"))),
            RootType::I2(n) => (dihedral_roots(n), None),
            RootType::H3 => (icosahedral_roots(3), Some(vec![(1, 1), (1, 7), (1, 53)])),
            RootType::H4 => (icosahedral_roots(4), Some(vec![(1, 1), (1, 7), (1, 53), (1, 401)])),
        };
        let rank = kind.rank();
        // positives first
        let (pos, neg): (Vec<Vector>, Vec<Vector>) = match generic {
            None => {
                let half = units.len() / 2;
                (units[..half].to_vec(), units[half..].to_vec())
            }
            Some(f) => {
                let functional: Vector = f.iter().map(|&(p, q)| CycloReal::from_ratio(p, q)).collect();
                let mut pos = Vec::new();
                for u in &units {
                    let s = dot(u, &functional);
                    assert!(!s.is_zero(), "functional must be generic");
                    if s.is_positive() {
                        pos.push(u.clone());
                    }
                }
                let neg = pos.iter().map(|u| u.iter().map(|x| -x).collect()).collect();
                (pos, neg)
            }
        };
        let n_pos = pos.len();
        let mut all = pos;
        all.extend(neg);
        debug_assert_eq!(all.len(), 2 * n_pos);

        let index: HashMap<Vector, usize> = all.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let reflect_all = |a: usize| -> Result<Vec<u16>, Error> {
            all.iter()
                .map(|v| {
                    let img = reflect(&all[a], v);
                    index.get(&img).map(|&i| i as u16).ok_or_else(|| {
                        Error::Consistency(format!("{kind}: reflection does not permute the roots"))
                    })
                })
                .collect()
        };
        let reflections = (0..n_pos).map(reflect_all).collect::<Result<Vec<_>, _>>()?;

        // simple roots: s_α permutes the other positive roots
        let mut simple: Vec<usize> = (0..n_pos)
            .filter(|&a| (0..n_pos).all(|b| b == a || (reflections[a][b] as usize) < n_pos))
            .collect();
        if simple.len() != rank {
            return Err(Error::Consistency(format!("{kind}: found {} simple roots", simple.len())));
        }
        simple = order_simple(kind, &all, simple);

        let mut rs = RootSystem { kind, units: all, n_pos, simple, reflections, orbit: Vec::new(), n_orbits: 0 };
        rs.compute_orbits();
        Ok(rs)
    }

    fn compute_orbits(&mut self) {
        let total = self.units.len();
        let mut orbit = vec![usize::MAX; total];
        let mut next = 0;
        let seeds: Vec<usize> = self.simple.iter().copied().chain(0..total).collect();
        for s in seeds {
            if orbit[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            orbit[s] = next;
            while let Some(x) = stack.pop() {
                for &g in &self.simple {
                    let y = self.reflections[g][x] as usize;
                    if orbit[y] == usize::MAX {
                        orbit[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        self.orbit = orbit;
        self.n_orbits = next;
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.units.len()
    }

    /// Indices of the simple roots, ordered along the Coxeter diagram.
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.n_pos
    }

    pub fn negate(&self, root: usize) -> usize {
        if root < self.n_pos {
            root + self.n_pos
        } else {
            root - self.n_pos
        }
    }

    /// Unit vector along a root.
    pub fn unit(&self, root: usize) -> &[CycloReal] {
        &self.units[root]
    }

    /// The coroot `√2·u`, normalized to `⟨α∨, α∨⟩ = 2`.
    pub fn coroot(&self, root: usize) -> Vector {
        let s = CycloReal::sqrt2();
        self.units[root].iter().map(|x| x * &s).collect()
    }

    /// `⟨α∨, β∨⟩ = 2⟨u_α, u_β⟩`; this is also the pairing `(α, β∨)`.
    pub fn cartan(&self, a: usize, b: usize) -> CycloReal {
        dot(&self.units[a], &self.units[b]) * CycloReal::from_int(2)
    }

    /// `(α, γ) = ⟨α∨, γ⟩` for an ambient vector γ.
    pub fn pairing(&self, root: usize, gamma: &[CycloReal]) -> CycloReal {
        dot(&self.coroot(root), gamma)
    }

    /// Permutation of all root indices induced by the reflection in a positive root.
    pub fn reflection(&self, positive: usize) -> &[u16] {
        &self.reflections[positive]
    }

    /// Reflection in any root (a root and its negative give the same reflection).
    pub fn reflect_index(&self, a: usize, b: usize) -> usize {
        let a = if a < self.n_pos { a } else { a - self.n_pos };
        self.reflections[a][b] as usize
    }

    pub fn find(&self, unit: &[CycloReal]) -> Option<usize> {
        self.units.iter().position(|u| u.as_slice() == unit)
    }

    /// W-orbit of a root; orbit 0 contains the first simple root.
    pub fn orbit_of(&self, root: usize) -> usize {
        self.orbit[root]
    }

    pub fn num_orbits(&self) -> usize {
        self.n_orbits
    }

    /// Coxeter matrix entries m_ij of the ordered simple system.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| if i == j { 1 } else { coxeter_label(self, self.simple[i], self.simple[j]) }).collect())
            .collect()
    }

    /// β_i∨ for I2(n), 0 ≤ i < n: the positive coroot at angle iπ/n.
    pub fn beta(&self, i: usize) -> Result<Vector, Error> {
        match self.kind {
            RootType::I2(n) if i < n as usize => Ok(self.coroot(i)),
            RootType::I2(n) => Err(Error::Unsupported(format!("beta index {i} out of range for n = {n}"))),
            _ => Err(Error::Unsupported("beta is defined for I2 only".into())),
        }
    }

    /// Field conductor of the coordinates.
    pub fn base_conductor(&self) -> u32 {
        match self.kind {
            RootType::I2(n) => {
                let m = 4 * n;
                if m % 4 == 2 {
                    m / 2
                } else {
                    m
                }
            }
            _ => 5,
        }
    }
}

fn reflect(a: &[CycloReal], v: &[CycloReal]) -> Vector {
    let c = dot(a, v) * CycloReal::from_int(2);
    if c.is_zero() {
        return v.to_vec();
    }
    v.iter().zip(a).map(|(x, y)| x - &(&c * y)).collect()
}

fn coxeter_label(rs: &RootSystem, a: usize, b: usize) -> u32 {
    // ⟨u_a, u_b⟩ = −cos(π/m) for distinct simple roots
    let c = -dot(rs.unit(a), rs.unit(b));
    let limit = match rs.kind {
        RootType::I2(n) => n,
        _ => 5,
    };
    (2..=limit.max(5))
        .find(|&m| CycloReal::make_cos(1, m) == c)
        .unwrap_or_else(|| panic!("simple roots at an unexpected angle"))
}

fn order_simple(kind: RootType, all: &[Vector], simple: Vec<usize>) -> Vec<usize> {
    match kind {
        RootType::I2(n) => vec![0, n as usize - 1],
        _ => {
            // path diagram with the 5-edge at one end
            let tmp = RootSystem {
                kind,
                units: all.to_vec(),
                n_pos: 0,
                simple: Vec::new(),
                reflections: Vec::new(),
                orbit: Vec::new(),
                n_orbits: 0,
            };
            let label = |a: usize, b: usize| coxeter_label(&tmp, a, b);
            let start = *simple
                .iter()
                .find(|&&a| {
                    let nbrs: Vec<u32> = simple.iter().filter(|&&b| b != a).map(|&b| label(a, b)).filter(|&m| m > 2).collect();
                    nbrs == vec![5]
                })
                .expect("diagram has a 5-labelled end");
            let mut order = vec![start];
            while order.len() < simple.len() {
                let last = *order.last().unwrap();
                let next = *simple
                    .iter()
                    .find(|&&b| !order.contains(&b) && label(last, b) > 2)
                    .expect("diagram is a path");
                order.push(next);
            }
            order
        }
    }
}

// Unit roots at angles kπ/n; positives k = 0..n−1.
fn dihedral_roots(n: u32) -> Vec<Vector> {
    let pos: Vec<Vector> = (0..n as i64)
        .map(|k| vec![CycloReal::make_cos(k, n), CycloReal::make_sin(k, n)])
        .collect();
    let neg: Vec<Vector> = pos.iter().map(|u| u.iter().map(|x| -x).collect()).collect();
    pos.into_iter().chain(neg).collect()
}

// The 30 (H3) or 120 (H4) unit vectors of the icosahedral root systems.
fn icosahedral_roots(rank: usize) -> Vec<Vector> {
    let half = CycloReal::from_ratio(1, 2);
    let tau = CycloReal::golden();
    let tau_inv = &tau - &CycloReal::one();
    let mut out: Vec<Vector> = Vec::new();
    let zero = CycloReal::zero();
    let one = CycloReal::one();
    for i in 0..rank {
        for s in [1, -1] {
            let mut v = vec![zero.clone(); rank];
            v[i] = CycloReal::from_int(s);
            out.push(v);
        }
    }
    if rank == 4 {
        for mask in 0..16 {
            out.push((0..4).map(|i| if mask >> i & 1 == 1 { -&half } else { half.clone() }).collect());
        }
    }
    let base: Vec<CycloReal> = match rank {
        3 => vec![&tau * &half, half.clone(), &tau_inv * &half],
        _ => vec![&tau * &half, half.clone(), &tau_inv * &half, zero.clone()],
    };
    for perm in even_permutations(rank) {
        let nonzero = base.iter().filter(|x| !x.is_zero()).count();
        for mask in 0..(1u32 << nonzero) {
            let mut signed = base.clone();
            let mut bit = 0;
            for x in signed.iter_mut() {
                if !x.is_zero() {
                    if mask >> bit & 1 == 1 {
                        *x = -&*x;
                    }
                    bit += 1;
                }
            }
            let mut v = vec![zero.clone(); rank];
            for (i, &p) in perm.iter().enumerate() {
                v[p] = signed[i].clone();
            }
            out.push(v);
        }
    }
    debug_assert!(out.iter().all(|v| dot(v, v) == one));
    out
}

fn even_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permute(&mut p, 0, &mut out);
    out.retain(|p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        inversions % 2 == 0
    });
    out.sort();
    out
}

fn permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

/// A W-invariant parameter function with rational values, one per root orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterFunction {
    values: Vec<Rational>,
}

impl ParameterFunction {
    /// The same value on every root.
    pub fn constant(rs: &RootSystem, c: Rational) -> ParameterFunction {
        ParameterFunction { values: vec![c; rs.num_orbits()] }
    }

    /// One value per orbit, orbit `i` being the orbit of the `i`-th simple root
    /// (for I2(even): orbit 0 ∋ α₁, orbit 1 ∋ α₂).
    pub fn per_orbit(rs: &RootSystem, values: Vec<Rational>) -> Result<ParameterFunction, Error> {
        if values.len() != rs.num_orbits() {
            return Err(Error::Usage(format!(
                "{} has {} root orbit(s) but {} parameter value(s) were given",
                rs.kind(),
                rs.num_orbits(),
                values.len()
            )));
        }
        Ok(ParameterFunction { values })
    }

    pub fn value(&self, rs: &RootSystem, root: usize) -> &Rational {
        &self.values[rs.orbit_of(root)]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for n in 3..=12 {
            let rs = RootSystem::build(RootType::I2(n)).unwrap();
            assert_eq!(rs.num_positive(), n as usize);
            assert_eq!(rs.num_orbits(), if n % 2 == 0 { 2 } else { 1 });
        }
        let h3 = RootSystem::build(RootType::H3).unwrap();
        assert_eq!(h3.num_positive(), 15);
        assert_eq!(h3.num_orbits(), 1);
        assert_eq!(h3.coxeter_matrix(), vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]);
    }

    #[test]
    fn h4_diagram() {
        let h4 = RootSystem::build(RootType::H4).unwrap();
        assert_eq!(h4.num_positive(), 60);
        let m = h4.coxeter_matrix();
        assert_eq!((m[0][1], m[1][2], m[2][3], m[0][2], m[0][3], m[1][3]), (5, 3, 3, 2, 2, 2));
    }

    #[test]
    fn pairing_normalization() {
        let rs = RootSystem::build(RootType::I2(3)).unwrap();
        let (a1, a2) = (rs.simple()[0], rs.simple()[1]);
        assert_eq!(rs.pairing(a1, &rs.coroot(a1)), CycloReal::from_int(2));
        assert_eq!(rs.pairing(a1, &rs.coroot(a2)), CycloReal::from_int(-1));
        assert_eq!(rs.pairing(a1, &[CycloReal::zero(), CycloReal::zero()]), CycloReal::zero());
        let i5 = RootSystem::build(RootType::I2(5)).unwrap();
        let c = dot(i5.unit(i5.simple()[0]), i5.unit(i5.simple()[1]));
        assert_eq!(c, -CycloReal::make_cos(1, 5));
    }

    #[test]
    fn beta_sequence() {
        for n in 3..=10u32 {
            let rs = RootSystem::build(RootType::I2(n)).unwrap();
            let a1 = rs.coroot(rs.simple()[0]);
            let a2 = rs.coroot(rs.simple()[1]);
            let s1 = CycloReal::make_sin(1, n);
            for i in 0..n as usize {
                let b = rs.beta(i).unwrap();
                let lhs: Vector = b.iter().map(|x| x * &s1).collect();
                let p = CycloReal::make_sin(i as i64 + 1, n);
                let q = CycloReal::make_sin(i as i64, n);
                let rhs: Vector = a1.iter().zip(&a2).map(|(x, y)| x * &p + y * &q).collect();
                assert_eq!(lhs, rhs, "n = {n}, i = {i}");
            }
            assert!(rs.beta(n as usize).is_err());
            let sum: Vector = a1.iter().zip(&a2).map(|(x, y)| x + y).collect();
            if n == 3 {
                assert_eq!(rs.beta(1).unwrap(), sum);
            }
        }
    }

    #[test]
    fn parse_types() {
        assert_eq!(RootType::parse("i2", Some(7)).unwrap(), RootType::I2(7));
        assert!(RootType::parse("I2", Some(2)).is_err());
        assert!(RootType::parse("H3", Some(3)).is_err());
        assert!(RootType::parse("E8", None).is_err());
    }
}
