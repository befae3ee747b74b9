//! The reflection group W of a root system.
//!
//! An element is determined by where it sends the simple roots, so W is
//! enumerated as permutations of root indices. Matrices in the ambient
//! orthonormal basis are produced on demand.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::linalg::{self, Matrix};
use crate::rootsys::RootSystem;
use crate::scalars::CycloReal;
use crate::Error;

const ELEMENT_CAP: usize = 200_000;

/// A standard parabolic subgroup W_J.
#[derive(Clone, Debug)]
pub struct Parabolic {
    /// Positions (into the ordered simple roots) of the generators.
    pub subset: Vec<usize>,
    pub group: FiniteGroup,
    /// Element indices of W_J inside W.
    pub elements: Vec<usize>,
}

pub struct CoxeterGroup {
    rs: Arc<RootSystem>,
    group: FiniteGroup,
    images: Vec<u16>,
    index: HashMap<Vec<u16>, u32>,
    simple_inv: Matrix<CycloReal>,
}

impl std::fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CoxeterGroup({}, order {})", self.rs.kind(), self.group.order())
    }
}

impl CoxeterGroup {
    pub fn new(rs: Arc<RootSystem>) -> Result<CoxeterGroup, Error> {
        let r = rs.rank();
        let nroots = rs.num_roots();
        let simple: Vec<usize> = rs.simple().to_vec();
        let gens: Vec<&[u16]> = simple.iter().map(|&a| rs.reflection(a)).collect();

        let mut images: Vec<u16> = (0..nroots as u16).collect();
        let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
        index.insert(simple.iter().map(|&a| a as u16).collect(), 0);
        let mut right: Vec<u32> = Vec::new();
        let mut head = 0;
        while head * nroots < images.len() {
            let x = images[head * nroots..(head + 1) * nroots].to_vec();
            for g in &gens {
                let y: Vec<u16> = g.iter().map(|&b| x[b as usize]).collect();
                let key: Vec<u16> = simple.iter().map(|&a| y[a]).collect();
                let next = index.len() as u32;
                let id = *index.entry(key).or_insert(next);
                if id == next {
                    if index.len() > ELEMENT_CAP {
                        return Err(Error::Unsupported(format!("{}: more than {ELEMENT_CAP} elements", rs.kind())));
                    }
                    images.extend_from_slice(&y);
                }
                right.push(id);
            }
            head += 1;
        }
        let order = index.len();
        let mut left = Vec::with_capacity(order * r);
        for g in &gens {
            for x in 0..order {
                let key: Vec<u16> = simple.iter().map(|&a| g[images[x * nroots + a] as usize]).collect();
                left.push(index[&key]);
            }
        }
        let mut group = FiniteGroup::from_tables(order, r, right, left);

        let basis: Matrix<CycloReal> = (0..r).map(|i| simple.iter().map(|&a| rs.unit(a)[i].clone()).collect()).collect();
        let simple_inv = linalg::inverse(&basis)
            .ok_or_else(|| Error::Consistency("simple roots are linearly dependent".into()))?;

        let mut w = CoxeterGroup { rs, group: group.clone(), images, index, simple_inv };
        let keys: Vec<(CycloReal, Vec<CycloReal>)> =
            group.classes().iter().map(|c| (w.trace(c.rep), w.exterior_traces(c.rep))).collect();
        let id_of: HashMap<usize, usize> = group.classes().iter().enumerate().map(|(i, c)| (c.rep, i)).collect();
        group.sort_classes_by(|c| {
            let k = &keys[id_of[&c.rep]];
            ClassKey { size: c.size, trace: k.0.clone(), ext: k.1.clone() }
        });
        w.group = group;
        Ok(w)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Image of a root index under an element.
    pub fn act(&self, x: usize, root: usize) -> usize {
        self.images[x * self.rs.num_roots() + root] as usize
    }

    /// Element with the given images of the simple roots.
    pub fn from_simple_images(&self, images: &[u16]) -> Option<usize> {
        self.index.get(images).map(|&i| i as usize)
    }

    /// The reflection in a root, as an element index.
    pub fn reflection_element(&self, root: usize) -> usize {
        let key: Vec<u16> = self.rs.simple().iter().map(|&a| self.rs.reflect_index(root, a) as u16).collect();
        self.index[&key] as usize
    }

    /// Number of positive roots sent to negative ones.
    pub fn length(&self, x: usize) -> usize {
        (0..self.rs.num_positive()).filter(|&a| !self.rs.is_positive(self.act(x, a))).count()
    }

    pub fn det(&self, x: usize) -> i64 {
        if self.group.word_length(x).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Matrix in the ambient orthonormal basis.
    pub fn matrix(&self, x: usize) -> Matrix<CycloReal> {
        let r = self.rank();
        let simple = self.rs.simple();
        let img: Matrix<CycloReal> =
            (0..r).map(|i| simple.iter().map(|&a| self.rs.unit(self.act(x, a))[i].clone()).collect()).collect();
        linalg::mat_mul(&img, &self.simple_inv)
    }

    pub fn trace(&self, x: usize) -> CycloReal {
        let m = self.matrix(x);
        (0..m.len()).map(|i| m[i][i].clone()).sum()
    }

    /// Traces of x on ∧⁰V, …, ∧ʳV (elementary symmetric functions of the eigenvalues).
    pub fn exterior_traces(&self, x: usize) -> Vec<CycloReal> {
        let r = self.rank();
        let power_sums: Vec<CycloReal> = (1..=r).map(|k| self.trace(self.group.pow(x, k))).collect();
        let mut e = vec![CycloReal::one()];
        for k in 1..=r {
            let mut acc = CycloReal::zero();
            for i in 1..=k {
                let t = &e[k - i] * &power_sums[i - 1];
                acc = if i % 2 == 1 { acc + t } else { acc - t };
            }
            e.push(acc * CycloReal::from_ratio(1, k as i64));
        }
        e
    }

    /// No nonzero fixed vector, i.e. det(M − 1) ≠ 0.
    pub fn is_elliptic(&self, x: usize) -> bool {
        let mut m = self.matrix(x);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] - &CycloReal::one();
        }
        !linalg::det(&m).is_zero()
    }

    /// Indices of the classes whose elements are elliptic.
    pub fn elliptic_classes(&self) -> Vec<usize> {
        (0..self.group.num_classes()).filter(|&c| self.is_elliptic(self.group.classes()[c].rep)).collect()
    }

    pub fn elliptic_class_count(&self) -> usize {
        self.elliptic_classes().len()
    }

    /// W′: all of W in odd rank, the determinant-one part in even rank.
    pub fn in_w_prime(&self, x: usize) -> bool {
        self.rank() % 2 == 1 || self.det(x) == 1
    }

    pub fn w_prime_elements(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.in_w_prime(x)).collect()
    }

    pub fn w_prime_index(&self) -> usize {
        if self.rank() % 2 == 1 {
            1
        } else {
            2
        }
    }

    /// Elements conjugate to a simple reflection.
    pub fn reflections(&self) -> Vec<usize> {
        let classes: Vec<usize> = (0..self.rank()).map(|i| self.group.class_of(self.group.generator(i))).collect();
        (0..self.order()).filter(|&x| classes.contains(&self.group.class_of(x))).collect()
    }

    /// The element sending every positive root to a negative one.
    pub fn longest(&self) -> usize {
        let n = self.rs.num_positive();
        (0..self.order()).find(|&x| self.group.word_length(x) == n).expect("longest element exists")
    }

    /// All W_J with J a proper subset of the simple roots, by size then lexicographically.
    pub fn standard_parabolics(&self) -> Result<Vec<Parabolic>, Error> {
        let r = self.rank();
        let mut subsets: Vec<Vec<usize>> =
            (0u32..(1 << r) - 1).map(|mask| (0..r).filter(|i| mask >> i & 1 == 1).collect()).collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subsets
            .into_iter()
            .map(|subset| {
                let gens: Vec<usize> = subset.iter().map(|&i| self.group.generator(i)).collect();
                let (group, elements) = self.group.subgroup(&gens)?;
                Ok(Parabolic { subset, group, elements })
            })
            .collect()
    }
}

#[derive(PartialEq, Eq)]
struct ClassKey {
    size: usize,
    trace: CycloReal,
    ext: Vec<CycloReal>,
}

impl PartialOrd for ClassKey {
    fn partial_cmp(&self, o: &ClassKey) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ClassKey {
    fn cmp(&self, o: &ClassKey) -> Ordering {
        self.size.cmp(&o.size).then_with(|| self.trace.cmp(&o.trace)).then_with(|| self.ext.cmp(&o.ext))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootType;

    fn build(kind: RootType) -> CoxeterGroup {
        CoxeterGroup::new(Arc::new(RootSystem::build(kind).unwrap())).unwrap()
    }

    fn is_identity(m: &Matrix<CycloReal>) -> bool {
        m.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| *x == if i == j { CycloReal::one() } else { CycloReal::zero() })
        })
    }

    #[test]
    fn dihedral() {
        for n in 3..=10u32 {
            let w = build(RootType::I2(n));
            assert_eq!(w.order(), 2 * n as usize);
            let classes = if n % 2 == 1 { (n as usize + 3) / 2 } else { n as usize / 2 + 3 };
            assert_eq!(w.group().num_classes(), classes);
            let ell = if n % 2 == 1 { (n as usize - 1) / 2 } else { n as usize / 2 };
            assert_eq!(w.elliptic_class_count(), ell);
            assert_eq!(w.reflections().len(), n as usize);
            let s1s2 = w.group().mul(w.group().generator(0), w.group().generator(1));
            assert_eq!(w.group().element_order(s1s2), n as usize);
            assert_eq!(w.w_prime_elements().len(), n as usize);
            assert_eq!(w.standard_parabolics().unwrap().len(), 3);
        }
    }

    #[test]
    fn h3_structure() {
        let w = build(RootType::H3);
        assert_eq!(w.order(), 120);
        assert_eq!(w.group().num_classes(), 10);
        assert_eq!(w.elliptic_class_count(), 4);
        assert_eq!(w.reflections().len(), 15);
        assert_eq!(w.w_prime_index(), 1);
        let w0 = w.longest();
        let m = w.matrix(w0);
        assert!(m.iter().enumerate().all(|(i, row)| row[i] == CycloReal::from_int(-1)));
        assert!(w.is_elliptic(w0));
        assert!(!w.is_elliptic(0));
        let ps = w.standard_parabolics().unwrap();
        assert_eq!(ps.len(), 7);
        assert_eq!(ps.iter().map(|p| p.group.order()).collect::<Vec<_>>(), vec![1, 2, 2, 2, 10, 4, 6]);
    }

    #[test]
    fn elements_are_orthogonal_and_lengths_agree() {
        for kind in [RootType::I2(5), RootType::I2(8), RootType::H3] {
            let w = build(kind);
            for x in 0..w.order() {
                let m = w.matrix(x);
                let mt: Matrix<CycloReal> = (0..m.len()).map(|i| m.iter().map(|row| row[i].clone()).collect()).collect();
                assert!(is_identity(&linalg::mat_mul(&mt, &m)));
                assert_eq!(w.length(x), w.group().word_length(x));
                let d = linalg::det(&m);
                assert_eq!(d, CycloReal::from_int(w.det(x)));
                if w.is_elliptic(x) {
                    assert_eq!(w.det(x), if w.rank().is_multiple_of(2) { 1 } else { -1 });
                    assert!(w.in_w_prime(x));
                }
            }
        }
    }

    #[test]
    fn h4_structure() {
        let w = build(RootType::H4);
        assert_eq!(w.order(), 14400);
        assert_eq!(w.group().num_classes(), 34);
        assert_eq!(w.elliptic_class_count(), 20);
        assert_eq!(w.reflections().len(), 60);
        assert_eq!(w.standard_parabolics().unwrap().len(), 15);
    }

    #[test]
    fn reflection_elements_match() {
        let w = build(RootType::I2(7));
        for a in 0..w.root_system().num_roots() {
            let s = w.reflection_element(a);
            assert_eq!(w.act(s, a), w.root_system().negate(a));
            assert_eq!(w.group().element_order(s), 2);
        }
    }
}
