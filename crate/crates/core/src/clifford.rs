//! The Clifford algebra of the ambient space and the double cover W̃ of W.
//!
//! Generators `e_i` come from the orthonormal basis, with `e_i² = −1` and
//! `e_i e_j = −e_j e_i`. Elements are dense over the `2^r` blades.
//!
//! W̃ is indexed as `2w + b`: the element `(−1)^b · lift(w)`, where `lift(w)`
//! is the product of the `f`'s along the shortest word of `w`. So index `1`
//! is `−1` and the covering map is `x ↦ x / 2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::coxeter::CoxeterGroup;
use crate::group::FiniteGroup;
use crate::rootsys::{ParameterFunction, RootSystem};
use crate::scalars::{rat, CycloReal, Rational};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    coeffs: Vec<CycloReal>,
}

fn blade_sign(a: usize, b: usize) -> bool {
    // true for a minus sign
    let mut swaps = 0;
    let mut bb = b;
    while bb != 0 {
        let i = bb.trailing_zeros();
        swaps += (a >> (i + 1)).count_ones();
        bb &= bb - 1;
    }
    (swaps + (a & b).count_ones()) % 2 == 1
}

impl CliffordElement {
    pub fn zero(rank: usize) -> CliffordElement {
        CliffordElement { coeffs: vec![CycloReal::zero(); 1 << rank] }
    }

    pub fn scalar(rank: usize, c: CycloReal) -> CliffordElement {
        let mut x = CliffordElement::zero(rank);
        x.coeffs[0] = c;
        x
    }

    pub fn one(rank: usize) -> CliffordElement {
        CliffordElement::scalar(rank, CycloReal::one())
    }

    /// The generator `e_i` (0-based).
    pub fn generator(rank: usize, i: usize) -> CliffordElement {
        let mut x = CliffordElement::zero(rank);
        x.coeffs[1 << i] = CycloReal::one();
        x
    }

    /// Σ v_i e_i.
    pub fn from_vector(v: &[CycloReal]) -> CliffordElement {
        let mut x = CliffordElement::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            x.coeffs[1 << i] = c.clone();
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len().trailing_zeros() as usize
    }

    /// Coefficient of the blade given by a bitmask of generators.
    pub fn coeff(&self, blade: usize) -> &CycloReal {
        &self.coeffs[blade]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, o: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero(self.rank());
        for (a, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in o.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let t = x * y;
                let slot = &mut out.coeffs[a ^ b];
                *slot = if blade_sign(a, b) { &*slot - &t } else { &*slot + &t };
            }
        }
        out
    }

    pub fn add(&self, o: &CliffordElement) -> CliffordElement {
        CliffordElement { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, o: &CliffordElement) -> CliffordElement {
        CliffordElement { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn scale(&self, c: &CycloReal) -> CliffordElement {
        CliffordElement { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> CliffordElement {
        CliffordElement { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    /// The anti-involution with `(ab)ᵗ = bᵗaᵗ` and `vᵗ = −v` on vectors.
    pub fn transpose(&self) -> CliffordElement {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(a, x)| {
                let k = a.count_ones();
                if (k * (k + 1) / 2) % 2 == 1 {
                    -x
                } else {
                    x.clone()
                }
            })
            .collect();
        CliffordElement { coeffs }
    }

    /// `Some(1)` for even, `Some(-1)` for odd, `None` for mixed parity.
    pub fn parity(&self) -> Option<i8> {
        let even = self.coeffs.iter().enumerate().any(|(a, x)| a.count_ones() % 2 == 0 && !x.is_zero());
        let odd = self.coeffs.iter().enumerate().any(|(a, x)| a.count_ones() % 2 == 1 && !x.is_zero());
        match (even, odd) {
            (true, false) | (false, false) => Some(1),
            (false, true) => Some(-1),
            (true, true) => None,
        }
    }

    /// Grade-one part as a vector.
    pub fn vector_part(&self) -> Vec<CycloReal> {
        (0..self.rank()).map(|i| self.coeffs[1 << i].clone()).collect()
    }

    /// Whether `self = sign · other` for some sign, and which.
    fn sign_against(&self, other: &CliffordElement) -> Option<bool> {
        if self == other {
            Some(false)
        } else if *self == other.neg() {
            Some(true)
        } else {
            None
        }
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({x})")?;
            for i in 0..self.rank() {
                if a >> i & 1 == 1 {
                    write!(f, "*e{}", i + 1)?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `f_α = α∨/|α∨|`, i.e. the unit vector along α.
pub fn f_alpha(rs: &RootSystem, root: usize) -> CliffordElement {
    CliffordElement::from_vector(rs.unit(root))
}

/// An angle `num·π/den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle {
    pub num: u32,
    pub den: u32,
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => f.write_str("0"),
            (1, 1) => f.write_str("pi"),
            (1, d) => write!(f, "pi/{d}"),
            (k, 1) => write!(f, "{k}pi"),
            (k, d) => write!(f, "{k}pi/{d}"),
        }
    }
}

/// The central element attached to a parameter function.
#[derive(Clone, Debug)]
pub struct Omega {
    /// As an element of the Clifford algebra.
    pub element: CliffordElement,
    /// As a group-algebra combination Σ coeff·x over W̃ indices, sorted, no zero coefficients.
    pub terms: Vec<(usize, Rational)>,
}

/// The double cover W̃ ⊂ Pin together with its covering map onto W.
pub struct PinCover {
    weyl: Arc<CoxeterGroup>,
    lifts: Vec<CliffordElement>,
    group: FiniteGroup,
}

impl fmt::Debug for PinCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PinCover({}, order {})", self.weyl.root_system().kind(), self.group.order())
    }
}

impl PinCover {
    pub fn new(weyl: Arc<CoxeterGroup>) -> Result<PinCover, Error> {
        let rs = weyl.root_system();
        let g = weyl.group();
        let r = rs.rank();
        let order = g.order();
        let gens: Vec<CliffordElement> = rs.simple().iter().map(|&a| f_alpha(rs, a)).collect();

        let mut by_len: Vec<usize> = (0..order).collect();
        by_len.sort_by_key(|&w| g.word_length(w));
        let mut lifts = vec![CliffordElement::zero(r); order];
        lifts[0] = CliffordElement::one(r);
        for w in by_len.into_iter().skip(1) {
            let last = *g.word(w).last().unwrap() as usize;
            let prefix = g.right_mul(w, last);
            lifts[w] = lifts[prefix].mul(&gens[last]);
        }

        let mismatch = || Error::Consistency(format!("{}: lifts do not close into a double cover", rs.kind()));
        let mut right = vec![0u32; 2 * order * r];
        let mut left = vec![0u32; 2 * order * r];
        for w in 0..order {
            for (i, f) in gens.iter().enumerate() {
                let ws = g.right_mul(w, i);
                let b = lifts[w].mul(f).sign_against(&lifts[ws]).ok_or_else(mismatch)? as usize;
                right[(2 * w) * r + i] = (2 * ws + b) as u32;
                right[(2 * w + 1) * r + i] = (2 * ws + (b ^ 1)) as u32;
                let sw = g.left_mul(i, w);
                let b = f.mul(&lifts[w]).sign_against(&lifts[sw]).ok_or_else(mismatch)? as usize;
                left[i * 2 * order + 2 * w] = (2 * sw + b) as u32;
                left[i * 2 * order + 2 * w + 1] = (2 * sw + (b ^ 1)) as u32;
            }
        }
        let mut group = FiniteGroup::from_tables(2 * order, r, right, left);
        if group.order() != 2 * order || group.element_order(1) != 2 {
            return Err(mismatch());
        }
        // classes grouped under their image class in W
        let key: HashMap<usize, (usize, usize)> =
            group.classes().iter().map(|c| (c.rep, (g.class_of(c.rep / 2), c.rep))).collect();
        group.sort_classes_by(|c| key[&c.rep]);
        Ok(PinCover { weyl, lifts, group })
    }

    pub fn weyl(&self) -> &CoxeterGroup {
        &self.weyl
    }

    pub fn weyl_arc(&self) -> &Arc<CoxeterGroup> {
        &self.weyl
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Index of the central element −1.
    pub fn minus_one(&self) -> usize {
        1
    }

    /// The covering map W̃ → W.
    pub fn project(&self, x: usize) -> usize {
        x / 2
    }

    /// −x.
    pub fn negate(&self, x: usize) -> usize {
        x ^ 1
    }

    /// The chosen lift of a W element.
    pub fn lift(&self, w: usize) -> usize {
        2 * w
    }

    pub fn element(&self, x: usize) -> CliffordElement {
        let a = &self.lifts[x / 2];
        if x.is_multiple_of(2) {
            a.clone()
        } else {
            a.neg()
        }
    }

    /// Whether x is an even element of the algebra, i.e. p(x) has determinant 1.
    pub fn is_even(&self, x: usize) -> bool {
        self.weyl.det(x / 2) == 1
    }

    /// W̃′ = p⁻¹(W′).
    pub fn in_prime(&self, x: usize) -> bool {
        self.weyl.in_w_prime(x / 2)
    }

    /// W̃ index of `f_α` for any root.
    pub fn f_index(&self, root: usize) -> usize {
        let w = self.weyl.reflection_element(root);
        let f = f_alpha(self.weyl.root_system(), root);
        let b = f.sign_against(&self.lifts[w]).expect("f_α lifts s_α") as usize;
        2 * w + b
    }

    /// Check `ε(a)·v·a⁻¹ = p(a)v` on the basis vectors, `aᵗa = 1`, and parity homogeneity.
    pub fn verify_element(&self, x: usize) -> Result<(), Error> {
        let r = self.weyl.rank();
        let a = self.element(x);
        let fail = |what: &str| Err(Error::Consistency(format!("W̃ element {x}: {what}")));
        let at = a.transpose();
        if at.mul(&a) != CliffordElement::one(r) {
            return fail("aᵗa ≠ 1");
        }
        let Some(parity) = a.parity() else {
            return fail("mixed parity");
        };
        if (parity == 1) != self.is_even(x) {
            return fail("parity disagrees with the determinant");
        }
        let m = self.weyl.matrix(x / 2);
        for j in 0..r {
            let mut img = a.mul(&CliffordElement::generator(r, j)).mul(&at);
            if parity == -1 {
                img = img.neg();
            }
            let expect: Vec<CycloReal> = (0..r).map(|k| m[k][j].clone()).collect();
            if img != CliffordElement::from_vector(&expect) {
                return fail("twisted conjugation does not match the covering map");
            }
        }
        Ok(())
    }

    /// Pairs (α, β) of positive roots with s_α(β) < 0, including α = β.
    pub fn negative_pairs(&self) -> Vec<(usize, usize)> {
        let rs = self.weyl.root_system();
        let n = rs.num_positive();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !rs.is_positive(rs.reflect_index(a, b)))
            .collect()
    }

    /// Ω = −(1/4) Σ c_α c_β |α∨||β∨| f_α f_β over the negative pairs; here |α∨||β∨| = 2.
    pub fn omega(&self, c: &ParameterFunction) -> Omega {
        let rs = self.weyl.root_system();
        let r = rs.rank();
        let f: Vec<CliffordElement> = (0..rs.num_positive()).map(|a| f_alpha(rs, a)).collect();
        let fi: Vec<usize> = (0..rs.num_positive()).map(|a| self.f_index(a)).collect();
        let mut element = CliffordElement::zero(r);
        let mut terms: BTreeMap<usize, Rational> = BTreeMap::new();
        for (a, b) in self.negative_pairs() {
            let coeff = rat(-1, 2) * c.value(rs, a) * c.value(rs, b);
            if coeff == rat(0, 1) {
                continue;
            }
            element = element.add(&f[a].mul(&f[b]).scale(&CycloReal::from_rational(&coeff)));
            *terms.entry(self.group.mul(fi[a], fi[b])).or_insert_with(|| rat(0, 1)) += coeff;
        }
        let terms = terms.into_iter().filter(|(_, q)| *q != rat(0, 1)).collect();
        Omega { element, terms }
    }

    /// Counts of pairs α ≠ β in the negative-pair set by the angle between them.
    pub fn angle_census(&self) -> BTreeMap<Angle, usize> {
        let rs = self.weyl.root_system();
        let den = match rs.kind() {
            crate::rootsys::RootType::I2(n) => n,
            _ => 30,
        };
        let cosines: Vec<(Angle, CycloReal)> = (0..=den)
            .map(|k| {
                let g = num_integer::gcd(k, den);
                (Angle { num: k / g, den: den / g }, CycloReal::make_cos(k as i64, den))
            })
            .collect();
        let mut out = BTreeMap::new();
        for (a, b) in self.negative_pairs().into_iter().filter(|(a, b)| a != b) {
            let c = crate::rootsys::dot(rs.unit(a), rs.unit(b));
            let angle = cosines.iter().find(|(_, v)| *v == c).expect("angle is a rational multiple of π").0;
            *out.entry(angle).or_insert(0) += 1;
        }
        out
    }
}

impl Omega {
    /// Whether the element commutes with every generator `e_i`.
    pub fn is_central(&self) -> bool {
        let r = self.element.rank();
        (0..r).all(|i| {
            let e = CliffordElement::generator(r, i);
            e.mul(&self.element) == self.element.mul(&e)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootType;

    fn cover(kind: RootType) -> PinCover {
        let rs = Arc::new(RootSystem::build(kind).unwrap());
        PinCover::new(Arc::new(CoxeterGroup::new(rs).unwrap())).unwrap()
    }

    #[test]
    fn algebra_relations() {
        let e1 = CliffordElement::generator(3, 0);
        let e2 = CliffordElement::generator(3, 1);
        assert_eq!(e1.mul(&e1), CliffordElement::scalar(3, CycloReal::from_int(-1)));
        assert_eq!(e1.mul(&e2), e2.mul(&e1).neg());
        let e12 = e1.mul(&e2);
        assert_eq!(e12.mul(&e12), CliffordElement::scalar(3, CycloReal::from_int(-1)));
        assert_eq!(e12.transpose(), e2.transpose().mul(&e1.transpose()));
        assert_eq!(e1.transpose(), e1.neg());
    }

    #[test]
    fn dihedral_cover() {
        for n in 3..=9u32 {
            let p = cover(RootType::I2(n));
            assert_eq!(p.order(), 4 * n as usize);
            let g = p.group();
            let (f1, f2) = (g.generator(0), g.generator(1));
            assert_eq!(g.mul(f1, f1), 1);
            assert_eq!(g.pow(g.mul(f1, f2), n as usize), 1);
            for x in 0..p.order() {
                p.verify_element(x).unwrap();
            }
        }
    }

    #[test]
    fn reflection_triple_products() {
        let p = cover(RootType::I2(5));
        let rs = p.weyl().root_system();
        for a in 0..rs.num_roots() {
            let fa = f_alpha(rs, a);
            assert_eq!(fa.mul(&fa), CliffordElement::scalar(2, CycloReal::from_int(-1)));
            for b in 0..rs.num_roots() {
                let lhs = fa.mul(&f_alpha(rs, b)).mul(&fa);
                assert_eq!(lhs, f_alpha(rs, rs.reflect_index(a, b)));
            }
        }
    }

    #[test]
    fn h3_cover() {
        let p = cover(RootType::H3);
        assert_eq!(p.order(), 240);
        for x in 0..p.order() {
            p.verify_element(x).unwrap();
        }
        let w0 = p.lift(p.weyl().longest());
        let g = p.group();
        // with e_i² = −1 the pseudoscalar e1e2e3 squares to +1
        assert_eq!(g.mul(w0, w0), 0);
        let e = |i| CliffordElement::generator(3, i);
        let volume = e(0).mul(&e(1)).mul(&e(2));
        assert!(p.element(w0) == volume || p.element(w0).neg() == volume);
        assert!((0..p.order()).all(|x| g.mul(x, w0) == g.mul(w0, x)));
        let census = p.angle_census();
        let want = BTreeMap::from([
            (Angle { num: 1, den: 5 }, 36),
            (Angle { num: 2, den: 5 }, 12),
            (Angle { num: 1, den: 3 }, 20),
        ]);
        assert_eq!(census, want);
    }

    #[test]
    fn h4_cover() {
        let p = cover(RootType::H4);
        assert_eq!(p.order(), 28800);
        for i in 0..4 {
            p.verify_element(p.group().generator(i)).unwrap();
        }
        let census = p.angle_census();
        let want = BTreeMap::from([
            (Angle { num: 1, den: 5 }, 432),
            (Angle { num: 2, den: 5 }, 144),
            (Angle { num: 1, den: 3 }, 400),
        ]);
        assert_eq!(census, want);
        assert!(p.omega(&ParameterFunction::constant(p.weyl().root_system(), rat(1, 1))).is_central());
    }

    #[test]
    fn omega_central() {
        for kind in [RootType::I2(5), RootType::I2(6), RootType::H3] {
            let p = cover(kind);
            let rs = p.weyl().root_system();
            let c = ParameterFunction::constant(rs, rat(1, 1));
            let om = p.omega(&c);
            assert!(om.is_central());
            assert_eq!(om.element.parity(), Some(1));
            let g = p.group();
            // as a group-algebra element: invariant under conjugation by generators
            for i in 0..g.num_generators() {
                let s = g.generator(i);
                let mut conj: Vec<(usize, Rational)> = om.terms.iter().map(|(x, q)| (g.conj(*x, s), q.clone())).collect();
                conj.sort();
                assert_eq!(conj, om.terms);
            }
        }
    }

    #[test]
    fn dihedral_census() {
        for n in [5u32, 7, 9] {
            let p = cover(RootType::I2(n));
            let census = p.angle_census();
            for k in 1..=(n - 1) / 2 {
                let g = num_integer::gcd(k, n);
                let angle = Angle { num: k / g, den: n / g };
                assert_eq!(census.get(&angle).copied().unwrap_or(0), (2 * n - 4 * k) as usize);
            }
        }
    }
}
