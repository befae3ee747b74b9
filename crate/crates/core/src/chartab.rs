//! Exact character tables of finite groups.
//!
//! Central characters are the common eigenvectors of the class-sum
//! matrices. They are found over a prime field 𝔽_p with p ≡ 1 (mod exponent),
//! turned into character values there, and lifted to ℚ(ζ_e) by recovering the
//! eigenvalue multiplicities of each element. The lifted table is accepted
//! only after both orthogonality relations hold exactly.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::group::FiniteGroup;
use crate::linalg;
use crate::scalars::{pow_mod, prime_congruent_one, prime_factors, Cyclo, PrimeFieldScalar, Rational};
use crate::Error;

mod modp;

/// Values on the classes of some group, in that group's class order.
pub type ClassFunction = Vec<Cyclo>;

const SEED: u64 = 0x5eed_c1a5_5e5;
const PRIME_FLOOR: u64 = 1 << 50;
const ATTEMPTS: usize = 8;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    sizes: Vec<usize>,
    reps: Vec<usize>,
    inverse: Vec<usize>,
    exponent: usize,
    chars: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn compute(g: &FiniteGroup) -> Result<CharacterTable, Error> {
        let k = g.num_classes();
        let exponent = g.exponent();
        let constants = class_constants(g);
        let power_maps: Vec<Vec<usize>> = g
            .classes()
            .iter()
            .map(|c| {
                let o = g.element_order(c.rep);
                let mut x = 0;
                (0..o)
                    .map(|_| {
                        let cls = g.class_of(x);
                        x = g.mul(x, c.rep);
                        cls
                    })
                    .collect()
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut floor = PRIME_FLOOR;
        let mut last_err = String::new();
        for _ in 0..ATTEMPTS {
            let p = prime_congruent_one(exponent as u64, floor);
            floor = p + 1;
            match modular_table(g, &constants, p, &mut rng) {
                Ok(table) => {
                    let chars = lift(g, &table, &power_maps, exponent, p, &mut rng)?;
                    let mut t = CharacterTable {
                        order: g.order(),
                        sizes: g.classes().iter().map(|c| c.size).collect(),
                        reps: g.classes().iter().map(|c| c.rep).collect(),
                        inverse: g.inverse_classes(),
                        exponent,
                        chars,
                    };
                    t.verify()?;
                    debug_assert_eq!(t.chars.len(), k);
                    t.sort_rows(None);
                    return Ok(t);
                }
                Err(e) => last_err = e,
            }
        }
        Err(Error::Consistency(format!("character table failed for every prime tried: {last_err}")))
    }

    /// Row order: degree, then (if given) the value on a central class in
    /// decreasing order, then the values lexicographically.
    pub fn sort_rows(&mut self, central: Option<usize>) {
        let key_central = |row: &ClassFunction| -> Rational {
            central.map(|c| -row[c].to_rational().expect("central values are rational")).unwrap_or_default()
        };
        self.chars.sort_by(|a, b| {
            dim_of(a).cmp(&dim_of(b)).then_with(|| key_central(a).cmp(&key_central(b))).then_with(|| {
                a.iter().zip(b).map(|(x, y)| x.canonical_cmp(y)).find(|o| *o != Ordering::Equal).unwrap_or(Ordering::Equal)
            })
        });
    }

    fn verify(&self) -> Result<(), Error> {
        let k = self.sizes.len();
        if self.chars.len() != k {
            return Err(Error::Consistency(format!("{} characters for {k} classes", self.chars.len())));
        }
        let order = Cyclo::from_int(self.order as i64);
        let conj: Vec<ClassFunction> = self.chars.iter().map(|r| r.iter().map(Cyclo::conj).collect()).collect();
        for i in 0..k {
            for j in i..k {
                let s = self.inner_raw(&self.chars[i], &conj[j]);
                let want = if i == j { order.clone() } else { Cyclo::zero() };
                if s != want {
                    return Err(Error::Consistency(format!("row orthogonality fails for characters {i}, {j}")));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let s: Cyclo = (0..k).map(|i| &self.chars[i][a] * &conj[i][b]).sum();
                let want = if a == b { Cyclo::from_ratio(self.order as i64, self.sizes[a] as i64) } else { Cyclo::zero() };
                if s != want {
                    return Err(Error::Consistency(format!("column orthogonality fails for classes {a}, {b}")));
                }
            }
        }
        let dims: usize = (0..k).map(|i| self.dim(i).pow(2)).sum();
        if dims != self.order || (0..k).any(|i| !self.order.is_multiple_of(self.dim(i))) {
            return Err(Error::Consistency("degrees do not fit the group order".into()));
        }
        Ok(())
    }

    // Σ |C| a(C) b(C), with b already conjugated
    fn inner_raw(&self, a: &[Cyclo], b_conj: &[Cyclo]) -> Cyclo {
        a.iter()
            .zip(b_conj)
            .zip(&self.sizes)
            .filter(|((x, y), _)| !x.is_zero() && !y.is_zero())
            .map(|((x, y), &s)| (x * y).scale(&Rational::from_integer((s as i64).into())))
            .sum()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.reps
    }

    /// Class of the inverse elements, per class.
    pub fn inverse_classes(&self) -> &[usize] {
        &self.inverse
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn chars(&self) -> &[ClassFunction] {
        &self.chars
    }

    pub fn char(&self, i: usize) -> &ClassFunction {
        &self.chars[i]
    }

    pub fn num_chars(&self) -> usize {
        self.chars.len()
    }

    pub fn dim(&self, i: usize) -> usize {
        dim_of(&self.chars[i])
    }

    /// ⟨a, b⟩ = (1/|G|) Σ |C| a(C) conj(b(C)).
    pub fn inner(&self, a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
        let b_conj: Vec<Cyclo> = b.iter().map(Cyclo::conj).collect();
        self.inner_raw(a, &b_conj).scale(&Rational::new(1.into(), (self.order as i64).into()))
    }

    /// Coordinates in the basis of irreducible characters.
    pub fn decompose(&self, f: &[Cyclo]) -> Vec<Cyclo> {
        self.chars.iter().map(|chi| self.inner(f, chi)).collect()
    }

    /// Integer coordinates, when `f` is a virtual character.
    pub fn decompose_integral(&self, f: &[Cyclo]) -> Option<Vec<i64>> {
        self.decompose(f)
            .iter()
            .map(|c| c.to_rational().filter(|q| q.is_integer()).and_then(|q| i64::try_from(q.to_integer()).ok()))
            .collect()
    }

    /// Σ coeffs[i]·χ_i.
    pub fn combine(&self, coeffs: &[i64]) -> ClassFunction {
        let mut out = vec![Cyclo::zero(); self.num_classes()];
        for (chi, &c) in self.chars.iter().zip(coeffs) {
            if c != 0 {
                let q = Rational::from_integer(c.into());
                for (o, v) in out.iter_mut().zip(chi) {
                    *o = &*o + &v.scale(&q);
                }
            }
        }
        out
    }

    /// Index of the row equal to `f`.
    pub fn find(&self, f: &[Cyclo]) -> Option<usize> {
        self.chars.iter().position(|chi| chi.as_slice() == f)
    }
}

fn dim_of(row: &ClassFunction) -> usize {
    let q = row[0].to_rational().expect("degree is an integer");
    usize::try_from(q.to_integer()).expect("degree is a positive integer")
}

/// Pointwise product.
pub fn tensor(a: &[Cyclo], b: &[Cyclo]) -> ClassFunction {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

/// For each class of a subgroup, the class of the ambient group containing it.
pub fn fusion(sub: &FiniteGroup, embedding: &[usize], ambient: &FiniteGroup) -> Vec<usize> {
    sub.classes().iter().map(|c| ambient.class_of(embedding[c.rep])).collect()
}

pub fn restrict(f: &[Cyclo], fusion: &[usize]) -> ClassFunction {
    fusion.iter().map(|&c| f[c].clone()).collect()
}

/// Ind f(C) = |G| / (|H|·|C|) · Σ_{D ⊂ C} |D| f(D).
pub fn induce(f: &[Cyclo], sub_sizes: &[usize], sub_order: usize, fusion: &[usize], ambient: &CharacterTable) -> ClassFunction {
    let mut out = vec![Cyclo::zero(); ambient.num_classes()];
    for ((v, &size), &c) in f.iter().zip(sub_sizes).zip(fusion) {
        out[c] = &out[c] + &v.scale(&Rational::from_integer((size as i64).into()));
    }
    out.into_iter()
        .zip(ambient.class_sizes())
        .map(|(v, &cs)| v.scale(&Rational::new((ambient.order() as i64).into(), ((sub_order * cs) as i64).into())))
        .collect()
}

/// Characters with χ(z) = −χ(1) for a central involution class `z`.
pub fn genuine(t: &CharacterTable, minus_one_class: usize) -> Vec<usize> {
    (0..t.num_chars())
        .filter(|&i| t.char(i)[minus_one_class] == -&t.char(i)[0])
        .collect()
}

/// Row permutation i ↦ row of (linear character)⊗χ_i.
pub fn twist(t: &CharacterTable, linear: &[Cyclo]) -> Result<Vec<usize>, Error> {
    t.chars()
        .iter()
        .map(|chi| {
            t.find(&tensor(chi, linear))
                .ok_or_else(|| Error::Consistency("twist of an irreducible is not irreducible".into()))
        })
        .collect()
}

/// A bijection from reference rows to table rows that agree on the listed classes.
///
/// `reference[r][j]` is the expected value on class `columns[j]`. Returns
/// `mapping[r]`, or a description of the first row that cannot be placed.
pub fn match_rows(t: &CharacterTable, columns: &[usize], reference: &[ClassFunction]) -> Result<Vec<usize>, String> {
    let fits: Vec<Vec<usize>> = reference
        .iter()
        .map(|row| {
            (0..t.num_chars())
                .filter(|&i| columns.iter().zip(row).all(|(&c, v)| t.char(i)[c] == *v))
                .collect()
        })
        .collect();
    if let Some(r) = fits.iter().position(|f| f.is_empty()) {
        let closest = (0..t.num_chars())
            .max_by_key(|&i| columns.iter().zip(&reference[r]).filter(|(&c, v)| t.char(i)[c] == **v).count())
            .unwrap_or(0);
        let bad: Vec<String> = columns
            .iter()
            .zip(&reference[r])
            .filter(|(&c, v)| t.char(closest)[c] != **v)
            .map(|(&c, v)| format!("class {c}: expected {v}, nearest row {closest} has {}", t.char(closest)[c]))
            .collect();
        return Err(format!("reference row {r} matches no character ({})", bad.join("; ")));
    }
    // bipartite matching by augmenting paths
    let mut owner: Vec<Option<usize>> = vec![None; t.num_chars()];
    for r in 0..reference.len() {
        let mut seen = vec![false; t.num_chars()];
        if !augment(r, &fits, &mut owner, &mut seen) {
            return Err(format!("reference row {r} has no free partner"));
        }
    }
    let mut mapping = vec![usize::MAX; reference.len()];
    for (i, o) in owner.iter().enumerate() {
        if let Some(r) = o {
            mapping[*r] = i;
        }
    }
    Ok(mapping)
}

fn augment(r: usize, fits: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &i in &fits[r] {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        if owner[i].is_none() || augment(owner[i].unwrap(), fits, owner, seen) {
            owner[i] = Some(r);
            return true;
        }
    }
    false
}

/// a[j][k][l] = #{(x, y) ∈ C_j × C_k : xy = rep(C_l)}.
fn class_constants(g: &FiniteGroup) -> Vec<Vec<Vec<u32>>> {
    let k = g.num_classes();
    let per_l: Vec<Vec<Vec<u32>>> = (0..k)
        .into_par_iter()
        .map(|l| {
            let z = g.classes()[l].rep;
            let mut a = vec![vec![0u32; k]; k];
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), z);
                a[g.class_of(x)][g.class_of(y)] += 1;
            }
            a
        })
        .collect();
    (0..k).map(|j| (0..k).map(|kk| (0..k).map(|l| per_l[l][j][kk]).collect()).collect()).collect()
}

/// Character values mod p, one row per irreducible.
fn modular_table(g: &FiniteGroup, a: &[Vec<Vec<u32>>], p: u64, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u64>>, String> {
    let k = g.num_classes();
    let id = g.class_of(0);
    for _ in 0..4 {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(1..p)).collect();
        let m: Vec<Vec<u64>> = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| (0..k).fold(0u64, |acc, j| (acc + modp::mul(coeffs[j], a[j][r][c] as u64, p)) % p))
                    .collect()
            })
            .collect();
        let poly = modp::char_poly(&m, p);
        let roots = modp::distinct_roots(&poly, p, rng);
        if roots.len() != k {
            continue;
        }
        let mut rows = Vec::with_capacity(k);
        for lambda in roots {
            let shifted: linalg::Matrix<PrimeFieldScalar> = (0..k)
                .map(|r| {
                    (0..k)
                        .map(|c| {
                            let v = if r == c { (m[r][c] + p - lambda) % p } else { m[r][c] };
                            PrimeFieldScalar::new(v, p)
                        })
                        .collect()
                })
                .collect();
            let null = linalg::nullspace(&shifted, k, &PrimeFieldScalar::new(0, p));
            if null.len() != 1 {
                return Err("eigenspace is not one-dimensional".into());
            }
            let v = &null[0];
            let norm = v[id].inv().ok_or("central character vanishes at the identity")?;
            let omega: Vec<u64> = v.iter().map(|x| x.mul(norm).value()).collect();
            rows.push(character_from_central(g, &omega, p)?);
        }
        return Ok(rows);
    }
    Err("class sums never separated the characters".into())
}

fn character_from_central(g: &FiniteGroup, omega: &[u64], p: u64) -> Result<Vec<u64>, String> {
    let inv_cls = g.inverse_classes();
    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size as u64).collect();
    let mut s = 0u64;
    for l in 0..omega.len() {
        let t = modp::mul(omega[l], omega[inv_cls[l]], p);
        s = (s + modp::mul(t, modp::inv(sizes[l] % p, p), p)) % p;
    }
    let d2 = modp::mul(g.order() as u64 % p, modp::inv(s, p), p);
    let d = (1..=(g.order() as f64).sqrt() as u64 + 1)
        .find(|&d| d * d % p == d2)
        .ok_or("degree is not a square root of a divisor of the order")?;
    Ok((0..omega.len()).map(|l| modp::mul(modp::mul(d, omega[l], p), modp::inv(sizes[l] % p, p), p)).collect())
}

fn primitive_root_of_order(e: u64, p: u64, rng: &mut ChaCha8Rng) -> u64 {
    let primes = prime_factors(e as u32);
    loop {
        let a = rng.gen_range(2..p);
        let z = pow_mod(a, (p - 1) / e, p);
        if primes.iter().all(|&q| pow_mod(z, e / q as u64, p) != 1) {
            return z;
        }
    }
}

/// Lift each value by recovering the multiplicity of every eigenvalue of ρ(g).
fn lift(
    g: &FiniteGroup,
    table: &[Vec<u64>],
    power_maps: &[Vec<usize>],
    e: usize,
    p: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<ClassFunction>, Error> {
    let z = primitive_root_of_order(e as u64, p, rng);
    let id = g.class_of(0);
    table
        .iter()
        .map(|row| {
            let dim = row[id];
            power_maps
                .iter()
                .map(|pm| {
                    let o = pm.len();
                    let zo = pow_mod(z, (e / o) as u64, p);
                    let zo_inv = modp::inv(zo, p);
                    let o_inv = modp::inv(o as u64 % p, p);
                    let mut value = Cyclo::zero();
                    for k in 0..o {
                        let step = pow_mod(zo_inv, k as u64, p);
                        let mut acc = 0u64;
                        let mut w = 1u64;
                        for &cls in pm {
                            acc = (acc + modp::mul(row[cls], w, p)) % p;
                            w = modp::mul(w, step, p);
                        }
                        let mult = modp::mul(acc, o_inv, p);
                        if mult > dim {
                            return Err(Error::Consistency("eigenvalue multiplicity out of range".into()));
                        }
                        if mult > 0 {
                            value = value + Cyclo::zeta(o as u32, k as i64) * Cyclo::from_int(mult as i64);
                        }
                    }
                    Ok(value.minimal())
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let right: Vec<u32> = (0..n).map(|x| ((x + 1) % n) as u32).collect();
        FiniteGroup::from_tables(n, 1, right.clone(), right)
    }

    fn symmetric3() -> FiniteGroup {
        let gens = [[1u8, 0, 2], [0, 2, 1]];
        let compose = |a: &[u8; 3], b: &[u8; 3]| -> [u8; 3] { [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]] };
        let mut elems = vec![[0u8, 1, 2]];
        let mut h = 0;
        while h < elems.len() {
            for g in &gens {
                let y = compose(&elems[h], g);
                if !elems.contains(&y) {
                    elems.push(y);
                }
            }
            h += 1;
        }
        let pos = |q: [u8; 3]| elems.iter().position(|x| *x == q).unwrap() as u32;
        let right = elems.iter().flat_map(|x| gens.iter().map(move |g| (x, g))).map(|(x, g)| pos(compose(x, g))).collect();
        let left = gens.iter().flat_map(|g| elems.iter().map(move |x| (g, x))).map(|(g, x)| pos(compose(g, x))).collect();
        FiniteGroup::from_tables(6, 2, right, left)
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_tables(1, 0, Vec::new(), Vec::new());
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.chars(), &[vec![Cyclo::one()]]);
    }

    #[test]
    fn cyclic_tables() {
        for n in [2usize, 5, 6, 12] {
            let t = CharacterTable::compute(&cyclic(n)).unwrap();
            assert_eq!(t.num_chars(), n);
            assert!((0..n).all(|i| t.dim(i) == 1));
            // every value is a root of unity of order dividing n
            for chi in t.chars() {
                for v in chi {
                    assert_eq!(v.pow(n as u32), Cyclo::one());
                }
            }
        }
    }

    #[test]
    fn s3_table_and_induction() {
        let g = symmetric3();
        let t = CharacterTable::compute(&g).unwrap();
        let dims: Vec<usize> = (0..3).map(|i| t.dim(i)).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        let (h, emb) = g.subgroup(&[g.generator(0)]).unwrap();
        let th = CharacterTable::compute(&h).unwrap();
        let fus = fusion(&h, &emb, &g);
        for psi in th.chars() {
            let ind = induce(psi, th.class_sizes(), th.order(), &fus, &t);
            for chi in t.chars() {
                // Frobenius reciprocity
                assert_eq!(t.inner(&ind, chi), th.inner(psi, &restrict(chi, &fus)));
            }
        }
        let regular = induce(&[Cyclo::one()], &[1], 1, &[g.class_of(0)], &t);
        assert_eq!(t.decompose_integral(&regular).unwrap(), vec![1, 1, 2]);
    }
}
