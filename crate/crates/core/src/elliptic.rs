//! The elliptic pairing on R(W), spin modules of the cover, and the maps
//! σ ↦ σ ⊗ S and σ ↦ σ ⊗ (S⁺ − S⁻).

use rayon::prelude::*;

use crate::chartab::{self, CharacterTable, ClassFunction};
use crate::linalg::{self, Matrix};
use crate::scalars::{rat, Cyclo, CycloReal, Rational};
use crate::system::SpinSystem;
use crate::Error;

fn to_rational_matrix(rows: &[Vec<i64>]) -> Matrix<Rational> {
    rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
}

fn consistency(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}

fn integral(t: &CharacterTable, f: &[Cyclo], what: &str) -> Result<Vec<i64>, Error> {
    t.decompose_integral(f).ok_or_else(|| consistency(format!("{what} is not a virtual character")))
}

/// w ↦ det(1 − w) on the classes of W, checked against Σ (−1)^i tr(w | ∧^i V).
pub fn exterior_virtual(sys: &SpinSystem) -> Result<ClassFunction, Error> {
    let w = sys.weyl();
    w.group()
        .classes()
        .iter()
        .map(|class| {
            let mut m: Matrix<CycloReal> = w.matrix(class.rep).into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = &row[i] + &CycloReal::one();
            }
            let det = linalg::det(&m);
            let alternating: CycloReal = w
                .exterior_traces(class.rep)
                .into_iter()
                .enumerate()
                .map(|(i, t)| if i % 2 == 0 { t } else { -t })
                .sum();
            if det != alternating {
                return Err(consistency("det(1 − w) disagrees with the alternating exterior traces"));
            }
            Ok(det.into_cyclo())
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct EllipticPairing {
    /// e(σ_i, σ_j) over the irreducible characters of W, in table order.
    pub gram: Vec<Vec<i64>>,
    pub rank: usize,
    pub radical: Matrix<Rational>,
    /// Decompositions of every character induced from an irreducible of a proper standard parabolic.
    pub induced: Vec<Vec<i64>>,
    pub elliptic_classes: Vec<usize>,
    /// Whether the radical and the span of induced characters coincide.
    pub radical_is_induced: bool,
}

pub fn elliptic_pairing(sys: &SpinSystem) -> Result<EllipticPairing, Error> {
    let table = sys.weyl_table()?;
    let ext = exterior_virtual(sys)?;
    let elliptic_classes = sys.weyl().elliptic_classes();
    for (k, v) in ext.iter().enumerate() {
        if !v.is_zero() && !elliptic_classes.contains(&k) {
            return Err(consistency("det(1 − w) is nonzero on a non-elliptic class"));
        }
    }
    let n = table.num_chars();
    let gram = (0..n)
        .map(|i| {
            let twisted = chartab::tensor(table.char(i), &ext);
            integral(table, &twisted, "σ ⊗ ∧±V")
        })
        .collect::<Result<Vec<_>, _>>()?;
    let q = to_rational_matrix(&gram);
    let rank = linalg::rank(&q);
    let radical = linalg::nullspace(&q, n, &rat(0, 1));

    let mut induced = Vec::new();
    for p in sys.weyl().standard_parabolics()? {
        let sub = CharacterTable::compute(&p.group)?;
        let fusion = chartab::fusion(&p.group, &p.elements, sys.weyl().group());
        for chi in sub.chars() {
            let f = chartab::induce(chi, sub.class_sizes(), sub.order(), &fusion, table);
            induced.push(integral(table, &f, "an induced character")?);
        }
    }
    let ind = to_rational_matrix(&induced);
    let in_radical = ind.iter().all(|v| {
        q.iter().all(|row| row.iter().zip(v).map(|(a, b)| a * b).fold(rat(0, 1), |s, x| s + x) == rat(0, 1))
    });
    let radical_is_induced =
        in_radical && linalg::span_contains(&ind, &radical) && linalg::rank(&ind) == radical.len();
    Ok(EllipticPairing { gram, rank, radical, induced, elliptic_classes, radical_is_induced })
}

/// Spin modules located in the computed tables.
#[derive(Clone, Debug)]
pub struct SpinModules {
    /// Row of S in the W̃ table.
    pub spin: usize,
    /// Rows of S⁺ and S⁻ in the W̃′ table.
    pub plus: usize,
    pub minus: usize,
    /// S⁺ − S⁻ on the classes of W̃′.
    pub difference: ClassFunction,
}

/// Characters of the spinor modules read off the Clifford coefficients of the
/// cover elements: off the scalar and volume blades every basis blade is traceless.
pub fn spin_modules(sys: &SpinSystem) -> Result<SpinModules, Error> {
    let cover = sys.cover()?;
    let ct = sys.cover_table()?;
    let prime = sys.prime_cover()?;
    let r = sys.rank();
    let full = (1usize << r) - 1;
    let volume_scale = match r {
        // the volume element squares to −1 in rank 2; S⁺ is the −i eigenspace
        2 => -Cyclo::zeta(4, 1),
        _ => Cyclo::one(),
    };
    let character = |x: usize, sign: i64| -> Cyclo {
        let e = cover.element(x);
        let scalar = e.coeff(0).as_cyclo().clone();
        let volume = e.coeff(full).as_cyclo() * &volume_scale;
        scalar + volume.scale(&rat(sign, 1))
    };
    let half_dim = rat(1 << ((r - 1) / 2), 1);
    let on_prime = |sign: i64| -> ClassFunction {
        prime.group.classes().iter().map(|c| character(prime.embedding[c.rep], sign).scale(&half_dim)).collect()
    };
    let plus_char = on_prime(1);
    let minus_char = on_prime(-1);
    let plus = prime.table.find(&plus_char).ok_or_else(|| consistency("S⁺ is not irreducible"))?;
    let minus = prime.table.find(&minus_char).ok_or_else(|| consistency("S⁻ is not irreducible"))?;
    if plus == minus {
        return Err(consistency("S⁺ and S⁻ coincide"));
    }
    let spin_char: ClassFunction = if r.is_multiple_of(2) {
        let dim = rat(1 << (r / 2), 1);
        cover.group().classes().iter().map(|c| cover.element(c.rep).coeff(0).as_cyclo().scale(&dim)).collect()
    } else {
        cover.group().classes().iter().map(|c| character(c.rep, 1).scale(&half_dim)).collect()
    };
    let spin = ct.table.find(&spin_char).ok_or_else(|| consistency("S is not irreducible"))?;
    if ct.table.dim(spin) != 1 << (r / 2) || !ct.genuine.contains(&spin) {
        return Err(consistency("S has the wrong dimension or is not genuine"));
    }
    if r.is_multiple_of(2) {
        let restricted = prime.from_cover(&spin_char);
        let sum: ClassFunction = plus_char.iter().zip(&minus_char).map(|(a, b)| a + b).collect();
        if restricted != sum {
            return Err(consistency("S does not restrict to S⁺ + S⁻"));
        }
    }
    let difference = plus_char.iter().zip(&minus_char).map(|(a, b)| a - b).collect();
    Ok(SpinModules { spin, plus, minus, difference })
}

/// The involution of the W̃′ table: the sign twist in odd rank, conjugation by
/// f for the first simple root in even rank.
pub fn iota(sys: &SpinSystem) -> Result<Vec<usize>, Error> {
    let prime = sys.prime_cover()?;
    let t = &prime.table;
    let perm = if sys.rank() % 2 == 1 {
        let sign = prime.from_cover(&sys.cover_table()?.sign);
        chartab::twist(t, &sign)?
    } else {
        let cover = sys.cover()?;
        let g = cover.group();
        let f = cover.f_index(sys.root_system().simple()[0]);
        let local = prime.local_index();
        let class_map: Vec<usize> =
            prime.group.classes().iter().map(|c| prime.group.class_of(local[&g.conj(prime.embedding[c.rep], f)])).collect();
        t.chars()
            .iter()
            .map(|chi| {
                let moved: ClassFunction = class_map.iter().map(|&k| chi[k].clone()).collect();
                t.find(&moved).ok_or_else(|| consistency("conjugate of an irreducible is not irreducible"))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    if (0..perm.len()).any(|i| perm[perm[i]] != i) {
        return Err(consistency("ι is not an involution"));
    }
    Ok(perm)
}

#[derive(Clone, Debug)]
pub struct SpinMaps {
    /// σ ⊗ S over the W̃ rows, one entry per irreducible σ of W.
    pub tensor_spin: Vec<Vec<i64>>,
    /// σ ⊗ (S⁺ − S⁻) over the W̃′ rows.
    pub tensor_difference: Vec<Vec<i64>>,
    /// Whether σ ↦ σ ⊗ S reaches all genuine characters of W̃.
    pub spin_surjective: bool,
}

pub fn spin_maps(sys: &SpinSystem, spin: &SpinModules) -> Result<SpinMaps, Error> {
    let cover = sys.cover()?;
    let ct = sys.cover_table()?;
    let prime = sys.prime_cover()?;
    let wt = sys.weyl_table()?;
    let to_weyl: Vec<usize> =
        cover.group().classes().iter().map(|c| sys.weyl().group().class_of(cover.project(c.rep))).collect();
    let s = ct.table.char(spin.spin);
    let mut tensor_spin = Vec::new();
    let mut tensor_difference = Vec::new();
    for sigma in wt.chars() {
        let lifted = chartab::restrict(sigma, &to_weyl);
        tensor_spin.push(integral(&ct.table, &chartab::tensor(&lifted, s), "σ ⊗ S")?);
        let on_prime = prime.from_weyl(sigma);
        tensor_difference.push(integral(&prime.table, &chartab::tensor(&on_prime, &spin.difference), "σ ⊗ (S⁺ − S⁻)")?);
    }
    for (v, genuine) in [(&tensor_spin, &ct.genuine), (&tensor_difference, &prime.genuine)] {
        if v.iter().any(|row| row.iter().enumerate().any(|(i, &x)| x != 0 && !genuine.contains(&i))) {
            return Err(consistency("a spin tensor product has a non-genuine constituent"));
        }
    }
    let spin_surjective = linalg::rank(&to_rational_matrix(&tensor_spin)) == ct.genuine.len();
    Ok(SpinMaps { tensor_spin, tensor_difference, spin_surjective })
}

#[derive(Clone, Debug)]
pub struct EllipticReport {
    pub elliptic_count: usize,
    pub elliptic_rank: usize,
    pub radical_dim: usize,
    pub radical_is_induced: bool,
    /// W classes that split into two classes of W̃.
    pub split_classes: usize,
    pub genuine_count: usize,
    pub spin: SpinModules,
    pub spin_dim: usize,
    pub iota_swaps_spin: bool,
    pub isometry_ok: bool,
    pub image_kernel_ok: bool,
    pub image_dim: usize,
    pub kernel_dim: usize,
    /// The dimension count of ker(1 + ι) through sgn-fixed genuine characters.
    pub kernel_count_ok: bool,
    pub lemma_ok: bool,
    pub spin_surjective: bool,
    pub maps: SpinMaps,
    pub pairing: EllipticPairing,
}

impl EllipticReport {
    pub fn consistent(&self) -> bool {
        self.elliptic_rank == self.elliptic_count
            && self.radical_is_induced
            && self.split_classes == self.genuine_count
            && self.iota_swaps_spin
            && self.isometry_ok
            && self.image_kernel_ok
            && self.kernel_count_ok
            && self.lemma_ok
    }
}

pub fn analyze(sys: &SpinSystem) -> Result<EllipticReport, Error> {
    let pairing = elliptic_pairing(sys)?;
    let spin = spin_modules(sys)?;
    let maps = spin_maps(sys, &spin)?;
    let iota = iota(sys)?;
    let ct = sys.cover_table()?;
    let prime = sys.prime_cover()?;
    let wt = sys.weyl_table()?;
    let cover = sys.cover()?;

    let g = cover.group();
    let split_classes = g.classes().iter().filter(|c| g.class_of(cover.negate(c.rep)) != g.class_of(c.rep)).count() / 2;

    // isometry 2e(σ, τ) = ⟨σ ⊗ (S⁺ − S⁻), τ ⊗ (S⁺ − S⁻)⟩ on W̃′
    let n = wt.num_chars();
    let images: Vec<ClassFunction> = (0..n).map(|i| prime.table.combine(&maps.tensor_difference[i])).collect();
    let isometry_ok = (0..n * n).into_par_iter().all(|k| {
        let (i, j) = (k / n, k % n);
        prime.table.inner(&images[i], &images[j]) == Cyclo::from_int(2 * pairing.gram[i][j])
    });

    // image of σ ↦ σ ⊗ (S⁺ − S⁻) against ker(1 + ι)
    let width = prime.table.num_chars();
    let kernel: Matrix<Rational> = prime
        .genuine
        .iter()
        .filter(|&&i| iota[i] > i)
        .map(|&i| {
            let mut v = vec![rat(0, 1); width];
            v[i] = rat(1, 1);
            v[iota[i]] = rat(-1, 1);
            v
        })
        .collect();
    let image = to_rational_matrix(&maps.tensor_difference);
    let image_dim = linalg::rank(&image);
    let kernel_dim = kernel.len();
    let image_in_kernel = maps.tensor_difference.iter().all(|v| (0..width).all(|i| v[i] + v[iota[i]] == 0));
    let image_kernel_ok = image_in_kernel
        && linalg::span_contains(&image, &kernel)
        && image_dim == kernel_dim
        && image_dim == pairing.elliptic_classes.len();

    let sgn_fixed = ct.genuine.iter().filter(|&&i| ct.sign_twist[i] == i).count();
    let kernel_count_ok = if sys.rank().is_multiple_of(2) {
        kernel_dim == sgn_fixed
    } else {
        2 * kernel_dim == ct.genuine.len() - sgn_fixed
    };

    // (S⁺ − S⁻)·conj(S⁺ − S⁻) = (2/[W:W′])·det(1 − p(x)) on W̃′
    let ext = exterior_virtual(sys)?;
    let factor = rat(2, sys.weyl().w_prime_index() as i64);
    let lhs: ClassFunction = spin.difference.iter().map(|d| d * &d.conj()).collect();
    let rhs: ClassFunction = prime.from_weyl(&ext).iter().map(|v| v.scale(&factor)).collect();
    let lemma_ok = lhs == rhs;

    Ok(EllipticReport {
        elliptic_count: sys.weyl().elliptic_class_count(),
        elliptic_rank: pairing.rank,
        radical_dim: pairing.radical.len(),
        radical_is_induced: pairing.radical_is_induced,
        split_classes,
        genuine_count: ct.genuine.len(),
        spin_dim: ct.table.dim(spin.spin),
        iota_swaps_spin: iota[spin.plus] == spin.minus,
        isometry_ok,
        image_kernel_ok,
        image_dim,
        kernel_dim,
        kernel_count_ok,
        lemma_ok,
        spin_surjective: maps.spin_surjective,
        spin,
        maps,
        pairing,
    })
}

/// The orthonormal basis of the elliptic space of I2(n), n odd.
#[derive(Clone, Debug)]
pub struct OrthonormalBasis {
    /// Rows of the W table for sgn, φ_1, …, φ_{(n−3)/2}.
    pub domain: Vec<usize>,
    /// Rows (plus, minus) of the W̃′ table giving σ̃_1, …, σ̃_{(n−1)/2}.
    pub codomain: Vec<(usize, usize)>,
    /// Matrix of σ ↦ σ ⊗ (S⁺ − S⁻) from `domain` to `codomain`, column per domain element.
    pub matrix: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
    /// ω_i as coefficient vectors over the W table rows.
    pub basis: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    /// σ ⊗ (S⁺ − S⁻) sends ω_i to σ̃_i.
    pub images_ok: bool,
    /// The matrix is I − J with J the superdiagonal shift, and its inverse is Σ J^k.
    pub shape_ok: bool,
}

impl OrthonormalBasis {
    pub fn is_orthonormal(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }
}

pub fn dihedral_orthonormal_basis(sys: &SpinSystem, report: &EllipticReport) -> Result<OrthonormalBasis, Error> {
    let n = match sys.kind() {
        crate::rootsys::RootType::I2(n) if n % 2 == 1 => n,
        other => return Err(Error::Unsupported(format!("orthonormal basis needs I2(n) with n odd, got {other}"))),
    };
    let cover = sys.cover()?;
    let prime = sys.prime_cover()?;
    let wt = sys.weyl_table()?;
    let w = sys.weyl();
    let half = (n as usize - 1) / 2;

    let rotation = w.group().mul(w.group().generator(0), w.group().generator(1));
    let rotation_class = w.group().class_of(rotation);
    let sign = sys.weyl_sign();
    let sgn_row = wt.find(&sign).ok_or_else(|| consistency("sgn is missing from the W table"))?;
    let mut domain = vec![sgn_row];
    for j in 1..half {
        let value = (CycloReal::make_cos(2 * j as i64, n) * CycloReal::from_int(2)).into_cyclo();
        let row = (0..wt.num_chars())
            .find(|&i| wt.dim(i) == 2 && wt.char(i)[rotation_class] == value)
            .ok_or_else(|| consistency(format!("no two-dimensional character with value 2cos(2·{j}π/n) at s1s2")))?;
        domain.push(row);
    }

    let simple = sys.root_system().simple();
    let f1f2 = cover.group().mul(cover.f_index(simple[0]), cover.f_index(simple[1]));
    let local = prime.local_index()[&f1f2];
    let f_class = prime.group.class_of(local);
    let linear_row = |exp: i64| -> Result<usize, Error> {
        let value = -Cyclo::zeta(n, exp);
        (0..prime.table.num_chars())
            .find(|&i| prime.table.char(i)[f_class] == value)
            .ok_or_else(|| consistency("missing linear character of W̃′"))
    };
    let codomain: Vec<(usize, usize)> = (1..=half)
        .map(|j| {
            let i = (n as i64 + 1 - 2 * j as i64) / 2;
            Ok((linear_row(i)?, linear_row(-i)?))
        })
        .collect::<Result<_, Error>>()?;
    if codomain[0] != (report.spin.plus, report.spin.minus) {
        return Err(consistency("S⁺, S⁻ are not the characters with index (n−1)/2"));
    }

    let mut matrix = vec![vec![0i64; half]; half];
    for (col, &row) in domain.iter().enumerate() {
        let image = &report.maps.tensor_difference[row];
        for (k, &(p, m)) in codomain.iter().enumerate() {
            if image[p] != -image[m] {
                return Err(consistency("σ ⊗ (S⁺ − S⁻) is not a combination of the σ̃"));
            }
            matrix[k][col] = image[p];
        }
        let covered: i64 = codomain.iter().map(|&(p, m)| image[p].abs() + image[m].abs()).sum();
        if covered != image.iter().map(|x| x.abs()).sum::<i64>() {
            return Err(consistency("σ ⊗ (S⁺ − S⁻) leaves the span of the σ̃"));
        }
    }
    let expected: Vec<Vec<i64>> =
        (0..half).map(|i| (0..half).map(|j| i64::from(i == j) - i64::from(j == i + 1)).collect()).collect();
    let inverse_q = linalg::inverse(&to_rational_matrix(&matrix)).ok_or_else(|| consistency("I − J is singular"))?;
    let inverse: Vec<Vec<i64>> = inverse_q
        .iter()
        .map(|r| r.iter().map(|q| if q.is_integer() { i64::try_from(q.to_integer()).ok() } else { None }).collect())
        .collect::<Option<_>>()
        .ok_or_else(|| consistency("(I − J)⁻¹ is not integral"))?;
    let upper_ones: Vec<Vec<i64>> = (0..half).map(|i| (0..half).map(|j| i64::from(j >= i)).collect()).collect();
    let shape_ok = matrix == expected && inverse == upper_ones;

    let width = wt.num_chars();
    let basis: Vec<Vec<i64>> = (0..half)
        .map(|i| {
            let mut v = vec![0i64; width];
            for &row in &domain[..=i] {
                v[row] += 1;
            }
            v
        })
        .collect();
    let pair = |a: &[i64], b: &[i64]| -> i64 {
        (0..width).flat_map(|i| (0..width).map(move |j| (i, j))).map(|(i, j)| a[i] * b[j] * report.pairing.gram[i][j]).sum()
    };
    let gram: Vec<Vec<i64>> = basis.iter().map(|a| basis.iter().map(|b| pair(a, b)).collect()).collect();
    let images_ok = basis.iter().zip(&codomain).all(|(v, &(p, m))| {
        let mut image = vec![0i64; prime.table.num_chars()];
        for (row, &coef) in v.iter().enumerate() {
            for (x, y) in image.iter_mut().zip(&report.maps.tensor_difference[row]) {
                *x += coef * y;
            }
        }
        image.iter().enumerate().all(|(k, &x)| x == i64::from(k == p) - i64::from(k == m))
    });
    Ok(OrthonormalBasis { domain, codomain, matrix, inverse, basis, gram, images_ok, shape_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootType;

    #[test]
    fn dihedral_odd() {
        for n in [3u32, 5, 7, 9] {
            let sys = SpinSystem::new(RootType::I2(n)).unwrap();
            let rep = analyze(&sys).unwrap();
            assert!(rep.consistent(), "n = {n}: {rep:?}");
            assert_eq!(rep.elliptic_count as u32, (n - 1) / 2);
            assert!(!rep.spin_surjective);
            let basis = dihedral_orthonormal_basis(&sys, &rep).unwrap();
            assert!(basis.is_orthonormal() && basis.images_ok && basis.shape_ok, "{basis:?}");
        }
    }

    #[test]
    fn dihedral_even() {
        for n in [4u32, 6, 8] {
            let sys = SpinSystem::new(RootType::I2(n)).unwrap();
            let rep = analyze(&sys).unwrap();
            assert!(rep.consistent(), "n = {n}");
            assert_eq!(rep.elliptic_count as u32, n / 2);
            assert!(rep.spin_surjective);
        }
    }

    #[test]
    fn h3() {
        let sys = SpinSystem::new(RootType::H3).unwrap();
        let rep = analyze(&sys).unwrap();
        assert!(rep.consistent());
        assert_eq!((rep.elliptic_count, rep.genuine_count), (4, 8));
        assert!(rep.spin_surjective);
    }
}
