//! Serializable summaries behind the command-line output.
//!
//! Every exact scalar is written as its canonical text form next to a float
//! approximation; lists are in the orders documented on each field.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::elliptic::{self, EllipticReport, OrthonormalBasis};
use crate::group::FiniteGroup;
use crate::phi::PhiMap;
use crate::points::PointRecord;
use crate::rootsys::{ParameterFunction, RootType};
use crate::scalars::{format_rational, Cyclo, CycloReal};
use crate::system::SpinSystem;
use crate::Error;

/// An exact value with a float for convenience.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scalar {
    pub value: String,
    pub approx: f64,
    /// Imaginary part, for non-real values only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_im: Option<f64>,
}

impl From<&Cyclo> for Scalar {
    fn from(x: &Cyclo) -> Scalar {
        let (re, im) = x.to_complex();
        Scalar { value: x.to_string(), approx: re, approx_im: (!x.is_real()).then_some(im) }
    }
}

impl From<&CycloReal> for Scalar {
    fn from(x: &CycloReal) -> Scalar {
        Scalar { value: x.as_cyclo().to_string(), approx: x.to_f64(), approx_im: None }
    }
}

impl Scalar {
    pub fn exact(&self) -> Result<Cyclo, Error> {
        Ok(self.value.parse::<Cyclo>()?)
    }
}

fn scalars<'a, T: 'a>(xs: impl IntoIterator<Item = &'a T>) -> Vec<Scalar>
where
    Scalar: From<&'a T>,
{
    xs.into_iter().map(Scalar::from).collect()
}

pub fn params_text(c: &ParameterFunction) -> Vec<String> {
    c.values().iter().map(format_rational).collect()
}

fn word_text(g: &FiniteGroup, x: usize, letter: char) -> String {
    let w = g.word(x);
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&i| format!("{letter}{}", i + 1)).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParabolicInfo {
    /// 1-based positions of the simple roots.
    pub subset: Vec<usize>,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub group: String,
    pub order: usize,
    pub classes: usize,
    pub elliptic_classes: usize,
    /// Proper standard parabolics, by size then lexicographically.
    pub parabolics: Vec<ParabolicInfo>,
}

pub fn group_info(sys: &SpinSystem) -> Result<GroupInfo, Error> {
    let w = sys.weyl();
    let parabolics = w
        .standard_parabolics()?
        .into_iter()
        .map(|p| ParabolicInfo { subset: p.subset.iter().map(|i| i + 1).collect(), order: p.group.order() })
        .collect();
    Ok(GroupInfo {
        group: sys.kind().to_string(),
        order: w.order(),
        classes: w.group().num_classes(),
        elliptic_classes: w.elliptic_class_count(),
        parabolics,
    })
}

impl GroupInfo {
    pub fn text(&self) -> String {
        let mut s = format!(
            "group {}\norder {}\nclasses {}\nelliptic classes {}\nparabolics\n",
            self.group, self.order, self.classes, self.elliptic_classes
        );
        for p in &self.parabolics {
            let subset: Vec<String> = p.subset.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(s, "  {{{}}} order {}", subset.join(","), p.order);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleCount {
    /// θ as a multiple of π, e.g. "pi/5".
    pub angle: String,
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverInfo {
    pub group: String,
    pub order: usize,
    pub weyl_order: usize,
    pub classes: usize,
    pub genuine: usize,
    /// Pairs (α, β), α ≠ β, with s_α(β) negative, by angle in increasing order.
    pub angle_census: Vec<AngleCount>,
}

pub fn cover_info(sys: &SpinSystem) -> Result<CoverInfo, Error> {
    let cover = sys.cover()?;
    let ct = sys.cover_table()?;
    Ok(CoverInfo {
        group: sys.kind().to_string(),
        order: cover.order(),
        weyl_order: sys.weyl().order(),
        classes: cover.group().num_classes(),
        genuine: ct.genuine.len(),
        angle_census: cover
            .angle_census()
            .into_iter()
            .map(|(a, pairs)| AngleCount { angle: a.to_string(), pairs })
            .collect(),
    })
}

impl CoverInfo {
    pub fn text(&self) -> String {
        let mut s = format!(
            "cover of {}\norder {}\nweyl order {}\nclasses {}\ngenuine characters {}\nangle census\n",
            self.group, self.order, self.weyl_order, self.classes, self.genuine
        );
        for a in &self.angle_census {
            let _ = writeln!(s, "  {} {}", a.angle, a.pairs);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: usize,
    /// Shortest word in the generators (s_i for W, f_i for the cover).
    pub rep_word: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharInfo {
    pub dim: usize,
    pub genuine: bool,
    pub values: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharTableReport {
    pub group: String,
    pub classes: Vec<ClassInfo>,
    pub chars: Vec<CharInfo>,
}

fn table_report(name: String, g: &FiniteGroup, t: &CharacterTable, genuine: &[usize], letter: char) -> CharTableReport {
    CharTableReport {
        group: name,
        classes: g.classes().iter().map(|c| ClassInfo { size: c.size, rep_word: word_text(g, c.rep, letter) }).collect(),
        chars: (0..t.num_chars())
            .map(|i| CharInfo { dim: t.dim(i), genuine: genuine.contains(&i), values: scalars(t.char(i)) })
            .collect(),
    }
}

/// The table of W, or of W̃ when `double` is set.
pub fn chartable(sys: &SpinSystem, double: bool) -> Result<CharTableReport, Error> {
    if double {
        let ct = sys.cover_table()?;
        Ok(table_report(format!("{}~", sys.kind()), sys.cover()?.group(), &ct.table, &ct.genuine, 'f'))
    } else {
        Ok(table_report(sys.kind().to_string(), sys.weyl().group(), sys.weyl_table()?, &[], 's'))
    }
}

impl CharTableReport {
    pub fn text(&self) -> String {
        let mut s = format!("character table of {}\nclasses\n", self.group);
        for (i, c) in self.classes.iter().enumerate() {
            let _ = writeln!(s, "  C{i} size {} rep {}", c.size, c.rep_word);
        }
        s.push_str("characters\n");
        for (i, chi) in self.chars.iter().enumerate() {
            let vals: Vec<&str> = chi.values.iter().map(|v| v.value.as_str()).collect();
            let tag = if chi.genuine { " genuine" } else { "" };
            let _ = writeln!(s, "  X{i} dim {}{tag}: {}", chi.dim, vals.join(" | "));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointInfo {
    pub orbit_id: usize,
    /// 1-based simple roots of the subsystem the point is distinguished in.
    #[serde(rename = "J")]
    pub subset: Vec<usize>,
    /// (α_j, γ) for the simple roots α_j, at the dominant representative.
    pub coords: Vec<Scalar>,
    pub norm2: Scalar,
    pub distinguished: bool,
    pub solvable: bool,
}

/// Orbits in increasing norm, ties broken by coordinates.
pub fn solvable(points: &[PointRecord]) -> Vec<PointInfo> {
    points
        .iter()
        .map(|p| PointInfo {
            orbit_id: p.orbit_id,
            subset: p.subset.iter().map(|i| i + 1).collect(),
            coords: scalars(&p.coords),
            norm2: Scalar::from(&p.norm2),
            distinguished: p.distinguished,
            solvable: p.solvable,
        })
        .collect()
}

pub fn solvable_text(group: &RootType, points: &[PointInfo]) -> String {
    let mut s = format!("solvable orbits of {group}: {}\n", points.len());
    for p in points {
        let coords: Vec<&str> = p.coords.iter().map(|c| c.value.as_str()).collect();
        let j: Vec<String> = p.subset.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            s,
            "  #{} J={{{}}} coords ({}) norm2 {} (~{:.6}){}",
            p.orbit_id,
            j.join(","),
            coords.join(", "),
            p.norm2.value,
            p.norm2.approx,
            if p.distinguished { " distinguished" } else { "" }
        );
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistClassInfo {
    pub id: usize,
    /// Rows of the cover table (as printed by `chartable --cover double`).
    pub rows: Vec<usize>,
    pub dim: usize,
    pub a_value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    pub class: usize,
    /// Every orbit whose norm equals the a-value of the class.
    pub orbits: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fiber {
    pub orbit_id: usize,
    pub norm2: Scalar,
    pub classes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictInfo {
    pub surjective: bool,
    pub injective: bool,
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiReport {
    pub group: String,
    pub params: Vec<String>,
    /// Classes {χ, sgn ⊗ χ} ordered by their smallest row.
    pub classes: Vec<TwistClassInfo>,
    pub assignments: Vec<Assignment>,
    /// One entry per solvable orbit, in orbit order.
    pub fibers: Vec<Fiber>,
    pub verdicts: VerdictInfo,
    pub predicted_bijective: Option<bool>,
    pub violations: Vec<String>,
}

pub fn phi(sys: &SpinSystem, c: &ParameterFunction, map: &PhiMap) -> PhiReport {
    PhiReport {
        group: sys.kind().to_string(),
        params: params_text(c),
        classes: map
            .classes
            .iter()
            .enumerate()
            .map(|(id, t)| TwistClassInfo { id, rows: t.rows.clone(), dim: t.dim, a_value: Scalar::from(&t.a_value) })
            .collect(),
        assignments: map.assignments.iter().enumerate().map(|(class, o)| Assignment { class, orbits: o.clone() }).collect(),
        fibers: map
            .fibers
            .iter()
            .zip(&map.orbits)
            .map(|(f, o)| Fiber { orbit_id: o.orbit_id, norm2: Scalar::from(&o.norm2), classes: f.clone() })
            .collect(),
        verdicts: VerdictInfo {
            surjective: map.verdicts.surjective,
            injective: map.verdicts.injective,
            unique: map.verdicts.unique,
        },
        predicted_bijective: map.predicted_bijective,
        violations: map.violations.clone(),
    }
}

impl PhiReport {
    pub fn text(&self) -> String {
        let mut s = format!("Phi for {} with c = ({})\n", self.group, self.params.join(", "));
        for (c, a) in self.classes.iter().zip(&self.assignments) {
            let rows: Vec<String> = c.rows.iter().map(|r| r.to_string()).collect();
            let orbits: Vec<String> = a.orbits.iter().map(|o| format!("#{o}")).collect();
            let _ = writeln!(
                s,
                "  class {} rows [{}] dim {} a = {} (~{:.6}) -> {}",
                c.id,
                rows.join(","),
                c.dim,
                c.a_value.value,
                c.a_value.approx,
                if orbits.is_empty() { "none".into() } else { orbits.join(" ") }
            );
        }
        let collisions: Vec<String> =
            self.fibers.iter().filter(|f| f.classes.len() > 1).map(|f| format!("#{}: {}", f.orbit_id, f.classes.len())).collect();
        let _ = writeln!(
            s,
            "surjective {} injective {} unique {}",
            self.verdicts.surjective, self.verdicts.injective, self.verdicts.unique
        );
        if !collisions.is_empty() {
            let _ = writeln!(s, "fibers with several classes: {}", collisions.join(", "));
        }
        for v in &self.violations {
            let _ = writeln!(s, "THEOREM VIOLATION: {v}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrthonormalInfo {
    /// ω_i as coefficients over the W table rows.
    pub basis: Vec<Vec<i64>>,
    /// Matrix of σ ↦ σ ⊗ (S⁺ − S⁻) on sgn, φ_1, … against σ̃_1, σ̃_2, ….
    pub matrix: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    pub orthonormal: bool,
    pub images_ok: bool,
    pub shape_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticInfo {
    pub group: String,
    pub elliptic_classes: usize,
    pub elliptic_rank: usize,
    pub radical_dim: usize,
    pub radical_is_induced: bool,
    pub split_classes: usize,
    pub genuine: usize,
    /// Row of S in the cover table; rows of S⁺, S⁻ in the W̃′ table.
    pub spin_row: usize,
    pub spin_pm_rows: [usize; 2],
    pub isometry_ok: bool,
    pub image_kernel_ok: bool,
    pub lemma_ok: bool,
    pub spin_map_surjective: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orthonormal_basis: Option<OrthonormalInfo>,
}

pub fn elliptic(sys: &SpinSystem, rep: &EllipticReport) -> Result<EllipticInfo, Error> {
    let basis = match sys.kind() {
        RootType::I2(n) if n % 2 == 1 => Some(elliptic::dihedral_orthonormal_basis(sys, rep)?),
        _ => None,
    };
    Ok(EllipticInfo {
        group: sys.kind().to_string(),
        elliptic_classes: rep.elliptic_count,
        elliptic_rank: rep.elliptic_rank,
        radical_dim: rep.radical_dim,
        radical_is_induced: rep.radical_is_induced,
        split_classes: rep.split_classes,
        genuine: rep.genuine_count,
        spin_row: rep.spin.spin,
        spin_pm_rows: [rep.spin.plus, rep.spin.minus],
        isometry_ok: rep.isometry_ok,
        image_kernel_ok: rep.image_kernel_ok,
        lemma_ok: rep.lemma_ok,
        spin_map_surjective: rep.spin_surjective,
        orthonormal_basis: basis.map(|b: OrthonormalBasis| OrthonormalInfo {
            orthonormal: b.is_orthonormal(),
            basis: b.basis,
            matrix: b.matrix,
            gram: b.gram,
            images_ok: b.images_ok,
            shape_ok: b.shape_ok,
        }),
    })
}

impl EllipticInfo {
    pub fn consistent(&self) -> bool {
        let basis_ok = self.orthonormal_basis.as_ref().is_none_or(|b| b.orthonormal && b.images_ok && b.shape_ok);
        self.elliptic_rank == self.elliptic_classes
            && self.radical_is_induced
            && self.split_classes == self.genuine
            && self.isometry_ok
            && self.image_kernel_ok
            && self.lemma_ok
            && basis_ok
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(s, "{k:<22} {v}");
        };
        line("group", self.group.clone());
        line("elliptic classes", self.elliptic_classes.to_string());
        line("elliptic rank", self.elliptic_rank.to_string());
        line("radical dim", self.radical_dim.to_string());
        line("radical = induced", self.radical_is_induced.to_string());
        line("split classes", self.split_classes.to_string());
        line("genuine characters", self.genuine.to_string());
        line("spin row", self.spin_row.to_string());
        line("S+/S- rows", format!("{} {}", self.spin_pm_rows[0], self.spin_pm_rows[1]));
        line("isometry", self.isometry_ok.to_string());
        line("image = ker(1+iota)", self.image_kernel_ok.to_string());
        line("lemma", self.lemma_ok.to_string());
        line("sigma -> sigma x S onto", self.spin_map_surjective.to_string());
        if let Some(b) = &self.orthonormal_basis {
            line("orthonormal basis", format!("{} (matrix I - J: {})", b.orthonormal && b.images_ok, b.shape_ok));
            for (i, v) in b.basis.iter().enumerate() {
                line(&format!("  omega_{}", i + 1), format!("{v:?}"));
            }
        }
        s
    }
}

/// Canonical JSON with a trailing newline.
pub fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let x = CycloReal::golden();
        let s = Scalar::from(&x);
        let back: Scalar = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.exact().unwrap(), x.into_cyclo());
    }

    #[test]
    fn reports_round_trip() {
        let sys = SpinSystem::new(RootType::I2(5)).unwrap();
        let info = group_info(&sys).unwrap();
        assert_eq!(serde_json::from_str::<GroupInfo>(&to_json(&info)).unwrap(), info);
        let t = chartable(&sys, true).unwrap();
        assert_eq!(serde_json::from_str::<CharTableReport>(&to_json(&t)).unwrap(), t);
    }
}
