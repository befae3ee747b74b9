//! One root system with its groups and character tables, built on first use.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::chartab::{self, CharacterTable, ClassFunction};
use crate::clifford::PinCover;
use crate::coxeter::CoxeterGroup;
use crate::group::FiniteGroup;
use crate::rootsys::{RootSystem, RootType};
use crate::scalars::Cyclo;
use crate::Error;

/// Character table of W̃ with the data every spin computation needs.
pub struct CoverTable {
    pub table: CharacterTable,
    pub minus_one_class: usize,
    /// Rows on which −1 acts by −1.
    pub genuine: Vec<usize>,
    /// The sign character pulled back to W̃.
    pub sign: ClassFunction,
    /// Row of sgn ⊗ χ for every row χ.
    pub sign_twist: Vec<usize>,
}

/// W̃′ = p⁻¹(W′) as a group in its own right.
pub struct PrimeCover {
    pub group: FiniteGroup,
    /// W̃′ element → W̃ element.
    pub embedding: Vec<usize>,
    pub table: CharacterTable,
    pub minus_one_class: usize,
    pub genuine: Vec<usize>,
    /// W̃′ class → W̃ class.
    pub cover_fusion: Vec<usize>,
    /// W̃′ class → W class of the image.
    pub weyl_fusion: Vec<usize>,
}

pub struct SpinSystem {
    rs: Arc<RootSystem>,
    weyl: Arc<CoxeterGroup>,
    cover: OnceLock<Result<Arc<PinCover>, Error>>,
    weyl_table: OnceLock<Result<CharacterTable, Error>>,
    cover_table: OnceLock<Result<CoverTable, Error>>,
    prime: OnceLock<Result<PrimeCover, Error>>,
}

fn cached<T>(cell: &OnceLock<Result<T, Error>>, init: impl FnOnce() -> Result<T, Error>) -> Result<&T, Error> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

impl SpinSystem {
    pub fn new(kind: RootType) -> Result<SpinSystem, Error> {
        let rs = Arc::new(RootSystem::build(kind)?);
        let weyl = Arc::new(CoxeterGroup::new(rs.clone())?);
        Ok(SpinSystem {
            rs,
            weyl,
            cover: OnceLock::new(),
            weyl_table: OnceLock::new(),
            cover_table: OnceLock::new(),
            prime: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> RootType {
        self.rs.kind()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weyl(&self) -> &CoxeterGroup {
        &self.weyl
    }

    pub fn cover(&self) -> Result<&PinCover, Error> {
        cached(&self.cover, || PinCover::new(self.weyl.clone()).map(Arc::new)).map(|c| c.as_ref())
    }

    pub fn weyl_table(&self) -> Result<&CharacterTable, Error> {
        cached(&self.weyl_table, || CharacterTable::compute(self.weyl.group()))
    }

    /// Determinant of each W class as a class function.
    pub fn weyl_sign(&self) -> ClassFunction {
        self.weyl.group().classes().iter().map(|c| Cyclo::from_int(self.weyl.det(c.rep))).collect()
    }

    pub fn cover_table(&self) -> Result<&CoverTable, Error> {
        cached(&self.cover_table, || {
            let cover = self.cover()?;
            let g = cover.group();
            let minus_one_class = g.class_of(cover.minus_one());
            let mut table = CharacterTable::compute(g)?;
            table.sort_rows(Some(minus_one_class));
            let genuine = chartab::genuine(&table, minus_one_class);
            let sign: ClassFunction =
                g.classes().iter().map(|c| Cyclo::from_int(self.weyl.det(cover.project(c.rep)))).collect();
            let sign_twist = chartab::twist(&table, &sign)?;
            Ok(CoverTable { table, minus_one_class, genuine, sign, sign_twist })
        })
    }

    pub fn prime_cover(&self) -> Result<&PrimeCover, Error> {
        cached(&self.prime, || {
            let cover = self.cover()?;
            let g = cover.group();
            let (group, embedding) = if self.rank() % 2 == 1 {
                (g.clone(), (0..g.order()).collect())
            } else {
                let f = |i: usize| cover.f_index(self.rs.simple()[i]);
                let mut gens: Vec<usize> = (1..self.rank()).map(|i| g.mul(f(0), f(i))).collect();
                gens.push(cover.minus_one());
                g.subgroup(&gens)?
            };
            if group.order() * self.weyl.w_prime_index() != g.order() {
                return Err(Error::Consistency("W̃′ has the wrong order".into()));
            }
            let local_minus = embedding.iter().position(|&x| x == cover.minus_one()).expect("−1 ∈ W̃′");
            let minus_one_class = group.class_of(local_minus);
            let mut table = CharacterTable::compute(&group)?;
            table.sort_rows(Some(minus_one_class));
            let genuine = chartab::genuine(&table, minus_one_class);
            let cover_fusion = chartab::fusion(&group, &embedding, g);
            let weyl_fusion = group
                .classes()
                .iter()
                .map(|c| self.weyl.group().class_of(cover.project(embedding[c.rep])))
                .collect();
            Ok(PrimeCover { group, embedding, table, minus_one_class, genuine, cover_fusion, weyl_fusion })
        })
    }
}

impl PrimeCover {
    /// Inverse of the embedding, for elements of W̃ that lie in W̃′.
    pub fn local_index(&self) -> HashMap<usize, usize> {
        self.embedding.iter().enumerate().map(|(i, &x)| (x, i)).collect()
    }

    /// Pull a class function on W back along W̃′ → W.
    pub fn from_weyl(&self, f: &[Cyclo]) -> ClassFunction {
        chartab::restrict(f, &self.weyl_fusion)
    }

    /// Restrict a class function on W̃.
    pub fn from_cover(&self, f: &[Cyclo]) -> ClassFunction {
        chartab::restrict(f, &self.cover_fusion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_tables() {
        let sys = SpinSystem::new(RootType::I2(5)).unwrap();
        assert_eq!(sys.cover().unwrap().order(), 20);
        let ct = sys.cover_table().unwrap();
        assert_eq!(ct.genuine.len(), 4);
        let p = sys.prime_cover().unwrap();
        assert_eq!(p.group.order(), 10);
        assert_eq!(p.genuine.len(), 5);
    }

    #[test]
    fn h3_prime_is_whole_cover() {
        let sys = SpinSystem::new(RootType::H3).unwrap();
        let p = sys.prime_cover().unwrap();
        assert_eq!(p.group.order(), 240);
        assert_eq!(p.table.num_chars(), sys.cover_table().unwrap().table.num_chars());
    }
}
