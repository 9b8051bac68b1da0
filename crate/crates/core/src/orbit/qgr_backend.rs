//! The graded-module backend: indecomposables are the twists of the
//! structure module, hom spaces are graded pieces of the polynomial ring,
//! and the twist acts by degree shift (trivially on coordinates).

use super::{CatMorphism, FormalObject, Ind, TwistedBackend};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::grpoly::free::{GradedFree, GradedMap};
use crate::grpoly::poly::{Polynomial, PolyRing};
use crate::qgr::{is_epi_in_quotient, qgr_hom, FpModule, ModuleMap};

#[derive(Clone, Debug)]
pub struct QgrBackend {
    ring: PolyRing,
    base: Vec<i64>,
    step: i64,
    window: i64,
}

impl QgrBackend {
    /// Projective space of dimension r; the distinguished object is the sum
    /// of the twists in `base`, and the twist functor shifts by `step`.
    pub fn new(field: FieldSpec, r: usize, base: Vec<i64>, step: i64, window: i64) -> Result<Self> {
        if base.is_empty() || step <= 0 || window < 0 {
            return Err(Error::BadInput("need summands, positive step, window >= 0".into()));
        }
        Ok(QgrBackend { ring: PolyRing::new(field, r + 1)?, base, step, window })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    fn mon_index(&self, m: &crate::grpoly::monomial::Monomial, d: i64) -> usize {
        self.ring
            .monomials_of_degree(d)
            .iter()
            .position(|x| x == m)
            .expect("monomial of the right degree")
    }

    pub fn realize_free(&self, x: &FormalObject) -> GradedFree {
        let shifts = x.summands.iter().map(|&s| self.level(s)).collect();
        GradedFree::new(self.ring, shifts)
    }

    pub fn realize_map(&self, m: &CatMorphism) -> Result<GradedMap> {
        let src = self.realize_free(&m.source);
        let tgt = self.realize_free(&m.target);
        let entries = m
            .blocks
            .iter()
            .enumerate()
            .map(|(ti, row)| {
                row.iter()
                    .enumerate()
                    .map(|(sj, coords)| {
                        let d = self.level(m.target.summands[ti])
                            - self.level(m.source.summands[sj]);
                        let mons = self.ring.monomials_of_degree(d);
                        Polynomial::from_terms(
                            &self.ring,
                            mons.into_iter().zip(coords.iter().cloned()),
                        )
                    })
                    .collect()
            })
            .collect();
        GradedMap::new(src, tgt, entries)
    }

    /// The cokernel of a realized morphism, as a finitely presented module.
    pub fn coker_module(&self, m: &CatMorphism) -> Result<FpModule> {
        let map = self.realize_map(m)?;
        FpModule::new(map.target.clone(), map.columns())
    }
}

impl TwistedBackend for QgrBackend {
    fn field(&self) -> FieldSpec {
        self.ring.field
    }

    fn families(&self) -> usize {
        self.base.len()
    }

    fn window(&self) -> i64 {
        self.window
    }

    fn level(&self, x: Ind) -> i64 {
        self.base[x.0] + x.1 * self.step
    }

    fn sigma_level_step(&self) -> i64 {
        self.step
    }

    fn min_twist(&self) -> Option<i64> {
        None
    }

    fn hom_dim(&self, x: Ind, y: Ind) -> Result<usize> {
        Ok(self.ring.dim_of_degree(self.level(y) - self.level(x)))
    }

    fn compose_basis(&self, x: Ind, y: Ind, z: Ind, f: usize, g: usize) -> Result<Vec<Scalar>> {
        let field = self.field();
        let d1 = self.level(z) - self.level(y);
        let d2 = self.level(y) - self.level(x);
        let prod = self.ring.monomials_of_degree(d1)[f].mul(&self.ring.monomials_of_degree(d2)[g]);
        let mut out = vec![field.zero(); self.hom_dim(x, z)?];
        out[self.mon_index(&prod, d1 + d2)] = field.one();
        Ok(out)
    }

    fn twist_basis(&self, x: Ind, y: Ind, f: usize) -> Result<Vec<Scalar>> {
        let field = self.field();
        let mut out = vec![field.zero(); self.hom_dim(x, y)?];
        out[f] = field.one();
        Ok(out)
    }

    fn id_coords(&self, x: Ind) -> Result<Vec<Scalar>> {
        let _ = x;
        Ok(vec![self.field().one()])
    }

    fn cat_is_epi(&self, m: &CatMorphism) -> Result<bool> {
        let map = self.realize_map(m)?;
        let src = FpModule::free(map.source.clone());
        let tgt = FpModule::free(map.target.clone());
        is_epi_in_quotient(&ModuleMap::new(src, tgt, map)?)
    }

    fn hom_from_coker(&self, phi: &CatMorphism, y: &FormalObject) -> Result<Option<usize>> {
        let coker = self.coker_module(phi)?;
        let yfree = FpModule::free(self.realize_free(y));
        Ok(qgr_hom(&coker, &yfree, None)?.dimension())
    }
}
