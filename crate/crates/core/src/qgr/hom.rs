//! Homs in the quotient category of graded modules by the finite-length
//! ones: computed as module Homs from a truncation of the source into the
//! saturation of the target, stabilized over the truncation degree.

use crate::error::{Error, Result};
use crate::grpoly::GradedMap;

use super::module::{hom0, truncate, FpModule, ModuleMap};
use super::saturate::saturate;

/// Outcome of a stabilized quotient-category Hom computation.
#[derive(Debug)]
pub enum QgrHom {
    /// Two consecutive truncation levels agreed; `basis` consists of maps
    /// out of the truncation at `level` into the saturated target.
    Stable {
        dim: usize,
        basis: Vec<ModuleMap>,
        level: i64,
    },
    /// No agreement up to the window top; the per-level dimensions are
    /// reported so the caller can widen the window.
    Inconclusive { dims: Vec<(i64, usize)> },
}

impl QgrHom {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            QgrHom::Stable { dim, .. } => Some(*dim),
            QgrHom::Inconclusive { .. } => None,
        }
    }
}

/// Hom(M, N) in the quotient category, via Hom(M_{>=n}, N^sat) for growing
/// n.  `n_max` overrides the default window top of max generator degree
/// plus six.
pub fn qgr_hom(m: &FpModule, n: &FpModule, n_max: Option<i64>) -> Result<QgrHom> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch("quotient-category hom".into()));
    }
    let target = saturate(n)?.module;
    let start = m.min_gen_degree().unwrap_or(0);
    let top = n_max.unwrap_or_else(|| m.max_gen_degree().unwrap_or(0) + 6);
    let mut dims: Vec<(i64, usize)> = Vec::new();
    let mut prev: Option<usize> = None;
    for level in start..=top {
        let (trunc, _) = truncate(m, level)?;
        let (d, basis) = hom0(&trunc, &target)?;
        if prev == Some(d) {
            return Ok(QgrHom::Stable { dim: d, basis, level });
        }
        dims.push((level, d));
        prev = Some(d);
    }
    Ok(QgrHom::Inconclusive { dims })
}

/// Whether a map of modules becomes an epimorphism after dividing out the
/// finite-length modules: exactly when its cokernel has finite length.
pub fn is_epi_in_quotient(map: &ModuleMap) -> Result<bool> {
    Ok(map.cokernel()?.is_finite_length())
}

/// The effaceable test for a functor presented by a map of free modules:
/// the presenting map must become an epimorphism in the quotient.  Errors
/// when source or target carries relations, since the presentation then
/// does not live on the free subcategory.
pub fn is_effaceable(map: &ModuleMap) -> Result<bool> {
    if !map.source.relations().is_empty() || !map.target.relations().is_empty() {
        return Err(Error::NotFree(
            "the effaceable test needs a map of free modules".into(),
        ));
    }
    is_epi_in_quotient(map)
}

/// Convenience form of the effaceable test straight from a homogeneous
/// matrix between graded free modules.
pub fn is_effaceable_map(map: &GradedMap) -> Result<bool> {
    let source = FpModule::free(map.source.clone());
    let target = FpModule::free(map.target.clone());
    is_effaceable(&ModuleMap::new(source, target, map.clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::grpoly::{FreeElem, GradedFree, Monomial, PolyRing, Polynomial, Term};

    fn ring2() -> PolyRing {
        PolyRing::new(FieldSpec::default_prime(), 2).unwrap()
    }

    fn koszul_map(ring: PolyRing) -> GradedMap {
        // (x, y): R(-1)^2 -> R.
        let source = GradedFree::new(ring, vec![-1, -1]);
        let target = GradedFree::standard(ring, 1);
        let cols = vec![
            FreeElem::from_polys(&ring, &[Polynomial::var(&ring, 0)]),
            FreeElem::from_polys(&ring, &[Polynomial::var(&ring, 1)]),
        ];
        GradedMap::from_columns(source, target, &cols).unwrap()
    }

    #[test]
    fn hom_of_the_structure_module_with_itself() {
        let r = FpModule::ring_module(ring2());
        let h = qgr_hom(&r, &r, None).unwrap();
        assert_eq!(h.dimension(), Some(1));
    }

    #[test]
    fn hom_into_twists_counts_monomials() {
        let ring = ring2();
        let r = FpModule::ring_module(ring);
        for n in 0..=4 {
            let h = qgr_hom(&r, &FpModule::twisted_ring(ring, n), None).unwrap();
            assert_eq!(h.dimension(), Some(n as usize + 1), "twist {n}");
        }
        for n in -3..0 {
            let h = qgr_hom(&r, &FpModule::twisted_ring(ring, n), None).unwrap();
            assert_eq!(h.dimension(), Some(0), "twist {n}");
        }
    }

    #[test]
    fn finite_length_target_gives_zero() {
        let ring = ring2();
        let field = ring.field;
        let f0 = GradedFree::standard(ring, 1);
        let rels = vec![
            FreeElem::term(
                Term { component: 0, monomial: Monomial::var(0, 2) },
                field.one(),
            ),
            FreeElem::term(
                Term { component: 0, monomial: Monomial::var(1, 2) },
                field.one(),
            ),
        ];
        let k = FpModule::new(f0, rels).unwrap();
        let r = FpModule::ring_module(ring);
        assert_eq!(qgr_hom(&r, &k, None).unwrap().dimension(), Some(0));
        assert_eq!(qgr_hom(&k, &r, None).unwrap().dimension(), Some(0));
    }

    #[test]
    fn ideal_into_ring_sees_the_saturation() {
        let ring = ring2();
        let ideal = FpModule::from_presentation(&koszul_map(ring)).unwrap();
        // The module (x, y): presented on two degree-1 generators with the
        // Koszul relation.
        let field = ring.field;
        let f0 = GradedFree::new(ring, vec![-1, -1]);
        let mut rel = FreeElem::zero();
        rel.add_term(
            &field,
            Term { component: 0, monomial: Monomial::var(1, 2) },
            field.one(),
        );
        rel.add_term(
            &field,
            Term { component: 1, monomial: Monomial::var(0, 2) },
            field.neg(&field.one()),
        );
        let ideal_module = FpModule::new(f0, vec![rel]).unwrap();
        let r = FpModule::ring_module(ring);
        assert_eq!(qgr_hom(&ideal_module, &r, None).unwrap().dimension(), Some(1));
        // Sanity on the cokernel presentation too.
        assert!(ideal.is_finite_length());
    }

    #[test]
    fn epi_and_effaceable_tests() {
        let ring = ring2();
        let map = koszul_map(ring);
        assert!(is_effaceable_map(&map).unwrap());

        // Zero map into R is not epi in the quotient.
        let zero = GradedMap::zero(
            GradedFree::new(ring, vec![-1]),
            GradedFree::standard(ring, 1),
        )
        .unwrap();
        assert!(!is_effaceable_map(&zero).unwrap());

        // x alone leaves an infinite cokernel.
        let single = GradedMap::from_columns(
            GradedFree::new(ring, vec![-1]),
            GradedFree::standard(ring, 1),
            &[FreeElem::from_polys(&ring, &[Polynomial::var(&ring, 0)])],
        )
        .unwrap();
        assert!(!is_effaceable_map(&single).unwrap());

        // Identity is an epi on the nose.
        let r = FpModule::ring_module(ring);
        assert!(is_effaceable(&ModuleMap::identity(&r)).unwrap());
    }

    #[test]
    fn effaceable_rejects_modules_with_relations() {
        let ring = ring2();
        let field = ring.field;
        let f0 = GradedFree::standard(ring, 1);
        let rel = FreeElem::term(
            Term { component: 0, monomial: Monomial::var(0, 2) },
            field.one(),
        );
        let m = FpModule::new(f0, vec![rel]).unwrap();
        let e = is_effaceable(&ModuleMap::identity(&m));
        assert!(matches!(e, Err(Error::NotFree(_))));
    }
}
