//! Seeded example generators.
//!
//! Test suites and the command line batch mode both need streams of small
//! random objects that are reproducible across runs and platforms.  All
//! generators here draw from a ChaCha stream keyed by the caller's seed,
//! so the same `(size, seed)` pair always yields the same corpus.
//!
//! Size bounds are part of the contract:
//!
//! * graded modules have 1 to 4 generators, generator degrees in
//!   `[-3, 3]`, and 0 to 4 homogeneous relations of degree at most 3
//!   above the lowest generator;
//! * Kronecker representations have at most 6 dimensions per vertex and
//!   are never zero;
//! * category morphisms reuse the witness corpus of the exactness
//!   checker, so their shapes follow the backend's window.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::grpoly::{FreeElem, GradedFree, PolyRing};
use crate::matrix::Matrix;
use crate::orbit::verify::{a2_corpus, random_scalar};
use crate::orbit::{CatMorphism, TwistedBackend};
use crate::qgr::FpModule;
use crate::quiver::{Quiver, Representation};

/// Seeded corpus of finitely presented graded modules over `ring`.
///
/// Generator count is 1..=4 with degrees in [-3, 3].  Each module gets
/// 0..=4 relations; a relation is a random homogeneous combination of the
/// ambient basis in a degree at most 3 above the lowest generator, and
/// candidates that collapse to zero are dropped.  Some modules therefore
/// come out free, some finite length, most neither.
pub fn graded_module_corpus(ring: PolyRing, size: usize, seed: u64) -> Result<Vec<FpModule>> {
    let field = ring.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let gens = rng.gen_range(1..=4usize);
        let shifts: Vec<i64> = (0..gens).map(|_| rng.gen_range(-3..=3i64)).collect();
        let f0 = GradedFree::new(ring, shifts);
        let floor = f0.shifts.iter().map(|&s| -s).min().unwrap();
        let mut relations = vec![];
        for _ in 0..rng.gen_range(0..=4usize) {
            let d = floor + rng.gen_range(0..=3i64);
            let mut rel = FreeElem::zero();
            for t in f0.basis_of_degree(d) {
                if rng.gen_range(0..2u8) == 1 {
                    rel.add_term(&field, t, random_scalar(&field, &mut rng));
                }
            }
            if !rel.is_zero() {
                relations.push(rel);
            }
        }
        out.push(FpModule::new(f0, relations)?);
    }
    Ok(out)
}

/// Seeded corpus of Kronecker quiver representations over `field`.
///
/// Vertex dimensions are 0..=6, never both zero, with uniformly random
/// arrow matrices.
pub fn kronecker_rep_corpus(
    field: FieldSpec,
    size: usize,
    seed: u64,
) -> Result<Vec<Representation>> {
    let quiver = Quiver::kronecker();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let dims: Vec<usize> = (0..2).map(|_| rng.gen_range(0..=6usize)).collect();
        if dims.iter().all(|&d| d == 0) {
            continue;
        }
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                Matrix::from_fn(&field, dims[t], dims[s], |_, _| random_scalar(&field, &mut rng))
            })
            .collect();
        out.push(Representation::new(quiver.clone(), field, dims, maps)?);
    }
    Ok(out)
}

/// Seeded corpus of labeled morphisms between objects of a backend's
/// window: the same mix of basis morphisms, evaluation covers, and random
/// one- or two-summand maps that the exactness checker samples.
pub fn c_morphism_corpus<B: TwistedBackend + ?Sized>(
    b: &B,
    seed: u64,
    samples: usize,
) -> Result<Vec<(String, CatMorphism)>> {
    a2_corpus(b, seed, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::QgrBackend;

    #[test]
    fn module_corpus_is_deterministic_and_bounded() {
        let ring = PolyRing { field: FieldSpec::Fp(101), num_vars: 2 };
        let a = graded_module_corpus(ring, 20, 7).unwrap();
        let b = graded_module_corpus(ring, 20, 7).unwrap();
        assert_eq!(a.len(), 20);
        for (m, n) in a.iter().zip(&b) {
            assert_eq!(format!("{m:?}"), format!("{n:?}"));
        }
        for m in &a {
            let r = m.f0().rank();
            assert!((1..=4).contains(&r));
            assert!(m.f0().shifts.iter().all(|s| s.abs() <= 3));
        }
        let c = graded_module_corpus(ring, 20, 8).unwrap();
        assert!(a.iter().zip(&c).any(|(m, n)| format!("{m:?}") != format!("{n:?}")));
    }

    #[test]
    fn module_corpus_has_some_relations_and_some_free_modules() {
        let ring = PolyRing { field: FieldSpec::Fp(101), num_vars: 2 };
        let corpus = graded_module_corpus(ring, 30, 42).unwrap();
        assert!(corpus.iter().any(|m| m.relations().is_empty()));
        assert!(corpus.iter().any(|m| !m.relations().is_empty()));
    }

    #[test]
    fn rep_corpus_is_deterministic_and_bounded() {
        let f = FieldSpec::Fp(101);
        let a = kronecker_rep_corpus(f, 25, 3).unwrap();
        let b = kronecker_rep_corpus(f, 25, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 25);
        for r in &a {
            assert!(r.dims.iter().all(|&d| d <= 6));
            assert!(r.total_dim() > 0);
        }
    }

    #[test]
    fn morphism_corpus_is_deterministic() {
        let b = QgrBackend::new(FieldSpec::Fp(101), 1, vec![0], 1, 4).unwrap();
        let xs = c_morphism_corpus(&b, 5, 6).unwrap();
        let ys = c_morphism_corpus(&b, 5, 6).unwrap();
        assert_eq!(xs.len(), ys.len());
        assert!(!xs.is_empty());
        for ((la, ma), (lb, mb)) in xs.iter().zip(&ys) {
            assert_eq!(la, lb);
            assert_eq!(ma.blocks, mb.blocks);
        }
    }
}
