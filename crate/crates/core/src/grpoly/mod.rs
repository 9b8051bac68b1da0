//! Multigraded commutative algebra over `K[x_0..x_r]`: monomials,
//! homogeneous polynomials, graded free modules, Groebner bases with
//! syzygies, and staircase counting.

pub mod free;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod poly;

pub use free::{FreeElem, GradedFree, GradedMap, Term};
pub use groebner::{GroebnerBasis, ModOrder, SubmoduleGb};
pub use monomial::Monomial;
pub use poly::{PolyRing, Polynomial};

use crate::error::Result;

/// Reduced Groebner basis of the submodule generated inside `free`.
pub fn groebner(free: &GradedFree, gens: &[FreeElem]) -> Result<GroebnerBasis> {
    GroebnerBasis::new(free, gens)
}

/// Canonical remainder of `f` against a basis; zero exactly on members.
pub fn normal_form(f: &FreeElem, gb: &GroebnerBasis) -> FreeElem {
    gb.normal_form(f)
}

/// Generators of the full syzygy module of `gens`, packaged as a map into
/// the free module with one slot per generator.
pub fn syzygies(free: &GradedFree, gens: &[FreeElem]) -> Result<GradedMap> {
    SubmoduleGb::new(free, gens)?.syzygy_map()
}

/// Presentation of `ker(map)`: the inclusion of a generating set into the
/// source, together with the relations those generators satisfy.
pub fn kernel_of_map(map: &GradedMap) -> Result<(GradedMap, GradedMap)> {
    let sub = SubmoduleGb::kernel_of_map(map)?;
    let gens = sub.syzygy_gens.clone();
    let mut shifts = Vec::with_capacity(gens.len());
    for g in &gens {
        let d = g
            .homogeneous_degree(&map.source)?
            .expect("syzygy generators are nonzero");
        shifts.push(-d);
    }
    let ker_free = GradedFree::new(map.source.ring, shifts);
    let inclusion = GradedMap::from_columns(ker_free, map.source.clone(), &gens)?;
    let relations = SubmoduleGb::new(&map.source, &gens)?.syzygy_map()?;
    Ok((inclusion, relations))
}

/// Degreewise dimensions of `coker(presentation)` on `[a, b]`.
pub fn hilbert_function(presentation: &GradedMap, a: i64, b: i64) -> Result<Vec<usize>> {
    let gb = GroebnerBasis::new(&presentation.target, &presentation.columns())?;
    Ok(hilbert::quotient_hilbert_window(&gb, a, b))
}

#[cfg(test)]
mod wrapper_tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring2() -> PolyRing {
        PolyRing::new(FieldSpec::default_prime(), 2).unwrap()
    }

    fn ideal_elem(r: &PolyRing, p: Polynomial) -> FreeElem {
        FreeElem::from_polys(r, &[p])
    }

    #[test]
    fn groebner_wrapper_reduces() {
        let r = ring2();
        let f = r.field;
        let free = GradedFree::standard(r, 1);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let x2_plus_xy = x.mul(&f, &x).add(&f, &x.mul(&f, &y));
        let xy = x.mul(&f, &y);
        let gb = groebner(&free, &[ideal_elem(&r, x2_plus_xy), ideal_elem(&r, xy.clone())])
            .unwrap();
        let expect_x2 = ideal_elem(&r, x.mul(&f, &x));
        let expect_xy = ideal_elem(&r, xy);
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.elements().contains(&expect_x2));
        assert!(gb.elements().contains(&expect_xy));
        assert!(groebner(&free, &[]).unwrap().is_zero_module());
    }

    #[test]
    fn normal_form_single_step() {
        let r = ring2();
        let f = r.field;
        let free = GradedFree::standard(r, 1);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let g = x.mul(&f, &x).sub(&f, &y.mul(&f, &y));
        let gb = groebner(&free, &[ideal_elem(&r, g)]).unwrap();
        let x2y = x.mul(&f, &x).mul(&f, &y);
        let y3 = y.mul(&f, &y).mul(&f, &y);
        assert_eq!(
            normal_form(&ideal_elem(&r, x2y), &gb),
            ideal_elem(&r, y3)
        );
        let y2 = ideal_elem(&r, y.mul(&f, &y));
        let gbx = groebner(&free, &[ideal_elem(&r, x.clone())]).unwrap();
        assert_eq!(normal_form(&y2, &gbx), y2);
    }

    #[test]
    fn syzygies_of_two_variables_is_koszul() {
        let r = ring2();
        let f = r.field;
        let free = GradedFree::standard(r, 1);
        let gens = vec![
            ideal_elem(&r, Polynomial::var(&r, 0)),
            ideal_elem(&r, Polynomial::var(&r, 1)),
        ];
        let syz = syzygies(&free, &gens).unwrap();
        assert_eq!(syz.source.rank(), 1);
        assert_eq!(syz.source.shifts, vec![-2]);
        // The single relation annihilates the generators.
        let col = syz.column(0);
        let mut total = FreeElem::zero();
        for (t, c) in col.terms() {
            total = total.add(
                &f,
                &gens[t.component].mul_monomial(&f, &t.monomial, c),
            );
        }
        assert!(total.is_zero());

        // A single nonzero element, and a standard basis: no syzygies.
        let one_gen = syzygies(&free, &gens[..1]).unwrap();
        assert_eq!(one_gen.source.rank(), 0);
        let free2 = GradedFree::standard(r, 2);
        let basis = vec![
            FreeElem::generator(&free2, 0),
            FreeElem::generator(&free2, 1),
        ];
        assert_eq!(syzygies(&free2, &basis).unwrap().source.rank(), 0);
    }

    #[test]
    fn kernel_presentation_of_the_koszul_map() {
        let r = ring2();
        let source = GradedFree::new(r, vec![-1, -1]);
        let target = GradedFree::standard(r, 1);
        let cols = vec![
            FreeElem::from_polys(&r, &[Polynomial::var(&r, 0)]),
            FreeElem::from_polys(&r, &[Polynomial::var(&r, 1)]),
        ];
        let map = GradedMap::from_columns(source.clone(), target.clone(), &cols).unwrap();
        let (incl, rels) = kernel_of_map(&map).unwrap();
        assert_eq!(incl.source.shifts, vec![-2]);
        assert_eq!(rels.source.rank(), 0);
        // Composing inclusion with the map gives zero.
        let composed = map.compose(&incl).unwrap();
        assert!(composed.is_zero());

        let id = GradedMap::identity(&target);
        let (incl_id, _) = kernel_of_map(&id).unwrap();
        assert_eq!(incl_id.source.rank(), 0);

        let zero = GradedMap::zero(source.clone(), target).unwrap();
        let (incl_zero, rels_zero) = kernel_of_map(&zero).unwrap();
        assert_eq!(incl_zero.source.shifts, source.shifts);
        assert_eq!(rels_zero.source.rank(), 0);
    }

    #[test]
    fn hilbert_function_windows() {
        let r = ring2();
        let f = r.field;
        let free = GradedFree::standard(r, 1);
        let none = GradedMap::zero(GradedFree::new(r, Vec::new()), free.clone()).unwrap();
        assert_eq!(hilbert_function(&none, 0, 3).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(hilbert_function(&none, -2, 0).unwrap(), vec![0, 0, 1]);

        let r3 = PolyRing::new(FieldSpec::default_prime(), 3).unwrap();
        let free3 = GradedFree::standard(r3, 1);
        let none3 = GradedMap::zero(GradedFree::new(r3, Vec::new()), free3).unwrap();
        assert_eq!(hilbert_function(&none3, 0, 2).unwrap(), vec![1, 3, 6]);

        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let square = GradedMap::from_columns(
            GradedFree::new(r, vec![-2, -2, -2]),
            free,
            &[
                ideal_elem(&r, x.mul(&f, &x)),
                ideal_elem(&r, x.mul(&f, &y)),
                ideal_elem(&r, y.mul(&f, &y)),
            ],
        )
        .unwrap();
        assert_eq!(hilbert_function(&square, 0, 2).unwrap(), vec![1, 2, 0]);
    }
}
