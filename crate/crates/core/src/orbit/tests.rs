use super::algebra::orbit_algebra;
use super::gamma::{
    gamma_star, graded_hom_dim, hilbert_from_presentation, presentation_of, quotient_hom_dim,
    section_module, sheafify, PresentationOverA,
};
use super::kron_backend::KronBackend;
use super::qgr_backend::QgrBackend;
use super::radical::{morphism_length, radical_power, right_almost_split};
use super::verify::{adjointness_check, epi_witness, verify_a1, verify_a2};
use super::{zero_cat, FormalObject, TwistedBackend};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

fn f() -> FieldSpec {
    FieldSpec::default_prime()
}

fn plane_backend(step: i64, window: i64) -> QgrBackend {
    QgrBackend::new(f(), 1, vec![0], step, window).unwrap()
}

fn bridge_backend(window: i64) -> QgrBackend {
    QgrBackend::new(f(), 1, vec![0, 1], 2, window).unwrap()
}

#[test]
fn twist_orbit_algebra_is_the_coordinate_ring() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 6).unwrap();
    assert_eq!(a.dims, vec![1, 2, 3, 4, 5, 6, 7]);
    assert!(a.is_unital().unwrap());
    assert!(a.is_associative().unwrap());
    assert!(a.is_commutative().unwrap());
    assert!(a.radical_zero_units().is_empty());
}

#[test]
fn bridge_orbit_algebra_dimensions() {
    let b = bridge_backend(4);
    let a = orbit_algebra(&b, 5).unwrap();
    let dims: Vec<usize> = (0..=5).map(|n| 8 * n + 4).collect();
    assert_eq!(a.dims, dims);
    assert!(a.is_unital().unwrap());
    assert!(a.is_associative().unwrap());
    assert!(!a.is_commutative().unwrap());
    assert_eq!(a.radical_zero_units().len(), 2);
}

#[test]
fn kron_orbit_algebra_dimensions() {
    let b = KronBackend::new(f(), 4).unwrap();
    let a = orbit_algebra(&b, 5).unwrap();
    let dims: Vec<usize> = (0..=5).map(|n| 8 * n + 4).collect();
    assert_eq!(a.dims, dims);
    assert!(a.is_unital().unwrap());
    assert!(a.is_associative().unwrap());
}

#[test]
fn gamma_star_of_the_structure_sheaf() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 6).unwrap();
    let gs = gamma_star(&b, &a, &FormalObject::single((0, 0)), 5).unwrap();
    assert_eq!(gs.module.floor, 0);
    assert_eq!(gs.module.comps, vec![1, 2, 3, 4, 5, 6]);
    assert_eq!(gs.presentation.gen_degrees, vec![0]);
    assert!(gs.presentation.rel_degrees.is_empty());
    assert!(gs.presentation.certified);
    let h = hilbert_from_presentation(&a, &gs.presentation, 0, 5).unwrap();
    assert_eq!(h, vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn gamma_star_of_a_negative_twist_starts_late() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 8).unwrap();
    let gs = gamma_star(&b, &a, &FormalObject::single((0, -2)), 5).unwrap();
    assert_eq!(gs.module.floor, 2);
    assert_eq!(gs.module.comps, vec![1, 2, 3, 4]);
    assert_eq!(gs.presentation.gen_degrees, vec![2]);
    assert!(gs.presentation.rel_degrees.is_empty());
}

#[test]
fn bridge_gamma_star_presentation_of_the_second_summand() {
    let b = bridge_backend(4);
    let a = orbit_algebra(&b, 6).unwrap();
    let gs = gamma_star(&b, &a, &FormalObject::single((1, 0)), 5).unwrap();
    assert_eq!(gs.module.floor, 0);
    let dims: Vec<usize> = (0..=5).map(|n| 4 * n + 3).collect();
    assert_eq!(gs.module.comps, dims);
    assert_eq!(gs.presentation.gen_degrees, vec![0]);
    assert_eq!(gs.presentation.rel_degrees, vec![0]);
    assert!(gs.presentation.certified);
    let h = hilbert_from_presentation(&a, &gs.presentation, 0, 5).unwrap();
    assert_eq!(h, dims);
}

#[test]
fn sheafify_inverts_gamma_star_on_twists() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 9).unwrap();
    for k in -2..=2 {
        let gs = gamma_star(&b, &a, &FormalObject::single((0, k)), 6).unwrap();
        let phi = sheafify(&b, &gs.presentation).unwrap();
        let coker = b.coker_module(&phi).unwrap();
        let expect: Vec<usize> = (0..=4)
            .map(|n| b.ring().dim_of_degree(n + k))
            .collect();
        assert_eq!(coker.hilbert_window(0, 4), expect, "twist {k}");
    }
}

#[test]
fn sheafify_inverts_gamma_star_on_the_bridge() {
    let b = bridge_backend(4);
    let a = orbit_algebra(&b, 6).unwrap();
    let gs = gamma_star(&b, &a, &FormalObject::single((1, 0)), 5).unwrap();
    let phi = sheafify(&b, &gs.presentation).unwrap();
    let coker = b.coker_module(&phi).unwrap();
    assert_eq!(coker.hilbert_window(0, 4), vec![2, 3, 4, 5, 6]);
}

#[test]
fn kron_gamma_star_round_trip() {
    let b = KronBackend::new(f(), 4).unwrap();
    let a = orbit_algebra(&b, 6).unwrap();
    let x = FormalObject::single((1, 1));
    let gs = gamma_star(&b, &a, &x, 4).unwrap();
    assert_eq!(gs.module.floor, -1);
    // sigma^n X is the preprojective of dimension vector (2n+2, 2n+3)
    let dims: Vec<usize> = (-1..=4).map(|n| (4 * n + 5) as usize).collect();
    assert_eq!(gs.module.comps, dims);
    assert!(gs.presentation.certified);
    let lo = gs.module.floor;
    let h = hilbert_from_presentation(&a, &gs.presentation, lo, 4).unwrap();
    assert_eq!(h, dims);
    let phi = sheafify(&b, &gs.presentation).unwrap();
    let real = b.realize_morphism(&phi).unwrap();
    let coker = b.coker_rep(&real).unwrap();
    assert_eq!(coker.dims, vec![2, 3]);
}

#[test]
fn radical_powers_in_the_twist_category() {
    let b = plane_backend(1, 4);
    assert_eq!(radical_power(&b, 1, (0, -2), (0, 0)).unwrap().len(), 3);
    assert_eq!(radical_power(&b, 2, (0, -4), (0, 0)).unwrap().len(), 5);
    assert_eq!(radical_power(&b, 5, (0, -4), (0, 0)).unwrap().len(), 0);
    assert!(radical_power(&b, 1, (0, 2), (0, 2)).unwrap().is_empty());
}

#[test]
fn radical_powers_are_nested() {
    let field = f();
    let b = bridge_backend(3);
    for &(x, y) in &[((0, -2), (0, 0)), ((1, -2), (0, 0)), ((0, -1), (1, 0))] {
        let mut prev: Option<Vec<Vec<crate::field::Scalar>>> = None;
        for n in 1..=3usize {
            let cur = radical_power(&b, n, x, y).unwrap();
            if let Some(p) = &prev {
                // every rad^n vector lies in the span of rad^(n-1)
                if !p.is_empty() {
                    let base = Matrix::from_columns(&field, p.clone()).unwrap().rank(&field);
                    let mut all = p.clone();
                    all.extend(cur.iter().cloned());
                    if !all.is_empty() {
                        let joint =
                            Matrix::from_columns(&field, all).unwrap().rank(&field);
                        assert_eq!(joint, base, "rad^{n} not inside rad^{}", n - 1);
                    }
                } else {
                    assert!(cur.is_empty());
                }
            }
            prev = Some(cur);
        }
    }
}

#[test]
fn morphism_length_of_identity_and_zero() {
    let b = plane_backend(2, 4);
    let c = b.distinguished();
    let id = super::identity_cat(&b, &c).unwrap();
    assert_eq!(morphism_length(&b, &id, 4).unwrap(), Some(0));
    let z = zero_cat(&b, &FormalObject::single((0, -1)), &c).unwrap();
    assert_eq!(morphism_length(&b, &z, 4).unwrap(), None);
}

#[test]
fn morphism_length_of_the_degree_two_evaluation() {
    let field = f();
    let b = plane_backend(2, 4);
    let source = FormalObject::new(vec![(0, -1); 3]);
    let target = FormalObject::single((0, 0));
    let mut phi = zero_cat(&b, &source, &target).unwrap();
    for i in 0..3 {
        phi.blocks[0][i][i] = field.one();
    }
    assert!(b.cat_is_epi(&phi).unwrap());
    assert_eq!(morphism_length(&b, &phi, 4).unwrap(), Some(1));
}

#[test]
fn right_almost_split_onto_the_structure_sheaf() {
    let b = plane_backend(2, 4);
    let ras = right_almost_split(&b, (0, 0)).unwrap();
    assert_eq!(ras.source.summands, vec![(0, -1); 3]);
    assert!(b.cat_is_epi(&ras).unwrap());
    assert_eq!(morphism_length(&b, &ras, 4).unwrap(), Some(1));
}

#[test]
fn right_almost_split_is_the_ar_map_for_kronecker() {
    let b = KronBackend::new(f(), 3).unwrap();
    let ras = right_almost_split(&b, (1, 1)).unwrap();
    assert_eq!(ras.source.summands, vec![(0, 0); 2]);
    assert!(b.cat_is_epi(&ras).unwrap());
}

#[test]
fn right_almost_split_with_no_candidates_is_empty() {
    let b = KronBackend::new(f(), 3).unwrap();
    let ras = right_almost_split(&b, (1, 0)).unwrap();
    assert!(ras.source.is_empty());
}

fn free_pres(gen_degrees: Vec<i64>) -> PresentationOverA {
    PresentationOverA {
        gen_units: vec![0; gen_degrees.len()],
        gen_degrees,
        rel_degrees: vec![],
        rel_vectors: vec![],
        entries: vec![],
        certified: true,
        last_new: None,
        hilbert: vec![],
    }
}

#[test]
fn adjointness_on_free_modules() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 8).unwrap();
    // Yoneda in degree zero
    let ok = adjointness_check(&b, &a, &free_pres(vec![0]), &FormalObject::single((0, 0)), 6)
        .unwrap();
    assert_eq!(ok, Some(true));
    // one shift down: both sides are the linear forms
    let ok = adjointness_check(&b, &a, &free_pres(vec![1]), &FormalObject::single((0, 0)), 6)
        .unwrap();
    assert_eq!(ok, Some(true));
    let phi = sheafify(&b, &free_pres(vec![1])).unwrap();
    assert_eq!(b.hom_from_coker(&phi, &FormalObject::single((0, 0))).unwrap(), Some(2));
}

#[test]
fn adjointness_on_the_kronecker_side() {
    let b = KronBackend::new(f(), 4).unwrap();
    let a = orbit_algebra(&b, 6).unwrap();
    for k in 0..3 {
        let ok = adjointness_check(
            &b,
            &a,
            &free_pres(vec![-k]),
            &FormalObject::single((1, 1)),
            4,
        )
        .unwrap();
        assert_eq!(ok, Some(true), "shift {k}");
    }
}

#[test]
fn adjointness_kills_finite_length_modules() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 8).unwrap();
    // A / (all of degree >= 1): one generator, relations x and y
    let field = f();
    let pres = PresentationOverA {
        gen_degrees: vec![0],
        gen_units: vec![0],
        rel_degrees: vec![1, 1],
        rel_vectors: vec![
            vec![field.one(), field.zero()],
            vec![field.zero(), field.one()],
        ],
        entries: vec![
            vec![vec![field.one(), field.zero()]],
            vec![vec![field.zero(), field.one()]],
        ],
        certified: true,
        last_new: Some(1),
        hilbert: vec![(0, 1)],
    };
    let phi = sheafify(&b, &pres).unwrap();
    let y = FormalObject::single((0, 2));
    assert_eq!(b.hom_from_coker(&phi, &y).unwrap(), Some(0));
    assert_eq!(adjointness_check(&b, &a, &pres, &y, 6).unwrap(), Some(true));
}

#[test]
fn graded_hom_dim_sees_relations() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 8).unwrap();
    let field = f();
    let n = section_module(&b, &a, &FormalObject::single((0, 0)), 6).unwrap();
    // A/xA has no degree-zero maps into the sections of O
    let pres = PresentationOverA {
        gen_degrees: vec![0],
        gen_units: vec![0],
        rel_degrees: vec![1],
        rel_vectors: vec![vec![field.one(), field.zero()]],
        entries: vec![vec![vec![field.one(), field.zero()]]],
        certified: true,
        last_new: Some(1),
        hilbert: vec![],
    };
    assert_eq!(graded_hom_dim(&a, &pres, &n).unwrap(), 0);
    assert_eq!(graded_hom_dim(&a, &free_pres(vec![0]), &n).unwrap(), 1);
}

#[test]
fn quotient_hom_dim_stabilizes() {
    let b = plane_backend(1, 5);
    let a = orbit_algebra(&b, 10).unwrap();
    let m = section_module(&b, &a, &FormalObject::single((0, 0)), 8).unwrap();
    let n = section_module(&b, &a, &FormalObject::single((0, 1)), 8).unwrap();
    assert_eq!(quotient_hom_dim(&a, &m, &n).unwrap(), Some(2));
    assert_eq!(quotient_hom_dim(&a, &n, &m).unwrap(), Some(0));
}

#[test]
fn presentation_of_a_truncation_regenerates() {
    let b = plane_backend(1, 4);
    let a = orbit_algebra(&b, 8).unwrap();
    let m = section_module(&b, &a, &FormalObject::single((0, 0)), 6).unwrap();
    let t = m.truncate_at(2);
    let pres = presentation_of(&t, &a).unwrap();
    assert_eq!(pres.gen_degrees, vec![2, 2, 2]);
    // the three generators x^2, xy, y^2 satisfy the Koszul-style relations
    assert!(!pres.rel_degrees.is_empty());
    assert!(pres.rel_degrees.iter().all(|&d| d == 3));
    let h = hilbert_from_presentation(&a, &pres, 2, 6).unwrap();
    assert_eq!(h, vec![3, 4, 5, 6, 7]);
}

#[test]
fn epi_witness_exists_for_window_objects() {
    let b = plane_backend(1, 3);
    for x in b.window_inds() {
        let w = epi_witness(&b, &FormalObject::single(x)).unwrap();
        assert!(w.is_some(), "no witness for {x:?}");
        let (m, ev) = w.unwrap();
        assert!(m <= 3);
        assert!(b.cat_is_epi(&ev).unwrap());
    }
}

#[test]
fn verify_a1_on_the_plane_triples() {
    for step in [1, 2] {
        let b = plane_backend(step, 3);
        let r = verify_a1(&b).unwrap();
        assert_eq!(r.status, "verified", "step {step}: {:?}", r.notes);
        assert_eq!(r.failures, 0);
        assert_eq!(r.inconclusive, 0);
    }
}

#[test]
fn verify_a1_on_the_kronecker_backend() {
    let b = KronBackend::new(f(), 3).unwrap();
    let r = verify_a1(&b).unwrap();
    assert_eq!(r.status, "verified", "{:?}", r.notes);
}

#[test]
fn verify_a2_on_the_plane_triples() {
    for step in [1, 2] {
        let b = plane_backend(step, 3);
        let r = verify_a2(&b, 3, 42, 6).unwrap();
        assert_eq!(r.status, "verified", "step {step}: {:?}", r.notes);
        assert!(r.max_length.unwrap_or(0) <= 3);
    }
}

#[test]
fn verify_a2_on_the_kronecker_backend() {
    let b = KronBackend::new(f(), 3).unwrap();
    let r = verify_a2(&b, 6, 42, 6).unwrap();
    assert_eq!(r.status, "verified", "{:?}", r.notes);
}

#[test]
fn reports_are_deterministic() {
    let b = bridge_backend(3);
    let r1 = serde_json::to_string(&verify_a2(&b, 3, 7, 5).unwrap()).unwrap();
    let r2 = serde_json::to_string(&verify_a2(&b, 3, 7, 5).unwrap()).unwrap();
    assert_eq!(r1, r2);
}
