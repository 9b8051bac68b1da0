//! Staircase combinatorics: Hilbert functions, finite length detection and
//! exact lengths for quotients `F / U`, read off a Groebner basis of `U`.
//!
//! Everything here only looks at leading terms.  A term of the ambient free
//! module survives in the quotient iff no basis leading term in the same
//! component divides it, so dimension counts are monomial counts.

use super::free::Term;
use super::groebner::GroebnerBasis;
use super::monomial::Monomial;

fn leads_by_component(gb: &GroebnerBasis) -> Vec<Vec<Monomial>> {
    let mut out = vec![Vec::new(); gb.free.rank()];
    for t in gb.leading_terms() {
        out[t.component].push(t.monomial);
    }
    out
}

fn is_standard(m: &Monomial, leads: &[Monomial]) -> bool {
    leads.iter().all(|l| !l.divides(m))
}

/// K-basis of `(F/U)_n` as terms of `F`, components ascending and
/// monomials descending inside each component.
pub fn quotient_basis_of_degree(gb: &GroebnerBasis, n: i64) -> Vec<Term> {
    let leads = leads_by_component(gb);
    gb.free
        .basis_of_degree(n)
        .into_iter()
        .filter(|t| is_standard(&t.monomial, &leads[t.component]))
        .collect()
}

/// `dim_K (F/U)_n`.
pub fn quotient_dim_of_degree(gb: &GroebnerBasis, n: i64) -> usize {
    quotient_basis_of_degree(gb, n).len()
}

/// The Hilbert function on an inclusive window.
pub fn quotient_hilbert_window(gb: &GroebnerBasis, lo: i64, hi: i64) -> Vec<usize> {
    (lo..=hi).map(|n| quotient_dim_of_degree(gb, n)).collect()
}

/// Whether `F/U` is a finite dimensional vector space.  This holds iff for
/// every component and every variable some leading term is a pure power of
/// that variable in that component.
pub fn quotient_is_finite_length(gb: &GroebnerBasis) -> bool {
    let nvars = gb.free.ring.num_vars;
    let leads = leads_by_component(gb);
    leads.iter().all(|comp| {
        (0..nvars).all(|i| comp.iter().any(|m| m.is_pure_power_of(i)))
    })
}

/// Total K-dimension of `F/U` when finite.  Standard monomials of each
/// component live in the box cut out by the minimal pure powers, so the
/// count is a finite enumeration.
pub fn quotient_length(gb: &GroebnerBasis) -> Option<u64> {
    if !quotient_is_finite_length(gb) {
        return None;
    }
    let nvars = gb.free.ring.num_vars;
    let leads = leads_by_component(gb);
    let mut total = 0u64;
    for comp in &leads {
        let mut bounds = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let e = comp
                .iter()
                .filter(|m| m.is_pure_power_of(i))
                .map(|m| m.degree())
                .min()
                .expect("finite length was just certified");
            bounds.push(e);
        }
        let mut exps = vec![0u16; nvars];
        total += count_standard_in_box(&mut exps, 0, &bounds, comp);
    }
    Some(total)
}

fn count_standard_in_box(
    exps: &mut Vec<u16>,
    pos: usize,
    bounds: &[u32],
    leads: &[Monomial],
) -> u64 {
    if pos == bounds.len() {
        let m = Monomial::from_exponents(exps.clone());
        return u64::from(is_standard(&m, leads));
    }
    let mut total = 0;
    for e in 0..bounds[pos] {
        exps[pos] = e as u16;
        total += count_standard_in_box(exps, pos + 1, bounds, leads);
    }
    exps[pos] = 0;
    total
}
