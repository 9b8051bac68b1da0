//! Buchberger's algorithm for submodules of graded free modules, together
//! with the extended (elimination order) variant that also returns syzygies
//! and membership witnesses.
//!
//! Everything downstream that asks a question about a submodule routes
//! through here: normal forms, kernels of maps, module quotients.
//!
//! The module order is TOP: monomials are compared by degrevlex first and
//! ties go to the lower component index.  The syzygy computation adjoins
//! one bookkeeping component per generator and uses a block elimination
//! order in which every original component beats every bookkeeping one.
//! No coprimality shortcut is applied when selecting pairs; the classical
//! product criterion is unsound for module components and the inputs here
//! are small enough that it would not pay for itself anyway.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::free::{FreeElem, GradedFree, GradedMap, Term};
use super::monomial::Monomial;

/// Module term order, optionally with an elimination split: components
/// with index below `elim_split` always dominate the rest.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModOrder {
    pub elim_split: Option<usize>,
}

impl ModOrder {
    pub fn standard() -> Self {
        ModOrder { elim_split: None }
    }

    pub fn elimination(split: usize) -> Self {
        ModOrder { elim_split: Some(split) }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        if let Some(s) = self.elim_split {
            let a_secondary = a.component >= s;
            let b_secondary = b.component >= s;
            if a_secondary != b_secondary {
                return if a_secondary { Ordering::Less } else { Ordering::Greater };
            }
        }
        match a.monomial.cmp(&b.monomial) {
            Ordering::Equal => b.component.cmp(&a.component),
            o => o,
        }
    }
}

/// An element held as a term list sorted ascending under a fixed ModOrder,
/// so the leading term sits at the end.  Multiplying by a monomial keeps
/// the list sorted, which makes reduction a plain merge.
#[derive(Clone, Debug)]
struct OrdPoly {
    terms: Vec<(Term, Scalar)>,
}

impl OrdPoly {
    fn from_elem(e: &FreeElem, ord: &ModOrder) -> Self {
        let mut terms: Vec<(Term, Scalar)> =
            e.terms().map(|(t, c)| (t.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        OrdPoly { terms }
    }

    fn to_elem(&self, field: &FieldSpec) -> FreeElem {
        let mut out = FreeElem::zero();
        for (t, c) in &self.terms {
            out.add_term(field, t.clone(), c.clone());
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<&(Term, Scalar)> {
        self.terms.last()
    }

    fn make_monic(&mut self, field: &FieldSpec) {
        if let Some((_, lc)) = self.terms.last() {
            if lc.is_one() {
                return;
            }
            let inv = field.inv(lc).expect("leading coefficient is nonzero");
            for (_, c) in &mut self.terms {
                *c = field.mul(c, &inv);
            }
        }
    }

    /// `self - c * x^m * g`.
    fn sub_mul(
        &self,
        field: &FieldSpec,
        c: &Scalar,
        m: &Monomial,
        g: &OrdPoly,
        ord: &ModOrder,
    ) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let (ta, ca) = &self.terms[i];
            let (tg, cg) = &g.terms[j];
            let tb = Term {
                component: tg.component,
                monomial: tg.monomial.mul(m),
            };
            match ord.cmp(ta, &tb) {
                Ordering::Less => {
                    out.push((ta.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((tb, field.neg(&field.mul(cg, c))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = field.sub(ca, &field.mul(cg, c));
                    if !v.is_zero() {
                        out.push((tb, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for k in i..self.terms.len() {
            out.push(self.terms[k].clone());
        }
        for k in j..g.terms.len() {
            let (tg, cg) = &g.terms[k];
            out.push((
                Term {
                    component: tg.component,
                    monomial: tg.monomial.mul(m),
                },
                field.neg(&field.mul(cg, c)),
            ));
        }
        OrdPoly { terms: out }
    }
}

/// Fully reduces `f` against `basis` (all monic).  Every term of the result
/// is out of reach of every basis leading term.
fn normal_form(f: OrdPoly, basis: &[OrdPoly], ord: &ModOrder, field: &FieldSpec) -> OrdPoly {
    let mut done: Vec<(Term, Scalar)> = Vec::new();
    let mut work = f;
    'outer: while let Some((lt, lc)) = work.leading().cloned() {
        for g in basis {
            let (gt, _) = g.leading().expect("basis elements are nonzero");
            if gt.component == lt.component && gt.monomial.divides(&lt.monomial) {
                let m = lt
                    .monomial
                    .try_div(&gt.monomial)
                    .expect("divisibility was just checked");
                work = work.sub_mul(field, &lc, &m, g, ord);
                continue 'outer;
            }
        }
        work.terms.pop();
        done.push((lt, lc));
    }
    done.reverse();
    OrdPoly { terms: done }
}

/// The S-element of two basis members with the same leading component.
fn s_element(
    gi: &OrdPoly,
    gj: &OrdPoly,
    ord: &ModOrder,
    field: &FieldSpec,
) -> OrdPoly {
    let (ti, ci) = gi.leading().expect("nonzero");
    let (tj, cj) = gj.leading().expect("nonzero");
    debug_assert_eq!(ti.component, tj.component);
    let lcm = ti.monomial.lcm(&tj.monomial);
    let mi = lcm.try_div(&ti.monomial).expect("lcm is divisible");
    let mj = lcm.try_div(&tj.monomial).expect("lcm is divisible");
    let inv_ci = field.inv(ci).expect("leading coefficient nonzero");
    let inv_cj = field.inv(cj).expect("leading coefficient nonzero");
    let zero = OrdPoly { terms: Vec::new() };
    let lhs = zero.sub_mul(field, &field.neg(&inv_ci), &mi, gi, ord);
    lhs.sub_mul(field, &inv_cj, &mj, gj, ord)
}

fn buchberger(
    input: Vec<OrdPoly>,
    ord: &ModOrder,
    field: &FieldSpec,
) -> Vec<OrdPoly> {
    let mut basis: Vec<OrdPoly> = Vec::new();
    for mut g in input {
        if g.is_zero() {
            continue;
        }
        g.make_monic(field);
        basis.push(g);
    }

    // Pair queue keyed by (lcm degree, i, j) for a deterministic,
    // degree-respecting strategy on homogeneous input.
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let enqueue = |pairs: &mut BTreeSet<(u32, usize, usize)>,
                   basis: &[OrdPoly],
                   i: usize,
                   j: usize| {
        let (ti, _) = basis[i].leading().expect("nonzero");
        let (tj, _) = basis[j].leading().expect("nonzero");
        if ti.component == tj.component {
            let deg = ti.monomial.lcm(&tj.monomial).degree();
            pairs.insert((deg, i, j));
        }
    };
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&mut pairs, &basis, i, j);
        }
    }

    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        let s = s_element(&basis[i], &basis[j], ord, field);
        let mut r = normal_form(s, &basis, ord, field);
        if r.is_zero() {
            continue;
        }
        r.make_monic(field);
        basis.push(r);
        let newest = basis.len() - 1;
        for k in 0..newest {
            enqueue(&mut pairs, &basis, k, newest);
        }
    }
    basis
}

/// Turns any basis into the reduced one: minimal leading terms, monic,
/// fully tail-reduced, sorted ascending by leading term.
fn reduce_basis(mut basis: Vec<OrdPoly>, ord: &ModOrder, field: &FieldSpec) -> Vec<OrdPoly> {
    basis.retain(|g| !g.is_zero());
    for g in &mut basis {
        g.make_monic(field);
    }
    basis.sort_by(|a, b| {
        ord.cmp(
            &a.leading().expect("nonzero").0,
            &b.leading().expect("nonzero").0,
        )
    });

    // Keep only elements whose leading term no earlier-kept element divides.
    let mut kept: Vec<OrdPoly> = Vec::new();
    'next: for g in basis {
        let (gt, _) = g.leading().expect("nonzero");
        for h in &kept {
            let (ht, _) = h.leading().expect("nonzero");
            if ht.component == gt.component && ht.monomial.divides(&gt.monomial) {
                continue 'next;
            }
        }
        kept.push(g);
    }

    // Tail reduction.  Leading terms are pairwise indivisible, so reducing
    // one element against the others preserves its lead.
    let mut reduced: Vec<OrdPoly> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<OrdPoly> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(kept[i].clone(), &others, ord, field);
        debug_assert!(!r.is_zero(), "minimal basis element reduced away");
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        ord.cmp(
            &a.leading().expect("nonzero").0,
            &b.leading().expect("nonzero").0,
        )
    });
    reduced
}

/// A reduced Groebner basis of a submodule of a graded free module, under
/// the standard TOP order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub free: GradedFree,
    order: ModOrder,
    elements: Vec<FreeElem>,
    ord_elements: Vec<OrdPoly>,
}

impl GroebnerBasis {
    pub fn new(free: &GradedFree, gens: &[FreeElem]) -> Result<Self> {
        for g in gens {
            g.homogeneous_degree(free)?;
        }
        let ord = ModOrder::standard();
        let field = free.ring.field;
        let input: Vec<OrdPoly> = gens.iter().map(|g| OrdPoly::from_elem(g, &ord)).collect();
        let raw = buchberger(input, &ord, &field);
        let reduced = reduce_basis(raw, &ord, &field);
        Ok(Self::from_reduced(free.clone(), ord, reduced))
    }

    fn from_reduced(free: GradedFree, order: ModOrder, reduced: Vec<OrdPoly>) -> Self {
        let field = free.ring.field;
        let elements = reduced.iter().map(|g| g.to_elem(&field)).collect();
        let gb = GroebnerBasis {
            free,
            order,
            elements,
            ord_elements: reduced,
        };
        debug_assert!(gb.verify(), "S-element criterion failed");
        gb
    }

    pub fn elements(&self) -> &[FreeElem] {
        &self.elements
    }

    pub fn is_zero_module(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.ord_elements
            .iter()
            .map(|g| g.leading().expect("nonzero").0.clone())
            .collect()
    }

    pub fn normal_form(&self, f: &FreeElem) -> FreeElem {
        let field = self.free.ring.field;
        let work = OrdPoly::from_elem(f, &self.order);
        normal_form(work, &self.ord_elements, &self.order, &field).to_elem(&field)
    }

    pub fn contains(&self, f: &FreeElem) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the Buchberger criterion: every S-element of basis members
    /// with a common leading component reduces to zero.
    pub fn verify(&self) -> bool {
        let field = self.free.ring.field;
        for j in 1..self.ord_elements.len() {
            for i in 0..j {
                let (ti, _) = self.ord_elements[i].leading().expect("nonzero");
                let (tj, _) = self.ord_elements[j].leading().expect("nonzero");
                if ti.component != tj.component {
                    continue;
                }
                let s = s_element(
                    &self.ord_elements[i],
                    &self.ord_elements[j],
                    &self.order,
                    &field,
                );
                if !normal_form(s, &self.ord_elements, &self.order, &field).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Extended Groebner data for a finite generating set: the reduced basis
/// of the span, a generating set (in fact a Groebner basis) of the syzygy
/// module, and exact membership witnesses.
#[derive(Clone, Debug)]
pub struct SubmoduleGb {
    pub free: GradedFree,
    pub gens: Vec<FreeElem>,
    /// Free module on the generators; the syzygies live here.
    pub syz_free: GradedFree,
    pub gb: GroebnerBasis,
    pub syzygy_gens: Vec<FreeElem>,
    mixed: Vec<OrdPoly>,
    mixed_order: ModOrder,
}

impl SubmoduleGb {
    pub fn new(free: &GradedFree, gens: &[FreeElem]) -> Result<Self> {
        let mut degrees = Vec::with_capacity(gens.len());
        for g in gens {
            degrees.push(g.homogeneous_degree(free)?.unwrap_or(0));
        }
        Self::with_gen_degrees(free, gens, &degrees)
    }

    /// As `new`, but with the degree of each generator pinned explicitly so
    /// that zero generators still get a well-defined slot.  Nonzero
    /// generators must match the pinned degree.
    pub fn with_gen_degrees(
        free: &GradedFree,
        gens: &[FreeElem],
        degrees: &[i64],
    ) -> Result<Self> {
        if gens.len() != degrees.len() {
            return Err(Error::DimensionMismatch(
                "one pinned degree per generator".into(),
            ));
        }
        for (g, &d) in gens.iter().zip(degrees) {
            if let Some(actual) = g.homogeneous_degree(free)? {
                if actual != d {
                    return Err(Error::DimensionMismatch(format!(
                        "generator of degree {actual} pinned to degree {d}"
                    )));
                }
            }
        }
        let field = free.ring.field;
        let t_rank = free.rank();
        let n = gens.len();
        let ord = ModOrder::elimination(t_rank);

        let mut input = Vec::with_capacity(n);
        for (i, g) in gens.iter().enumerate() {
            let mut v = g.clone();
            v.add_term(
                &field,
                Term {
                    component: t_rank + i,
                    monomial: Monomial::one(free.ring.num_vars),
                },
                field.one(),
            );
            input.push(OrdPoly::from_elem(&v, &ord));
        }

        let raw = buchberger(input, &ord, &field);
        let reduced = reduce_basis(raw, &ord, &field);

        let syz_free = GradedFree::new(free.ring, degrees.iter().map(|d| -d).collect());
        let mut t_part: Vec<OrdPoly> = Vec::new();
        let mut syzygy_gens: Vec<FreeElem> = Vec::new();
        for g in &reduced {
            let elem = g.to_elem(&field);
            let primary = elem.slice_components(0..t_rank);
            if primary.is_zero() {
                syzygy_gens.push(elem.slice_components(t_rank..t_rank + n));
            } else {
                t_part.push(OrdPoly::from_elem(&primary, &ModOrder::standard()));
            }
        }
        let gb = GroebnerBasis::from_reduced(free.clone(), ModOrder::standard(), t_part);

        Ok(SubmoduleGb {
            free: free.clone(),
            gens: gens.to_vec(),
            syz_free,
            gb,
            syzygy_gens,
            mixed: reduced,
            mixed_order: ord,
        })
    }

    /// Kernel data for a map between graded frees: generators are the
    /// columns, and the syzygy slots inherit the source shifts, so
    /// `syz_free == map.source`.
    pub fn kernel_of_map(map: &GradedMap) -> Result<Self> {
        let degrees: Vec<i64> = map
            .source
            .shifts
            .iter()
            .map(|s| -s)
            .collect();
        Self::with_gen_degrees(&map.target, &map.columns(), &degrees)
    }

    pub fn contains(&self, f: &FreeElem) -> bool {
        self.gb.contains(f)
    }

    pub fn normal_form(&self, f: &FreeElem) -> FreeElem {
        self.gb.normal_form(f)
    }

    /// Writes `f` as a combination of the generators, if possible: the
    /// result `c` lives in `syz_free` and satisfies `sum c_i gens_i = f`.
    pub fn lift(&self, f: &FreeElem) -> Option<FreeElem> {
        let field = self.free.ring.field;
        let t_rank = self.free.rank();
        let n = self.gens.len();
        let work = OrdPoly::from_elem(f, &self.mixed_order);
        let nf = normal_form(work, &self.mixed, &self.mixed_order, &field).to_elem(&field);
        if !nf.slice_components(0..t_rank).is_zero() {
            return None;
        }
        Some(nf.slice_components(t_rank..t_rank + n).neg(&field))
    }

    /// The syzygy generators packaged as a map into `syz_free`.
    pub fn syzygy_map(&self) -> Result<GradedMap> {
        let mut shifts = Vec::with_capacity(self.syzygy_gens.len());
        for s in &self.syzygy_gens {
            let d = s
                .homogeneous_degree(&self.syz_free)?
                .expect("syzygy generators are nonzero");
            shifts.push(-d);
        }
        let source = GradedFree::new(self.free.ring, shifts);
        GradedMap::from_columns(source, self.syz_free.clone(), &self.syzygy_gens)
    }

    pub fn verify(&self) -> bool {
        self.gb.verify()
    }
}
