//! Graded free modules `⊕ R(d_i)`, their elements, and degree-0 maps
//! between them.
//!
//! Shift convention: `R(d)_n = R_{d+n}`, so a term with monomial of
//! polynomial degree `q` sitting in component `i` has module degree
//! `q - shifts[i]`.  The generator of `R(-1)` therefore has degree 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedFree {
    pub ring: PolyRing,
    pub shifts: Vec<i64>,
}

impl GradedFree {
    pub fn new(ring: PolyRing, shifts: Vec<i64>) -> Self {
        GradedFree { ring, shifts }
    }

    /// `R(0)^k`.
    pub fn standard(ring: PolyRing, rank: usize) -> Self {
        GradedFree { ring, shifts: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Module degree of the generator of component `c`.
    pub fn generator_degree(&self, c: usize) -> i64 {
        -self.shifts[c]
    }

    /// Module degree of a term.
    pub fn term_degree(&self, t: &Term) -> i64 {
        t.monomial.degree() as i64 - self.shifts[t.component]
    }

    /// `dim_K` of the degree-`n` piece.
    pub fn dim_of_degree(&self, n: i64) -> usize {
        self.shifts
            .iter()
            .map(|&d| self.ring.dim_of_degree(n + d))
            .sum()
    }

    /// K-basis of the degree-`n` piece, as terms in a fixed order:
    /// components ascending, monomials descending.
    pub fn basis_of_degree(&self, n: i64) -> Vec<Term> {
        let mut out = Vec::new();
        for (c, &d) in self.shifts.iter().enumerate() {
            for m in self.ring.monomials_of_degree(n + d) {
                out.push(Term { component: c, monomial: m });
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &GradedFree) -> Result<GradedFree> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("direct sum".into()));
        }
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        Ok(GradedFree { ring: self.ring, shifts })
    }

    /// The same free module shifted: `(⊕R(d_i))(k) = ⊕R(d_i + k)`.
    pub fn twist(&self, k: i64) -> GradedFree {
        GradedFree {
            ring: self.ring,
            shifts: self.shifts.iter().map(|d| d + k).collect(),
        }
    }
}

/// A module monomial: a ring monomial sitting in one free component.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Term {
    pub component: usize,
    pub monomial: Monomial,
}

/// An element of a graded free module, keyed canonically by
/// (component, monomial).  Term order for Groebner computations is imposed
/// externally by the engine.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeElem {
    terms: BTreeMap<Term, Scalar>,
}

impl FreeElem {
    pub fn zero() -> Self {
        FreeElem { terms: BTreeMap::new() }
    }

    pub fn term(t: Term, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(t, c);
        }
        FreeElem { terms }
    }

    pub fn generator(free: &GradedFree, c: usize) -> Self {
        Self::term(
            Term {
                component: c,
                monomial: Monomial::one(free.ring.num_vars),
            },
            free.ring.field.one(),
        )
    }

    pub fn from_polys(ring: &PolyRing, polys: &[Polynomial]) -> Self {
        let mut out = FreeElem::zero();
        for (c, p) in polys.iter().enumerate() {
            for (m, s) in p.terms() {
                out.terms.insert(
                    Term { component: c, monomial: m.clone() },
                    s.clone(),
                );
            }
        }
        let _ = ring;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Term) -> Option<&Scalar> {
        self.terms.get(t)
    }

    pub fn add_term(&mut self, field: &FieldSpec, t: Term, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&t) {
            None => {
                self.terms.insert(t, c);
            }
            Some(old) => {
                let sum = field.add(&old, &c);
                if !sum.is_zero() {
                    self.terms.insert(t, sum);
                }
            }
        }
    }

    pub fn add(&self, field: &FieldSpec, other: &FreeElem) -> FreeElem {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(field, t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, field: &FieldSpec, other: &FreeElem) -> FreeElem {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(field, t.clone(), field.neg(c));
        }
        out
    }

    pub fn neg(&self, field: &FieldSpec) -> FreeElem {
        let mut out = FreeElem::zero();
        for (t, c) in &self.terms {
            out.terms.insert(t.clone(), field.neg(c));
        }
        out
    }

    pub fn scale(&self, field: &FieldSpec, c: &Scalar) -> FreeElem {
        if c.is_zero() {
            return FreeElem::zero();
        }
        let mut out = FreeElem::zero();
        for (t, a) in &self.terms {
            let v = field.mul(a, c);
            if !v.is_zero() {
                out.terms.insert(t.clone(), v);
            }
        }
        out
    }

    pub fn mul_monomial(&self, field: &FieldSpec, m: &Monomial, c: &Scalar) -> FreeElem {
        if c.is_zero() {
            return FreeElem::zero();
        }
        let mut out = FreeElem::zero();
        for (t, a) in &self.terms {
            let v = field.mul(a, c);
            if !v.is_zero() {
                out.terms.insert(
                    Term {
                        component: t.component,
                        monomial: t.monomial.mul(m),
                    },
                    v,
                );
            }
        }
        out
    }

    pub fn mul_poly(&self, field: &FieldSpec, p: &Polynomial) -> FreeElem {
        let mut out = FreeElem::zero();
        for (m, c) in p.terms() {
            for (t, a) in &self.terms {
                out.add_term(
                    field,
                    Term {
                        component: t.component,
                        monomial: t.monomial.mul(m),
                    },
                    field.mul(a, c),
                );
            }
        }
        out
    }

    /// Extracts the polynomial sitting in one component.
    pub fn component_poly(&self, ring: &PolyRing, c: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|(t, _)| t.component == c)
                .map(|(t, s)| (t.monomial.clone(), s.clone())),
        )
    }

    pub fn to_polys(&self, free: &GradedFree) -> Vec<Polynomial> {
        (0..free.rank())
            .map(|c| self.component_poly(&free.ring, c))
            .collect()
    }

    /// Module degree when homogeneous; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self, free: &GradedFree) -> Result<Option<i64>> {
        let mut deg = None;
        for (t, _) in &self.terms {
            let d = free.term_degree(t);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => {
                    return Err(Error::NotHomogeneous(format!(
                        "degrees {existing} and {d} in one element"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Restricts to terms from the given component range, re-indexed to
    /// start at zero.
    pub fn slice_components(&self, range: std::ops::Range<usize>) -> FreeElem {
        let mut out = FreeElem::zero();
        for (t, c) in &self.terms {
            if range.contains(&t.component) {
                out.terms.insert(
                    Term {
                        component: t.component - range.start,
                        monomial: t.monomial.clone(),
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    /// Shifts all component indices up by `offset`.
    pub fn shift_components(&self, offset: usize) -> FreeElem {
        let mut out = FreeElem::zero();
        for (t, c) in &self.terms {
            out.terms.insert(
                Term {
                    component: t.component + offset,
                    monomial: t.monomial.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    pub fn to_display(&self, free: &GradedFree) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let polys = self.to_polys(free);
        let parts: Vec<String> = polys
            .iter()
            .map(|p| p.to_display(&free.ring.field))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<free element, {} terms>", self.terms.len())
    }
}

/// A degree-0 homogeneous map between graded free modules, stored as a
/// `target.rank x source.rank` matrix of polynomials: column `j` is the
/// image of the `j`-th source generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    pub source: GradedFree,
    pub target: GradedFree,
    entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    pub fn new(
        source: GradedFree,
        target: GradedFree,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch("graded map".into()));
        }
        if entries.len() != target.rank()
            || entries.iter().any(|row| row.len() != source.rank())
        {
            return Err(Error::DimensionMismatch(format!(
                "map entries must be {}x{}",
                target.rank(),
                source.rank()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = target.shifts[i] - source.shifts[j];
                if want < 0 || !p.is_homogeneous_of(want as u32) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i},{j}) must be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(GradedMap { source, target, entries })
    }

    /// Builds the map out of the images of the source generators.
    pub fn from_columns(
        source: GradedFree,
        target: GradedFree,
        columns: &[FreeElem],
    ) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::DimensionMismatch("one column per generator".into()));
        }
        let entries: Vec<Vec<Polynomial>> = (0..target.rank())
            .map(|i| {
                columns
                    .iter()
                    .map(|col| col.component_poly(&target.ring, i))
                    .collect()
            })
            .collect();
        Self::new(source, target, entries)
    }

    pub fn zero(source: GradedFree, target: GradedFree) -> Result<Self> {
        let z = vec![vec![Polynomial::zero(source.ring.num_vars); source.rank()]; target.rank()];
        Self::new(source, target, z)
    }

    pub fn identity(free: &GradedFree) -> Self {
        let n = free.rank();
        let entries: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(&free.ring)
                        } else {
                            Polynomial::zero(free.ring.num_vars)
                        }
                    })
                    .collect()
            })
            .collect();
        GradedMap {
            source: free.clone(),
            target: free.clone(),
            entries,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &Vec<Vec<Polynomial>> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    /// Image of the `j`-th source generator as an element of the target.
    pub fn column(&self, j: usize) -> FreeElem {
        let field = &self.target.ring.field;
        let mut out = FreeElem::zero();
        for (i, row) in self.entries.iter().enumerate() {
            for (m, c) in row[j].terms() {
                out.add_term(
                    field,
                    Term { component: i, monomial: m.clone() },
                    c.clone(),
                );
            }
        }
        out
    }

    pub fn columns(&self) -> Vec<FreeElem> {
        (0..self.source.rank()).map(|j| self.column(j)).collect()
    }

    pub fn apply(&self, elem: &FreeElem) -> FreeElem {
        let field = &self.target.ring.field;
        let mut out = FreeElem::zero();
        for (t, s) in elem.terms() {
            for (i, row) in self.entries.iter().enumerate() {
                let p = &row[t.component];
                if p.is_zero() {
                    continue;
                }
                for (m, c) in p.terms() {
                    out.add_term(
                        field,
                        Term {
                            component: i,
                            monomial: t.monomial.mul(m),
                        },
                        field.mul(s, c),
                    );
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch("composition".into()));
        }
        let cols: Vec<FreeElem> = other
            .columns()
            .iter()
            .map(|c| self.apply(c))
            .collect();
        GradedMap::from_columns(other.source.clone(), self.target.clone(), &cols)
    }

    /// Twists both sides by `k`; entries are unchanged.
    pub fn twist(&self, k: i64) -> GradedMap {
        GradedMap {
            source: self.source.twist(k),
            target: self.target.twist(k),
            entries: self.entries.clone(),
        }
    }

    /// The degree-`n` component as a dense matrix, acting on the degree
    /// bases from [`GradedFree::basis_of_degree`].
    pub fn matrix_of_degree(&self, n: i64) -> crate::matrix::Matrix {
        let field = &self.source.ring.field;
        let src = self.source.basis_of_degree(n);
        let tgt = self.target.basis_of_degree(n);
        let index: std::collections::BTreeMap<&Term, usize> =
            tgt.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut m = crate::matrix::Matrix::zero(field, tgt.len(), src.len());
        for (j, t) in src.iter().enumerate() {
            let img = self.apply(&FreeElem::term(t.clone(), field.one()));
            for (tt, c) in img.terms() {
                let i = index[tt];
                m.set(i, j, c.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(FieldSpec::default_prime(), 2).unwrap()
    }

    #[test]
    fn degree_bookkeeping() {
        let r = ring();
        // R(-1)^2: generators in degree 1.
        let free = GradedFree::new(r, vec![-1, -1]);
        assert_eq!(free.generator_degree(0), 1);
        assert_eq!(free.dim_of_degree(0), 0);
        assert_eq!(free.dim_of_degree(1), 2);
        assert_eq!(free.dim_of_degree(2), 4);
        let gen = FreeElem::generator(&free, 0);
        assert_eq!(gen.homogeneous_degree(&free).unwrap(), Some(1));
    }

    #[test]
    fn the_ideal_presentation_map_checks_out() {
        let r = ring();
        // (x, y): R(-1)^2 -> R.
        let source = GradedFree::new(r, vec![-1, -1]);
        let target = GradedFree::standard(r, 1);
        let map = GradedMap::new(
            source.clone(),
            target.clone(),
            vec![vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)]],
        )
        .unwrap();
        let img = map.apply(&FreeElem::generator(&source, 0));
        assert_eq!(img.component_poly(&r, 0), Polynomial::var(&r, 0));
        assert_eq!(img.homogeneous_degree(&target).unwrap(), Some(1));

        // A degree-violating entry is rejected.
        assert!(GradedMap::new(
            source,
            target,
            vec![vec![Polynomial::one(&r), Polynomial::var(&r, 1)]],
        )
        .is_err());
    }

    #[test]
    fn composition_matches_application() {
        let r = ring();
        let f2 = GradedFree::new(r, vec![-2]);
        let f1 = GradedFree::new(r, vec![-1]);
        let f0 = GradedFree::standard(r, 1);
        let x = GradedMap::new(f1.clone(), f0.clone(), vec![vec![Polynomial::var(&r, 0)]]).unwrap();
        let y = GradedMap::new(f2.clone(), f1.clone(), vec![vec![Polynomial::var(&r, 1)]]).unwrap();
        let xy = x.compose(&y).unwrap();
        let gen = FreeElem::generator(&f2, 0);
        assert_eq!(xy.apply(&gen), x.apply(&y.apply(&gen)));
    }

    #[test]
    fn degreewise_matrix_of_map() {
        let r = ring();
        let source = GradedFree::new(r, vec![-1, -1]);
        let target = GradedFree::standard(r, 1);
        let map = GradedMap::new(
            source,
            target,
            vec![vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)]],
        )
        .unwrap();
        // In degree 1 the source has basis (gen0, gen1), target has (x, y).
        let m1 = map.matrix_of_degree(1);
        assert_eq!((m1.rows, m1.cols), (2, 2));
        assert_eq!(m1.rank(&FieldSpec::default_prime()), 2);
        // Degree 2: source basis has 4 elements, target 3; rank 3 (image is all of R_2).
        let m2 = map.matrix_of_degree(2);
        assert_eq!((m2.rows, m2.cols), (3, 4));
        assert_eq!(m2.rank(&FieldSpec::default_prime()), 3);
    }
}
