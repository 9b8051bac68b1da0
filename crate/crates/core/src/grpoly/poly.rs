//! Polynomials over an exact field in the standard grading.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::monomial::Monomial;

/// The ring `K[t_0, ..., t_{num_vars-1}]`, every variable of degree 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    pub field: FieldSpec,
    pub num_vars: usize,
}

impl PolyRing {
    pub fn new(field: FieldSpec, num_vars: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::BadInput("ring needs at least one variable".into()));
        }
        Ok(PolyRing { field, num_vars })
    }

    /// Number of projective coordinates minus one; `K[x,y]` has `r = 1`.
    pub fn r(&self) -> usize {
        self.num_vars - 1
    }

    /// `dim_K R_d` = C(d + r, r), zero in negative degrees.
    pub fn dim_of_degree(&self, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        let r = self.r() as i64;
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 1..=r {
            num *= (d + i) as i128;
            den *= i as i128;
        }
        (num / den) as usize
    }

    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        if d < 0 {
            return Vec::new();
        }
        Monomial::all_of_degree(self.num_vars, d as u32)
    }
}

/// A polynomial, stored as monomial -> nonzero coefficient.  The map key
/// order is degrevlex, so the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::monomial(Monomial::one(ring.num_vars), ring.field.one())
    }

    pub fn var(ring: &PolyRing, i: usize) -> Self {
        Self::monomial(Monomial::var(i, ring.num_vars), ring.field.one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn constant(ring: &PolyRing, c: Scalar) -> Self {
        Self::monomial(Monomial::one(ring.num_vars), c)
    }

    pub fn from_terms(
        ring: &PolyRing,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Polynomial::zero(ring.num_vars);
        for (m, c) in terms {
            p.add_term(&ring.field, m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    fn add_term(&mut self, field: &FieldSpec, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = field.add(&old, &c);
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, field: &FieldSpec, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(field, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, field: &FieldSpec, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(field, m.clone(), field.neg(c));
        }
        out
    }

    pub fn neg(&self, field: &FieldSpec) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), field.neg(c));
        }
        out
    }

    pub fn scale(&self, field: &FieldSpec, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            let v = field.mul(a, c);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn mul_monomial(&self, field: &FieldSpec, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (mm, a) in &self.terms {
            let v = field.mul(a, c);
            if !v.is_zero() {
                out.terms.insert(mm.mul(m), v);
            }
        }
        out
    }

    pub fn mul(&self, field: &FieldSpec, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &other.terms {
            for (mm, a) in &self.terms {
                out.add_term(field, mm.mul(m), field.mul(a, c));
            }
        }
        out
    }

    /// Total degree of the highest term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when every term has total degree `d`; zero is homogeneous
    /// of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn to_display(&self, field: &FieldSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let cs = field.scalar_to_string(c);
            if m.is_one() {
                parts.push(cs);
            } else if c.is_one() {
                parts.push(m.to_string());
            } else {
                parts.push(format!("{cs}*{m}"));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, _)| m.to_string())
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(FieldSpec::default_prime(), 2).unwrap()
    }

    #[test]
    fn ring_dimension_counts() {
        let r1 = ring();
        assert_eq!(r1.dim_of_degree(0), 1);
        assert_eq!(r1.dim_of_degree(3), 4);
        assert_eq!(r1.dim_of_degree(-1), 0);
        let r2 = PolyRing::new(FieldSpec::default_prime(), 3).unwrap();
        assert_eq!(r2.dim_of_degree(2), 6);
        assert_eq!(r2.dim_of_degree(5), 21);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let r = ring();
        let f = &r.field;
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.add(f, &y); // x + y
        let q = x.sub(f, &y); // x - y
        let prod = p.mul(f, &q); // x^2 - y^2
        assert_eq!(prod.num_terms(), 2);
        assert_eq!(prod.homogeneous_degree(), Some(2));
        let back = prod.add(f, &y.mul(f, &y)); // x^2
        assert_eq!(back, x.mul(f, &x));
        assert!(p.sub(f, &p).is_zero());
    }

    #[test]
    fn leading_term_is_degrevlex_max() {
        let r = ring();
        let f = &r.field;
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = y.mul(f, &y).add(f, &x.mul(f, &y)); // xy + y^2
        let (lm, _) = p.leading().unwrap();
        assert_eq!(lm, &Monomial::from_exponents(vec![1, 1]));
    }

    #[test]
    fn homogeneity_detection() {
        let r = ring();
        let f = &r.field;
        let x = Polynomial::var(&r, 0);
        let one = Polynomial::one(&r);
        assert_eq!(x.homogeneous_degree(), Some(1));
        assert_eq!(x.add(f, &one).homogeneous_degree(), None);
    }
}
