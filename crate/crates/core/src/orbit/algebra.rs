//! Graded algebras with a fixed basis in every degree, and the orbit
//! algebra construction A_n = Hom(C, sigma^n C) with multiplication
//! x*y = sigma^q(x) after y.
//!
//! Degree-n coordinates follow the hom layout of Hom(C, sigma^n C), so a
//! basis vector converts to a categorical morphism and back without any
//! reindexing.  The matrix-of-polynomials model of the preprojective
//! algebra reuses this type with the same block conventions.

use super::{
    cat_from_flat, compose_cat, flatten_cat, hom_layout, twist_cat_pow, CatMorphism,
    TwistedBackend,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug)]
pub struct GradedAlgebraWithBasis {
    pub field: FieldSpec,
    /// dims[n] = dim A_n.
    pub dims: Vec<usize>,
    /// block_dims[n][ti][sj]: hom layout of degree n (target family major).
    pub block_dims: Vec<Vec<Vec<usize>>>,
    /// mult[p][q][i][j] = coordinates of e_i * e_j in degree p+q.
    pub mult: Vec<Vec<Vec<Vec<Vec<Scalar>>>>>,
    /// Coordinates of 1 in degree 0.
    pub unit: Vec<Scalar>,
}

impl GradedAlgebraWithBasis {
    pub fn from_parts(
        field: FieldSpec,
        dims: Vec<usize>,
        block_dims: Vec<Vec<Vec<usize>>>,
        mult: Vec<Vec<Vec<Vec<Vec<Scalar>>>>>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let n_max = dims.len().saturating_sub(1);
        if block_dims.len() != dims.len() || unit.len() != dims.first().copied().unwrap_or(0) {
            return Err(Error::DimensionMismatch("algebra shape".into()));
        }
        for (n, bd) in block_dims.iter().enumerate() {
            let total: usize = bd.iter().flat_map(|row| row.iter()).sum();
            if total != dims[n] {
                return Err(Error::DimensionMismatch("block dims disagree with dims".into()));
            }
        }
        if mult.len() != dims.len() {
            return Err(Error::DimensionMismatch("mult table outer length".into()));
        }
        for (p, row) in mult.iter().enumerate() {
            if row.len() != n_max + 1 - p {
                return Err(Error::DimensionMismatch("mult table inner length".into()));
            }
            for (q, tab) in row.iter().enumerate() {
                if tab.len() != dims[p]
                    || tab.iter().any(|r| {
                        r.len() != dims[q] || r.iter().any(|v| v.len() != dims[p + q])
                    })
                {
                    return Err(Error::DimensionMismatch(format!(
                        "structure constants at ({p},{q})"
                    )));
                }
            }
        }
        Ok(GradedAlgebraWithBasis { field, dims, block_dims, mult, unit })
    }

    pub fn n_max(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn unit_vec(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dims[n]];
        v[i] = self.field.one();
        v
    }

    /// Bilinear product A_p x A_q -> A_{p+q}.
    pub fn mult_coords(&self, p: usize, q: usize, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        if p + q > self.n_max() {
            return Err(Error::DimensionMismatch("product degree outside window".into()));
        }
        if a.len() != self.dims[p] || b.len() != self.dims[q] {
            return Err(Error::DimensionMismatch("product operand length".into()));
        }
        let field = &self.field;
        let mut out = vec![field.zero(); self.dims[p + q]];
        for (i, ac) in a.iter().enumerate() {
            if ac.is_zero() {
                continue;
            }
            for (j, bc) in b.iter().enumerate() {
                if bc.is_zero() {
                    continue;
                }
                let c = field.mul(ac, bc);
                for (o, s) in out.iter_mut().zip(self.mult[p][q][i][j].iter()) {
                    *o = field.add(o, &field.mul(&c, s));
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive associativity check over all basis triples in the window.
    pub fn is_associative(&self) -> Result<bool> {
        let n = self.n_max();
        for p in 0..=n {
            for q in 0..=n - p {
                for r in 0..=n - p - q {
                    for i in 0..self.dims[p] {
                        let ei = self.unit_vec(p, i);
                        for j in 0..self.dims[q] {
                            let ej = self.unit_vec(q, j);
                            let eij = self.mult_coords(p, q, &ei, &ej)?;
                            for k in 0..self.dims[r] {
                                let ek = self.unit_vec(r, k);
                                let left = self.mult_coords(p + q, r, &eij, &ek)?;
                                let ejk = self.mult_coords(q, r, &ej, &ek)?;
                                let right = self.mult_coords(p, q + r, &ei, &ejk)?;
                                if left != right {
                                    return Ok(false);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_unital(&self) -> Result<bool> {
        for n in 0..=self.n_max() {
            for i in 0..self.dims[n] {
                let e = self.unit_vec(n, i);
                if self.mult_coords(0, n, &self.unit, &e)? != e
                    || self.mult_coords(n, 0, &e, &self.unit)? != e
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_commutative(&self) -> Result<bool> {
        let n = self.n_max();
        for p in 0..=n {
            for q in 0..=n - p {
                for i in 0..self.dims[p] {
                    let ei = self.unit_vec(p, i);
                    for j in 0..self.dims[q] {
                        let ej = self.unit_vec(q, j);
                        if self.mult_coords(p, q, &ei, &ej)?
                            != self.mult_coords(q, p, &ej, &ei)?
                        {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Basis indices of the degree-0 radical: the blocks between
    /// non-isomorphic summands of C.  Valid for both the orbit layout and
    /// the matrix model layout, where diagonal blocks carry the units.
    pub fn radical_zero_units(&self) -> Vec<usize> {
        let mut out = vec![];
        let mut off = 0;
        for (ti, row) in self.block_dims[0].iter().enumerate() {
            for (sj, &d) in row.iter().enumerate() {
                if ti != sj {
                    out.extend(off..off + d);
                }
                off += d;
            }
        }
        out
    }
}

/// The orbit algebra of the backend's distinguished object, through degree
/// `n_max`.  Fails when a negative-degree hom space is nonzero, since the
/// construction assumes the orbit only moves forward.
pub fn orbit_algebra<B: TwistedBackend + ?Sized>(
    b: &B,
    n_max: usize,
) -> Result<GradedAlgebraWithBasis> {
    let c = b.distinguished();
    for n in 1..=n_max as i64 {
        let (_, total) = hom_layout(b, &c, &c.twisted(-n))?;
        if total != 0 {
            return Err(Error::BadInput(format!(
                "Hom(C, sigma^{}C) is nonzero; orbit algebra undefined",
                -n
            )));
        }
    }
    let mut dims = vec![];
    let mut block_dims = vec![];
    for n in 0..=n_max as i64 {
        let tw = c.twisted(n);
        let (layout, total) = hom_layout(b, &c, &tw)?;
        dims.push(total);
        block_dims.push(layout.iter().map(|row| row.iter().map(|&(_, l)| l).collect()).collect());
    }
    // basis morphisms per degree, and their twists by every needed power
    let mut basis: Vec<Vec<CatMorphism>> = vec![];
    for (n, &d) in dims.iter().enumerate() {
        let tw = c.twisted(n as i64);
        let mut row = vec![];
        for i in 0..d {
            let mut flat = vec![b.field().zero(); d];
            flat[i] = b.field().one();
            row.push(cat_from_flat(b, &c, &tw, &flat)?);
        }
        basis.push(row);
    }
    let mut mult = vec![];
    for p in 0..=n_max {
        let mut row = vec![];
        for q in 0..=n_max - p {
            let mut tab = vec![vec![vec![]; dims[q]]; dims[p]];
            for (i, e) in basis[p].iter().enumerate() {
                let shifted = twist_cat_pow(b, e, q as i64)?;
                for (j, f) in basis[q].iter().enumerate() {
                    let prod = compose_cat(b, &shifted, f)?;
                    tab[i][j] = flatten_cat(b, &prod)?;
                }
            }
            row.push(tab);
        }
        mult.push(row);
    }
    let unit = flatten_cat(b, &super::identity_cat(b, &c)?)?;
    GradedAlgebraWithBasis::from_parts(b.field(), dims, block_dims, mult, unit)
}
