//! Dense univariate polynomials over the coefficient fields.
//!
//! The factorisation routines (squarefree decomposition, distinct-degree
//! splitting, Cantor-Zassenhaus) are what the representation-theoretic
//! decomposition code uses to cut a module along the generalised eigenspaces
//! of an endomorphism.  Factorisation into irreducibles is only offered over
//! prime fields; over the rationals we stop at the squarefree decomposition,
//! which is still enough to produce many splittings.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficients ascending by exponent, highest one nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one(field: &FieldSpec) -> Self {
        UniPoly { coeffs: vec![field.one()] }
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x(field: &FieldSpec) -> Self {
        UniPoly { coeffs: vec![field.zero(), field.one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize, field: &FieldSpec) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, field: &FieldSpec, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(&self.coeff(i, field), &other.coeff(i, field)))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn sub(&self, field: &FieldSpec, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.sub(&self.coeff(i, field), &other.coeff(i, field)))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, field: &FieldSpec, c: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &FieldSpec, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn monic(&self, field: &FieldSpec) -> Result<UniPoly> {
        let lead = self.lead().ok_or(Error::DivisionByZero)?;
        let inv = field.inv(lead)?;
        Ok(self.scale(field, &inv))
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem(&self, field: &FieldSpec, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dlead = divisor.lead().ok_or(Error::DivisionByZero)?;
        let dinv = field.inv(dlead)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - ddeg;
            if !top.is_zero() {
                let q = field.mul(&top, &dinv);
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    let t = field.mul(&q, d);
                    rem[shift + k] = field.sub(&rem[shift + k], &t);
                }
                quot[shift] = q;
            }
            rem.pop();
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn rem(&self, field: &FieldSpec, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(field, divisor)?.1)
    }

    pub fn div_exact(&self, field: &FieldSpec, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(field, divisor)?;
        if !r.is_zero() {
            return Err(Error::BadInput("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &FieldSpec, other: &UniPoly) -> Result<UniPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic(field)
        }
    }

    pub fn derivative(&self, field: &FieldSpec) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| field.mul(&field.from_i64(i as i64), c))
            .collect();
        UniPoly::new(coeffs)
    }

    /// self^exp mod modulus, exponent given by big-endian bits.
    fn pow_mod_bits(&self, field: &FieldSpec, bits: &[bool], modulus: &UniPoly) -> Result<UniPoly> {
        let mut acc = UniPoly::one(field);
        for &bit in bits {
            acc = acc.mul(field, &acc).rem(field, modulus)?;
            if bit {
                acc = acc.mul(field, self).rem(field, modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn pow_mod(&self, field: &FieldSpec, exp: u64, modulus: &UniPoly) -> Result<UniPoly> {
        let bits: Vec<bool> = (0..64).rev().map(|i| exp >> i & 1 == 1).collect();
        self.pow_mod_bits(field, &bits, modulus)
    }

    pub fn pow_mod_big(&self, field: &FieldSpec, exp: &BigUint, modulus: &UniPoly) -> Result<UniPoly> {
        let nbits = exp.bits();
        let bits: Vec<bool> = (0..nbits).rev().map(|i| exp.bit(i)).collect();
        self.pow_mod_bits(field, &bits, modulus)
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, field: &FieldSpec, m: &Matrix) -> Result<Matrix> {
        let n = m.rows;
        let mut acc = Matrix::zero(field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(field, m)?;
            let diag = Matrix::identity(field, n).scale(field, c);
            acc = acc.add(field, &diag)?;
        }
        Ok(acc)
    }
}

/// Inverse of the Frobenius on a polynomial of the form g(x^p); only makes
/// sense over F_p, where coefficients are their own p-th roots.
fn pth_root(f: &UniPoly, p: u64) -> Result<UniPoly> {
    let mut coeffs = vec![];
    for (i, c) in f.coeffs.iter().enumerate() {
        if i as u64 % p == 0 {
            coeffs.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::BadInput("polynomial is not a p-th power".into()));
        }
    }
    Ok(UniPoly::new(coeffs))
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime monic
/// squarefree parts with their multiplicities, multiplicities ascending.
pub fn squarefree_decomposition(field: &FieldSpec, f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let f = f.monic(field)?;
    if f.is_constant() {
        return Ok(vec![]);
    }
    let p = match field {
        FieldSpec::Fp(p) => Some(*p as u64),
        FieldSpec::Q => None,
    };
    let fd = f.derivative(field);
    if fd.is_zero() {
        let p = p.ok_or_else(|| Error::BadInput("vanishing derivative over the rationals".into()))?;
        let root = pth_root(&f, p)?;
        let inner = squarefree_decomposition(field, &root)?;
        return Ok(inner.into_iter().map(|(g, e)| (g, e * p as usize)).collect());
    }
    let mut c = f.gcd(field, &fd)?;
    let mut w = f.div_exact(field, &c)?;
    let mut out = vec![];
    let mut i = 1usize;
    while !w.is_constant() {
        let y = w.gcd(field, &c)?;
        let a = w.div_exact(field, &y)?;
        if !a.is_constant() {
            out.push((a, i));
        }
        c = c.div_exact(field, &y)?;
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        let p = p.ok_or_else(|| Error::BadInput("leftover repeated part over the rationals".into()))?;
        let root = pth_root(&c, p)?;
        for (g, e) in squarefree_decomposition(field, &root)? {
            out.push((g, e * p as usize));
        }
    }
    out.sort_by_key(|(g, e)| (*e, g.coeffs.len()));
    Ok(out)
}

/// Distinct-degree splitting of a monic squarefree polynomial over F_p:
/// pairs (product of all irreducible factors of degree d, d).
fn distinct_degree(field: &FieldSpec, f: &UniPoly, p: u64) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = vec![];
    let mut v = f.clone();
    let mut h = UniPoly::x(field);
    let mut d = 0usize;
    while v.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(field, p, &v)?;
        let hx = h.sub(field, &UniPoly::x(field));
        let g = hx.gcd(field, &v)?;
        if !g.is_constant() && !g.is_zero() {
            out.push((g.clone(), d));
            v = v.div_exact(field, &g)?;
            h = h.rem(field, &v)?;
        }
    }
    if !v.is_constant() {
        let deg = v.degree().unwrap();
        out.push((v, deg));
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, every
/// irreducible factor of degree d, p odd.
fn equal_degree(
    field: &FieldSpec,
    f: &UniPoly,
    d: usize,
    p: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<UniPoly>> {
    let deg = f.degree().unwrap_or(0);
    if deg == d {
        return Ok(vec![f.clone()]);
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) >> 1;
    loop {
        let a = UniPoly::new((0..deg).map(|_| field.from_i64(rng.gen_range(0..p) as i64)).collect());
        if a.is_constant() {
            continue;
        }
        let b = a.pow_mod_big(field, &exp, f)?;
        let g = b.sub(field, &UniPoly::one(field)).gcd(field, f)?;
        let gdeg = g.degree().unwrap_or(0);
        if gdeg > 0 && gdeg < deg {
            let rest = f.div_exact(field, &g)?;
            let mut out = equal_degree(field, &g, d, p, rng)?;
            out.extend(equal_degree(field, &rest, d, p, rng)?);
            return Ok(out);
        }
    }
}

/// Full factorisation into monic irreducibles over F_p, deterministic for a
/// fixed seed.  Factors are sorted by degree, then by coefficient key.
pub fn factor(field: &FieldSpec, f: &UniPoly, seed: u64) -> Result<Vec<(UniPoly, usize)>> {
    let p = match field {
        FieldSpec::Fp(p) => *p as u64,
        FieldSpec::Q => {
            return Err(Error::BadField("factorisation implemented over prime fields only".into()))
        }
    };
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(UniPoly, usize)> = vec![];
    for (g, mult) in squarefree_decomposition(field, f)? {
        for (h, d) in distinct_degree(field, &g, p)? {
            for irr in equal_degree(field, &h, d, p, &mut rng)? {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by_key(|(g, _)| {
        let key: Vec<String> = g.coeffs.iter().map(|c| c.sort_key()).collect();
        (g.coeffs.len(), key)
    });
    Ok(out)
}

/// Minimal polynomial of a square matrix, found as the first linear
/// dependence among the flattened powers.
pub fn min_poly(field: &FieldSpec, m: &Matrix) -> Result<UniPoly> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!(
            "minimal polynomial of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(UniPoly::one(field));
    }
    let flat = |a: &Matrix| -> Vec<Scalar> {
        (0..n).flat_map(|i| (0..n).map(move |j| a.get(i, j).clone())).collect()
    };
    let mut powers = Matrix::from_columns(field, vec![flat(&Matrix::identity(field, n))])?;
    let mut cur = Matrix::identity(field, n);
    loop {
        cur = cur.mul(field, m)?;
        let v = flat(&cur);
        if let Some(c) = powers.solve(field, &v)? {
            let k = powers.cols;
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| field.neg(&x)).collect();
            coeffs.resize(k + 1, field.zero());
            coeffs[k] = field.one();
            return Ok(UniPoly::new(coeffs));
        }
        let col = Matrix::from_columns(field, vec![v])?;
        powers = powers.hstack(field, &col)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> FieldSpec {
        FieldSpec::fp(p).unwrap()
    }

    fn poly(field: &FieldSpec, cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    #[test]
    fn division_round_trips() {
        let f = fp(7);
        let a = poly(&f, &[1, 0, 2, 5]);
        let b = poly(&f, &[3, 1]);
        let (q, r) = a.divrem(&f, &b).unwrap();
        let back = q.mul(&f, &b).add(&f, &r);
        assert_eq!(back, a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = fp(7);
        let a = poly(&f, &[1, 1]); // x + 1
        let b = poly(&f, &[2, 1]); // x + 2
        let c = poly(&f, &[3, 1]); // x + 3
        let g = a.mul(&f, &b).gcd(&f, &a.mul(&f, &c)).unwrap();
        assert_eq!(g, a);
    }

    #[test]
    fn squarefree_splits_multiplicities() {
        let f = fp(7);
        let x = poly(&f, &[0, 1]);
        let xp1 = poly(&f, &[1, 1]);
        let prod = x.mul(&f, &x).mul(&f, &x).mul(&f, &xp1).mul(&f, &xp1);
        let dec = squarefree_decomposition(&f, &prod).unwrap();
        assert_eq!(dec, vec![(xp1, 2), (x, 3)]);
    }

    #[test]
    fn squarefree_over_q() {
        let f = FieldSpec::Q;
        let a = poly(&f, &[-1, 1]); // x - 1
        let b = poly(&f, &[1, 1]); // x + 1
        let prod = a.mul(&f, &a).mul(&f, &b);
        let dec = squarefree_decomposition(&f, &prod).unwrap();
        assert_eq!(dec, vec![(b, 1), (a, 2)]);
    }

    #[test]
    fn factor_splits_quadratic() {
        let f = fp(7);
        // x^2 - 2 = (x - 3)(x - 4) mod 7
        let target = poly(&f, &[-2, 0, 1]);
        let factors = factor(&f, &target, 11).unwrap();
        assert_eq!(factors.len(), 2);
        let back = factors
            .iter()
            .fold(UniPoly::one(&f), |acc, (g, e)| {
                (0..*e).fold(acc, |a, _| a.mul(&f, g))
            });
        assert_eq!(back, target.monic(&f).unwrap());
        for (g, _) in &factors {
            assert_eq!(g.degree(), Some(1));
        }
    }

    #[test]
    fn factor_detects_irreducible() {
        let f = fp(7);
        // -1 is not a square mod 7, so x^2 + 1 is irreducible
        let target = poly(&f, &[1, 0, 1]);
        let factors = factor(&f, &target, 5).unwrap();
        assert_eq!(factors, vec![(target, 1)]);
    }

    #[test]
    fn factor_mixed_degrees_default_prime() {
        let f = FieldSpec::default_prime();
        // (x^2 + 1)(x + 2)^2; 32003 = 3 mod 4 keeps the quadratic irreducible
        let quad = poly(&f, &[1, 0, 1]);
        let lin = poly(&f, &[2, 1]);
        let prod = quad.mul(&f, &lin).mul(&f, &lin);
        let factors = factor(&f, &prod, 42).unwrap();
        assert_eq!(factors, vec![(lin, 2), (quad, 1)]);
    }

    #[test]
    fn min_poly_of_companion_block() {
        let f = fp(7);
        // companion matrix of x^2 - 2
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(0), f.from_i64(2)],
                vec![f.from_i64(1), f.from_i64(0)],
            ],
        )
        .unwrap();
        let mp = min_poly(&f, &m).unwrap();
        assert_eq!(mp, poly(&f, &[-2, 0, 1]));
    }

    #[test]
    fn min_poly_of_identity_is_linear() {
        let f = fp(7);
        let m = Matrix::identity(&f, 3);
        assert_eq!(min_poly(&f, &m).unwrap(), poly(&f, &[-1, 1]));
    }

    #[test]
    fn eval_matrix_kills_by_min_poly() {
        let f = fp(7);
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.from_i64(1)],
                vec![f.from_i64(0), f.from_i64(1)],
            ],
        )
        .unwrap();
        let mp = min_poly(&f, &m).unwrap();
        assert_eq!(mp.degree(), Some(2));
        let z = mp.eval_matrix(&f, &m).unwrap();
        assert!(z.is_zero());
    }
}
