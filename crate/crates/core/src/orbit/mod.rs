//! Orbit algebras of a triple (category, distinguished object, twist).
//!
//! The two concrete backends expose the same interface: indecomposable
//! objects indexed by (family, twist count), hom spaces with fixed bases,
//! composition, and a functorial twist.  Everything downstream (the orbit
//! algebra, section modules, radical filtration, almost split maps and the
//! verification suites) is written once against that interface.

pub mod algebra;
pub mod gamma;
pub mod kron_backend;
pub mod qgr_backend;
pub mod radical;
pub mod verify;

pub use algebra::{orbit_algebra, GradedAlgebraWithBasis};
pub use gamma::{
    gamma_star, graded_hom_dim, sheafify, GammaStar, GradedModuleOverA, PresentationOverA,
};
pub use kron_backend::KronBackend;
pub use qgr_backend::QgrBackend;
pub use radical::{morphism_length, radical_power, right_almost_split};
pub use verify::{adjointness_check, verify_a1, verify_a2, ConditionReport};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// An indecomposable: the twist applied `k` times to the distinguished
/// object's summand number `f`.
pub type Ind = (usize, i64);

/// An object of the additive closure of the twist orbit of C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalObject {
    pub summands: Vec<Ind>,
}

impl FormalObject {
    pub fn new(summands: Vec<Ind>) -> Self {
        FormalObject { summands }
    }

    pub fn single(x: Ind) -> Self {
        FormalObject { summands: vec![x] }
    }

    pub fn empty() -> Self {
        FormalObject { summands: vec![] }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn twisted(&self, n: i64) -> FormalObject {
        FormalObject {
            summands: self.summands.iter().map(|&(f, k)| (f, k + n)).collect(),
        }
    }
}

/// A morphism between formal objects, stored blockwise: `blocks[ti][sj]`
/// holds the coordinates of the component source_j -> target_i in the
/// backend's hom basis for that pair.
#[derive(Clone, Debug)]
pub struct CatMorphism {
    pub source: FormalObject,
    pub target: FormalObject,
    pub blocks: Vec<Vec<Vec<Scalar>>>,
}

/// The backend interface for a twisted category.  Hom sets vanish unless
/// `level` weakly increases (both backends are directed), every
/// indecomposable has endomorphism ring K, and the twist shifts the index
/// by one while raising the level by `sigma_level_step`.
pub trait TwistedBackend {
    fn field(&self) -> FieldSpec;
    fn families(&self) -> usize;
    fn window(&self) -> i64;
    fn level(&self, x: Ind) -> i64;
    fn sigma_level_step(&self) -> i64;
    /// Smallest twist index realizing a nonzero object; None if unbounded.
    fn min_twist(&self) -> Option<i64>;
    fn is_directed(&self) -> bool {
        true
    }
    fn hom_dim(&self, x: Ind, y: Ind) -> Result<usize>;
    /// hom(y,z)[f] after hom(x,y)[g], in hom(x,z) coordinates.
    fn compose_basis(&self, x: Ind, y: Ind, z: Ind, f: usize, g: usize) -> Result<Vec<Scalar>>;
    /// The twist of hom(x,y)[f], in hom(twist x, twist y) coordinates.
    fn twist_basis(&self, x: Ind, y: Ind, f: usize) -> Result<Vec<Scalar>>;
    fn id_coords(&self, x: Ind) -> Result<Vec<Scalar>>;
    /// Epimorphism test in the ambient abelian category.
    fn cat_is_epi(&self, m: &CatMorphism) -> Result<bool>;
    /// dim Hom(coker(phi), Y) in the ambient category; None = inconclusive.
    fn hom_from_coker(&self, phi: &CatMorphism, y: &FormalObject) -> Result<Option<usize>>;

    fn distinguished(&self) -> FormalObject {
        FormalObject::new((0..self.families()).map(|f| (f, 0)).collect())
    }

    fn window_inds(&self) -> Vec<Ind> {
        let w = self.window();
        let lo = self.min_twist().map_or(-w, |m| m.max(-w));
        let mut out = vec![];
        for k in lo..=w {
            for f in 0..self.families() {
                out.push((f, k));
            }
        }
        out
    }

    /// Both backends realize distinct levels as non-isomorphic objects and
    /// equal levels as equal objects.
    fn same_object(&self, x: Ind, y: Ind) -> bool {
        self.level(x) == self.level(y)
    }
}

/// Coordinate layout of Hom(X, Y): (offset, length) per block, plus the
/// total dimension.
pub fn hom_layout<B: TwistedBackend + ?Sized>(
    b: &B,
    x: &FormalObject,
    y: &FormalObject,
) -> Result<(Vec<Vec<(usize, usize)>>, usize)> {
    let mut off = 0usize;
    let mut layout = vec![vec![(0usize, 0usize); x.len()]; y.len()];
    for (ti, &yt) in y.summands.iter().enumerate() {
        for (sj, &xs) in x.summands.iter().enumerate() {
            let d = b.hom_dim(xs, yt)?;
            layout[ti][sj] = (off, d);
            off += d;
        }
    }
    Ok((layout, off))
}

pub fn zero_cat<B: TwistedBackend + ?Sized>(
    b: &B,
    x: &FormalObject,
    y: &FormalObject,
) -> Result<CatMorphism> {
    let field = b.field();
    let mut blocks = vec![vec![vec![]; x.len()]; y.len()];
    for (ti, &yt) in y.summands.iter().enumerate() {
        for (sj, &xs) in x.summands.iter().enumerate() {
            blocks[ti][sj] = vec![field.zero(); b.hom_dim(xs, yt)?];
        }
    }
    Ok(CatMorphism { source: x.clone(), target: y.clone(), blocks })
}

pub fn identity_cat<B: TwistedBackend + ?Sized>(b: &B, x: &FormalObject) -> Result<CatMorphism> {
    let mut m = zero_cat(b, x, x)?;
    for (i, &xi) in x.summands.iter().enumerate() {
        m.blocks[i][i] = b.id_coords(xi)?;
    }
    Ok(m)
}

pub fn flatten_cat<B: TwistedBackend + ?Sized>(b: &B, m: &CatMorphism) -> Result<Vec<Scalar>> {
    let (layout, total) = hom_layout(b, &m.source, &m.target)?;
    let mut out = vec![b.field().zero(); total];
    for (ti, row) in m.blocks.iter().enumerate() {
        for (sj, coords) in row.iter().enumerate() {
            let (off, len) = layout[ti][sj];
            debug_assert_eq!(coords.len(), len);
            out[off..off + len].clone_from_slice(coords);
        }
    }
    Ok(out)
}

pub fn cat_from_flat<B: TwistedBackend + ?Sized>(
    b: &B,
    x: &FormalObject,
    y: &FormalObject,
    v: &[Scalar],
) -> Result<CatMorphism> {
    let (layout, total) = hom_layout(b, x, y)?;
    if v.len() != total {
        return Err(Error::DimensionMismatch("hom coordinate length".into()));
    }
    let blocks = layout
        .iter()
        .map(|row| row.iter().map(|&(off, len)| v[off..off + len].to_vec()).collect())
        .collect();
    Ok(CatMorphism { source: x.clone(), target: y.clone(), blocks })
}

/// Bilinear extension of compose_basis to coordinate vectors.
pub fn compose_coords<B: TwistedBackend + ?Sized>(
    b: &B,
    x: Ind,
    y: Ind,
    z: Ind,
    f: &[Scalar],
    g: &[Scalar],
) -> Result<Vec<Scalar>> {
    let field = b.field();
    let mut out = vec![field.zero(); b.hom_dim(x, z)?];
    for (fi, fc) in f.iter().enumerate() {
        if fc.is_zero() {
            continue;
        }
        for (gi, gc) in g.iter().enumerate() {
            if gc.is_zero() {
                continue;
            }
            let basis = b.compose_basis(x, y, z, fi, gi)?;
            let c = field.mul(fc, gc);
            for (o, s) in out.iter_mut().zip(basis.iter()) {
                *o = field.add(o, &field.mul(&c, s));
            }
        }
    }
    Ok(out)
}

pub fn twist_coords<B: TwistedBackend + ?Sized>(
    b: &B,
    x: Ind,
    y: Ind,
    f: &[Scalar],
) -> Result<Vec<Scalar>> {
    let field = b.field();
    let tx = (x.0, x.1 + 1);
    let ty = (y.0, y.1 + 1);
    let mut out = vec![field.zero(); b.hom_dim(tx, ty)?];
    for (fi, fc) in f.iter().enumerate() {
        if fc.is_zero() {
            continue;
        }
        let basis = b.twist_basis(x, y, fi)?;
        for (o, s) in out.iter_mut().zip(basis.iter()) {
            *o = field.add(o, &field.mul(fc, s));
        }
    }
    Ok(out)
}

pub fn compose_cat<B: TwistedBackend + ?Sized>(
    b: &B,
    f: &CatMorphism,
    g: &CatMorphism,
) -> Result<CatMorphism> {
    if g.target != f.source {
        return Err(Error::DimensionMismatch("composition middle object".into()));
    }
    let field = b.field();
    let mut out = zero_cat(b, &g.source, &f.target)?;
    for (zi, &z) in f.target.summands.iter().enumerate() {
        for (xj, &x) in g.source.summands.iter().enumerate() {
            let mut acc = vec![field.zero(); b.hom_dim(x, z)?];
            for (yk, &y) in f.source.summands.iter().enumerate() {
                let part = compose_coords(b, x, y, z, &f.blocks[zi][yk], &g.blocks[yk][xj])?;
                for (a, p) in acc.iter_mut().zip(part.iter()) {
                    *a = field.add(a, p);
                }
            }
            out.blocks[zi][xj] = acc;
        }
    }
    Ok(out)
}

pub fn twist_cat<B: TwistedBackend + ?Sized>(b: &B, m: &CatMorphism) -> Result<CatMorphism> {
    let mut out = zero_cat(b, &m.source.twisted(1), &m.target.twisted(1))?;
    for (ti, &y) in m.target.summands.iter().enumerate() {
        for (sj, &x) in m.source.summands.iter().enumerate() {
            out.blocks[ti][sj] = twist_coords(b, x, y, &m.blocks[ti][sj])?;
        }
    }
    Ok(out)
}

pub fn twist_cat_pow<B: TwistedBackend + ?Sized>(
    b: &B,
    m: &CatMorphism,
    n: i64,
) -> Result<CatMorphism> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = twist_cat(b, &cur)?;
    }
    Ok(cur)
}

pub fn add_cat<B: TwistedBackend + ?Sized>(
    b: &B,
    f: &CatMorphism,
    g: &CatMorphism,
) -> Result<CatMorphism> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::DimensionMismatch("sum of mismatched morphisms".into()));
    }
    let field = b.field();
    let mut out = f.clone();
    for (ti, row) in out.blocks.iter_mut().enumerate() {
        for (sj, coords) in row.iter_mut().enumerate() {
            for (c, gc) in coords.iter_mut().zip(g.blocks[ti][sj].iter()) {
                *c = field.add(c, gc);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

pub fn scale_cat(field: &FieldSpec, m: &CatMorphism, c: &Scalar) -> CatMorphism {
    let mut out = m.clone();
    for row in out.blocks.iter_mut() {
        for coords in row.iter_mut() {
            for x in coords.iter_mut() {
                *x = field.mul(x, c);
            }
        }
    }
    out
}
