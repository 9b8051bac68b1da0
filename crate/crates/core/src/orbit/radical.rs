//! Radical filtration of a directed brick category, infinite-radical
//! length of a morphism, and right almost split maps built from window
//! objects.

use super::{
    cat_from_flat, compose_cat, compose_coords, flatten_cat, hom_layout, zero_cat, CatMorphism,
    FormalObject, Ind, TwistedBackend,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

fn unit_vecs(field: &FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        })
        .collect()
}

fn column_space_basis(field: &FieldSpec, dim: usize, cols: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if cols.is_empty() || dim == 0 {
        return vec![];
    }
    let m = Matrix::from_columns(field, cols.clone()).expect("equal heights");
    m.rref(field).pivots.into_iter().map(|p| cols[p].clone()).collect()
}

/// Basis of rad^n(x, y) in hom coordinates.  Degree-one radicals are the
/// whole hom space between non-isomorphic objects and zero on an object
/// itself (all window objects are bricks); higher powers are spanned by
/// compositions through window objects of intermediate level, which is
/// exhaustive because hom sets only point up the level order.
pub fn radical_power<B: TwistedBackend + ?Sized>(
    b: &B,
    n: usize,
    x: Ind,
    y: Ind,
) -> Result<Vec<Vec<Scalar>>> {
    if !b.is_directed() {
        return Err(Error::BadInput(
            "radical filtration requires a directed category".into(),
        ));
    }
    let field = b.field();
    let dim = b.hom_dim(x, y)?;
    if dim == 0 {
        return Ok(vec![]);
    }
    if n == 0 {
        return Ok(unit_vecs(&field, dim));
    }
    if b.same_object(x, y) {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(unit_vecs(&field, dim));
    }
    let (lx, ly) = (b.level(x), b.level(y));
    let mut cols = vec![];
    for z in b.window_inds() {
        let lz = b.level(z);
        if lz <= lx || lz >= ly {
            continue;
        }
        let lower = radical_power(b, n - 1, x, z)?;
        if lower.is_empty() {
            continue;
        }
        let top = radical_power(b, 1, z, y)?;
        for v in &top {
            for u in &lower {
                cols.push(compose_coords(b, x, z, y, v, u)?);
            }
        }
    }
    Ok(column_space_basis(&field, dim, cols))
}

/// Hom(x, S) as categorical morphisms, one per flat coordinate.
fn hom_basis_cat<B: TwistedBackend + ?Sized>(
    b: &B,
    x: Ind,
    s: &FormalObject,
) -> Result<Vec<CatMorphism>> {
    let field = b.field();
    let from = FormalObject::single(x);
    let (_, total) = hom_layout(b, &from, s)?;
    unit_vecs(&field, total)
        .iter()
        .map(|v| cat_from_flat(b, &from, s, v))
        .collect()
}

/// The smallest n such that phi composed with anything lands in rad^n but
/// every rad^n morphism into the target factors through phi; practically:
/// the least n with rad^n(x, target) inside the image of Hom(x, source)
/// under phi for every window object x.  None if it exceeds n_max.
pub fn morphism_length<B: TwistedBackend + ?Sized>(
    b: &B,
    phi: &CatMorphism,
    n_max: usize,
) -> Result<Option<usize>> {
    let field = b.field();
    for n in 0..=n_max {
        let mut contained = true;
        'outer: for x in b.window_inds() {
            let from = FormalObject::single(x);
            let (layout, total) = hom_layout(b, &from, &phi.target)?;
            if total == 0 {
                continue;
            }
            let mut rad_cols = vec![];
            for (ti, &t) in phi.target.summands.iter().enumerate() {
                let (off, len) = layout[ti][0];
                for v in radical_power(b, n, x, t)? {
                    let mut flat = vec![field.zero(); total];
                    flat[off..off + len].clone_from_slice(&v);
                    rad_cols.push(flat);
                }
            }
            if rad_cols.is_empty() {
                continue;
            }
            let mut img_cols = vec![];
            for g in hom_basis_cat(b, x, &phi.source)? {
                img_cols.push(flatten_cat(b, &compose_cat(b, phi, &g)?)?);
            }
            let img = Matrix::from_columns(&field, {
                let mut all = img_cols.clone();
                all.extend(rad_cols.iter().cloned());
                if all.is_empty() {
                    contained = rad_cols.is_empty();
                    break 'outer;
                }
                all
            })
            .expect("equal heights");
            let joint = img.rref(&field).rank;
            let base = if img_cols.is_empty() {
                0
            } else {
                Matrix::from_columns(&field, img_cols).expect("equal heights").rank(&field)
            };
            if joint != base {
                contained = false;
                break;
            }
        }
        if contained {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// A right almost split map onto x built from window objects: walk the
/// candidates downward in level and adjoin every radical basis morphism
/// that does not already factor through the sum collected so far.
pub fn right_almost_split<B: TwistedBackend + ?Sized>(b: &B, x: Ind) -> Result<CatMorphism> {
    if !b.is_directed() {
        return Err(Error::BadInput(
            "almost split construction requires a directed category".into(),
        ));
    }
    let field = b.field();
    let target = FormalObject::single(x);
    let mut acc = zero_cat(b, &FormalObject::empty(), &target)?;
    let mut inds = b.window_inds();
    inds.sort_by_key(|&(f, k)| (-b.level((f, k)), f, k));
    for z in inds {
        if b.level(z) >= b.level(x) {
            continue;
        }
        let rad1 = radical_power(b, 1, z, x)?;
        if rad1.is_empty() {
            continue;
        }
        // image of Hom(z, current source) under acc, in Hom(z, x) coords
        let mut img_cols = vec![];
        for g in hom_basis_cat(b, z, &acc.source)? {
            img_cols.push(flatten_cat(b, &compose_cat(b, &acc, &g)?)?);
        }
        let dim = b.hom_dim(z, x)?;
        let mut span = column_space_basis(&field, dim, img_cols);
        for v in rad1 {
            let mut all = span.clone();
            all.push(v.clone());
            let joint = Matrix::from_columns(&field, all).expect("equal heights");
            if joint.rank(&field) == span.len() {
                continue;
            }
            span.push(v.clone());
            let mut summands = acc.source.summands.clone();
            summands.push(z);
            let source = FormalObject::new(summands);
            let mut next = zero_cat(b, &source, &target)?;
            for (sj, old) in acc.blocks[0].iter().enumerate() {
                next.blocks[0][sj] = old.clone();
            }
            *next.blocks[0].last_mut().unwrap() = v;
            acc = next;
        }
    }
    Ok(acc)
}
