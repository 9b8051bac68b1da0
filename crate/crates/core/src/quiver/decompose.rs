//! Krull-Schmidt decomposition by Fitting splittings.
//!
//! A piece is cut along the generalised eigenspaces of an endomorphism: the
//! minimal polynomial of a candidate endomorphism is factored (fully over a
//! prime field, into coprime squarefree parts over the rationals) and the
//! kernels of the factor powers are arrow-stable subspaces.  When no
//! candidate splits a piece, the endomorphism algebra modulo its radical is
//! measured through the trace form of the regular representation, which
//! certifies a local endomorphism ring when the quotient is one-dimensional.

use super::rep::{hom_space, iso_reps, Morphism, Representation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::unipoly::{self, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One isomorphism class in a decomposition.  `end_mod_rad_dim` is the
/// dimension of End modulo nilpotents when the trace-form certificate
/// applies (it needs characteristic zero or a prime exceeding dim End);
/// a value of 1 certifies a local endomorphism ring.
#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Representation,
    pub multiplicity: usize,
    pub end_mod_rad_dim: Option<usize>,
}

/// Decompose into indecomposable summands with multiplicities.  The output
/// order and every internal choice are deterministic for a fixed seed.
pub fn decompose(m: &Representation, seed: u64) -> Result<Vec<Summand>> {
    let field = m.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = vec![m.clone()];
    let mut finals: Vec<(Representation, Option<usize>)> = vec![];
    while let Some(piece) = work.pop() {
        if piece.is_zero() {
            continue;
        }
        let endos = hom_space(&piece, &piece)?;
        if endos.len() == 1 {
            finals.push((piece, Some(1)));
            continue;
        }
        match try_split(&piece, &endos, &mut rng, seed)? {
            Some(parts) => work.extend(parts),
            None => {
                let cert = end_mod_rad_dim(&field, &endos)?;
                finals.push((piece, cert));
            }
        }
    }
    finals.sort_by_key(|(rep, _)| rep_sort_key(rep));
    let mut out: Vec<Summand> = vec![];
    for (rep, cert) in finals {
        let mut matched = false;
        for s in out.iter_mut() {
            if s.rep.dims == rep.dims && iso_reps(&s.rep, &rep, seed ^ 0x5eed)? {
                s.multiplicity += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            out.push(Summand { rep, multiplicity: 1, end_mod_rad_dim: cert });
        }
    }
    Ok(out)
}

fn rep_sort_key(rep: &Representation) -> (usize, Vec<usize>, Vec<String>) {
    let entries = rep
        .maps
        .iter()
        .flat_map(|m| {
            (0..m.rows).flat_map(move |i| (0..m.cols).map(move |j| m.get(i, j).sort_key()))
        })
        .collect();
    (rep.total_dim(), rep.dims.clone(), entries)
}

/// Try basis endomorphisms first, then seeded random combinations.  Returns
/// the pieces of the first successful Fitting split.
fn try_split(
    piece: &Representation,
    endos: &[Morphism],
    rng: &mut ChaCha8Rng,
    seed: u64,
) -> Result<Option<Vec<Representation>>> {
    let tries = 12 + 2 * endos.len();
    for attempt in 0..endos.len() + tries {
        let endo = if attempt < endos.len() {
            endos[attempt].clone()
        } else {
            random_combo(endos, rng)?
        };
        if let Some(parts) = split_along(piece, &endo, seed)? {
            return Ok(Some(parts));
        }
        if piece.field == FieldSpec::Q {
            // rational squarefree parts may hide distinct eigenvalues, so
            // probe small integer shifts with a direct Fitting split
            for lambda in [0i64, 1, -1, 2, -2, 3, -3] {
                let shift = Morphism::identity(piece).scale(&piece.field.from_i64(-lambda));
                let shifted = endo.add(&shift)?;
                if let Some(parts) = fitting_split(piece, &shifted)? {
                    return Ok(Some(parts));
                }
            }
        }
    }
    Ok(None)
}

/// Split off the eventual kernel against the eventual image of an
/// endomorphism; None when it is nilpotent or invertible.
fn fitting_split(
    piece: &Representation,
    endo: &Morphism,
) -> Result<Option<Vec<Representation>>> {
    let field = piece.field;
    let n = piece.total_dim().max(1);
    let mut kers = vec![];
    let mut ims = vec![];
    for b in &endo.blocks {
        let mut p = Matrix::identity(&field, b.rows);
        for _ in 0..n {
            p = p.mul(&field, b)?;
        }
        kers.push(cols_matrix(&field, b.rows, p.kernel_basis(&field)));
        let im_cols: Vec<Vec<Scalar>> =
            p.rref(&field).pivots.iter().map(|&c| p.column(c)).collect();
        ims.push(cols_matrix(&field, b.rows, im_cols));
    }
    let kdim: usize = kers.iter().map(|b| b.cols).sum();
    let idim: usize = ims.iter().map(|b| b.cols).sum();
    if kdim == 0 || idim == 0 {
        return Ok(None);
    }
    debug_assert_eq!(kdim + idim, piece.total_dim(), "Fitting parts fill the space");
    Ok(Some(vec![restrict_to(piece, &kers)?, restrict_to(piece, &ims)?]))
}

fn random_combo(endos: &[Morphism], rng: &mut ChaCha8Rng) -> Result<Morphism> {
    let field = endos[0].source.field;
    let mut acc = endos[0].scale(&random_scalar(&field, rng));
    for e in &endos[1..] {
        acc = acc.add(&e.scale(&random_scalar(&field, rng)))?;
    }
    Ok(acc)
}

fn random_scalar(field: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Fp(p) => field.from_i64(rng.gen_range(0..*p as i64)),
        FieldSpec::Q => field.from_i64(rng.gen_range(-9i64..10)),
    }
}

/// Split along the factor kernels of the minimal polynomial of one
/// endomorphism; None when the minimal polynomial has a single factor.
fn split_along(
    piece: &Representation,
    endo: &Morphism,
    seed: u64,
) -> Result<Option<Vec<Representation>>> {
    let field = piece.field;
    let total = block_diag(&field, &endo.blocks);
    let mp = unipoly::min_poly(&field, &total)?;
    let parts: Vec<(UniPoly, usize)> = match field {
        FieldSpec::Fp(_) => unipoly::factor(&field, &mp, seed ^ 0xfac7)?,
        FieldSpec::Q => unipoly::squarefree_decomposition(&field, &mp)?,
    };
    if parts.len() < 2 {
        return Ok(None);
    }
    let mut out = vec![];
    let mut carved = vec![0usize; piece.dims.len()];
    for (g, mult) in &parts {
        let bases = endo
            .blocks
            .iter()
            .map(|b| {
                let mut gv = g.eval_matrix(&field, b)?;
                let single = gv.clone();
                for _ in 1..*mult {
                    gv = gv.mul(&field, &single)?;
                }
                Ok(cols_matrix(&field, b.rows, gv.kernel_basis(&field)))
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = restrict_to(piece, &bases)?;
        for (v, d) in sub.dims.iter().enumerate() {
            carved[v] += d;
        }
        out.push(sub);
    }
    debug_assert_eq!(carved, piece.dims, "factor kernels fill the space");
    Ok(Some(out))
}

fn block_diag(field: &FieldSpec, blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.rows).sum();
    let mut m = Matrix::zero(field, n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows;
    }
    m
}

fn cols_matrix(field: &FieldSpec, rows: usize, cols: Vec<Vec<Scalar>>) -> Matrix {
    if cols.is_empty() {
        return Matrix::zero(field, rows, 0);
    }
    Matrix::from_columns(field, cols).expect("equal column heights")
}

/// Restrict to arrow-stable per-vertex subspaces given by basis columns.
fn restrict_to(m: &Representation, bases: &[Matrix]) -> Result<Representation> {
    let field = &m.field;
    let dims: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let maps = m
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let pushed = m.maps[k].mul(field, &bases[s])?;
            bases[t]
                .solve_matrix(field, &pushed)?
                .ok_or_else(|| Error::DimensionMismatch("subspace not arrow-stable".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(m.quiver.clone(), *field, dims, maps)
}

/// dim of End modulo its radical, via the trace form of the regular
/// representation.  None when the characteristic is too small for the
/// trace-form criterion.
fn end_mod_rad_dim(field: &FieldSpec, endos: &[Morphism]) -> Result<Option<usize>> {
    let k = endos.len();
    if let FieldSpec::Fp(p) = field {
        if (*p as usize) <= k {
            return Ok(None);
        }
    }
    // flatten each endomorphism and express products in the basis
    let flat: Vec<Vec<Scalar>> = endos.iter().map(flatten_morphism).collect();
    let basis = Matrix::from_columns(field, flat)?;
    let mut left_mult = vec![];
    for e in endos {
        let mut cols = vec![];
        for f in endos {
            let prod = e.compose(f)?;
            let coords = basis
                .solve(field, &flatten_morphism(&prod))?
                .ok_or_else(|| Error::DimensionMismatch("product escapes End".into()))?;
            cols.push(coords);
        }
        left_mult.push(Matrix::from_columns(field, cols)?);
    }
    let gram = Matrix::from_fn(field, k, k, |i, j| {
        let prod = left_mult[i].mul(field, &left_mult[j]).expect("square");
        (0..k).fold(field.zero(), |acc, l| field.add(&acc, prod.get(l, l)))
    });
    Ok(Some(k - gram.kernel_basis(field).len()))
}

fn flatten_morphism(m: &Morphism) -> Vec<Scalar> {
    m.blocks
        .iter()
        .flat_map(|b| (0..b.rows).flat_map(move |i| (0..b.cols).map(move |j| b.get(i, j).clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn field() -> FieldSpec {
        FieldSpec::default_prime()
    }

    #[test]
    fn splits_a_square_of_simples() {
        let q = Quiver::kronecker();
        let f = field();
        let s0 = Representation::simple(q, f, 0);
        let m = s0.direct_sum(&s0).unwrap();
        let dec = decompose(&m, 42).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].multiplicity, 2);
        assert_eq!(dec[0].rep.dims, vec![1, 0]);
        assert_eq!(dec[0].end_mod_rad_dim, Some(1));
    }

    #[test]
    fn projective_is_already_indecomposable() {
        let q = Quiver::kronecker();
        let f = field();
        let p0 = Representation::projective(&q, f, 0);
        let dec = decompose(&p0, 42).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].multiplicity, 1);
        assert_eq!(dec[0].end_mod_rad_dim, Some(1));
    }

    #[test]
    fn regular_rank_one_is_indecomposable() {
        let q = Quiver::kronecker();
        let f = field();
        let one = Matrix::from_rows(&f, vec![vec![f.one()]]).unwrap();
        let zero = Matrix::zero(&f, 1, 1);
        let m = Representation::new(q, f, vec![1, 1], vec![one, zero]).unwrap();
        let dec = decompose(&m, 7).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].multiplicity, 1);
        assert_eq!(dec[0].end_mod_rad_dim, Some(1));
    }

    #[test]
    fn splits_mixed_projectives() {
        let q = Quiver::kronecker();
        let f = field();
        let p0 = Representation::projective(&q, f, 0);
        let p1 = Representation::projective(&q, f, 1);
        let m = p0.direct_sum(&p1).unwrap().direct_sum(&p1).unwrap();
        let dec = decompose(&m, 11).unwrap();
        assert_eq!(dec.len(), 2);
        let total: usize = dec.iter().map(|s| s.rep.total_dim() * s.multiplicity).sum();
        assert_eq!(total, m.total_dim());
        let mults: Vec<(Vec<usize>, usize)> =
            dec.iter().map(|s| (s.rep.dims.clone(), s.multiplicity)).collect();
        assert!(mults.contains(&(vec![0, 1], 2)));
        assert!(mults.contains(&(vec![1, 2], 1)));
    }

    #[test]
    fn splits_distinct_regulars_by_eigenvalue() {
        let q = Quiver::kronecker();
        let f = field();
        let a = Matrix::identity(&f, 2);
        let b = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.zero()],
                vec![f.zero(), f.from_i64(2)],
            ],
        )
        .unwrap();
        let m = Representation::new(q, f, vec![2, 2], vec![a, b]).unwrap();
        let dec = decompose(&m, 3).unwrap();
        assert_eq!(dec.len(), 2);
        for s in &dec {
            assert_eq!(s.rep.dims, vec![1, 1]);
            assert_eq!(s.multiplicity, 1);
        }
    }

    #[test]
    fn jordan_block_regular_does_not_split() {
        let q = Quiver::kronecker();
        let f = field();
        let a = Matrix::identity(&f, 2);
        let b = Matrix::from_rows(
            &f,
            vec![vec![f.one(), f.one()], vec![f.zero(), f.one()]],
        )
        .unwrap();
        let m = Representation::new(q, f, vec![2, 2], vec![a, b]).unwrap();
        let dec = decompose(&m, 5).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].multiplicity, 1);
        assert_eq!(dec[0].rep.dims, vec![2, 2]);
        assert_eq!(dec[0].end_mod_rad_dim, Some(1));
    }

    #[test]
    fn works_over_the_rationals() {
        let q = Quiver::kronecker();
        let f = FieldSpec::Q;
        let s1 = Representation::simple(q, f, 1);
        let m = s1.direct_sum(&s1).unwrap().direct_sum(&s1).unwrap();
        let dec = decompose(&m, 19).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].multiplicity, 3);
    }
}
