//! The Auslander-Reiten translates, computed honestly as D Tr and Tr D from
//! minimal projective presentations.
//!
//! The transpose is built at the level of explicit path-algebra matrices: a
//! map between sums of indecomposable projectives is recorded by its path
//! entries, and dualising it means re-reading those paths as morphisms
//! between the opposite-quiver projectives.  Because the presentation, the
//! lifts, and the cokernel bases are all chosen by deterministic row
//! reduction, translating a composite gives exactly the composite of the
//! translates; the induced map on cokernels does not depend on the lift
//! choice at all, since two lifts differ by something that dies in the
//! cokernel.

use super::rep::{hom_space, Morphism, Representation};
use super::{Path, Quiver};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Position of an indecomposable in the Kronecker trichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrichotomyTag {
    Preprojective,
    Regular,
    Postinjective,
}

/// Sum of indecomposable projectives with its path basis remembered.
/// Basis order at each vertex: copies in order, paths in the canonical
/// order within a copy; this matches how direct_sum stacks blocks.
#[derive(Clone, Debug)]
pub(crate) struct ProjSum {
    pub verts: Vec<usize>,
    pub rep: Representation,
    pub basis: Vec<Vec<(usize, Path)>>,
}

pub(crate) fn proj_sum(quiver: &Quiver, field: FieldSpec, verts: &[usize]) -> ProjSum {
    let rep = verts
        .iter()
        .map(|&v| Representation::projective(quiver, field, v))
        .reduce(|a, b| a.direct_sum(&b).expect("same quiver"))
        .unwrap_or_else(|| Representation::zero(quiver.clone(), field));
    let basis = (0..quiver.num_vertices())
        .map(|w| {
            let mut out = vec![];
            for (i, &v) in verts.iter().enumerate() {
                for p in quiver.paths_between(v, w) {
                    out.push((i, p));
                }
            }
            out
        })
        .collect();
    ProjSum { verts: verts.to_vec(), rep, basis }
}

impl ProjSum {
    /// Index of the generator (the lazy path) of a copy within the basis at
    /// its own vertex.
    fn generator_index(&self, copy: usize) -> usize {
        let v = self.verts[copy];
        let lazy = Path { source: v, arrows: vec![] };
        self.basis[v]
            .iter()
            .position(|(c, p)| *c == copy && *p == lazy)
            .expect("generator present")
    }

    fn find(&self, vertex: usize, copy: usize, path: &Path) -> Option<usize> {
        self.basis[vertex].iter().position(|(c, p)| *c == copy && p == path)
    }
}

pub(crate) struct Presentation {
    pub p0: ProjSum,
    pub p1: ProjSum,
    pub d: Morphism,
    pub pi: Morphism,
}

/// Projective cover P0 -> M, generators lifted from a complement of the
/// radical (the joint image of all incoming arrows) at each vertex.
pub(crate) fn cover(m: &Representation) -> Result<(ProjSum, Morphism)> {
    let field = &m.field;
    let q = &m.quiver;
    let mut verts = vec![];
    let mut lifts: Vec<(usize, usize)> = vec![]; // (vertex, unit index)
    for v in 0..q.num_vertices() {
        let mut rad = Matrix::zero(field, m.dims[v], 0);
        for (k, &(_, t)) in q.arrows().iter().enumerate() {
            if t == v {
                rad = rad.hstack(field, &m.maps[k])?;
            }
        }
        for i in rad.complete_column_span(field) {
            verts.push(v);
            lifts.push((v, i));
        }
    }
    let p0 = proj_sum(q, *field, &verts);
    let blocks = (0..q.num_vertices())
        .map(|w| {
            let cols = p0.basis[w]
                .iter()
                .map(|(copy, path)| {
                    let (_, unit) = lifts[*copy];
                    m.path_action(path).column(unit)
                })
                .collect::<Vec<_>>();
            matrix_from_columns(field, m.dims[w], cols)
        })
        .collect::<Vec<_>>();
    let pi = Morphism::new(p0.rep.clone(), m.clone(), blocks)?;
    debug_assert!(pi
        .blocks
        .iter()
        .enumerate()
        .all(|(w, b)| b.rank(field) == m.dims[w]));
    Ok((p0, pi))
}

fn matrix_from_columns(field: &FieldSpec, rows: usize, cols: Vec<Vec<Scalar>>) -> Matrix {
    if cols.is_empty() {
        return Matrix::zero(field, rows, 0);
    }
    Matrix::from_columns(field, cols).expect("columns of equal height")
}

/// The kernel of a morphism as a representation, plus its inclusion.
pub(crate) fn kernel_subrep(pi: &Morphism) -> Result<(Representation, Morphism)> {
    let field = &pi.source.field;
    let q = &pi.source.quiver;
    let bases: Vec<Matrix> = pi
        .blocks
        .iter()
        .enumerate()
        .map(|(w, b)| {
            matrix_from_columns(field, pi.source.dims[w], b.kernel_basis(field))
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let pushed = pi.source.maps[k].mul(field, &bases[s])?;
            bases[t]
                .solve_matrix(field, &pushed)?
                .ok_or_else(|| Error::DimensionMismatch("kernel not arrow-stable".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(q.clone(), *field, dims, maps)?;
    let inc = Morphism::new(rep.clone(), pi.source.clone(), bases)?;
    Ok((rep, inc))
}

/// Minimal projective presentation P1 -> P0 -> M -> 0.  Minimality comes for
/// free: P0 covers the top of M, and the kernel of a cover over a hereditary
/// algebra is projective, so its own cover is an isomorphism.
pub(crate) fn presentation(m: &Representation) -> Result<Presentation> {
    let (p0, pi) = cover(m)?;
    let (kernel, inc) = kernel_subrep(&pi)?;
    let (p1, pik) = cover(&kernel)?;
    let d = inc.compose(&pik)?;
    Ok(Presentation { p0, p1, d, pi })
}

/// Path-algebra entries of f: A -> B between projective sums.
/// entries[i][j] is the combination of paths tgt.verts[i] -> src.verts[j]
/// expressing the component P(src.verts[j]) -> P(tgt.verts[i]).
fn path_entries(
    f: &Morphism,
    src: &ProjSum,
    tgt: &ProjSum,
) -> Vec<Vec<Vec<(Path, Scalar)>>> {
    let mut entries = vec![vec![vec![]; src.verts.len()]; tgt.verts.len()];
    for (j, &u) in src.verts.iter().enumerate() {
        let gen = src.generator_index(j);
        let col = f.blocks[u].column(gen);
        for (pos, c) in col.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, q) = tgt.basis[u][pos].clone();
            entries[i][j].push((q, c));
        }
    }
    entries
}

fn q_path_reversed(quiver: &Quiver, p: &Path) -> Path {
    Path {
        source: quiver.path_target(p),
        arrows: p.arrows.iter().rev().cloned().collect(),
    }
}

/// Dualise f: A -> B into a morphism B* -> A* between the corresponding
/// opposite-quiver projective sums: composition with the path entries of f.
pub(crate) fn dual_of_proj_map(
    quiver: &Quiver,
    field: FieldSpec,
    src: &ProjSum,
    tgt: &ProjSum,
    f: &Morphism,
) -> Result<(ProjSum, ProjSum, Morphism)> {
    let op = quiver.opposite();
    let tgt_star = proj_sum(&op, field, &tgt.verts);
    let src_star = proj_sum(&op, field, &src.verts);
    let entries = path_entries(f, src, tgt);
    let blocks = (0..op.num_vertices())
        .map(|w| {
            let mut m = Matrix::zero(&field, src_star.basis[w].len(), tgt_star.basis[w].len());
            for (col, (i, op_path)) in tgt_star.basis[w].iter().enumerate() {
                // op_path: tgt.verts[i] -> w in the opposite quiver; as a
                // path of the original quiver it runs w -> tgt.verts[i]
                let p = q_path_reversed(&op, op_path);
                for (j, combo) in entries[*i].iter().enumerate() {
                    for (q, c) in combo {
                        // concatenate w -> v_i -> u_j in the original quiver
                        let mut cat = p.clone();
                        cat.arrows.extend_from_slice(&q.arrows);
                        let op_cat = q_path_reversed(quiver, &cat);
                        let row = src_star
                            .find(w, j, &op_cat)
                            .expect("concatenated path present in dual basis");
                        let old = m.get(row, col).clone();
                        m.set(row, col, field.add(&old, c));
                    }
                }
            }
            m
        })
        .collect::<Vec<_>>();
    let delta = Morphism::new(tgt_star.rep.clone(), src_star.rep.clone(), blocks)?;
    Ok((tgt_star, src_star, delta))
}

/// Everything the transpose computation produces: the presentation, its
/// dual, and the cokernel bookkeeping (representative unit vectors and the
/// projection onto them) at each vertex.
pub(crate) struct TrData {
    pub pres: Presentation,
    pub p1_star: ProjSum,
    pub delta: Morphism,
    pub units: Vec<Vec<usize>>,
    pub proj: Vec<Matrix>,
    pub tr: Representation,
}

fn row_slice(field: &FieldSpec, m: &Matrix, from: usize, count: usize) -> Matrix {
    Matrix::from_fn(field, count, m.cols, |i, j| m.get(from + i, j).clone())
}

fn unit_columns(field: &FieldSpec, ambient: usize, units: &[usize]) -> Matrix {
    let mut m = Matrix::zero(field, ambient, units.len());
    for (j, &i) in units.iter().enumerate() {
        m.set(i, j, field.one());
    }
    m
}

pub(crate) fn tr_data(m: &Representation) -> Result<TrData> {
    let field = m.field;
    let pres = presentation(m)?;
    let (_, p1_star, delta) =
        dual_of_proj_map(&m.quiver, field, &pres.p1, &pres.p0, &pres.d)?;
    let op = m.quiver.opposite();
    let mut units = vec![];
    let mut proj = vec![];
    for w in 0..op.num_vertices() {
        let span = &delta.blocks[w];
        let u = span.complete_column_span(&field);
        let ambient = span.rows;
        let stacked = span.hstack(&field, &unit_columns(&field, ambient, &u))?;
        let solved = stacked
            .solve_matrix(&field, &Matrix::identity(&field, ambient))?
            .expect("span plus units cover the ambient space");
        proj.push(row_slice(&field, &solved, span.cols, u.len()));
        units.push(u);
    }
    let dims: Vec<usize> = units.iter().map(|u| u.len()).collect();
    let maps = op
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let incl = unit_columns(&field, p1_star.rep.dims[s], &units[s]);
            proj[t].mul(&field, &p1_star.rep.maps[k].mul(&field, &incl)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let tr = Representation::new(op, field, dims, maps)?;
    Ok(TrData { pres, p1_star, delta, units, proj, tr })
}

/// Vector-space dual: same dimensions over the opposite quiver, arrow
/// matrices transposed.
pub fn dualize(m: &Representation) -> Representation {
    let maps = m.maps.iter().map(|a| a.transpose(&m.field)).collect();
    Representation {
        quiver: m.quiver.opposite(),
        field: m.field,
        dims: m.dims.clone(),
        maps,
    }
}

pub fn dualize_map(phi: &Morphism) -> Result<Morphism> {
    let field = &phi.source.field;
    let blocks = phi.blocks.iter().map(|b| b.transpose(field)).collect();
    Morphism::new(dualize(&phi.target), dualize(&phi.source), blocks)
}

/// Index of a vertex whose indecomposable projective splits off M, found by
/// the trace pairing Hom(M, P) x Hom(P, M) -> End(P) = K.
pub fn projective_summand(m: &Representation) -> Result<Option<usize>> {
    let field = &m.field;
    for v in 0..m.quiver.num_vertices() {
        let p = Representation::projective(&m.quiver, *field, v);
        let into = hom_space(&p, m)?;
        let back = hom_space(m, &p)?;
        for g in &back {
            for f in &into {
                let comp = g.compose(f)?;
                if !comp.blocks[v].get(0, 0).is_zero() {
                    return Ok(Some(v));
                }
            }
        }
    }
    Ok(None)
}

/// Same pairing test against the indecomposable injectives.
pub fn injective_summand(m: &Representation) -> Result<Option<usize>> {
    let field = &m.field;
    for v in 0..m.quiver.num_vertices() {
        let i = Representation::injective(&m.quiver, *field, v);
        let onto = hom_space(m, &i)?;
        let sect = hom_space(&i, m)?;
        for p in &onto {
            for s in &sect {
                let comp = p.compose(s)?;
                if !comp.blocks[v].get(0, 0).is_zero() {
                    return Ok(Some(v));
                }
            }
        }
    }
    Ok(None)
}

/// Inverse AR translate Tr D.  Errors when an injective summand is present,
/// naming it.
pub fn tau_minus(m: &Representation) -> Result<Representation> {
    if let Some(v) = injective_summand(m)? {
        return Err(Error::InjectiveSummand(format!("I({v})")));
    }
    Ok(tr_data(&dualize(m))?.tr)
}

/// AR translate D Tr.  Errors when a projective summand is present.
pub fn tau_plus(m: &Representation) -> Result<Representation> {
    if let Some(v) = projective_summand(m)? {
        return Err(Error::ProjectiveSummand(format!("P({v})")));
    }
    Ok(dualize(&tr_data(m)?.tr))
}

/// Lift psi: U -> V through the covers of both presentations, one generator
/// at a time.
fn lift_through_covers(
    psi: &Morphism,
    pres_u: &Presentation,
    pres_v: &Presentation,
) -> Result<(Morphism, Morphism)> {
    let field = &psi.source.field;
    // psi0: P0(U) -> P0(V) with pi_V psi0 = psi pi_U
    let mut gen_images0 = vec![];
    for (copy, &v) in pres_u.p0.verts.iter().enumerate() {
        let gen = pres_u.p0.generator_index(copy);
        let below = psi.blocks[v].mul_vec(field, &pres_u.pi.blocks[v].column(gen))?;
        let x = pres_v.pi.blocks[v]
            .solve(field, &below)?
            .ok_or_else(|| Error::DimensionMismatch("cover is not surjective".into()))?;
        gen_images0.push((v, x));
    }
    let psi0 = extend_to_paths(&pres_u.p0, &pres_v.p0.rep, &gen_images0)?;
    // psi1: P1(U) -> P1(V) with d_V psi1 = psi0 d_U
    let mut gen_images1 = vec![];
    for (copy, &v) in pres_u.p1.verts.iter().enumerate() {
        let gen = pres_u.p1.generator_index(copy);
        let pushed = psi0.blocks[v].mul_vec(field, &pres_u.d.blocks[v].column(gen))?;
        let x = pres_v.d.blocks[v]
            .solve(field, &pushed)?
            .ok_or_else(|| Error::DimensionMismatch("image escapes the syzygy".into()))?;
        gen_images1.push((v, x));
    }
    let psi1 = extend_to_paths(&pres_u.p1, &pres_v.p1.rep, &gen_images1)?;
    Ok((psi0, psi1))
}

/// A morphism out of a projective sum is determined by the generator images;
/// spread them along the path bases.
fn extend_to_paths(
    src: &ProjSum,
    target: &Representation,
    gen_images: &[(usize, Vec<Scalar>)],
) -> Result<Morphism> {
    let field = &target.field;
    let blocks = (0..target.quiver.num_vertices())
        .map(|w| {
            let cols = src.basis[w]
                .iter()
                .map(|(copy, path)| {
                    let (_, x) = &gen_images[*copy];
                    target.path_action(path).mul_vec(field, x).expect("path shapes chain")
                })
                .collect::<Vec<_>>();
            matrix_from_columns(field, target.dims[w], cols)
        })
        .collect();
    Morphism::new(src.rep.clone(), target.clone(), blocks)
}

/// Transpose of a morphism psi: U -> V, as the induced map Tr V -> Tr U.
pub(crate) fn tr_morphism(psi: &Morphism) -> Result<Morphism> {
    let field = psi.source.field;
    let td_u = tr_data(&psi.source)?;
    let td_v = tr_data(&psi.target)?;
    let (_, psi1) = lift_through_covers(psi, &td_u.pres, &td_v.pres)?;
    let (_, _, dpsi1) =
        dual_of_proj_map(&psi.source.quiver, field, &td_u.pres.p1, &td_v.pres.p1, &psi1)?;
    // dpsi1: P1(V)* -> P1(U)*; squeeze it between the cokernel data
    let op = psi.source.quiver.opposite();
    let blocks = (0..op.num_vertices())
        .map(|w| {
            let incl = unit_columns(&field, td_v.p1_star.rep.dims[w], &td_v.units[w]);
            td_u.proj[w].mul(&field, &dpsi1.blocks[w].mul(&field, &incl)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(td_v.tr.clone(), td_u.tr.clone(), blocks)
}

/// Inverse AR translate on morphisms: Tr applied to the dual.  Well-defined
/// on the nose for the directed families this artifact composes, and checked
/// against composition in the tests.
pub fn tau_minus_map(phi: &Morphism) -> Result<Morphism> {
    for rep in [&phi.source, &phi.target] {
        if let Some(v) = injective_summand(rep)? {
            return Err(Error::InjectiveSummand(format!("I({v})")));
        }
    }
    tr_morphism(&dualize_map(phi)?)
}

/// Defect-sign trichotomy for Kronecker representations.  The caller is
/// expected to pass an indecomposable.
pub fn classify_kronecker(m: &Representation) -> Result<TrichotomyTag> {
    if !m.quiver.is_kronecker() {
        return Err(Error::NotKronecker);
    }
    let delta = m.dims[1] as i64 - m.dims[0] as i64;
    Ok(match delta.signum() {
        1 => TrichotomyTag::Preprojective,
        0 => TrichotomyTag::Regular,
        _ => TrichotomyTag::Postinjective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> FieldSpec {
        FieldSpec::default_prime()
    }

    fn kronecker_regular(lambda: i64, mu: i64) -> Representation {
        let f = field();
        let a = Matrix::from_rows(&f, vec![vec![f.from_i64(lambda)]]).unwrap();
        let b = Matrix::from_rows(&f, vec![vec![f.from_i64(mu)]]).unwrap();
        Representation::new(Quiver::kronecker(), f, vec![1, 1], vec![a, b]).unwrap()
    }

    #[test]
    fn tau_minus_orbit_of_both_projectives() {
        let q = Quiver::kronecker();
        let f = field();
        let mut p1 = Representation::projective(&q, f, 1);
        let mut p0 = Representation::projective(&q, f, 0);
        for n in 1..=5usize {
            p1 = tau_minus(&p1).unwrap();
            p0 = tau_minus(&p0).unwrap();
            assert_eq!(p1.dims, vec![2 * n, 2 * n + 1]);
            assert_eq!(p0.dims, vec![2 * n + 1, 2 * n + 2]);
        }
    }

    #[test]
    fn tau_minus_matches_coxeter_arithmetic() {
        let q = Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let f = field();
        let cox = q.coxeter_inverse();
        // the simple at the sink is projective and not injective
        let s2 = Representation::simple(q.clone(), f, 2);
        let t = tau_minus(&s2).unwrap();
        let expect: Vec<i64> = (0..3)
            .map(|i| (0..3).map(|j| cox[i][j] * s2.dims[j] as i64).sum())
            .collect();
        assert_eq!(t.dims.iter().map(|&d| d as i64).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn regular_representations_stay_regular() {
        let m = kronecker_regular(1, 0);
        let t = tau_minus(&m).unwrap();
        assert_eq!(t.dims, vec![1, 1]);
        assert!(iso_round_trip(&m));
    }

    fn iso_round_trip(m: &Representation) -> bool {
        let t = tau_minus(m).unwrap();
        let back = tau_plus(&t).unwrap();
        super::super::rep::iso_reps(m, &back, 17).unwrap()
    }

    #[test]
    fn round_trip_on_preprojectives() {
        let q = Quiver::kronecker();
        let f = field();
        let p0 = Representation::projective(&q, f, 0);
        let m = tau_minus(&p0).unwrap();
        assert!(iso_round_trip(&m));
    }

    #[test]
    fn translate_refuses_injective_summands() {
        let q = Quiver::kronecker();
        let f = field();
        let i0 = Representation::injective(&q, f, 0);
        match tau_minus(&i0) {
            Err(Error::InjectiveSummand(s)) => assert_eq!(s, "I(0)"),
            other => panic!("expected injective summand error, got {other:?}"),
        }
        let mixed = i0.direct_sum(&kronecker_regular(1, 1)).unwrap();
        assert!(matches!(tau_minus(&mixed), Err(Error::InjectiveSummand(_))));
    }

    #[test]
    fn translate_refuses_projective_summands() {
        let q = Quiver::kronecker();
        let f = field();
        let p0 = Representation::projective(&q, f, 0);
        match tau_plus(&p0) {
            Err(Error::ProjectiveSummand(s)) => assert_eq!(s, "P(0)"),
            other => panic!("expected projective summand error, got {other:?}"),
        }
    }

    #[test]
    fn tau_minus_is_functorial_on_morphisms() {
        let q = Quiver::kronecker();
        let f = field();
        let p1 = Representation::projective(&q, f, 1);
        let p0 = Representation::projective(&q, f, 0);
        let t1 = tau_minus(&p1).unwrap();
        let fs = hom_space(&p1, &p0).unwrap();
        let gs = hom_space(&p0, &t1).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(!gs.is_empty());
        for g in &gs {
            for ff in &fs {
                let comp = g.compose(ff).unwrap();
                let lhs = tau_minus_map(&comp).unwrap();
                let rhs = tau_minus_map(g).unwrap().compose(&tau_minus_map(ff).unwrap()).unwrap();
                assert_eq!(lhs.blocks, rhs.blocks);
            }
        }
    }

    #[test]
    fn tau_minus_map_is_linear_and_respects_identity() {
        let q = Quiver::kronecker();
        let f = field();
        let p1 = Representation::projective(&q, f, 1);
        let p0 = Representation::projective(&q, f, 0);
        let fs = hom_space(&p1, &p0).unwrap();
        let id = Morphism::identity(&p0);
        let tid = tau_minus_map(&id).unwrap();
        assert!(tid.is_iso());
        assert_eq!(tid.blocks, Morphism::identity(&tau_minus(&p0).unwrap()).blocks);
        let sum = fs[0].add(&fs[1]).unwrap();
        let lhs = tau_minus_map(&sum).unwrap();
        let rhs = tau_minus_map(&fs[0]).unwrap().add(&tau_minus_map(&fs[1]).unwrap()).unwrap();
        assert_eq!(lhs.blocks, rhs.blocks);
    }

    #[test]
    fn serre_duality_dimensions_on_samples() {
        let q = Quiver::kronecker();
        let f = field();
        // X regular, Y = P(0): dim Ext1(X, Y) = dim Hom(Y, tau X)
        let x = kronecker_regular(1, 1);
        let y = Representation::projective(&q, f, 0);
        let ext = super::super::rep::ext1_dim(&x, &y).unwrap();
        let tx = tau_plus(&x).unwrap();
        let hom = hom_space(&y, &tx).unwrap().len();
        assert_eq!(ext, hom);
        assert!(ext > 0);
    }

    #[test]
    fn classify_kronecker_by_defect() {
        let q = Quiver::kronecker();
        let f = field();
        let p1 = Representation::projective(&q, f, 1);
        let i0 = Representation::injective(&q, f, 0);
        assert_eq!(classify_kronecker(&p1).unwrap(), TrichotomyTag::Preprojective);
        assert_eq!(classify_kronecker(&i0).unwrap(), TrichotomyTag::Postinjective);
        assert_eq!(
            classify_kronecker(&kronecker_regular(2, 3)).unwrap(),
            TrichotomyTag::Regular
        );
        let a3 = Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let s = Representation::simple(a3, f, 0);
        assert!(matches!(classify_kronecker(&s), Err(Error::NotKronecker)));
    }

    #[test]
    fn presentation_is_minimal_for_a_simple() {
        let q = Quiver::kronecker();
        let f = field();
        let s0 = Representation::simple(q, f, 0);
        let pres = presentation(&s0).unwrap();
        assert_eq!(pres.p0.verts, vec![0]);
        assert_eq!(pres.p1.verts, vec![1, 1]);
    }
}
