//! Representations of an acyclic quiver and the linear algebra of their
//! morphism spaces.

use super::{Path, Quiver};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Finite-dimensional representation: a vector space per vertex, a matrix per
/// arrow.  The matrix for an arrow a: s -> t has shape dims[t] x dims[s] and
/// acts on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub quiver: Quiver,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        quiver: Quiver,
        field: FieldSpec,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
            if maps[k].rows != dims[t] || maps[k].cols != dims[s] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {k}: expected {}x{}, got {}x{}",
                    dims[t], dims[s], maps[k].rows, maps[k].cols
                )));
            }
        }
        Ok(Representation { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Quiver, field: FieldSpec) -> Self {
        let dims = vec![0; quiver.num_vertices()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zero(&field, 0, 0)).collect();
        Representation { quiver, field, dims, maps }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// One-dimensional at `v`, zero elsewhere.
    pub fn simple(quiver: Quiver, field: FieldSpec, v: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zero(&field, dims[t], dims[s]))
            .collect();
        Representation { quiver, field, dims, maps }
    }

    /// Indecomposable projective at `v`: basis at w given by the paths v -> w,
    /// arrows acting by appending.
    pub fn projective(quiver: &Quiver, field: FieldSpec, v: usize) -> Self {
        let bases: Vec<Vec<Path>> =
            (0..quiver.num_vertices()).map(|w| quiver.paths_between(v, w)).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zero(&field, dims[t], dims[s]);
                for (j, p) in bases[s].iter().enumerate() {
                    let mut ext = p.clone();
                    ext.arrows.push(k);
                    let i = quiver.path_index(&bases[t], &ext).expect("extended path exists");
                    m.set(i, j, field.one());
                }
                m
            })
            .collect();
        Representation { quiver: quiver.clone(), field, dims, maps }
    }

    /// Indecomposable injective at `v`: dual basis at w given by the paths
    /// w -> v, arrows acting by the transpose of prepending.
    pub fn injective(quiver: &Quiver, field: FieldSpec, v: usize) -> Self {
        let bases: Vec<Vec<Path>> =
            (0..quiver.num_vertices()).map(|w| quiver.paths_between(w, v)).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                // prepend: paths t -> v give paths s -> v
                let mut pre = Matrix::zero(&field, dims[s], dims[t]);
                for (j, p) in bases[t].iter().enumerate() {
                    let mut ext = Path { source: s, arrows: vec![k] };
                    ext.arrows.extend_from_slice(&p.arrows);
                    let i = quiver.path_index(&bases[s], &ext).expect("prepended path exists");
                    pre.set(i, j, field.one());
                }
                pre.transpose(&field)
            })
            .collect();
        Representation { quiver: quiver.clone(), field, dims, maps }
    }

    /// Sum of the indecomposable projectives over all vertices, i.e. the path
    /// algebra as a module over itself.
    pub fn path_algebra_module(quiver: &Quiver, field: FieldSpec) -> Self {
        (0..quiver.num_vertices())
            .map(|v| Representation::projective(quiver, field, v))
            .reduce(|a, b| a.direct_sum(&b).expect("same quiver"))
            .expect("at least one vertex")
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.quiver != other.quiver {
            return Err(Error::DimensionMismatch("direct sum across different quivers".into()));
        }
        let dims: Vec<usize> =
            self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zero(&self.field, dims[t], dims[s]);
                for i in 0..self.dims[t] {
                    for j in 0..self.dims[s] {
                        m.set(i, j, self.maps[k].get(i, j).clone());
                    }
                }
                for i in 0..other.dims[t] {
                    for j in 0..other.dims[s] {
                        m.set(self.dims[t] + i, self.dims[s] + j, other.maps[k].get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(Representation { quiver: self.quiver.clone(), field: self.field, dims, maps })
    }

    /// Composite of the arrow matrices along a path (identity for the lazy
    /// path).
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.dims[p.source]);
        for &k in &p.arrows {
            acc = self.maps[k].mul(&self.field, &acc).expect("path shapes chain");
        }
        acc
    }
}

/// Morphism of representations: one block per vertex, commuting with the
/// arrow matrices.  Commutation is checked at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub source: Representation,
    pub target: Representation,
    pub blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Self> {
        if source.quiver != target.quiver {
            return Err(Error::DimensionMismatch("morphism across different quivers".into()));
        }
        if blocks.len() != source.quiver.num_vertices() {
            return Err(Error::DimensionMismatch("one block per vertex required".into()));
        }
        let field = &source.field;
        for (v, b) in blocks.iter().enumerate() {
            if b.rows != target.dims[v] || b.cols != source.dims[v] {
                return Err(Error::DimensionMismatch(format!(
                    "block {v}: expected {}x{}, got {}x{}",
                    target.dims[v], source.dims[v], b.rows, b.cols
                )));
            }
        }
        for (k, &(s, t)) in source.quiver.arrows().iter().enumerate() {
            let lhs = blocks[t].mul(field, &source.maps[k])?;
            let rhs = target.maps[k].mul(field, &blocks[s])?;
            if lhs != rhs {
                return Err(Error::BadInput(format!(
                    "blocks do not commute with arrow {k}"
                )));
            }
        }
        Ok(Morphism { source, target, blocks })
    }

    pub fn zero(source: Representation, target: Representation) -> Result<Self> {
        let field = source.field;
        let blocks = (0..source.quiver.num_vertices())
            .map(|v| Matrix::zero(&field, target.dims[v], source.dims[v]))
            .collect();
        Morphism::new(source, target, blocks)
    }

    pub fn identity(rep: &Representation) -> Self {
        let blocks =
            rep.dims.iter().map(|&d| Matrix::identity(&rep.field, d)).collect();
        Morphism { source: rep.clone(), target: rep.clone(), blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// self after other.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch("composition endpoints disagree".into()));
        }
        let field = &self.source.field;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.mul(field, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism {
            source: other.source.clone(),
            target: self.target.clone(),
            blocks,
        })
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch("sum endpoints disagree".into()));
        }
        let field = &self.source.field;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(field, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), blocks })
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let field = &self.source.field;
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(field, c)).collect(),
        }
    }

    pub fn is_iso(&self) -> bool {
        let field = &self.source.field;
        self.blocks
            .iter()
            .all(|b| b.rows == b.cols && b.rank(field) == b.rows)
    }
}

/// Basis of the space of morphisms M -> N, found as the kernel of the
/// commuting-square linear system (one block of equations per arrow).
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    if m.quiver != n.quiver {
        return Err(Error::DimensionMismatch("hom across different quivers".into()));
    }
    let field = &m.field;
    let q = &m.quiver;
    let nv = q.num_vertices();
    let offsets: Vec<usize> = {
        let mut acc = 0;
        let mut out = vec![];
        for v in 0..nv {
            out.push(acc);
            acc += n.dims[v] * m.dims[v];
        }
        out.push(acc);
        out
    };
    let unknowns = offsets[nv];
    let idx = |v: usize, i: usize, j: usize| offsets[v] + i * m.dims[v] + j;

    let mut rows: Vec<Vec<Scalar>> = vec![];
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        // phi_t M_a - N_a phi_s = 0, entry by entry
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![field.zero(); unknowns];
                for l in 0..m.dims[t] {
                    let c = m.maps[k].get(l, j).clone();
                    if !c.is_zero() {
                        row[idx(t, i, l)] = field.add(&row[idx(t, i, l)], &c);
                    }
                }
                for l in 0..n.dims[s] {
                    let c = field.neg(n.maps[k].get(i, l));
                    if !c.is_zero() {
                        row[idx(s, l, j)] = field.add(&row[idx(s, l, j)], &c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(field, 0, unknowns)
    } else {
        Matrix::from_rows(field, rows)?
    };
    let kernel = system.kernel_basis(field);
    kernel
        .into_iter()
        .map(|vec| {
            let blocks = (0..nv)
                .map(|v| {
                    Matrix::from_fn(field, n.dims[v], m.dims[v], |i, j| {
                        vec[idx(v, i, j)].clone()
                    })
                })
                .collect();
            Morphism::new(m.clone(), n.clone(), blocks)
        })
        .collect()
}

/// dim Ext^1(M, N) over a hereditary path algebra, by the Euler-form
/// bookkeeping of the canonical two-term projective resolution of M.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let hom = hom_space(m, n)?.len() as i64;
    let euler = m.quiver.euler_form(&m.dims, &n.dims);
    let ext = hom - euler;
    debug_assert!(ext >= 0);
    Ok(ext.max(0) as usize)
}

/// Isomorphism test: equal dimension vectors, then a search for an invertible
/// morphism among basis elements, partial sums, and seeded random
/// combinations.  A `true` answer is certified by an explicit isomorphism;
/// `false` can in principle be a miss, though not at the scales used here.
pub fn iso_reps(m: &Representation, n: &Representation, seed: u64) -> Result<bool> {
    if m.quiver != n.quiver {
        return Err(Error::DimensionMismatch("iso across different quivers".into()));
    }
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    for b in &basis {
        if b.is_iso() {
            return Ok(true);
        }
    }
    let field = &m.field;
    let mut acc = basis[0].clone();
    for b in basis.iter().skip(1) {
        acc = acc.add(b)?;
        if acc.is_iso() {
            return Ok(true);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..24 {
        let mut cand = Morphism::zero(m.clone(), n.clone())?;
        for b in &basis {
            let c = match field {
                FieldSpec::Fp(p) => field.from_i64(rng.gen_range(0..*p as i64)),
                FieldSpec::Q => field.from_i64(rng.gen_range(-20i64..21)),
            };
            cand = cand.add(&b.scale(&c))?;
        }
        if cand.is_iso() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> FieldSpec {
        FieldSpec::default_prime()
    }

    #[test]
    fn kronecker_projectives_and_injectives() {
        let q = Quiver::kronecker();
        let f = field();
        assert_eq!(Representation::projective(&q, f, 0).dims, vec![1, 2]);
        assert_eq!(Representation::projective(&q, f, 1).dims, vec![0, 1]);
        assert_eq!(Representation::injective(&q, f, 0).dims, vec![1, 0]);
        assert_eq!(Representation::injective(&q, f, 1).dims, vec![2, 1]);
    }

    #[test]
    fn simple_endomorphisms_are_scalars() {
        let q = Quiver::kronecker();
        let s = Representation::simple(q, field(), 0);
        assert_eq!(hom_space(&s, &s).unwrap().len(), 1);
    }

    #[test]
    fn no_maps_against_arrows() {
        let q = Quiver::kronecker();
        let f = field();
        let s0 = Representation::simple(q.clone(), f, 0);
        let s1 = Representation::simple(q, f, 1);
        assert_eq!(hom_space(&s1, &s0).unwrap().len(), 0);
        assert_eq!(hom_space(&s0, &s1).unwrap().len(), 0);
    }

    #[test]
    fn projective_endomorphism_ring_is_trivial() {
        let q = Quiver::kronecker();
        let p0 = Representation::projective(&q, field(), 0);
        assert_eq!(hom_space(&p0, &p0).unwrap().len(), 1);
    }

    #[test]
    fn hom_from_path_algebra_counts_total_dimension() {
        let q = Quiver::kronecker();
        let f = field();
        let lambda = Representation::path_algebra_module(&q, f);
        // M = (2, 1) with both arrow maps of rank 1
        let a = Matrix::from_rows(&f, vec![vec![f.one(), f.zero()]]).unwrap();
        let b = Matrix::from_rows(&f, vec![vec![f.zero(), f.one()]]).unwrap();
        let m = Representation::new(q, f, vec![2, 1], vec![a, b]).unwrap();
        assert_eq!(hom_space(&lambda, &m).unwrap().len(), m.total_dim());
    }

    #[test]
    fn ext_vanishes_from_projectives() {
        let q = Quiver::kronecker();
        let f = field();
        let lambda = Representation::path_algebra_module(&q, f);
        let s1 = Representation::simple(q, f, 1);
        assert_eq!(ext1_dim(&lambda, &s1).unwrap(), 0);
    }

    #[test]
    fn ext_counts_arrows_between_simples() {
        let q = Quiver::kronecker();
        let f = field();
        let s0 = Representation::simple(q.clone(), f, 0);
        let s1 = Representation::simple(q, f, 1);
        assert_eq!(ext1_dim(&s0, &s1).unwrap(), 2);
        assert_eq!(ext1_dim(&s1, &s0).unwrap(), 0);
    }

    #[test]
    fn preprojectives_are_rigid() {
        let q = Quiver::kronecker();
        let f = field();
        let p0 = Representation::projective(&q, f, 0);
        assert_eq!(ext1_dim(&p0, &p0).unwrap(), 0);
        // dim (2,3): the next preprojective after P(1) in the tau-orbit
        let a = Matrix::from_rows(
            &f,
            vec![
                vec![f.one(), f.zero()],
                vec![f.zero(), f.one()],
                vec![f.zero(), f.zero()],
            ],
        )
        .unwrap();
        let b = Matrix::from_rows(
            &f,
            vec![
                vec![f.zero(), f.zero()],
                vec![f.one(), f.zero()],
                vec![f.zero(), f.one()],
            ],
        )
        .unwrap();
        let m = Representation::new(Quiver::kronecker(), f, vec![2, 3], vec![a, b]).unwrap();
        assert_eq!(ext1_dim(&m, &m).unwrap(), 0);
    }

    #[test]
    fn direct_sum_doubles_hom() {
        let q = Quiver::kronecker();
        let f = field();
        let s0 = Representation::simple(q, f, 0);
        let ss = s0.direct_sum(&s0).unwrap();
        assert_eq!(hom_space(&ss, &ss).unwrap().len(), 4);
        assert!(iso_reps(&ss, &ss, 3).unwrap());
    }

    #[test]
    fn path_action_composes_arrows() {
        let q = Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let f = field();
        let p0 = Representation::projective(&q, f, 0);
        assert_eq!(p0.dims, vec![1, 1, 1]);
        let p = Path { source: 0, arrows: vec![0, 1] };
        let act = p0.path_action(&p);
        assert_eq!(act.rows, 1);
        assert!(act.get(0, 0).is_one());
    }

    #[test]
    fn distinct_regulars_are_not_isomorphic() {
        let q = Quiver::kronecker();
        let f = field();
        let one = Matrix::from_rows(&f, vec![vec![f.one()]]).unwrap();
        let zero = Matrix::zero(&f, 1, 1);
        let r01 =
            Representation::new(q.clone(), f, vec![1, 1], vec![one.clone(), zero.clone()])
                .unwrap();
        let r10 = Representation::new(q, f, vec![1, 1], vec![zero, one]).unwrap();
        assert!(!iso_reps(&r01, &r10, 5).unwrap());
        assert!(iso_reps(&r01, &r01, 5).unwrap());
    }
}
