//! The Kronecker backend: indecomposables are the translate orbits of the
//! two indecomposable projectives, the twist is the inverse translate, and
//! hom spaces come from the representation category.  All derived data
//! (representations, hom bases, composition and twist tables) is cached, so
//! the backend hands out stable coordinates.

use super::{CatMorphism, FormalObject, Ind, TwistedBackend};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::quiver::{hom_space, tau_minus, tau_minus_map, Morphism, Quiver, Representation};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

struct HomData {
    basis: Vec<Morphism>,
    flat: Matrix,
}

pub struct KronBackend {
    field: FieldSpec,
    quiver: Quiver,
    window: i64,
    reps: RefCell<HashMap<Ind, Rc<Representation>>>,
    homs: RefCell<HashMap<(Ind, Ind), Rc<HomData>>>,
    twists: RefCell<HashMap<(Ind, Ind), Rc<Vec<Vec<Scalar>>>>>,
    tables: RefCell<HashMap<(Ind, Ind, Ind), Rc<Vec<Vec<Vec<Scalar>>>>>>,
}

fn flatten(m: &Morphism) -> Vec<Scalar> {
    m.blocks
        .iter()
        .flat_map(|b| (0..b.rows).flat_map(move |i| (0..b.cols).map(move |j| b.get(i, j).clone())))
        .collect()
}

impl KronBackend {
    pub fn new(field: FieldSpec, window: i64) -> Result<Self> {
        if window < 0 {
            return Err(Error::BadInput("window must be nonnegative".into()));
        }
        Ok(KronBackend {
            field,
            quiver: Quiver::kronecker(),
            window,
            reps: RefCell::new(HashMap::new()),
            homs: RefCell::new(HashMap::new()),
            twists: RefCell::new(HashMap::new()),
            tables: RefCell::new(HashMap::new()),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The representation behind an index; zero for negative twists, where
    /// the inverse translate has consumed a projective.
    pub fn rep(&self, x: Ind) -> Result<Rc<Representation>> {
        if let Some(r) = self.reps.borrow().get(&x) {
            return Ok(r.clone());
        }
        let built = if x.1 < 0 {
            Representation::zero(self.quiver.clone(), self.field)
        } else if x.1 == 0 {
            Representation::projective(&self.quiver, self.field, x.0)
        } else {
            let prev = self.rep((x.0, x.1 - 1))?;
            tau_minus(&prev)?
        };
        let rc = Rc::new(built);
        self.reps.borrow_mut().insert(x, rc.clone());
        Ok(rc)
    }

    fn hom(&self, x: Ind, y: Ind) -> Result<Rc<HomData>> {
        if let Some(h) = self.homs.borrow().get(&(x, y)) {
            return Ok(h.clone());
        }
        let rx = self.rep(x)?;
        let ry = self.rep(y)?;
        let basis = if rx.is_zero() || ry.is_zero() {
            vec![]
        } else {
            hom_space(&rx, &ry)?
        };
        let flat = if basis.is_empty() {
            Matrix::zero(&self.field, rx.total_dim() * ry.total_dim(), 0)
        } else {
            Matrix::from_columns(&self.field, basis.iter().map(flatten).collect())?
        };
        let rc = Rc::new(HomData { basis, flat });
        self.homs.borrow_mut().insert((x, y), rc.clone());
        Ok(rc)
    }

    fn coordinates(&self, x: Ind, y: Ind, m: &Morphism) -> Result<Vec<Scalar>> {
        let h = self.hom(x, y)?;
        if h.basis.is_empty() {
            return Ok(vec![]);
        }
        h.flat
            .solve(&self.field, &flatten(m))?
            .ok_or_else(|| Error::DimensionMismatch("morphism outside hom space".into()))
    }

    fn table(&self, x: Ind, y: Ind, z: Ind) -> Result<Rc<Vec<Vec<Vec<Scalar>>>>> {
        if let Some(t) = self.tables.borrow().get(&(x, y, z)) {
            return Ok(t.clone());
        }
        let hyz = self.hom(y, z)?;
        let hxy = self.hom(x, y)?;
        let mut table = vec![];
        for f in hyz.basis.iter() {
            let mut row = vec![];
            for g in hxy.basis.iter() {
                row.push(self.coordinates(x, z, &f.compose(g)?)?);
            }
            table.push(row);
        }
        let rc = Rc::new(table);
        self.tables.borrow_mut().insert((x, y, z), rc.clone());
        Ok(rc)
    }

    fn twist_table(&self, x: Ind, y: Ind) -> Result<Rc<Vec<Vec<Scalar>>>> {
        if let Some(t) = self.twists.borrow().get(&(x, y)) {
            return Ok(t.clone());
        }
        let h = self.hom(x, y)?;
        let tx = (x.0, x.1 + 1);
        let ty = (y.0, y.1 + 1);
        let mut rows = vec![];
        for b in h.basis.iter() {
            let shifted = tau_minus_map(b)?;
            debug_assert_eq!(shifted.source.dims, self.rep(tx)?.dims);
            debug_assert_eq!(shifted.target.dims, self.rep(ty)?.dims);
            rows.push(self.coordinates(tx, ty, &shifted)?);
        }
        let rc = Rc::new(rows);
        self.twists.borrow_mut().insert((x, y), rc.clone());
        Ok(rc)
    }

    pub fn realize_object(&self, x: &FormalObject) -> Result<Representation> {
        let mut acc = Representation::zero(self.quiver.clone(), self.field);
        for &s in &x.summands {
            let r = self.rep(s)?;
            acc = acc.direct_sum(&r)?;
        }
        Ok(acc)
    }

    pub fn realize_morphism(&self, m: &CatMorphism) -> Result<Morphism> {
        let src = self.realize_object(&m.source)?;
        let tgt = self.realize_object(&m.target)?;
        let mut blocks = vec![];
        for v in 0..self.quiver.num_vertices() {
            let mut big = Matrix::zero(&self.field, tgt.dims[v], src.dims[v]);
            let mut roff = 0;
            for (ti, &yt) in m.target.summands.iter().enumerate() {
                let ry = self.rep(yt)?;
                let mut coff = 0;
                for (sj, &xs) in m.source.summands.iter().enumerate() {
                    let rx = self.rep(xs)?;
                    let h = self.hom(xs, yt)?;
                    for (b, c) in h.basis.iter().zip(m.blocks[ti][sj].iter()) {
                        if c.is_zero() {
                            continue;
                        }
                        let part = &b.blocks[v];
                        for i in 0..part.rows {
                            for j in 0..part.cols {
                                let add = self.field.mul(c, part.get(i, j));
                                let cur = big.get(roff + i, coff + j).clone();
                                big.set(roff + i, coff + j, self.field.add(&cur, &add));
                            }
                        }
                    }
                    coff += rx.dims[v];
                }
                roff += ry.dims[v];
            }
            blocks.push(big);
        }
        Morphism::new(src, tgt, blocks)
    }

    /// Cokernel representation of a realized morphism.
    pub fn coker_rep(&self, m: &Morphism) -> Result<Representation> {
        let field = &self.field;
        let nv = self.quiver.num_vertices();
        let mut units: Vec<Vec<usize>> = vec![];
        let mut projs: Vec<Matrix> = vec![];
        for v in 0..nv {
            let img = &m.blocks[v];
            let u = img.complete_column_span(field);
            let mut cols: Vec<Vec<Scalar>> = (0..img.cols).map(|j| img.column(j)).collect();
            for &ui in &u {
                let mut e = vec![field.zero(); img.rows];
                e[ui] = field.one();
                cols.push(e);
            }
            let proj = if img.rows == 0 || u.is_empty() {
                Matrix::zero(field, u.len(), img.rows)
            } else {
                let full = Matrix::from_columns(field, cols)?;
                let x = full
                    .solve_matrix(field, &Matrix::identity(field, img.rows))?
                    .ok_or_else(|| Error::DimensionMismatch("no spanning set".into()))?;
                Matrix::from_fn(field, u.len(), img.rows, |i, j| {
                    x.get(img.cols + i, j).clone()
                })
            };
            units.push(u);
            projs.push(proj);
        }
        let dims: Vec<usize> = units.iter().map(|u| u.len()).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let full = projs[t].mul(field, &m.target.maps[a])?;
                Ok(Matrix::from_fn(field, dims[t], dims[s], |i, j| {
                    full.get(i, units[s][j]).clone()
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.quiver.clone(), self.field, dims, maps)
    }
}

impl TwistedBackend for KronBackend {
    fn field(&self) -> FieldSpec {
        self.field
    }

    fn families(&self) -> usize {
        2
    }

    fn window(&self) -> i64 {
        self.window
    }

    /// Slice position in the directed component; vertex 1 starts the orbit.
    fn level(&self, x: Ind) -> i64 {
        2 * x.1 + (1 - x.0 as i64)
    }

    fn sigma_level_step(&self) -> i64 {
        2
    }

    fn min_twist(&self) -> Option<i64> {
        Some(0)
    }

    fn hom_dim(&self, x: Ind, y: Ind) -> Result<usize> {
        if x.1 < 0 || y.1 < 0 {
            return Ok(0);
        }
        Ok(self.hom(x, y)?.basis.len())
    }

    fn compose_basis(&self, x: Ind, y: Ind, z: Ind, f: usize, g: usize) -> Result<Vec<Scalar>> {
        Ok(self.table(x, y, z)?[f][g].clone())
    }

    fn twist_basis(&self, x: Ind, y: Ind, f: usize) -> Result<Vec<Scalar>> {
        Ok(self.twist_table(x, y)?[f].clone())
    }

    fn id_coords(&self, x: Ind) -> Result<Vec<Scalar>> {
        let r = self.rep(x)?;
        self.coordinates(x, x, &Morphism::identity(&r))
    }

    fn cat_is_epi(&self, m: &CatMorphism) -> Result<bool> {
        let mor = self.realize_morphism(m)?;
        for (v, b) in mor.blocks.iter().enumerate() {
            if b.rank(&self.field) < mor.target.dims[v] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn hom_from_coker(&self, phi: &CatMorphism, y: &FormalObject) -> Result<Option<usize>> {
        let mor = self.realize_morphism(phi)?;
        let coker = self.coker_rep(&mor)?;
        let target = self.realize_object(y)?;
        if coker.is_zero() || target.is_zero() {
            return Ok(Some(0));
        }
        Ok(Some(hom_space(&coker, &target)?.len()))
    }
}
