//! Finite acyclic quivers and their finite-dimensional representations.
//!
//! A quiver here is a plain directed multigraph on vertices `0..n`.  Acyclicity
//! is enforced at construction: it makes the path algebra finite-dimensional
//! and hereditary, which everything downstream (projectives enumerated by
//! paths, two-step resolutions, the AR translates) relies on.

mod decompose;
mod rep;
mod translate;

pub use decompose::{decompose, Summand};
pub use rep::{ext1_dim, hom_space, iso_reps, Morphism, Representation};
pub use translate::{classify_kronecker, tau_minus, tau_minus_map, tau_plus, TrichotomyTag};

use crate::error::{Error, Result};

/// Directed multigraph on vertices `0..num_vertices`, no oriented cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    num_vertices: usize,
    arrows: Vec<(usize, usize)>,
}

/// A path is stored as the sequence of arrow indices walked, source first.
/// The empty sequence is the lazy path at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    pub fn new(num_vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            if s >= num_vertices || t >= num_vertices {
                return Err(Error::BadInput(format!(
                    "arrow ({s}, {t}) out of range for {num_vertices} vertices"
                )));
            }
        }
        let q = Quiver { num_vertices, arrows };
        if q.topological_order().is_none() {
            return Err(Error::NotAcyclic);
        }
        Ok(q)
    }

    /// Two vertices, two parallel arrows 0 -> 1.
    pub fn kronecker() -> Self {
        Quiver::new(2, vec![(0, 1), (0, 1)]).expect("kronecker quiver is acyclic")
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_kronecker(&self) -> bool {
        self.num_vertices == 2 && self.arrows == [(0, 1), (0, 1)]
    }

    /// Same arrow indices, directions reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            num_vertices: self.num_vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.num_vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: Vec<usize> = (0..self.num_vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = vec![];
        while let Some(v) = queue.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push(t);
                    }
                }
            }
        }
        (order.len() == self.num_vertices).then_some(order)
    }

    /// All paths from `v` to `w`, sorted by length then by arrow sequence.
    /// Finite because the quiver is acyclic.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<Path> {
        let mut done = vec![];
        let mut stack = vec![Path { source: v, arrows: vec![] }];
        while let Some(p) = stack.pop() {
            let end = self.path_target(&p);
            if end == w {
                done.push(p.clone());
            }
            for (k, &(s, _)) in self.arrows.iter().enumerate() {
                if s == end {
                    let mut ext = p.clone();
                    ext.arrows.push(k);
                    stack.push(ext);
                }
            }
        }
        done.sort_by(|a, b| (a.arrows.len(), &a.arrows).cmp(&(b.arrows.len(), &b.arrows)));
        done
    }

    pub fn path_target(&self, p: &Path) -> usize {
        p.arrows.iter().fold(p.source, |_, &k| self.arrows[k].1)
    }

    /// Index of `p` in `paths_between(p.source, target)`, if present.
    pub fn path_index(&self, paths: &[Path], p: &Path) -> Option<usize> {
        paths.iter().position(|q| q == p)
    }

    /// Euler matrix E = I - N where N counts arrows v -> w; the Euler form is
    /// <d, e> = d^T E e = sum d_v e_v - sum over arrows d_s e_t.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices;
        let mut e = vec![vec![0i64; n]; n];
        for (v, row) in e.iter_mut().enumerate() {
            row[v] = 1;
        }
        for &(s, t) in &self.arrows {
            e[s][t] -= 1;
        }
        e
    }

    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> i64 {
        let m = self.euler_matrix();
        let mut acc = 0i64;
        for v in 0..self.num_vertices {
            for w in 0..self.num_vertices {
                acc += d[v] as i64 * m[v][w] * e[w] as i64;
            }
        }
        acc
    }

    /// Inverse Coxeter matrix, acting on dimension column vectors so that
    /// dim of the inverse AR translate of M equals this matrix times dim M
    /// whenever M is indecomposable and not injective.
    pub fn coxeter_inverse(&self) -> Vec<Vec<i64>> {
        let e = self.euler_matrix();
        let einv = unipotent_inverse(&e);
        // -(E^{-1})^T E
        let n = self.num_vertices;
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i64;
                for (k, erow) in e.iter().enumerate() {
                    acc += einv[k][i] * erow[j];
                }
                out[i][j] = -acc;
            }
        }
        out
    }

    /// Coxeter matrix, the inverse of `coxeter_inverse`.
    pub fn coxeter(&self) -> Vec<Vec<i64>> {
        let e = self.euler_matrix();
        let einv = unipotent_inverse(&e);
        // -E^{-1} E^T
        let n = self.num_vertices;
        let mut out = vec![vec![0i64; n]; n];
        for (i, irow) in einv.iter().enumerate() {
            for (j, erow) in e.iter().enumerate() {
                let mut acc = 0i64;
                for (k, x) in irow.iter().enumerate() {
                    acc += x * erow[k];
                }
                out[i][j] = -acc;
            }
        }
        out
    }
}

/// Inverse of I - N with N nilpotent, via the geometric series.
fn unipotent_inverse(e: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = e.len();
    let mut nil = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            nil[i][j] = if i == j { 1 - e[i][j] } else { -e[i][j] };
        }
    }
    let mut inv = vec![vec![0i64; n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut power = nil.clone();
    for _ in 0..n {
        let mut vanished = true;
        for i in 0..n {
            for j in 0..n {
                if power[i][j] != 0 {
                    vanished = false;
                }
                inv[i][j] += power[i][j];
            }
        }
        if vanished {
            break;
        }
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for (k, nrow) in nil.iter().enumerate() {
                    acc += power[i][k] * nrow[j];
                }
                next[i][j] = acc;
            }
        }
        power = next;
    }
    // the loop added nil^1 .. nil^n on top of I, one step too many is harmless
    // because nil^n = 0 for an acyclic quiver
    inv
}
