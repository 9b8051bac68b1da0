//! Input file formats.  Everything the tool reads is JSON; polynomials
//! arrive as explicit term lists, never as strings to parse.  The shapes
//! are documented with examples in SCHEMAS.md at the repository root.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use serreq::field::FieldSpec;
use serreq::grpoly::{FreeElem, GradedFree, Monomial, PolyRing, Term};
use serreq::matrix::Matrix;
use serreq::orbit::{GradedAlgebraWithBasis, KronBackend, QgrBackend, TwistedBackend};
use serreq::qgr::FpModule;
use serreq::quiver::{Quiver, Representation};
use serreq::Scalar;

/// Usage errors (bad flags, unreadable or malformed input) exit with 64;
/// failures found while executing a well-formed request exit with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

pub type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: String) -> CliResult<T> {
    Err(CliError::Usage(msg))
}

/// Reads and deserializes one JSON file, reporting the location of any
/// syntax or shape problem.
pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    match serde_json::from_str(&text) {
        Ok(v) => Ok(v),
        Err(e) => usage(format!("{}: {e}", path.display())),
    }
}

/// One term of a relation: `coeff * x^exponents * e_component`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub component: usize,
    pub exponents: Vec<u16>,
    pub coeff: i64,
}

/// A finitely presented graded module.  `shifts` lists the twist of each
/// free generator, so generator `c` sits in degree `-shifts[c]`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub vars: usize,
    pub shifts: Vec<i64>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
}

impl ModuleSpec {
    pub fn build(&self, field: FieldSpec) -> CliResult<FpModule> {
        if self.vars == 0 {
            return usage("module: need at least one variable".into());
        }
        let ring = PolyRing { field, num_vars: self.vars };
        let f0 = GradedFree::new(ring, self.shifts.clone());
        let mut relations = vec![];
        for (i, terms) in self.relations.iter().enumerate() {
            let mut rel = FreeElem::zero();
            for t in terms {
                if t.component >= f0.rank() {
                    return usage(format!(
                        "relation {i}: component {} out of range for rank {}",
                        t.component,
                        f0.rank()
                    ));
                }
                if t.exponents.len() != self.vars {
                    return usage(format!(
                        "relation {i}: {} exponents for {} variables",
                        t.exponents.len(),
                        self.vars
                    ));
                }
                let term = Term {
                    component: t.component,
                    monomial: Monomial::from_exponents(t.exponents.clone()),
                };
                rel.add_term(&field, term, field.from_i64(t.coeff));
            }
            if !rel.is_zero() {
                relations.push(rel);
            }
        }
        FpModule::new(f0, relations).map_err(|e| CliError::Usage(format!("module: {e}")))
    }
}

/// A quiver representation: explicit arrow list and one row-major integer
/// matrix per arrow, shaped `dims[target] x dims[source]`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<i64>>>,
}

impl RepSpec {
    pub fn build(&self, field: FieldSpec) -> CliResult<Representation> {
        let quiver = Quiver::new(self.vertices, self.arrows.clone())
            .map_err(|e| CliError::Usage(format!("rep: {e}")))?;
        if self.maps.len() != self.arrows.len() {
            return usage(format!(
                "rep: {} matrices for {} arrows",
                self.maps.len(),
                self.arrows.len()
            ));
        }
        let mut maps = vec![];
        for (k, raw) in self.maps.iter().enumerate() {
            let (s, t) = self.arrows[k];
            if s >= self.dims.len() || t >= self.dims.len() {
                return usage(format!("rep: arrow {k} touches a missing vertex"));
            }
            let (rows, cols) = (self.dims[t], self.dims[s]);
            if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
                return usage(format!("rep: matrix {k} is not {rows}x{cols}"));
            }
            maps.push(Matrix::from_fn(&field, rows, cols, |i, j| field.from_i64(raw[i][j])));
        }
        Representation::new(quiver, field, self.dims.clone(), maps)
            .map_err(|e| CliError::Usage(format!("rep: {e}")))
    }
}

/// A twisted triple (C, sigma) presented by its backend.
#[derive(Deserialize)]
#[serde(tag = "backend", rename_all = "lowercase", deny_unknown_fields)]
pub enum TripleSpec {
    /// Projective r-space with C the sum of the listed twists and sigma
    /// the twist by `step`.
    Qgr { r: usize, summands: Vec<i64>, step: i64, window: i64 },
    /// The Kronecker path algebra with C = Lambda and sigma the inverse
    /// translate.
    Kronecker { window: i64 },
}

impl TripleSpec {
    pub fn build(&self, field: FieldSpec) -> CliResult<Box<dyn TwistedBackend>> {
        match self {
            TripleSpec::Qgr { r, summands, step, window } => {
                QgrBackend::new(field, *r, summands.clone(), *step, *window)
                    .map(|b| Box::new(b) as Box<dyn TwistedBackend>)
                    .map_err(|e| CliError::Usage(format!("triple: {e}")))
            }
            TripleSpec::Kronecker { window } => KronBackend::new(field, *window)
                .map(|b| Box::new(b) as Box<dyn TwistedBackend>)
                .map_err(|e| CliError::Usage(format!("triple: {e}"))),
        }
    }

}

/// A graded algebra by structure constants.  `mult[p][q][i][j]` lists the
/// coordinates of `e_i e_j` in degree `p+q`; `block_dims` may be omitted
/// for a single-family algebra.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub block_dims: Option<Vec<Vec<Vec<usize>>>>,
    pub mult: Vec<Vec<Vec<Vec<Vec<i64>>>>>,
    pub unit: Vec<i64>,
}

impl AlgebraSpec {
    pub fn build(&self, field: FieldSpec) -> CliResult<GradedAlgebraWithBasis> {
        let block_dims = self
            .block_dims
            .clone()
            .unwrap_or_else(|| self.dims.iter().map(|&d| vec![vec![d]]).collect());
        let scal = |v: &Vec<Vec<Vec<Vec<i64>>>>| -> Vec<Vec<Vec<Vec<Scalar>>>> {
            v.iter()
                .map(|q| {
                    q.iter()
                        .map(|r| {
                            r.iter()
                                .map(|w| w.iter().map(|&c| field.from_i64(c)).collect())
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        let mult = self.mult.iter().map(scal).collect();
        let unit = self.unit.iter().map(|&c| field.from_i64(c)).collect();
        GradedAlgebraWithBasis::from_parts(field, self.dims.clone(), block_dims, mult, unit)
            .map_err(|e| CliError::Usage(format!("algebra: {e}")))
    }
}
