//! Exact computations with graded modules over polynomial rings, quiver
//! representations, and the orbit algebras that tie the two together.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] / [`matrix`]: exact scalars and dense linear algebra;
//! * [`grpoly`]: multigraded polynomial rings, free modules, Groebner bases
//!   and syzygies;
//! * [`qgr`]: finitely presented graded modules and the operations needed to
//!   work in the quotient by finite-length modules (truncation, saturation,
//!   quotient Homs);
//! * [`quiver`]: representations of finite acyclic quivers with
//!   Auslander-Reiten translates;
//! * [`orbit`]: orbit algebras of a twist functor over an abstract
//!   hom-finite source category, with backends for both worlds above;
//! * [`kronecker`]: the preprojective algebra of the Kronecker quiver, its
//!   matrix model over `K[x,y]`, and the degree-doubling comparison;
//! * [`corpus`]: deterministic example generators shared by tests and the
//!   command line tool.

pub mod error;
pub mod field;
pub mod grpoly;
pub mod corpus;
pub mod kronecker;
pub mod matrix;
pub mod orbit;
pub mod qgr;
pub mod quiver;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar, DEFAULT_PRIME};
pub use matrix::Matrix;
