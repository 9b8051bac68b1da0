//! The graded-module model of coherent sheaves on projective space:
//! finitely presented modules, truncation, saturation, the canonical-map
//! defect, and Homs in the quotient category by finite-length modules.

pub mod hom;
pub mod module;
pub mod saturate;

pub use hom::{is_effaceable, is_effaceable_map, is_epi_in_quotient, qgr_hom, QgrHom};
pub use module::{
    hom0, is_automorphism, iso_check, subquotient, truncate, FpModule, IsoOutcome,
    ModuleMap,
};
pub use saturate::{canonical_defect, saturate, Saturation};
