//! Curve classes, the attaching maps between the spaces, and the effective
//! and nem cones of `X_{n,m}` for `m ≤ 2`.
//!
//! Cone elements are coefficient vectors in the ordered b-basis; a curve
//! class (dual coordinates) is read as the linear inequality `⟨C, ·⟩ ≥ 0`.

mod attach;
mod classes;
mod eff;
mod named;
mod nem;

use thiserror::Error;

use crate::cone::ConeError;
use crate::fixtures::FixtureError;
use crate::moduli::ModuliError;

pub use attach::{attach_pushforward, AttachKind, AttachMapSpec};
pub use classes::{curve_ck, curve_ck_star};
pub use eff::{
    boundary_cone, boundary_rays, eff_cone, eff_xn2_derivation, surface_gram, surface_nef_from_cover, surface_nef_via_gram,
    Xn2Derivation,
};
pub use named::{class_l7, counterexample_ftau, fixture_class_on, Counterexample, NamedClass};
pub use nem::{
    extremal_ray_ri, i_first_try, i_reduced, j_ineq, nem_cone, nem_full_system, nem_hrep, nem_rays_inductive,
    nem_xn1_decomposition, Decomposition, InequalitySystem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("{0}")]
    Range(String),
    #[error("{0}")]
    Refused(String),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
}

pub(crate) fn range(msg: impl Into<String>) -> CurveError {
    CurveError::Range(msg.into())
}
