//! Generalized Fenchel-Nielsen coordinates: pants built from right-angled
//! hexagons, holonomy with orientation-reversing elements, curve lengths.

mod hexagon;
mod holonomy;
mod isometry;
mod ops;
mod point;

pub use hexagon::{hexagon_residual, hexagon_seams, PantsBlock};
pub use holonomy::{length_spectrum, standard_probes, Holonomy, Probe, Word, MAX_HOLONOMY_PANTS};
pub use isometry::{curve_length, distance, length_from_trace, Isometry};
pub use ops::{twist_flow_asymptotics, y_action, Jacobian, TwistFit, YSite};
pub use point::FnPoint;

use thiserror::Error;

use crate::pants::PantsError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HyperbolicError {
    #[error("{0}")]
    Domain(String),
    #[error("not a geodesic class (|trace| = {0} < 2)")]
    Elliptic(f64),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("site mismatch: {0}")]
    Site(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Pants(#[from] PantsError),
}
