//! Dehn-Thurston coordinates: integer curve-and-arc systems and real
//! measured-foliation coordinates.

mod chart;
mod components;
mod decode;
mod vector;

pub use chart::{fold, mf_chart, projectivize, ChartPoint};
pub use components::{analyze, components, Component, ComponentKind, ComponentReport, Origin};
pub use decode::{decode, encode, CrosscapPiece, CurvePiece, CurveSystem, PantsArcs};
pub use vector::{Coord, CoordinateNames, DtVector, Realizability, ScalarKind};

use thiserror::Error;

use crate::pants::PantsError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DtError {
    #[error("missing coordinate for {0}")]
    MissingCoordinate(String),
    #[error("coordinate {0} does not name a pants curve of the base")]
    UnknownCoordinate(String),
    #[error("intersection number of {0} is negative")]
    NegativeIntersection(String),
    #[error("twist of {0} is negative while its intersection number is zero")]
    NegativeTwistAtZero(String),
    #[error("coordinate {0} is not an integer")]
    NotInteger(String),
    #[error("coordinate {0} is not finite")]
    NotFinite(String),
    #[error("{0}")]
    WrongKind(&'static str),
    #[error("vector is not realizable: {0}")]
    Unrealizable(String),
    #[error("curve system is not in standard position: {0}")]
    NotStandard(String),
    #[error("the zero vector has no projective class")]
    ZeroVector,
    #[error(transparent)]
    Pants(#[from] PantsError),
}
