//! Elementary moves on pants decompositions, move graphs and path search.

mod graph;
mod macros;
mod rewrite;
mod search;

pub use graph::{build_move_graph, MoveGraph, MoveGraphEdge, MoveGraphNode};
pub use macros::{orientify, reduce_crosscaps};
pub use rewrite::{applicable_moves, apply, Move, MoveSequence, Regrouping};
pub use search::{find_move_path, SearchOptions, DEFAULT_BUDGET};

use thiserror::Error;

use crate::pants::PantsError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move {mv} is not applicable: {reason}")]
    Inapplicable { mv: String, reason: String },
    #[error("cannot parse move literal {0:?}")]
    Parse(String),
    #[error("decompositions describe different surfaces: {0} vs {1}")]
    DifferentSurfaces(String, String),
    #[error("search budget of {0} expanded states exceeded")]
    BudgetExceeded(usize),
    #[error("decomposition is not orientable; run orientify first")]
    NotOrientable,
    #[error(transparent)]
    Pants(#[from] PantsError),
}
