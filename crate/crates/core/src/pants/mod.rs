//! Decorated dual graphs of pants decompositions.

mod canonical;
mod decomposition;
mod enumerate;

pub use canonical::{canonical_key, CanonicalKey, KeyOptions};
pub use decomposition::{
    edge_id, parse_edge_id, standard, Builder, CurveCensus, Edge, End, Leaf, LeafKind, Occupant,
    PantsDecomposition, SlotRef,
};
pub use enumerate::{enumerate_types, EnumerationOptions, MAX_ENUMERATED_PANTS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PantsError {
    #[error("decomposition has no pants")]
    Empty,
    #[error("slot {0} refers to a pants that does not exist")]
    PantsOutOfRange(SlotRef),
    #[error("slot {0} has index outside 0..3")]
    SlotOutOfRange(SlotRef),
    #[error("slot {0} is used more than once")]
    SlotReused(SlotRef),
    #[error("slot {0} is not filled by any edge or leaf")]
    DanglingSlot(SlotRef),
    #[error("dual graph is disconnected: pants {0} is unreachable from pants 0")]
    Disconnected(usize),
    #[error("leaf label {0:?} is used more than once")]
    DuplicateLabel(String),
    #[error("leaf label {0:?} collides with internal edge ids")]
    ReservedLabel(String),
    #[error("pants count {0} is outside the supported range 1..={max}", max = MAX_ENUMERATED_PANTS)]
    PantsCountOutOfRange(usize),
    #[error("invalid decomposition JSON: {0}")]
    Json(String),
}
