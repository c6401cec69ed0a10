//! Property and command-line tests. They live in the library so they run
//! before the slower integration suite.

#[path = "../../tests/common/mod.rs"]
mod common;
