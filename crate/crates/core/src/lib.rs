//! Pants decompositions of possibly non-orientable surfaces.

#[cfg(test)]
extern crate self as nonorientable;

pub mod cli;
pub mod dt;
pub mod hyperbolic;
pub mod klein;
pub mod moves;
pub mod pants;
pub mod surface;

pub use surface::{Invariants, Surface, SurfaceError};

#[cfg(test)]
mod tests;
