//! Exact and numerical invariants of the twisted Whitehead links `W_k`:
//! Riley polynomials, the A-polynomial 2-tuple, canonical components and
//! hyperbolic cone-manifold volumes.

pub mod apoly;
pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod mat2;
pub mod numeric;
pub mod polyring;
pub mod riley;
pub mod volume;

pub use error::{Error, Result};
