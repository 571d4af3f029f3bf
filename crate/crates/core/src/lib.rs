//! Numerics for the harmonic sawtooth map `w(x) = ⌊1/x⌋(x⌊1/x⌋ + x − 1)` and the Gauss map.
//!
//! Covers the component transforms (Mellin and Laplace), the truncated zeta
//! approximations built from them, the finite reflection function, root families
//! expressed through Lambert W, and the geometry of the fractal string whose lengths
//! are the areas under the map's branches.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod fractal;
pub mod maps;
pub mod quadrature;
pub mod reflection;
pub mod roots;
pub mod specfun;
pub mod transforms;

mod cmath;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// The golden ratio.
pub const PHI: f64 = 1.618_033_988_749_895;
