//! Exact discriminants, Bezoutians and real-root certification for the
//! quadrinomial family `xⁿ + t(x² + ax + b)`.
//!
//! Everything is computed over ℚ, ℚ[t] or ℚ(t); nothing is approximated.

pub mod bezoutian;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod params;
pub mod real_roots;
pub mod verify;

pub use error::{Error, Result};
pub use params::QuadrinomialParams;
