//! Exact combinatorics of operator monoids on three infinite partial orders:
//! the Young lattice, the r-Bruhat order on finitely supported permutations,
//! and the 0-Bruhat and weak orders on the k-affine symmetric group. Saturated
//! chains in an interval carry label words whose descent compositions assemble
//! into a quasisymmetric interval function; this crate enumerates the chains,
//! builds the interval functions, and converts them among the monomial,
//! fundamental and Schur bases over the integers.

pub mod affine;
pub mod error;
pub mod expansion;
pub mod partition;
pub mod perm;
pub mod schubert;
pub mod tableau;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
