//! Exact computations with signed-permutation Weyl groups.
//!
//! The crate provides root systems of the classical families in epsilon
//! coordinates, Weyl groups realized as (even-)signed permutations, Bruhat
//! order via rook and rank matrices with an independent subword oracle, a
//! sparse exact rational polynomial ring carrying the Weyl action, the
//! nil-Hecke ring with its `x_w` basis and Kostant-Kumar polynomials `d_w`,
//! exact-rank coadjoint orbit dimensions in `so_{2n}`, length formulas for a
//! `D_n` into `D_{n+2}` embedding, and named verification suites bundling the
//! exhaustive desk-scale checks.

pub mod bruhat;
pub mod embedding;
pub mod error;
pub mod nilhecke;
pub mod orbits;
pub mod roots;
pub mod symbolic;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use roots::{Family, LinearForm, Root, RootSystemSpec};
pub use weyl::{RootSystem, SignedPermutation};
