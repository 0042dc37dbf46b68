//! Equivariant Riemann-Roch spaces of Hurwitz curves with automorphism group
//! PSL(2, q).

pub mod arith;
pub mod chartab;
pub mod context;
pub mod cyclo;
pub mod error;
pub mod ffield;
pub mod galois;
pub mod induce;
pub mod psl2;
pub mod record;
pub mod rrmod;
pub mod verify;

pub use context::{ContextOptions, HurwitzContext};
pub use error::{Error, Result};
