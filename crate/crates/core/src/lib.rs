//! Truncated polynomial bialgebras over small prime fields, their comodules,
//! dual-algebra decompositions, and connection graphs for quadric motives.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod comod;
pub mod dual;
pub mod error;
pub mod field;
pub mod lincomb;
pub mod motdec;
pub mod linalg;
pub mod jinv;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Prime, Scalar};
pub use lincomb::LinComb;
