//! Exact arithmetic for wild ramification in mixed characteristic.
//!
//! The crate builds finite extensions of the p-adics as towers over an
//! unramified base, reads valuations exactly, and turns Newton polygon and
//! Kummer data into ramification filtrations and Swan conductors.
//!
//! Everything is `no_std` with `alloc`; IO and file formats live in the
//! `ramlab` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod conductor;
pub mod error;
pub mod expr;
pub mod ext;
pub mod field;
pub mod filtration;
pub mod group;
pub mod linalg;
pub mod monodromy;
pub mod newton;
pub mod poly;
pub mod residue;
pub mod tower;
pub mod val;

pub use error::{Error, Result};
pub use ext::SimpleExtension;
pub use field::ValuedField;
pub use poly::DensePoly;
pub use residue::{Fq, ResidueField};
pub use tower::{RamifiedStep, TowerElement, TowerField, TowerSpec};
pub use val::Val;
