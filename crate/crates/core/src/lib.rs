//! Operadic E-infinity structures over F2.
//!
//! The surjection operad, the Barratt–Eccles operad, table reduction between
//! them, algebras over the surjection operad, and the bar construction with
//! its induced Barratt–Eccles Hopf structure.

pub mod algebras;
pub mod bar;
pub mod barratt_eccles;
pub mod error;
pub mod f2chain;
pub mod perm;
pub mod surjection;
pub mod table_reduction;
pub mod verify;

pub use error::{Error, Result};
