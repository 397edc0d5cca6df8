//! Exact computations with simple Lie algebras and their modules over the integers and
//! over finite fields.

pub mod chevalley;
pub mod error;
pub mod exactlin;
pub mod highest_weight;
pub mod invarpoly;
pub mod stabilizers;
pub mod verify;
pub mod vinberg;
pub mod rootsys;

pub use error::{Error, Result};
