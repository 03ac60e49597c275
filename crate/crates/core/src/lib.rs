//! Character tables, Hall-Littlewood functions, Kostka matrices and Green functions
//! for the imprimitive complex reflection groups G(e,p,n) and their cosets.

pub mod arith;
pub mod combinatorics;
pub mod error;
pub mod gepn;
pub mod labeled;
pub mod symfunc;
pub mod wreath;

pub use error::{Error, Result};
