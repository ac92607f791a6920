pub mod arith;
pub mod cli;
pub mod error;
pub mod doublesum;
pub mod linalg;
pub mod subres;
pub mod sylvmatrix;
pub mod verify;

pub use error::{Error, Result};
