pub mod bmod;
pub mod error;
pub mod filtration;
pub mod linalg;
pub mod permcomb;
pub mod schubpoly;
pub mod verify;

pub use error::{KpError, Result};
