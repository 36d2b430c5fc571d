pub mod action;
pub mod classical;
pub mod envalg;
pub mod error;
pub mod funalg;
pub mod pairing;
pub mod qplane;
pub mod report;
pub mod schrodinger;
pub mod scalar;
pub mod sparse;

pub use error::{Error, Result};
pub use scalar::{GaussianRational, ParamScalar};
pub use sparse::{NormalOrdered, Sparse};
pub mod workbench;
