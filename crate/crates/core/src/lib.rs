//! Exact summatory functions of the divisor function and its squarefree
//! analogue, their explicit formulas over zeta zeros, and the Voronoi
//! series for the divisor-problem error term.

pub mod abscissa;
pub mod analysis;
pub mod arith;
pub mod error;
pub mod explicit;
pub mod numeric;
pub mod summatory;
pub mod voronoi;
pub mod zeta;

pub use abscissa::Abscissa;
pub use error::{Error, Result};
