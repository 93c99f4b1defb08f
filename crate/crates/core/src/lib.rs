//! Weighted pseudo-colimits and bicolimits of finite category-valued
//! pseudo-functors on finite 2-categories, computed by exhaustive enumeration.

pub mod bicolim;
pub mod budget;
pub mod cli;
pub mod dot;
pub mod error;
pub mod fincat;
pub mod pscolim;
pub mod psfun;
pub mod report;
pub mod seeds;
pub mod twocat;

pub use budget::Budget;
pub use error::{Error, Result};
