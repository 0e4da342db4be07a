pub mod cli;
pub mod cycles;
pub mod error;
pub mod gf;
pub mod graphs;
pub mod oracle;
pub mod plane;
pub mod wheelgear;

pub use error::{Error, Result};
