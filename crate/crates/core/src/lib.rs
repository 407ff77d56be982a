pub mod chaincat;
pub mod cli;
pub mod cocat;
pub mod error;
pub mod exactalg;
pub mod fincat;

pub use error::{Error, Result};
