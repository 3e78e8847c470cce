pub mod cli;
pub mod error;
pub mod insertion;
pub mod interval_orders;
pub mod lattice;
pub mod partitions;
pub mod posets;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
