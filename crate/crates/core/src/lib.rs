#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod lefschetz;

pub use error::{Error, Result};
