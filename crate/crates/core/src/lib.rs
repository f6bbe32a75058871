//! Proper disconnection and rainbow vertex-disconnection of graphs.

pub mod cnf;
pub mod constructive;
pub mod cuts;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod io;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
