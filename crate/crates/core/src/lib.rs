//! Finite presentations of the infinite hypergraphs without strongly maximal
//! matchings or strongly minimal covers, and improvement oracles that turn any
//! presented candidate into a strictly better one.

pub mod catalogue;
pub mod error;
pub mod finitelab;
pub mod gadget;
pub mod objects;
pub mod oracles;
pub mod sample;
pub mod universe;

pub use error::{Error, Result};
