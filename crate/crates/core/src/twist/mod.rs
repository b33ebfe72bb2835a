//! Quadratic twists of the eight curves and their root numbers.

mod model;
mod records;
mod root;
mod tables;

pub use model::*;
pub use records::*;
pub use root::*;
pub use tables::*;

#[cfg(test)]
mod tests;
