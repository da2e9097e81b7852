//! Concrete base categories.

mod basis;
mod boolcat;
mod matrix;
mod natdiscrete;
mod vecskel;

pub use basis::{dim_of, enumerate as basis_of, structural_permutation, Label};
pub use boolcat::{bool_hom, truth, BoolCat};
pub use matrix::Matrix;
pub use natdiscrete::{value_of, NatDiscrete};
pub use vecskel::VecSkel;
