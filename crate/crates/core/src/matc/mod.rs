//! The bicategory Mat(C) of matrices over a bimonoidal category.
//!
//! 1-cells are matrices of objects, 2-cells are matrices of morphisms.
//! Horizontal composition is matrix multiplication and never simplifies; every
//! rebracketing or unit deletion is an explicit synthesized 2-cell.

mod cell;
mod grid;
mod json;
mod synth;

pub use cell::{Cell1, Cell2};
pub use grid::{Grid, Slot};
pub use json::{cell1_from_json, cell1_to_json, cell2_from_json, cell2_to_json};
pub use synth::{
    associator, associator_iso, is_invertible_pair, left_unitor, left_unitor_iso, microcosm_oplus,
    microcosm_oplus_iso, microcosm_otimes, normalize_cell, right_unitor, right_unitor_iso, sigma_naturalizer,
    sigma_naturalizer_iso, syllepsis, syllepsis_iso, CellIso,
};
