//! Path diagrams for matrices over a rig: terms, their rig semantics, the
//! equational theory, and the lift into Mat(C).

mod axioms;
mod lift;
mod parser;
mod rig;
mod term;

pub use axioms::{axiom, axiom_list, Axiom};
pub use lift::{coning_cell, coning_iso, lift, lift_symbolic};
pub use parser::parse;
pub use rig::{eval_rig, eval_scalar, Bool, Nat, Rig, RigMatrix};
pub use term::{PathTerm, ScalarExpr};
