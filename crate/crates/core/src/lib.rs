//! Exact computations with the mod 2 Steenrod algebra, its dual Hopf
//! algebra, and finite-type (co)modules over them, truncated to degree
//! windows.

#![no_std]

extern crate alloc;

pub mod f2linalg;
pub mod milnor;
pub mod dual_hopf;
pub mod comodule;
pub mod module_cat;
pub mod cobar_ss;
