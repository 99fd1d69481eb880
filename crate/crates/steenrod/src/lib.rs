//! File formats, the resolution cache and command implementations for the
//! `steenrod` binary.

pub mod cache;
pub mod chart;
pub mod commands;
pub mod comodule_json;
pub mod header;
