//! Exact quantum invariants of knotoid diagrams presented as Morse words.

pub mod cli;
pub mod diagram;
pub mod engine;
pub mod invariants;
pub mod models;
pub mod moves;
pub mod scalar;
