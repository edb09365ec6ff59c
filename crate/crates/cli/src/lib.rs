//! Command-line front end: analysis reports, oracle verification, catalogue
//! sweeps and staircase rendering.

pub mod app;
pub mod render;
pub mod report;
pub mod text;
