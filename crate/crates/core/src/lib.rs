//! G-graphs and the G-Hilbert scheme of small binary dihedral groups
//! `BD_2n(a) ⊂ GL(2, C)`, with an exact Gröbner-basis oracle that checks
//! every emitted ideal.

pub mod agraph;
pub mod algebra;
pub mod analysis;
pub mod family;
pub mod ggraph;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod par;
pub mod resolution;
