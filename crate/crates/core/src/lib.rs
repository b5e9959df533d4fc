//! Exact dimensions of spline spaces on planar cell complexes with a single
//! interior vertex and curved (algebraic) edges.

pub mod cli;
pub mod closed_forms;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod polyring;
pub mod spline_complex;
