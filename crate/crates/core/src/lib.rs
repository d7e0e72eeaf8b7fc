//! Exact computer algebra for Hom-bialgebras: presented algebras, cobraiding
//! forms, the FRT construction, finite-dimensional duals and Hom-quantum planes.

pub mod catalog;
pub mod cobraid;
pub mod comodule;
pub mod findim;
pub mod frt;
pub mod hombialg;
pub mod io;
pub mod linalg;
pub mod ncpoly;
pub mod report;
pub mod scalars;
