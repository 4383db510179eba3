//! Exact computer algebra for L∞-algebras, their representations up to homotopy,
//! and the characteristic classes of L∞-algebra extensions built from curvature.

pub mod graded;
pub mod symcoalg;
pub mod cohomology;
pub mod linfty;
pub mod report;
pub mod ruth;
pub mod cochain;
pub mod extension;
pub mod cwl;
pub mod gallery;
