//! Exact computations on the ortholattice of polyhedral cones, finite
//! ortholattices and minimal orthologic with the partial orthomodularity rule.

pub mod angle_oracle;
pub mod cli;
pub mod cone;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod lattice;
pub mod logic;
pub mod laws;
pub mod random;
pub mod rational;
pub mod report;

pub use cone::{AlComponent, ConeSpec, PolyCone};
pub use error::Error;
