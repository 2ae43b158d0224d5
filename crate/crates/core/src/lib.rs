//! Integer homology of link diagrams on the disk, annulus and torus, computed
//! from two chain complexes: enhanced Kauffman states and normalized dotted
//! foams, together with the explicit isomorphism between them.

pub mod aps_complex;
mod error;
pub mod foam_complex;
pub mod grading;
pub mod integer_homology;
pub mod lincomb;
pub mod phi_correspondence;
mod report;
pub mod surface_diagram;

pub use error::{Error, Result};
pub use report::Report;

use surface_diagram::State;

/// A generator that decorates each circle of a state with one mark.
pub trait Decorated: Ord + Clone {
    type Mark: Copy + Eq;

    fn state(&self) -> &State;
    /// Indexed by circle id.
    fn marks(&self) -> &[Self::Mark];
    fn from_parts(state: State, marks: Vec<Self::Mark>) -> Self;
}
