//! Combinatorics of determinantal ideals: the KRS correspondence, Greene
//! invariants, straightening of bitableaux, initial ideals of powers and
//! symbolic powers of minor ideals, path complexes and Hilbert series, and
//! monomial descriptions of Rees algebras and algebras of minors.

pub mod error;
pub mod greene;
pub mod ideals;
pub mod krs;
pub mod linalg;
pub mod monomial;
pub mod paths;
pub mod poly;
pub mod rees;
pub mod shape;
pub mod straighten;
pub mod tableau;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use monomial::{PositionMonomial, TwoLineArray};
pub use shape::Shape;
pub use tableau::{Bitableau, Minor, Tableau};
