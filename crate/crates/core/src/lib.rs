//! Uniform face ideals of coloured simplicial complexes.
//!
//! A proper vertex colouring `𝒞` of a simplicial complex `Δ` assigns to each
//! face an index vector and a uniform monomial; those monomials generate the
//! uniform face ideal `I(Δ,𝒞)`. When the colouring is nested, the ideal has a
//! linear cubical cellular resolution and its invariants are read off the
//! f-vector of `Δ`. This crate builds the ideal, decides nestedness, computes
//! the closed forms and checks them against brute-force oracles.

pub mod colouring;
pub mod cubical;
pub mod error;
pub mod invariants;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod monomial;
pub mod poset;
pub mod primes;
pub mod simplicial;
pub mod ufi;

pub use colouring::{is_nested, is_nesting_ordered, nested_chromatic_number, Colouring};
pub use error::{Error, ErrorKind, Result};
pub use invariants::BettiTable;
pub use limits::Limits;
pub use monomial::{Monomial, MonomialIdeal};
pub use simplicial::SimplicialComplex;
pub use ufi::{uniform_face_ideal, IndexVector, UfiContext};
