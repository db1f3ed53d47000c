//! Exact commutative algebra over the rationals, aimed at geometric vertex
//! decompositions of toric ideals of graphs.
//!
//! The crate is `no_std` and only needs an allocator. Everything here is a
//! pure function of its inputs; file formats and the command line live in the
//! `gvdlab` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod budget;
pub mod decomposition;
pub mod error;
pub mod frameworks;
pub mod graph;
pub mod groebner;
pub mod gvd;
pub mod hypergraph;
pub mod lattice;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;
pub mod toric;

pub use error::{Error, Result};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{Coeff, Polynomial, Term};
pub use ring::{RingContext, VariableId};
