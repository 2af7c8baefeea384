//! Exact linear algebra over GF(2) and over the polynomial ring GF(2)[t].
//!
//! Everything here is dense and bit-packed. Sparsity in the homological
//! engines is handled by degreewise blocking upstream, so the matrices that
//! reach this module are small enough for dense elimination.

mod bitmatrix;
mod snf;
mod taupoly;

pub use bitmatrix::{BitMatrix, BitVec, Rref};
pub use snf::{smith_normal_form, smith_normal_form_full, SmithDecomposition};
pub use taupoly::{TauPoly, TauPolyMatrix};
