//! Spectral extremal graph theory for degree-weighted adjacency matrices,
//! centred on the p-Sombor matrix `S_p(G)` with entries
//! `(d_i^p + d_j^p)^(1/p)` on edges.
//!
//! The layers build on each other: [`graph`] (simple graphs, canonical
//! certificates, named families), [`weighting`], [`spectra`],
//! [`transforms`], [`enumerate`] and [`extremal`].
//!
//! Numeric code is generic over [`Scalar`] (`f64`, `f32`) or [`Field`]
//! (adding exact [`Exact`] rationals); the aliases below fix the common
//! choices.

pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod numfmt;
pub mod scalar;
pub mod spectra;
pub mod transforms;
pub mod weighting;

pub use error::{Error, Result};
pub use graph::{canonical_certificate, make_graph, Certificate, EdgeList, Graph, GraphClass};
pub use scalar::{Field, Scalar};
pub use weighting::{Exponent, WeightFunction};

/// Exact scalar for quotient matrices and characteristic polynomials.
pub type Exact = num_rational::Rational64;

pub type WeightedMatrix64 = spectra::WeightedMatrix<f64>;
pub type WeightedMatrix32 = spectra::WeightedMatrix<f32>;
pub type WeightedMatrixExact = spectra::WeightedMatrix<Exact>;
pub type SpectralResult64 = spectra::SpectralResult<f64>;
pub type SpectralResult32 = spectra::SpectralResult<f32>;
pub type QuotientMatrix64 = spectra::QuotientMatrix<f64>;
pub type QuotientMatrixExact = spectra::QuotientMatrix<Exact>;
