//! Exact-arithmetic toolkit for Hankel transforms of regular sequences.
//!
//! A regular ("Catalan-like") sequence has all Hankel determinants nonzero.
//! For such a sequence this crate computes the Hankel transform by three
//! independent routes and checks that they agree:
//!
//! - direct fraction-free determinants ([`hankel`]),
//! - the lambda-product formula from the J-fraction expansion of the
//!   generating function ([`jfraction`]),
//! - the product of squared-polynomial functional values built from the
//!   orthogonal polynomial coefficient array ([`orthopoly`]).
//!
//! Supporting machinery: truncated power series over exact rationals
//! ([`series`]), Riordan-group algebra ([`riordan`]), the five worked
//! example sequences with literal identity verifiers ([`catalog`]), and
//! OEIS b-file ingestion ([`oeis`]). Everything is exact; the crate
//! contains no floating point.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod hankel;
pub mod jfraction;
pub mod numeric;
pub mod oeis;
pub mod orthopoly;
pub mod riordan;
pub mod series;

pub use error::{Error, Result};
pub use numeric::Rat;
pub use series::{PowerSeries, Sequence};
