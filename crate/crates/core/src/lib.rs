//! Exact computer algebra for the classical invariant theory of binary forms.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`): rational
//! polynomial arithmetic, transvectants and Gordan series, the quintic covariant
//! catalog, Wronskians and resultants, the evectant calculus, and the
//! computations around the Hermite invariant of binary quintics.
#![no_std]
extern crate alloc;

pub mod ring;
pub mod forms;
pub mod linalg;
pub mod covariants;
pub mod evectants;
pub mod hermite;
