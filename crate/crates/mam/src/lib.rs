//! Exact-arithmetic calculator for intersections of quadrics (moment-angle
//! manifolds).
//!
//! Given a configuration of n rational k-vectors Λ = (λ₁, …, λₙ), the crate
//! works with the real variety Z(Λ) = {Σ λᵢ rᵢ² = 0, Σ rᵢ² = 1} and its
//! complex (moment-angle) analogue, through the associated simple polytope
//! P = {Σ λᵢ rᵢ = 0, Σ rᵢ = 1, r ≥ 0}:
//!
//! * [`config`] — parsing, validation (weak hyperbolicity by exact rational
//!   LP, integer kernel bases by Smith normal form), derived configurations;
//! * [`polytope`] — the face lattice of P with exact feasibility decisions;
//! * [`homology`] — integer homology of Z and its halves, with an independent
//!   brute-force oracle ([`oracle`]) over the reflected cell complex;
//! * [`cyclic`] — the k=2 odd cyclic partition normal form;
//! * [`classify`] — symbolic diffeomorphism types (products, connected sums,
//!   sphere-product exteriors) and open-book reports;
//! * [`contact`] — numerical certification of the positive-confoliation and
//!   Legendrian-accessibility properties of the 1-form α on the augmented
//!   variety;
//! * [`fixtures`] — a canonical corpus of runnable configurations;
//! * [`report`] — deterministic JSON reports for the `mam` binary.
//!
//! The `examples/` directory holds one runnable example per capability;
//! start with `cargo run --example cyclic_types`.

pub mod chain;
pub mod classify;
pub mod config;
pub mod contact;
pub mod cyclic;
pub mod fixtures;
pub mod homology;
pub mod lp;
pub mod oracle;
pub mod polytope;
pub mod rat;
pub mod report;
pub mod snf;
