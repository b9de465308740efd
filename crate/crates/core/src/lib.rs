//! Exact combinatorics of Seshadri stratifications on Schubert varieties of
//! finite type.
//!
//! Everything here is computed over exact integers and rationals — no floating
//! point anywhere. The crate covers the combinatorial skeleton of the theory:
//!
//! - [`root_system`]: finite-type Cartan matrices, weights, roots, coroots and
//!   reflections in exact coordinates;
//! - [`weyl`]: Weyl group elements, reduced words, minimal coset
//!   representatives for `W/W_Q`, Bruhat order and covering reflections;
//! - [`strat_poset`]: the bonded Bruhat poset `A_τ` attached to a dominant
//!   weight `λ` and a coset `τ`, with covering roots, bonds and maximal
//!   chains;
//! - [`ls_fan`]: the Lakshmibai-Seshadri fan of monoids `LS_λ⁺`, LS-paths, the
//!   `Θ` bijection, the partial order `⊵`, standard decompositions and the
//!   fan-algebra product;
//! - [`demazure`]: Demazure operators and characters, path-model characters,
//!   dimension counts and the divided-power monomials arising from the
//!   `S(a,σ)` reduction;
//! - [`nok`]: the Newton-Okounkov simplicial complex, the integral structure
//!   on its maximal simplices, lattice-point sets and the degree of the
//!   embedded Schubert variety (with an independent Hilbert-style count).
//!
//! The crate is `no_std` (with `alloc`); all IO, serialization and the
//! command-line front end live in the companion `lsfan-cli` crate.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything can be shared freely across threads.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod demazure;
pub mod error;
pub mod ls_fan;
pub mod nok;
pub mod root_system;
pub mod strat_poset;
pub mod weyl;

pub use error::{Error, Result};
pub use ls_fan::{FanElement, FanProduct, LsPath, TriangleOrder};
pub use root_system::{CartanData, RationalWeight, Root, Weight};
pub use strat_poset::{Chain, StratPoset};
pub use weyl::{CosetElement, WeylElement};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Exact integer scalar used throughout the crate.
pub type Int = num_bigint::BigInt;
