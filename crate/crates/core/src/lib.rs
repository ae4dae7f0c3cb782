//! Exact-arithmetic Schubert calculus for isotropic Grassmannians of Lie
//! types B, C, and D.
//!
//! The crate computes K-theoretic Pieri-type triple intersection numbers
//! and Pieri structure constants. The pipeline runs entirely over exact
//! integers:
//!
//! * [`grassmannian`] — ambient-space parameters and Schubert symbols,
//!   with the reflection/central involutions and dual symbols.
//! * [`bruhat`] — the Bruhat order, Hasse diagrams, graded ranks, and the
//!   Möbius function of the symbol poset.
//! * [`diagram`] — Richardson diagrams `D(P,T)` with their cuts (visible,
//!   apparent, exceptional), zero columns, and lone stars.
//! * [`projection`] — complete-intersection data of the projected
//!   Richardson variety `Z_{P,T}` and the shrinking construction.
//! * [`ktheory`] — arithmetic in `Z[h]/(h^N)`, sheaf Euler characteristics,
//!   and the triple intersection formulas.
//! * [`quadric`] — an independent oracle for rank-one orthogonal spaces,
//!   built only on the ring arithmetic.
//! * [`pieri`] — Pieri coefficients by Möbius-weighted sums and by the
//!   global matrix method, cross-checked against each other.
//! * [`selfcheck`] — runnable versions of the invariant suites.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `isogr-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bruhat;
pub mod diagram;
pub mod error;
pub mod grassmannian;
pub mod ktheory;
pub mod pieri;
pub mod projection;
pub mod quadric;
pub mod selfcheck;

pub use error::Error;
pub use grassmannian::{Grassmannian, LieType, SchubertSymbol};
