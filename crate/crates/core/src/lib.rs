//! Exact arithmetic for the lattice-level geometry of Lagrangian-fibered
//! hyper-Kähler manifolds and their dual fibrations.
//!
//! Everything in this crate is computed over the integers or exact
//! rationals; there is no floating point anywhere. The crate is organised
//! around a small stack of layers:
//!
//! * [`intlin`] — arbitrary-precision integer matrices, Smith normal form,
//!   kernels and cokernels over `Z` and `Z/m`, and finitely generated
//!   abelian groups in canonical form.
//! * [`lattice`] — integral quadratic lattices carrying a Fujiki constant,
//!   divisibility of lattice vectors, and the matching-sum expansion of
//!   top intersection numbers.
//! * [`torus`] — polarized complex tori through their integral shadow: an
//!   alternating form on `Z^{2g}`, its symplectic normal form, polarization
//!   isogenies and their kernels, and fixed points of affine torus maps.
//! * [`ext`] — the integral exterior algebra of an abelian surface, cup
//!   products and Poincaré duality, realizing the dual polarization as a
//!   cup-product matrix.
//! * [`kummer`] — the automorphism bookkeeping of generalized Kummer
//!   moduli constructions: the translation subgroup, the minimal isogeny
//!   and its factorization, and conjugation orbits of involutions.
//! * [`orbits`] — finite group actions, Burnside-checked orbit counting,
//!   fixed-point ledgers, quotient-singularity reports and orbifold Euler
//!   characteristics.
//! * [`weyl`] — the Weyl dimension formula for the B/D series, graded
//!   dimension profiles and Betti tables of module decompositions.
//!
//! The `dualkummer` CLI (a separate crate in this workspace) exposes each
//! operation as a subcommand, plus a `verify-paper` harness that runs the
//! whole suite of known identities and prints a machine-readable report.

pub mod ext;
pub mod intlin;
pub mod kummer;
pub mod lattice;
pub mod ledger;
pub mod orbits;
pub mod torus;
pub mod weyl;

mod guide;

pub use intlin::{FinAbGroup, IntMatrix, SmithForm};
