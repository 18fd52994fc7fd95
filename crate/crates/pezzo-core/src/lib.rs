//! Exact-arithmetic toolkit for the geometry of real cubic surfaces.
//!
//! The crate is organized bottom-up:
//!
//! * [`rat`], [`jet`], [`quad`] — scalar arithmetic: arbitrary-precision
//!   rationals, first-order jets in four variables (forward-mode derivatives),
//!   and the quadratic extension Q(sqrt 5).
//! * [`mpoly`] — sparse multivariate polynomials over the rationals.
//! * [`linalg`] — exact linear algebra: ranks, nullspaces, reduced echelon
//!   forms, fraction-free incremental rank tracking, and certified rank
//!   bounds for large matrices (modular lower bound + verified kernel
//!   upper bound).
//! * [`sample`] — deterministic, splittable rational point sampling.
//! * [`schlaefli`], [`weyl`], [`cycles`] — the 27-vertex line-incidence
//!   graph, the order-51840 symmetry group in two representations, and
//!   cycle enumeration/orbit machinery.
//! * [`surface`], [`orders`] — the blow-up pipeline from six points in the
//!   plane to a cubic surface in P^3 with its 27 lines, circular
//!   intersection orders, region graph, and chordless-region census.
//! * [`moduli`] — the parameter charts for six-point configurations:
//!   multiplicative coordinates, trinomial relations, gauge fixing,
//!   chamber enumeration for the rank-6 reflection arrangement, the
//!   census of Eckardt-degeneration polynomials, and invariant coordinates.
//! * [`hull`], [`pezzotope`] — exact convex hulls in dimension <= 4, the
//!   Newton–Minkowski polytope of the trinomial system, its face lattice,
//!   the dual simplicial complex, and log-form residue calculus.
//! * [`forms`] — canonical-form libraries: per-region rational 2-forms on a
//!   cubic surface and pulled-back 3-forms on the moduli chart, with
//!   certified exact ranks.
//! * [`stringy`] — rigorous numerics: Beta-like boundary integrals, the
//!   two-dimensional simplex analogue, and field-theory limits via
//!   Richardson extrapolation.
//! * [`report`] — structured check reports shared by the CLI and tests.

pub mod cycles;
pub mod fixtures;
pub mod forms;
pub mod hull;
pub mod jet;
pub mod linalg;
pub mod moduli;
pub mod mpoly;
pub mod orders;
pub mod pezzotope;
pub mod quad;
pub mod rat;
pub mod report;
pub mod sample;
pub mod schlaefli;
pub mod stringy;
pub mod surface;
pub mod weyl;

pub use rat::{rat, rat_i, Field, Rat};
