//! Exact combinatorics of Jacobi-Stirling and Legendre-Stirling numbers.
//!
//! The crate computes, entirely in exact arithmetic:
//!
//! * the triangles of Jacobi-Stirling numbers of both kinds, polynomials in
//!   a parameter z ([`jsnumbers`]);
//! * the diagonal polynomials `p_{k,i}(n)` and their descent generating
//!   polynomials `A_{k,i}(t)`, by four independent methods — generating
//!   function transform, a five-term coefficient recurrence, descent
//!   counting over Jacobi-Stirling permutations, and descent counting over
//!   linear extensions of explicit posets ([`diagonal`], [`permutations`],
//!   [`posets`]);
//! * the descent-preserving bijection `phi` between linear extensions and
//!   Jacobi-Stirling permutations, and the bijection `psi` onto extensions
//!   of the Legendre-Stirling poset ([`permutations`]);
//! * Sturm-chain certificates of real-rootedness for the `A_{k,i}`
//!   ([`exactpoly`], [`verify::check_conjecture`]).
//!
//! The [`verify`] module packages the cross-method checks into reportable
//! suites; the `examples/` directory demonstrates each capability end to
//! end, and the thin `jstirling` binary exposes the same entry points as
//! subcommands.

pub mod diagonal;
pub mod exactpoly;
pub mod jsnumbers;
pub mod permutations;
pub mod posets;
pub mod verify;

pub use diagonal::{descent_table_gf, descent_table_rec, DescentTable, Method};
pub use exactpoly::{IntPoly, RatPoly};
pub use jsnumbers::{build_triangle, JSTriangle, Kind};
pub use permutations::{phi, phi_inverse, psi, psi_inverse, Word};
pub use posets::{build_p_legendre, build_r, LabeledPoset, LinearExtension};
pub use verify::{check_conjecture, run_suite, Suite, VerifyReport};
