//! Exact mod-2 computations around the rank-two elementary abelian
//! 2-subgroups of `SL_3(Z[1/2, i])` and the limit of their centralizer
//! cohomology over the Quillen category.
//!
//! Everything here is computed over GF(2) with exact integer bookkeeping —
//! no floating point, no randomized shortcuts in the verified claims.  The
//! crate is organised as a small tower:
//!
//! * [`graded`] — the bigraded algebra `A_n = F_2[y_i] (x) E(x_i, x_i')`
//!   with its canonical monomial order, degree bases and algebra maps;
//! * [`s3rep`] — GF(2) representations of the symmetric group `S_3`,
//!   projective summand counts and invariants;
//! * [`quillen`] — the `S_3`-action on `A_2`, the two-object limit / lim^1
//!   computation and the Borel-construction series it certifies;
//! * [`hilbert`] — exact rational Poincaré series with big-integer
//!   coefficients, and the closed-form identities between them;
//! * [`classes`] — Chern classes, the symmetrised exterior classes, their
//!   restrictions, and the composite that lands in the limit;
//! * [`membership`] — the admissible-sequence calculus: leading terms of
//!   the distinguished products, the explicit reduction algorithm and the
//!   rank-based membership oracle it is checked against;
//! * [`text`] — a tiny grammar for writing elements on the command line;
//! * [`verify`] — the named checks bundled into suites for the CLI.

pub mod classes;
pub mod error;
pub mod graded;
pub mod hilbert;
pub mod membership;
pub mod quillen;
pub mod s3rep;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
