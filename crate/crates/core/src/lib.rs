//! Exact symbolic kernel for a quantum-algebraic model of a localized Dirac
//! electron: canonical positions and momenta, Clifford generators, the
//! conformal generators built from them, and their shifts under
//! transformations to uniformly accelerated frames.
//!
//! Conventions used throughout:
//!
//! * `eta = diag(1, -1, -1, -1)`; momentum symbols `p0..p3` are the
//!   contravariant components p^mu, and `P_mu = eta_{mu nu} p^nu`.
//! * Positions `x_mu` and Clifford generators `gamma_mu` carry lower indices.
//! * The bracket is `(A, B) = (AB - BA) / (i hbar)` with
//!   `(P_mu, x_nu) = -eta_{mu nu}`; the dot product is `(AB + BA) / 2`.
//! * `w` is the central square root of `p.p`, i.e. `|M|`.

pub mod clifford;
pub mod error;
pub mod expr;
pub mod frames;
pub mod ncalg;
pub mod observables;
pub mod scalars;
pub mod suite;

pub use error::{Error, Result};
pub use ncalg::NCElement;
pub use observables::{Catalog, Observable};
pub use scalars::{GaussianRational, Scalar};
