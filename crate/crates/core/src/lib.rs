//! Cubic equations over the complex numbers, solved through the two-cube
//! canonical form of the reduced cubic.
//!
//! A monic cubic in the binomial convention `x³ + 3a₁x² + 3a₂x + a₃` is
//! depressed by the shift `x → x − a₁` into `f(x) = x³ − 3px + q`. Writing
//! `f` as `x³ − 3rsx + rs(r+s)` makes `r` and `s` the roots of the resolvent
//! quadratic `x² − (q/p)x + p`, and when they are distinct the identity
//!
//! ```text
//! x³ − 3rsx + rs(r+s) = s/(s−r)·(x−r)³ + r/(r−s)·(x−s)³
//! ```
//!
//! reduces the equation to a ratio of two cubes. The crate implements that
//! pipeline end to end, together with an independent simultaneous-iteration
//! root finder used purely for cross-checking.
//!
//! Modules:
//! - [`numeric`]: complex kernels with explicit branch-cut policy (principal
//!   cube root, cube roots of unity, cancellation-safe quadratic solver).
//! - [`reduction`]: coefficient conventions, depression, root lifting.
//! - [`sylvester`]: classification, resolvent, decomposition, root formulas,
//!   Newton polish, scale-aware residuals.
//! - [`oracle`]: independent root iteration and root-multiset matching.

pub mod error;
pub mod numeric;
pub mod oracle;
pub mod reduction;
pub mod sylvester;

pub use error::CubicError;
pub use numeric::Complex;
pub use reduction::{DepressionRecord, GeneralCubic, ReducedCubic};
pub use sylvester::{Classification, Decomposition, Resolvent, SolveOptions, SolveResult};
