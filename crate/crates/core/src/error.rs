//! Error type shared by all modules.

use crate::numeric::Complex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CubicError {
    /// The leading coefficient is zero, so the input is not a cubic.
    #[error("leading coefficient is zero")]
    DegenerateLeadingCoefficient,

    /// A NaN or infinity reached an API boundary.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    /// The resolvent roots coincide exactly; the input should have been
    /// classified as a double-root case upstream.
    #[error("resolvent roots coincide; expected a double-root classification")]
    CoincidentResolventRoots,

    /// A cube root of the resolvent ratio landed too close to 1, which makes
    /// the generic root formula ill-posed; signals a near-double resolvent
    /// root that classification should have caught.
    #[error("cube root of resolvent ratio is too close to 1; near-double resolvent root")]
    UnitRatioDegeneracy,

    /// The iterative root finder did not meet its tolerance.
    #[error("root iteration did not converge after {iterations} iterations")]
    NoConvergence {
        iterations: u32,
        /// Last finite iterate, for diagnostics.
        last: [Complex; 3],
    },
}
