//! Coefficient conventions, depression to the reduced form, and root lifting.
//!
//! A general cubic `Ax³ + Bx² + Cx + D` is normalized into the binomial
//! convention `x³ + 3a₁x² + 3a₂x + a₃`, then the shift `x → x − a₁` removes
//! the quadratic term, leaving `x³ − 3px + q`.

use crate::error::CubicError;
use crate::numeric::Complex;

/// Monic cubic in the binomial convention: x³ + 3a₁x² + 3a₂x + a₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralCubic {
    pub a1: Complex,
    pub a2: Complex,
    pub a3: Complex,
}

impl GeneralCubic {
    pub fn new(a1: Complex, a2: Complex, a3: Complex) -> Self {
        GeneralCubic { a1, a2, a3 }
    }

    pub fn is_finite(&self) -> bool {
        self.a1.is_finite() && self.a2.is_finite() && self.a3.is_finite()
    }

    /// Evaluates the monic cubic at `x`.
    pub fn eval(&self, x: Complex) -> Complex {
        ((x + self.a1 * 3.0) * x + self.a2 * 3.0) * x + self.a3
    }

    /// Scale-aware residual |g(x)| / (|x|³ + 3|a₁||x|² + 3|a₂||x| + |a₃| + 1).
    pub fn residual(&self, x: Complex) -> f64 {
        let ax = x.norm();
        let denom = ax * ax * ax
            + 3.0 * self.a1.norm() * ax * ax
            + 3.0 * self.a2.norm() * ax
            + self.a3.norm()
            + 1.0;
        self.eval(x).norm() / denom
    }
}

/// Reduced cubic f(x) = x³ − 3px + q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCubic {
    pub p: Complex,
    pub q: Complex,
}

impl ReducedCubic {
    pub fn new(p: Complex, q: Complex) -> Self {
        ReducedCubic { p, q }
    }

    pub fn is_finite(&self) -> bool {
        self.p.is_finite() && self.q.is_finite()
    }

    /// Evaluates f(x) = x³ − 3px + q.
    pub fn eval(&self, x: Complex) -> Complex {
        x * (x * x - self.p * 3.0) + self.q
    }

    /// Evaluates f′(x) = 3(x² − p).
    pub fn eval_derivative(&self, x: Complex) -> Complex {
        (x * x - self.p) * 3.0
    }
}

/// A depression outcome: the reduced cubic plus the shift it was obtained
/// with. A root y of `reduced` maps back to the root y − shift of the
/// original cubic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressionRecord {
    pub reduced: ReducedCubic,
    pub shift: Complex,
}

/// Converts standard coefficients A, B, C, D (for Ax³ + Bx² + Cx + D) into
/// the binomial convention of the monic cubic.
///
/// Rejects a zero leading coefficient, and any NaN or infinity on the way in
/// or out.
pub fn normalize(
    c3: Complex,
    c2: Complex,
    c1: Complex,
    c0: Complex,
) -> Result<GeneralCubic, CubicError> {
    if !(c3.is_finite() && c2.is_finite() && c1.is_finite() && c0.is_finite()) {
        return Err(CubicError::NonFinite {
            context: "input coefficients",
        });
    }
    if c3.norm_sqr() == 0.0 {
        return Err(CubicError::DegenerateLeadingCoefficient);
    }
    let g = GeneralCubic {
        a1: c2 / (c3 * 3.0),
        a2: c1 / (c3 * 3.0),
        a3: c0 / c3,
    };
    if !g.is_finite() {
        return Err(CubicError::NonFinite {
            context: "normalized coefficients",
        });
    }
    Ok(g)
}

/// Depresses the cubic by the shift x → x − a₁, yielding p = a₁² − a₂ and
/// q = 2a₁³ − 3a₁a₂ + a₃.
pub fn depress(g: &GeneralCubic) -> DepressionRecord {
    let a1_sq = g.a1 * g.a1;
    let p = a1_sq - g.a2;
    let q = a1_sq * g.a1 * 2.0 - g.a1 * g.a2 * 3.0 + g.a3;
    DepressionRecord {
        reduced: ReducedCubic { p, q },
        shift: g.a1,
    }
}

/// Maps roots of the reduced cubic back to roots of the original by
/// subtracting the shift; order is preserved.
pub fn lift_roots(roots: [Complex; 3], shift: Complex) -> [Complex; 3] {
    roots.map(|x| x - shift)
}
