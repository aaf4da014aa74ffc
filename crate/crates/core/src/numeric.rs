//! Complex arithmetic kernels with explicit branch-cut and cancellation
//! policies.
//!
//! The principal argument lives in the half-open interval (−π, π]; roots
//! divide it, so the principal cube root of a negative real is the complex
//! root at argument π/3, not the real one. The real root is always present
//! in [`all_cube_roots`].

use std::f64::consts::PI;

/// The scalar type used throughout the crate. Both components are expected
/// to be finite; operations that accept untrusted data validate this.
pub type Complex = num_complex::Complex64;

/// Imaginary part of the primitive cube root of unity, √3/2.
const SQRT_3_OVER_2: f64 = 0.8660254037844386467637231707529362;

/// The primitive cube roots of unity, ω = exp(2πi/3) and ω².
///
/// They enumerate the solutions of a binomial cubic: if w³ = z then the
/// full solution set is {w, wω, wω²}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnityRoots {
    pub omega: Complex,
    pub omega_sq: Complex,
}

impl UnityRoots {
    pub const PRIMITIVE: UnityRoots = UnityRoots {
        omega: Complex::new(-0.5, SQRT_3_OVER_2),
        omega_sq: Complex::new(-0.5, -SQRT_3_OVER_2),
    };
}

/// Principal argument in (−π, π].
///
/// `atan2` alone returns −π for a negative real with a negative-zero
/// imaginary part; that endpoint is folded onto +π so the interval is
/// genuinely half-open.
pub fn principal_arg(z: Complex) -> f64 {
    let theta = z.im.atan2(z.re);
    if theta == -PI {
        PI
    } else {
        theta
    }
}

/// Principal square root: argument halved, so arg of the result lies in
/// (−π/2, π/2].
pub fn principal_sqrt(z: Complex) -> Complex {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex::new(0.0, 0.0);
    }
    let radius = z.norm().sqrt();
    let theta = principal_arg(z) / 2.0;
    Complex::new(radius * theta.cos(), radius * theta.sin())
}

/// Principal cube root: argument divided by three, so arg of the result lies
/// in (−π/3, π/3]. Zero maps to zero.
pub fn principal_cube_root(z: Complex) -> Complex {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex::new(0.0, 0.0);
    }
    let radius = z.norm().cbrt();
    let theta = principal_arg(z) / 3.0;
    Complex::new(radius * theta.cos(), radius * theta.sin())
}

/// All three cube roots of `z`, in the deterministic order
/// `[w, wω, wω²]` where `w` is the principal root.
pub fn all_cube_roots(z: Complex) -> [Complex; 3] {
    let w = principal_cube_root(z);
    let unity = UnityRoots::PRIMITIVE;
    [w, w * unity.omega, w * unity.omega_sq]
}

/// Solves the monic quadratic x² + bx + c = 0 without subtractive
/// cancellation.
///
/// The larger root comes from the numerator `−b ± √(b²−4c)` whose sign
/// matches `−b`, the smaller from dividing `c` by it. Returns the pair
/// ordered by ascending magnitude; on a magnitude tie (within one unit in
/// the last place) the root with smaller principal argument comes first.
pub fn solve_monic_quadratic(b: Complex, c: Complex) -> (Complex, Complex) {
    let disc = b * b - c * 4.0;
    let sq = principal_sqrt(disc);
    let n_plus = -b + sq;
    let n_minus = -b - sq;
    let numerator = if n_plus.norm_sqr() >= n_minus.norm_sqr() {
        n_plus
    } else {
        n_minus
    };
    if numerator.re == 0.0 && numerator.im == 0.0 {
        // Only possible when b = c = 0: a double root at the origin.
        return (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
    }
    let big = numerator / 2.0;
    let small = c / big;
    order_by_magnitude(small, big)
}

/// Orders a pair by ascending magnitude; ties within one ulp fall back to
/// ascending principal argument.
fn order_by_magnitude(u: Complex, v: Complex) -> (Complex, Complex) {
    let mu = u.norm();
    let mv = v.norm();
    if (mu - mv).abs() <= mu.max(mv) * f64::EPSILON {
        if principal_arg(u) <= principal_arg(v) {
            (u, v)
        } else {
            (v, u)
        }
    } else if mu < mv {
        (u, v)
    } else {
        (v, u)
    }
}
