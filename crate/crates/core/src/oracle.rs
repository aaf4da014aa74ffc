//! Independent root-finding oracle and root-multiset comparison.
//!
//! The solver here is a simultaneous (Weierstrass) iteration specialized to
//! degree three. It shares no code with the two-cube path, so the two can
//! cross-check each other. Nothing in this module is ever consulted by
//! [`crate::sylvester`].

use crate::error::CubicError;
use crate::numeric::Complex;
use crate::reduction::ReducedCubic;

pub const DEFAULT_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_ITERS: u32 = 200;

/// Monic cubic x³ + c2·x² + c1·x + c0, the oracle's input format.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonicCubicCoeffs {
    pub c2: Complex,
    pub c1: Complex,
    pub c0: Complex,
}

impl MonicCubicCoeffs {
    pub fn new(c2: Complex, c1: Complex, c0: Complex) -> Self {
        MonicCubicCoeffs { c2, c1, c0 }
    }

    pub fn is_finite(&self) -> bool {
        self.c2.is_finite() && self.c1.is_finite() && self.c0.is_finite()
    }

    pub fn eval(&self, x: Complex) -> Complex {
        ((x + self.c2) * x + self.c1) * x + self.c0
    }

    /// Scale-aware residual |f(x)| / (|x|³ + |c2||x|² + |c1||x| + |c0| + 1).
    pub fn residual(&self, x: Complex) -> f64 {
        let ax = x.norm();
        let denom = ax * ax * ax
            + self.c2.norm() * ax * ax
            + self.c1.norm() * ax
            + self.c0.norm()
            + 1.0;
        self.eval(x).norm() / denom
    }
}

impl From<ReducedCubic> for MonicCubicCoeffs {
    fn from(rc: ReducedCubic) -> Self {
        MonicCubicCoeffs {
            c2: Complex::new(0.0, 0.0),
            c1: rc.p * -3.0,
            c0: rc.q,
        }
    }
}

/// How two root triples were paired up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchReport {
    /// `a[i]` was paired with `b[permutation[i]]`.
    pub permutation: [usize; 3],
    pub max_distance: f64,
    pub distances: [f64; 3],
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Pairs two root triples so the largest pairwise distance is minimal,
/// trying all six permutations; ties keep the lexicographically first one.
pub fn match_roots(a: &[Complex; 3], b: &[Complex; 3]) -> MatchReport {
    let mut best: Option<MatchReport> = None;
    for permutation in PERMUTATIONS {
        let distances = [
            (a[0] - b[permutation[0]]).norm(),
            (a[1] - b[permutation[1]]).norm(),
            (a[2] - b[permutation[2]]).norm(),
        ];
        let max_distance = distances.iter().fold(0.0f64, |m, &d| m.max(d));
        let better = match &best {
            None => true,
            Some(report) => max_distance < report.max_distance,
        };
        if better {
            best = Some(MatchReport {
                permutation,
                max_distance,
                distances,
            });
        }
    }
    best.expect("six permutations were tried")
}

/// Finds all three roots by simultaneous Weierstrass iteration.
///
/// Starts from the non-real geometric seeds (0.4 + 0.9i)^k, k = 1..3, whose
/// asymmetry avoids the symmetric traps of the iteration. Converges when
/// every correction is below `tol` relative to its iterate, or when every
/// residual is below `tol`; the latter matters near multiple roots, where
/// the corrections stagnate at the noise floor well above `tol` while the
/// residuals are already far below it.
pub fn iterate_all_roots(
    coeffs: &MonicCubicCoeffs,
    tol: f64,
    max_iters: u32,
) -> Result<[Complex; 3], CubicError> {
    debug_assert!(tol > 0.0 && tol <= 1e-6);
    debug_assert!(max_iters >= 1);
    let seed = Complex::new(0.4, 0.9);
    let mut z = [seed, seed * seed, seed * seed * seed];
    for iteration in 0..max_iters {
        let mut corrections = [Complex::new(0.0, 0.0); 3];
        for i in 0..3 {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..3 {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            // A collision of iterates leaves this estimate unmoved for one
            // sweep; the others separate and free it next sweep.
            if denom.re != 0.0 || denom.im != 0.0 {
                corrections[i] = coeffs.eval(z[i]) / denom;
            }
        }
        let previous = z;
        for i in 0..3 {
            z[i] -= corrections[i];
        }
        if !z.iter().all(|w| w.is_finite()) {
            return Err(CubicError::NoConvergence {
                iterations: iteration + 1,
                last: previous,
            });
        }
        let corrections_small = (0..3).all(|i| corrections[i].norm() <= tol * (1.0 + z[i].norm()));
        if corrections_small || z.iter().all(|&w| coeffs.residual(w) <= tol) {
            z.sort_by(|a, b| a.re.total_cmp(&b.re).then_with(|| a.im.total_cmp(&b.im)));
            return Ok(z);
        }
    }
    Err(CubicError::NoConvergence {
        iterations: max_iters,
        last: z,
    })
}
