//! Classification of the reduced cubic, the resolvent quadratic, the
//! two-cube decomposition, and the root formulas for each branch.
//!
//! For f(x) = x³ − 3px + q the parameters r, s defined by rs = p and
//! rs(r+s) = q are the roots of x² − (q/p)x + p. When they are distinct,
//!
//! ```text
//! f(x) = s/(s−r)·(x−r)³ + r/(r−s)·(x−s)³,
//! ```
//!
//! so f(x) = 0 collapses to ((x−r)/(x−s))³ = r/s and every root is
//! x = (r − t·s)/(1 − t) for a cube root t of r/s. The two remaining cases
//! (p ≈ 0 and q² ≈ 4p³) get direct formulas.

use crate::error::CubicError;
use crate::numeric::{self, Complex, UnityRoots};
use crate::reduction::ReducedCubic;

pub const DEFAULT_EPS_CLASS: f64 = 1e-10;
pub const DEFAULT_POLISH_ITERS: u32 = 2;

/// Which of the three branches a reduced cubic falls into.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Classification {
    /// p ≈ 0: the equation is the binomial x³ = −q.
    PureCube,
    /// q² ≈ 4p³: the resolvent quadratic has the double root q/(2p), which
    /// is also a double root of the cubic; carried as the witness.
    DoubleResolventRoot { witness: Complex },
    /// Distinct resolvent roots; the two-cube identity applies.
    Generic,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::PureCube => "pure-cube",
            Classification::DoubleResolventRoot { .. } => "double-resolvent-root",
            Classification::Generic => "generic",
        }
    }
}

/// Roots of the resolvent quadratic x² − (q/p)x + p, labeled |r| ≤ |s|.
/// On a magnitude tie (within one ulp) the root with the smaller principal
/// argument is r, so the labeling is deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resolvent {
    pub r: Complex,
    pub s: Complex,
}

/// Weights of the two-cube form: f(x) = alpha·(x−r)³ + beta·(x−s)³ with
/// alpha = s/(s−r) and beta = r/(r−s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub r: Complex,
    pub s: Complex,
    pub alpha: Complex,
    pub beta: Complex,
}

impl Decomposition {
    /// Expands alpha·(x−r)³ + beta·(x−s)³ back into descending power-basis
    /// coefficients; the two-cube identity says these equal
    /// (1, 0, −3rs, rs(r+s)).
    pub fn expand(&self) -> [Complex; 4] {
        let Decomposition { r, s, alpha, beta } = *self;
        [
            alpha + beta,
            (alpha * r + beta * s) * -3.0,
            (alpha * r * r + beta * s * s) * 3.0,
            -(alpha * r * r * r + beta * s * s * s),
        ]
    }
}

/// Knobs for [`solve_reduced`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Relative width of the classification bands; in (0, 1e-2].
    pub eps_class: f64,
    /// Newton refinement steps per root; in [0, 8].
    pub polish_iters: u32,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            eps_class: DEFAULT_EPS_CLASS,
            polish_iters: DEFAULT_POLISH_ITERS,
        }
    }
}

/// Everything [`solve_reduced`] produces.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    /// The three roots, sorted by (re, im) ascending.
    pub roots: [Complex; 3],
    pub classification: Classification,
    /// Scale-aware residual of each root, same order as `roots`.
    pub residuals: [f64; 3],
    /// Present exactly for the generic branch.
    pub decomposition: Option<Decomposition>,
}

/// Splits a reduced cubic into the three branches.
///
/// PureCube when |p| ≤ eps·(1 + |q|^(2/3)); otherwise DoubleResolventRoot
/// when |q² − 4p³| ≤ eps·max(|q|², 4|p|³); otherwise Generic. The bands use
/// the natural homogeneous scalings so the split is scale-invariant.
pub fn classify(rc: &ReducedCubic, eps_class: f64) -> Classification {
    debug_assert!(eps_class > 0.0 && eps_class <= 1e-2);
    let p_mag = rc.p.norm();
    let q_mag = rc.q.norm();
    if p_mag <= eps_class * (1.0 + q_mag.cbrt().powi(2)) {
        return Classification::PureCube;
    }
    let gap = (rc.q * rc.q - rc.p * rc.p * rc.p * 4.0).norm();
    let scale = (q_mag * q_mag).max(4.0 * p_mag.powi(3));
    if gap <= eps_class * scale {
        Classification::DoubleResolventRoot {
            witness: rc.q / (rc.p * 2.0),
        }
    } else {
        Classification::Generic
    }
}

/// Solves the resolvent quadratic x² − (q/p)x + p. Requires p away from
/// zero (anything not classified PureCube).
pub fn resolvent(rc: &ReducedCubic) -> Resolvent {
    let (r, s) = numeric::solve_monic_quadratic(-(rc.q / rc.p), rc.p);
    Resolvent { r, s }
}

/// Builds the two-cube weights from a resolvent with distinct roots.
pub fn decompose(res: &Resolvent) -> Result<Decomposition, CubicError> {
    let gap = res.s - res.r;
    if gap.re == 0.0 && gap.im == 0.0 {
        return Err(CubicError::CoincidentResolventRoots);
    }
    Ok(Decomposition {
        r: res.r,
        s: res.s,
        alpha: res.s / gap,
        beta: -(res.r / gap),
    })
}

/// Solves the generic branch: the three cube roots t of r/s each give a
/// root (r − t·s)/(1 − t) of x³ − 3rsx + rs(r+s).
///
/// The |r| ≤ |s| labeling keeps |t| ≤ 1 so the denominators stay away from
/// zero except when t approaches 1, which only happens for a near-double
/// resolvent root; that raises `UnitRatioDegeneracy` instead of dividing.
pub fn solve_generic(res: &Resolvent) -> Result<[Complex; 3], CubicError> {
    if res.r == res.s {
        return Err(CubicError::CoincidentResolventRoots);
    }
    let unity = UnityRoots::PRIMITIVE;
    let principal = numeric::principal_cube_root(res.r / res.s);
    let one = Complex::new(1.0, 0.0);
    let mut roots = [Complex::new(0.0, 0.0); 3];
    for (slot, rotation) in roots.iter_mut().zip([one, unity.omega, unity.omega_sq]) {
        let t = principal * rotation;
        let denom = one - t;
        if denom.norm() <= 1e-14 * (1.0 + t.norm()) {
            return Err(CubicError::UnitRatioDegeneracy);
        }
        *slot = (res.r - t * res.s) / denom;
    }
    Ok(roots)
}

/// Solves the double-root branch: r = q/(2p) twice, and −2r from the root
/// sum being zero.
pub fn solve_double(rc: &ReducedCubic) -> [Complex; 3] {
    let r = rc.q / (rc.p * 2.0);
    [r, r, r * -2.0]
}

/// Solves the pure-cube branch x³ = −q.
pub fn solve_pure_cube(rc: &ReducedCubic) -> [Complex; 3] {
    numeric::all_cube_roots(-rc.q)
}

/// Scale-aware residual |f(x)| / (|x|³ + 3|p||x| + |q| + 1); zero exactly
/// when f(x) = 0 exactly.
pub fn residual(x: Complex, rc: &ReducedCubic) -> f64 {
    let ax = x.norm();
    let denom = ax * ax * ax + 3.0 * rc.p.norm() * ax + rc.q.norm() + 1.0;
    rc.eval(x).norm() / denom
}

/// Newton refinement x ← x − f(x)/f′(x) with f′(x) = 3(x² − p).
///
/// A step is kept only if it does not increase the residual, so the result
/// is never worse than the input. Near a double root f′ vanishes; inside
/// the guard band the point is returned unchanged.
pub fn polish(x: Complex, rc: &ReducedCubic, iters: u32) -> Complex {
    debug_assert!(iters <= 8);
    let mut current = x;
    let mut best = residual(current, rc);
    for _ in 0..iters {
        let derivative = rc.eval_derivative(current);
        let guard = 1e-14 * (1.0 + 3.0 * (current.norm_sqr() + rc.p.norm()));
        if derivative.norm() <= guard {
            break;
        }
        let candidate = current - rc.eval(current) / derivative;
        let candidate_residual = residual(candidate, rc);
        if candidate_residual <= best {
            current = candidate;
            best = candidate_residual;
        } else {
            break;
        }
    }
    current
}

/// Full pipeline for a reduced cubic: classify, dispatch, polish, sort.
pub fn solve_reduced(rc: &ReducedCubic, opts: &SolveOptions) -> Result<SolveResult, CubicError> {
    if !rc.is_finite() {
        return Err(CubicError::NonFinite {
            context: "reduced cubic",
        });
    }
    let classification = classify(rc, opts.eps_class);
    let (raw, decomposition) = match classification {
        Classification::PureCube => (solve_pure_cube(rc), None),
        Classification::DoubleResolventRoot { .. } => (solve_double(rc), None),
        Classification::Generic => {
            let res = resolvent(rc);
            let decomposition = decompose(&res)?;
            (solve_generic(&res)?, Some(decomposition))
        }
    };
    let mut pairs = raw.map(|root| {
        let polished = polish(root, rc, opts.polish_iters);
        (polished, residual(polished, rc))
    });
    pairs.sort_by(|a, b| {
        a.0.re
            .total_cmp(&b.0.re)
            .then_with(|| a.0.im.total_cmp(&b.0.im))
    });
    Ok(SolveResult {
        roots: pairs.map(|(root, _)| root),
        classification,
        residuals: pairs.map(|(_, res)| res),
        decomposition,
    })
}
