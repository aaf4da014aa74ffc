//! Implementations of the solve / decompose / reduce / check commands.

use std::io::Write;

use sylvester_cubic::numeric::Complex;
use sylvester_cubic::reduction::{self, GeneralCubic, ReducedCubic};
use sylvester_cubic::sylvester::{self, Classification, Decomposition, SolveOptions};
use sylvester_cubic::CubicError;

use crate::exit_code;
use crate::literal::render_complex;

/// A fully solved cubic in user coordinates: roots are of the original
/// polynomial, residuals are measured against it, and the depression record
/// documents how the reduced form was reached.
#[derive(Debug, Clone)]
pub struct SolvedCubic {
    pub classification: Classification,
    pub p: Complex,
    pub q: Complex,
    pub shift: Complex,
    pub roots: [Complex; 3],
    pub residuals: [f64; 3],
    pub decomposition: Option<Decomposition>,
    /// Whether the input arrived as general coefficients (and was depressed
    /// here) rather than already reduced.
    pub from_general: bool,
}

/// Solves from standard coefficients A, B, C, D.
pub fn solve_from_coefficients(
    coeffs: [Complex; 4],
    opts: &SolveOptions,
) -> Result<SolvedCubic, CubicError> {
    let general = reduction::normalize(coeffs[0], coeffs[1], coeffs[2], coeffs[3])?;
    let record = reduction::depress(&general);
    let result = sylvester::solve_reduced(&record.reduced, opts)?;
    let roots = reduction::lift_roots(result.roots, record.shift);
    let residuals = roots.map(|x| general.residual(x));
    Ok(SolvedCubic {
        classification: result.classification,
        p: record.reduced.p,
        q: record.reduced.q,
        shift: record.shift,
        roots,
        residuals,
        decomposition: result.decomposition,
        from_general: true,
    })
}

/// Solves an already-reduced cubic x³ − 3px + q.
pub fn solve_from_reduced(
    reduced: ReducedCubic,
    opts: &SolveOptions,
) -> Result<SolvedCubic, CubicError> {
    let result = sylvester::solve_reduced(&reduced, opts)?;
    Ok(SolvedCubic {
        classification: result.classification,
        p: reduced.p,
        q: reduced.q,
        shift: Complex::new(0.0, 0.0),
        roots: result.roots,
        residuals: result.residuals,
        decomposition: result.decomposition,
        from_general: false,
    })
}

pub fn exit_code_for(error: &CubicError) -> i32 {
    match error {
        CubicError::DegenerateLeadingCoefficient | CubicError::NonFinite { .. } => {
            exit_code::DEGENERATE_INPUT
        }
        CubicError::CoincidentResolventRoots
        | CubicError::UnitRatioDegeneracy
        | CubicError::NoConvergence { .. } => exit_code::INTERNAL_DEGENERACY,
    }
}

/// Shortest round-trip decimal for a residual, scientific when small; the
/// same rendering the JSON output uses.
pub fn render_residual(value: f64) -> String {
    serde_json::to_string(&value).unwrap_or_else(|_| "null".to_owned())
}

pub fn write_solution_text(out: &mut dyn Write, solved: &SolvedCubic) -> std::io::Result<()> {
    writeln!(out, "classification: {}", solved.classification.name())?;
    if solved.from_general {
        writeln!(out, "p: {}", render_complex(solved.p))?;
        writeln!(out, "q: {}", render_complex(solved.q))?;
        writeln!(out, "shift: {}", render_complex(solved.shift))?;
    }
    for (root, residual) in solved.roots.iter().zip(solved.residuals) {
        writeln!(
            out,
            "root: {} residual: {}",
            render_complex(*root),
            render_residual(residual)
        )?;
    }
    Ok(())
}

pub fn write_decomposition_text(
    out: &mut dyn Write,
    solved: &SolvedCubic,
    d: &Decomposition,
) -> std::io::Result<()> {
    writeln!(out, "classification: {}", solved.classification.name())?;
    if solved.from_general {
        writeln!(out, "p: {}", render_complex(solved.p))?;
        writeln!(out, "q: {}", render_complex(solved.q))?;
        writeln!(out, "shift: {}", render_complex(solved.shift))?;
    }
    writeln!(out, "r: {}", render_complex(d.r))?;
    writeln!(out, "s: {}", render_complex(d.s))?;
    writeln!(out, "alpha: {}", render_complex(d.alpha))?;
    writeln!(out, "beta: {}", render_complex(d.beta))?;
    writeln!(
        out,
        "identity: f(x) = {}*(x - {})^3 + {}*(x - {})^3",
        render_complex(d.alpha),
        render_complex(d.r),
        render_complex(d.beta),
        render_complex(d.s),
    )?;
    Ok(())
}

pub fn write_reduction_text(
    out: &mut dyn Write,
    record: &reduction::DepressionRecord,
) -> std::io::Result<()> {
    writeln!(out, "p: {}", render_complex(record.reduced.p))?;
    writeln!(out, "q: {}", render_complex(record.reduced.q))?;
    writeln!(out, "shift: {}", render_complex(record.shift))?;
    Ok(())
}

/// The check command's residual source: either a general cubic or a
/// reduced one.
pub enum CheckTarget {
    General(GeneralCubic),
    Reduced(ReducedCubic),
}

impl CheckTarget {
    pub fn residual(&self, x: Complex) -> f64 {
        match self {
            CheckTarget::General(g) => g.residual(x),
            CheckTarget::Reduced(rc) => sylvester::residual(x, rc),
        }
    }
}

pub fn run_check(
    out: &mut dyn Write,
    target: &CheckTarget,
    roots: [Complex; 3],
    tol: f64,
) -> std::io::Result<i32> {
    let mut all_within = true;
    for root in roots {
        let residual = target.residual(root);
        writeln!(
            out,
            "root: {} residual: {}",
            render_complex(root),
            render_residual(residual)
        )?;
        if !(residual <= tol) {
            all_within = false;
        }
    }
    if all_within {
        writeln!(out, "PASS (tol {})", render_residual(tol))?;
        Ok(exit_code::SUCCESS)
    } else {
        writeln!(out, "FAIL (tol {})", render_residual(tol))?;
        Ok(exit_code::CHECK_FAILED)
    }
}
