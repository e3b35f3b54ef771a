//! The eigenvalue algorithm: find `α` with `ρ(T^α) = 1`, where `T^α` raises
//! each entry of `T` to the power `α`.
//!
//! For a nonnegative irreducible `T` with positive entries below 1,
//! `α ↦ ln ρ(T^α)` is convex and strictly decreasing, so the root is unique
//! and bracketed by `[0, 4]` (4 is the homogeneous dimension of the Heisenberg
//! group). The solver runs Newton's method on `ln ρ(T^α)` with a symmetric
//! difference derivative, carrying the Perron vector from one evaluation to the
//! next, and falls back to bisection if a step leaves the bracket.

use crate::error::{Error, Result};
use crate::markov::{transition_matrix, EntryConvention, TransitionMatrix};
use crate::schottky::SchottkyConfig;

/// Search interval for `α`.
pub const ALPHA_BRACKET: (f64, f64) = (0.0, 4.0);

/// Newton iteration cap.
pub const NEWTON_MAX_ITER: usize = 350;

/// Step of the symmetric difference quotient.
pub const DERIVATIVE_STEP: f64 = 1e-4;

const BISECTION_MAX_ITER: usize = 200;

/// Entrywise power with `0^α := 0`, so the support is preserved even at `α = 0`.
pub fn entrywise_power(t: &TransitionMatrix, alpha: f64) -> Result<TransitionMatrix> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::Domain(format!(
            "entrywise power needs a finite alpha >= 0, got {alpha}"
        )));
    }
    Ok(powered(t, alpha))
}

fn powered(t: &TransitionMatrix, alpha: f64) -> TransitionMatrix {
    if alpha == 1.0 {
        return t.clone();
    }
    t.map_positive(|x| x.powf(alpha))
}

/// Power-iteration settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    /// Stop when the Collatz–Wielandt bounds agree to `tol · max(1, ρ)`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerIteration {
    fn default() -> Self {
        PowerIteration {
            tol: 1e-12,
            max_iter: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerronRoot {
    pub rho: f64,
    /// Positive eigenvector normalized to unit sum.
    pub vector: Vec<f64>,
    pub iterations: usize,
}

/// Perron root and vector of an irreducible nonnegative matrix.
pub fn spectral_radius(t: &TransitionMatrix, start: &[f64]) -> Result<PerronRoot> {
    spectral_radius_with(t, start, &PowerIteration::default())
}

pub fn spectral_radius_with(
    t: &TransitionMatrix,
    start: &[f64],
    settings: &PowerIteration,
) -> Result<PerronRoot> {
    let n = t.dim();
    if start.len() != n {
        return Err(Error::Domain(format!(
            "start vector has length {}, matrix has dimension {n}",
            start.len()
        )));
    }
    if start.iter().any(|&x| !(x.is_finite() && x > 0.0)) {
        return Err(Error::Domain(
            "start vector must be strictly positive".into(),
        ));
    }
    if !t.is_strongly_connected() {
        return Err(Error::Structural(
            "support of the matrix is not strongly connected".into(),
        ));
    }
    if n == 1 {
        return Ok(PerronRoot {
            rho: t.get(0, 0),
            vector: vec![1.0],
            iterations: 0,
        });
    }

    // T + sI is primitive with the same Perron vector; the shift damps the
    // rotating part of the spectrum for periodic supports.
    let shift = t.row_sums().iter().sum::<f64>() / n as f64;
    let total: f64 = start.iter().sum();
    let mut x: Vec<f64> = start.iter().map(|v| v / total).collect();
    let mut y = vec![0.0; n];

    for iteration in 1..=settings.max_iter {
        t.mul_vec(&x, &mut y);
        let (lo, hi) = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| yi / xi)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                (lo.min(r), hi.max(r))
            });
        if hi - lo <= settings.tol * hi.max(1.0) {
            return Ok(PerronRoot {
                rho: 0.5 * (lo + hi),
                vector: x,
                iterations: iteration,
            });
        }
        let mut sum = 0.0;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi + shift * *xi;
            sum += *xi;
        }
        x.iter_mut().for_each(|xi| *xi /= sum);
    }
    Err(Error::Convergence(format!(
        "power iteration did not reach {:e} within {} iterations",
        settings.tol, settings.max_iter
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Newton,
    Bisection,
}

impl SolveMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMethod::Newton => "newton",
            SolveMethod::Bisection => "bisection",
        }
    }
}

/// Outcome of solving `ρ(T^α) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaSolve {
    pub alpha: f64,
    pub rho_at_alpha: f64,
    pub iterations: usize,
    /// The method that produced `alpha`.
    pub method: SolveMethod,
    /// `|rho_at_alpha − 1| ≤ tol`.
    pub converged: bool,
}

/// Evaluates `ρ(T^α)` with a warm-started Perron vector.
struct RhoCurve<'a> {
    t: &'a TransitionMatrix,
    settings: PowerIteration,
    vector: Vec<f64>,
}

impl RhoCurve<'_> {
    fn rho(&mut self, alpha: f64) -> Result<f64> {
        let root = spectral_radius_with(&powered(self.t, alpha), &self.vector, &self.settings)?;
        self.vector = root.vector;
        Ok(root.rho)
    }
}

fn check_solvable(t: &TransitionMatrix, tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if t.max_entry() >= 1.0 {
        return Err(Error::Structural(format!(
            "entries must be below 1 for rho(T^alpha) to decrease (max {})",
            t.max_entry()
        )));
    }
    Ok(())
}

/// Certifies `ρ(T⁰) ≥ 1 > ρ(T⁴)`. Returns the solution early when `α = 0` already solves.
fn certify_bracket(curve: &mut RhoCurve<'_>, tol: f64) -> Result<Option<AlphaSolve>> {
    let (lo, hi) = ALPHA_BRACKET;
    let rho_lo = curve.rho(lo)?;
    if (rho_lo - 1.0).abs() <= tol {
        return Ok(Some(AlphaSolve {
            alpha: lo,
            rho_at_alpha: rho_lo,
            iterations: 0,
            method: SolveMethod::Newton,
            converged: true,
        }));
    }
    if rho_lo < 1.0 {
        return Err(Error::Structural(format!(
            "rho of the support is {rho_lo} < 1; no root in [{lo}, {hi}]"
        )));
    }
    let rho_hi = curve.rho(hi)?;
    if rho_hi >= 1.0 {
        return Err(Error::Structural(format!(
            "rho(T^{hi}) = {rho_hi} >= 1; no root in [{lo}, {hi}]"
        )));
    }
    Ok(None)
}

fn power_settings(tol: f64) -> PowerIteration {
    PowerIteration {
        tol: (0.01 * tol).clamp(1e-14, 1e-12),
        ..PowerIteration::default()
    }
}

/// Solves `ρ(T^α) = 1` by Newton's method from `alpha0`, with bisection fallback.
pub fn solve_alpha(t: &TransitionMatrix, alpha0: f64, tol: f64) -> Result<AlphaSolve> {
    check_solvable(t, tol)?;
    let mut curve = RhoCurve {
        t,
        settings: power_settings(tol),
        vector: vec![1.0 / t.dim() as f64; t.dim()],
    };
    if let Some(done) = certify_bracket(&mut curve, tol)? {
        return Ok(done);
    }

    let (mut lo, mut hi) = ALPHA_BRACKET;
    let mut alpha = if alpha0.is_finite() {
        alpha0.clamp(lo, hi)
    } else {
        1.0
    };
    let mut iterations = 0;
    while iterations < NEWTON_MAX_ITER {
        iterations += 1;
        let rho = curve.rho(alpha)?;
        if (rho - 1.0).abs() <= tol {
            return Ok(AlphaSolve {
                alpha,
                rho_at_alpha: rho,
                iterations,
                method: SolveMethod::Newton,
                converged: true,
            });
        }
        if rho > 1.0 {
            lo = lo.max(alpha);
        } else {
            hi = hi.min(alpha);
        }
        let forward = curve.rho(alpha + DERIVATIVE_STEP)?;
        let backward = curve.rho(alpha - DERIVATIVE_STEP)?;
        let slope = (forward.ln() - backward.ln()) / (2.0 * DERIVATIVE_STEP);
        if !(slope.is_finite() && slope < 0.0) {
            break;
        }
        let next = alpha - rho.ln() / slope;
        if !(next >= ALPHA_BRACKET.0 && next <= ALPHA_BRACKET.1) {
            break;
        }
        alpha = next;
    }

    let mut solve = bisect(&mut curve, lo, hi, tol)?;
    solve.iterations += iterations;
    Ok(solve)
}

/// Solves `ρ(T^α) = 1` by bisection on `[0, 4]` only.
pub fn solve_alpha_bisection(t: &TransitionMatrix, tol: f64) -> Result<AlphaSolve> {
    check_solvable(t, tol)?;
    let mut curve = RhoCurve {
        t,
        settings: power_settings(tol),
        vector: vec![1.0 / t.dim() as f64; t.dim()],
    };
    if let Some(mut done) = certify_bracket(&mut curve, tol)? {
        done.method = SolveMethod::Bisection;
        return Ok(done);
    }
    bisect(&mut curve, ALPHA_BRACKET.0, ALPHA_BRACKET.1, tol)
}

/// Bisection on a bracket with `ρ(lo) > 1 > ρ(hi)`.
fn bisect(curve: &mut RhoCurve<'_>, mut lo: f64, mut hi: f64, tol: f64) -> Result<AlphaSolve> {
    let mut last = (0.5 * (lo + hi), f64::NAN);
    let mut spent = 0;
    for iteration in 1..=BISECTION_MAX_ITER {
        spent = iteration;
        let mid = 0.5 * (lo + hi);
        let rho = curve.rho(mid)?;
        last = (mid, rho);
        if (rho - 1.0).abs() <= tol {
            return Ok(AlphaSolve {
                alpha: mid,
                rho_at_alpha: rho,
                iterations: iteration,
                method: SolveMethod::Bisection,
                converged: true,
            });
        }
        if rho > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi.max(1.0) {
            break;
        }
    }
    Ok(AlphaSolve {
        alpha: last.0,
        rho_at_alpha: last.1,
        iterations: spent,
        method: SolveMethod::Bisection,
        converged: false,
    })
}

/// Depth-`depth` estimate of the limit-set dimension.
pub fn dimension(
    cfg: &SchottkyConfig,
    depth: usize,
    tol: f64,
    convention: EntryConvention,
) -> Result<AlphaSolve> {
    let t = transition_matrix(cfg, depth, convention)?;
    solve_alpha(&t, 1.0, tol)
}
