//! Schottky configurations of complex reflections.
//!
//! A configuration is a list of at least two chain reflections. It is a
//! Schottky configuration when the open Cygan balls bounded by the isometric
//! spheres are pairwise disjoint. [`validate`] checks the sufficient condition
//! `d(c_i, c_j) > r_i + r_j`; when that fails it searches for a point lying in
//! both balls, so a report distinguishes a certified overlap from a pair the
//! sufficient test merely cannot confirm.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::heisenberg::{cygan_distance, BoundaryPoint, ReflectionGenerator};
use crate::optimize::nelder_mead;

/// Open angle interval accepted by [`symmetric_family`].
pub const SYMMETRIC_RANGE: (f64, f64) = (0.0, PI / 3.0);

/// Open angle interval accepted by [`rcircle_family`].
pub const RCIRCLE_RANGE: (f64, f64) = (0.0, 9.0 * PI / 40.0);

/// Center and radius of a generator's isometric sphere.
pub fn isometric_sphere(g: &ReflectionGenerator) -> (BoundaryPoint, f64) {
    (g.center(), g.radius())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every pair passes `d(c_i, c_j) > r_i + r_j`.
    Valid,
    /// Some pair fails the sufficient test but no common point was found.
    Unconfirmed,
    /// Two balls share a point (or two centers coincide).
    Overlapping,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::Unconfirmed => "unconfirmed",
            Verdict::Overlapping => "overlapping",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairMargin {
    pub i: usize,
    pub j: usize,
    pub center_distance: f64,
    pub radius_sum: f64,
    /// `center_distance − radius_sum`; positive passes the sufficient test.
    pub margin: f64,
    /// Smallest `max(d(p,c_i)/r_i, d(p,c_j)/r_j)` found by the overlap search,
    /// when the search ran. Below 1 means the balls intersect.
    pub overlap_ratio: Option<f64>,
    pub overlap_witness: Option<BoundaryPoint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityReport {
    pub pairs: Vec<PairMargin>,
    pub min_margin: f64,
    pub verdict: Verdict,
}

impl ValidityReport {
    /// The sufficient disjointness test passes for every pair.
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

/// Checks pairwise disjointness of the isometric balls.
pub fn validate(generators: &[ReflectionGenerator]) -> Result<ValidityReport> {
    if generators.len() < 2 {
        return Err(Error::Configuration(
            "at least 2 chains required".to_string(),
        ));
    }
    let mut pairs = Vec::new();
    let mut verdict = Verdict::Valid;
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let pair = check_pair(i, j, &generators[i], &generators[j])?;
            if pair.margin <= 0.0 {
                let next = if pair.overlap_witness.is_some() {
                    Verdict::Overlapping
                } else {
                    Verdict::Unconfirmed
                };
                if next == Verdict::Overlapping || verdict == Verdict::Valid {
                    verdict = next;
                }
            }
            pairs.push(pair);
        }
    }
    let min_margin = pairs.iter().map(|p| p.margin).fold(f64::INFINITY, f64::min);
    Ok(ValidityReport {
        pairs,
        min_margin,
        verdict,
    })
}

fn check_pair(
    i: usize,
    j: usize,
    a: &ReflectionGenerator,
    b: &ReflectionGenerator,
) -> Result<PairMargin> {
    let center_distance = cygan_distance(a.center(), b.center())?;
    let radius_sum = a.radius() + b.radius();
    let margin = center_distance - radius_sum;
    let mut pair = PairMargin {
        i,
        j,
        center_distance,
        radius_sum,
        margin,
        overlap_ratio: None,
        overlap_witness: None,
    };
    if margin > 0.0 {
        return Ok(pair);
    }
    if center_distance == 0.0 {
        pair.overlap_ratio = Some(0.0);
        pair.overlap_witness = Some(a.center());
        return Ok(pair);
    }
    let (ratio, witness) = overlap_search(a, b);
    pair.overlap_ratio = Some(ratio);
    if ratio < 1.0 {
        pair.overlap_witness = Some(witness);
    }
    Ok(pair)
}

/// Minimizes `max(d(p,c_a)/r_a, d(p,c_b)/r_b)` over finite `p`.
fn overlap_search(a: &ReflectionGenerator, b: &ReflectionGenerator) -> (f64, BoundaryPoint) {
    let to_point = |x: &[f64; 3]| BoundaryPoint::Finite {
        zeta: Complex64::new(x[0], x[1]),
        v: x[2],
    };
    let objective = |x: &[f64; 3]| {
        let p = to_point(x);
        let da = cygan_distance(p, a.center()).unwrap_or(f64::INFINITY) / a.radius();
        let db = cygan_distance(p, b.center()).unwrap_or(f64::INFINITY) / b.radius();
        da.max(db)
    };
    let (za, va) = a.center().coords().expect("finite center");
    let (zb, vb) = b.center().coords().expect("finite center");
    let step = 0.5 * a.radius().min(b.radius());
    let split = a.radius() / (a.radius() + b.radius());

    let mut best = ([za.re, za.im, va], f64::INFINITY);
    for s in [split, 0.25, 0.5, 0.75] {
        let start = [
            za.re + s * (zb.re - za.re),
            za.im + s * (zb.im - za.im),
            va + s * (vb - va),
        ];
        let mut run = nelder_mead(objective, start, step, 4000);
        // restart once from the optimum to escape a collapsed simplex
        let again = nelder_mead(objective, run.0, 0.1 * step, 4000);
        if again.1 < run.1 {
            run = again;
        }
        if run.1 < best.1 {
            best = run;
        }
    }
    (best.1, to_point(&best.0))
}

/// Generators of a group acting on the Heisenberg boundary, plus their
/// validity report.
#[derive(Debug, Clone, PartialEq)]
pub struct SchottkyConfig {
    generators: Vec<ReflectionGenerator>,
    validity: ValidityReport,
}

impl SchottkyConfig {
    pub fn new(generators: Vec<ReflectionGenerator>) -> Result<Self> {
        let validity = validate(&generators)?;
        Ok(SchottkyConfig {
            generators,
            validity,
        })
    }

    pub fn generators(&self) -> &[ReflectionGenerator] {
        &self.generators
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn validity(&self) -> &ValidityReport {
        &self.validity
    }

    /// Fails unless the balls may be disjoint, i.e. rejects a certified overlap.
    pub fn require_usable(&self) -> Result<()> {
        if self.validity.verdict == Verdict::Overlapping {
            let worst = self
                .validity
                .pairs
                .iter()
                .find(|p| p.overlap_witness.is_some())
                .expect("overlapping verdict has a witness");
            return Err(Error::Configuration(format!(
                "isometric balls {} and {} overlap (margin {:.6e})",
                worst.i, worst.j, worst.margin
            )));
        }
        Ok(())
    }

    /// Conjugates every generator by the translation `T_by`.
    pub fn conjugate_by_translation(&self, by: BoundaryPoint) -> Result<Self> {
        let generators = self
            .generators
            .iter()
            .map(|g| g.conjugate_by_translation(by))
            .collect::<Result<Vec<_>>>()?;
        Self::new(generators)
    }

    /// Conjugates every generator by the dilatation `d_mu`.
    pub fn conjugate_by_dilation(&self, mu: Complex64) -> Result<Self> {
        let generators = self
            .generators
            .iter()
            .map(|g| g.conjugate_by_dilation(mu))
            .collect::<Result<Vec<_>>>()?;
        Self::new(generators)
    }
}

fn check_angle(theta: f64, range: (f64, f64), family: &str) -> Result<()> {
    if !(theta > range.0 && theta < range.1) {
        return Err(Error::Domain(format!(
            "{family} family needs theta in ({}, {}), got {theta}",
            range.0, range.1
        )));
    }
    Ok(())
}

/// Three chains with centers `sec θ · {1, ω, ω²}` in `ℂ × {0}` and radius `tan θ`.
pub fn symmetric_family(theta: f64) -> Result<SchottkyConfig> {
    check_angle(theta, SYMMETRIC_RANGE, "symmetric")?;
    let sec = 1.0 / theta.cos();
    let lambda = Complex64::new(theta.tan(), 0.0);
    let generators = (0..3)
        .map(|k| {
            let center = Complex64::from_polar(sec, 2.0 * PI * k as f64 / 3.0);
            ReflectionGenerator::new(BoundaryPoint::new(center, 0.0)?, lambda)
        })
        .collect::<Result<Vec<_>>>()?;
    SchottkyConfig::new(generators)
}

/// Three chains with centers `(0, sec²θ)`, `(0, −sec²θ)`, `(−i sec θ, 0)` and
/// radius `tan θ`, placed near the standard finite ℝ-circle.
pub fn rcircle_family(theta: f64) -> Result<SchottkyConfig> {
    check_angle(theta, RCIRCLE_RANGE, "rcircle")?;
    let sec = 1.0 / theta.cos();
    let lambda = Complex64::new(theta.tan(), 0.0);
    let centers = [
        BoundaryPoint::new(Complex64::new(0.0, 0.0), sec * sec)?,
        BoundaryPoint::new(Complex64::new(0.0, 0.0), -sec * sec)?,
        BoundaryPoint::new(Complex64::new(0.0, -sec), 0.0)?,
    ];
    let generators = centers
        .into_iter()
        .map(|c| ReflectionGenerator::new(c, lambda))
        .collect::<Result<Vec<_>>>()?;
    SchottkyConfig::new(generators)
}

/// The two built-in one-parameter families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Symmetric,
    RCircle,
}

impl Family {
    pub fn range(&self) -> (f64, f64) {
        match self {
            Family::Symmetric => SYMMETRIC_RANGE,
            Family::RCircle => RCIRCLE_RANGE,
        }
    }

    pub fn build(&self, theta: f64) -> Result<SchottkyConfig> {
        match self {
            Family::Symmetric => symmetric_family(theta),
            Family::RCircle => rcircle_family(theta),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Symmetric => "symmetric",
            Family::RCircle => "rcircle",
        }
    }
}
