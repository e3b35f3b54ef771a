//! Boundary arithmetic on the Heisenberg group.
//!
//! The boundary of the complex hyperbolic plane minus the point at infinity is
//! the Heisenberg group `ℂ × ℝ` with product
//!
//! ```text
//! (ζ, v) ∗ (ξ, t) = (ζ + ξ, v + t + 2 Im(conj(ζ) ξ))
//! ```
//!
//! and the Cygan metric
//!
//! ```text
//! d((ζ₁,v₁), (ζ₂,v₂)) = | |ζ₁ − ζ₂|² + i(−v₁ + v₂ − 2 Im(conj(ζ₂) ζ₁)) |^{1/2}
//! ```
//!
//! With these two formulas the metric is invariant under *right*
//! multiplication, so [`translate`] acts on the right. Every map here is total
//! on [`BoundaryPoint`]; metric quantities reject the point at infinity.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance to a pole below which Jacobian-type quantities refuse to evaluate,
/// relative to the generator radius.
pub const SINGULARITY_TOLERANCE: f64 = 1e-12;

/// A point of `∂H²_ℂ`: a finite Heisenberg point or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite { zeta: Complex64, v: f64 },
    Infinity,
}

impl BoundaryPoint {
    /// The identity element `(0, 0)`.
    pub const ORIGIN: BoundaryPoint = BoundaryPoint::Finite {
        zeta: Complex64::new(0.0, 0.0),
        v: 0.0,
    };

    /// Builds a finite point; both coordinates must be finite reals.
    pub fn new(zeta: Complex64, v: f64) -> Result<Self> {
        if !(zeta.re.is_finite() && zeta.im.is_finite() && v.is_finite()) {
            return Err(Error::Domain(format!(
                "non-finite Heisenberg coordinates ({zeta}, {v})"
            )));
        }
        Ok(BoundaryPoint::Finite { zeta, v })
    }

    /// Shorthand for a finite point from three reals. Panics on non-finite input.
    pub fn from_parts(re: f64, im: f64, v: f64) -> Self {
        Self::new(Complex64::new(re, im), v).expect("finite coordinates")
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    /// `(ζ, v)` for finite points.
    pub fn coords(&self) -> Option<(Complex64, f64)> {
        match *self {
            BoundaryPoint::Finite { zeta, v } => Some((zeta, v)),
            BoundaryPoint::Infinity => None,
        }
    }

    fn finite_coords(&self, what: &str) -> Result<(Complex64, f64)> {
        self.coords()
            .ok_or_else(|| Error::Domain(format!("{what} is undefined at infinity")))
    }

    /// Group inverse `(−ζ, −v)`.
    pub fn inverse(&self) -> Result<Self> {
        let (zeta, v) = self.finite_coords("group inverse")?;
        Ok(BoundaryPoint::Finite { zeta: -zeta, v: -v })
    }

    /// Heisenberg gauge `|(ζ, v)|₀ = ||ζ|² + iv|^{1/2}`, i.e. distance to the origin.
    pub fn gauge(&self) -> Result<f64> {
        let (zeta, v) = self.finite_coords("Heisenberg gauge")?;
        Ok(gauge(zeta, v))
    }
}

fn gauge(zeta: Complex64, v: f64) -> f64 {
    zeta.norm_sqr().hypot(v).sqrt()
}

/// `2 Im(conj(a) b)`, the twist term of the group law.
#[inline]
fn twist(a: Complex64, b: Complex64) -> f64 {
    2.0 * (a.re * b.im - a.im * b.re)
}

/// Heisenberg product `p ∗ q`. Not commutative.
pub fn group_mul(p: BoundaryPoint, q: BoundaryPoint) -> Result<BoundaryPoint> {
    let (z1, v1) = p.finite_coords("group product")?;
    let (z2, v2) = q.finite_coords("group product")?;
    Ok(BoundaryPoint::Finite {
        zeta: z1 + z2,
        v: v1 + v2 + twist(z1, z2),
    })
}

/// Cygan distance between two finite points.
pub fn cygan_distance(p: BoundaryPoint, q: BoundaryPoint) -> Result<f64> {
    let (z1, v1) = p.finite_coords("Cygan distance")?;
    let (z2, v2) = q.finite_coords("Cygan distance")?;
    let w = -v1 + v2 - twist(z2, z1);
    Ok(gauge(z1 - z2, w))
}

/// Heisenberg translation `T_by(p) = p ∗ by`; fixes infinity.
///
/// Right multiplication is the action that preserves the Cygan metric for the
/// group law above.
pub fn translate(by: BoundaryPoint, p: BoundaryPoint) -> Result<BoundaryPoint> {
    by.finite_coords("translation vector")?;
    match p {
        BoundaryPoint::Infinity => Ok(BoundaryPoint::Infinity),
        finite => group_mul(finite, by),
    }
}

/// Complex dilatation `d_λ(ζ, v) = (λζ, |λ|² v)`; fixes infinity.
pub fn dilate(lambda: Complex64, p: BoundaryPoint) -> Result<BoundaryPoint> {
    if lambda.norm_sqr() == 0.0 || !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::Domain(format!(
            "dilation factor must be finite and nonzero, got {lambda}"
        )));
    }
    Ok(match p {
        BoundaryPoint::Infinity => BoundaryPoint::Infinity,
        BoundaryPoint::Finite { zeta, v } => BoundaryPoint::Finite {
            zeta: lambda * zeta,
            v: lambda.norm_sqr() * v,
        },
    })
}

/// Koranyi inversion `ι(ζ, v) = (−ζ / (|ζ|² − iv), −v / (|ζ|⁴ + v²))`.
///
/// Swaps the origin and infinity. Maps the unit chain `S¹ × {0}` onto itself
/// by `ζ ↦ −ζ`.
pub fn koranyi_inversion(p: BoundaryPoint) -> BoundaryPoint {
    match p {
        BoundaryPoint::Infinity => BoundaryPoint::ORIGIN,
        BoundaryPoint::Finite { zeta, v } => {
            let a = zeta.norm_sqr();
            if a == 0.0 && v == 0.0 {
                return BoundaryPoint::Infinity;
            }
            let denom = a * a + v * v;
            BoundaryPoint::Finite {
                zeta: -zeta * Complex64::new(a, v) / denom,
                v: -v / denom,
            }
        }
    }
}

/// The complex reflection in a finite chain.
///
/// The chain is `T_c D_λ (S¹ × {0})` for a center `c = (ξ, t)` and multiplier
/// `λ`. The reflection is `T_c D_λ R D_λ⁻¹ T_c⁻¹`, where
/// `R(ζ, v) = (ζ / (|ζ|² − iv), −v / (|ζ|⁴ + v²))` fixes the unit chain
/// pointwise. Its isometric sphere is the Cygan sphere of radius `|λ|` about `c`.
/// Only `|λ|` affects the map; the phase of `λ` selects a base point on the chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionGenerator {
    center_zeta: Complex64,
    center_v: f64,
    lambda: Complex64,
}

impl ReflectionGenerator {
    pub fn new(center: BoundaryPoint, lambda: Complex64) -> Result<Self> {
        let (center_zeta, center_v) = center
            .coords()
            .ok_or_else(|| Error::Domain("reflection center must be finite".into()))?;
        if lambda.norm_sqr() == 0.0 || !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::Domain(format!(
                "chain multiplier must be finite and nonzero, got {lambda}"
            )));
        }
        Ok(ReflectionGenerator {
            center_zeta,
            center_v,
            lambda,
        })
    }

    pub fn center(&self) -> BoundaryPoint {
        BoundaryPoint::Finite {
            zeta: self.center_zeta,
            v: self.center_v,
        }
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    /// Isometric-sphere radius `|λ|`.
    pub fn radius(&self) -> f64 {
        self.lambda.norm()
    }

    /// Applies the reflection. The center goes to infinity and back.
    pub fn reflect(&self, p: BoundaryPoint) -> BoundaryPoint {
        let (zeta, v) = match p {
            BoundaryPoint::Infinity => return self.center(),
            BoundaryPoint::Finite { zeta, v } => (zeta, v),
        };
        let (xi, t) = (self.center_zeta, self.center_v);
        // q = p ∗ c⁻¹
        let dz = zeta - xi;
        let w = v - t - twist(zeta, xi);
        let a = dz.norm_sqr();
        if a == 0.0 && w == 0.0 {
            return BoundaryPoint::Infinity;
        }
        let r2 = self.lambda.norm_sqr();
        let denom = a * a + w * w;
        let qz = dz * Complex64::new(a, w) * (r2 / denom);
        let qv = -r2 * r2 * w / denom;
        // back through T_c
        BoundaryPoint::Finite {
            zeta: qz + xi,
            v: qv + t + twist(qz, xi),
        }
    }

    fn pole_distance(&self, p: BoundaryPoint) -> Result<f64> {
        if p.is_infinity() {
            return Err(Error::Singularity(
                "Jacobian is not defined at infinity".into(),
            ));
        }
        let d = cygan_distance(p, self.center())?;
        if d < SINGULARITY_TOLERANCE * self.radius() {
            return Err(Error::Singularity(format!(
                "point at Cygan distance {d:e} from the reflection center"
            )));
        }
        Ok(d)
    }

    /// `|det J|` of the reflection as a map of three real variables:
    /// `|λ|⁸ / d(p, center)⁸`.
    pub fn jacobian_det(&self, p: BoundaryPoint) -> Result<f64> {
        Ok(self.distortion_factor(p)?.powi(4))
    }

    /// Local Cygan scaling factor `|λ|² / d(p, center)²`.
    pub fn distortion_factor(&self, p: BoundaryPoint) -> Result<f64> {
        let d = self.pole_distance(p)?;
        let s = self.radius() / d;
        Ok(s * s)
    }

    /// The point `T_c D_λ (e^{iθ}, 0)` of the reflection's chain.
    pub fn chain_point(&self, angle: f64) -> BoundaryPoint {
        let z = self.lambda * Complex64::from_polar(1.0, angle);
        BoundaryPoint::Finite {
            zeta: z + self.center_zeta,
            v: self.center_v + twist(z, self.center_zeta),
        }
    }

    /// Conjugate `h g h⁻¹` by the translation `T_by`.
    pub fn conjugate_by_translation(&self, by: BoundaryPoint) -> Result<Self> {
        Self::new(translate(by, self.center())?, self.lambda)
    }

    /// Conjugate `h g h⁻¹` by the dilatation `d_mu`.
    pub fn conjugate_by_dilation(&self, mu: Complex64) -> Result<Self> {
        Self::new(dilate(mu, self.center())?, mu * self.lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(re: f64, im: f64, v: f64) -> BoundaryPoint {
        BoundaryPoint::from_parts(re, im, v)
    }

    fn assert_close(p: BoundaryPoint, q: BoundaryPoint, tol: f64) {
        match (p, q) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {}
            (
                BoundaryPoint::Finite { zeta: a, v: va },
                BoundaryPoint::Finite { zeta: b, v: vb },
            ) => {
                assert!(
                    (a - b).norm() <= tol && (va - vb).abs() <= tol,
                    "{p:?} != {q:?}"
                );
            }
            _ => panic!("{p:?} != {q:?}"),
        }
    }

    fn koranyi() -> ReflectionGenerator {
        ReflectionGenerator::new(BoundaryPoint::ORIGIN, Complex64::new(1.0, 0.0)).unwrap()
    }

    #[test]
    fn group_law_examples() {
        let p = pt(0.3, -1.2, 0.7);
        assert_eq!(group_mul(BoundaryPoint::ORIGIN, p).unwrap(), p);
        assert_eq!(
            group_mul(pt(0.0, 1.0, 0.0), pt(1.0, 0.0, 0.0)).unwrap(),
            pt(1.0, 1.0, -2.0)
        );
        assert_close(
            group_mul(p, p.inverse().unwrap()).unwrap(),
            BoundaryPoint::ORIGIN,
            1e-15,
        );
    }

    #[test]
    fn group_law_rejects_infinity() {
        assert!(matches!(
            group_mul(BoundaryPoint::Infinity, BoundaryPoint::ORIGIN),
            Err(Error::Domain(_))
        ));
        assert!(BoundaryPoint::Infinity.inverse().is_err());
    }

    #[test]
    fn cygan_examples() {
        let o = BoundaryPoint::ORIGIN;
        assert_eq!(cygan_distance(o, pt(1.0, 0.0, 0.0)).unwrap(), 1.0);
        assert_eq!(cygan_distance(o, pt(0.0, 0.0, 1.0)).unwrap(), 1.0);
        let d = cygan_distance(pt(1.0, 0.0, 0.0), pt(0.0, 1.0, 0.0)).unwrap();
        assert!((d - 8f64.powf(0.25)).abs() < 1e-15);
        assert!(cygan_distance(o, BoundaryPoint::Infinity).is_err());
    }

    #[test]
    fn translation_examples() {
        assert_eq!(
            translate(pt(1.0, 0.0, 0.0), BoundaryPoint::ORIGIN).unwrap(),
            pt(1.0, 0.0, 0.0)
        );
        // right action: (1,0) ∗ (i,0)
        assert_eq!(
            translate(pt(0.0, 1.0, 0.0), pt(1.0, 0.0, 0.0)).unwrap(),
            pt(1.0, 1.0, 2.0)
        );
        assert_eq!(
            translate(pt(2.0, 1.0, 3.0), BoundaryPoint::Infinity).unwrap(),
            BoundaryPoint::Infinity
        );
        assert!(translate(BoundaryPoint::Infinity, BoundaryPoint::ORIGIN).is_err());
    }

    #[test]
    fn dilation_examples() {
        let p = pt(0.4, 0.1, -2.0);
        assert_eq!(dilate(Complex64::new(1.0, 0.0), p).unwrap(), p);
        assert_eq!(
            dilate(Complex64::new(2.0, 0.0), pt(1.0, 0.0, 1.0)).unwrap(),
            pt(2.0, 0.0, 4.0)
        );
        assert_eq!(
            dilate(Complex64::new(0.0, 1.0), pt(1.0, 0.0, 0.0)).unwrap(),
            pt(0.0, 1.0, 0.0)
        );
        assert!(dilate(Complex64::new(0.0, 0.0), p).is_err());
        assert_eq!(
            dilate(Complex64::new(3.0, 0.0), BoundaryPoint::Infinity).unwrap(),
            BoundaryPoint::Infinity
        );
    }

    #[test]
    fn koranyi_examples() {
        assert_close(
            koranyi_inversion(pt(1.0, 0.0, 0.0)),
            pt(-1.0, 0.0, 0.0),
            1e-15,
        );
        assert_close(
            koranyi_inversion(pt(0.0, 0.0, 1.0)),
            pt(0.0, 0.0, -1.0),
            1e-15,
        );
        assert_eq!(
            koranyi_inversion(BoundaryPoint::ORIGIN),
            BoundaryPoint::Infinity
        );
        assert_eq!(
            koranyi_inversion(BoundaryPoint::Infinity),
            BoundaryPoint::ORIGIN
        );
        let p = pt(0.3, -0.8, 1.7);
        assert_close(koranyi_inversion(koranyi_inversion(p)), p, 1e-14);
    }

    #[test]
    fn unit_reflection_is_koranyi_up_to_half_turn() {
        let g = koranyi();
        let minus_one = Complex64::new(-1.0, 0.0);
        for p in [pt(0.3, -0.8, 1.7), pt(2.0, 0.5, -0.1), pt(0.0, 0.0, 4.0)] {
            let expected = dilate(minus_one, koranyi_inversion(p)).unwrap();
            assert_close(g.reflect(p), expected, 1e-14);
        }
    }

    #[test]
    fn reflection_fixes_its_chain_and_swaps_pole() {
        let g = ReflectionGenerator::new(BoundaryPoint::ORIGIN, Complex64::new(2.0, 0.0)).unwrap();
        assert_close(g.reflect(pt(2.0, 0.0, 0.0)), pt(2.0, 0.0, 0.0), 1e-15);
        assert_eq!(g.reflect(g.center()), BoundaryPoint::Infinity);
        assert_eq!(g.reflect(BoundaryPoint::Infinity), g.center());

        let h = ReflectionGenerator::new(pt(1.0, 1.0, 3.0), Complex64::new(0.0, 2.0)).unwrap();
        assert_eq!(h.reflect(h.center()), BoundaryPoint::Infinity);
        for k in 0..12 {
            let c = h.chain_point(k as f64 * 0.5);
            assert_close(h.reflect(c), c, 1e-12);
            assert!((cygan_distance(c, h.center()).unwrap() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn jacobian_and_distortion_examples() {
        let g = koranyi();
        assert!((g.jacobian_det(pt(1.0, 0.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((g.jacobian_det(pt(0.0, 0.0, 2.0)).unwrap() - 1.0 / 16.0).abs() < 1e-15);
        assert!((g.distortion_factor(pt(1.0, 0.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((g.distortion_factor(pt(0.0, 0.0, 2.0)).unwrap() - 0.5).abs() < 1e-15);

        let g2 = ReflectionGenerator::new(BoundaryPoint::ORIGIN, Complex64::new(2.0, 0.0)).unwrap();
        assert!((g2.jacobian_det(pt(1.0, 0.0, 0.0)).unwrap() - 256.0).abs() < 1e-12);
        assert!((g2.distortion_factor(pt(1.0, 0.0, 0.0)).unwrap() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn jacobian_singularities() {
        let g = koranyi();
        assert!(matches!(
            g.jacobian_det(BoundaryPoint::ORIGIN),
            Err(Error::Singularity(_))
        ));
        assert!(matches!(
            g.distortion_factor(pt(1e-13, 0.0, 0.0)),
            Err(Error::Singularity(_))
        ));
        assert!(matches!(
            g.jacobian_det(BoundaryPoint::Infinity),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn generator_rejects_bad_data() {
        assert!(
            ReflectionGenerator::new(BoundaryPoint::Infinity, Complex64::new(1.0, 0.0)).is_err()
        );
        assert!(ReflectionGenerator::new(BoundaryPoint::ORIGIN, Complex64::new(0.0, 0.0)).is_err());
        assert!(BoundaryPoint::new(Complex64::new(f64::NAN, 0.0), 0.0).is_err());
    }

    #[test]
    fn unit_chain_preserved_by_koranyi() {
        for k in 0..100 {
            let t = k as f64 * std::f64::consts::TAU / 100.0;
            let p = BoundaryPoint::Finite {
                zeta: Complex64::from_polar(1.0, t),
                v: 0.0,
            };
            let (z, v) = koranyi_inversion(p).coords().unwrap();
            assert!((z.norm() - 1.0).abs() < 1e-12 && v.abs() < 1e-12);
        }
    }
}
