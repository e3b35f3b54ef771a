#![allow(dead_code)]

use num_complex::Complex64;
use schottky_dim::heisenberg::{dilate, translate, BoundaryPoint, ReflectionGenerator};
use schottky_dim::schottky::SchottkyConfig;

/// The point of the Cygan sphere of `g` scaled by `s`: `d(p, center) = s · radius` exactly
/// up to rounding. `phi ∈ [−π/2, π/2]` picks the latitude, `arg` the longitude.
pub fn sphere_point(g: &ReflectionGenerator, s: f64, phi: f64, arg: f64) -> BoundaryPoint {
    let unit = BoundaryPoint::Finite {
        zeta: Complex64::from_polar(phi.cos().sqrt(), arg),
        v: phi.sin(),
    };
    translate(g.center(), dilate(g.lambda() * s, unit).unwrap()).unwrap()
}

pub fn generator(re: f64, im: f64, v: f64, radius: f64, arg: f64) -> ReflectionGenerator {
    ReflectionGenerator::new(
        BoundaryPoint::from_parts(re, im, v),
        Complex64::from_polar(radius, arg),
    )
    .unwrap()
}

/// Largest coordinate difference, relative to the size of the points.
pub fn coord_gap(p: BoundaryPoint, q: BoundaryPoint) -> f64 {
    match (p.coords(), q.coords()) {
        (Some((a, u)), Some((b, w))) => {
            let scale = 1.0f64.max(a.norm()).max(u.abs().sqrt());
            ((a - b).norm() / scale).max((u - w).abs() / (scale * scale))
        }
        (None, None) => 0.0,
        _ => f64::INFINITY,
    }
}

pub fn two_chains() -> SchottkyConfig {
    SchottkyConfig::new(vec![
        generator(3.0, 0.0, 0.0, 1.0, 0.0),
        generator(-3.0, 0.0, 0.0, 1.0, 0.4),
    ])
    .unwrap()
}

pub fn four_chains() -> SchottkyConfig {
    SchottkyConfig::new(vec![
        generator(3.0, 0.0, 0.0, 1.0, 0.0),
        generator(-3.0, 0.0, 0.0, 1.0, std::f64::consts::FRAC_PI_2),
        generator(0.0, 3.0, 0.5, 1.0, 0.9),
        generator(0.0, -3.0, -0.5, 1.0, 2.5),
    ])
    .unwrap()
}
