//! Group law, Cygan metric, Koranyi inversion and a complex reflection.
//!
//! cargo run --example heisenberg_geometry

use num_complex::Complex64;
use schottky_dim::heisenberg::{
    cygan_distance, dilate, group_mul, koranyi_inversion, translate, BoundaryPoint,
    ReflectionGenerator,
};

fn main() -> schottky_dim::Result<()> {
    let p = BoundaryPoint::from_parts(0.0, 1.0, 0.0);
    let q = BoundaryPoint::from_parts(1.0, 0.0, 0.0);
    println!(
        "(i,0) * (1,0)        = {:?}",
        group_mul(p, q)?.coords().unwrap()
    );
    println!(
        "d((0,0), (0,0,1))    = {}",
        cygan_distance(
            BoundaryPoint::ORIGIN,
            BoundaryPoint::from_parts(0.0, 0.0, 1.0)
        )?
    );
    println!("gauge of (1, 0)      = {}", q.gauge()?);

    // Translations are isometries.
    let a = BoundaryPoint::from_parts(0.3, -1.2, 0.7);
    let b = BoundaryPoint::from_parts(-0.5, 0.4, -2.0);
    let by = BoundaryPoint::from_parts(2.0, 1.0, 5.0);
    println!(
        "d(a,b) = {:.15}, d(Ta,Tb) = {:.15}",
        cygan_distance(a, b)?,
        cygan_distance(translate(by, a)?, translate(by, b)?)?
    );
    // Dilations scale distances by |λ|.
    let lambda = Complex64::new(1.5, 2.0);
    println!(
        "d(Da,Db) / d(a,b) = {:.15} (|λ| = {})",
        cygan_distance(dilate(lambda, a)?, dilate(lambda, b)?)? / cygan_distance(a, b)?,
        lambda.norm()
    );

    println!("ι(0,0) = {:?}", koranyi_inversion(BoundaryPoint::ORIGIN));
    println!("ι(∞)   = {:?}", koranyi_inversion(BoundaryPoint::Infinity));

    let g = ReflectionGenerator::new(
        BoundaryPoint::from_parts(1.0, -1.0, 0.5),
        Complex64::new(0.0, 2.0),
    )?;
    let x = BoundaryPoint::from_parts(3.0, 0.5, -1.0);
    let gx = g.reflect(x);
    let dx = cygan_distance(x, g.center())?;
    let dgx = cygan_distance(gx, g.center())?;
    println!(
        "\nreflection with center (1-i, 0.5), λ = 2i, radius {}",
        g.radius()
    );
    println!("d(x,c) · d(gx,c) = {:.15} = r²", dx * dgx);
    println!(
        "g(g(x)) - x      = {:.3e}",
        cygan_distance(g.reflect(gx), x)?
    );
    println!(
        "chain point fixed: {:.3e}",
        cygan_distance(g.chain_point(0.8), g.reflect(g.chain_point(0.8)))?
    );
    println!("distortion at x  = {}", g.distortion_factor(x)?);
    println!("|det J| at x     = {}", g.jacobian_det(x)?);
    Ok(())
}
