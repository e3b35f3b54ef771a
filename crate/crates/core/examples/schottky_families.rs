//! The two built-in families and the disjointness report of their isometric balls.
//!
//! cargo run --example schottky_families

use schottky_dim::schottky::{Family, RCIRCLE_RANGE, SYMMETRIC_RANGE};

fn main() -> schottky_dim::Result<()> {
    println!(
        "symmetric family on {:?}, rcircle family on {:?}\n",
        SYMMETRIC_RANGE, RCIRCLE_RANGE
    );
    for family in [Family::Symmetric, Family::RCircle] {
        println!("{}", family.name());
        println!("{:>6}  {:>12}  verdict", "theta", "min margin");
        let (_, hi) = family.range();
        for k in 1..=8 {
            let theta = hi * k as f64 / 9.0;
            let cfg = family.build(theta)?;
            let report = cfg.validity();
            println!(
                "{theta:>6.3}  {:>12.6}  {}",
                report.min_margin,
                report.verdict.as_str()
            );
        }
        println!();
    }

    // Above ~0.64 the rcircle balls fail the center-distance test but stay
    // disjoint until ~0.68; the search looks for a common point.
    for theta in [0.66, 0.7] {
        let report = Family::RCircle.build(theta)?.validity().clone();
        for pair in report.pairs.iter().filter(|p| p.margin <= 0.0) {
            println!(
                "rcircle {theta}: pair {}-{} margin {:.4}, best max(d/r) = {:.4}",
                pair.i,
                pair.j,
                pair.margin,
                pair.overlap_ratio.unwrap()
            );
        }
        println!("  verdict {}", report.verdict.as_str());
    }
    Ok(())
}
