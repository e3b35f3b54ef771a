//! Build a configuration by hand, save it as JSON, read it back and estimate its dimension.
//!
//! cargo run --example custom_config

use num_complex::Complex64;
use schottky_dim::config::{ConfigFile, Metadata};
use schottky_dim::heisenberg::{BoundaryPoint, ReflectionGenerator};
use schottky_dim::markov::EntryConvention;
use schottky_dim::schottky::SchottkyConfig;
use schottky_dim::spectral::dimension;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Four chains of radius 1 around the origin, with different chain rotations.
    let chains = [
        ((3.0, 0.0, 0.0), Complex64::new(1.0, 0.0)),
        ((-3.0, 0.0, 0.0), Complex64::new(0.0, 1.0)),
        ((0.0, 3.0, 0.5), Complex64::from_polar(1.0, 0.9)),
        ((0.0, -3.0, -0.5), Complex64::from_polar(1.0, 2.5)),
    ];
    let generators = chains
        .iter()
        .map(|&((re, im, v), lambda)| {
            ReflectionGenerator::new(BoundaryPoint::from_parts(re, im, v), lambda)
        })
        .collect::<schottky_dim::Result<Vec<_>>>()?;
    let cfg = SchottkyConfig::new(generators)?;
    println!("verdict: {}", cfg.validity().verdict.as_str());

    let file = ConfigFile::from_schottky(
        &cfg,
        Some(Metadata {
            name: Some("four chains".into()),
            description: None,
        }),
    );
    let path = std::env::temp_dir().join("four_chains.json");
    file.write(&path)?;
    let reread = ConfigFile::read(&path)?.to_schottky()?;

    for depth in 1..=5 {
        let a = dimension(&cfg, depth, 1e-12, EntryConvention::Det)?.alpha;
        let b = dimension(&reread, depth, 1e-12, EntryConvention::Det)?.alpha;
        assert_eq!(a, b);
        println!("depth {depth}: alpha = {a:.10}");
    }
    println!("round trip through {} is exact", path.display());
    Ok(())
}
