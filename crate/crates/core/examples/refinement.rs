//! Depth refinement of the estimate for the symmetric family at θ = π/6.
//!
//! cargo run --release --example refinement

use schottky_dim::markov::EntryConvention;
use schottky_dim::schottky::symmetric_family;
use schottky_dim::spectral::dimension;

fn main() -> schottky_dim::Result<()> {
    let theta = std::f64::consts::PI / 6.0;
    let cfg = symmetric_family(theta)?;
    let closed = 2f64.ln() / (12f64.ln() - 4.0 * theta.sin().ln());
    println!("closed-form depth-1 value {closed:.12}\n");
    println!(
        "{:>5} {:>7} {:>16} {:>11} {:>7}",
        "depth", "blocks", "alpha", "step", "digits"
    );
    let mut prev: Option<f64> = None;
    for depth in 1..=10 {
        let s = dimension(&cfg, depth, 1e-14, EntryConvention::Det)?;
        let blocks = 3 * 2usize.pow(depth as u32 - 1);
        match prev {
            Some(p) => {
                let step = (s.alpha - p).abs();
                println!(
                    "{depth:>5} {blocks:>7} {:>16.13} {step:>11.3e} {:>7.2}",
                    s.alpha,
                    -step.log10()
                );
            }
            None => println!("{depth:>5} {blocks:>7} {:>16.13}", s.alpha),
        }
        prev = Some(s.alpha);
    }
    Ok(())
}
