//! The transition matrix of distortion factors under both entry conventions.
//!
//! cargo run --example transition_matrix

use schottky_dim::markov::{transition_matrix, EntryConvention};
use schottky_dim::schottky::symmetric_family;

fn main() -> schottky_dim::Result<()> {
    let theta = std::f64::consts::PI / 6.0;
    let cfg = symmetric_family(theta)?;
    println!("sin^4(theta)/12 = {:.6}", theta.sin().powi(4) / 12.0);
    for convention in [EntryConvention::Det, EntryConvention::Cygan] {
        let t = transition_matrix(&cfg, 1, convention)?;
        println!("\ndepth 1, {convention}:");
        for row in t.to_dense() {
            println!(
                "  {}",
                row.iter()
                    .map(|x| format!("{x:.6}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            );
        }
    }

    let t = transition_matrix(&cfg, 3, EntryConvention::Det)?;
    let words = t.words().unwrap();
    println!(
        "\ndepth 3: {} x {}, sparse = {}",
        t.dim(),
        t.dim(),
        t.is_sparse()
    );
    for (i, word) in words.iter().enumerate().take(4) {
        let row: Vec<String> = t
            .row(i)
            .iter()
            .map(|&(j, x)| format!("{} {:.3e}", words[j], x))
            .collect();
        println!("  {word}: {}", row.join(", "));
    }
    Ok(())
}
