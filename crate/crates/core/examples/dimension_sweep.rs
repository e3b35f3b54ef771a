//! Dimension curves of both families, written as CSV.
//!
//! cargo run --release --example dimension_sweep -- [out_dir]

use schottky_dim::cli::sweep_csv;
use schottky_dim::markov::EntryConvention;
use schottky_dim::schottky::Family;

fn main() {
    let out_dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());
    for family in [Family::Symmetric, Family::RCircle] {
        let (_, hi) = family.range();
        let csv = sweep_csv(family, 0.05, hi - 0.05, 50, 4, 1e-10, EntryConvention::Det)
            .unwrap_or_else(|f| panic!("{f}"));
        let path = format!("{out_dir}/{}_sweep.csv", family.name());
        std::fs::write(&path, &csv).expect("write csv");

        let alphas: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        let increasing = alphas.windows(2).all(|w| w[1] > w[0]);
        println!(
            "{path}: alpha from {:.5} to {:.5}, strictly increasing: {increasing}",
            alphas[0],
            alphas[alphas.len() - 1]
        );
    }
}
