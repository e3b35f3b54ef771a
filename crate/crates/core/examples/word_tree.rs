//! Reduced words and their tagpoints, level by level.
//!
//! cargo run --example word_tree

use schottky_dim::heisenberg::cygan_distance;
use schottky_dim::schottky::symmetric_family;
use schottky_dim::wordtree::{enumerate, word_count};

fn main() -> schottky_dim::Result<()> {
    let cfg = symmetric_family(std::f64::consts::PI / 6.0)?;
    for depth in 1..=8 {
        let level = enumerate(&cfg, depth)?;
        assert_eq!(Some(level.len()), word_count(3, depth));
        // Largest ratio d(tagpoint, center)/radius over the level: the tagpoints nest.
        let worst = level
            .iter()
            .map(|n| {
                let g = &cfg.generators()[n.tag()];
                cygan_distance(n.tagpoint, g.center()).unwrap() / g.radius()
            })
            .fold(0.0, f64::max);
        println!(
            "depth {depth}: {:>4} words, max d/r = {worst:.4}",
            level.len()
        );
    }

    println!();
    for node in enumerate(&cfg, 3)?.iter().take(6) {
        let (zeta, v) = node.tagpoint.coords().unwrap();
        println!(
            "{:<6} rank {:>2}  ({:+.6}{:+.6}i, {:+.6})",
            node.word.to_string(),
            node.word.rank(3),
            zeta.re,
            zeta.im,
            v
        );
    }
    Ok(())
}
