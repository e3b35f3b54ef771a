//! Reduced words over the generators and their tagpoints.
//!
//! Level `k` of the tree holds every reduced word `j₀ j₁ … j_{k−1}` (no two
//! equal neighbours, since each generator is an involution). Its tagpoint is
//! `ι_{j₀} ∘ … ∘ ι_{j_{k−2}}(seed_{j_{k−1}})`, which lies in the ball of `j₀` and
//! approaches the limit set as `k` grows. Levels are built breadth first: for
//! each generator `j` in ascending order, every parent whose first letter is not
//! `j` gets the child `j·parent`. The resulting order is lexicographic.

use std::fmt;

use crate::error::{Error, Result};
use crate::heisenberg::{translate, BoundaryPoint};
use crate::schottky::SchottkyConfig;

/// Default limit on the number of nodes in one level.
pub const DEFAULT_NODE_CAP: usize = 10_000_000;

/// Seed offset relative to the chain multiplier.
pub const SEED_OFFSET: f64 = 0.01;

/// A word over generator indices; the first letter is the outermost reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    /// Builds a word, rejecting empty or non-reduced sequences.
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let word = Word(letters);
        if word.0.is_empty() {
            return Err(Error::Domain("empty word".into()));
        }
        if !word.is_reduced() {
            return Err(Error::Domain(format!("word {word} is not reduced")));
        }
        Ok(word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Position of this word in the level order of [`enumerate`] for `m` generators.
    pub fn rank(&self, m: usize) -> usize {
        let mut rank = self.0[0];
        for w in self.0.windows(2) {
            let letter = if w[1] > w[0] { w[1] - 1 } else { w[1] };
            rank = rank * (m - 1) + letter;
        }
        rank
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("-")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordNode {
    pub word: Word,
    pub tagpoint: BoundaryPoint,
}

impl WordNode {
    /// First letter of the word.
    pub fn tag(&self) -> usize {
        self.word.first()
    }
}

/// `m (m−1)^{depth−1}`, or `None` on overflow.
pub fn word_count(m: usize, depth: usize) -> Option<usize> {
    if depth == 0 {
        return Some(0);
    }
    let exp = u32::try_from(depth - 1).ok()?;
    (m - 1).checked_pow(exp)?.checked_mul(m)
}

/// One point inside each ball: `T_{c_i}((ε λ_i, 0))` with `ε = 0.01`.
pub fn seed_tagpoints(cfg: &SchottkyConfig) -> Vec<BoundaryPoint> {
    cfg.generators()
        .iter()
        .map(|g| {
            let offset = BoundaryPoint::Finite {
                zeta: g.lambda() * SEED_OFFSET,
                v: 0.0,
            };
            translate(g.center(), offset).expect("finite center")
        })
        .collect()
}

/// Level `depth` of the word tree, with the default node cap.
pub fn enumerate(cfg: &SchottkyConfig, depth: usize) -> Result<Vec<WordNode>> {
    enumerate_with_cap(cfg, depth, DEFAULT_NODE_CAP)
}

pub fn enumerate_with_cap(cfg: &SchottkyConfig, depth: usize, cap: usize) -> Result<Vec<WordNode>> {
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1".into()));
    }
    cfg.require_usable()?;
    let m = cfg.len();
    match word_count(m, depth) {
        Some(n) if n <= cap => {}
        _ => {
            return Err(Error::Resource(format!(
                "{m} generators at depth {depth} exceed the node cap of {cap}"
            )))
        }
    }

    let mut level: Vec<WordNode> = seed_tagpoints(cfg)
        .into_iter()
        .enumerate()
        .map(|(i, tagpoint)| WordNode {
            word: Word(vec![i]),
            tagpoint,
        })
        .collect();

    for _ in 1..depth {
        let mut next = Vec::with_capacity(level.len() * (m - 1));
        for (j, g) in cfg.generators().iter().enumerate() {
            for parent in level.iter().filter(|node| node.tag() != j) {
                let mut letters = Vec::with_capacity(parent.word.len() + 1);
                letters.push(j);
                letters.extend_from_slice(parent.word.letters());
                next.push(WordNode {
                    word: Word(letters),
                    tagpoint: g.reflect(parent.tagpoint),
                });
            }
        }
        level = next;
    }
    Ok(level)
}

/// Tagpoints of level `depth`, an approximation of the limit set.
pub fn limit_set_sample(cfg: &SchottkyConfig, depth: usize) -> Result<Vec<BoundaryPoint>> {
    Ok(enumerate(cfg, depth)?
        .into_iter()
        .map(|node| node.tagpoint)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{cygan_distance, ReflectionGenerator};
    use crate::schottky::symmetric_family;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    #[test]
    fn word_validation_and_display() {
        assert!(Word::new(vec![0, 0]).is_err());
        assert!(Word::new(vec![]).is_err());
        let w = Word::new(vec![0, 1, 2, 0]).unwrap();
        assert_eq!(w.to_string(), "0-1-2-0");
        assert_eq!((w.first(), w.last(), w.len()), (0, 0, 4));
    }

    #[test]
    fn seeds_sit_inside_their_balls() {
        let koranyi =
            ReflectionGenerator::new(BoundaryPoint::ORIGIN, Complex64::new(1.0, 0.0)).unwrap();
        let far = ReflectionGenerator::new(
            BoundaryPoint::from_parts(5.0, 0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
        .unwrap();
        let cfg = SchottkyConfig::new(vec![koranyi, far]).unwrap();
        assert_eq!(
            seed_tagpoints(&cfg)[0],
            BoundaryPoint::from_parts(0.01, 0.0, 0.0)
        );

        let cfg = symmetric_family(PI / 6.0).unwrap();
        let seeds = seed_tagpoints(&cfg);
        let expected = BoundaryPoint::from_parts((2.0 + 0.01) / 3f64.sqrt(), 0.0, 0.0);
        assert!(cygan_distance(seeds[0], expected).unwrap() < 1e-15);
        for (seed, g) in seeds.iter().zip(cfg.generators()) {
            let d = cygan_distance(*seed, g.center()).unwrap();
            assert!(d > 0.0 && d < g.radius());
        }
    }

    #[test]
    fn level_sizes() {
        let cfg = symmetric_family(0.5).unwrap();
        let one = enumerate(&cfg, 1).unwrap();
        assert_eq!(one.len(), 3);
        assert_eq!(
            one.iter().map(|n| n.tagpoint).collect::<Vec<_>>(),
            seed_tagpoints(&cfg)
        );
        assert_eq!(enumerate(&cfg, 3).unwrap().len(), 12);
        assert_eq!(word_count(3, 3), Some(12));
        assert_eq!(word_count(3, 0), Some(0));
        assert_eq!(word_count(4, 200), None);
    }

    #[test]
    fn two_letter_word_tagpoint() {
        let cfg = symmetric_family(0.5).unwrap();
        let seeds = seed_tagpoints(&cfg);
        let level = enumerate(&cfg, 2).unwrap();
        let node = level.iter().find(|n| n.word.letters() == [0, 1]).unwrap();
        assert_eq!(node.tagpoint, cfg.generators()[0].reflect(seeds[1]));
    }

    #[test]
    fn order_is_lexicographic_and_matches_rank() {
        let cfg = symmetric_family(0.5).unwrap();
        let level = enumerate(&cfg, 4).unwrap();
        for (k, node) in level.iter().enumerate() {
            assert_eq!(node.word.rank(3), k);
            if k > 0 {
                assert!(level[k - 1].word < node.word);
            }
        }
        let words: Vec<String> = enumerate(&cfg, 2)
            .unwrap()
            .iter()
            .map(|n| n.word.to_string())
            .collect();
        assert_eq!(words, ["0-1", "0-2", "1-0", "1-2", "2-0", "2-1"]);
    }

    #[test]
    fn errors() {
        let cfg = symmetric_family(0.5).unwrap();
        assert!(matches!(enumerate(&cfg, 0), Err(Error::Domain(_))));
        assert!(matches!(
            enumerate_with_cap(&cfg, 5, 47),
            Err(Error::Resource(_))
        ));
        assert!(enumerate_with_cap(&cfg, 5, 48).is_ok());
        assert!(matches!(enumerate(&cfg, 60), Err(Error::Resource(_))));
    }

    #[test]
    fn limit_set_points_nest() {
        let cfg = symmetric_family(0.9).unwrap();
        let g = cfg.generators();
        for node in enumerate(&cfg, 5).unwrap() {
            let owner = &g[node.tag()];
            assert!(cygan_distance(node.tagpoint, owner.center()).unwrap() < owner.radius());
        }
        assert_eq!(limit_set_sample(&cfg, 1).unwrap(), seed_tagpoints(&cfg));
    }
}
