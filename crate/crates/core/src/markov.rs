//! Markov partition over the isometric balls and its transition matrix.
//!
//! Blocks at depth `n` are the reduced words of length `n`; the block of
//! `j₀ … j_{n−1}` is the set of points whose orbit under the expanding map
//! `f|_{ball j} = ι_j` visits balls `j₀, …, j_{n−1}` in turn. Block `a` maps onto
//! every block `b` whose word is the shift of `a` extended by one letter. The
//! entry `T[a][b]` is the contraction of the inverse branch `ι_{j₀}` measured at
//! the tagpoint of `b`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::schottky::SchottkyConfig;
use crate::wordtree::{enumerate, Word};

/// Matrices up to this dimension are stored densely.
pub const DENSE_LIMIT: usize = 4096;

/// How a contraction factor becomes a matrix entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntryConvention {
    /// Squared Cygan distortion `|λ|⁴ / d⁴`. For the symmetric family at
    /// depth 1 this gives the entries `sin⁴θ / 12`.
    #[default]
    Det,
    /// Cygan distortion `|λ|² / d²`, the metric scaling of the branch.
    Cygan,
}

impl EntryConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryConvention::Det => "det",
            EntryConvention::Cygan => "cygan",
        }
    }
}

impl fmt::Display for EntryConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntryConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(EntryConvention::Det),
            "cygan" => Ok(EntryConvention::Cygan),
            other => Err(Error::Domain(format!(
                "unknown convention `{other}` (expected det or cygan)"
            ))),
        }
    }
}

/// Words of the blocks that block `letters` maps onto.
pub fn admissible_successors(letters: &[usize], m: usize) -> Result<Vec<Word>> {
    if letters.is_empty() {
        return Err(Error::Domain("empty word".into()));
    }
    if let Some(&bad) = letters.iter().find(|&&l| l >= m) {
        return Err(Error::Domain(format!(
            "letter {bad} out of range for {m} generators"
        )));
    }
    let word = Word::new(letters.to_vec())?;
    let last = word.last();
    Ok((0..m)
        .filter(|&j| j != last)
        .map(|j| {
            let mut next = letters[1..].to_vec();
            next.push(j);
            Word::new(next).expect("shift of a reduced word stays reduced")
        })
        .collect())
}

/// Entry values: a full row-major array, or one value per support entry.
#[derive(Debug, Clone, PartialEq)]
enum Values {
    Dense(Vec<f64>),
    Sparse(Vec<f64>),
}

/// Square nonnegative matrix, optionally labelled by partition words.
///
/// The support is always kept in row-compressed form; values are stored
/// densely up to [`DENSE_LIMIT`] and per support entry above it.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    values: Values,
    words: Option<Vec<Word>>,
}

impl TransitionMatrix {
    pub fn from_dense(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Domain("empty matrix".into()));
        }
        let mut sparse_rows = Vec::with_capacity(dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Domain(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            sparse_rows.push(
                row.into_iter()
                    .enumerate()
                    .filter(|&(_, x)| x != 0.0)
                    .collect(),
            );
        }
        Self::from_rows(sparse_rows, None)
    }

    /// Builds from per-row `(column, value)` lists, sorted or not.
    fn from_rows(rows: Vec<Vec<(usize, f64)>>, words: Option<Vec<Word>>) -> Result<Self> {
        let dim = rows.len();
        let mut row_ptr = Vec::with_capacity(dim + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for (i, mut row) in rows.into_iter().enumerate() {
            row.sort_by_key(|&(j, _)| j);
            for (j, x) in row {
                if j >= dim {
                    return Err(Error::Domain(format!("column {j} out of range")));
                }
                if !x.is_finite() || x < 0.0 {
                    return Err(Error::Domain(format!(
                        "entry ({i},{j}) = {x} is not a finite nonnegative number"
                    )));
                }
                if x > 0.0 {
                    cols.push(j);
                    vals.push(x);
                }
            }
            row_ptr.push(cols.len());
        }
        let values = if dim <= DENSE_LIMIT {
            let mut data = vec![0.0; dim * dim];
            for i in 0..dim {
                for k in row_ptr[i]..row_ptr[i + 1] {
                    data[i * dim + cols[k]] = vals[k];
                }
            }
            Values::Dense(data)
        } else {
            Values::Sparse(vals)
        };
        Ok(TransitionMatrix {
            dim,
            row_ptr,
            cols,
            values,
            words,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.values, Values::Sparse(_))
    }

    /// Partition words labelling rows and columns, when built from a configuration.
    pub fn words(&self) -> Option<&[Word]> {
        self.words.as_deref()
    }

    /// Value of the `k`-th support entry, which lies in row `i`.
    fn value(&self, i: usize, k: usize) -> f64 {
        match &self.values {
            Values::Dense(data) => data[i * self.dim + self.cols[k]],
            Values::Sparse(vals) => vals[k],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        match &self.values {
            Values::Dense(data) => data[i * self.dim + j],
            Values::Sparse(vals) => {
                let range = self.row_ptr[i]..self.row_ptr[i + 1];
                self.cols[range.clone()]
                    .binary_search(&j)
                    .map(|k| vals[range.start + k])
                    .unwrap_or(0.0)
            }
        }
    }

    /// Positive entries of row `i` as `(column, value)`, ascending by column.
    pub fn row(&self, i: usize) -> Vec<(usize, f64)> {
        (self.row_ptr[i]..self.row_ptr[i + 1])
            .map(|k| (self.cols[k], self.value(i, k)))
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// `out = T x`.
    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = (self.row_ptr[i]..self.row_ptr[i + 1])
                .map(|k| self.value(i, k) * x[self.cols[k]])
                .sum();
        }
    }

    /// Applies `f` to every positive entry; zeros stay zero.
    pub fn map_positive(&self, f: impl Fn(f64) -> f64) -> Self {
        let values = match &self.values {
            Values::Dense(data) => {
                let mut mapped = vec![0.0; data.len()];
                for i in 0..self.dim {
                    for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                        let at = i * self.dim + self.cols[k];
                        mapped[at] = f(data[at]);
                    }
                }
                Values::Dense(mapped)
            }
            Values::Sparse(vals) => Values::Sparse(vals.iter().map(|&x| f(x)).collect()),
        };
        TransitionMatrix {
            dim: self.dim,
            row_ptr: self.row_ptr.clone(),
            cols: self.cols.clone(),
            values,
            words: self.words.clone(),
        }
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(|&(_, x)| x).sum())
            .collect()
    }

    pub fn max_entry(&self) -> f64 {
        (0..self.dim)
            .flat_map(|i| self.row(i))
            .map(|(_, x)| x)
            .fold(0.0, f64::max)
    }

    /// Whether the support digraph is strongly connected.
    pub fn is_strongly_connected(&self) -> bool {
        let forward: Vec<Vec<usize>> = (0..self.dim)
            .map(|i| self.cols[self.row_ptr[i]..self.row_ptr[i + 1]].to_vec())
            .collect();
        let mut backward = vec![Vec::new(); self.dim];
        for (i, succ) in forward.iter().enumerate() {
            for &j in succ {
                backward[j].push(i);
            }
        }
        reaches_all(&forward) && reaches_all(&backward)
    }
}

fn reaches_all(adjacency: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adjacency.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        for &j in &adjacency[i] {
            if !seen[j] {
                seen[j] = true;
                count += 1;
                queue.push_back(j);
            }
        }
    }
    count == adjacency.len()
}

/// Transition matrix of the depth-`depth` refinement.
pub fn transition_matrix(
    cfg: &SchottkyConfig,
    depth: usize,
    convention: EntryConvention,
) -> Result<TransitionMatrix> {
    let nodes = enumerate(cfg, depth)?;
    let m = cfg.len();
    let generators = cfg.generators();

    let rows = nodes
        .par_iter()
        .map(|node| {
            let branch = &generators[node.tag()];
            admissible_successors(node.word.letters(), m)?
                .into_iter()
                .map(|succ| {
                    let b = succ.rank(m);
                    let scale = branch.distortion_factor(nodes[b].tagpoint)?;
                    let entry = match convention {
                        EntryConvention::Det => scale * scale,
                        EntryConvention::Cygan => scale,
                    };
                    Ok((b, entry))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let words = nodes.into_iter().map(|n| n.word).collect();
    TransitionMatrix::from_rows(rows, Some(words))
}
