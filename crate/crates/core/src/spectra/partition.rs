use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::eigen::symmetric_eigen;
use super::matrix::{weighted_adjacency, WeightedMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{Field, Scalar};
use crate::weighting::WeightFunction;

/// Ordered partition of `0..n` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Self { blocks })
    }

    pub fn discrete(n: usize) -> Self {
        Self {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `block_of[v]` is the index of the block holding `v`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v] = i;
            }
        }
        out
    }
}

/// Matrix of average block row sums.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientMatrix<T> {
    pub entries: Vec<Vec<T>>,
    pub sizes: Vec<usize>,
    pub equitable: bool,
}

impl<T: Field> QuotientMatrix<T> {
    pub fn order(&self) -> usize {
        self.entries.len()
    }
}

impl<T: Scalar> QuotientMatrix<T> {
    /// Largest eigenvalue. `D^(1/2) B D^(-1/2)` with `D = diag(|X_i|)` is
    /// symmetric because block sums of a symmetric matrix are, so the
    /// symmetric solver applies.
    pub fn spectral_radius(&self) -> Result<T> {
        let k = self.order();
        let mut s = vec![T::zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                let ratio = T::from_count(self.sizes[i]) / T::from_count(self.sizes[j]);
                s[i * k + j] = ratio.sqrt() * self.entries[i][j];
            }
        }
        for i in 0..k {
            for j in 0..i {
                let avg = (s[i * k + j] + s[j * k + i]) / T::lit(2.0);
                s[i * k + j] = avg;
                s[j * k + i] = avg;
            }
        }
        Ok(symmetric_eigen(&s, k)?.0[0])
    }
}

impl<T: Field + ToPrimitive> QuotientMatrix<T> {
    pub fn to_f64(&self) -> QuotientMatrix<f64> {
        QuotientMatrix {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
                .collect(),
            sizes: self.sizes.clone(),
            equitable: self.equitable,
        }
    }
}

fn close<T: Field>(a: &T, b: &T) -> bool {
    let one = T::one();
    let scale = if a.abs() > one { a.abs() } else { one };
    (a.clone() - b.clone()).abs() <= T::equity_tolerance() * scale
}

/// Quotient matrix of `m` for `part`, with the equitable flag set when every
/// block has constant row sums.
pub fn quotient<T: Field>(m: &WeightedMatrix<T>, part: &VertexPartition) -> Result<QuotientMatrix<T>> {
    if part.order() != m.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, matrix has order {}",
            part.order(),
            m.order()
        )));
    }
    VertexPartition::new(m.order(), part.blocks().to_vec())?;
    let k = part.len();
    let mut entries = vec![vec![T::zero(); k]; k];
    let mut equitable = true;
    for (i, bi) in part.blocks().iter().enumerate() {
        for (j, bj) in part.blocks().iter().enumerate() {
            let sums: Vec<T> = bi
                .iter()
                .map(|&r| bj.iter().fold(T::zero(), |acc, &c| acc + m.get(r, c).clone()))
                .collect();
            if sums.iter().any(|s| !close(s, &sums[0])) {
                equitable = false;
            }
            let total = sums.into_iter().fold(T::zero(), |a, b| a + b);
            entries[i][j] = total / T::from_count(bi.len());
        }
    }
    Ok(QuotientMatrix {
        entries,
        sizes: part.blocks().iter().map(Vec::len).collect(),
        equitable,
    })
}

/// Coarsest equitable partition of `A_f(g)`, by splitting blocks on their
/// weighted row sums into each block until nothing changes. Blocks are
/// ordered by smallest vertex.
pub fn coarsest_equitable(g: &Graph, f: &WeightFunction) -> Result<VertexPartition> {
    let m: WeightedMatrix<f64> = weighted_adjacency(g, f)?;
    Ok(coarsest_equitable_matrix(&m))
}

pub fn coarsest_equitable_matrix(m: &WeightedMatrix<f64>) -> VertexPartition {
    let n = m.order();
    let mut blocks: Vec<Vec<usize>> = vec![(0..n).collect()];
    loop {
        let part = VertexPartition { blocks: blocks.clone() };
        let block_of = part.block_of();
        let k = blocks.len();
        let signature = |v: usize| {
            let mut sig = vec![0.0f64; k];
            for (c, &w) in m.row(v).iter().enumerate() {
                if !w.is_zero() {
                    sig[block_of[c]] += w;
                }
            }
            sig
        };
        let mut next = Vec::new();
        for block in &blocks {
            let mut keyed: Vec<(Vec<f64>, usize)> = block.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort_by(|a, b| {
                a.0.iter()
                    .zip(&b.0)
                    .map(|(x, y)| {
                        if close(x, y) {
                            std::cmp::Ordering::Equal
                        } else {
                            x.total_cmp(y)
                        }
                    })
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
                    .then(a.1.cmp(&b.1))
            });
            let mut current = vec![keyed[0].1];
            for w in keyed.windows(2) {
                let same = w[0].0.iter().zip(&w[1].0).all(|(x, y)| close(x, y));
                if same {
                    current.push(w[1].1);
                } else {
                    next.push(std::mem::take(&mut current));
                    current.push(w[1].1);
                }
            }
            next.push(current);
        }
        for b in &mut next {
            b.sort_unstable();
        }
        next.sort_by_key(|b| b[0]);
        if next.len() == blocks.len() {
            return VertexPartition { blocks: next };
        }
        blocks = next;
    }
}
