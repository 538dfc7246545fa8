use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, Certificate, Graph};
use crate::scalar::{Field, Scalar};
use crate::weighting::WeightFunction;

/// Where a matrix came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub certificate: Certificate,
    pub weighting: String,
    pub connected: bool,
}

/// Dense symmetric nonnegative matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedMatrix<T> {
    n: usize,
    data: Vec<T>,
    provenance: Option<Provenance>,
}

impl<T: Field> WeightedMatrix<T> {
    /// `M[i][j] = weight(d_i, d_j)` on edges and zero elsewhere.
    pub fn from_graph_with(
        g: &Graph,
        weighting: &str,
        mut weight: impl FnMut(usize, usize) -> Result<T>,
    ) -> Result<Self> {
        let n = g.order();
        let mut data = vec![T::zero(); n * n];
        for (u, v) in g.edges() {
            let w = weight(g.degree(u), g.degree(v))?;
            if w <= T::zero() {
                return Err(Error::InvalidParameter(format!(
                    "weight on edge {{{u}, {v}}} is not positive"
                )));
            }
            data[u * n + v] = w.clone();
            data[v * n + u] = w;
        }
        Ok(Self {
            n,
            data,
            provenance: Some(Provenance {
                certificate: canonical_certificate(g),
                weighting: weighting.to_string(),
                connected: g.is_connected(),
            }),
        })
    }

    /// 0/1 adjacency matrix, exact in any field.
    pub fn adjacency(g: &Graph) -> Self {
        Self::from_graph_with(g, "adjacency", |_, _| Ok(T::one())).expect("unit weights are positive")
    }

    /// Validates a square symmetric nonnegative matrix with zero diagonal.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidParameter("matrix must be square".into()));
            }
            data.extend(row.iter().cloned());
        }
        for i in 0..n {
            if !data[i * n + i].is_zero() {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if data[i * n + j] < T::zero() {
                    return Err(Error::InvalidParameter(format!("negative entry at ({i}, {j})")));
                }
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::InvalidParameter(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self {
            n,
            data,
            provenance: None,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn row_sum(&self, i: usize) -> T {
        self.row(i).iter().cloned().fold(T::zero(), |a, b| a + b)
    }
}

impl<T: Scalar> WeightedMatrix<T> {
    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn max_row_sum(&self) -> T {
        (0..self.n).map(|i| self.row_sum(i)).fold(T::zero(), T::max)
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }
}

/// Weighted adjacency matrix `A_f(G)`.
pub fn weighted_adjacency<T: Scalar>(g: &Graph, f: &WeightFunction) -> Result<WeightedMatrix<T>> {
    WeightedMatrix::from_graph_with(g, &f.to_string(), |a, b| f.eval(a, b))
}
