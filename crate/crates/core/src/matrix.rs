use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense symmetric distance matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DistanceMatrix {
    size: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn zeros(size: usize) -> Self {
        Self { size, data: vec![0.0; size * size] }
    }

    /// Builds a matrix from rows, rejecting ragged input and negative or
    /// non-finite entries. Symmetry is not checked here.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare { rows: size, row, cols: r.len() });
            }
            for (col, &value) in r.iter().enumerate() {
                if !value.is_finite() || value < 0.0 {
                    return Err(Error::BadWeight { row, col, value });
                }
                data.push(value);
            }
        }
        Ok(Self { size, data })
    }

    /// Builds a matrix from a closure evaluated on every ordered pair.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(f(i, j));
            }
        }
        Self { size, data }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.size + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.size + j] = value;
        self.data[j * self.size + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    /// Length of the walk visiting `walk` in order (open, not closed).
    pub fn path_length(&self, walk: &[usize]) -> f64 {
        walk.windows(2).map(|w| self.get(w[0], w[1])).sum()
    }

    /// Length of the closed walk `walk[0] .. walk[last] walk[0]`.
    pub fn cycle_length(&self, cycle: &[usize]) -> f64 {
        match cycle {
            [] | [_] => 0.0,
            [first, .., last] => self.path_length(cycle) + self.get(*last, *first),
        }
    }

    /// Principal submatrix on `vertices`, in the given order.
    pub fn submatrix(&self, vertices: &[usize]) -> Self {
        Self::from_fn(vertices.len(), |i, j| self.get(vertices[i], vertices[j]))
    }
}
