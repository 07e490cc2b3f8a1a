//! Simple undirected graphs on the Alice register, stored as adjacency rows.
//!
//! Row `i` (zero-based) is the GF(2) indicator vector of the neighbours of
//! vertex `i + 1`. Vertices are numbered from 1 in all public text forms,
//! matching the qubit numbering used elsewhere.

use crate::bits::BitWord;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitWord>,
}

impl Graph {
    /// Cycle graph 1 – 2 – … – n – 1. Needs at least three vertices to be a
    /// simple graph.
    pub fn ring(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "ring graph needs at least 3 vertices, got {n}"
            )));
        }
        if n > crate::bits::MAX_BITS {
            return Err(Error::InvalidGraph(format!("too many vertices: {n} > 64")));
        }
        let rows = (0..n)
            .map(|i| BitWord::from_indices(n, &[(i + n - 1) % n, (i + 1) % n]))
            .collect();
        Ok(Graph { rows })
    }

    /// Builds a graph from an explicit edge list with 1-based endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > crate::bits::MAX_BITS {
            return Err(Error::InvalidGraph(format!("vertex count {n} out of range 1..=64")));
        }
        let mut rows = vec![BitWord::zeros(n); n];
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices (vertices are 1-based)"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {a}")));
            }
            rows[a - 1].set(b - 1, true);
            rows[b - 1].set(a - 1, true);
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and a zero
    /// diagonal.
    pub fn from_rows(rows: Vec<BitWord>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > crate::bits::MAX_BITS {
            return Err(Error::InvalidGraph(format!("vertex count {n} out of range 1..=64")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!(
                    "adjacency row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if row.get(i) {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {}", i + 1)));
            }
            for (j, other) in rows.iter().enumerate().skip(i + 1) {
                if row.get(j) != other.get(i) {
                    return Err(Error::InvalidGraph(format!(
                        "adjacency not symmetric between vertices {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    /// Neighbourhood of the 1-based vertex `v` as a GF(2) row vector.
    pub fn row(&self, v: usize) -> &BitWord {
        &self.rows[v - 1]
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    /// Edges as 1-based pairs (a, b) with a < b, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                if j > i {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Adjacency-matrix product A·x over GF(2).
    pub fn mul_vector(&self, x: &BitWord) -> BitWord {
        let mut out = BitWord::zeros(self.vertex_count());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(x));
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}
