//! The word gauge group generated from a graph and a register layout.
//!
//! For an Alice register of n qubits (s ancillas, c ebit halves, r gauge
//! qubits, in that order) and c Bob qubits, the generators are
//!
//! * `s_i` (1 ≤ i ≤ n): X on Alice qubit i, Z on its graph neighbours, and —
//!   when i sits in the ebit region, i = s + j — Z on Bob qubit j;
//! * `h_j` (1 ≤ j ≤ c): Z on Alice qubit s + j, X on Bob qubit j;
//! * `g_k` (1 ≤ k ≤ r): Z on Alice qubit s + c + k.
//!
//! All pairs commute except (`s_{n-r+k}`, `g_k`), which anticommute; those
//! pairs are the X/Z gauge pair of the k-th gauge qubit. The stabilizer of
//! the shared base state is generated by `s_1 … s_{n-r}` and all `h_j`.

use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::CodeLayout;
use crate::pauli::PauliOp;

#[derive(Clone, Debug)]
pub struct GaugeGroup {
    layout: CodeLayout,
    graph: Graph,
    s_ops: Vec<PauliOp>,
    h_ops: Vec<PauliOp>,
    g_ops: Vec<PauliOp>,
}

impl GaugeGroup {
    pub fn build(layout: CodeLayout, graph: Graph) -> Result<Self> {
        if graph.vertex_count() != layout.n() {
            return Err(Error::InvalidGraph(format!(
                "graph has {} vertices but the Alice register has {} qubits",
                graph.vertex_count(),
                layout.n()
            )));
        }
        let (n, c, s) = (layout.n(), layout.c(), layout.s());

        let s_ops = (0..n)
            .map(|i| {
                let mut x_alice = BitWord::zeros(n);
                x_alice.set(i, true);
                let z_alice = *graph.row(i + 1);
                let mut z_bob = BitWord::zeros(c);
                if let Some(j) = layout.ebit_index(i) {
                    z_bob.set(j, true);
                }
                PauliOp::from_parts(x_alice, z_alice, BitWord::zeros(c), z_bob)
            })
            .collect();

        let h_ops = (0..c)
            .map(|j| {
                let mut z_alice = BitWord::zeros(n);
                z_alice.set(s + j, true);
                let mut x_bob = BitWord::zeros(c);
                x_bob.set(j, true);
                PauliOp::from_parts(BitWord::zeros(n), z_alice, x_bob, BitWord::zeros(c))
            })
            .collect();

        let g_ops = (0..layout.r())
            .map(|k| {
                let mut z_alice = BitWord::zeros(n);
                z_alice.set(s + c + k, true);
                PauliOp::from_parts(BitWord::zeros(n), z_alice, BitWord::zeros(c), BitWord::zeros(c))
            })
            .collect();

        Ok(GaugeGroup { layout, graph, s_ops, h_ops, g_ops })
    }

    pub fn layout(&self) -> &CodeLayout {
        &self.layout
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `s_i` for the 1-based index `i`.
    pub fn s_op(&self, i: usize) -> &PauliOp {
        &self.s_ops[i - 1]
    }

    pub fn s_ops(&self) -> &[PauliOp] {
        &self.s_ops
    }

    pub fn h_ops(&self) -> &[PauliOp] {
        &self.h_ops
    }

    pub fn g_ops(&self) -> &[PauliOp] {
        &self.g_ops
    }

    /// All generators in order s_1..s_n, h_1..h_c, g_1..g_r, each with its
    /// conventional label.
    pub fn generators(&self) -> Vec<(String, PauliOp)> {
        let s = self.s_ops.iter().enumerate().map(|(i, op)| (format!("s_{}", i + 1), *op));
        let h = self.h_ops.iter().enumerate().map(|(j, op)| (format!("h_{}", j + 1), *op));
        let g = self.g_ops.iter().enumerate().map(|(k, op)| (format!("g_{}", k + 1), *op));
        s.chain(h).chain(g).collect()
    }

    pub fn generator_count(&self) -> usize {
        self.s_ops.len() + self.h_ops.len() + self.g_ops.len()
    }

    /// Generators of the base-state stabilizer: `s_1 … s_{n-r}` and every
    /// `h_j`. The remaining `s_{n-r+k}` act as gauge-X, the `g_k` as gauge-Z.
    pub fn state_stabilizers(&self) -> Vec<PauliOp> {
        let keep = self.layout.n() - self.layout.r();
        self.s_ops[..keep].iter().chain(self.h_ops.iter()).cloned().collect()
    }

    /// Gauge-X operator of the k-th gauge qubit (1-based): `s_{n-r+k}`.
    pub fn gauge_x(&self, k: usize) -> &PauliOp {
        &self.s_ops[self.layout.n() - self.layout.r() + k - 1]
    }

    /// Gauge-Z operator of the k-th gauge qubit (1-based): `g_k`.
    pub fn gauge_z(&self, k: usize) -> &PauliOp {
        &self.g_ops[k - 1]
    }

    /// Checks the commutation pattern of all generator pairs. Returns the
    /// pairs whose behaviour deviates from the expected pattern (everything
    /// commutes except each gauge X/Z pair); an empty list means the group
    /// is well formed.
    pub fn validate(&self) -> Vec<(String, String)> {
        let gens = self.generators();
        let n = self.layout.n();
        let r = self.layout.r();
        let c = self.layout.c();
        let mut bad = Vec::new();
        for a in 0..gens.len() {
            for b in (a + 1)..gens.len() {
                // Gauge pair: s_{n-r+k} is generator index n-r+k-1, g_k is
                // generator index n+c+k-1.
                let is_gauge_pair =
                    b >= n + c && a >= n - r && a < n && (b - (n + c)) == (a - (n - r));
                let expect_anticommute = is_gauge_pair;
                if gens[a].1.anticommutes_with(&gens[b].1) != expect_anticommute {
                    bad.push((gens[a].0.clone(), gens[b].0.clone()));
                }
            }
        }
        bad
    }

    /// True when `op` is, up to phase, a product of generators. Decided by
    /// reducing op's symplectic vector against the generators over GF(2).
    pub fn contains_projectively(&self, op: &PauliOp) -> bool {
        let mut basis: Vec<u128> = Vec::new();
        for (_, gen) in self.generators() {
            let mut v = self.symplectic_bits(&gen);
            for &b in &basis {
                let pivot = 1u128 << (127 - b.leading_zeros());
                if v & pivot != 0 {
                    v ^= b;
                }
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let mut v = self.symplectic_bits(op);
        for &b in &basis {
            let pivot = 1u128 << (127 - b.leading_zeros());
            if v & pivot != 0 {
                v ^= b;
            }
        }
        v == 0
    }

    fn symplectic_bits(&self, op: &PauliOp) -> u128 {
        let n = self.layout.n() as u32;
        let c = self.layout.c() as u32;
        (op.x_alice().raw() as u128)
            | (op.z_alice().raw() as u128) << n
            | (op.x_bob().raw() as u128) << (2 * n)
            | (op.z_bob().raw() as u128) << (2 * n + c)
    }
}
