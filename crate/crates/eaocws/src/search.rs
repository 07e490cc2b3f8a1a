//! Clique search for codeword sets.
//!
//! Candidate codewords are the gauge-reduced binary words; two words are
//! compatible when their XOR `w`
//!
//! * has a nonzero ancilla pattern (the words encode distinct logical basis
//!   states),
//! * is not the reduced word of any error the code must handle, and
//! * labels a Z-type operator commuting with every enumerated error whose
//!   own reduced word is zero.
//!
//! Compatibility depends only on the XOR, so the compatibility graph is
//! vertex-transitive under translation and every maximum clique can be
//! translated to contain the zero word. The search therefore looks for a
//! maximum clique among the compatible neighbours of zero.
//!
//! Search effort is metered in explored tree nodes, not wall time, so runs
//! are reproducible; `Budget::from_seconds` converts a nominal seconds
//! figure at a fixed rate.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::group::GaugeGroup;
use crate::induce::EffectiveErrors;
use crate::word::BinaryWord;

/// What the code must do with errors up to the target distance d.
///
/// `Detect` requires every error of weight < d to be flagged: the full
/// enumerated error set up to weight d−1 enters the compatibility
/// conditions. `Correct` requires recovery from errors of weight
/// ≤ t = ⌊(d−1)/2⌋: pairs of such errors enter through the XORs of their
/// reduced words, and only single errors contribute commutation
/// constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Detect,
    Correct,
}

/// Hard cap on the candidate space: 2^(s+2c) words must fit in memory.
pub const MAX_SPACE_BITS: usize = 24;

#[derive(Clone, Debug)]
pub struct SearchProblem {
    group: GaugeGroup,
    mode: SearchMode,
    distance: usize,
    forbidden: HashSet<BinaryWord>,
    zero_constraints: Vec<BitWord>,
    /// Nonzero words compatible with the zero word, ascending.
    candidates: Vec<BinaryWord>,
}

impl SearchProblem {
    pub fn build(group: &GaugeGroup, distance: usize, mode: SearchMode) -> Result<Self> {
        let layout = group.layout();
        let (s, c) = (layout.s(), layout.c());
        let space_bits = s + 2 * c;
        if space_bits > MAX_SPACE_BITS {
            return Err(Error::SearchTooLarge { bits: space_bits, cap: MAX_SPACE_BITS });
        }

        let (forbidden, zero_constraints) = match mode {
            SearchMode::Detect => {
                let max_weight = distance.saturating_sub(1);
                let eff = EffectiveErrors::build(group, max_weight)?;
                let forbidden: HashSet<BinaryWord> = eff.nonzero_words().into_iter().collect();
                let constraints = xor_basis(eff.zero_class().iter().map(|e| *e.x_alice()));
                (forbidden, constraints)
            }
            SearchMode::Correct => {
                let t = distance.saturating_sub(1) / 2;
                let eff = EffectiveErrors::build(group, t)?;
                // Pair every reduced word with every other, the identity
                // included, so single-error words are covered as pairs with
                // the identity.
                let mut words: Vec<BinaryWord> = eff.classes().keys().copied().collect();
                let zero = BinaryWord::zeros(layout.n(), c);
                if !words.contains(&zero) {
                    words.push(zero);
                }
                let mut forbidden = HashSet::new();
                for (i, a) in words.iter().enumerate() {
                    for b in &words[i + 1..] {
                        let w = a.xor(b);
                        if !w.is_zero() {
                            forbidden.insert(w);
                        }
                    }
                }
                let constraints = xor_basis(eff.zero_class().iter().map(|e| *e.x_alice()));
                (forbidden, constraints)
            }
        };

        let mut problem = SearchProblem {
            group: group.clone(),
            mode,
            distance,
            forbidden,
            zero_constraints,
            candidates: Vec::new(),
        };
        problem.candidates = problem.enumerate_candidates();
        Ok(problem)
    }

    pub fn group(&self) -> &GaugeGroup {
        &self.group
    }

    pub fn mode(&self) -> SearchMode {
        self.mode
    }

    pub fn distance(&self) -> usize {
        self.distance
    }

    /// Nonzero reduced words compatible with the zero word, ascending.
    pub fn candidates(&self) -> &[BinaryWord] {
        &self.candidates
    }

    /// Whether two codewords whose XOR is `w` may coexist in one code.
    pub fn diff_compatible(&self, w: &BinaryWord) -> bool {
        let layout = self.group.layout();
        !w.is_zero()
            && !w.alice().prefix(layout.s()).is_zero()
            && !self.forbidden.contains(w)
            && self.zero_constraints.iter().all(|x| !w.alice().dot(x))
    }

    fn enumerate_candidates(&self) -> Vec<BinaryWord> {
        let layout = self.group.layout();
        let (n, c, r) = (layout.n(), layout.c(), layout.r());
        let free_alice = n - r;
        let mut out = Vec::new();
        for alice_raw in 0..(1u64 << free_alice) {
            for bob_raw in 0..(1u64 << c) {
                let w = BinaryWord::new(
                    BitWord::from_raw(alice_raw, n),
                    BitWord::from_raw(bob_raw, c),
                );
                if self.diff_compatible(&w) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }
}

/// Deterministic search effort limit, measured in explored tree nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    nodes: u64,
}

impl Budget {
    /// Conversion rate for the nominal-seconds interface.
    pub const NODES_PER_SECOND: u64 = 1_000_000;

    pub fn from_nodes(nodes: u64) -> Self {
        Budget { nodes }
    }

    /// A nominal time budget: `seconds × 1_000_000` nodes. The figure is a
    /// planning unit, not a wall-clock bound.
    pub fn from_seconds(seconds: f64) -> Self {
        let nodes = (seconds.max(0.0) * Self::NODES_PER_SECOND as f64).round();
        Budget { nodes: if nodes >= u64::MAX as f64 { u64::MAX } else { nodes as u64 } }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Zero word first, remaining codewords ascending. When the search ran
    /// to completion this is the lexicographically smallest maximum-size
    /// set; under an exhausted budget it is the best set encountered.
    pub codewords: Vec<BinaryWord>,
    pub dimension: usize,
    /// The reported dimension is proven maximal (the tree was exhausted).
    pub optimal: bool,
    pub budget_exhausted: bool,
    pub nodes_used: u64,
}

/// Branch-and-bound maximum-clique search over the candidate words.
///
/// The seed only permutes the initial vertex order; when the budget
/// suffices the returned set is canonical (lex-minimal among maximum
/// cliques) and therefore seed-independent.
pub fn search_codewords(problem: &SearchProblem, seed: u64, budget: Budget) -> SearchOutcome {
    let cands = problem.candidates();
    let layout = problem.group().layout();
    let zero = BinaryWord::zeros(layout.n(), layout.c());
    if cands.is_empty() {
        return SearchOutcome {
            codewords: vec![zero],
            dimension: 1,
            optimal: true,
            budget_exhausted: false,
            nodes_used: 0,
        };
    }

    let nv = cands.len();
    let adj: Vec<VertexSet> = (0..nv)
        .map(|i| {
            let mut row = VertexSet::empty(nv);
            for j in 0..nv {
                if j != i && problem.diff_compatible(&cands[i].xor(&cands[j])) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();

    // Vertex order: seed-shuffled, then stable-sorted by degree descending.
    let mut order: Vec<usize> = (0..nv).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count()));

    let mut state = BranchState {
        adj: &adj,
        best: Vec::new(),
        nodes: 0,
        budget: budget.nodes(),
        exhausted: false,
    };

    // Greedy warm start for an initial bound.
    let mut greedy: Vec<usize> = Vec::new();
    for &v in &order {
        if greedy.iter().all(|&u| adj[u].contains(v)) {
            greedy.push(v);
        }
    }
    state.best = greedy;

    let mut r = Vec::new();
    state.expand(&mut r, order);

    let optimal = !state.exhausted;
    let mut members = state.best.clone();

    // Canonicalise: find the lex-smallest clique of the best size. Candidate
    // indices ascend with the words, so index order is word order.
    if optimal && members.len() > 1 {
        let mut lex = LexState {
            adj: &adj,
            target: members.len(),
            nodes: &mut state.nodes,
            budget: budget.nodes(),
            exhausted: false,
        };
        let mut stack = Vec::new();
        let all: Vec<usize> = (0..nv).collect();
        if lex.dfs(&mut stack, &all) {
            members = stack;
        }
        if lex.exhausted {
            state.exhausted = true;
        }
    }

    members.sort_unstable();
    let mut codewords = vec![zero];
    codewords.extend(members.iter().map(|&v| cands[v]));
    SearchOutcome {
        dimension: codewords.len(),
        codewords,
        optimal,
        budget_exhausted: state.exhausted,
        nodes_used: state.nodes,
    }
}

/// Exhaustive subset check over the candidate words; the reference oracle
/// for the branch-and-bound search. Rejects problems with more than
/// `EXHAUSTIVE_LIMIT` candidates.
pub const EXHAUSTIVE_LIMIT: usize = 20;

pub fn search_codewords_exhaustive(problem: &SearchProblem) -> Result<SearchOutcome> {
    let cands = problem.candidates();
    let nv = cands.len();
    if nv > EXHAUSTIVE_LIMIT {
        return Err(Error::ExhaustiveTooLarge { limit: EXHAUSTIVE_LIMIT, got: nv });
    }
    let layout = problem.group().layout();
    let zero = BinaryWord::zeros(layout.n(), layout.c());

    let adj_mask: Vec<u32> = (0..nv)
        .map(|i| {
            let mut m = 0u32;
            for j in 0..nv {
                if j != i && problem.diff_compatible(&cands[i].xor(&cands[j])) {
                    m |= 1 << j;
                }
            }
            m
        })
        .collect();

    let mut best_mask = 0u32;
    let mut best_size = 0;
    for mask in 0u32..(1u32 << nv) {
        let size = mask.count_ones() as usize;
        if size <= best_size && !(size == best_size && mask_below(mask, best_mask)) {
            continue;
        }
        let mut ok = true;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if mask & !adj_mask[i] & !(1 << i) != 0 {
                ok = false;
                break;
            }
        }
        if ok && (size > best_size || (size == best_size && mask_below(mask, best_mask))) {
            best_size = size;
            best_mask = mask;
        }
    }

    let mut codewords = vec![zero];
    for (i, cand) in cands.iter().enumerate() {
        if best_mask & (1 << i) != 0 {
            codewords.push(*cand);
        }
    }
    Ok(SearchOutcome {
        dimension: codewords.len(),
        codewords,
        optimal: true,
        budget_exhausted: false,
        nodes_used: 1 << nv,
    })
}

/// True when the member list of `a` is lexicographically below that of `b`
/// (indices ascending; lower indices are lex-smaller words).
fn mask_below(a: u32, b: u32) -> bool {
    if b == 0 {
        return true;
    }
    // Compare smallest members first: the first differing index decides.
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let first = diff.trailing_zeros();
    a & (1 << first) != 0
}

fn xor_basis(vectors: impl Iterator<Item = BitWord>) -> Vec<BitWord> {
    let mut basis: Vec<u64> = Vec::new();
    let mut len = 0;
    for v in vectors {
        len = v.len();
        let mut raw = v.raw();
        for &b in &basis {
            let pivot = 1u64 << (63 - b.leading_zeros());
            if raw & pivot != 0 {
                raw ^= b;
            }
        }
        if raw != 0 {
            basis.push(raw);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.into_iter().map(|raw| BitWord::from_raw(raw, len)).collect()
}

/// Fixed-capacity bitset over candidate indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct VertexSet {
    blocks: Vec<u64>,
}

impl VertexSet {
    fn empty(capacity: usize) -> Self {
        VertexSet { blocks: vec![0; capacity.div_ceil(64)] }
    }

    fn insert(&mut self, v: usize) {
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    fn contains(&self, v: usize) -> bool {
        self.blocks[v / 64] & (1 << (v % 64)) != 0
    }

    fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }
}

struct BranchState<'a> {
    adj: &'a [VertexSet],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl BranchState<'_> {
    /// Tomita-style expansion: greedy-colour the candidate list, then branch
    /// from the highest colour downward, pruning when the colour bound
    /// cannot beat the incumbent.
    fn expand(&mut self, r: &mut Vec<usize>, p: Vec<usize>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if p.is_empty() {
            if r.len() > self.best.len() {
                self.best = r.clone();
            }
            return;
        }

        // Greedy colouring in list order; colour = 1 + class index.
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut coloured: Vec<(usize, usize)> = Vec::with_capacity(p.len());
        for &v in &p {
            let mut placed = false;
            for (ci, class) in classes.iter_mut().enumerate() {
                if class.iter().all(|&u| !self.adj[v].contains(u)) {
                    class.push(v);
                    coloured.push((v, ci + 1));
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![v]);
                coloured.push((v, classes.len()));
            }
        }
        coloured.sort_by_key(|&(_, colour)| colour);

        for i in (0..coloured.len()).rev() {
            if self.exhausted {
                return;
            }
            let (v, colour) = coloured[i];
            if r.len() + colour <= self.best.len() {
                return;
            }
            let next: Vec<usize> = coloured[..i]
                .iter()
                .map(|&(u, _)| u)
                .filter(|&u| self.adj[v].contains(u))
                .collect();
            r.push(v);
            self.expand(r, next);
            r.pop();
        }
    }
}

struct LexState<'a> {
    adj: &'a [VertexSet],
    target: usize,
    nodes: &'a mut u64,
    budget: u64,
    exhausted: bool,
}

impl LexState<'_> {
    /// Depth-first search in ascending index order; the first clique of the
    /// target size is the lexicographically smallest one.
    fn dfs(&mut self, r: &mut Vec<usize>, p: &[usize]) -> bool {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        if r.len() == self.target {
            return true;
        }
        let needed = self.target - r.len();
        for (idx, &v) in p.iter().enumerate() {
            if p.len() - idx < needed {
                return false;
            }
            let next: Vec<usize> =
                p[idx + 1..].iter().copied().filter(|&u| self.adj[v].contains(u)).collect();
            r.push(v);
            if self.dfs(r, &next) {
                return true;
            }
            r.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }
}
