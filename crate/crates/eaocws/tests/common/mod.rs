#![allow(dead_code)]

use eaocws::bits::BitWord;
use eaocws::{BinaryWord, CodeLayout, EaocwsCode, GaugeGroup, Graph};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn ring_group(n: usize, c: usize, r: usize) -> GaugeGroup {
    GaugeGroup::build(CodeLayout::new(n, c, r).unwrap(), Graph::ring(n).unwrap()).unwrap()
}

pub fn code_from(group: &GaugeGroup, words: &[&str], distance: usize) -> EaocwsCode {
    let layout = *group.layout();
    let codewords = words.iter().map(|t| BinaryWord::parse(t, &layout).unwrap()).collect();
    EaocwsCode::new(group.clone(), codewords, distance).unwrap()
}

/// The four-codeword selection on the six-ring with three ebit pairs and
/// one gauge qubit.
pub fn selected_example(distance: usize) -> EaocwsCode {
    code_from(
        &ring_group(6, 3, 1),
        &["000000|000", "010100|111", "101000|100", "110100|010"],
        distance,
    )
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        if !edges.is_empty() || n == 1 {
            return Graph::from_edges(n, &edges).unwrap();
        }
    }
}

/// A syntactically valid code with random codewords: zero first, distinct
/// ancilla patterns, gauge coordinates clear. No attempt at correctness —
/// most of these fail verification, which is the interesting half.
pub fn random_code(rng: &mut ChaCha8Rng, group: &GaugeGroup, distance: usize) -> EaocwsCode {
    let layout = *group.layout();
    let (n, c, s) = (layout.n(), layout.c(), layout.s());
    let max_extra = (1usize << s).min(4) - 1;
    let extra = if max_extra == 0 { 0 } else { rng.gen_range(0..=max_extra) };
    let mut patterns: Vec<u64> = (1..1u64 << s).collect();
    patterns.shuffle(rng);
    let mut words = vec![BinaryWord::zeros(n, c)];
    for &pattern in patterns.iter().take(extra) {
        let ebit_bits = if c == 0 { 0 } else { rng.gen_range(0..1u64 << c) };
        let alice = pattern | ebit_bits << s;
        let bob = if c == 0 { 0 } else { rng.gen_range(0..1u64 << c) };
        words.push(BinaryWord::new(BitWord::from_raw(alice, n), BitWord::from_raw(bob, c)));
    }
    EaocwsCode::new(group.clone(), words, distance).unwrap()
}

/// A random register shape with n + c ≤ 9 and at least one ancilla, paired
/// with a ring or random graph.
pub fn random_instance(rng: &mut ChaCha8Rng) -> Option<GaugeGroup> {
    let n = rng.gen_range(2..=6);
    let c = rng.gen_range(0..=(9 - n).min(3));
    let r = if rng.gen_bool(0.5) { 1 } else { 0 };
    if c + r >= n {
        return None;
    }
    let graph = if n >= 3 && rng.gen_bool(0.5) {
        Graph::ring(n).unwrap()
    } else {
        random_graph(rng, n)
    };
    Some(GaugeGroup::build(CodeLayout::new(n, c, r).unwrap(), graph).unwrap())
}
