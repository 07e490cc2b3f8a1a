//! Structural invariants checked over randomized and exhaustive inputs.

mod common;

use common::{code_from, ring_group, selected_example};
use eaocws::bits::BitWord;
use eaocws::builder::{alice_word_operator, ancilla_pattern, initial_form};
use eaocws::induce::induce;
use eaocws::pauli::PauliOp;
use eaocws::search::{
    search_codewords, search_codewords_exhaustive, Budget, SearchMode, SearchProblem,
};
use eaocws::verify::dense::cross_validate;
use eaocws::verify::symplectic::symplectic_verify;
use eaocws::{BinaryWord, CodeLayout, GaugeGroup, Graph, Region, Verdict};
use proptest::prelude::*;

fn arb_op_631() -> impl Strategy<Value = PauliOp> {
    (0u64..64, 0u64..64, 0u64..8, 0u64..8).prop_map(|(xa, za, xb, zb)| {
        PauliOp::from_parts(
            BitWord::from_raw(xa, 6),
            BitWord::from_raw(za, 6),
            BitWord::from_raw(xb, 3),
            BitWord::from_raw(zb, 3),
        )
    })
}

// Everything in the induction map's domain: no X content on Bob.
fn arb_inducible_op_631() -> impl Strategy<Value = PauliOp> {
    (0u64..64, 0u64..64, 0u64..8).prop_map(|(xa, za, zb)| {
        PauliOp::from_parts(
            BitWord::from_raw(xa, 6),
            BitWord::from_raw(za, 6),
            BitWord::zeros(3),
            BitWord::from_raw(zb, 3),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// The commutation pairing is bilinear: a product anticommutes with c
    /// exactly when an odd number of its factors do.
    #[test]
    fn symplectic_form_is_bilinear(a in arb_op_631(), b in arb_op_631(), c in arb_op_631()) {
        let lhs = a.multiply(&b).anticommutes_with(&c);
        let rhs = a.anticommutes_with(&c) ^ b.anticommutes_with(&c);
        prop_assert_eq!(lhs, rhs);
    }

    /// The induction map turns operator products into word XORs.
    #[test]
    fn induction_is_linear_on_random_pairs(a in arb_inducible_op_631(), b in arb_inducible_op_631()) {
        let group = ring_group(6, 3, 1);
        let lhs = induce(&group, &a.multiply(&b)).unwrap();
        let rhs = induce(&group, &a).unwrap().xor(&induce(&group, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    /// Support weight is subadditive under products (cancellation can only
    /// shrink the support).
    #[test]
    fn weight_is_subadditive(a in arb_op_631(), b in arb_op_631()) {
        let product = a.multiply(&b);
        prop_assert!(
            product.weight(Region::Full, None).unwrap()
                <= a.weight(Region::Full, None).unwrap() + b.weight(Region::Full, None).unwrap()
        );
    }

    /// Text order and word order agree.
    #[test]
    fn word_order_matches_text_order(a in 0u64..64, ab in 0u64..8, b in 0u64..64, bb in 0u64..8) {
        let u = BinaryWord::new(BitWord::from_raw(a, 6), BitWord::from_raw(ab, 3));
        let v = BinaryWord::new(BitWord::from_raw(b, 6), BitWord::from_raw(bb, 3));
        prop_assert_eq!(u.cmp(&v), u.to_text().cmp(&v.to_text()));
    }

    /// The ancilla pattern of any canonical word equals its leading Alice
    /// bits, and the initial form spells the same pattern in ancilla X's.
    #[test]
    fn pattern_equals_leading_alice_bits(alice in 0u64..32, bob in 0u64..8) {
        let group = ring_group(6, 3, 1);
        let layout = *group.layout();
        // Gauge coordinate (Alice bit 6) stays clear: canonical form.
        let word = BinaryWord::new(BitWord::from_raw(alice, 6), BitWord::from_raw(bob, 3));
        let op = alice_word_operator(&group, &word).unwrap();
        let pattern = ancilla_pattern(&group, &op);
        prop_assert_eq!(&pattern, &word.alice().prefix(layout.s()));
        let init = initial_form(&group, &op).unwrap();
        prop_assert_eq!(&init.x_alice().prefix(layout.s()), &pattern);
    }
}

/// Exhaustive linearity check on a register small enough to enumerate
/// completely: every pair of the 64 Alice operators on a three-ring.
#[test]
fn induction_is_linear_exhaustively_on_three_ring() {
    let group =
        GaugeGroup::build(CodeLayout::new(3, 0, 0).unwrap(), Graph::ring(3).unwrap()).unwrap();
    let ops: Vec<PauliOp> = (0u64..8)
        .flat_map(|x| {
            (0u64..8).map(move |z| {
                PauliOp::from_parts(
                    BitWord::from_raw(x, 3),
                    BitWord::from_raw(z, 3),
                    BitWord::zeros(0),
                    BitWord::zeros(0),
                )
            })
        })
        .collect();
    for a in &ops {
        for b in &ops {
            let lhs = induce(&group, &a.multiply(b)).unwrap();
            let rhs = induce(&group, a).unwrap().xor(&induce(&group, b).unwrap());
            assert_eq!(lhs, rhs, "linearity failed for {a} * {b}");
        }
    }
}

/// Every operator on a small register survives a text round trip, for a
/// spread of register shapes including an empty Bob side.
#[test]
fn operator_text_roundtrip_is_exhaustive_on_small_registers() {
    for (n, c, r) in [(1, 0, 0), (2, 1, 0), (3, 0, 0), (3, 2, 1)] {
        let layout = CodeLayout::new(n, c, r).unwrap();
        for xa in 0u64..1 << n {
            for za in 0u64..1 << n {
                for xb in 0u64..1 << c {
                    for zb in 0u64..1 << c {
                        let op = PauliOp::from_parts(
                            BitWord::from_raw(xa, n),
                            BitWord::from_raw(za, n),
                            BitWord::from_raw(xb, c),
                            BitWord::from_raw(zb, c),
                        );
                        let back = PauliOp::parse(&op.to_text(), &layout).unwrap();
                        assert_eq!(back, op, "roundtrip failed for {}", op.to_text());
                    }
                }
            }
        }
    }
}

/// Ring-generated groups have the expected commutation pattern for a whole
/// family of register shapes.
#[test]
fn group_commutation_holds_across_ring_family() {
    for n in 3..=8 {
        for c in 0..=2usize.min(n - 1) {
            for r in 0..=1usize {
                if c + r > n {
                    continue;
                }
                let group = ring_group(n, c, r);
                assert!(
                    group.validate().is_empty(),
                    "commutation deviations for n={n} c={c} r={r}"
                );
            }
        }
    }
}

/// A search can never exceed one codeword per ancilla pattern.
#[test]
fn search_dimension_is_bounded_by_pattern_count() {
    for (n, c, r) in [(4, 1, 1), (5, 1, 1), (5, 2, 0), (6, 3, 1)] {
        let group = ring_group(n, c, r);
        let s = group.layout().s();
        for (mode, d) in
            [(SearchMode::Detect, 2), (SearchMode::Detect, 3), (SearchMode::Correct, 3)]
        {
            let problem = SearchProblem::build(&group, d, mode).unwrap();
            let outcome = search_codewords(&problem, 11, Budget::from_nodes(200_000));
            assert!(
                outcome.dimension <= 1 << s,
                "n={n} c={c} r={r} d={d} mode={mode:?}: {} > 2^{s}",
                outcome.dimension
            );
            assert!(outcome.codewords[0].is_zero());
        }
    }
}

/// Branch-and-bound agrees with plain exhaustive enumeration wherever the
/// latter is feasible, across register shapes including an empty Bob side.
#[test]
fn search_matches_exhaustive_oracle_on_small_instances() {
    for (n, c, r, mode, d) in [
        (5, 1, 1, SearchMode::Detect, 2),
        (5, 1, 1, SearchMode::Correct, 3),
        (3, 1, 0, SearchMode::Detect, 2),
        (3, 0, 0, SearchMode::Detect, 2),
    ] {
        let group = ring_group(n, c, r);
        let problem = SearchProblem::build(&group, d, mode).unwrap();
        let exhaustive = search_codewords_exhaustive(&problem).unwrap();
        let searched = search_codewords(&problem, 3, Budget::from_seconds(1.0));
        assert!(searched.optimal, "n={n} c={c} r={r} mode={mode:?} d={d}");
        assert_eq!(searched.dimension, exhaustive.dimension, "n={n} c={c} r={r} mode={mode:?}");
        assert_eq!(searched.codewords, exhaustive.codewords);
    }
}

/// Compatibility is a function of the pairwise XOR alone, so XOR-translating
/// a whole clique by any fixed word preserves pairwise compatibility.
#[test]
fn clique_compatibility_is_translation_invariant() {
    let group = ring_group(6, 3, 1);
    let problem = SearchProblem::build(&group, 3, SearchMode::Correct).unwrap();
    let outcome = search_codewords(&problem, 5, Budget::from_seconds(1.0));
    assert!(outcome.dimension >= 2);
    let words = &outcome.codewords;
    for shift in problem.candidates().iter().take(40) {
        for a in words {
            for b in words {
                if a == b {
                    continue;
                }
                let diff = a.xor(b);
                let shifted_diff = a.xor(shift).xor(&b.xor(shift));
                assert_eq!(diff, shifted_diff);
                assert!(problem.diff_compatible(&diff));
            }
        }
    }
}

/// Swapping a codeword for another member of the same ancilla-pattern class
/// leaves every verification verdict unchanged, and the two verification
/// routes stay in agreement on the swapped code.
#[test]
fn same_class_representative_swap_preserves_verdicts() {
    let group = ring_group(6, 3, 1);
    let original = selected_example(2);
    // 110100|101 sits in the same pattern class (11) as 110100|010.
    let swapped = code_from(
        &group,
        &["000000|000", "010100|111", "101000|100", "110100|101"],
        2,
    );
    {
        let (a, b) = (&original, &swapped);
        let run_a = symplectic_verify(a, 2).unwrap();
        let run_b = symplectic_verify(b, 2).unwrap();
        assert_eq!(run_a.verdict, run_b.verdict);
        assert_eq!(run_a.verdict, Verdict::Pass);
    }
    let swapped3 = code_from(
        &group,
        &["000000|000", "010100|111", "101000|100", "110100|101"],
        3,
    );
    assert_eq!(symplectic_verify(&swapped3, 3).unwrap().verdict, Verdict::Fail);
    let report2 = cross_validate(&swapped, 2).unwrap();
    assert!(report2.agree());
    let report3 = cross_validate(&swapped3, 3).unwrap();
    assert!(report3.agree());
}
