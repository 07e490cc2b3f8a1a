//! From codewords to an assembled code: word operators, Bob elimination,
//! ancilla patterns, and the logical basis selection.
//!
//! A codeword w labels the basis state `Z^w |base⟩`. Its raw word operator
//! `Z^w` may touch Bob; multiplying by the ebit generators `s_{s+j}` clears
//! each Bob Z and leaves an equivalent Alice-only operator. The ancilla
//! pattern of an operator W is the s-bit vector of its commutation failures
//! with `s_1 … s_s`; for a word operator it equals the first s bits of the
//! codeword, and it survives Bob elimination because distinct `s` generators
//! commute. Codewords sharing a pattern encode through the same ancilla
//! preparation, so one representative per pattern class is kept; the class
//! count is the code dimension K.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::group::GaugeGroup;
use crate::pauli::PauliOp;
use crate::word::BinaryWord;

/// The raw word operator `Z^w` on Alice and Bob.
pub fn word_operator(group: &GaugeGroup, word: &BinaryWord) -> PauliOp {
    debug_assert_eq!(word.n(), group.layout().n());
    debug_assert_eq!(word.c(), group.layout().c());
    PauliOp::z_only(*word.alice(), *word.bob())
}

/// Multiplies `op` by one ebit generator `s_{s+j}` per Bob Z to produce an
/// equivalent operator acting on Alice alone. Fails if `op` has Bob X
/// content, which no generator can cancel qubit-locally.
pub fn eliminate_bob(group: &GaugeGroup, op: &PauliOp) -> Result<PauliOp> {
    if !op.x_bob().is_zero() {
        return Err(Error::BobSupport(format!(
            "cannot eliminate Bob side of {}: X content on Bob",
            op.to_text()
        )));
    }
    let s = group.layout().s();
    let mut out = *op;
    for j in op.z_bob().ones() {
        out = out.multiply(group.s_op(s + j + 1));
    }
    debug_assert!(out.is_alice_only());
    Ok(out)
}

/// `eliminate_bob(word_operator(w))`: the Alice-only operator whose action on
/// the base state produces the codeword state.
pub fn alice_word_operator(group: &GaugeGroup, word: &BinaryWord) -> Result<PauliOp> {
    eliminate_bob(group, &word_operator(group, word))
}

/// s-bit commutation fingerprint against the ancilla generators `s_1 … s_s`:
/// bit i is set iff `op` anticommutes with `s_{i+1}`.
pub fn ancilla_pattern(group: &GaugeGroup, op: &PauliOp) -> BitWord {
    let s = group.layout().s();
    let mut pattern = BitWord::zeros(s);
    for i in 0..s {
        pattern.set(i, op.anticommutes_with(group.s_op(i + 1)));
    }
    pattern
}

/// Rewrites an Alice-only word operator into the operator it corresponds to
/// before the graph-state encoding circuit: X supports become Z's, and Z
/// supports become X's spread over the graph neighbourhoods
/// (`x ← z ⊕ A·x`, `z ← x`). X's on the ancilla block of the result spell
/// out the pattern the ancillas must be prepared in.
pub fn initial_form(group: &GaugeGroup, op: &PauliOp) -> Result<PauliOp> {
    if !op.is_alice_only() {
        return Err(Error::BobSupport(format!(
            "initial form is defined for Alice-only operators, got {}",
            op.to_text()
        )));
    }
    let x_init = op.z_alice().xor(&group.graph().mul_vector(op.x_alice()));
    let z_init = *op.x_alice();
    let c = group.layout().c();
    Ok(PauliOp::from_parts(x_init, z_init, BitWord::zeros(c), BitWord::zeros(c)))
}

/// Codewords sharing one ancilla pattern, with the lexicographically
/// smallest member as class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AncillaClass {
    pub pattern: BitWord,
    pub members: Vec<BinaryWord>,
    pub representative: BinaryWord,
}

/// Groups codewords by ancilla pattern. Patterns are computed from the
/// Bob-eliminated word operators; classes come back sorted by pattern and
/// members sorted within each class.
pub fn classify_by_pattern(
    group: &GaugeGroup,
    codewords: &[BinaryWord],
) -> Result<Vec<AncillaClass>> {
    let mut buckets: std::collections::BTreeMap<BitWord, Vec<BinaryWord>> =
        std::collections::BTreeMap::new();
    for word in codewords {
        let op = alice_word_operator(group, word)?;
        let pattern = ancilla_pattern(group, &op);
        debug_assert_eq!(
            pattern,
            word.alice().prefix(group.layout().s()),
            "pattern must equal the ancilla bits of the codeword"
        );
        buckets.entry(pattern).or_default().push(*word);
    }
    Ok(buckets
        .into_iter()
        .map(|(pattern, mut members)| {
            members.sort();
            let representative = members[0];
            AncillaClass { pattern, members, representative }
        })
        .collect())
}

/// One codeword per pattern class, ordered by pattern.
pub fn select_representatives(classes: &[AncillaClass]) -> Vec<BinaryWord> {
    classes.iter().map(|c| c.representative).collect()
}

/// True when the set is closed under XOR (and therefore a coset structure
/// with the zero word, i.e. a linear classical code).
pub fn is_additive(codewords: &[BinaryWord]) -> bool {
    let set: BTreeSet<&BinaryWord> = codewords.iter().collect();
    codewords
        .iter()
        .flat_map(|a| codewords.iter().map(move |b| a.xor(b)))
        .all(|w| set.contains(&w))
}

/// Headline parameters. `dimension` is K, the number of pattern classes;
/// `additive` records whether the codeword set is XOR-closed, which decides
/// between the `[[n,k,r,d;c]]` and `((n,K,r,d;c))` displays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    #[serde(rename = "K")]
    pub dimension: usize,
    pub r: usize,
    pub distance: usize,
    pub c: usize,
    pub additive: bool,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.additive && self.dimension.is_power_of_two() {
            let k = self.dimension.trailing_zeros();
            write!(f, "[[{},{},{},{};{}]]", self.n, k, self.r, self.distance, self.c)
        } else {
            write!(f, "(({},{},{},{};{}))", self.n, self.dimension, self.r, self.distance, self.c)
        }
    }
}

/// A fully assembled code: the gauge group plus one codeword per logical
/// basis state (distinct patterns, zero word first) and the distance the
/// code is claimed to reach. Verification of the claim lives elsewhere.
#[derive(Clone, Debug)]
pub struct EaocwsCode {
    group: GaugeGroup,
    codewords: Vec<BinaryWord>,
    claimed_distance: usize,
}

impl EaocwsCode {
    pub fn new(
        group: GaugeGroup,
        codewords: Vec<BinaryWord>,
        claimed_distance: usize,
    ) -> Result<Self> {
        if codewords.is_empty() {
            return Err(Error::EmptyCodewords);
        }
        if !codewords[0].is_zero() {
            return Err(Error::MissingZeroCodeword);
        }
        let layout = group.layout();
        let mut seen = BTreeSet::new();
        let mut patterns = BTreeSet::new();
        for word in &codewords {
            if word.n() != layout.n() || word.c() != layout.c() {
                return Err(Error::LengthMismatch {
                    side: "Alice",
                    expected: layout.n(),
                    got: word.n(),
                });
            }
            if !word.alice().masked(&layout.gauge_mask()).is_zero() {
                return Err(Error::NonCanonicalCodeword(word.to_text()));
            }
            if !seen.insert(*word) {
                return Err(Error::DuplicateCodeword(word.to_text()));
            }
            let pattern = word.alice().prefix(layout.s());
            if !patterns.insert(pattern) {
                return Err(Error::PatternCollision(format!(
                    "codeword {} repeats ancilla pattern {}",
                    word.to_text(),
                    pattern
                )));
            }
        }
        Ok(EaocwsCode { group, codewords, claimed_distance })
    }

    pub fn group(&self) -> &GaugeGroup {
        &self.group
    }

    pub fn layout(&self) -> &crate::layout::CodeLayout {
        self.group.layout()
    }

    pub fn codewords(&self) -> &[BinaryWord] {
        &self.codewords
    }

    pub fn dimension(&self) -> usize {
        self.codewords.len()
    }

    pub fn claimed_distance(&self) -> usize {
        self.claimed_distance
    }

    /// Ancilla pattern of each codeword, in codeword order.
    pub fn patterns(&self) -> Vec<BitWord> {
        let s = self.layout().s();
        self.codewords.iter().map(|w| w.alice().prefix(s)).collect()
    }

    /// Raw word operators `Z^w`, in codeword order.
    pub fn raw_word_operators(&self) -> Vec<PauliOp> {
        self.codewords.iter().map(|w| word_operator(&self.group, w)).collect()
    }

    /// Bob-eliminated (Alice-only) word operators, in codeword order.
    pub fn word_operators(&self) -> Result<Vec<PauliOp>> {
        self.codewords.iter().map(|w| alice_word_operator(&self.group, w)).collect()
    }

    pub fn params(&self) -> CodeParams {
        let layout = self.layout();
        CodeParams {
            n: layout.n(),
            dimension: self.dimension(),
            r: layout.r(),
            distance: self.claimed_distance,
            c: layout.c(),
            additive: is_additive(&self.codewords),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::layout::CodeLayout;

    fn example_group() -> GaugeGroup {
        GaugeGroup::build(CodeLayout::new(6, 3, 1).unwrap(), Graph::ring(6).unwrap()).unwrap()
    }

    const EIGHT_CODEWORDS: [&str; 8] = [
        "000000|000",
        "110100|010",
        "110100|101",
        "110100|110",
        "111100|011",
        "000010|101",
        "010100|111",
        "101000|100",
    ];

    fn eight_words(group: &GaugeGroup) -> Vec<BinaryWord> {
        EIGHT_CODEWORDS
            .iter()
            .map(|t| BinaryWord::parse(t, group.layout()).unwrap())
            .collect()
    }

    #[test]
    fn raw_word_operators_match() {
        let group = example_group();
        let raw: Vec<String> = eight_words(&group)
            .iter()
            .map(|w| word_operator(&group, w).to_text())
            .collect();
        assert_eq!(
            raw,
            vec![
                "IIIIII|III",
                "ZZIZII|IZI",
                "ZZIZII|ZIZ",
                "ZZIZII|ZZI",
                "ZZZZII|IZZ",
                "IIIIZI|ZIZ",
                "IZIZII|ZZZ",
                "ZIZIII|ZII",
            ]
        );
    }

    #[test]
    fn bob_elimination_matches() {
        let group = example_group();
        let eliminated: Vec<String> = eight_words(&group)
            .iter()
            .map(|w| alice_word_operator(&group, w).unwrap().to_text())
            .collect();
        assert_eq!(
            eliminated,
            vec![
                "IIIIII|III",
                "ZZZYZI|III",
                "ZIXZXZ|III",
                "ZIYXZI|III",
                "ZZIXYZ|III",
                "IZXIYZ|III",
                "IIYYYZ|III",
                "ZZYZII|III",
            ]
        );
        let x_bob = PauliOp::parse("IIIIII|XII", group.layout()).unwrap();
        assert!(eliminate_bob(&group, &x_bob).is_err());
    }

    #[test]
    fn patterns_match_codeword_ancilla_bits() {
        let group = example_group();
        let expected = ["00", "11", "11", "11", "11", "00", "01", "10"];
        for (word, want) in eight_words(&group).iter().zip(expected) {
            let op = alice_word_operator(&group, word).unwrap();
            assert_eq!(ancilla_pattern(&group, &op).to_string(), want, "word {word}");
        }
    }

    #[test]
    fn classification_selects_known_representatives() {
        let group = example_group();
        let classes = classify_by_pattern(&group, &eight_words(&group)).unwrap();
        assert_eq!(classes.len(), 4);
        let patterns: Vec<String> = classes.iter().map(|c| c.pattern.to_string()).collect();
        assert_eq!(patterns, vec!["00", "01", "10", "11"]);
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![2, 1, 1, 4]);
        let reps: Vec<String> =
            select_representatives(&classes).iter().map(|w| w.to_text()).collect();
        assert_eq!(reps, vec!["000000|000", "010100|111", "101000|100", "110100|010"]);
    }

    #[test]
    fn initial_forms_match() {
        let group = example_group();
        let initial: Vec<String> = eight_words(&group)
            .iter()
            .map(|w| {
                let op = alice_word_operator(&group, w).unwrap();
                initial_form(&group, &op).unwrap().to_text()
            })
            .collect();
        assert_eq!(
            initial,
            vec![
                "IIIIII|III",
                "XXIYII|III",
                "XXZXZI|III",
                "XXZYII|III",
                "XXXYZI|III",
                "IIZIYI|III",
                "IXZYZI|III",
                "XIYIII|III",
            ]
        );
    }

    #[test]
    fn initial_form_spells_pattern_in_ancilla_x() {
        let group = example_group();
        let s = group.layout().s();
        for word in eight_words(&group) {
            let op = alice_word_operator(&group, &word).unwrap();
            let init = initial_form(&group, &op).unwrap();
            assert_eq!(
                init.x_alice().prefix(s),
                ancilla_pattern(&group, &op),
                "initial X block must equal the pattern for {word}"
            );
        }
    }

    #[test]
    fn additivity_is_xor_closure() {
        let group = example_group();
        let layout = *group.layout();
        let selected: Vec<BinaryWord> =
            ["000000|000", "010100|111", "101000|100", "110100|010"]
                .iter()
                .map(|t| BinaryWord::parse(t, &layout).unwrap())
                .collect();
        assert!(!is_additive(&selected));
        let pair: Vec<BinaryWord> = ["000000|000", "110100|010"]
            .iter()
            .map(|t| BinaryWord::parse(t, &layout).unwrap())
            .collect();
        assert!(is_additive(&pair));
    }

    #[test]
    fn code_assembly_validates_and_reports_params() {
        let group = example_group();
        let layout = *group.layout();
        let words = |texts: &[&str]| -> Vec<BinaryWord> {
            texts.iter().map(|t| BinaryWord::parse(t, &layout).unwrap()).collect()
        };
        let selected = words(&["000000|000", "010100|111", "101000|100", "110100|010"]);
        let code = EaocwsCode::new(group.clone(), selected, 3).unwrap();
        assert_eq!(code.dimension(), 4);
        assert_eq!(code.params().to_string(), "((6,4,1,3;3))");
        assert_eq!(
            code.patterns().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            vec!["00", "01", "10", "11"]
        );

        let no_zero = words(&["010100|111"]);
        assert!(matches!(
            EaocwsCode::new(group.clone(), no_zero, 3),
            Err(Error::MissingZeroCodeword)
        ));
        let dup = words(&["000000|000", "010100|111", "010100|111"]);
        assert!(matches!(EaocwsCode::new(group.clone(), dup, 3), Err(Error::DuplicateCodeword(_))));
        let gauge_bit = words(&["000000|000", "000001|000"]);
        assert!(matches!(
            EaocwsCode::new(group.clone(), gauge_bit, 3),
            Err(Error::NonCanonicalCodeword(_))
        ));
        let same_pattern = words(&["000000|000", "110100|010", "110100|101"]);
        assert!(matches!(
            EaocwsCode::new(group, same_pattern, 3),
            Err(Error::PatternCollision(_))
        ));
    }

    #[test]
    fn additive_pair_displays_bracket_form() {
        let group = example_group();
        let layout = *group.layout();
        let pair = vec![
            BinaryWord::parse("000000|000", &layout).unwrap(),
            BinaryWord::parse("110100|010", &layout).unwrap(),
        ];
        let code = EaocwsCode::new(group, pair, 2).unwrap();
        assert_eq!(code.params().to_string(), "[[6,1,1,2;3]]");
    }
}
