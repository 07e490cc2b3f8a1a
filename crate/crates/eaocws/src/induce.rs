//! The classical induction map: Pauli errors on Alice become binary words.
//!
//! Multiplying an error by group generators trades every X on Alice qubit l
//! for Z's on l's graph neighbours — plus a Z on Bob qubit j when l is the
//! ebit position s + j. Any Alice-side error is therefore equivalent, modulo
//! the gauge group's X-type content, to a Z-type operator `Z^w` labelled by a
//! binary word w. Gauge reduction then clears the Alice gauge coordinates of
//! w (Z's there are gauge operators and act trivially on the code space);
//! Bob coordinates are never reduced.
//!
//! The map is linear: the word of a product is the XOR of the words.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::GaugeGroup;
use crate::layout::CodeLayout;
use crate::pauli::PauliOp;
use crate::word::BinaryWord;

/// Word of the error `Z^v X^u ⊗ Z^w`: Alice side `v ⊕ ⊕_{l: u_l} row_l`,
/// Bob side `w` XORed with the ebit-region bits of u. Defined whenever the
/// operator has no X content on Bob (channel errors are Alice-only, but the
/// map extends to the Z-type group generators, all of which it sends to a
/// word that gauge-reduces to zero).
pub fn induce(group: &GaugeGroup, error: &PauliOp) -> Result<BinaryWord> {
    let layout = group.layout();
    if error.n() != layout.n() || error.c() != layout.c() {
        return Err(Error::LengthMismatch {
            side: "Alice",
            expected: layout.n(),
            got: error.n(),
        });
    }
    if !error.x_bob().is_zero() {
        return Err(Error::BobSupport(format!(
            "cannot induce a word from {}: X content on Bob, whose qubits are error-free",
            error.to_text()
        )));
    }
    let mut alice = *error.z_alice();
    let mut bob = *error.z_bob();
    for l in error.x_alice().ones() {
        alice = alice.xor(group.graph().row(l + 1));
        if let Some(j) = layout.ebit_index(l) {
            bob.set(j, !bob.get(j));
        }
    }
    Ok(BinaryWord::new(alice, bob))
}

/// Clears the Alice gauge coordinates of `word`; Bob bits pass through.
pub fn gauge_reduce(layout: &CodeLayout, word: &BinaryWord) -> BinaryWord {
    BinaryWord::new(word.alice().cleared(&layout.gauge_mask()), *word.bob())
}

/// `gauge_reduce(induce(error))` in one step.
pub fn induce_reduced(group: &GaugeGroup, error: &PauliOp) -> Result<BinaryWord> {
    Ok(gauge_reduce(group.layout(), &induce(group, error)?))
}

/// All non-identity Alice-side errors of weight 1..=`max_weight`, in a fixed
/// deterministic order: weight ascending, then support positions in
/// lexicographic order, then letters (X < Y < Z) with the leftmost position
/// varying slowest.
pub fn enumerate_alice_errors(layout: &CodeLayout, max_weight: usize) -> Vec<PauliOp> {
    let n = layout.n();
    let c = layout.c();
    let max_weight = max_weight.min(n);
    let letters = ['X', 'Y', 'Z'];
    let mut out = Vec::new();
    for weight in 1..=max_weight {
        for combo in (0..n).combinations(weight) {
            for mut code in 0..3usize.pow(weight as u32) {
                let mut op = PauliOp::identity(n, c);
                // Decode base-3 digits with the leftmost position slowest.
                for slot in (0..weight).rev() {
                    op = op.multiply(&PauliOp::single(n, c, combo[slot], letters[code % 3]));
                    code /= 3;
                }
                out.push(op);
            }
        }
    }
    out
}

/// Errors grouped by their reduced induced word. The zero word appears as a
/// key only when some enumerated error reduces to it.
#[derive(Clone, Debug)]
pub struct EffectiveErrors {
    classes: BTreeMap<BinaryWord, Vec<PauliOp>>,
    max_weight: usize,
}

impl EffectiveErrors {
    /// Groups every Alice error of weight 1..=`max_weight` by reduced word.
    pub fn build(group: &GaugeGroup, max_weight: usize) -> Result<Self> {
        let mut classes: BTreeMap<BinaryWord, Vec<PauliOp>> = BTreeMap::new();
        for error in enumerate_alice_errors(group.layout(), max_weight) {
            let word = induce_reduced(group, &error)?;
            classes.entry(word).or_default().push(error);
        }
        Ok(EffectiveErrors { classes, max_weight })
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn classes(&self) -> &BTreeMap<BinaryWord, Vec<PauliOp>> {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Distinct nonzero reduced words, ascending.
    pub fn nonzero_words(&self) -> Vec<BinaryWord> {
        self.classes.keys().filter(|w| !w.is_zero()).copied().collect()
    }

    /// Errors whose reduced word is zero (gauge-equivalent to the identity
    /// word). Empty when no enumerated error reduces to zero.
    pub fn zero_class(&self) -> &[PauliOp] {
        self.classes
            .iter()
            .find(|(w, _)| w.is_zero())
            .map(|(_, errs)| errs.as_slice())
            .unwrap_or(&[])
    }
}
