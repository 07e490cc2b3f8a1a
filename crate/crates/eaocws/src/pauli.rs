//! Phase-free Pauli operators on a bipartite Alice|Bob register.
//!
//! An operator is stored as four GF(2) vectors: X and Z supports on Alice,
//! X and Z supports on Bob. Global phases are deliberately dropped — every
//! question this crate asks of a Pauli (products, commutation, supports) is
//! well defined on the projective group, and the dense verifier rebuilds
//! exact matrices from the letters when phases matter.
//!
//! Text form: one uppercase letter per qubit, Alice then Bob, separated by
//! `|` (`"IZXZII|ZII"`). The separator may be omitted when Bob is empty.

use std::fmt;

use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::layout::{CodeLayout, Region, Role};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliOp {
    x_alice: BitWord,
    z_alice: BitWord,
    x_bob: BitWord,
    z_bob: BitWord,
}

impl PauliOp {
    pub fn identity(n: usize, c: usize) -> Self {
        PauliOp {
            x_alice: BitWord::zeros(n),
            z_alice: BitWord::zeros(n),
            x_bob: BitWord::zeros(c),
            z_bob: BitWord::zeros(c),
        }
    }

    pub fn from_parts(x_alice: BitWord, z_alice: BitWord, x_bob: BitWord, z_bob: BitWord) -> Self {
        assert_eq!(x_alice.len(), z_alice.len(), "Alice X/Z lengths differ");
        assert_eq!(x_bob.len(), z_bob.len(), "Bob X/Z lengths differ");
        PauliOp { x_alice, z_alice, x_bob, z_bob }
    }

    /// Z-only operator with the given supports on each side.
    pub fn z_only(z_alice: BitWord, z_bob: BitWord) -> Self {
        let n = z_alice.len();
        let c = z_bob.len();
        PauliOp { x_alice: BitWord::zeros(n), z_alice, x_bob: BitWord::zeros(c), z_bob }
    }

    /// Single-letter operator on one Alice qubit (zero-based position).
    pub fn single(n: usize, c: usize, pos: usize, letter: char) -> Self {
        let mut op = Self::identity(n, c);
        let (x, z) = letter_bits(letter).expect("letter must be one of IXYZ");
        op.x_alice.set(pos, x);
        op.z_alice.set(pos, z);
        op
    }

    /// Parses `text` and checks it against `layout` (n Alice letters, c Bob
    /// letters). The `|` may be omitted only when c = 0.
    pub fn parse(text: &str, layout: &CodeLayout) -> Result<Self> {
        let (alice, bob) = split_sides(text)?;
        if alice.chars().count() != layout.n() {
            return Err(Error::LengthMismatch {
                side: "Alice",
                expected: layout.n(),
                got: alice.chars().count(),
            });
        }
        let bob_len = bob.map_or(0, |b| b.chars().count());
        if bob.is_none() && layout.c() != 0 {
            return Err(Error::LengthMismatch { side: "Bob", expected: layout.c(), got: 0 });
        }
        if bob_len != layout.c() {
            return Err(Error::LengthMismatch { side: "Bob", expected: layout.c(), got: bob_len });
        }
        Self::from_letters(alice, bob.unwrap_or(""))
    }

    /// Parses `text`, inferring the register sizes from the string itself.
    pub fn parse_free(text: &str) -> Result<Self> {
        let (alice, bob) = split_sides(text)?;
        Self::from_letters(alice, bob.unwrap_or(""))
    }

    fn from_letters(alice: &str, bob: &str) -> Result<Self> {
        let read = |letters: &str, side: &'static str| -> Result<(BitWord, BitWord)> {
            let count = letters.chars().count();
            if count > crate::bits::MAX_BITS {
                return Err(Error::Parse(format!("{side} side longer than 64 qubits")));
            }
            let mut x = BitWord::zeros(count);
            let mut z = BitWord::zeros(count);
            for (i, ch) in letters.chars().enumerate() {
                let (xb, zb) = letter_bits(ch).ok_or_else(|| {
                    Error::Parse(format!(
                        "invalid Pauli letter {ch:?} at {side} position {} (expected I, X, Y, or Z)",
                        i + 1
                    ))
                })?;
                x.set(i, xb);
                z.set(i, zb);
            }
            Ok((x, z))
        };
        let (x_alice, z_alice) = read(alice, "Alice")?;
        let (x_bob, z_bob) = read(bob, "Bob")?;
        Ok(PauliOp { x_alice, z_alice, x_bob, z_bob })
    }

    pub fn n(&self) -> usize {
        self.x_alice.len()
    }

    pub fn c(&self) -> usize {
        self.x_bob.len()
    }

    pub fn x_alice(&self) -> &BitWord {
        &self.x_alice
    }

    pub fn z_alice(&self) -> &BitWord {
        &self.z_alice
    }

    pub fn x_bob(&self) -> &BitWord {
        &self.x_bob
    }

    pub fn z_bob(&self) -> &BitWord {
        &self.z_bob
    }

    pub fn is_identity(&self) -> bool {
        self.x_alice.is_zero() && self.z_alice.is_zero() && self.x_bob.is_zero() && self.z_bob.is_zero()
    }

    /// True when the Bob side is the identity.
    pub fn is_alice_only(&self) -> bool {
        self.x_bob.is_zero() && self.z_bob.is_zero()
    }

    /// Projective product: component-wise XOR of the four support vectors.
    pub fn multiply(&self, other: &Self) -> Self {
        PauliOp {
            x_alice: self.x_alice.xor(&other.x_alice),
            z_alice: self.z_alice.xor(&other.z_alice),
            x_bob: self.x_bob.xor(&other.x_bob),
            z_bob: self.z_bob.xor(&other.z_bob),
        }
    }

    /// Value of the symplectic form: `true` iff the operators anticommute.
    pub fn anticommutes_with(&self, other: &Self) -> bool {
        self.x_alice.dot(&other.z_alice)
            ^ self.z_alice.dot(&other.x_alice)
            ^ self.x_bob.dot(&other.z_bob)
            ^ self.z_bob.dot(&other.x_bob)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        !self.anticommutes_with(other)
    }

    /// Number of non-identity letters within `region`. Role-based regions
    /// (ancilla / ebit / gauge) need the layout.
    pub fn weight(&self, region: Region, layout: Option<&CodeLayout>) -> Result<usize> {
        let alice_support = self.x_alice.xor(&self.z_alice).xor(&self.x_alice.and(&self.z_alice));
        // Support = x OR z; computed as x ^ z ^ (x & z).
        let bob_support = self.x_bob.xor(&self.z_bob).xor(&self.x_bob.and(&self.z_bob));
        let role_weight = |role: Role, name: &'static str| -> Result<usize> {
            let layout = layout.ok_or(Error::RegionNeedsLayout(name))?;
            Ok(alice_support.masked(&layout.role_mask(role)).weight())
        };
        match region {
            Region::Alice => Ok(alice_support.weight()),
            Region::Bob => Ok(bob_support.weight()),
            Region::Full => Ok(alice_support.weight() + bob_support.weight()),
            Region::Ancilla => role_weight(Role::Ancilla, "ancilla"),
            Region::Ebit => role_weight(Role::Ebit, "ebit"),
            Region::Gauge => role_weight(Role::Gauge, "gauge"),
        }
    }

    fn side_to_string(x: &BitWord, z: &BitWord) -> String {
        (0..x.len()).map(|i| letter_char(x.get(i), z.get(i))).collect()
    }

    /// Canonical text form. The `|` separator is printed only when Bob is
    /// non-empty.
    pub fn to_text(&self) -> String {
        let alice = Self::side_to_string(&self.x_alice, &self.z_alice);
        if self.c() == 0 {
            alice
        } else {
            format!("{alice}|{}", Self::side_to_string(&self.x_bob, &self.z_bob))
        }
    }
}

fn split_sides(text: &str) -> Result<(&str, Option<&str>)> {
    let mut parts = text.split('|');
    let alice = parts.next().unwrap_or("");
    let bob = parts.next();
    if parts.next().is_some() {
        return Err(Error::Parse(format!("more than one '|' separator in {text:?}")));
    }
    // A trailing bar with an empty Bob side is accepted for c = 0 inputs.
    Ok((alice, bob.filter(|b| !b.is_empty())))
}

fn letter_bits(ch: char) -> Option<(bool, bool)> {
    match ch {
        'I' => Some((false, false)),
        'X' => Some((true, false)),
        'Z' => Some((false, true)),
        'Y' => Some((true, true)),
        _ => None,
    }
}

fn letter_char(x: bool, z: bool) -> char {
    match (x, z) {
        (false, false) => 'I',
        (true, false) => 'X',
        (false, true) => 'Z',
        (true, true) => 'Y',
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOp({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layout(n: usize, c: usize) -> CodeLayout {
        CodeLayout::new(n, c, 0).unwrap()
    }

    #[test]
    fn parse_extracts_support_vectors() {
        let op = PauliOp::parse("IZXZII|ZII", &CodeLayout::new(6, 3, 1).unwrap()).unwrap();
        assert_eq!(op.x_alice().to_string(), "001000");
        assert_eq!(op.z_alice().to_string(), "010100");
        assert_eq!(op.x_bob().to_string(), "000");
        assert_eq!(op.z_bob().to_string(), "100");
    }

    #[test]
    fn parse_rejects_lowercase_and_bad_lengths() {
        let l = layout(6, 3);
        assert!(PauliOp::parse("izxzii|zii", &l).is_err());
        assert!(PauliOp::parse("IZXZII|ZI", &l).is_err());
        assert!(PauliOp::parse("IZXZII", &l).is_err());
        assert!(PauliOp::parse("IZXZII|ZII|Z", &l).is_err());
    }

    #[test]
    fn separator_optional_for_empty_bob() {
        let l = layout(1, 0);
        assert_eq!(PauliOp::parse("Y", &l).unwrap().to_text(), "Y");
        assert_eq!(PauliOp::parse("Y|", &l).unwrap().to_text(), "Y");
    }

    #[test]
    fn product_xors_supports() {
        let l = layout(6, 3);
        let a = PauliOp::parse("ZZIZII|IZI", &l).unwrap();
        let b = PauliOp::parse("IIZXZI|IZI", &l).unwrap();
        assert_eq!(a.multiply(&b).to_text(), "ZZZYZI|III");
        let x = PauliOp::parse("X", &layout(1, 0)).unwrap();
        let z = PauliOp::parse("Z", &layout(1, 0)).unwrap();
        assert_eq!(x.multiply(&z).to_text(), "Y");
    }

    #[test]
    fn commutation_matches_symplectic_form() {
        let l = layout(6, 3);
        let a = PauliOp::parse("IIIIIZ|III", &l).unwrap();
        let b = PauliOp::parse("ZIIIZX|III", &l).unwrap();
        assert!(a.anticommutes_with(&b));
        let s3 = PauliOp::parse("IZXZII|ZII", &l).unwrap();
        let s4 = PauliOp::parse("IIZXZI|IZI", &l).unwrap();
        assert!(s3.commutes_with(&s4));
    }

    #[test]
    fn weights_by_region() {
        let cl = CodeLayout::new(6, 3, 1).unwrap();
        let op = PauliOp::parse("ZZZYZI|III", &cl).unwrap();
        assert_eq!(op.weight(Region::Alice, None).unwrap(), 5);
        assert_eq!(op.weight(Region::Bob, None).unwrap(), 0);
        assert_eq!(op.weight(Region::Full, None).unwrap(), 5);
        assert_eq!(op.weight(Region::Ancilla, Some(&cl)).unwrap(), 2);
        assert_eq!(op.weight(Region::Gauge, Some(&cl)).unwrap(), 0);
        assert!(op.weight(Region::Gauge, None).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let l = CodeLayout::new(6, 3, 1).unwrap();
        for text in ["ZZZYZI|III", "IIIIII|III", "XYZIXY|ZYX"] {
            let op = PauliOp::parse(text, &l).unwrap();
            assert_eq!(op.to_text(), text);
        }
    }
}
