//! Classical binary words split across the Alice|Bob registers.
//!
//! A `BinaryWord` labels a Z-type operator `Z^alice|Z^bob`: it is the
//! exponent vector, not the operator itself. Words order lexicographically
//! on the concatenated string `alice|bob`, with the leftmost bit most
//! significant, so sorted lists read like the text form.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::layout::CodeLayout;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    alice: BitWord,
    bob: BitWord,
}

impl BinaryWord {
    pub fn new(alice: BitWord, bob: BitWord) -> Self {
        BinaryWord { alice, bob }
    }

    pub fn zeros(n: usize, c: usize) -> Self {
        BinaryWord { alice: BitWord::zeros(n), bob: BitWord::zeros(c) }
    }

    /// Parses `"110100|010"`; the `|` may be omitted only when `layout.c() == 0`.
    pub fn parse(text: &str, layout: &CodeLayout) -> Result<Self> {
        let mut parts = text.split('|');
        let alice_text = parts.next().unwrap_or("");
        let bob_text = parts.next();
        if parts.next().is_some() {
            return Err(Error::Parse(format!("more than one '|' separator in {text:?}")));
        }
        let bob_text = bob_text.filter(|b| !b.is_empty());
        let alice = BitWord::parse(alice_text)?;
        let bob = match bob_text {
            Some(b) => BitWord::parse(b)?,
            None => BitWord::zeros(layout.c()),
        };
        if alice.len() != layout.n() {
            return Err(Error::LengthMismatch {
                side: "Alice",
                expected: layout.n(),
                got: alice.len(),
            });
        }
        if bob.len() != layout.c() {
            return Err(Error::LengthMismatch { side: "Bob", expected: layout.c(), got: bob.len() });
        }
        Ok(BinaryWord { alice, bob })
    }

    pub fn alice(&self) -> &BitWord {
        &self.alice
    }

    pub fn bob(&self) -> &BitWord {
        &self.bob
    }

    pub fn n(&self) -> usize {
        self.alice.len()
    }

    pub fn c(&self) -> usize {
        self.bob.len()
    }

    pub fn is_zero(&self) -> bool {
        self.alice.is_zero() && self.bob.is_zero()
    }

    pub fn xor(&self, other: &Self) -> Self {
        BinaryWord { alice: self.alice.xor(&other.alice), bob: self.bob.xor(&other.bob) }
    }

    pub fn weight(&self) -> usize {
        self.alice.weight() + self.bob.weight()
    }

    /// Canonical text form; the `|` is printed only when Bob is non-empty.
    pub fn to_text(&self) -> String {
        if self.bob.is_empty() {
            self.alice.to_string()
        } else {
            format!("{}|{}", self.alice, self.bob)
        }
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alice.cmp(&other.alice).then_with(|| self.bob.cmp(&other.bob))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({})", self.to_text())
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        let mut parts = text.split('|');
        let alice = BitWord::parse(parts.next().unwrap_or("")).map_err(D::Error::custom)?;
        let bob = match parts.next() {
            Some(b) if !b.is_empty() => BitWord::parse(b).map_err(D::Error::custom)?,
            _ => BitWord::zeros(0),
        };
        if parts.next().is_some() {
            return Err(D::Error::custom(format!("more than one '|' in {text:?}")));
        }
        Ok(BinaryWord { alice, bob })
    }
}
