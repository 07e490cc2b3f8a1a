//! Fixed-length GF(2) vectors packed into a `u64`.
//!
//! Bit 0 is qubit 1 (the leftmost character in text form). Lexicographic
//! order compares bit 0 first, so `"01" < "10"` as words even though the
//! packed integers compare the other way.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_BITS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    bits: u64,
    len: u8,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_BITS, "BitWord supports up to {MAX_BITS} bits");
        BitWord { bits: 0, len: len as u8 }
    }

    pub fn from_raw(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_BITS);
        let mask = if len == MAX_BITS { u64::MAX } else { (1u64 << len) - 1 };
        BitWord { bits: bits & mask, len: len as u8 }
    }

    /// Word with ones at the given zero-based positions.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut w = Self::zeros(len);
        for &i in indices {
            w.set(i, true);
        }
        w
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(text: &str) -> Result<Self> {
        if text.len() > MAX_BITS {
            return Err(Error::Parse(format!("bit string longer than {MAX_BITS}: {text:?}")));
        }
        let mut w = Self::zeros(text.len());
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid character {other:?} at position {} in bit string {text:?}",
                        i + 1
                    )))
                }
            }
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len());
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn raw(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn xor(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        BitWord { bits: self.bits ^ other.bits, len: self.len }
    }

    pub fn and(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        BitWord { bits: self.bits & other.bits, len: self.len }
    }

    /// GF(2) inner product: parity of the AND.
    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    /// Copy with every bit outside `mask` cleared.
    pub fn masked(&self, mask: &Self) -> Self {
        self.and(mask)
    }

    /// The first `len` bits as a shorter word.
    pub fn prefix(&self, len: usize) -> Self {
        assert!(len <= self.len(), "prefix longer than the word");
        Self::from_raw(self.raw(), len)
    }

    /// Copy with every bit inside `mask` cleared.
    pub fn cleared(&self, mask: &Self) -> Self {
        debug_assert_eq!(self.len, mask.len);
        BitWord { bits: self.bits & !mask.bits, len: self.len }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.get(i))
    }
}

impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len, "comparing words of different length");
        // Lexicographic with bit 0 most significant: compare bit-reversed values.
        let a = self.bits.reverse_bits();
        let b = other.bits.reverse_bits();
        a.cmp(&b)
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let w = BitWord::parse("010100").unwrap();
        assert_eq!(w.to_string(), "010100");
        assert_eq!(w.weight(), 2);
        assert!(w.get(1));
        assert!(!w.get(0));
    }

    #[test]
    fn rejects_bad_chars() {
        assert!(BitWord::parse("01x0").is_err());
    }

    #[test]
    fn lexicographic_order_reads_left_to_right() {
        let a = BitWord::parse("01").unwrap();
        let b = BitWord::parse("10").unwrap();
        assert!(a < b);
        let c = BitWord::parse("0011").unwrap();
        let d = BitWord::parse("0100").unwrap();
        assert!(c < d);
    }

    #[test]
    fn dot_is_parity_of_overlap() {
        let a = BitWord::parse("1101").unwrap();
        let b = BitWord::parse("1011").unwrap();
        assert!(!a.dot(&b)); // overlap {0, 3}: even
        let c = BitWord::parse("1000").unwrap();
        assert!(a.dot(&c));
    }
}
