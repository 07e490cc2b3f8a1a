//! Register layout: which Alice positions are ancillas, ebit halves, and
//! gauge qubits.
//!
//! Alice holds `n` qubits, Bob holds `c`. On Alice, positions `1..=s` are
//! ancillas, `s+1..=s+c` are the local halves of the `c` shared ebit pairs,
//! and the last `r` positions are gauge qubits (`s = n - c - r`). All
//! zero-based indices in code refer to these one-based positions shifted
//! down by one.

use serde::{Deserialize, Serialize};

use crate::bits::BitWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LayoutRepr", into = "LayoutRepr")]
pub struct CodeLayout {
    n: usize,
    c: usize,
    r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Ancilla,
    Ebit,
    Gauge,
}

/// Support selector for operator weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Alice,
    Bob,
    Full,
    Ancilla,
    Ebit,
    Gauge,
}

impl CodeLayout {
    pub fn new(n: usize, c: usize, r: usize) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidLayout { n, c, r, reason: reason.into() };
        if n == 0 {
            return Err(fail("n must be positive"));
        }
        if c + r > n {
            return Err(fail("c + r must not exceed n"));
        }
        if n + c > crate::bits::MAX_BITS {
            return Err(fail("n + c exceeds the 64-qubit register limit"));
        }
        Ok(CodeLayout { n, c, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of ancilla positions, `n - c - r`.
    pub fn s(&self) -> usize {
        self.n - self.c - self.r
    }

    /// Total register size `n + c` (Alice plus Bob).
    pub fn total_qubits(&self) -> usize {
        self.n + self.c
    }

    pub fn role(&self, alice_pos: usize) -> Role {
        debug_assert!(alice_pos < self.n);
        let s = self.s();
        if alice_pos < s {
            Role::Ancilla
        } else if alice_pos < s + self.c {
            Role::Ebit
        } else {
            Role::Gauge
        }
    }

    /// For an ebit position `s + j`, the zero-based Bob index `j`.
    pub fn ebit_index(&self, alice_pos: usize) -> Option<usize> {
        match self.role(alice_pos) {
            Role::Ebit => Some(alice_pos - self.s()),
            _ => None,
        }
    }

    /// Mask over Alice positions with the given role.
    pub fn role_mask(&self, role: Role) -> BitWord {
        let mut mask = BitWord::zeros(self.n);
        for i in 0..self.n {
            if self.role(i) == role {
                mask.set(i, true);
            }
        }
        mask
    }

    pub fn gauge_mask(&self) -> BitWord {
        self.role_mask(Role::Gauge)
    }
}

#[derive(Serialize, Deserialize, Clone, Copy)]
struct LayoutRepr {
    n: usize,
    c: usize,
    r: usize,
    #[serde(default)]
    s: Option<usize>,
}

impl TryFrom<LayoutRepr> for CodeLayout {
    type Error = Error;

    fn try_from(repr: LayoutRepr) -> Result<Self> {
        let layout = CodeLayout::new(repr.n, repr.c, repr.r)?;
        if let Some(s) = repr.s {
            if s != layout.s() {
                return Err(Error::InvalidLayout {
                    n: repr.n,
                    c: repr.c,
                    r: repr.r,
                    reason: format!("stored s={s} does not match n - c - r = {}", layout.s()),
                });
            }
        }
        Ok(layout)
    }
}

impl From<CodeLayout> for LayoutRepr {
    fn from(layout: CodeLayout) -> Self {
        LayoutRepr { n: layout.n, c: layout.c, r: layout.r, s: Some(layout.s()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roles_partition_the_register() {
        let layout = CodeLayout::new(6, 3, 1).unwrap();
        assert_eq!(layout.s(), 2);
        assert_eq!(layout.role(0), Role::Ancilla);
        assert_eq!(layout.role(1), Role::Ancilla);
        assert_eq!(layout.role(2), Role::Ebit);
        assert_eq!(layout.role(4), Role::Ebit);
        assert_eq!(layout.role(5), Role::Gauge);
        assert_eq!(layout.ebit_index(3), Some(1));
        assert_eq!(layout.ebit_index(5), None);
        assert_eq!(layout.gauge_mask().to_string(), "000001");
    }

    #[test]
    fn rejects_oversized_roles() {
        assert!(CodeLayout::new(4, 3, 2).is_err());
        assert!(CodeLayout::new(0, 0, 0).is_err());
    }
}
