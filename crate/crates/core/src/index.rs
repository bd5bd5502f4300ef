//! Subgroup indices that may be infinite.

use std::fmt;

/// The index `[H : K]` of one subgroup in another: a positive integer or
/// infinity. Arithmetic is exact; `Finite` values are never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexValue {
    Finite(u64),
    Infinite,
}

impl IndexValue {
    /// Wraps a concrete index, enforcing the `>= 1` invariant.
    pub fn finite(n: u64) -> Self {
        assert!(n >= 1, "a finite subgroup index is at least 1");
        IndexValue::Finite(n)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, IndexValue::Finite(_))
    }

    /// The finite value, if there is one.
    pub fn as_finite(self) -> Option<u64> {
        match self {
            IndexValue::Finite(n) => Some(n),
            IndexValue::Infinite => None,
        }
    }

    /// Product of indices, as used by multiplicative index formulas.
    pub fn times(self, other: IndexValue) -> IndexValue {
        match (self, other) {
            (IndexValue::Finite(a), IndexValue::Finite(b)) => {
                IndexValue::Finite(a.checked_mul(b).expect("index product overflows u64"))
            }
            _ => IndexValue::Infinite,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Finite(n) => write!(f, "{n}"),
            IndexValue::Infinite => write!(f, "infinite"),
        }
    }
}
