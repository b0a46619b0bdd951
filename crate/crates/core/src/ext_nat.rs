use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A natural number or infinity.
///
/// Orders, intersection multiplicities and Milnor numbers live here; `Infinite`
/// compares greater than every finite value and absorbs addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Infinite => None,
        }
    }
}

/// Multiplication with `0 * inf = 0`.
impl std::ops::Mul for ExtNat {
    type Output = ExtNat;

    fn mul(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Finite(0), _) | (_, ExtNat::Finite(0)) => ExtNat::ZERO,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a * b),
            _ => ExtNat::Infinite,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Finite(n)
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a.cmp(b),
            (ExtNat::Finite(_), ExtNat::Infinite) => Ordering::Less,
            (ExtNat::Infinite, ExtNat::Finite(_)) => Ordering::Greater,
            (ExtNat::Infinite, ExtNat::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a + b),
            _ => ExtNat::Infinite,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => f.write_str("infinity"),
        }
    }
}

/// Finite values serialize as integers, infinity as the string `"infinity"`.
impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(n) => s.serialize_u64(*n),
            ExtNat::Infinite => s.serialize_str("infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_top_and_absorbs() {
        assert!(ExtNat::Finite(u64::MAX) < ExtNat::Infinite);
        assert_eq!(ExtNat::Finite(3) + ExtNat::Infinite, ExtNat::Infinite);
        assert_eq!(ExtNat::Finite(3) + ExtNat::Finite(4), ExtNat::Finite(7));
        assert_eq!(ExtNat::ZERO * ExtNat::Infinite, ExtNat::ZERO);
    }

    #[test]
    fn serializes_exactly() {
        assert_eq!(serde_json::to_string(&ExtNat::Finite(7)).unwrap(), "7");
        assert_eq!(
            serde_json::to_string(&ExtNat::Infinite).unwrap(),
            "\"infinity\""
        );
    }
}
