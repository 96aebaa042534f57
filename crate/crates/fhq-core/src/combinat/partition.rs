//! Partitions and Young diagrams (English notation, row 1 on top).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A partition: a weakly decreasing sequence of positive integers.
/// Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, thiserror::Error)]
#[error("parts must be positive and weakly decreasing: {0:?}")]
pub struct BadPartition(pub Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Build from parts; zeros are dropped, order is validated.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self, BadPartition> {
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p != 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(BadPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Build from parts in any order (they are sorted decreasingly).
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p != 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `l(lambda)`, the number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// All partitions of `n`, in the canonical order (lexicographic on the
    /// part vectors, so `(1,1,..)` comes first and `(n)` last).
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for next in 1..=remaining.min(max) {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out.sort_by(|a, b| a.parts.cmp(&b.parts));
        out
    }

    /// All partitions of size at most `n` (including the empty one),
    /// ordered by size then canonically.
    pub fn all_up_to_size(n: u32) -> Vec<Partition> {
        let mut out = vec![];
        for k in 0..=n {
            out.extend(Self::all_of_size(k));
        }
        out
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.parts {
            for c in 0..p as usize {
                parts[c] += 1;
            }
        }
        Partition { parts }
    }

    /// Boxes of the Young diagram as 1-based `(row, col)` pairs, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// Content multiset `{ j - i : (i,j) in diagram }`, sorted ascending.
    pub fn contents(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .boxes()
            .map(|(i, j)| j as i64 - i as i64)
            .collect();
        out.sort_unstable();
        out
    }

    /// Contents reduced mod `e`, sorted ascending. Requires `e >= 1`.
    pub fn contents_mod(&self, e: u32) -> Vec<u32> {
        assert!(e >= 1, "modulus must be positive");
        let mut out: Vec<u32> = self
            .contents()
            .into_iter()
            .map(|c| c.rem_euclid(e as i64) as u32)
            .collect();
        out.sort_unstable();
        out
    }

    /// Hook length of the box at 1-based `(i, j)`.
    pub fn hook_length(&self, i: u32, j: u32) -> u32 {
        let arm = self.part(i as usize - 1) - j;
        let leg = self
            .parts
            .iter()
            .skip(i as usize)
            .take_while(|&&p| p >= j)
            .count() as u32;
        arm + leg + 1
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        use num_traits::One;
        let mut num = BigInt::one();
        for k in 1..=self.size() as i64 {
            num *= BigInt::from(k);
        }
        let mut den = BigInt::one();
        for (i, j) in self.boxes() {
            den *= BigInt::from(self.hook_length(i, j));
        }
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "[]")
        } else {
            write!(
                f,
                "[{}]",
                self.parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: by size, then lexicographically on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

/// JSON form: array of the parts, weakly decreasing.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Parse a comma-separated list of parts; the empty string is the empty
/// partition.
impl std::str::FromStr for Partition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| format!("bad partition {s:?}: {e}"))?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}
