use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::parse::Cursor;

/// Dimensions `d_1, ..., d_t` of the vector spaces at the quiver vertices.
///
/// Vertices are 1-based. Reading outside `1..=t` yields 0, which realizes the
/// boundary convention `d_0 = d_{t+1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DimensionVector(Vec<u32>);

impl DimensionVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyDimensionVector);
        }
        Ok(Self(entries))
    }

    pub fn zeros(t: usize) -> Result<Self> {
        Self::new(vec![0; t])
    }

    /// Number of vertices `t`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; a dimension vector has at least one vertex.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `d_l` for `1 <= l <= t`, else 0.
    pub fn get(&self, l: usize) -> u32 {
        if l == 0 {
            return 0;
        }
        self.0.get(l - 1).copied().unwrap_or(0)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    pub fn require_sincere(&self) -> Result<()> {
        if self.is_sincere() {
            Ok(())
        } else {
            Err(Error::NotSincere(self.to_string()))
        }
    }

    /// `min { d_l : i <= l <= j }`; the maximal possible rank of the composite map over `[i,j]`.
    pub fn window_min(&self, i: usize, j: usize) -> u32 {
        debug_assert!(1 <= i && i <= j && j <= self.len());
        self.0[i - 1..j].iter().copied().min().unwrap_or(0)
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Entrywise sum; `None` when the lengths differ.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        Some(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl From<DimensionVector> for Vec<u32> {
    fn from(d: DimensionVector) -> Self {
        d.0
    }
}

impl TryFrom<Vec<u32>> for DimensionVector {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for DimensionVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        if cur.at_end() {
            return Err(ParseError {
                position: cur.position(),
                expected: "non-negative integer".into(),
                found: "end of input".into(),
            }
            .into());
        }
        Self::new(cur.integer_list()?)
    }
}
