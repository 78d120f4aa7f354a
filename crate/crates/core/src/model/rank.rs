use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::dimension::DimensionVector;
use crate::error::{Error, Result};

/// Ranks `s_{i,j}` of the composite maps over every window `[i,j]`, `i < j`.
///
/// [`RankTriangle::value`] implements the extended triangle: the diagonal is
/// `d_i`, and every index with `i = 0` or `j > t` reads as 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RankTriangleJson", into = "RankTriangleJson")]
pub struct RankTriangle {
    d: DimensionVector,
    /// Row-major `t × t`; only `i <= j` is meaningful.
    values: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RankTriangleJson {
    d: Vec<u32>,
    s: Vec<(usize, usize, u32)>,
}

impl From<RankTriangle> for RankTriangleJson {
    fn from(r: RankTriangle) -> Self {
        Self {
            s: r.entries().collect(),
            d: r.d.into(),
        }
    }
}

impl TryFrom<RankTriangleJson> for RankTriangle {
    type Error = Error;

    fn try_from(j: RankTriangleJson) -> Result<Self> {
        RankTriangle::from_entries(DimensionVector::new(j.d)?, j.s)
    }
}

impl RankTriangle {
    /// Builds a triangle from a function of the window `(i, j)`, `i < j`.
    ///
    /// Every value must lie between 0 and the window minimum of `d`.
    pub fn from_fn(d: DimensionVector, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        let t = d.len();
        let mut values = vec![0; t * t];
        for i in 1..=t {
            values[(i - 1) * t + (i - 1)] = d.get(i);
            for j in i + 1..=t {
                let v = f(i, j);
                let max = d.window_min(i, j);
                if v > max {
                    return Err(Error::RankOutOfBounds {
                        i,
                        j,
                        value: v,
                        max,
                    });
                }
                values[(i - 1) * t + (j - 1)] = v;
            }
        }
        Ok(Self { d, values })
    }

    /// Builds a triangle from explicit `(i, j, value)` triples covering every `i < j` exactly once.
    pub fn from_entries<I>(d: DimensionVector, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let t = d.len();
        let mut slots: Vec<Option<u32>> = vec![None; t * t];
        for (i, j, v) in entries {
            if !(1 <= i && i < j && j <= t) {
                return Err(Error::RankShape(format!(
                    "entry ({i},{j}) outside 1 <= i < j <= {t}"
                )));
            }
            let slot = &mut slots[(i - 1) * t + (j - 1)];
            if slot.is_some() {
                return Err(Error::RankShape(format!("duplicate entry ({i},{j})")));
            }
            *slot = Some(v);
        }
        let mut missing = None;
        let tri = Self::from_fn(d, |i, j| match slots[(i - 1) * t + (j - 1)] {
            Some(v) => v,
            None => {
                missing.get_or_insert((i, j));
                0
            }
        })?;
        if let Some((i, j)) = missing {
            return Err(Error::RankShape(format!("missing entry ({i},{j})")));
        }
        Ok(tri)
    }

    pub fn dimension(&self) -> &DimensionVector {
        &self.d
    }

    pub fn t(&self) -> usize {
        self.d.len()
    }

    /// Extended accessor: `d_i` on the diagonal, 0 when `i = 0` or `j > t`.
    pub fn value(&self, i: usize, j: usize) -> u32 {
        let t = self.t();
        if i == 0 || j > t || i > j {
            return 0;
        }
        self.values[(i - 1) * t + (j - 1)]
    }

    /// `Δ(s)_{i,j} = s_{i,j} − s_{i−1,j} − s_{i,j+1} + s_{i−1,j+1}` over the extended triangle.
    ///
    /// On the rank triangle of a multisegment this is the multiplicity of `[i,j]`.
    pub fn second_difference(&self, i: usize, j: usize) -> i64 {
        let s = |a: usize, b: usize| i64::from(self.value(a, b));
        s(i, j) - s(i - 1, j) - s(i, j + 1) + s(i - 1, j + 1)
    }

    /// Off-diagonal entries `(i, j, s_{i,j})` for `i < j`, row by row.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let t = self.t();
        (1..=t).flat_map(move |i| (i + 1..=t).map(move |j| (i, j, self.value(i, j))))
    }

    /// Entrywise `self <= other`. Triangles over different dimension vectors are incomparable.
    pub fn le(&self, other: &Self) -> bool {
        self.d == other.d && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for RankTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let json = serde_json::to_string(self).map_err(|_| fmt::Error)?;
        f.write_str(&json)
    }
}

impl FromStr for RankTriangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| {
            Error::Parse(crate::error::ParseError {
                position: e.column().saturating_sub(1),
                expected: "rank triangle JSON {\"d\": [...], \"s\": [[i, j, value], ...]}".into(),
                found: e.to_string(),
            })
        })
    }
}
