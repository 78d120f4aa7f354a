use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::dimension::DimensionVector;
use super::segment::{parse_segment, Segment};
use crate::error::{Error, Result};
use crate::parse::Cursor;

/// A finite multiset `⊕ [i,j]^{a_{i,j}}` of segments inside `t` vertices.
///
/// Multiplicities stored here are always positive; segments are kept in
/// lexicographic order so rendering is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MultisegmentJson", into = "MultisegmentJson")]
pub struct Multisegment {
    t: usize,
    summands: BTreeMap<Segment, u32>,
}

#[derive(Serialize, Deserialize)]
struct MultisegmentJson {
    t: usize,
    /// `[i, j, multiplicity]` triples.
    summands: Vec<(usize, usize, u32)>,
}

impl From<Multisegment> for MultisegmentJson {
    fn from(m: Multisegment) -> Self {
        Self {
            t: m.t,
            summands: m
                .summands
                .iter()
                .map(|(s, &a)| (s.start(), s.end(), a))
                .collect(),
        }
    }
}

impl TryFrom<MultisegmentJson> for Multisegment {
    type Error = Error;

    fn try_from(j: MultisegmentJson) -> Result<Self> {
        let mut m = Multisegment::new(j.t)?;
        for (i, e, a) in j.summands {
            m.add(Segment::new(i, e)?, a)?;
        }
        Ok(m)
    }
}

impl Multisegment {
    /// The empty multisegment on `t` vertices.
    pub fn new(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::EmptyDimensionVector);
        }
        Ok(Self {
            t,
            summands: BTreeMap::new(),
        })
    }

    pub fn from_summands<I>(t: usize, summands: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Segment, u32)>,
    {
        let mut m = Self::new(t)?;
        for (s, a) in summands {
            m.add(s, a)?;
        }
        Ok(m)
    }

    /// Adds `mult` copies of `seg`. Adding zero copies is a no-op.
    pub fn add(&mut self, seg: Segment, mult: u32) -> Result<()> {
        if !seg.fits(self.t) {
            return Err(Error::SegmentOutOfRange {
                start: seg.start(),
                end: seg.end(),
                t: self.t,
            });
        }
        if mult > 0 {
            *self.summands.entry(seg).or_insert(0) += mult;
        }
        Ok(())
    }

    /// Builder form of [`Multisegment::add`].
    pub fn with(mut self, seg: Segment, mult: u32) -> Result<Self> {
        self.add(seg, mult)?;
        Ok(self)
    }

    /// Removes one copy of `seg`; returns false if it was absent.
    pub fn remove_one(&mut self, seg: Segment) -> bool {
        match self.summands.get_mut(&seg) {
            None => false,
            Some(a) if *a == 1 => {
                self.summands.remove(&seg);
                true
            }
            Some(a) => {
                *a -= 1;
                true
            }
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn multiplicity(&self, seg: Segment) -> u32 {
        self.summands.get(&seg).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Segment, u32)> + '_ {
        self.summands.iter().map(|(&s, &a)| (s, a))
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.summands.keys().copied()
    }

    /// Number of pairwise different segments.
    pub fn distinct_count(&self) -> usize {
        self.summands.len()
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn total_count(&self) -> u64 {
        self.summands.values().map(|&a| u64::from(a)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `d(M)_l = Σ_{i <= l <= j} a_{i,j}`.
    pub fn dimension(&self) -> DimensionVector {
        let mut d = vec![0u32; self.t];
        for (s, a) in self.iter() {
            for x in &mut d[s.start() - 1..s.end()] {
                *x += a;
            }
        }
        DimensionVector::new(d).expect("t >= 1")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.t != other.t {
            return Err(Error::DimensionMismatch {
                left: format!("t={}", self.t),
                right: format!("t={}", other.t),
            });
        }
        let mut out = self.clone();
        for (s, a) in other.iter() {
            out.add(s, a)?;
        }
        Ok(out)
    }

    /// Each distinct segment once.
    pub fn support(&self) -> Self {
        Self {
            t: self.t,
            summands: self.summands.keys().map(|&s| (s, 1)).collect(),
        }
    }

    /// Parses the `+`-joined text form inside `t` vertices. `0` denotes the empty sum.
    pub fn parse(text: &str, t: usize) -> Result<Self> {
        let mut m = Self::new(t)?;
        let mut cur = Cursor::new(text);
        if cur.eat('0') {
            cur.expect_end()?;
            return Ok(m);
        }
        loop {
            let seg = parse_segment(&mut cur)?;
            let mult = if cur.eat('^') { cur.integer()? } else { 1 };
            m.add(seg, mult)?;
            if !cur.eat('+') {
                break;
            }
        }
        cur.expect_end()?;
        Ok(m)
    }

    /// Parses with `t` taken to be the largest segment end.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let wide = Self::parse(text, usize::MAX)?;
        let t = wide.segments().map(Segment::end).max().unwrap_or(1);
        Ok(Self {
            t,
            summands: wide.summands,
        })
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (k, (s, a)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(i: usize, j: usize) -> Segment {
        Segment::new(i, j).unwrap()
    }

    #[test]
    fn dimension_of_golden_multisegment() {
        let m = Multisegment::parse("[1,7]+[1,3]^2+[1,2]+[1,1]+[5,7]+[6,7]^2+[7,7]^2", 7).unwrap();
        assert_eq!(m.dimension().entries(), &[5, 4, 3, 1, 2, 4, 6]);
    }

    #[test]
    fn dimension_of_small_cases() {
        assert_eq!(
            Multisegment::new(3).unwrap().dimension().entries(),
            &[0, 0, 0]
        );
        let m = Multisegment::from_summands(3, [(seg(1, 3), 1), (seg(2, 2), 1)]).unwrap();
        assert_eq!(m.dimension().entries(), &[1, 2, 1]);
    }

    #[test]
    fn parse_grammar() {
        let m = Multisegment::parse_inferred("[1,7]+[1,3]^2").unwrap();
        assert_eq!(m.t(), 7);
        assert_eq!(m.multiplicity(seg(1, 7)), 1);
        assert_eq!(m.multiplicity(seg(1, 3)), 2);
        assert!(matches!(
            Multisegment::parse_inferred("[3,2]"),
            Err(Error::InvalidSegment { start: 3, end: 2 })
        ));
        assert!(matches!(
            Multisegment::parse("[1,4]", 3),
            Err(Error::SegmentOutOfRange { .. })
        ));
        match Multisegment::parse("[1,2]+", 3) {
            Err(Error::Parse(e)) => {
                assert_eq!(e.position, 6);
                assert_eq!(e.expected, "'['");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn renders_in_lexicographic_order() {
        let m = Multisegment::parse("[2,2]+[1,3]+[1,1]^3+[2,2]", 3).unwrap();
        assert_eq!(m.to_string(), "[1,1]^3+[1,3]+[2,2]^2");
        assert_eq!(Multisegment::new(2).unwrap().to_string(), "0");
        assert!(Multisegment::parse("0", 2).unwrap().is_empty());
    }

    #[test]
    fn remove_and_support() {
        let mut m = Multisegment::parse("[1,1]^2+[2,2]", 2).unwrap();
        assert!(m.remove_one(seg(1, 1)));
        assert_eq!(m.multiplicity(seg(1, 1)), 1);
        assert!(m.remove_one(seg(2, 2)));
        assert!(!m.remove_one(seg(2, 2)));
        let full = Multisegment::parse("[1,1]^5+[1,2]^2", 2).unwrap();
        assert_eq!(full.support().to_string(), "[1,1]+[1,2]");
        assert_eq!(full.total_count(), 7);
    }

    #[test]
    fn json_shape() {
        let m = Multisegment::parse("[1,2]+[2,2]^3", 2).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"t":2,"summands":[[1,2,1],[2,2,3]]}"#);
        let back: Multisegment = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }
}
