use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::Cursor;

/// An interval `[i,j]` of quiver vertices, i.e. one indecomposable representation.
///
/// Ordered lexicographically by `(start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Segment {
    start: usize,
    end: usize,
}

impl Segment {
    pub fn new(start: usize, end: usize) -> Result<Self> {
        if start == 0 || start > end {
            return Err(Error::InvalidSegment { start, end });
        }
        Ok(Self { start, end })
    }

    pub fn start(self) -> usize {
        self.start
    }

    pub fn end(self) -> usize {
        self.end
    }

    /// Number of vertices `j - i + 1`.
    pub fn len(self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn covers(self, l: usize) -> bool {
        self.start <= l && l <= self.end
    }

    /// `other` is a sub-interval of `self`.
    pub fn contains(self, other: Segment) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    /// Size of the intersection of two integer intervals given by their endpoints.
    pub(crate) fn overlap(a: (i64, i64), b: (i64, i64)) -> i64 {
        (a.1.min(b.1) - a.0.max(b.0) + 1).max(0)
    }

    pub fn fits(self, t: usize) -> bool {
        self.end <= t
    }
}

impl From<Segment> for (usize, usize) {
    fn from(s: Segment) -> Self {
        (s.start, s.end)
    }
}

impl TryFrom<(usize, usize)> for Segment {
    type Error = Error;

    fn try_from((i, j): (usize, usize)) -> Result<Self> {
        Segment::new(i, j)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

pub(crate) fn parse_segment(cur: &mut Cursor<'_>) -> Result<Segment> {
    cur.expect('[')?;
    let start = cur.integer()?;
    cur.expect(',')?;
    let end = cur.integer()?;
    cur.expect(']')?;
    Segment::new(start, end)
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let seg = parse_segment(&mut cur)?;
        cur.expect_end()?;
        Ok(seg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let s: Segment = "[2, 5]".parse().unwrap();
        assert_eq!((s.start(), s.end(), s.len()), (2, 5, 4));
        assert_eq!(s.to_string(), "[2,5]");
    }

    #[test]
    fn reversed_endpoints_rejected() {
        assert_eq!(
            "[3,2]".parse::<Segment>(),
            Err(Error::InvalidSegment { start: 3, end: 2 })
        );
        assert!(Segment::new(0, 1).is_err());
    }

    #[test]
    fn malformed_reports_position() {
        match "[1;2]".parse::<Segment>() {
            Err(Error::Parse(e)) => {
                assert_eq!(e.position, 2);
                assert_eq!(e.expected, "','");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lexicographic_order() {
        let a = Segment::new(1, 3).unwrap();
        let b = Segment::new(1, 7).unwrap();
        let c = Segment::new(2, 2).unwrap();
        assert!(a < b && b < c);
    }
}
