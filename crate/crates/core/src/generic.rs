//! The generic multisegment `M(d)` and the rank-triangle dictionary.
//!
//! `M(d)` is built two ways: from the line diagram (rows of the column
//! picture, [`generic_by_levels`]) and by repeatedly stripping the longest
//! support interval at its minimum ([`generic_recursive`]). The first is the
//! one used everywhere else; the second exists as an independent witness.

use crate::error::{Error, Result};
use crate::model::{DimensionVector, Multisegment, RankTriangle, Segment};

/// Maximal runs `[i,j]` of consecutive vertices satisfying `keep`.
fn runs(t: usize, keep: impl Fn(usize) -> bool) -> Vec<Segment> {
    let mut out = Vec::new();
    let mut start = None;
    for l in 1..=t + 1 {
        let inside = l <= t && keep(l);
        match (start, inside) {
            (None, true) => start = Some(l),
            (Some(s), false) => {
                out.push(Segment::new(s, l - 1).expect("run is a valid segment"));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// `M(d)` from the line diagram: row `k` of the column picture contributes one
/// segment per maximal run of columns with `d_l >= k`.
pub fn generic_by_levels(d: &DimensionVector) -> Multisegment {
    let t = d.len();
    let mut m = Multisegment::new(t).expect("t >= 1");
    for level in 1..=d.max_entry() {
        for seg in runs(t, |l| d.get(l) >= level) {
            m.add(seg, 1).expect("segment inside 1..=t");
        }
    }
    m
}

/// `M(d)` by the stripping recursion.
///
/// At each step the support of the remaining vector splits into maximal
/// intervals; the longest one (leftmost on ties) is subtracted as many times
/// as it fits. The first step on a sincere vector is `a_{1,t} = min d`.
pub fn generic_recursive(d: &DimensionVector) -> Multisegment {
    let t = d.len();
    let mut rest: Vec<u32> = d.entries().to_vec();
    let mut m = Multisegment::new(t).expect("t >= 1");
    loop {
        let blocks = runs(t, |l| rest[l - 1] > 0);
        // longest first, then minimal left endpoint
        let Some(block) = blocks
            .into_iter()
            .min_by_key(|s| (std::cmp::Reverse(s.len()), s.start()))
        else {
            break;
        };
        let a = rest[block.start() - 1..block.end()]
            .iter()
            .copied()
            .min()
            .expect("non-empty block");
        for x in &mut rest[block.start() - 1..block.end()] {
            *x -= a;
        }
        m.add(block, a).expect("segment inside 1..=t");
    }
    m
}

/// `r(M)_{i,j}` = number of summands `[k,l]` of `M` (with multiplicity) with `k <= i <= j <= l`.
pub fn rank_of_multisegment(m: &Multisegment) -> RankTriangle {
    RankTriangle::from_fn(m.dimension(), |i, j| {
        m.iter()
            .filter(|(s, _)| s.start() <= i && j <= s.end())
            .map(|(_, a)| a)
            .sum()
    })
    .expect("ranks of a multisegment are bounded by its dimension")
}

/// First window, in row order, whose second difference is negative.
pub fn first_negative_difference(s: &RankTriangle) -> Option<(usize, usize, i64)> {
    let t = s.t();
    (1..=t)
        .flat_map(|i| (i..=t).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, s.second_difference(i, j)))
        .find(|&(_, _, delta)| delta < 0)
}

/// Whether some multisegment of dimension `s.dimension()` has rank triangle `s`.
pub fn is_realizable(s: &RankTriangle) -> bool {
    first_negative_difference(s).is_none()
}

/// Inverse of [`rank_of_multisegment`]: `a_{i,j} = Δ(s)_{i,j}`.
pub fn multisegment_of_rank(s: &RankTriangle) -> Result<Multisegment> {
    if let Some((i, j, delta)) = first_negative_difference(s) {
        return Err(Error::NotRealizable { i, j, delta });
    }
    let t = s.t();
    let mut m = Multisegment::new(t)?;
    for i in 1..=t {
        for j in i..=t {
            let a = u32::try_from(s.second_difference(i, j)).expect("checked non-negative");
            m.add(Segment::new(i, j)?, a)?;
        }
    }
    Ok(m)
}

/// `r_{i,j} = min { d_l : i <= l <= j }`, the rank triangle of the dense orbit.
pub fn maximal_rank(d: &DimensionVector) -> RankTriangle {
    RankTriangle::from_fn(d.clone(), |i, j| d.window_min(i, j)).expect("window minimum is in range")
}

/// `d` is generic when `M(d)` has exactly `t` pairwise different segments.
pub fn is_generic(d: &DimensionVector) -> bool {
    generic_by_levels(d).distinct_count() == d.len()
}
