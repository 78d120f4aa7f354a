//! Exhaustive enumeration of the multisegments of a fixed dimension vector.
//!
//! Segments are decided start by start: once every segment starting at `i`
//! is chosen, the residual dimension at `i` must be zero, so the amount
//! starting at `i` is forced and only its split over end points branches.
//! Every leaf of the search is a valid multisegment.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::model::{DimensionVector, Multisegment, Segment};

/// Multiplicity triangle `a_{i,j}`, 1-based, row-major `t × t` (only `i <= j` used).
#[derive(Debug, Clone)]
pub struct Multiplicities {
    t: usize,
    a: Vec<u32>,
}

impl Multiplicities {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[(i - 1) * self.t + (j - 1)]
    }

    pub fn to_multisegment(&self) -> Multisegment {
        let mut m = Multisegment::new(self.t).expect("t >= 1");
        for i in 1..=self.t {
            for j in i..=self.t {
                let seg = Segment::new(i, j).expect("i <= j");
                m.add(seg, self.get(i, j)).expect("inside 1..=t");
            }
        }
        m
    }
}

struct Search<'f, F> {
    t: usize,
    residual: Vec<u32>,
    mults: Multiplicities,
    visited: u64,
    budget: u64,
    visit: &'f mut F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&Multiplicities) -> ControlFlow<()>,
{
    /// Distribute `remaining` copies of segments starting at `start` over ends `end, end-1, ..., start`.
    fn ends(&mut self, start: usize, end: usize, remaining: u32) -> Result<ControlFlow<()>> {
        let t = self.t;
        if end == start {
            // the rest must be [start,start]; residual at start is exactly `remaining`
            self.mults.a[(start - 1) * t + (start - 1)] = remaining;
            self.residual[start - 1] -= remaining;
            let flow = self.starts(start + 1);
            self.residual[start - 1] += remaining;
            self.mults.a[(start - 1) * t + (start - 1)] = 0;
            return flow;
        }
        let cap = self.residual[start - 1..end]
            .iter()
            .copied()
            .min()
            .unwrap_or(0)
            .min(remaining);
        for a in 0..=cap {
            for x in &mut self.residual[start - 1..end] {
                *x -= a;
            }
            self.mults.a[(start - 1) * t + (end - 1)] = a;
            let flow = self.ends(start, end - 1, remaining - a);
            for x in &mut self.residual[start - 1..end] {
                *x += a;
            }
            self.mults.a[(start - 1) * t + (end - 1)] = 0;
            if flow?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn starts(&mut self, start: usize) -> Result<ControlFlow<()>> {
        if start > self.t {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            return Ok((self.visit)(&self.mults));
        }
        let remaining = self.residual[start - 1];
        self.ends(start, self.t, remaining)
    }
}

/// Calls `visit` once per multisegment of dimension `d`, in a fixed order.
///
/// Returns the number of multisegments visited. More than `budget` leaves is
/// an error; the caller never sees a partial result reported as complete.
pub fn for_each_multiplicities<F>(d: &DimensionVector, budget: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&Multiplicities) -> ControlFlow<()>,
{
    let t = d.len();
    let mut search = Search {
        t,
        residual: d.entries().to_vec(),
        mults: Multiplicities {
            t,
            a: vec![0; t * t],
        },
        visited: 0,
        budget,
        visit: &mut visit,
    };
    let _ = search.starts(1)?;
    Ok(search.visited)
}

/// Like [`for_each_multiplicities`] but hands out [`Multisegment`] values.
pub fn for_each_multisegment<F>(d: &DimensionVector, budget: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(Multisegment) -> ControlFlow<()>,
{
    for_each_multiplicities(d, budget, |a| visit(a.to_multisegment()))
}

/// All multisegments of dimension `d`.
pub fn all_multisegments(d: &DimensionVector, budget: u64) -> Result<Vec<Multisegment>> {
    let mut out = Vec::new();
    for_each_multisegment(d, budget, |m| {
        out.push(m);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
