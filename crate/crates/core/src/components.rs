//! Irreducible components of the complement `Y` of the dense orbit.
//!
//! For a sincere dimension vector `d`, `Y_{i,j}` is the locus where the
//! composite map over `[i,j]` drops rank below `r_{i,j}`. The pairs in
//! [`compute_j`] are those where `Y_{i,j}` is irreducible; the pairs in
//! [`compute_i`] are those where it is a component of `Y`. Each irreducible
//! `Y_{i,j}` is the closure of one orbit, whose multisegment is
//! [`component_representative`].

use std::ops::ControlFlow;

use serde::Serialize;

use crate::counting::count_by_partitions;
use crate::enumerate::for_each_multisegment;
use crate::error::{Error, Result};
use crate::generic::{
    first_negative_difference, generic_by_levels, is_generic, maximal_rank, multisegment_of_rank,
    rank_of_multisegment,
};
use crate::homext::orbit_codim;
use crate::model::{DimensionVector, Multisegment, RankTriangle, Segment};

pub type Pair = (usize, usize);

/// Pairs `i < j` whose interior entries all exceed `max(d_i, d_j)`.
pub fn compute_j(d: &DimensionVector) -> Result<Vec<Pair>> {
    d.require_sincere()?;
    let t = d.len();
    let mut out = Vec::new();
    for i in 1..=t {
        for j in i + 1..=t {
            if in_j(d, i, j) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

fn in_j(d: &DimensionVector, i: usize, j: usize) -> bool {
    let bound = d.get(i).max(d.get(j));
    (i + 1..j).all(|l| d.get(l) > bound)
}

/// Elements of `J(d)` that index irreducible components of `Y`.
///
/// `(i,j)` qualifies when `d_i = d_j`; or `d_i < d_j` and every entry strictly
/// between `j` and the first later index `a` with `d_a < d_i` is at least
/// `d_j`; or the mirror image of that condition. Out-of-range entries read as 0.
pub fn compute_i(d: &DimensionVector) -> Result<Vec<Pair>> {
    Ok(compute_j(d)?
        .into_iter()
        .filter(|&(i, j)| in_i(d, i, j))
        .collect())
}

fn in_i(d: &DimensionVector, i: usize, j: usize) -> bool {
    let t = d.len();
    let (di, dj) = (d.get(i), d.get(j));
    if di == dj {
        return true;
    }
    if di < dj {
        let a = (j + 1..=t + 1)
            .find(|&a| d.get(a) < di)
            .expect("d_{t+1} = 0 < d_i");
        (j + 1..a).all(|l| d.get(l) >= dj)
    } else {
        let b = (0..i)
            .rev()
            .find(|&b| d.get(b) < dj)
            .expect("d_0 = 0 < d_j");
        (b + 1..i).all(|l| d.get(l) >= di)
    }
}

/// Codimension `|d_j − d_i| + 1` of `Y_{i,j}` for `(i,j) ∈ J(d)`.
pub fn codimension(d: &DimensionVector, (i, j): Pair) -> Result<u32> {
    require_in_j(d, (i, j))?;
    Ok(d.get(i).abs_diff(d.get(j)) + 1)
}

fn require_in_j(d: &DimensionVector, (i, j): Pair) -> Result<()> {
    d.require_sincere()?;
    if !(1 <= i && i < j && j <= d.len() && in_j(d, i, j)) {
        return Err(Error::NotInJ { i, j });
    }
    Ok(())
}

/// The maximal rank triangle capped at `r_{i,j} − 1` on every window containing `[i,j]`.
pub fn capped_rank(d: &DimensionVector, (i, j): Pair) -> RankTriangle {
    let cap = d.window_min(i, j).saturating_sub(1);
    RankTriangle::from_fn(d.clone(), |k, l| {
        let r = d.window_min(k, l);
        if k <= i && j <= l {
            r.min(cap)
        } else {
            r
        }
    })
    .expect("capped values stay below the window minimum")
}

/// The multisegment whose orbit is dense in `Y_{i,j}`, for `(i,j) ∈ J(d)`.
///
/// Its rank triangle is [`capped_rank`]. A non-realizable capped triangle
/// would mean the construction is wrong; that is reported as
/// [`Error::RepresentativeNotRealizable`] rather than repaired.
pub fn component_representative(d: &DimensionVector, pair: Pair) -> Result<Multisegment> {
    require_in_j(d, pair)?;
    let s = capped_rank(d, pair);
    if let Some((at_i, at_j, delta)) = first_negative_difference(&s) {
        return Err(Error::RepresentativeNotRealizable {
            i: pair.0,
            j: pair.1,
            at_i,
            at_j,
            delta,
        });
    }
    multisegment_of_rank(&s)
}

/// One irreducible component of the complement of the dense orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDescriptor {
    pub pair: Pair,
    pub codim: u32,
    pub representative: Multisegment,
    pub rank: RankTriangle,
}

/// One descriptor per pair in `I(d)`, in lexicographic order of the pair.
pub fn decompose_complement(d: &DimensionVector) -> Result<Vec<ComponentDescriptor>> {
    compute_i(d)?
        .into_iter()
        .map(|pair| {
            let representative = component_representative(d, pair)?;
            Ok(ComponentDescriptor {
                pair,
                codim: codimension(d, pair)?,
                rank: rank_of_multisegment(&representative),
                representative,
            })
        })
        .collect()
}

/// `M <= N` in the degeneration order: the rank triangle of `M` is entrywise
/// at most that of `N`, i.e. the orbit of `M` lies in the closure of the orbit of `N`.
pub fn degeneration_leq(m: &Multisegment, n: &Multisegment) -> Result<bool> {
    let (dm, dn) = (m.dimension(), n.dimension());
    if dm != dn {
        return Err(Error::DimensionMismatch {
            left: dm.to_string(),
            right: dn.to_string(),
        });
    }
    Ok(rank_of_multisegment(m).le(&rank_of_multisegment(n)))
}

/// Default cap on the number of multisegments an exhaustive oracle may visit.
pub const DEFAULT_ENUM_BUDGET: u64 = 2_000_000;

/// How many counterexamples of each kind a report keeps.
const EXAMPLE_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentFailure {
    /// Component whose representative was tested.
    pub representative_of: Pair,
    /// Other component whose defining rank bound it satisfies.
    pub satisfies_bound_of: Pair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimFailure {
    pub pair: Pair,
    pub expected: u32,
    pub orbit_codim: u64,
}

/// Outcome of [`verify_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub d: DimensionVector,
    pub index_set: Vec<Pair>,
    pub multisegments: u64,
    /// Non-generic multisegments that violate none of the component rank bounds.
    pub uncovered: u64,
    pub uncovered_examples: Vec<Multisegment>,
    /// Multisegments inside some `Y_{i,j}` that do not degenerate from its representative.
    pub undominated: u64,
    pub undominated_examples: Vec<(Pair, Multisegment)>,
    pub containment_failures: Vec<ContainmentFailure>,
    /// Pairs of components whose representatives are rank-comparable.
    pub comparable_pairs: Vec<(Pair, Pair)>,
    pub codim_failures: Vec<CodimFailure>,
    pub passed: bool,
}

/// Exhaustive check of the decomposition of `Y` for one dimension vector.
///
/// Enumerates every multisegment of dimension `d` and checks that each
/// non-generic one lies in some `Y_{i,j}`, `(i,j) ∈ I(d)`, and is dominated
/// by that component's representative; and that the representatives lie in
/// no other component, are pairwise rank-incomparable, and have orbit
/// codimension `|d_j − d_i| + 1`. Refuses up front when the number of
/// multisegments exceeds `budget`.
pub fn verify_decomposition(d: &DimensionVector, budget: u64) -> Result<VerificationReport> {
    d.require_sincere()?;
    let total = count_by_partitions(d);
    if total > budget.into() {
        return Err(Error::BudgetExceeded { budget });
    }

    let maximal = maximal_rank(d);
    let generic = generic_by_levels(d);
    let components = decompose_complement(d)?;
    let index_set: Vec<Pair> = components.iter().map(|c| c.pair).collect();
    let below = |rank: &RankTriangle, (i, j): Pair| rank.value(i, j) < maximal.value(i, j);

    let mut containment_failures = Vec::new();
    let mut comparable_pairs = Vec::new();
    let mut codim_failures = Vec::new();
    for (k, c) in components.iter().enumerate() {
        for other in &components {
            if other.pair != c.pair && below(&c.rank, other.pair) {
                containment_failures.push(ContainmentFailure {
                    representative_of: c.pair,
                    satisfies_bound_of: other.pair,
                });
            }
        }
        for other in &components[k + 1..] {
            if c.rank.le(&other.rank) || other.rank.le(&c.rank) {
                comparable_pairs.push((c.pair, other.pair));
            }
        }
        let got = orbit_codim(&c.representative);
        if got != u64::from(c.codim) {
            codim_failures.push(CodimFailure {
                pair: c.pair,
                expected: c.codim,
                orbit_codim: got,
            });
        }
    }

    let mut uncovered = 0;
    let mut uncovered_examples = Vec::new();
    let mut undominated = 0;
    let mut undominated_examples = Vec::new();
    let multisegments = for_each_multisegment(d, budget, |m| {
        if m == generic {
            return ControlFlow::Continue(());
        }
        let rank = rank_of_multisegment(&m);
        let mut caught = false;
        for c in &components {
            if below(&rank, c.pair) {
                caught = true;
                if !rank.le(&c.rank) {
                    undominated += 1;
                    if undominated_examples.len() < EXAMPLE_CAP {
                        undominated_examples.push((c.pair, m.clone()));
                    }
                }
            }
        }
        if !caught {
            uncovered += 1;
            if uncovered_examples.len() < EXAMPLE_CAP {
                uncovered_examples.push(m);
            }
        }
        ControlFlow::Continue(())
    })?;

    let passed = uncovered == 0
        && undominated == 0
        && containment_failures.is_empty()
        && comparable_pairs.is_empty()
        && codim_failures.is_empty();
    Ok(VerificationReport {
        d: d.clone(),
        index_set,
        multisegments,
        uncovered,
        uncovered_examples,
        undominated,
        undominated_examples,
        containment_failures,
        comparable_pairs,
        codim_failures,
        passed,
    })
}

/// Shape predicates of a sincere dimension vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub generic: bool,
    pub pure: bool,
    pub concave: bool,
    pub unimodal: bool,
}

pub fn classify(d: &DimensionVector) -> Result<Classification> {
    d.require_sincere()?;
    Ok(Classification {
        generic: is_generic(d),
        pure: is_pure(d)?,
        concave: is_concave(d),
        unimodal: is_unimodal(d),
    })
}

/// Every `(i,j) ∈ I(d)` has `d_i = d_j`.
pub fn is_pure(d: &DimensionVector) -> Result<bool> {
    Ok(compute_i(d)?.iter().all(|&(i, j)| d.get(i) == d.get(j)))
}

/// Recursive purity: for every level `a >= 0`, each maximal block of the
/// support of `max(d − a, 0)` has equal end values and no entry below them.
pub fn is_pure_recursive(d: &DimensionVector) -> bool {
    let t = d.len();
    (0..d.max_entry()).all(|level| {
        let mut l = 1;
        while l <= t {
            if d.get(l) <= level {
                l += 1;
                continue;
            }
            let start = l;
            while l <= t && d.get(l) > level {
                l += 1;
            }
            let block = &d.entries()[start - 1..l - 1];
            let (first, last) = (block[0], block[block.len() - 1]);
            if first != last || block.iter().any(|&x| x < first) {
                return false;
            }
        }
        true
    })
}

/// `d_1 >= ... >= d_a <= ... <= d_t` for some `a`.
pub fn is_concave(d: &DimensionVector) -> bool {
    let e = d.entries();
    let turn = e.windows(2).position(|w| w[0] < w[1]).unwrap_or(e.len());
    e[turn..].windows(2).all(|w| w[0] <= w[1])
}

/// `d_1 <= ... <= d_a >= ... >= d_t` for some `a`.
pub fn is_unimodal(d: &DimensionVector) -> bool {
    let e = d.entries();
    let turn = e.windows(2).position(|w| w[0] > w[1]).unwrap_or(e.len());
    e[turn..].windows(2).all(|w| w[0] >= w[1])
}

/// Two multisegments showing that the rank-defect locus of a pair outside
/// `J(d)` splits along an interior minimum `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    pub pair: Pair,
    pub l: usize,
    /// Drops rank on `[i,l]`, keeps full rank on `[l,j]`.
    pub left_drop: Multisegment,
    /// Drops rank on `[l,j]`, keeps full rank on `[i,l]`.
    pub right_drop: Multisegment,
}

/// For `(i,j) ∉ J(d)` whose interior minimum is at most `min(d_i, d_j)`,
/// cuts the top segment of `M(d)` through that minimum just left and just
/// right of it. Returns `None` when the pair is in `J(d)` or the interior
/// minimum is too large.
pub fn split_witness(d: &DimensionVector, (i, j): Pair) -> Result<Option<SplitWitness>> {
    d.require_sincere()?;
    if !(1 <= i && i + 1 < j && j <= d.len()) || in_j(d, i, j) {
        return Ok(None);
    }
    let l = (i + 1..j)
        .min_by_key(|&l| (d.get(l), l))
        .expect("non-empty interior");
    let level = d.get(l);
    if level > d.get(i).min(d.get(j)) {
        return Ok(None);
    }
    let generic = generic_by_levels(d);
    // the run at height d_l through l spans [i,j] because d_l is minimal there
    let mut p = l;
    while p > 1 && d.get(p - 1) >= level {
        p -= 1;
    }
    let mut q = l;
    while q < d.len() && d.get(q + 1) >= level {
        q += 1;
    }
    let top = Segment::new(p, q)?;
    let cut = |a: Segment, b: Segment| -> Result<Multisegment> {
        let mut m = generic.clone();
        m.remove_one(top);
        m.add(a, 1)?;
        m.add(b, 1)?;
        Ok(m)
    };
    Ok(Some(SplitWitness {
        pair: (i, j),
        l,
        left_drop: cut(Segment::new(p, l - 1)?, Segment::new(l, q)?)?,
        right_drop: cut(Segment::new(p, l)?, Segment::new(l + 1, q)?)?,
    }))
}
