//! Hom and Ext dimensions between segments, extended bilinearly to multisegments.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::components;
use crate::error::Result;
use crate::generic::generic_by_levels;
use crate::model::{Multisegment, Segment};

/// `dim Hom([i,j], [k,l])`: 1 if `k <= i <= l <= j`, else 0.
pub fn hom_dim(a: Segment, b: Segment) -> u64 {
    let (i, j, k, l) = (a.start(), a.end(), b.start(), b.end());
    u64::from(k <= i && i <= l && l <= j)
}

/// `dim Ext([i,j], [k,l])`: 1 if `i < k <= j + 1` and `j < l`, else 0.
pub fn ext_dim(a: Segment, b: Segment) -> u64 {
    let (i, j, k, l) = (a.start(), a.end(), b.start(), b.end());
    u64::from(i < k && k <= j + 1 && j < l)
}

/// `♯([i,j] ∩ [k,l]) − ♯([i+1,j+1] ∩ [k,l])`.
pub fn euler_form(a: Segment, b: Segment) -> i64 {
    let (i, j) = (a.start() as i64, a.end() as i64);
    let other = (b.start() as i64, b.end() as i64);
    Segment::overlap((i, j), other) - Segment::overlap((i + 1, j + 1), other)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    Hom,
    Ext,
    Euler,
}

impl FromStr for Pairing {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hom" => Ok(Self::Hom),
            "ext" => Ok(Self::Ext),
            "euler" => Ok(Self::Euler),
            other => Err(format!(
                "unknown pairing '{other}' (expected hom, ext or euler)"
            )),
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Hom => "hom",
            Self::Ext => "ext",
            Self::Euler => "euler",
        })
    }
}

/// Segment-level pairing of the given kind.
pub fn segment_pairing(a: Segment, b: Segment, which: Pairing) -> i64 {
    match which {
        Pairing::Hom => hom_dim(a, b) as i64,
        Pairing::Ext => ext_dim(a, b) as i64,
        Pairing::Euler => euler_form(a, b),
    }
}

/// Bilinear extension: `Σ a_s · b_u · pairing(s, u)` over summand pairs.
pub fn pairing_dim(m: &Multisegment, n: &Multisegment, which: Pairing) -> i64 {
    m.iter()
        .flat_map(|(s, a)| n.iter().map(move |(u, b)| (s, a, u, b)))
        .map(|(s, a, u, b)| i64::from(a) * i64::from(b) * segment_pairing(s, u, which))
        .sum()
}

/// `dim Ext(M, M)`.
pub fn self_ext(m: &Multisegment) -> u64 {
    pairing_dim(m, m, Pairing::Ext) as u64
}

/// `dim End(M) = dim Hom(M, M)`.
pub fn end_dim(m: &Multisegment) -> u64 {
    pairing_dim(m, m, Pairing::Hom) as u64
}

/// Nested-or-gap test for one unordered pair of segments.
fn compatible(a: Segment, b: Segment) -> bool {
    a.contains(b) || b.contains(a) || a.end() + 1 < b.start() || b.end() + 1 < a.start()
}

/// No self-extension, checked pairwise by the nested-or-gap conditions.
///
/// In debug builds this is cross-checked against `self_ext(m) == 0`.
pub fn is_rigid(m: &Multisegment) -> bool {
    let segs: Vec<Segment> = m.segments().collect();
    let pairwise = segs
        .iter()
        .enumerate()
        .all(|(k, &a)| segs[k + 1..].iter().all(|&b| compatible(a, b)));
    debug_assert_eq!(
        pairwise,
        self_ext(m) == 0,
        "rigidity characterizations disagree on {m}"
    );
    pairwise
}

/// Codimension of the orbit of `M` in the representation space of its dimension vector.
///
/// `dim End(M) − ⟨d, d⟩ = dim Ext(M, M)`.
pub fn orbit_codim(m: &Multisegment) -> u64 {
    self_ext(m)
}

/// Direct test of the `Ext(M, M) = k` description: two summands `[i,j]`, `[k,l]`
/// with `i < k <= j + 1`, `j < l`, such that removing either one leaves the
/// generic multisegment of the remaining dimension.
pub fn ext_dim_one_characterization(m: &Multisegment) -> bool {
    let is_generic_rest = |s: Segment| {
        let mut rest = m.clone();
        rest.remove_one(s);
        generic_by_levels(&rest.dimension()) == rest
    };
    m.segments().any(|a| {
        m.segments()
            .any(|b| ext_dim(a, b) == 1 && is_generic_rest(a) && is_generic_rest(b))
    })
}

/// Summand-support criterion for almost genericity: the support `N` has
/// `Ext(N, N) = k` and one of the two summands carrying that extension has
/// multiplicity one in `M`.
pub fn almost_generic_criterion(m: &Multisegment) -> bool {
    let support = m.support();
    if self_ext(&support) != 1 {
        return false;
    }
    let (a, b) = support
        .segments()
        .flat_map(|a| support.segments().map(move |b| (a, b)))
        .find(|&(a, b)| ext_dim(a, b) == 1)
        .expect("self-extension is 1");
    m.multiplicity(a) == 1 || m.multiplicity(b) == 1
}

/// Whether the orbit of `M` is dense in an irreducible component of the
/// complement of the dense orbit, i.e. `M` is one of the component
/// representatives of its dimension vector.
pub fn is_almost_generic(m: &Multisegment) -> Result<bool> {
    let d = m.dimension();
    d.require_sincere()?;
    for (i, j) in components::compute_i(&d)? {
        if components::component_representative(&d, (i, j))? == *m {
            return Ok(true);
        }
    }
    Ok(false)
}
