//! Orbit counts `N(d)`: the number of multisegments of dimension `d`.
//!
//! [`count_brute`] enumerates multiplicity triangles directly. [`count_by_partitions`]
//! sums products of [`na_pair`] factors over chains of partitions, one per vertex.

use std::collections::HashMap;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumerate::for_each_multiplicities;
use crate::error::Result;
use crate::model::{DimensionVector, Partition};

/// Number of multiplicity triangles `a_{i,j} >= 0` with `Σ a_{i,j} dim[i,j] = d`.
pub fn count_brute(d: &DimensionVector, budget: u64) -> Result<u64> {
    for_each_multiplicities(d, budget, |_| ControlFlow::Continue(()))
}

/// `NA(λ, μ)`: zero if some zero-padded parts differ by two or more, otherwise
/// `Π_l (#{k : λ_k = μ_k = l} + 1)`.
pub fn na_pair(lambda: &Partition, mu: &Partition) -> u64 {
    let n = lambda.len().max(mu.len());
    let mut coincident: HashMap<u32, u64> = HashMap::new();
    for k in 0..n {
        let (a, b) = (lambda.part(k), mu.part(k));
        if a.abs_diff(b) >= 2 {
            return 0;
        }
        if a == b && a > 0 {
            *coincident.entry(a).or_default() += 1;
        }
    }
    coincident.values().map(|c| c + 1).product()
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("weakly decreasing positive parts"));
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `N(d)` by dynamic programming over partition chains with trivial ends.
///
/// For `t = 1` the count is 1.
pub fn count_by_partitions(d: &DimensionVector) -> BigUint {
    let t = d.len();
    if t == 1 {
        return BigUint::one();
    }
    let mut layer = vec![Partition::trivial(d.get(1))];
    let mut weights = vec![BigUint::one()];
    for l in 2..=t {
        let next_layer = if l == t {
            vec![Partition::trivial(d.get(l))]
        } else {
            enumerate_partitions(d.get(l))
        };
        let next_weights = next_layer
            .iter()
            .map(|mu| {
                layer
                    .iter()
                    .zip(&weights)
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(lambda, w)| w * na_pair(lambda, mu))
                    .sum()
            })
            .collect();
        layer = next_layer;
        weights = next_weights;
    }
    weights.into_iter().sum()
}
