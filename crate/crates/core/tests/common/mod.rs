#![allow(dead_code)]

use orbit_atlas::DimensionVector;

/// Every vector of length `1..=t_max` with entries in `lo..=hi`.
pub fn vectors(t_max: usize, lo: u32, hi: u32) -> Vec<DimensionVector> {
    let mut out = Vec::new();
    for t in 1..=t_max {
        let mut e = vec![lo; t];
        loop {
            out.push(DimensionVector::new(e.clone()).unwrap());
            let Some(k) = (0..t).rev().find(|&k| e[k] < hi) else {
                break;
            };
            e[k] += 1;
            for x in &mut e[k + 1..] {
                *x = lo;
            }
        }
    }
    out
}

pub fn sincere(t_max: usize, hi: u32) -> Vec<DimensionVector> {
    vectors(t_max, 1, hi)
}

pub fn d(s: &str) -> DimensionVector {
    s.parse().unwrap()
}
