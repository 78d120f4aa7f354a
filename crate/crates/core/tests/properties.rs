use orbit_atlas::components::{
    compute_i, compute_j, decompose_complement, degeneration_leq, split_witness,
};
use orbit_atlas::counting::{count_brute, count_by_partitions, na_pair};
use orbit_atlas::generic::{
    generic_by_levels, generic_recursive, is_generic, maximal_rank, multisegment_of_rank,
    rank_of_multisegment,
};
use orbit_atlas::homext::{euler_form, ext_dim, hom_dim, is_rigid, pairing_dim, self_ext, Pairing};
use orbit_atlas::{DimensionVector, Multisegment, Partition, RankTriangle, Segment};
use proptest::prelude::*;

fn dims(
    t: std::ops::RangeInclusive<usize>,
    lo: u32,
    hi: u32,
) -> impl Strategy<Value = DimensionVector> {
    prop::collection::vec(lo..=hi, t).prop_map(|e| DimensionVector::new(e).unwrap())
}

fn segment(t: usize) -> impl Strategy<Value = Segment> {
    (1..=t)
        .prop_flat_map(move |i| (Just(i), i..=t))
        .prop_map(|(i, j)| Segment::new(i, j).unwrap())
}

fn multisegment_of_len(t: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec((segment(t), 1..=4u32), 0..6)
        .prop_map(move |parts| Multisegment::from_summands(t, parts).unwrap())
}

fn multisegment() -> impl Strategy<Value = Multisegment> {
    (1..=7usize).prop_flat_map(multisegment_of_len)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=6u32, 0..6).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn text_round_trips(m in multisegment(), p in partition()) {
        prop_assert_eq!(Multisegment::parse(&m.to_string(), m.t()).unwrap(), m.clone());
        let dv = m.dimension();
        prop_assert_eq!(dv.to_string().parse::<DimensionVector>().unwrap(), dv);
        let r = rank_of_multisegment(&m);
        prop_assert_eq!(r.to_string().parse::<RankTriangle>().unwrap(), r);
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        for s in m.segments() {
            prop_assert_eq!(s.to_string().parse::<Segment>().unwrap(), s);
        }
    }

    #[test]
    fn dimension_is_additive((m, n) in (1..=6usize).prop_flat_map(|t| (multisegment_of_len(t), multisegment_of_len(t)))) {
        let sum = m.direct_sum(&n).unwrap();
        prop_assert_eq!(sum.dimension(), m.dimension().checked_add(&n.dimension()).unwrap());
    }

    #[test]
    fn rank_boundary(m in multisegment()) {
        let r = rank_of_multisegment(&m);
        let dv = m.dimension();
        let t = dv.len();
        for i in 1..=t {
            prop_assert_eq!(r.value(i, i), dv.get(i));
            prop_assert_eq!(r.value(0, i), 0);
            prop_assert_eq!(r.value(i, t + 1), 0);
        }
    }

    #[test]
    fn rank_round_trip(m in multisegment()) {
        prop_assert_eq!(multisegment_of_rank(&rank_of_multisegment(&m)).unwrap(), m);
    }

    #[test]
    fn generic_constructions_agree(dv in dims(1..=10, 0, 9)) {
        let m = generic_by_levels(&dv);
        prop_assert_eq!(generic_recursive(&dv), m.clone());
        prop_assert_eq!(rank_of_multisegment(&m), maximal_rank(&dv));
        prop_assert_eq!(self_ext(&m), 0);
        prop_assert!(m.distinct_count() <= dv.len());
        prop_assert_eq!(is_generic(&dv), m.distinct_count() == dv.len());
    }

    #[test]
    fn hom_minus_ext_is_euler(a in segment(8), b in segment(8)) {
        prop_assert_eq!(hom_dim(a, b) as i64 - ext_dim(a, b) as i64, euler_form(a, b));
    }

    #[test]
    fn euler_depends_on_dimension_only(n in multisegment_of_len(5), m in multisegment_of_len(5)) {
        let generic = generic_by_levels(&m.dimension());
        prop_assert_eq!(pairing_dim(&m, &n, Pairing::Euler), pairing_dim(&generic, &n, Pairing::Euler));
        prop_assert_eq!(pairing_dim(&n, &m, Pairing::Euler), pairing_dim(&n, &generic, Pairing::Euler));
    }

    #[test]
    fn rigidity_matches_self_ext(m in multisegment()) {
        prop_assert_eq!(is_rigid(&m), self_ext(&m) == 0);
    }

    #[test]
    fn index_sets(dv in dims(1..=9, 1, 7)) {
        let j = compute_j(&dv).unwrap();
        let i = compute_i(&dv).unwrap();
        prop_assert!(i.iter().all(|p| j.contains(p)));
        prop_assert!((1..dv.len()).all(|k| j.contains(&(k, k + 1))));
        prop_assert!(i.len() < dv.len().max(1));
        if is_generic(&dv) {
            prop_assert_eq!(i.len(), dv.len() - 1);
        }
    }

    #[test]
    fn codim_one_components(dv in dims(1..=9, 1, 5)) {
        let codim_one: Vec<(usize, usize)> = decompose_complement(&dv)
            .unwrap()
            .into_iter()
            .filter(|c| c.codim == 1)
            .map(|c| c.pair)
            .collect();
        let t = dv.len();
        let expect: Vec<(usize, usize)> = (1..=t)
            .flat_map(|i| (i + 1..=t).map(move |j| (i, j)))
            .filter(|&(i, j)| dv.get(i) == dv.get(j) && (i + 1..j).all(|l| dv.get(l) > dv.get(i)))
            .collect();
        prop_assert_eq!(codim_one, expect);
    }

    #[test]
    fn representatives_sit_below_the_generic_orbit(dv in dims(1..=8, 1, 5)) {
        let generic = generic_by_levels(&dv);
        for c in decompose_complement(&dv).unwrap() {
            prop_assert!(degeneration_leq(&c.representative, &generic).unwrap());
            prop_assert!(!degeneration_leq(&generic, &c.representative).unwrap());
        }
    }

    #[test]
    fn split_witnesses_drop_exactly_one_side(dv in dims(3..=7, 1, 5)) {
        let max = maximal_rank(&dv);
        let t = dv.len();
        for i in 1..=t {
            for j in i + 2..=t {
                let Some(w) = split_witness(&dv, (i, j)).unwrap() else { continue };
                let l = w.l;
                let left = rank_of_multisegment(&w.left_drop);
                let right = rank_of_multisegment(&w.right_drop);
                prop_assert_eq!(w.left_drop.dimension(), dv.clone());
                prop_assert_eq!(w.right_drop.dimension(), dv.clone());
                // both lie in the locus for (i,j)
                prop_assert!(left.value(i, j) < max.value(i, j));
                prop_assert!(right.value(i, j) < max.value(i, j));
                prop_assert!(left.value(i, l) < max.value(i, l));
                prop_assert_eq!(left.value(l, j), max.value(l, j));
                prop_assert!(right.value(l, j) < max.value(l, j));
                prop_assert_eq!(right.value(i, l), max.value(i, l));
            }
        }
    }

    #[test]
    fn na_pair_is_symmetric(a in partition(), b in partition()) {
        prop_assert_eq!(na_pair(&a, &b), na_pair(&b, &a));
    }

    #[test]
    fn counts_agree_on_random_vectors(dv in dims(1..=6, 1, 5)) {
        prop_assume!(count_by_partitions(&dv) <= 200_000u32.into());
        let brute = count_brute(&dv, 200_000).unwrap();
        prop_assert_eq!(count_by_partitions(&dv), brute.into());
    }
}
