//! Acceptance gate: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::process::ExitCode;

use common::{d, sincere};
use orbit_atlas::components::{
    classify, codimension, component_representative, compute_i, compute_j, decompose_complement,
    verify_decomposition, DEFAULT_ENUM_BUDGET,
};
use orbit_atlas::counting::{count_brute, count_by_partitions};
use orbit_atlas::enumerate::for_each_multisegment;
use orbit_atlas::fan::{
    components_via_fan, cone_of_tree, enumerate_trees, exchange_graph, locate, tilting_of_tree,
};
use orbit_atlas::generic::{
    generic_by_levels, is_generic, multisegment_of_rank, rank_of_multisegment,
};
use orbit_atlas::homext::{is_rigid, orbit_codim, self_ext};
use orbit_atlas::{DimensionVector, Multisegment, Partition, RankTriangle, Segment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Check {
    ensure(got == want, || {
        format!("{what}: got {got:?}, want {want:?}")
    })
}

fn ms(s: &str, t: usize) -> Multisegment {
    Multisegment::parse(s, t).unwrap()
}

fn sorted_codims(dv: &DimensionVector) -> Vec<u32> {
    let mut c: Vec<u32> = decompose_complement(dv)
        .unwrap()
        .iter()
        .map(|c| c.codim)
        .collect();
    c.sort();
    c
}

fn adjacent(t: usize) -> Vec<(usize, usize)> {
    (1..t).map(|i| (i, i + 1)).collect()
}

fn golden_concave() -> Check {
    let dv = d("5,4,3,1,2,4,6");
    eq(compute_i(&dv).unwrap(), adjacent(7), "I(d)")?;
    eq(
        generic_by_levels(&dv),
        ms("[1,7]+[1,3]^2+[1,2]+[1,1]+[5,7]+[6,7]^2+[7,7]^2", 7),
        "M(d)",
    )?;
    eq(sorted_codims(&dv), vec![2, 2, 2, 3, 3, 3], "codims")?;
    let c = classify(&dv).unwrap();
    ensure(c.generic && c.concave, || format!("classify: {c:?}"))
}

fn golden_unimodal() -> Check {
    let dv = d("1,2,4,5,4,2,1");
    eq(
        compute_i(&dv).unwrap(),
        vec![(1, 7), (2, 6), (3, 5)],
        "I(d)",
    )?;
    eq(
        generic_by_levels(&dv),
        ms("[1,7]+[2,6]+[3,5]^2+[4,4]", 7),
        "M(d)",
    )?;
    eq(sorted_codims(&dv), vec![1, 1, 1], "codims")?;
    let c = classify(&dv).unwrap();
    ensure(c.pure && c.unimodal, || format!("classify: {c:?}"))
}

fn golden_pure() -> Check {
    let dv = d("1,2,3,5,3,2,3,2,1");
    let got: BTreeSet<_> = compute_i(&dv).unwrap().into_iter().collect();
    let want: BTreeSet<_> = [(1, 9), (2, 6), (6, 8), (3, 5)].into_iter().collect();
    eq(got, want, "I(d)")?;
    eq(sorted_codims(&dv), vec![1, 1, 1, 1], "codims")?;
    ensure(classify(&dv).unwrap().pure, || "not pure".into())
}

fn codim_identity() -> Check {
    for dv in sincere(6, 5) {
        for pair in compute_j(&dv).unwrap() {
            let rep =
                component_representative(&dv, pair).map_err(|e| format!("{dv} {pair:?}: {e}"))?;
            let want = u64::from(codimension(&dv, pair).unwrap());
            let got = orbit_codim(&rep);
            ensure(got == want, || {
                format!("{dv} {pair:?}: codim {got}, want {want}")
            })?;
        }
    }
    Ok(())
}

fn decomposition_oracle() -> Check {
    for dv in sincere(4, 3) {
        let r = verify_decomposition(&dv, DEFAULT_ENUM_BUDGET).map_err(|e| format!("{dv}: {e}"))?;
        ensure(r.passed, || format!("{dv}: {r:?}"))?;
    }
    Ok(())
}

fn counting_formulas() -> Check {
    for (s, n) in [("1,1", 2u64), ("2,2", 3), ("1,2,1", 5), ("1,1,1", 4)] {
        eq(count_brute(&d(s), DEFAULT_ENUM_BUDGET).unwrap(), n, s)?;
        eq(count_by_partitions(&d(s)), n.into(), s)?;
    }
    for dv in sincere(5, 4) {
        let brute = count_brute(&dv, DEFAULT_ENUM_BUDGET).map_err(|e| format!("{dv}: {e}"))?;
        eq(count_by_partitions(&dv), brute.into(), &dv.to_string())?;
    }
    Ok(())
}

fn generic_components() -> Check {
    for dv in sincere(6, 5).into_iter().filter(is_generic) {
        let i = compute_i(&dv).unwrap();
        eq(i.len(), dv.len() - 1, &format!("|I({dv})|"))?;
        let codims = sorted_codims(&dv);
        ensure(codims.iter().all(|&c| c >= 2), || {
            format!("{dv}: codims {codims:?}")
        })?;
    }
    Ok(())
}

fn concave_components() -> Check {
    for dv in sincere(6, 5) {
        if classify(&dv).unwrap().concave {
            let want = adjacent(dv.len());
            eq(compute_i(&dv).unwrap(), want.clone(), &format!("I({dv})"))?;
            eq(compute_j(&dv).unwrap(), want, &format!("J({dv})"))?;
        }
    }
    Ok(())
}

fn catalan(n: usize) -> usize {
    // binomial(2n, n) / (n + 1)
    let mut b: u128 = 1;
    for k in 0..n {
        b = b * (2 * n - k) as u128 / (k + 1) as u128;
    }
    (b / (n as u128 + 1)) as usize
}

fn fan_suite() -> Check {
    for t in 1..=8 {
        eq(
            enumerate_trees(t, 12).unwrap().len(),
            catalan(t),
            &format!("trees t={t}"),
        )?;
    }
    for t in 1..=6 {
        for tree in enumerate_trees(t, 12).unwrap() {
            let det = cone_of_tree(&tree).determinant();
            ensure(det.abs() == 1, || format!("{tree}: det {det}"))?;
            let m = tilting_of_tree(&tree);
            ensure(is_rigid(&m) && m.distinct_count() == t, || {
                format!("{tree}: {m}")
            })?;
        }
    }
    for t in 1..=7 {
        let g = exchange_graph(t, 12).unwrap();
        ensure(g.is_regular(t - 1) && g.is_connected(), || {
            format!("exchange graph t={t}")
        })?;
    }
    for dv in sincere(5, 5) {
        let l = locate(&dv, 12).unwrap();
        ensure(!l.trees.is_empty(), || format!("{dv} in no cone"))?;
    }
    Ok(())
}

fn fan_components() -> Check {
    for dv in sincere(5, 5).into_iter().filter(is_generic) {
        let via_fan = components_via_fan(&dv, 12).map_err(|e| format!("{dv}: {e}"))?;
        eq(via_fan, compute_i(&dv).unwrap(), &dv.to_string())?;
    }
    Ok(())
}

fn rigid_uniqueness() -> Check {
    for dv in sincere(5, 3) {
        let generic = generic_by_levels(&dv);
        let mut rigid = Vec::new();
        for_each_multisegment(&dv, DEFAULT_ENUM_BUDGET, |m| {
            if self_ext(&m) == 0 {
                rigid.push(m);
            }
            ControlFlow::Continue(())
        })
        .map_err(|e| format!("{dv}: {e}"))?;
        eq(rigid, vec![generic.clone()], &format!("rigid of {dv}"))?;
    }
    Ok(())
}

fn random_multisegment(rng: &mut ChaCha8Rng) -> Multisegment {
    let t = rng.gen_range(1..=8);
    let mut m = Multisegment::new(t).unwrap();
    for i in 1..=t {
        for j in i..=t {
            if rng.gen_bool(0.3) {
                m.add(Segment::new(i, j).unwrap(), rng.gen_range(1..=5))
                    .unwrap();
            }
        }
    }
    m
}

fn round_trips() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let m = random_multisegment(&mut rng);
        let r = rank_of_multisegment(&m);
        eq(multisegment_of_rank(&r).unwrap(), m.clone(), "rank inverse")?;

        let t = m.t();
        eq(
            Multisegment::parse(&m.to_string(), t).unwrap(),
            m.clone(),
            "multisegment text",
        )?;
        let json = serde_json::to_string(&m).unwrap();
        eq(
            serde_json::from_str::<Multisegment>(&json).unwrap(),
            m.clone(),
            "multisegment json",
        )?;
        eq(
            r.to_string().parse::<RankTriangle>().unwrap(),
            r.clone(),
            "rank text",
        )?;

        let dv = m.dimension();
        eq(
            dv.to_string().parse::<DimensionVector>().unwrap(),
            dv.clone(),
            "dimension text",
        )?;
        let json = serde_json::to_string(&dv).unwrap();
        eq(
            serde_json::from_str::<DimensionVector>(&json).unwrap(),
            dv,
            "dimension json",
        )?;

        for s in m.segments() {
            eq(s.to_string().parse::<Segment>().unwrap(), s, "segment text")?;
        }
        let mut parts: Vec<u32> = (0..rng.gen_range(0..6))
            .map(|_| rng.gen_range(1..=6))
            .collect();
        parts.sort_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        eq(
            p.to_string().parse::<Partition>().unwrap(),
            p.clone(),
            "partition text",
        )?;
        let json = serde_json::to_string(&p).unwrap();
        eq(
            serde_json::from_str::<Partition>(&json).unwrap(),
            p,
            "partition json",
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("golden concave vector", golden_concave),
        ("golden unimodal vector", golden_unimodal),
        ("golden pure vector", golden_pure),
        (
            "codimension identity on J(d), t<=6, entries<=5",
            codim_identity,
        ),
        (
            "exhaustive decomposition oracle, t<=4, entries<=3",
            decomposition_oracle,
        ),
        (
            "brute count = partition formula, t<=5, entries<=4",
            counting_formulas,
        ),
        (
            "generic d: t-1 components of codim >= 2",
            generic_components,
        ),
        (
            "concave d: I(d) = J(d) = adjacent pairs",
            concave_components,
        ),
        ("fan suite", fan_suite),
        ("fan components = I(d) for generic d", fan_components),
        ("M(d) is the unique rigid multisegment", rigid_uniqueness),
        ("round trips", round_trips),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
