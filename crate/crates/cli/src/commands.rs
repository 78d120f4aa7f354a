//! One function per subcommand. Each builds a serializable report and renders
//! it either as text or as JSON from the same data.

use std::fmt::Write;

use num_bigint::BigUint;
use orbit_atlas::components::{
    classify, decompose_complement, verify_decomposition, VerificationReport,
};
use orbit_atlas::counting::{count_brute, count_by_partitions};
use orbit_atlas::fan::{exchange_graph, locate, Membership};
use orbit_atlas::generic::generic_by_levels;
use orbit_atlas::homext::{is_rigid, orbit_codim, pairing_dim, self_ext, Pairing};
use orbit_atlas::{DimensionVector, Limits, Multisegment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::render::{ascii_diagram, svg_diagram};
use crate::{CountMethod, DiagramFormat, Emit, Failure};

/// Rendered output and whether the command counts as a success.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct GenericReport {
    pub d: DimensionVector,
    pub multisegment: String,
    pub distinct_summands: usize,
    pub generic: bool,
}

pub fn generic(d: &DimensionVector, format: DiagramFormat) -> Outcome {
    let m = generic_by_levels(d);
    let report = GenericReport {
        d: d.clone(),
        multisegment: m.to_string(),
        distinct_summands: m.distinct_count(),
        generic: m.distinct_count() == d.len(),
    };
    Outcome::ok(match format {
        DiagramFormat::Text => format!(
            "d: {}\ngeneric multisegment: {}\ndistinct summands: {}\ngeneric: {}\n",
            report.d, report.multisegment, report.distinct_summands, report.generic
        ),
        DiagramFormat::Json => json(&report),
        DiagramFormat::Ascii => ascii_diagram(d),
        DiagramFormat::Svg => svg_diagram(d),
    })
}

#[derive(Serialize)]
pub struct ComponentRow {
    pub pair: (usize, usize),
    pub codim: u32,
    pub representative: String,
}

#[derive(Serialize)]
pub struct ComponentsReport {
    pub d: DimensionVector,
    pub components: Vec<ComponentRow>,
}

pub fn components(d: &DimensionVector, as_json: bool) -> Result<Outcome, Failure> {
    let components = decompose_complement(d)?
        .into_iter()
        .map(|c| ComponentRow {
            pair: c.pair,
            codim: c.codim,
            representative: c.representative.to_string(),
        })
        .collect();
    let report = ComponentsReport {
        d: d.clone(),
        components,
    };
    if as_json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut out = format!("components of {}: {}\n", report.d, report.components.len());
    for c in &report.components {
        let pair = format!("({},{})", c.pair.0, c.pair.1);
        writeln!(out, "{pair:<8} codim {:<3} {}", c.codim, c.representative).unwrap();
    }
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
pub struct CountReport {
    pub d: DimensionVector,
    /// Decimal strings: counts are exact and unbounded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partitions: Option<String>,
    pub agree: bool,
}

pub fn count(
    d: &DimensionVector,
    method: CountMethod,
    as_json: bool,
    limits: &Limits,
) -> Result<Outcome, Failure> {
    let brute = match method {
        CountMethod::Brute | CountMethod::Both => {
            Some(BigUint::from(count_brute(d, limits.enum_budget)?))
        }
        CountMethod::Partitions => None,
    };
    let partitions = match method {
        CountMethod::Partitions | CountMethod::Both => Some(count_by_partitions(d)),
        CountMethod::Brute => None,
    };
    let agree = match (&brute, &partitions) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let report = CountReport {
        d: d.clone(),
        brute: brute.map(|n| n.to_string()),
        partitions: partitions.map(|n| n.to_string()),
        agree,
    };
    let text = if as_json {
        json(&report)
    } else {
        let mut fields = Vec::new();
        if let Some(b) = &report.brute {
            fields.push(format!("brute={b}"));
        }
        if let Some(p) = &report.partitions {
            fields.push(format!("partitions={p}"));
        }
        fields.join(" ") + "\n"
    };
    Ok(Outcome { text, ok: agree })
}

fn parse_pair(
    from: &str,
    to: &str,
    t: Option<usize>,
) -> Result<(Multisegment, Multisegment), Failure> {
    let t = match t {
        Some(t) => t,
        None => {
            let a = Multisegment::parse_inferred(from)?;
            let b = Multisegment::parse_inferred(to)?;
            a.t().max(b.t())
        }
    };
    Ok((Multisegment::parse(from, t)?, Multisegment::parse(to, t)?))
}

#[derive(Serialize)]
pub struct PairingReport {
    pub from: String,
    pub to: String,
    pub kind: Pairing,
    pub value: i64,
}

pub fn pairing(
    from: &str,
    to: &str,
    kind: Pairing,
    t: Option<usize>,
    as_json: bool,
) -> Result<Outcome, Failure> {
    let (m, n) = parse_pair(from, to, t)?;
    let report = PairingReport {
        from: m.to_string(),
        to: n.to_string(),
        kind,
        value: pairing_dim(&m, &n, kind),
    };
    Ok(Outcome::ok(if as_json {
        json(&report)
    } else {
        format!("{}={}\n", report.kind, report.value)
    }))
}

#[derive(Serialize)]
pub struct RigidReport {
    pub multisegment: String,
    pub rigid: bool,
    pub self_ext: u64,
    pub orbit_codim: u64,
}

pub fn rigid(text: &str, t: Option<usize>, as_json: bool) -> Result<Outcome, Failure> {
    let m = match t {
        Some(t) => Multisegment::parse(text, t)?,
        None => Multisegment::parse_inferred(text)?,
    };
    let report = RigidReport {
        multisegment: m.to_string(),
        rigid: is_rigid(&m),
        self_ext: self_ext(&m),
        orbit_codim: orbit_codim(&m),
    };
    Ok(Outcome::ok(if as_json {
        json(&report)
    } else {
        format!(
            "rigid={} self_ext={} orbit_codim={}\n",
            report.rigid, report.self_ext, report.orbit_codim
        )
    }))
}

#[derive(Serialize)]
pub struct VerifySummary {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
}

/// Sincere vectors drawn from a seeded generator.
pub fn random_vectors(
    count: usize,
    seed: u64,
    max_t: usize,
    max_entry: u32,
) -> Vec<DimensionVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = rng.gen_range(1..=max_t.max(1));
            let entries = (0..t)
                .map(|_| rng.gen_range(1..=max_entry.max(1)))
                .collect();
            DimensionVector::new(entries).expect("t >= 1")
        })
        .collect()
}

fn verify_line(r: &VerificationReport) -> String {
    let pairs: Vec<String> = r
        .index_set
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect();
    let mut line = format!(
        "{}: {} multisegments={} I(d)={}",
        r.d,
        if r.passed { "pass" } else { "FAIL" },
        r.multisegments,
        if pairs.is_empty() {
            "-".to_string()
        } else {
            pairs.join(" ")
        }
    );
    if !r.passed {
        write!(
            line,
            " uncovered={} undominated={} containment={} comparable={} codim={}",
            r.uncovered,
            r.undominated,
            r.containment_failures.len(),
            r.comparable_pairs.len(),
            r.codim_failures.len()
        )
        .unwrap();
    }
    line
}

pub fn verify(
    vectors: &[DimensionVector],
    as_json: bool,
    limits: &Limits,
) -> Result<Outcome, Failure> {
    let reports = vectors
        .iter()
        .map(|d| verify_decomposition(d, limits.enum_budget))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().filter(|r| r.passed).count();
    let summary = VerifySummary {
        failed: reports.len() - passed,
        passed,
        reports,
    };
    let ok = summary.failed == 0;
    let text = if as_json {
        json(&summary)
    } else {
        let mut out = String::new();
        for r in &summary.reports {
            writeln!(out, "{}", verify_line(r)).unwrap();
        }
        writeln!(out, "verified {}/{}", summary.passed, summary.reports.len()).unwrap();
        out
    };
    Ok(Outcome { text, ok })
}

pub fn fan(t: usize, emit: Emit, limits: &Limits) -> Result<Outcome, Failure> {
    let graph = exchange_graph(t, limits.tree_t_max)?;
    Ok(Outcome::ok(match emit {
        Emit::Dot => graph.to_dot(),
        Emit::Json => json(&graph.to_json()),
    }))
}

#[derive(Serialize)]
pub struct LocateReport {
    pub d: DimensionVector,
    pub minimal_cone: Vec<String>,
    pub trees: Vec<Membership>,
    pub generic: bool,
}

pub fn locate_cmd(d: &DimensionVector, as_json: bool, limits: &Limits) -> Result<Outcome, Failure> {
    let location = locate(d, limits.tree_t_max)?;
    let report = LocateReport {
        d: d.clone(),
        minimal_cone: location
            .minimal_cone
            .segments
            .iter()
            .map(ToString::to_string)
            .collect(),
        trees: location.trees,
        generic: location.generic,
    };
    if as_json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut out = format!(
        "d: {}\nminimal cone: {}\ncontaining cones: {}\n",
        report.d,
        report.minimal_cone.join(" "),
        report.trees.len()
    );
    for m in &report.trees {
        let coords: Vec<String> = m.coordinates.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "  {}  {}  coordinates {}",
            m.tree,
            m.tilting,
            coords.join(",")
        )
        .unwrap();
    }
    writeln!(out, "generic: {}", report.generic).unwrap();
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub d: DimensionVector,
    pub generic: bool,
    pub pure: bool,
    pub concave: bool,
    pub unimodal: bool,
}

pub fn classify_cmd(d: &DimensionVector, as_json: bool) -> Result<Outcome, Failure> {
    let c = classify(d)?;
    let report = ClassifyReport {
        d: d.clone(),
        generic: c.generic,
        pure: c.pure,
        concave: c.concave,
        unimodal: c.unimodal,
    };
    Ok(Outcome::ok(if as_json {
        json(&report)
    } else {
        format!(
            "generic={} pure={} concave={} unimodal={}\n",
            report.generic, report.pure, report.concave, report.unimodal
        )
    }))
}
