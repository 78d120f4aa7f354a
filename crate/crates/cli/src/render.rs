//! Line diagrams of the generic multisegment.
//!
//! Row `k` (counted from the bottom) has a dot in every column `l` with
//! `d_l >= k`; dots in the same run are joined.

use std::fmt::Write;

use orbit_atlas::DimensionVector;

const CELL: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn joined(d: &DimensionVector, level: u32, l: usize) -> bool {
    d.get(l) >= level && d.get(l + 1) >= level
}

pub fn ascii_diagram(d: &DimensionVector) -> String {
    let t = d.len();
    let mut out = String::new();
    for level in (1..=d.max_entry()).rev() {
        let mut row = String::new();
        for l in 1..=t {
            row.push(if d.get(l) >= level { 'o' } else { ' ' });
            if l < t {
                row.push_str(if joined(d, level, l) { "---" } else { "   " });
            }
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    let heights: Vec<String> = d.entries().iter().map(|h| format!("{h:<4}")).collect();
    out.push_str(heights.concat().trim_end());
    out.push('\n');
    out
}

pub fn svg_diagram(d: &DimensionVector) -> String {
    let t = d.len();
    let rows = d.max_entry().max(1);
    let width = 2.0 * MARGIN + CELL * (t as f64 - 1.0);
    let height = 2.0 * MARGIN + CELL * (f64::from(rows) - 1.0);
    let x = |l: usize| MARGIN + CELL * (l as f64 - 1.0);
    let y = |level: u32| MARGIN + CELL * f64::from(rows - level);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    for level in 1..=d.max_entry() {
        for l in 1..t {
            if joined(d, level, l) {
                writeln!(
                    out,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>",
                    x(l),
                    y(level),
                    x(l + 1),
                    y(level)
                )
                .unwrap();
            }
        }
        for l in (1..=t).filter(|&l| d.get(l) >= level) {
            writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>",
                x(l),
                y(level)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
