//! Known exact counts, recomputed.

use std::io::Write;

use serde_json::json;

use rignac::catalog::nnac_histogram;
use rignac::colouring::{count_nac_with, NacOptions};
use rignac::constructions::*;
use rignac::graph::Graph;
use rignac::Error;

use crate::Outcome;

struct Check {
    name: String,
    expected: String,
    got: String,
}

fn nnac(g: &Graph, threads: usize) -> Result<String, Error> {
    Ok(count_nac_with(g, &NacOptions { threads, ..Default::default() })?.to_string())
}

fn checks(threads: usize) -> Result<Vec<Check>, Error> {
    let mut out = Vec::new();
    let mut push = |name: String, expected: String, got: String| out.push(Check { name, expected, got });
    push("nnac K_{3,3}".into(), "15".into(), nnac(&make_complete_bipartite(3, 3)?, threads)?);
    push("nnac prism".into(), "1".into(), nnac(&make_prism(), threads)?);
    for n in [5, 9] {
        push(format!("nnac path on {n}"), ((1u64 << (n - 2)) - 1).to_string(), nnac(&make_path(n)?, threads)?);
        let c = (1u64 << (n - 1)) - (n as u64 + 1);
        push(format!("nnac cycle on {n}"), c.to_string(), nnac(&make_cycle(n)?, threads)?);
    }
    push("nnac K_{2,5}".into(), "31".into(), nnac(&make_complete_bipartite(2, 5)?, threads)?);
    for k in 2..=5 {
        let (g, _) = make_gk(k)?;
        push(format!("nnac G_{k}"), ((1u64 << (2 * k - 2)) - 1).to_string(), nnac(&g, threads)?);
    }
    push("nnac 3 glued prisms".into(), "7".into(), nnac(&glue_along_edge(&make_prism(), 0, 3)?, threads)?);
    push(
        "nnac 2 glued K_{3,3}".into(),
        "255".into(),
        nnac(&glue_along_edge(&make_complete_bipartite(3, 3)?, 0, 2)?, threads)?,
    );
    for f in fixtures() {
        if let Some(want) = f.nnac {
            push(format!("nnac fixture {}", f.name), want.to_string(), nnac(&f.graph, threads)?);
        }
    }
    let h7 = nnac_histogram(7)?;
    push("classes on 7 vertices".into(), "70".into(), h7.total().to_string());
    push("max nnac on 7 vertices".into(), "31".into(), h7.max.to_string());
    push("max nnac on 8 vertices".into(), "63".into(), nnac_histogram(8)?.max.to_string());
    Ok(out)
}

pub(crate) fn run(out: &mut dyn Write, threads: usize) -> Result<Outcome, Error> {
    let checks = checks(threads)?;
    let mut all = true;
    for c in &checks {
        let pass = c.expected == c.got;
        all &= pass;
        eprintln!("{} {:<28} expected {:>7} got {:>7}", if pass { "PASS" } else { "FAIL" }, c.name, c.expected, c.got);
    }
    let rows: Vec<_> = checks
        .iter()
        .map(|c| json!({"check": c.name, "expected": c.expected, "got": c.got, "pass": c.expected == c.got}))
        .collect();
    writeln!(out, "{}", json!({"checks": rows, "all_pass": all}))?;
    Ok(if all { Outcome::Yes } else { Outcome::No })
}
