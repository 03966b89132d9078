//! The twelve acceptance criteria. Runs without the libtest harness so the
//! PASS/FAIL lines always reach the output.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigUint;
use rand::Rng;
use rignac::catalog::*;
use rignac::colouring::*;
use rignac::constructions::*;
use rignac::graph::*;
use rignac::rigidity::*;
use rignac::stable_cut::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn count(g: &Graph) -> BigUint {
    enumerate_nac(g, &NacOptions::default()).unwrap().count
}

fn nnac(g: &Graph) -> u64 {
    u64::try_from(count(g)).unwrap()
}

fn k33() -> Outcome {
    let n = count(&make_complete_bipartite(3, 3).unwrap());
    ensure(n == 15u8.into(), || format!("got {n}"))?;
    Ok("nnac(K33) = 15".into())
}

fn prism() -> Outcome {
    let p = make_prism();
    let mut seen = Vec::new();
    let search = enumerate_nac_with(&p, &NacOptions::default(), |c| seen.push(c.clone())).unwrap();
    ensure(search.count == 1u8.into() && seen.len() == 1, || format!("got {}", search.count))?;
    let c = &seen[0];
    let colour = |a, b| c.is_red(p.edge_index(a, b).unwrap());
    let tri = colour(0, 1);
    let triangles = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)].iter().all(|&(a, b)| colour(a, b) == tri);
    let matching = [(0, 3), (1, 4), (2, 5)].iter().all(|&(a, b)| colour(a, b) != tri);
    ensure(triangles && matching, || format!("unexpected colouring {c:?}"))?;
    Ok("nnac(prism) = 1, triangles monochromatic, matching opposite".into())
}

fn trees_and_cycles() -> Outcome {
    for n in 3..=12usize {
        let p = nnac(&make_path(n).unwrap());
        ensure(p == (1 << (n - 2)) - 1, || format!("P_{n}: {p}"))?;
        let c = nnac(&make_cycle(n).unwrap());
        ensure(c == (1 << (n - 1)) - (n as u64 + 1), || format!("C_{n}: {c}"))?;
    }
    Ok("P_n and C_n formulas hold for n = 3..12".into())
}

fn complete_bipartite() -> Outcome {
    let mut checked = 0;
    for n1 in 1..=7usize {
        for n2 in 1..=8 - n1 {
            let got = nnac(&make_complete_bipartite(n1, n2).unwrap());
            ensure(got == (1 << (n1 + n2 - 2)) - 1, || format!("K_{n1},{n2}: {got}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} complete bipartite graphs"))
}

fn gk() -> Outcome {
    for k in 2..=5 {
        let (g, _) = make_gk(k).unwrap();
        let got = nnac(&g);
        ensure(got == (1 << (2 * k - 2)) - 1, || format!("G_{k}: {got}"))?;
    }
    Ok("nnac(G_k) = 2^(2k-2) - 1 for k = 2..5".into())
}

fn gluing() -> Outcome {
    let p = make_prism();
    for k in [2, 3] {
        let got = nnac(&glue_along_edge(&p, 0, k).unwrap());
        ensure(got == (1 << k) - 1, || format!("{k} prisms: {got}"))?;
    }
    let got = nnac(&glue_along_edge(&make_complete_bipartite(3, 3).unwrap(), 0, 2).unwrap());
    ensure(got == 255, || format!("two K33: {got}"))?;
    Ok("prisms k = 2, 3 give 3, 7; two K33 give 255".into())
}

fn block_product() -> Outcome {
    let mut r = rng(57);
    for _ in 0..50 {
        let g = random_with_cut_vertex(&mut r, 9);
        let blockwise = count_nac(&g).unwrap();
        let whole = count(&g);
        ensure(blockwise == whole, || format!("{:?}: {blockwise} vs {whole}", g.edges()))?;
    }
    Ok("50 random graphs with cut vertices".into())
}

fn h18() -> Outcome {
    let g = fixture("h18").unwrap().graph;
    let start = Instant::now();
    let single = count(&g);
    let t1 = start.elapsed();
    ensure(single == 180607u32.into(), || format!("got {single}"))?;
    ensure(t1 < Duration::from_secs(600), || format!("single-threaded run took {t1:?}"))?;
    let start = Instant::now();
    let opts = NacOptions {
        threads: 8,
        ..Default::default()
    };
    let parallel = enumerate_nac(&g, &opts).unwrap().count;
    let t8 = start.elapsed();
    ensure(parallel == single, || format!("8 workers gave {parallel}"))?;
    ensure(t8 < Duration::from_secs(120), || format!("8-worker run took {t8:?}"))?;
    for threads in [2, 3, 5] {
        let c = enumerate_nac(&g, &NacOptions { threads, ..Default::default() }).unwrap().count;
        ensure(c == single, || format!("{threads} workers gave {c}"))?;
    }
    Ok(format!("nnac(h18) = 180607; 1 worker {t1:.2?}, 8 workers {t8:.2?}"))
}

fn catalogs() -> Outcome {
    let six = enumerate_minimally_rigid(6).unwrap();
    let mut found: Vec<String> = six.iter().map(|e| e.graph6.clone()).collect();
    found.sort();
    ensure(found == minimally_rigid_by_filtering(6).unwrap(), || "6-vertex classes differ from filtering".into())?;
    for e in &six {
        let brute = brute_nnac(&e.graph());
        ensure(e.nnac == brute, || format!("{}: {} vs brute force {brute}", e.graph6, e.nnac))?;
    }
    let h6 = NnacHistogram::from_entries(&six);
    let reference = BTreeMap::from([(0u64, 5usize), (1, 5), (2, 3), (15, 1)]);
    if h6.counts != reference {
        println!(
            "FLAG 9  six-vertex histogram {:?} ({} classes) differs from the reference {:?} ({} graphs)",
            h6.counts,
            h6.total(),
            reference,
            reference.values().sum::<usize>()
        );
    }
    let seven = enumerate_minimally_rigid(7).unwrap();
    let h7 = NnacHistogram::from_entries(&seven);
    ensure(h7.counts == plotted(PLOTTED_7), || format!("7-vertex histogram {:?}", h7.counts))?;
    ensure(h7.total() == 70 && h7.max == 31 && h7.maximizers.len() == 1, || format!("M_7 {:?}", h7.maximizers))?;
    let (target, _) = zero_extend(&make_complete_bipartite(3, 3).unwrap(), 0, 1).unwrap();
    let best = parse_graph6(&h7.maximizers[0]).unwrap();
    ensure(brute_isomorphic(&best, &target), || "maximizer is not K33 plus an open 0-extension".into())?;
    Ok(format!("n = 6: {} classes, brute-force checked; n = 7: 70 classes, M_7 = 31 unique", six.len()))
}

fn theorem_suites() -> Outcome {
    let laman: Vec<Graph> = (3..=7)
        .flat_map(|n| minimally_rigid_classes(n, &CatalogOptions::default()).unwrap())
        .collect();
    let mut flexible: Vec<Graph> = (3..=7).flat_map(laman_minus_edge).collect();
    let mut r = rng(10);
    for i in 0..100 {
        flexible.push(random_connected(&mut r, 4 + i % 5, i % 5));
        flexible.push(random_with_cut_vertex(&mut r, 8));
    }
    flexible.retain(|g| rigidity_report(g).unwrap().is_flexible());
    let mut checks = 0usize;
    for g in &laman {
        let brute = brute_nnac(g);
        ensure((brute == 0) == is_2tree(g), || format!("2-tree test on {:?}", g.edges()))?;
        let member = recognize_gsc(g).unwrap().decomposition().is_some();
        ensure(member == brute_stable_cuts(g).is_empty(), || format!("G_sc test on {:?}", g.edges()))?;
        ensure(BigUint::from(brute) <= nnac_upper_bound(g.n()).unwrap(), || format!("bound on {:?}", g.edges()))?;
        checks += 3;
    }
    for g in &flexible {
        let cuts = brute_stable_cuts(g);
        ensure(!cuts.is_empty(), || format!("no stable cut in {:?}", g.edges()))?;
        let brute = brute_nnac(g);
        ensure(brute >= 1, || format!("flexible without NAC {:?}", g.edges()))?;
        ensure(BigUint::from(brute) <= nnac_upper_bound(g.n()).unwrap(), || format!("bound on {:?}", g.edges()))?;
        if is_2connected_oracle(g) {
            let l = rigidity_report(g).unwrap().component_count() as u64;
            let log = u64::from(64 - (l - 1).leading_zeros());
            ensure(brute >= 3 && brute >= log, || format!("lower bounds on {:?}", g.edges()))?;
            if g.m() + 4 <= 2 * g.n() {
                for v in g.vertices() {
                    ensure(cuts.iter().any(|c| !c.contains(&v)), || format!("no cut avoiding {v} in {:?}", g.edges()))?;
                }
            }
        }
        ensure((brute == 1) == splits_into_two_rigid_halves(g), || format!("unique NAC test on {:?}", g.edges()))?;
        checks += 5;
    }
    for (s, p) in gsc_scripts() {
        let got = nnac(&make_gsc(&s).unwrap());
        ensure(got == (1 << p) - 1, || format!("{s}: {got}"))?;
        checks += 1;
    }
    Ok(format!("{checks} checks on {} rigid and {} flexible graphs and 20 scripts", laman.len(), flexible.len()))
}

fn conjecture() -> Outcome {
    let mut unique = 0;
    for n in 6..=8 {
        let report = check_conjecture_61(&enumerate_minimally_rigid(n).unwrap());
        ensure(report.is_clean(), || format!("n = {n}: {report:?}"))?;
        unique += report.with_unique_nac;
    }
    Ok(format!("no counterexamples for n = 6..8 ({unique} graphs with a unique NAC-colouring)"))
}

fn algorithm1() -> Outcome {
    let mut r = rng(12);
    let mut done = 0;
    while done < 200 {
        let n: usize = r.gen_range(3..=12);
        let extra = r.gen_range(0..=n - 2);
        let g = random_connected(&mut r, n, extra);
        let report = rigidity_report(&g).unwrap();
        if !report.is_flexible() {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !report.share_component(u, v))
            .collect();
        let (u, v) = pairs[r.gen_range(0..pairs.len())];
        let cut = algorithm1_stable_cut(&g, u, v).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        let s = cut.cut.to_vec();
        let stable = s.iter().all(|&a| s.iter().all(|&b| !g.has_edge(a, b)));
        ensure(stable && separates(&g, &s, u, v), || format!("{s:?} in {:?}", g.edges()))?;
        ensure(cut.at_most_one_per_component(&report), || format!("{s:?} hits a rigid component twice"))?;
        done += 1;
    }
    Ok("200 random flexible graphs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 12] = [
        ("K33 count", k33, 1),
        ("prism colouring", prism, 1),
        ("tree and cycle formulas", trees_and_cycles, 10),
        ("complete bipartite formula", complete_bipartite, 60),
        ("G_k family", gk, 60),
        ("gluing along an edge", gluing, 60),
        ("block product", block_product, 120),
        ("18-vertex flagship", h18, 600),
        ("small catalogs", catalogs, 300),
        ("theorem-scale suites", theorem_suites, 600),
        ("unique NAC conjecture", conjecture, 600),
        ("stable cut search validity", algorithm1, 60),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took > Duration::from_secs(limit) {
                Err(format!("took {took:.2?}, limit {limit} s"))
            } else {
                Ok(msg)
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {:>2}  {name}: {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
