mod common;

use std::collections::BTreeMap;

use common::*;
use rignac::catalog::*;
use rignac::constructions::make_complete_bipartite;
use rignac::graph::*;
use rignac::rigidity::{is_2tree, recognize_gsc, zero_extend};
use rignac::stable_cut::{exhaustive_stable_cut, CutConstraints};
use rignac::Error;

fn histogram(n: usize) -> NnacHistogram {
    nnac_histogram(n).unwrap()
}

#[test]
fn generation_agrees_with_brute_force_filtering() {
    for n in 3..=FILTER_MAX_N {
        let entries = enumerate_minimally_rigid(n).unwrap();
        let mut got: Vec<String> = entries.iter().map(|e| e.graph6.clone()).collect();
        got.sort();
        assert_eq!(got, minimally_rigid_by_filtering(n).unwrap(), "n = {n}");
    }
    assert_eq!(enumerate_minimally_rigid(3).unwrap().len(), 1);
    assert!(matches!(minimally_rigid_by_filtering(FILTER_MAX_N + 1), Err(Error::SizeLimit { .. })));
}

#[test]
fn classes_are_pairwise_non_isomorphic() {
    let gs = minimally_rigid_classes(6, &CatalogOptions::default()).unwrap();
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i + 1..] {
            assert!(!brute_isomorphic(a, b));
        }
    }
}

#[test]
fn six_vertex_entries_match_brute_force() {
    let entries = enumerate_minimally_rigid(6).unwrap();
    assert_eq!(entries.len(), 13);
    for e in &entries {
        assert_eq!(e.nnac, brute_nnac(&e.graph()), "{}", e.graph6);
    }
    let h = histogram(6);
    assert_eq!(h.counts, BTreeMap::from([(0, 5), (1, 5), (3, 2), (15, 1)]));
    assert_eq!(h.max, 15);
}

#[test]
fn seven_vertex_histogram() {
    let h = histogram(7);
    assert_eq!(h.counts, plotted(PLOTTED_7));
    assert_eq!(h.total(), 70);
    assert_eq!(h.max, 31);
    assert_eq!(h.maximizers.len(), 1);
    let (k33_open, open) = zero_extend(&make_complete_bipartite(3, 3).unwrap(), 0, 1).unwrap();
    assert!(open);
    let best = parse_graph6(&h.maximizers[0]).unwrap();
    assert!(are_isomorphic(&best, &k33_open).unwrap());
}

#[test]
fn eight_vertex_histogram() {
    let h = histogram(8);
    assert_eq!(h.counts, plotted(PLOTTED_8));
    assert_eq!((h.max, h.maximizers.len()), (63, 5));
}

#[test]
#[ignore = "about 2 s in release, much longer in debug; run with --ignored"]
fn nine_vertex_histogram() {
    let entries = enumerate_minimally_rigid_with(9, &CatalogOptions { allow_large: true, threads: 0 }).unwrap();
    let h = NnacHistogram::from_entries(&entries);
    assert_eq!(h.counts, plotted(PLOTTED_9));
    assert_eq!(h.max, 127);
    assert!(check_conjecture_61(&entries).is_clean());
}

#[test]
#[ignore = "110132 classes; run with --ignored in release"]
fn ten_vertex_histogram() {
    let entries = enumerate_minimally_rigid_with(10, &CatalogOptions { allow_large: true, threads: 0 }).unwrap();
    let h = NnacHistogram::from_entries(&entries);
    assert_eq!(h.total(), 110132);
    assert_eq!(h.counts, plotted(PLOTTED_10));
    assert_eq!(h.max, 307);
    assert!(check_conjecture_61(&entries).is_clean());
}

#[test]
fn size_limits() {
    assert!(matches!(enumerate_minimally_rigid(2), Err(Error::TooFewVertices { .. })));
    assert!(matches!(enumerate_minimally_rigid(9), Err(Error::SizeLimit { .. })));
    let large = CatalogOptions { allow_large: true, threads: 0 };
    assert!(matches!(enumerate_minimally_rigid_with(CATALOG_MAX_N + 1, &large), Err(Error::SizeLimit { .. })));
}

#[test]
fn entry_flags_are_consistent() {
    for n in 3..=7 {
        for e in enumerate_minimally_rigid(n).unwrap() {
            let g = e.graph();
            assert_eq!(e.two_tree, e.nnac == 0);
            assert_eq!(e.two_tree, is_2tree(&g));
            let no_cut = exhaustive_stable_cut(&g, &CutConstraints::default()).unwrap().is_none();
            assert_eq!(e.is_gsc(), no_cut, "{}", e.graph6);
            assert_eq!(recognize_gsc(&g).unwrap().decomposition().is_some(), e.is_gsc());
            if let Some(p) = e.gsc_prisms {
                assert_eq!(e.nnac, (1 << p) - 1);
            }
            if e.two_tree {
                assert_eq!(e.min_open_steps, Some(0));
            }
            assert_eq!(e.min_open_steps.is_some(), e.zero_extension);
        }
    }
}

#[test]
fn prism_subgraph_counts() {
    assert_eq!(count_prism_subgraphs(&rignac::constructions::make_prism()), 1);
    assert_eq!(count_prism_subgraphs(&make_complete_bipartite(3, 3).unwrap()), 0);
    let k6 = rignac::constructions::make_complete(6).unwrap();
    // 6! / |Aut(prism)| = 720 / 12
    assert_eq!(count_prism_subgraphs(&k6), 60);
}

#[test]
fn conjecture_holds_on_small_catalogs() {
    for n in 3..=8 {
        let entries = enumerate_minimally_rigid(n).unwrap();
        let report = check_conjecture_61(&entries);
        assert!(report.is_clean(), "n = {n}: {report:?}");
        assert_eq!(report.checked, entries.len());
        assert_eq!(report.with_unique_nac, entries.iter().filter(|e| e.nnac == 1).count());
    }
}

#[test]
fn jsonl_round_trip() {
    let entries = enumerate_minimally_rigid(6).unwrap();
    let text = write_catalog_jsonl(6, &entries);
    assert_eq!(text.lines().count(), 14);
    assert!(text.lines().next().unwrap().contains(CATALOG_FORMAT));
    let (n, back) = read_catalog_jsonl(&text).unwrap();
    assert_eq!((n, back), (6, entries.clone()));
    assert_eq!(write_catalog_jsonl(6, &enumerate_minimally_rigid(6).unwrap()), text);
    assert!(read_catalog_jsonl("").is_err());
    assert!(read_catalog_jsonl(&text.replace("rignac-catalog", "other")).is_err());
    let truncated: String = text.lines().take(5).map(|l| format!("{l}\n")).collect();
    assert!(read_catalog_jsonl(&truncated).is_err());
}

#[test]
fn threads_do_not_change_the_catalog() {
    let one = enumerate_minimally_rigid_with(7, &CatalogOptions { allow_large: false, threads: 1 }).unwrap();
    let many = enumerate_minimally_rigid_with(7, &CatalogOptions { allow_large: false, threads: 4 }).unwrap();
    assert_eq!(one, many);
}
