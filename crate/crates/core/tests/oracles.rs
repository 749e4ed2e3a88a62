mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use crgames::cograph::{cotree_code, enumerate_connected_cographs, is_cograph};
use crgames::game::{cop_number, is_dismantlable};
use crgames::graph::{canonical_code, emit_graph6, enumerate_all_connected_graphs, enumerate_all_graphs, named, Girth};
use crgames::Graph;

#[test]
fn atlas_counts_match_enumeration() {
    let atlas = atlas();
    assert_eq!(atlas.len(), 1252);
    assert_eq!(atlas.iter().filter(|r| r.n == 7).count(), 1044);
    for n in 1..=6 {
        let all: Vec<_> = atlas.iter().filter(|r| r.n == n).collect();
        let conn = all.iter().filter(|r| r.connected).count();
        assert_eq!(enumerate_all_graphs(n).unwrap().len(), all.len(), "n={n}");
        assert_eq!(enumerate_all_connected_graphs(n).unwrap().len(), conn, "n={n}");
    }
    let small_connected = atlas.iter().filter(|r| r.n <= 6 && r.connected).count();
    assert_eq!(small_connected, 143);
}

#[test]
fn enumeration_matches_atlas_classes() {
    let atlas = atlas();
    for n in 1..=6 {
        let ours: BTreeSet<_> = enumerate_all_graphs(n).unwrap().iter().map(|g| canonical_code(g).unwrap()).collect();
        let theirs: BTreeSet<_> =
            atlas.iter().filter(|r| r.n == n).map(|r| canonical_code(&r.graph).unwrap()).collect();
        assert_eq!(ours, theirs, "n={n}");
    }
}

#[test]
fn canonical_code_agrees_with_brute_force_isomorphism() {
    let graphs: Vec<Graph> = atlas().into_iter().filter(|r| r.n <= 5).map(|r| r.graph).collect();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i..] {
            let same = canonical_code(g).unwrap() == canonical_code(h).unwrap();
            assert_eq!(same, isomorphic(g, h), "{} vs {}", emit_graph6(g), emit_graph6(h));
        }
    }
}

#[test]
fn connectivity_and_planarity_match_reference_flags() {
    for r in atlas() {
        assert_eq!(r.graph.is_connected(), r.connected, "{}", r.graph6);
        assert_eq!(r.graph.is_planar(), r.planar, "{}", r.graph6);
    }
}

#[test]
fn planarity_matches_minor_search() {
    for r in atlas().into_iter().filter(|r| r.n <= 6) {
        assert_eq!(r.graph.is_planar(), !has_k5_or_k33_minor(&r.graph), "{}", r.graph6);
    }
    for name in ["petersen", "k5", "k33", "g1_gadget"] {
        let g = named::by_name(name).unwrap();
        if g.order() <= 8 {
            assert_eq!(g.is_planar(), !has_k5_or_k33_minor(&g), "{name}");
        }
    }
    assert!(!named::petersen().is_planar());
    assert!(named::dodecahedron().is_planar());
}

#[test]
fn pk_freeness_matches_brute_force() {
    for r in atlas() {
        for k in 2..=6 {
            assert_eq!(r.graph.is_pk_free(k).unwrap(), !has_induced_path(&r.graph, k), "{} k={k}", r.graph6);
        }
    }
}

#[test]
fn girth_matches_brute_force() {
    for r in atlas() {
        let ours = match r.graph.girth() {
            Girth::Cycle(g) => Some(g),
            Girth::Acyclic => None,
        };
        assert_eq!(ours, girth(&r.graph), "{}", r.graph6);
    }
    assert_eq!(girth(&named::petersen()), Some(5));
}

#[test]
fn cograph_recognition_is_p4_freeness() {
    for r in atlas() {
        assert_eq!(is_cograph(&r.graph), !has_induced_path(&r.graph, 4), "{}", r.graph6);
    }
    for g in cographs_8() {
        assert!(is_cograph(&g));
    }
}

#[test]
fn cograph_enumeration_matches_references() {
    let atlas = atlas();
    for n in 1..=7 {
        let ours: BTreeSet<_> =
            enumerate_connected_cographs(n).unwrap().iter().map(|g| canonical_code(g).unwrap()).collect();
        let theirs: BTreeSet<_> = atlas
            .iter()
            .filter(|r| r.n == n && r.connected && !has_induced_path(&r.graph, 4))
            .map(|r| canonical_code(&r.graph).unwrap())
            .collect();
        assert_eq!(ours, theirs, "n={n}");
    }
    let ours: BTreeSet<_> =
        enumerate_connected_cographs(8).unwrap().iter().map(|g| canonical_code(g).unwrap()).collect();
    let theirs: BTreeSet<_> = cographs_8().iter().map(|g| canonical_code(g).unwrap()).collect();
    assert_eq!(theirs.len(), 261);
    assert_eq!(ours, theirs);
}

#[test]
fn cotree_code_is_a_complete_invariant_on_cographs() {
    let mut graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_connected_cographs(n).unwrap()).collect();
    graphs.extend(cographs_8());
    let mut by_cotree = BTreeMap::new();
    for g in &graphs {
        let prev = by_cotree.insert(cotree_code(g).unwrap(), canonical_code(g).unwrap());
        assert!(prev.is_none(), "two classes share a cotree code");
    }
    let canon: BTreeSet<_> = by_cotree.values().collect();
    assert_eq!(canon.len(), graphs.len());
}

#[test]
fn dismantlable_iff_one_cop_wins() {
    for r in atlas().into_iter().filter(|r| r.n <= 6 && r.connected) {
        let naive = one_cop_wins(&r.graph);
        assert_eq!(is_dismantlable(&r.graph), naive, "{}", r.graph6);
        assert_eq!(cop_number(&r.graph).unwrap() == 1, naive, "{}", r.graph6);
    }
}
