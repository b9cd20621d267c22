//! The recorded substructure expectations for every catalog entry are
//! reproduced exactly by the enumeration: nothing missing, nothing extra.

use graphlie::{all_entries, enumerate_substructures, get, verify_entry};

#[test]
fn every_catalog_entry_is_reproduced_without_misses_or_extras() {
    let entries = all_entries();
    assert_eq!(entries.len(), 15);
    for entry in &entries {
        let report = verify_entry(entry);
        assert!(report.ok(), "{}: misses {:?}", entry.name, report.misses);
        assert!(
            report.extras.is_empty(),
            "{}: extras {:?}",
            entry.name,
            report.extras
        );
    }
}

#[test]
fn nontrivial_and_ideal_counts_per_entry() {
    let expected = [
        ("heis_x_g1", 1, 1),
        ("g5_1", 2, 2),
        ("g5_2", 2, 0),
        ("heis_x_g1_2", 1, 1),
        ("g6_1", 3, 0),
        ("g6_2", 5, 2),
        ("heis_x_heis", 2, 2),
        ("heis_x_g1_3", 1, 1),
        ("g5_1_x_g1", 3, 3),
        ("g5_2_x_g1", 3, 1),
        ("example1_k4", 10, 10),
        ("example1_g5_1", 2, 2),
        ("k2_free", 0, 0),
        ("k3_free", 3, 0),
        ("k4_free", 10, 0),
    ];
    for (name, nontrivial, ideals) in expected {
        let entry = get(name).unwrap();
        let reports = enumerate_substructures(&entry.graph, entry.graph.vertex_count());
        let found_nontrivial = reports.iter().filter(|r| r.is_nontrivial()).count();
        let found_ideals = reports
            .iter()
            .filter(|r| r.is_nontrivial() && r.is_graph_ideal && r.is_ideal)
            .count();
        assert_eq!(found_nontrivial, nontrivial, "{name} nontrivial count");
        assert_eq!(found_ideals, ideals, "{name} ideal count");
    }
}

#[test]
fn enumeration_lists_nontrivial_spans_first_and_deterministically() {
    for entry in all_entries() {
        let a = enumerate_substructures(&entry.graph, entry.graph.vertex_count());
        let b = enumerate_substructures(&entry.graph, entry.graph.vertex_count());
        let key = |rs: &[graphlie::SubstructureReport]| -> Vec<(Vec<String>, bool, bool)> {
            rs.iter()
                .map(|r| (r.span_names(), r.is_subalgebra, r.is_graph_ideal))
                .collect()
        };
        assert_eq!(key(&a), key(&b), "{}: enumeration order is stable", entry.name);
        let first_trivial = a.iter().position(|r| !r.is_nontrivial());
        if let Some(pos) = first_trivial {
            assert!(
                a[pos..].iter().all(|r| !r.is_nontrivial()),
                "{}: trivial reports are contiguous at the end",
                entry.name
            );
        }
    }
}
