mod support;

use support::*;

#[test]
fn permutation_character_fixed_dims_count_orbits() {
    for (name, g) in corpus(30_000) {
        let t = table(&g);
        burnside(&t, &sample_subgroups(&t)).unwrap_or_else(|e| panic!("{}: {}", name, e));
    }
}

#[test]
fn orbit_counts_agree_with_group_orbits() {
    for (name, g) in corpus(30_000) {
        assert_eq!(g.orbits().len(), orbit_count(g.degree(), g.generators()), "{}", name);
    }
}

#[test]
fn corpus_includes_shipped_groups() {
    let names: Vec<String> = shipped().into_iter().map(|(n, _)| n).collect();
    assert!(names.len() >= 10, "{:?}", names);
    assert!(names.iter().any(|n| n == "PSU(4,2)"));
}
