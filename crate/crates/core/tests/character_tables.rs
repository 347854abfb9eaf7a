mod support;

use support::*;

#[test]
fn regular_representation_agrees_for_small_groups() {
    for (name, g) in corpus(24) {
        let t = table(&g);
        regular_representation_oracle(&g, &t).unwrap_or_else(|e| panic!("{}: {}", name, e));
    }
}

#[test]
fn exact_orthogonality_across_corpus() {
    for (name, g) in corpus(30_000) {
        let t = table(&g);
        exact_orthogonality(&t).unwrap_or_else(|e| panic!("{}: {}", name, e));
    }
}

#[test]
fn float_shadow_matches_exact_values() {
    for (name, g) in corpus(30_000) {
        let t = table(&g);
        float_orthogonality(&t, 1e-9).unwrap_or_else(|e| panic!("{}: {}", name, e));
    }
}

#[test]
fn class_count_equals_row_count() {
    for (name, g) in corpus(30_000) {
        let t = table(&g);
        assert_eq!(t.rows().len(), t.num_classes(), "{}", name);
        assert!(t.rows().iter().all(|r| r.len() == t.num_classes()), "{}", name);
        assert_eq!(t.class_sizes().iter().sum::<usize>() as u128, t.order(), "{}", name);
    }
}

#[test]
fn first_row_is_trivial_and_first_column_is_degree() {
    for (name, g) in corpus(30_000) {
        let t = table(&g);
        assert_eq!(t.rows()[0], t.trivial_character(), "{}", name);
        for (r, row) in t.rows().iter().enumerate() {
            assert_eq!(row[0].to_integer(), Some(t.degree(r) as i64), "{}", name);
        }
    }
}

#[test]
fn known_degree_multisets() {
    let cases: &[(&str, &[u64])] = &[
        ("S3", &[1, 1, 2]),
        ("Q8", &[1, 1, 1, 1, 2]),
        ("D8", &[1, 1, 1, 1, 2]),
        ("A4", &[1, 1, 1, 3]),
        ("S4", &[1, 1, 2, 3, 3]),
        ("A5", &[1, 3, 3, 4, 5]),
        ("S5", &[1, 1, 4, 4, 5, 5, 6]),
    ];
    let zoo = zoo();
    for (name, want) in cases {
        let g = &zoo.iter().find(|(n, _)| n == name).unwrap().1;
        let mut d = table(g).degrees();
        d.sort();
        assert_eq!(&d, want, "{}", name);
    }
}
