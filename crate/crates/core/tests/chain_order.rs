mod support;

use proptest::prelude::*;
use repcert_core::{PermGroup, Permutation};
use support::*;

#[test]
fn chain_order_matches_closure() {
    for (name, g) in corpus(10_000) {
        let closure = closure_bfs(g.degree(), g.generators());
        assert_eq!(closure.len() as u128, g.order(), "{}", name);
        assert!(closure.iter().all(|x| g.has(x)), "{}", name);
    }
}

#[test]
fn symmetric_and_alternating_orders() {
    let mut fact = 1u128;
    for n in 1..=10 {
        fact *= n as u128;
        assert_eq!(PermGroup::symmetric(n).order(), fact);
        assert_eq!(PermGroup::alternating(n).order(), if n < 2 { 1 } else { fact / 2 });
    }
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn gens_strategy() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_groups_have_closure_order((n, gens) in gens_strategy()) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        prop_assert_eq!(closure_bfs(n, &gens).len() as u128, g.order());
    }

    #[test]
    fn products_of_generators_sift_through(
        (n, gens) in gens_strategy(),
        word in prop::collection::vec(0usize..3, 0..20),
    ) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let mut x = Permutation::identity(n);
        for i in word {
            x = &x * &gens[i % gens.len()];
        }
        prop_assert!(g.has(&x));
        prop_assert!(g.chain().contains(&x));
        let (residue, _) = g.chain().strip(&x);
        prop_assert!(residue.is_identity());
    }

    #[test]
    fn membership_agrees_with_closure((n, gens) in gens_strategy(), p in (2usize..=7).prop_flat_map(perm_strategy)) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        if p.degree() == n {
            let closure = closure_bfs(n, &gens);
            prop_assert_eq!(g.has(&p), closure.contains(&p));
        }
    }

    #[test]
    fn even_generators_stay_even((n, gens) in gens_strategy()) {
        let even: Vec<Permutation> = gens.into_iter().filter(|p| p.is_even()).collect();
        let g = PermGroup::new(n, even).unwrap();
        let odd = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        prop_assert!(!g.has(&odd));
    }
}
