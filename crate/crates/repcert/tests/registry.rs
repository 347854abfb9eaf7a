#[path = "../../core/tests/support/mod.rs"]
mod support;

use repcert::certificate::{model_group, series_holds, verify_all, Context};
use repcert::registry::Registry;
use repcert_core::iso::is_isomorphic;

#[test]
fn every_registry_table_is_orthogonal() {
    let reg = Registry::embedded().unwrap();
    for e in reg.entries() {
        let t = reg.table(&e.name).unwrap();
        support::exact_orthogonality(t).unwrap_or_else(|m| panic!("{}: {}", e.name, m));
        support::float_orthogonality(t, 1e-9).unwrap_or_else(|m| panic!("{}: {}", e.name, m));
    }
}

#[test]
fn registry_subgroups_satisfy_burnside() {
    let reg = Registry::embedded().unwrap();
    for e in reg.entries() {
        let t = reg.table(&e.name).unwrap();
        let subs: Vec<_> = reg
            .entries()
            .filter(|c| c.parent.as_deref() == Some(e.name.as_str()))
            .map(|c| reg.group(&c.name).unwrap().clone())
            .collect();
        support::burnside(t, &subs).unwrap_or_else(|m| panic!("{}: {}", e.name, m));
    }
}

#[test]
fn registry_is_consistent() {
    let reg = Registry::embedded().unwrap();
    for e in reg.entries() {
        assert!(reg.consistent(&e.name).unwrap(), "{}", e.name);
    }
}

#[test]
fn shipped_group_files_match_registry() {
    let reg = Registry::embedded().unwrap();
    for (name, g) in support::shipped() {
        assert!(reg.group(&name).unwrap().same_elements(&g), "{}", name);
    }
}

#[test]
fn listed_g1_is_conjugate_to_registered_g1() {
    let reg = Registry::embedded().unwrap();
    let listed = reg.group("PSL(2,7)").unwrap();
    let g1 = reg.group("G1").unwrap();
    assert!(!listed.same_elements(g1));
    assert!(listed.conjugate(&support::perm("(5,7)", 8)).same_elements(g1));
    assert!(is_isomorphic(listed, g1).unwrap().is_some());
}

#[test]
fn small_subgroups_match_their_models() {
    let reg = Registry::embedded().unwrap();
    for (name, model) in [("D10(A5)", "D10"), ("A4(A5)", "A4"), ("D4(A5)", "D4"), ("C2(S5)", "C2")] {
        let m = model_group(model).unwrap();
        assert!(is_isomorphic(reg.group(name).unwrap(), &m).unwrap().is_some(), "{}", name);
    }
}

#[test]
fn series_lists_quotients_from_the_top() {
    let s4 = repcert_core::PermGroup::symmetric(4);
    let m = |l: &str| model_group(l).unwrap();
    assert!(series_holds(&s4, &[m("C2"), m("A4")]).unwrap());
    assert!(series_holds(&s4, &[m("C2"), m("C3"), m("D4")]).unwrap());
    assert!(!series_holds(&s4, &[m("C2"), m("C3"), m("C4")]).unwrap());
    assert!(!series_holds(&s4, &[m("A4")]).unwrap());
}

#[test]
fn certificate_is_deterministic_in_process() {
    let a = verify_all(&Context::embedded().unwrap()).without_timings();
    let b = verify_all(&Context::embedded().unwrap()).without_timings();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.pass());
}
