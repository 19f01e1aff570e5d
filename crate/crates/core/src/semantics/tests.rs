use super::*;
use crate::framework::{build_aaf, build_baf};
use crate::scenario::Scenario;
use crate::testutil::*;
use alloc::vec;

fn baf_of(s: &Scenario) -> Baf {
    build_baf(&s.instance().unwrap(), &s.preference_ranking().unwrap()).unwrap()
}

fn aaf_of(s: &Scenario) -> Aaf {
    build_aaf(&s.instance().unwrap(), &s.preference_ranking().unwrap()).unwrap()
}

fn family(f: &Baf, sets: &[&[&str]]) -> ExtensionSet {
    ExtensionSet::new(sets.iter().map(|s| s.iter().map(|n| f.find(n).unwrap()).collect()).collect())
}

fn run(s: &Scenario, sem: Semantics) -> (Baf, ExtensionSet) {
    let f = baf_of(s);
    let e = enumerate_extensions(&f, sem, &Limits::default()).unwrap();
    (f, e)
}

#[test]
fn table_two_example_six() {
    for sem in [Semantics::Stable, Semantics::DPreferred] {
        let (f, e) = run(&r1(), sem);
        assert_eq!(e, family(&f, &[&["M1", "M2", "c1", "c2"], &["M1", "M2", "c3"], &["M3", "c3"]]), "{sem}");
    }
    for sem in [Semantics::SPreferred, Semantics::CPreferred] {
        let (f, e) = run(&r1(), sem);
        assert_eq!(e, family(&f, &[&["M1", "M2", "c1", "c2"], &["M3", "c3"]]), "{sem}");
    }
}

#[test]
fn table_two_example_seven() {
    for sem in [Semantics::Stable, Semantics::DPreferred] {
        let (f, e) = run(&r2(), sem);
        assert_eq!(e, family(&f, &[&["M1", "M2", "c1", "c2"], &["M3", "c1", "c2"], &["M3", "c3"]]), "{sem}");
    }
    for sem in [Semantics::SPreferred, Semantics::CPreferred] {
        let (f, e) = run(&r2(), sem);
        assert_eq!(e, family(&f, &[&["M1", "M2", "c1", "c2"], &["M3", "c3"]]), "{sem}");
    }
}

#[test]
fn example_five_s_preferred() {
    let (f, e) = run(&ex5(), Semantics::SPreferred);
    assert_eq!(e, family(&f, &[&["M2", "c2"], &["M4", "M5", "c4", "c5"]]));
}

#[test]
fn non_emptiness_counterexample() {
    let (f, e) = run(&empty_d_family(), Semantics::DPreferred);
    assert_eq!(e, family(&f, &[&["c1", "c2"], &["M1", "c1"], &["M2", "c2"]]));
}

#[test]
fn coherence_counterexample() {
    let (f, e) = run(&incoherent_d_family(), Semantics::DPreferred);
    assert_eq!(
        e,
        family(
            &f,
            &[&["M1", "c1"], &["M2", "c2"], &["M3", "c3"], &["M1", "c3"], &["M2", "c1"], &["M2", "c3"]]
        )
    );
}

#[test]
fn loan_extensions() {
    let (f, d) = run(&loan(), Semantics::DPreferred);
    let ces = family(&f, &[&["c1", "c2", "c3"]]).as_slice()[0];
    let left = family(&f, &[&["c1", "M1", "c2", "M2"]]).as_slice()[0];
    assert!(d.contains(ces) && d.contains(left));
    let (_, st) = run(&loan(), Semantics::Stable);
    assert!(st.contains(ces) && st.contains(left));
    for sem in [Semantics::SPreferred, Semantics::CPreferred] {
        let (_, e) = run(&loan(), sem);
        assert!(!e.contains(ces) && e.contains(left), "{sem}");
    }
}

#[test]
fn aaf_preferred() {
    let f = Aaf::from_relations(3, &[(0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
    let e = enumerate_preferred_aaf(&f, &Limits::default()).unwrap();
    assert_eq!(e.as_slice(), &[[0, 1].into_iter().collect(), ArgSet::singleton(2)]);

    let f = aaf_of(&ex5());
    let e = enumerate_preferred_aaf(&f, &Limits::default()).unwrap();
    assert_eq!(e.as_slice(), &[[3, 4].into_iter().collect(), ArgSet::singleton(1)]);

    let (_, s) = run(&ex5(), Semantics::SPreferred);
    assert_eq!(e.map(|x| map_aaf_extension_to_baf(x, 5)), s);
    assert_eq!(s.map(|x| map_baf_extension_to_aaf(x, 5)), e);

    let free = Aaf::from_relations(4, &[]).unwrap();
    assert_eq!(enumerate_preferred_aaf(&free, &Limits::default()).unwrap().as_slice(), &[ArgSet::full(4)]);
}

#[test]
fn pair_maps() {
    let m45: ArgSet = [3, 4].into_iter().collect();
    let flat: ArgSet = [3, 4, 8, 9].into_iter().collect();
    assert_eq!(map_aaf_extension_to_baf(m45, 5), flat);
    assert_eq!(map_baf_extension_to_aaf(flat, 5), m45);
    assert_eq!(map_aaf_extension_to_baf(ArgSet::EMPTY, 5), ArgSet::EMPTY);
    assert_eq!(map_baf_extension_to_aaf(ArgSet::EMPTY, 5), ArgSet::EMPTY);
    assert_eq!(map_baf_extension_to_aaf([1, 6].into_iter().collect(), 5), ArgSet::singleton(1));
    // unmatched members are dropped
    assert_eq!(map_baf_extension_to_aaf([1, 7].into_iter().collect(), 5), ArgSet::EMPTY);
}

#[test]
fn single_pair_every_semantics() {
    for sem in Semantics::ALL {
        let (_, e) = run(&single(), sem);
        assert_eq!(e.as_slice(), &[ArgSet::full(2)]);
    }
}

#[test]
fn canonical_order_and_capacity() {
    let a: ArgSet = [0, 5].into_iter().collect();
    let b: ArgSet = [1, 2].into_iter().collect();
    let c: ArgSet = [0, 1, 2].into_iter().collect();
    assert_eq!(ExtensionSet::new(vec![b, a, c, a]).as_slice(), &[c, a, b]);

    let f = Baf::from_relations(3, &[], &[]).unwrap();
    assert_eq!(
        enumerate_extensions(&f, Semantics::Stable, &Limits::new(4).unwrap()),
        Err(Error::Capacity { arguments: 6, limit: 4 })
    );
    assert!(Limits::new(129).is_err());
}

#[test]
fn semantics_names_round_trip() {
    for sem in Semantics::ALL {
        assert_eq!(sem.as_str().parse::<Semantics>().unwrap(), sem);
    }
    assert!(matches!("grounded".parse::<Semantics>(), Err(Error::Config(_))));
}
