//! End-to-end flows through the public API: labels in, algebra, table
//! match and isogeny moves out.

use hecke_core::hecke_algebra::{algebra, check_relations};
use hecke_core::isogeny_transfer::{roundtrip_check, transfer, CaseKind, Component, Direction, TransferCase};
use hecke_core::label_params::LabelFunction;
use hecke_core::param_catalog::{match_label_function, reduced_match};
use hecke_core::root_data::{parse_components, BasedRootDatum, RootSystem};

fn system(name: &str) -> RootSystem {
    RootSystem::new(&parse_components(name).unwrap()).unwrap()
}

#[test]
fn labels_to_checked_algebra() {
    for (name, labels) in [("A1", "1,1"), ("B2", "3,3,1"), ("C2", "2,1")] {
        let rs = system(name);
        let lf = LabelFunction::parse(&rs, labels).unwrap();
        let alg = algebra(BasedRootDatum::adjoint(rs), lf).unwrap();
        let report = check_relations(&alg, 10, 7).unwrap();
        assert!(report.passed, "{name} {labels}: {:?}", report.checks);
    }
}

#[test]
fn matched_component_survives_transfer() {
    let rs = system("C3");
    let lf = LabelFunction::parse(&rs, "2,1").unwrap();
    let before = match_label_function(&rs, &lf).unwrap();
    assert!(before[0].matched.is_some());

    let c = Component::from_label_function(&rs, &lf).unwrap();
    let case = TransferCase::of(CaseKind::Ii);
    let b = transfer(&c, &case, Direction::ToQuotient).unwrap();
    let (rs_b, lf_b) = b.to_label_function().unwrap();
    assert!(match_label_function(&rs_b, &lf_b).unwrap()[0].matched.is_some());
    assert_eq!(transfer(&b, &case, Direction::ToCover).unwrap(), c);
    assert!(roundtrip_check(&c, &case).unwrap());
}

#[test]
fn zero_labels_reduce_before_matching() {
    let rs = system("B3");
    let lf = LabelFunction::parse(&rs, "2,0,0").unwrap();
    let (reduced, matches) = reduced_match(&rs, &lf).unwrap();
    assert_eq!(reduced.rank(), 3);
    assert!(matches.iter().all(|m| m.matched.is_some()));
}
