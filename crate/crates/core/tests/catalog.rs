use homq::catalog::{build, verify_suite, CatalogError, Instance, Params, NAMES};

fn params(pairs: &[(&str, &str)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[test]
fn every_catalog_entry_passes_its_suite() {
    for name in NAMES {
        let inst = build(name, &Params::new(), 4).unwrap();
        let rep = verify_suite(&inst, 2).unwrap();
        assert!(rep.passed(), "{name}: {}", rep.summary());
    }
}

#[test]
fn parameters_reach_the_instance() {
    let inst = build("mq2", &params(&[("lambda", "lambda")]), 4).unwrap();
    let c = inst.cobraided().unwrap();
    let p = c.h().pres();
    assert_eq!(c.h().alpha(&p.gen("b")), p.poly(&[("b", "lambda")]).unwrap());
    let inst = build("plane_fermionic", &params(&[("lambda", "2"), ("xi", "3")]), 4).unwrap();
    assert!(matches!(inst, Instance::Plane(_)));
    assert!(verify_suite(&inst, 2).unwrap().passed());
}

#[test]
fn unknown_names_and_parameters_are_rejected() {
    assert!(matches!(build("mq3", &Params::new(), 4), Err(CatalogError::Unknown(_))));
    assert!(matches!(
        build("mq2", &params(&[("mu", "2")]), 4),
        Err(CatalogError::Parameter(_))
    ));
    assert!(matches!(
        build("plane_standard", &params(&[("xi", "0")]), 4),
        Err(CatalogError::Parameter(_))
    ));
    assert!(matches!(
        build("anyon", &params(&[("k", "5")]), 4),
        Err(CatalogError::Parameter(_))
    ));
    assert!(build("anyon", &params(&[("n", "x")]), 4).is_err());
}
