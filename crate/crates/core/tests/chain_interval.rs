use std::sync::Arc;

use cointerval::chaincat::{corrupted_interval_i, counterexample_c, interval_i, ChainComplex, ChainContext};
use cointerval::cocat::{
    check_cocategory, check_cogroupoid, check_injective_boundaries, check_lattice, check_representable, CheckReport,
    Kit, MonoidalContext, Probes, Status,
};
use cointerval::exactalg::Ring;

fn failures(r: &CheckReport) -> Vec<String> {
    r.items
        .iter()
        .filter(|i| i.status != Status::Pass)
        .map(|i| format!("{} [{:?}] {}", i.name, i.status, i.detail.clone().unwrap_or_default()))
        .collect()
}

#[test]
fn chain_interval_is_a_cocategory() {
    for ring in [Ring::Integers, Ring::Rationals, Ring::IntegersMod(5)] {
        let ctx = ChainContext::new(ring);
        let iv = interval_i(ring);
        let r = check_cocategory(&ctx, &iv.cocat);
        assert!(r.passed(), "{ring}: {:?}", failures(&r));
    }
}

#[test]
fn chain_interval_is_a_cogroupoid() {
    let ctx = ChainContext::new(Ring::Integers);
    let iv = interval_i(Ring::Integers);
    let r = check_cogroupoid(&ctx, &iv.cocat, iv.sigma.as_ref().unwrap());
    assert!(r.passed(), "{:?}", failures(&r));
}

#[test]
fn chain_interval_lattice() {
    let ctx = ChainContext::new(Ring::Integers);
    let iv = interval_i(Ring::Integers);
    let kit = Kit::new(&ctx, &iv);
    let r = check_lattice(&kit);
    assert!(r.passed(), "{:?}", failures(&r));
}

#[test]
fn corrupted_cocomposition_breaks_counit() {
    let ctx = ChainContext::new(Ring::Integers);
    let iv = corrupted_interval_i(Ring::Integers);
    let r = check_cocategory(&ctx, &iv.cocat);
    assert_eq!(r.status(), Status::Fail);
    let bad: Vec<_> = r
        .items
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.name.as_str())
        .collect();
    assert!(bad.iter().any(|n| n.starts_with("counit")), "{bad:?}");
    let witness = r
        .items
        .iter()
        .find(|i| i.status == Status::Fail)
        .unwrap()
        .witness
        .clone();
    assert!(witness.is_some());
}

#[test]
fn boundaries_do_not_determine_squares() {
    let ring = Ring::Integers;
    let ctx = ChainContext::new(ring);
    let iv = interval_i(ring);
    let kit = Kit::new(&ctx, &iv);
    let cx = counterexample_c(ring).unwrap();
    assert_ne!(cx.phi, cx.psi);
    let u = Arc::new(ChainComplex::unit(ring));
    // phi and psi start at I*I; the probe parameter is U, so precompose lambda.
    let ii = ctx.tensor(kit.i(), kit.i()).unwrap();
    let lam = ctx.lambda(&ii).unwrap();
    let probes = Probes::Pairs {
        b: u,
        pairs: vec![(cx.phi.after(&lam).unwrap(), cx.psi.after(&lam).unwrap())],
    };
    let r = check_injective_boundaries(&kit, &probes);
    assert_eq!(r.status(), Status::Fail, "{:?}", r.to_json());
    let rep = check_representable(&kit, &probes);
    assert_eq!(rep.data["verdict"], "not representable");
}
