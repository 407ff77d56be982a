use cointerval::cocat::{
    check_cocategory, check_cogroupoid, check_lattice, coproduct_interval, discrete_interval, CheckReport, Kit,
    MonoidalContext, Status,
};
use cointerval::fincat::{
    enumerate_functors, enumerate_nat_trans, interval_iso, interval_two, iso, two, FinCatContext, Functor, NatTrans,
    Path,
};

fn failures(r: &CheckReport) -> Vec<String> {
    r.items
        .iter()
        .filter(|i| i.status != Status::Pass)
        .map(|i| format!("{} [{:?}] {}", i.name, i.status, i.detail.clone().unwrap_or_default()))
        .collect()
}

fn constant(ctx: &FinCatContext, c: &cointerval::fincat::Cat, d: &cointerval::fincat::Cat, y: usize) -> Functor {
    Functor::new(
        c.clone(),
        d.clone(),
        vec![y; c.objects.len()],
        vec![Path::id(y); c.generators.len()],
    )
    .map_err(|e| format!("{e} in {}", ctx.name()))
    .unwrap()
}

#[test]
fn functors_from_two_to_two() {
    let ctx = FinCatContext::default();
    let t = two(&ctx).unwrap();
    assert_eq!(enumerate_functors(&t, &t).unwrap().len(), 3);
}

#[test]
fn transformations_into_constants() {
    let ctx = FinCatContext::default();
    let t = two(&ctx).unwrap();
    let id = Functor::identity(&t);
    let top = constant(&ctx, &t, &t, 1);
    let bot = constant(&ctx, &t, &t, 0);
    assert_eq!(enumerate_nat_trans(&id, &top).unwrap().len(), 1);
    assert_eq!(enumerate_nat_trans(&top, &bot).unwrap().len(), 0);
    let only = &enumerate_nat_trans(&id, &top).unwrap()[0];
    let twice = only.then(&NatTrans::identity(&top)).unwrap();
    assert!(twice.same(only));
}

#[test]
fn gluing_two_copies() {
    let ctx = FinCatContext::default();
    let iv = interval_two(&ctx).unwrap();
    let p = &iv.cocat.c2;
    assert_eq!(p.objects.len(), 3);
    assert_eq!(p.morphism_count().unwrap(), 6);
    let g = interval_iso(&ctx).unwrap();
    let p = &g.cocat.c2;
    assert_eq!(p.objects.len(), 3);
    let homs = p.homs().unwrap();
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(homs[x][y].len(), 1);
        }
    }
}

#[test]
fn structural_isomorphisms() {
    let ctx = FinCatContext::default();
    let t = two(&ctx).unwrap();
    let tt = ctx.tensor(&t, &t).unwrap();
    let tau = ctx.tau(&t, &t).unwrap();
    assert!(ctx.mor_eq(&tau.after(&tau).unwrap(), &ctx.id(&tt)).unwrap());
    let l = ctx.lambda(&t).unwrap();
    assert!(ctx
        .mor_eq(&l.after(&ctx.lambda_inv(&t).unwrap()).unwrap(), &ctx.id(&t))
        .unwrap());
    let a = ctx.alpha(&t, &t, &t).unwrap();
    let ai = ctx.alpha_inv(&t, &t, &t).unwrap();
    assert!(ctx.is_identity_after(&ai, &a));
}

trait IdCheck {
    fn is_identity_after(&self, g: &Functor, f: &Functor) -> bool;
}

impl IdCheck for FinCatContext {
    fn is_identity_after(&self, g: &Functor, f: &Functor) -> bool {
        let gf = g.after(f).unwrap();
        self.mor_eq(&gf, &self.id(&f.src)).unwrap()
    }
}

#[test]
fn axiom_suites() {
    let ctx = FinCatContext::default();
    let two_iv = interval_two(&ctx).unwrap();
    let iso_iv = interval_iso(&ctx).unwrap();
    let uu = coproduct_interval(&ctx).unwrap();
    let disc = discrete_interval(&ctx).unwrap();
    for iv in [&two_iv, &iso_iv, &uu, &disc] {
        let r = check_cocategory(&ctx, &iv.cocat);
        assert!(r.passed(), "{}: {:?}", iv.name, failures(&r));
    }
    for iv in [&iso_iv, &uu, &disc] {
        let r = check_cogroupoid(&ctx, &iv.cocat, iv.sigma.as_ref().unwrap());
        assert!(r.passed(), "{}: {:?}", iv.name, failures(&r));
    }
    let swap_two = enumerate_functors(&two_iv.cocat.c1, &two_iv.cocat.c1).unwrap();
    for s in swap_two {
        assert!(!check_cogroupoid(&ctx, &two_iv.cocat, &s).passed());
    }
    let _ = iso(&ctx).unwrap();
}

#[test]
fn lattices() {
    let ctx = FinCatContext::default();
    for iv in [
        interval_two(&ctx).unwrap(),
        interval_iso(&ctx).unwrap(),
        coproduct_interval(&ctx).unwrap(),
    ] {
        let kit = Kit::new(&ctx, &iv);
        let r = check_lattice(&kit);
        assert!(r.passed(), "{}: {:?}", iv.name, failures(&r));
    }
}
