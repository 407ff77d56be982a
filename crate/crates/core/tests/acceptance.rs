//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines appear in `cargo test` output.

use std::path::PathBuf;
use std::sync::Arc;

use cointerval::chaincat::{counterexample_c, interval_i, ChainComplex, ChainContext};
use cointerval::cli::{reproduce, SCENARIOS};
use cointerval::cocat::{
    check_cocategory, check_cocycle, check_cogroupoid, check_hopf, check_interval_isomorphism, check_invertibility,
    check_j_hopf, check_lattice, check_phi_psi, check_representable, check_two_category, comonoid_of,
    coproduct_interval, discrete_interval, extend_to_j, free_invertible_interval, unit_comonoid, CheckReport, Interval,
    Kit, Monoid, MonoidalContext, Probes, Status,
};
use cointerval::exactalg::Ring;
use cointerval::fincat::{interval_iso, interval_two, nat_trans_of_cell, thin_functor, Cat, FinCatContext, Functor};

type Outcome = Result<(), String>;

fn passed(r: &CheckReport) -> Outcome {
    let bad: Vec<_> = r
        .items
        .iter()
        .filter(|i| i.status != Status::Pass)
        .map(|i| format!("{}/{} [{:?}]", r.name, i.name, i.status))
        .collect();
    if bad.is_empty() && !r.items.is_empty() {
        Ok(())
    } else if r.items.is_empty() {
        Err(format!("{} checked nothing", r.name))
    } else {
        Err(bad.join(", "))
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn cat_probes(ctx: &FinCatContext, iv: &Interval<Cat, Functor>) -> Probes<Cat, Functor> {
    Probes::Enumerate {
        b: ctx.unit(),
        a: iv.cocat.c1.clone(),
    }
}

fn axiom_suites() -> Outcome {
    let fc = FinCatContext::default();
    let two = interval_two(&fc).map_err(err)?;
    let iso = interval_iso(&fc).map_err(err)?;
    let coprod = coproduct_interval(&fc).map_err(err)?;
    let disc = discrete_interval(&fc).map_err(err)?;
    for iv in [&disc, &coprod, &two, &iso] {
        passed(&check_cocategory(&fc, &iv.cocat))?;
    }
    for ring in [Ring::Integers, Ring::IntegersMod(5)] {
        let cc = ChainContext::new(ring);
        passed(&check_cocategory(&cc, &interval_i(ring).cocat))?;
    }
    for iv in [&iso, &coprod] {
        passed(&check_cogroupoid(
            &fc,
            &iv.cocat,
            iv.sigma.as_ref().ok_or("missing coinverse")?,
        ))?;
    }
    let cc = ChainContext::new(Ring::Integers);
    let chain = interval_i(Ring::Integers);
    passed(&check_cogroupoid(
        &cc,
        &chain.cocat,
        chain.sigma.as_ref().ok_or("missing coinverse")?,
    ))?;
    let i = &two.cocat.c1;
    for s in fc.enumerate_hom(i, i).map_err(err)? {
        ensure(
            check_cogroupoid(&fc, &two.cocat, &s).status() == Status::Fail,
            "some endofunctor of 2 is a coinverse",
        )?;
    }
    Ok(())
}

fn counterexample() -> Outcome {
    let ring = Ring::Integers;
    let ctx = ChainContext::new(ring);
    let iv = interval_i(ring);
    let kit = Kit::new(&ctx, &iv);
    let cx = counterexample_c(ring).map_err(err)?;
    let c = &cx.complex;
    ensure(c.d(1).mul(&c.d(2)).map_err(err)?.is_zero(), "d1.d2 != 0")?;
    ensure(cx.phi.component(2) != cx.psi.component(2), "phi_2 = psi_2")?;
    let ii = ctx.tensor(kit.i(), kit.i()).map_err(err)?;
    let lam = ctx.lambda(&ii).map_err(err)?;
    let (phi, psi) = (cx.phi.after(&lam).map_err(err)?, cx.psi.after(&lam).map_err(err)?);
    let u = Arc::new(ChainComplex::unit(ring));
    let bp = kit.boundary(&u, &phi).map_err(err)?;
    let bq = kit.boundary(&u, &psi).map_err(err)?;
    for (x, y) in bp.components().into_iter().zip(bq.components()) {
        ensure(x == y, "boundaries differ")?;
    }
    let probes = Probes::Pairs {
        b: u,
        pairs: vec![(phi, psi)],
    };
    let r = check_representable(&kit, &probes);
    ensure(
        r.data.get("verdict").and_then(|v| v.as_str()) == Some("not representable"),
        "verdict",
    )?;
    ensure(
        r.items.iter().any(|i| i.status == Status::Fail && i.witness.is_some()),
        "no witness",
    )
}

fn representability() -> Outcome {
    let fc = FinCatContext::default();
    let ivs = [
        interval_two(&fc).map_err(err)?,
        interval_iso(&fc).map_err(err)?,
        coproduct_interval(&fc).map_err(err)?,
        discrete_interval(&fc).map_err(err)?,
    ];
    for iv in &ivs {
        let kit = Kit::new(&fc, iv);
        let r = check_representable(&kit, &cat_probes(&fc, iv));
        passed(&r)?;
        let conditions = r
            .items
            .iter()
            .filter(|i| i.name.starts_with("boundary-conditions/"))
            .count();
        ensure(
            conditions == 8,
            format!("{}: {conditions} boundary-condition items", iv.name),
        )?;
    }
    Ok(())
}

fn lattices_and_hopf() -> Outcome {
    let fc = FinCatContext::default();
    let two = interval_two(&fc).map_err(err)?;
    let cc = ChainContext::new(Ring::Integers);
    let chain = interval_i(Ring::Integers);
    let families = ["idempotency/", "absorption/", "unit/", "absorbing/", "distributivity/"];
    let r2 = check_lattice(&Kit::new(&fc, &two));
    let ri = check_lattice(&Kit::new(&cc, &chain));
    for r in [&r2, &ri] {
        passed(r)?;
        for f in families {
            ensure(r.items.iter().any(|i| i.name.starts_with(f)), format!("no {f} items"))?;
        }
    }
    let kit = Kit::new(&fc, &two);
    let (g, _) = comonoid_of(&kit).map_err(err)?;
    let i = two.cocat.c1.clone();
    let c = &two.cocat;
    let join = Monoid {
        obj: i.clone(),
        unit: c.bot.clone(),
        mul: two.join.clone().ok_or("missing join")?,
    };
    let meet = Monoid {
        obj: i,
        unit: c.top.clone(),
        mul: two.meet.clone().ok_or("missing meet")?,
    };
    passed(&check_hopf(&fc, &join, &g))?;
    passed(&check_hopf(&fc, &meet, &g))?;
    let u = fc.unit();
    let trivial = Monoid {
        obj: u.clone(),
        unit: fc.id(&u),
        mul: fc.lambda(&u).map_err(err)?,
    };
    passed(&check_hopf(&fc, &trivial, &unit_comonoid(&fc).map_err(err)?))
}

fn two_category_laws() -> Outcome {
    let fc = FinCatContext::default();
    let two = interval_two(&fc).map_err(err)?;
    let kit = Kit::new(&fc, &two);
    let t = two.cocat.c1.clone();
    passed(&check_two_category(&kit, &t, &t, &t))?;
    let cells = kit.all_cells(&t, &t).map_err(err)?;
    ensure(!cells.is_empty(), "no cells")?;
    let mut composable = 0;
    for eta in &cells {
        for gamma in &cells {
            if !fc.mor_eq(&eta.tgt, &gamma.src).map_err(err)? {
                continue;
            }
            composable += 1;
            let v = kit.vcomp(eta, gamma).map_err(err)?;
            let lhs = nat_trans_of_cell(&fc, &two, &v.cell).map_err(err)?;
            let rhs = nat_trans_of_cell(&fc, &two, &eta.cell)
                .and_then(|x| x.then(&nat_trans_of_cell(&fc, &two, &gamma.cell)?))
                .map_err(err)?;
            ensure(lhs.same(&rhs), "vcomp disagrees with composition of transformations")?;
        }
    }
    ensure(composable > 0, "no composable pairs")
}

fn cocycles() -> Outcome {
    let fc = FinCatContext::default();
    let two = interval_two(&fc).map_err(err)?;
    let kit = Kit::new(&fc, &two);
    let t = two.cocat.c1.clone();
    passed(&check_cocycle(&kit, &fc.unit(), &t))?;
    passed(&check_cocycle(&kit, &t, &t))
}

fn phi_psi_round_trip() -> Outcome {
    let fc = FinCatContext::default();
    let two = interval_two(&fc).map_err(err)?;
    let kit = Kit::new(&fc, &two);
    let t = two.cocat.c1.clone();
    passed(&check_phi_psi(&kit, &fc.unit(), &t))?;
    passed(&check_phi_psi(&kit, &t, &t))
}

fn free_j() -> Outcome {
    let fc = FinCatContext::default();
    let two = interval_two(&fc).map_err(err)?;
    let iso = interval_iso(&fc).map_err(err)?;
    let kit = Kit::new(&fc, &two);
    let fj = free_invertible_interval(&kit).map_err(err)?;
    let xi = thin_functor(&two.cocat.c1, &iso.cocat.c1, vec![0, 1]).map_err(err)?;
    let cmp = extend_to_j(&fc, &fj, &xi, iso.sigma.as_ref().ok_or("missing coinverse")?).map_err(err)?;
    passed(&check_interval_isomorphism(&fc, &cmp, &fj.j, &iso))?;
    passed(&check_j_hopf(&kit, &fj, &cat_probes(&fc, &fj.j), &[]))?;
    let on_two = check_invertibility(&kit);
    ensure(on_two.values == [Some(false); 4], format!("2: {:?}", on_two.values))?;
    let on_j = check_invertibility(&Kit::new(&fc, &fj.j));
    ensure(on_j.values == [Some(true); 4], format!("J: {:?}", on_j.values))
}

fn determinism() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in SCENARIOS {
        let golden = std::fs::read_to_string(dir.join(format!("{name}.json"))).map_err(err)?;
        for run in 0..2 {
            let text = reproduce(name).map_err(err)?.render(false);
            ensure(
                text == golden,
                format!("{name}: run {run} differs from its golden file"),
            )?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom suites", axiom_suites),
        ("counterexample reproduction", counterexample),
        ("representability criterion", representability),
        ("lattice and Hopf suites", lattices_and_hopf),
        ("2-category laws", two_category_laws),
        ("cocycle lemmas", cocycles),
        ("Phi/Psi round trip", phi_psi_round_trip),
        ("free J", free_j),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
