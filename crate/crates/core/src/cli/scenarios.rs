use std::sync::Arc;

use serde_json::json;

use super::suite::{chain_params, fincat_interval, fincat_params, hopf_structures, run_check, Params};
use super::{expect_failure, Report};
use crate::chaincat::{corrupted_interval_i, counterexample_c, interval_i, ChainComplex, ChainContext, ChainMap};
use crate::cocat::{
    check_cocategory, check_cogroupoid, check_interval_isomorphism, check_invertibility, check_j_hopf, check_lattice,
    check_representable, coproduct_interval, discrete_interval, extend_to_j, free_invertible_interval, CheckReport,
    FreenessTarget, Interval, Kit, MonoidalContext, Probes,
};
use crate::error::{Error, Result};
use crate::exactalg::Ring;
use crate::fincat::{thin_functor, Cat, FinCatContext, Functor};

pub const SCENARIOS: [&str; 10] = [
    "discrete-interval",
    "coproduct-interval",
    "cat-two",
    "cat-iso",
    "chain-interval",
    "chain-counterexample",
    "free-J-from-two",
    "invertibility-ladder",
    "cocycle-lemmas",
    "hopf-structures",
];

type CatInterval = Interval<Cat, Functor>;
type ChainInterval = Interval<Arc<ChainComplex>, ChainMap>;

fn pinned(name: &str) -> serde_json::Value {
    json!({
        "scenario": name,
        "fincat": { "depth_bound": 12, "cap": 10_000 },
        "chaincat": { "coeff_box": 3 },
    })
}

fn run_named<C: MonoidalContext + ?Sized>(
    report: &mut Report,
    prefix: &str,
    kit: &Kit<'_, C>,
    params: &Params<C>,
    checks: &[&str],
) {
    for check in checks {
        report.run(format!("{prefix}/{check}"), || run_check(kit, params, check));
    }
}

fn failed_setup(report: &mut Report, name: &str, e: &Error) {
    report.run(name, || {
        let mut r = CheckReport::new(name);
        r.error("setup", e);
        r
    });
}

/// Runs `body`, recording a setup error as a result instead of aborting.
fn guarded(report: &mut Report, name: &str, body: impl FnOnce(&mut Report) -> Result<()>) {
    if let Err(e) = body(report) {
        failed_setup(report, name, &e);
    }
}

fn fincat_suite(report: &mut Report, ctx: &FinCatContext, prefix: &str, iv: &CatInterval, checks: &[&str]) {
    let kit = Kit::new(ctx, iv);
    let params = fincat_params(ctx, iv);
    run_named(report, prefix, &kit, &params, checks);
}

fn chain_suite(
    report: &mut Report,
    ctx: &ChainContext,
    prefix: &str,
    iv: &ChainInterval,
    checks: &[&str],
) -> Result<()> {
    let kit = Kit::new(ctx, iv);
    let params = chain_params(ctx, iv, false)?;
    run_named(report, prefix, &kit, &params, checks);
    Ok(())
}

const STRUCTURED: [&str; 5] = ["cocategory", "cogroupoid", "lattice", "hopf", "representable"];

fn discrete(report: &mut Report) {
    let fc = FinCatContext::default();
    guarded(report, "fincat/setup", |report| {
        let iv = discrete_interval(&fc)?;
        fincat_suite(report, &fc, "fincat", &iv, &STRUCTURED);
        Ok(())
    });
    let cc = ChainContext::new(Ring::Integers);
    guarded(report, "chaincat/setup", |report| {
        chain_suite(report, &cc, "chaincat", &discrete_interval(&cc)?, &STRUCTURED)
    });
}

fn coproduct(report: &mut Report) {
    let fc = FinCatContext::default();
    guarded(report, "fincat/setup", |report| {
        let iv = coproduct_interval(&fc)?;
        fincat_suite(
            report,
            &fc,
            "fincat",
            &iv,
            &[&STRUCTURED[..], &["invertibility"]].concat(),
        );
        Ok(())
    });
    let cc = ChainContext::new(Ring::Integers);
    guarded(report, "chaincat/setup", |report| {
        chain_suite(
            report,
            &cc,
            "chaincat",
            &coproduct_interval(&cc)?,
            &["cocategory", "cogroupoid", "lattice"],
        )
    });
}

fn cat_two(report: &mut Report) {
    let ctx = FinCatContext::default();
    guarded(report, "setup", |report| {
        let iv = fincat_interval(&ctx, "two")?;
        let kit = Kit::new(&ctx, &iv);
        let params = fincat_params(&ctx, &iv);
        report.run("cocategory", || run_check(&kit, &params, "cocategory"));
        report.run("not-cogroupoid", || {
            expect_failure(run_check(&kit, &params, "cogroupoid"))
        });
        for check in [
            "lattice",
            "lattice-uniqueness",
            "hopf",
            "representable",
            "phi-psi",
            "two-category",
            "groupoid-homs",
        ] {
            report.run(check, || run_check(&kit, &params, check));
        }
        Ok(())
    });
}

fn cat_iso(report: &mut Report) {
    let ctx = FinCatContext::default();
    guarded(report, "setup", |report| {
        let iv = fincat_interval(&ctx, "iso")?;
        let kit = Kit::new(&ctx, &iv);
        let mut params = fincat_params(&ctx, &iv);
        params.bs.truncate(1);
        for check in [
            "cocategory",
            "cogroupoid",
            "lattice",
            "lattice-uniqueness",
            "hopf",
            "representable",
            "phi-psi",
            "invertibility",
            "groupoid-homs",
        ] {
            report.run(check, || run_check(&kit, &params, check));
        }
        Ok(())
    });
}

fn chain_interval(report: &mut Report) {
    for ring in [Ring::Integers, Ring::Rationals, Ring::IntegersMod(5)] {
        let ctx = ChainContext::new(ring);
        let iv = interval_i(ring);
        let kit = Kit::new(&ctx, &iv);
        report.run(format!("{ring}/cocategory"), || check_cocategory(&ctx, &iv.cocat));
        report.run(format!("{ring}/cogroupoid"), || match &iv.sigma {
            Some(s) => check_cogroupoid(&ctx, &iv.cocat, s),
            None => {
                let mut r = CheckReport::new("cogroupoid");
                r.error("sigma", &Error::Config("interval carries no coinverse".into()));
                r
            }
        });
        report.run(format!("{ring}/lattice"), || check_lattice(&kit));
    }
    let ctx = ChainContext::new(Ring::Integers);
    let bad = corrupted_interval_i(Ring::Integers);
    report.run("Z/corrupted-cocategory", || {
        expect_failure(check_cocategory(&ctx, &bad.cocat))
    });
}

fn chain_counterexample(report: &mut Report) {
    let ring = Ring::Integers;
    let ctx = ChainContext::new(ring);
    let iv = interval_i(ring);
    guarded(report, "setup", |report| {
        let kit = Kit::new(&ctx, &iv);
        let cx = counterexample_c(ring)?;
        let params = chain_params(&ctx, &iv, true)?;
        report.run("complex", || {
            let mut r = CheckReport::new("complex");
            let c = &cx.complex;
            r.set_data("C", c.to_json());
            r.set_data("phi", cx.phi.to_json());
            r.set_data("psi", cx.psi.to_json());
            match c.d(1).mul(&c.d(2)) {
                Ok(dd) if dd.is_zero() => r.pass("d1.d2 = 0"),
                Ok(dd) => r.fail("d1.d2 = 0", "d1.d2 is not zero", json!(dd.to_json())),
                Err(e) => r.error("d1.d2 = 0", &e),
            }
            if cx.phi.component(2) != cx.psi.component(2) {
                r.pass("phi_2 != psi_2");
            } else {
                r.fail(
                    "phi_2 != psi_2",
                    "degree-2 components agree",
                    json!(cx.phi.component(2).to_json()),
                );
            }
            let boundaries = (|| -> Result<_> {
                let ii = ctx.tensor(kit.i(), kit.i())?;
                let lam = ctx.lambda(&ii)?;
                let u = ctx.unit();
                Ok((
                    kit.boundary(&u, &cx.phi.after(&lam)?)?,
                    kit.boundary(&u, &cx.psi.after(&lam)?)?,
                ))
            })();
            match boundaries {
                Ok((bp, bq)) => {
                    for (name, (x, y)) in crate::cocat::BOUNDARY_NAMES
                        .iter()
                        .zip(bp.components().into_iter().zip(bq.components()))
                    {
                        if x == y {
                            r.pass(format!("boundary/{name} agrees"));
                        } else {
                            r.fail(
                                format!("boundary/{name} agrees"),
                                "boundary components differ",
                                json!({ "phi": x.to_json(), "psi": y.to_json() }),
                            );
                        }
                    }
                }
                Err(e) => r.error("boundary", &e),
            }
            r
        });
        report.run("not-representable", || {
            let r = check_representable(&kit, &params.probes);
            let verdict = r.data.get("verdict").cloned();
            let mut out = expect_failure(r);
            if let Some(v) = verdict {
                out.set_data("verdict", v);
            }
            out
        });
        Ok(())
    });
}

fn free_j_from_two(report: &mut Report) {
    let ctx = FinCatContext::default();
    guarded(report, "setup", |report| {
        let two = fincat_interval(&ctx, "two")?;
        let iso = fincat_interval(&ctx, "iso")?;
        let kit = Kit::new(&ctx, &two);
        let fj = free_invertible_interval(&kit)?;
        let j = &fj.j.cocat.c1;
        report.run("J", || {
            let mut r = CheckReport::new("J");
            r.set_data("category", ctx.describe_obj(j));
            r.set_data("objects", json!(j.objects.len()));
            match j.morphism_count() {
                Ok(n) => {
                    r.set_data("morphisms", json!(n));
                    if j.objects.len() == 2 && n == 4 {
                        r.pass("two objects, four morphisms");
                    } else {
                        r.fail(
                            "two objects, four morphisms",
                            "unexpected size",
                            json!({ "objects": j.objects.len(), "morphisms": n }),
                        );
                    }
                }
                Err(e) => r.error("two objects, four morphisms", &e),
            }
            r
        });
        report.run("sigma", || match &fj.j.sigma {
            Some(s) => check_cogroupoid(&ctx, &fj.j.cocat, s),
            None => {
                let mut r = CheckReport::new("sigma");
                r.error("sigma", &Error::Config("J carries no coinverse".into()));
                r
            }
        });
        let xi = thin_functor(&two.cocat.c1, &iso.cocat.c1, vec![0, 1])?;
        report.run("hopf-interval", || {
            let targets = [FreenessTarget {
                name: "cat-iso".into(),
                h: &iso,
                xi: xi.clone(),
            }];
            let probes = Probes::Enumerate {
                b: ctx.unit(),
                a: j.clone(),
            };
            check_j_hopf(&kit, &fj, &probes, &targets)
        });
        report.run("isomorphic-to-cat-iso", || {
            let sigma = iso
                .sigma
                .as_ref()
                .ok_or(Error::Config("cat-iso carries no coinverse".into()));
            match sigma.and_then(|s| extend_to_j(&ctx, &fj, &xi, s)) {
                Ok(f) => check_interval_isomorphism(&ctx, &f, &fj.j, &iso),
                Err(e) => {
                    let mut r = CheckReport::new("isomorphism");
                    r.error("comparison map", &e);
                    r
                }
            }
        });
        Ok(())
    });
}

fn ladder_entry<C: MonoidalContext + ?Sized>(
    ctx: &C,
    iv: &Interval<C::Obj, C::Mor>,
    expected: Option<bool>,
) -> CheckReport {
    let kit = Kit::new(ctx, iv);
    let inv = check_invertibility(&kit);
    let mut r = inv.report;
    if let Some(want) = expected {
        let name = format!("conditions all {want}");
        if inv.values.iter().all(|v| *v == Some(want)) {
            r.pass(name);
        } else {
            r.fail(name, "conditions differ from the expected values", json!(inv.values));
        }
    }
    r
}

fn invertibility_ladder(report: &mut Report) {
    let ctx = FinCatContext::default();
    guarded(report, "setup", |report| {
        let two = fincat_interval(&ctx, "two")?;
        let iso = fincat_interval(&ctx, "iso")?;
        let kit = Kit::new(&ctx, &two);
        let fj = free_invertible_interval(&kit)?;
        let coprod = coproduct_interval(&ctx)?;
        report.run("cat-two", || ladder_entry(&ctx, &two, Some(false)));
        report.run("cat-iso", || ladder_entry(&ctx, &iso, Some(true)));
        report.run("J", || ladder_entry(&ctx, &fj.j, Some(true)));
        report.run("coproduct", || ladder_entry(&ctx, &coprod, Some(true)));
        Ok(())
    });
}

fn cocycle_lemmas(report: &mut Report) {
    let ctx = FinCatContext::default();
    guarded(report, "setup", |report| {
        let two = fincat_interval(&ctx, "two")?;
        fincat_suite(report, &ctx, "cat-two", &two, &["cocycle"]);
        Ok(())
    });
}

fn hopf_structures_scenario(report: &mut Report) {
    let fc = FinCatContext::default();
    guarded(report, "fincat/setup", |report| {
        for name in ["two", "iso"] {
            let iv = fincat_interval(&fc, name)?;
            let kit = Kit::new(&fc, &iv);
            report.run(format!("cat-{name}/hopf"), || hopf_structures(&kit));
        }
        Ok(())
    });
    let cc = ChainContext::new(Ring::Integers);
    let iv = interval_i(Ring::Integers);
    let kit = Kit::new(&cc, &iv);
    report.run("chain-I/lattice", || check_lattice(&kit));
    report.run("chain-I/hopf", || hopf_structures(&kit));
}

/// Runs a named scenario with its pinned configuration.
pub fn reproduce(name: &str) -> Result<Report> {
    let mut report = Report::new(pinned(name));
    match name {
        "discrete-interval" => discrete(&mut report),
        "coproduct-interval" => coproduct(&mut report),
        "cat-two" => cat_two(&mut report),
        "cat-iso" => cat_iso(&mut report),
        "chain-interval" => chain_interval(&mut report),
        "chain-counterexample" => chain_counterexample(&mut report),
        "free-J-from-two" => free_j_from_two(&mut report),
        "invertibility-ladder" => invertibility_ladder(&mut report),
        "cocycle-lemmas" => cocycle_lemmas(&mut report),
        "hopf-structures" => hopf_structures_scenario(&mut report),
        _ => return Err(Error::UnknownScenario(name.to_string())),
    }
    Ok(report)
}
