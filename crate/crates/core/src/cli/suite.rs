use std::sync::Arc;

use serde_json::json;

use super::{ContextKind, Report, SuiteConfig};
use crate::chaincat::{counterexample_c, interval_i, parse_chain_input, ChainComplex, ChainContext};
use crate::cocat::{
    check_cocategory, check_cocycle, check_cogroupoid, check_groupoid_homs, check_hopf, check_invertibility,
    check_j_hopf, check_lattice, check_lattice_uniqueness, check_phi_psi, check_representable, check_two_category,
    comonoid_of, coproduct_interval, discrete_interval, free_invertible_interval, is_resource_error, unit_comonoid,
    CheckReport, Interval, Kit, Monoid, MonoidalContext, Probes,
};
use crate::error::{Error, Result};
use crate::fincat::{interval_iso, interval_two, parse_fincat_input, FinCatContext, Limits};

/// Every check name `verify --check` accepts.
pub const CHECKS: [&str; 12] = [
    "cocategory",
    "cogroupoid",
    "lattice",
    "lattice-uniqueness",
    "hopf",
    "representable",
    "phi-psi",
    "cocycle",
    "two-category",
    "invertibility",
    "groupoid-homs",
    "free-j",
];

/// Objects the parameterized checks run over.
pub(crate) struct Params<C: MonoidalContext + ?Sized> {
    pub probes: Probes<C::Obj, C::Mor>,
    /// Parameter objects `B`, with labels.
    pub bs: Vec<(String, C::Obj)>,
    /// Target object `A`.
    pub a: C::Obj,
}

/// The suite run when no check is named: the axioms, plus everything the
/// interval's extra structure makes meaningful.
pub fn default_checks(context: ContextKind, has_sigma: bool, has_lattice: bool) -> Vec<String> {
    let mut out = vec!["cocategory"];
    if has_sigma {
        out.push("cogroupoid");
    }
    if has_lattice {
        out.extend(["lattice", "hopf", "representable"]);
        if context == ContextKind::FinCat {
            out.push("invertibility");
        }
    }
    out.into_iter().map(String::from).collect()
}

fn cogroupoid_any<C: MonoidalContext + ?Sized>(ctx: &C, iv: &Interval<C::Obj, C::Mor>) -> CheckReport {
    if let Some(sigma) = &iv.sigma {
        return check_cogroupoid(ctx, &iv.cocat, sigma);
    }
    let mut r = CheckReport::new("cogroupoid");
    let i = &iv.cocat.c1;
    match ctx.enumerate_hom(i, i) {
        Ok(cands) => {
            if let Some(s) = cands.iter().find(|s| check_cogroupoid(ctx, &iv.cocat, s).passed()) {
                r.pass("coinverse");
                r.set_data("sigma", ctx.describe(s));
            } else {
                r.fail(
                    "coinverse",
                    format!("none of the {} endomorphisms of I is a coinverse", cands.len()),
                    json!({ "candidates": cands.iter().map(|s| ctx.describe(s)).collect::<Vec<_>>() }),
                );
            }
        }
        Err(e) => r.error("coinverse", &e),
    }
    r
}

/// Commutative Hopf structures `(I, join, bot)`, `(I, meet, top)` and the
/// trivial one on the unit, all with the interval's comonoid.
pub(crate) fn hopf_structures<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> CheckReport {
    let ctx = kit.ctx;
    let mut r = CheckReport::new("hopf");
    let c = &kit.iv.cocat;
    match (&kit.iv.meet, &kit.iv.join, comonoid_of(kit)) {
        (Some(meet), Some(join), Ok((g, _))) => {
            let i = kit.i().clone();
            let with_join = Monoid {
                obj: i.clone(),
                unit: c.bot.clone(),
                mul: join.clone(),
            };
            let with_meet = Monoid {
                obj: i,
                unit: c.top.clone(),
                mul: meet.clone(),
            };
            r.absorb("join-bot", check_hopf(ctx, &with_join, &g));
            r.absorb("meet-top", check_hopf(ctx, &with_meet, &g));
        }
        (_, _, Err(e)) => r.error("comonoid", &e),
        _ => r.error("lattice", &Error::MissingLattice),
    }
    let u = ctx.unit();
    match (ctx.lambda(&u), unit_comonoid(ctx)) {
        (Ok(mul), Ok(g)) => {
            let m = Monoid {
                obj: u.clone(),
                unit: ctx.id(&u),
                mul,
            };
            r.absorb("unit", check_hopf(ctx, &m, &g));
        }
        (Err(e), _) | (_, Err(e)) => r.error("unit", &e),
    }
    r
}

fn free_j<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> CheckReport {
    let ctx = kit.ctx;
    match free_invertible_interval(kit) {
        Ok(fj) => {
            let probes = Probes::Enumerate {
                b: ctx.unit(),
                a: fj.j.cocat.c1.clone(),
            };
            let mut r = check_j_hopf(kit, &fj, &probes, &[]);
            r.set_data("J", ctx.describe_obj(&fj.j.cocat.c1));
            r
        }
        Err(e) => {
            let mut r = CheckReport::new("free-j");
            r.error("construction", &e);
            r
        }
    }
}

fn absorb_each<O>(bs: &[(String, O)], name: &str, f: impl Fn(&O) -> CheckReport) -> CheckReport {
    let mut r = CheckReport::new(name);
    for (label, b) in bs {
        r.absorb(label, f(b));
    }
    r
}

pub(crate) fn run_check<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>, params: &Params<C>, check: &str) -> CheckReport {
    let ctx = kit.ctx;
    let iv = kit.iv;
    let a = &params.a;
    match check {
        "cocategory" => check_cocategory(ctx, &iv.cocat),
        "cogroupoid" => cogroupoid_any(ctx, iv),
        "lattice" => check_lattice(kit),
        "lattice-uniqueness" => check_lattice_uniqueness(kit, None),
        "hopf" => hopf_structures(kit),
        "representable" => check_representable(kit, &params.probes),
        "phi-psi" => absorb_each(&params.bs, check, |b| check_phi_psi(kit, b, a)),
        "cocycle" => absorb_each(&params.bs, check, |b| check_cocycle(kit, b, a)),
        "two-category" => check_two_category(kit, a, a, a),
        "invertibility" => check_invertibility(kit).report,
        "groupoid-homs" => {
            let pairs: Vec<_> = params.bs.iter().map(|(_, b)| (b.clone(), a.clone())).collect();
            check_groupoid_homs(kit, &pairs)
        }
        "free-j" => free_j(kit),
        other => {
            let mut r = CheckReport::new(other);
            r.error("config", &Error::Config(format!("unknown check '{other}'")));
            r
        }
    }
}

pub(crate) fn fincat_interval(
    ctx: &FinCatContext,
    name: &str,
) -> Result<Interval<crate::fincat::Cat, crate::fincat::Functor>> {
    match name {
        "two" | "cat-two" => interval_two(ctx),
        "iso" | "cat-iso" => interval_iso(ctx),
        "discrete" => discrete_interval(ctx),
        "coproduct" => coproduct_interval(ctx),
        _ => Err(Error::Config(format!("unknown fincat interval '{name}'"))),
    }
}

pub(crate) fn fincat_params(
    ctx: &FinCatContext,
    iv: &Interval<crate::fincat::Cat, crate::fincat::Functor>,
) -> Params<FinCatContext> {
    let u = ctx.unit();
    let i = iv.cocat.c1.clone();
    Params {
        probes: Probes::Enumerate {
            b: u.clone(),
            a: i.clone(),
        },
        bs: vec![("B=unit".into(), u), ("B=I".into(), i.clone())],
        a: i,
    }
}

pub(crate) fn chain_params(
    ctx: &ChainContext,
    iv: &Interval<Arc<ChainComplex>, crate::chaincat::ChainMap>,
    with_counterexample: bool,
) -> Result<Params<ChainContext>> {
    let u = ctx.unit();
    let probes = if with_counterexample {
        // The squares start at I*I; the parameter is U, so precompose lambda.
        let cx = counterexample_c(ctx.ring)?;
        let ii = ctx.tensor(&iv.cocat.c1, &iv.cocat.c1)?;
        let lam = ctx.lambda(&ii)?;
        Probes::Pairs {
            b: u.clone(),
            pairs: vec![(cx.phi.after(&lam)?, cx.psi.after(&lam)?)],
        }
    } else {
        Probes::Enumerate {
            b: u.clone(),
            a: u.clone(),
        }
    };
    Ok(Params {
        probes,
        bs: vec![("B=unit".into(), u)],
        a: iv.cocat.c1.clone(),
    })
}

fn run_all<C: MonoidalContext + ?Sized>(
    mut config: SuiteConfig,
    ctx: &C,
    iv: &Interval<C::Obj, C::Mor>,
    params: &Params<C>,
) -> Report {
    let checks = config.checks.clone().unwrap_or_else(|| {
        default_checks(
            config.context,
            iv.sigma.is_some(),
            iv.meet.is_some() && iv.join.is_some(),
        )
    });
    config.checks = Some(checks.clone());
    let mut report = Report::new(config.to_json());
    let kit = Kit::new(ctx, iv);
    for check in &checks {
        report.run(check.as_str(), || run_check(&kit, params, check));
    }
    report
}

/// Runs the configured checks over a built-in interval or one read from
/// `input` (fincat text or chaincat JSON). Hitting a resource limit while
/// building the interval yields an inconclusive report, not an error.
pub fn run_suite(config: SuiteConfig, input: Option<&str>) -> Result<Report> {
    config.validate()?;
    let echo = config.to_json();
    match build_and_run(config, input) {
        Err(e) if is_resource_error(&e) => {
            let mut report = Report::new(echo);
            report.run("setup", || {
                let mut r = CheckReport::new("setup");
                r.error("interval", &e);
                r
            });
            Ok(report)
        }
        other => other,
    }
}

fn build_and_run(config: SuiteConfig, input: Option<&str>) -> Result<Report> {
    match config.context {
        ContextKind::FinCat => {
            let ctx = FinCatContext::new(Limits {
                depth_bound: config.depth_bound,
                cap: config.cap,
            });
            let iv = match input {
                Some(text) => parse_fincat_input(text, &ctx)?
                    .interval
                    .ok_or_else(|| Error::Config("input does not declare an interval".into()))?,
                None => fincat_interval(&ctx, &config.interval)?,
            };
            let params = fincat_params(&ctx, &iv);
            Ok(run_all(config, &ctx, &iv, &params))
        }
        ContextKind::ChainCat => {
            let mut ctx = ChainContext::new(config.ring);
            ctx.coeff_box = config.coeff_box;
            ctx.enum_cap = config.cap.saturating_mul(100);
            let (iv, builtin_i) = match input {
                Some(text) => {
                    let parsed = parse_chain_input(text, config.ring)?;
                    if parsed.ring != config.ring {
                        ctx = ChainContext {
                            ring: parsed.ring,
                            ..ctx
                        };
                    }
                    let iv = parsed
                        .interval
                        .ok_or_else(|| Error::Config("input does not declare an interval".into()))?;
                    (iv, false)
                }
                None => match config.interval.as_str() {
                    "I" => (interval_i(config.ring), true),
                    "discrete" => (discrete_interval(&ctx)?, false),
                    "coproduct" => (coproduct_interval(&ctx)?, false),
                    other => return Err(Error::Config(format!("unknown chaincat interval '{other}'"))),
                },
            };
            let params = chain_params(&ctx, &iv, builtin_i)?;
            Ok(run_all(config, &ctx, &iv, &params))
        }
    }
}
