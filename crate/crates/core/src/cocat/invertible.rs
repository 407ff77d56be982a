//! Invertibility of an interval, the free invertible interval `J` on an
//! interval, and extension of invertible cells along `I -> J`.

use serde_json::json;

use super::algebra::{check_comonoid_hom, check_hopf, comonoid_of, unit_comonoid, Monoid};
use super::axioms::{check_cocategory, check_cogroupoid, glue_or_err};
use super::builders::coproduct_interval;
use super::cells::Kit;
use super::context::{ContextExt, MonoidalContext, Pushout};
use super::report::{CheckReport, Status};
use super::squares::{check_representable, Probes};
use super::structures::{Cocategory, Homotopy, Interval};
use crate::error::{Error, Result};

pub const INVERTIBILITY_CONDITIONS: [&str; 4] = ["coinverse", "negation", "meet-inverse", "i-equivalence"];

/// Evaluated conditions; `None` where the search was inconclusive.
#[derive(Debug, Clone)]
pub struct Invertibility {
    pub values: [Option<bool>; 4],
    pub report: CheckReport,
}

fn search_coinverse<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Result<bool> {
    let ctx = kit.ctx;
    let i = kit.i();
    for s in ctx.enumerate_hom(i, i)? {
        let r = check_cogroupoid(ctx, &kit.iv.cocat, &s);
        match r.status() {
            Status::Pass => return Ok(true),
            Status::Inconclusive => return Err(Error::CapExceeded("coinverse candidate could not be decided".into())),
            Status::Fail => {}
        }
    }
    Ok(false)
}

fn search_negation<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Result<bool> {
    let ctx = kit.ctx;
    let lam = kit.homotopy(kit.unit(), &ctx.lambda(kit.i())?)?;
    Ok(kit.find_inverse(&lam)?.is_some())
}

fn search_meet_inverse<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Result<bool> {
    let op = kit
        .iv
        .meet
        .as_ref()
        .or(kit.iv.join.as_ref())
        .ok_or(Error::MissingLattice)?;
    let cell = kit.homotopy(kit.i(), op)?;
    Ok(kit.find_inverse(&cell)?.is_some())
}

/// Whether `i: I -> U` is an equivalence: some `k: U -> I` with invertible
/// cells `k . i => 1_I` and `1_U => i . k`.
pub fn search_i_equivalence<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Result<bool> {
    let ctx = kit.ctx;
    let (i_obj, u) = (kit.i(), kit.unit());
    let i = &kit.iv.cocat.i;
    let ii_cells = kit.all_cells(i_obj, i_obj)?;
    let uu_cells = kit.all_cells(u, u)?;
    let one_i = ctx.id(i_obj);
    let one_u = ctx.id(u);
    for k in ctx.enumerate_hom(u, i_obj)? {
        let ki = ctx.compose(&k, i)?;
        let ik = ctx.compose(i, &k)?;
        let mut left = false;
        for phi in &ii_cells {
            if ctx.mor_eq(&phi.src, &ki)? && ctx.mor_eq(&phi.tgt, &one_i)? && kit.find_inverse(phi)?.is_some() {
                left = true;
                break;
            }
        }
        if !left {
            continue;
        }
        for psi in &uu_cells {
            if ctx.mor_eq(&psi.src, &one_u)? && ctx.mor_eq(&psi.tgt, &ik)? && kit.find_inverse(psi)?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Evaluates the four equivalent invertibility conditions independently by
/// search and checks that they agree.
pub fn check_invertibility<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Invertibility {
    let mut r = CheckReport::new("invertibility");
    let outcomes = [
        search_coinverse(kit),
        search_negation(kit),
        search_meet_inverse(kit),
        search_i_equivalence(kit),
    ];
    let mut values = [None; 4];
    for (k, (name, outcome)) in INVERTIBILITY_CONDITIONS.iter().zip(outcomes).enumerate() {
        match outcome {
            Ok(v) => {
                values[k] = Some(v);
                r.push(*name, Status::Pass, Some(format!("holds: {v}")), None);
                r.set_data(name, json!(v));
            }
            Err(e) => r.error(*name, &e),
        }
    }
    let known: Vec<bool> = values.iter().flatten().copied().collect();
    if known.len() < 4 {
        r.inconclusive("agreement", "not every condition could be decided");
    } else if known.iter().all(|&v| v == known[0]) {
        r.pass("agreement");
    } else {
        r.fail("agreement", "the conditions disagree", json!({ "values": known }));
    }
    Invertibility { values, report: r }
}

/// `J` with the pieces of its construction kept for extensions.
#[derive(Debug, Clone)]
pub struct FreeInvertible<O, M> {
    pub j: Interval<O, M>,
    /// `I -> J`
    pub iota: M,
    /// `K`, the pushout of `[bot, top]` and `[top, bot]`; `in_a` is the
    /// original interval, `in_b` its reversed copy.
    pub k: Pushout<O, M>,
    pub sigma_k: M,
    /// `K -> J`
    pub quotient: M,
}

/// Builds `J` as a quotient of `K` by the two coinverse relations, then
/// equips it with meet and join by extending invertible cells twice.
pub fn free_invertible_interval<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
) -> Result<FreeInvertible<C::Obj, C::Mor>> {
    let ctx = kit.ctx;
    let c = &kit.iv.cocat;
    let u = kit.unit().clone();
    let i_obj = kit.i().clone();

    let uu = ctx.coproduct(&u, &u)?;
    let l = ctx.copair(&uu, &c.bot, &c.top)?;
    let r = ctx.copair(&uu, &c.top, &c.bot)?;
    let k = ctx.pushout(&l, &r)?;
    let fwd = k.in_a.clone();
    let rev = k.in_b.clone();
    let bot_k = ctx.compose(&fwd, &c.bot)?;
    let top_k = ctx.compose(&fwd, &c.top)?;
    let i_k = ctx.factor(&k, &c.i, &c.i)?;
    let sigma_k = ctx.factor(&k, &rev, &fwd)?;

    let k2 = ctx.pushout(&top_k, &bot_k)?;
    let (down_k, up_k) = (k2.in_a.clone(), k2.in_b.clone());
    let i2 = glue_or_err(ctx, &c.top, &c.bot, &c.down, &c.up, "interval c2")?;
    let star_fwd = ctx.compose(
        &i2.copair(ctx, &ctx.compose(&down_k, &fwd)?, &ctx.compose(&up_k, &fwd)?)?,
        &c.star,
    )?;
    let star_rev = ctx.compose(
        &i2.copair(ctx, &ctx.compose(&up_k, &rev)?, &ctx.compose(&down_k, &rev)?)?,
        &c.star,
    )?;
    let star_k = ctx.factor(&k, &star_fwd, &star_rev)?;

    let id_k = ctx.id(&k.obj);
    let rel_top = ctx.compose(&ctx.factor(&k2, &sigma_k, &id_k)?, &star_k)?;
    let rel_bot = ctx.compose(&ctx.factor(&k2, &id_k, &sigma_k)?, &star_k)?;
    let q1 = ctx.coequalize(&rel_top, &ctx.compose(&top_k, &i_k)?)?;
    let q2 = ctx.coequalize(
        &ctx.compose(&q1, &rel_bot)?,
        &ctx.compose(&q1, &ctx.compose(&bot_k, &i_k)?)?,
    )?;
    let q = ctx.compose(&q2, &q1)?;
    let j_obj = ctx.cod(&q);

    let lift = |h: &C::Mor, what: &str| -> Result<C::Mor> {
        ctx.lift_through(&q, h)?
            .ok_or_else(|| Error::NoFactorization(format!("{what} does not descend to J")))
    };
    let bot_j = ctx.compose(&q, &bot_k)?;
    let top_j = ctx.compose(&q, &top_k)?;
    let i_j = lift(&i_k, "i")?;
    let sigma_j = lift(&ctx.compose(&q, &sigma_k)?, "sigma")?;
    let j2 = ctx.pushout(&top_j, &bot_j)?;
    let q_2 = ctx.factor(&k2, &ctx.compose(&j2.in_a, &q)?, &ctx.compose(&j2.in_b, &q)?)?;
    let star_j = lift(&ctx.compose(&q_2, &star_k)?, "star")?;
    let iota = ctx.compose(&q, &fwd)?;

    let mut fj = FreeInvertible {
        j: Interval::new(
            format!("free-invertible({})", kit.iv.name),
            Cocategory {
                c0: u,
                c1: j_obj,
                c2: j2.obj.clone(),
                bot: bot_j,
                top: top_j,
                i: i_j,
                down: j2.in_a.clone(),
                up: j2.in_b.clone(),
                star: star_j,
            },
        )
        .with_sigma(sigma_j),
        iota,
        k,
        sigma_k,
        quotient: q,
    };
    if kit.iv.meet.is_some() && kit.iv.join.is_some() {
        let (meet, join) = lattice_on_j(kit, &fj, &i_obj)?;
        fj.j.meet = Some(meet);
        fj.j.join = Some(join);
    }
    Ok(fj)
}

/// The extension `B * J -> A` of a cell `alpha: B * I -> A` with a known
/// inverse `beta`, through `B * K` and the quotient.
pub fn extend_with_inverse<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    fj: &FreeInvertible<C::Obj, C::Mor>,
    b: &C::Obj,
    alpha: &Homotopy<C::Mor>,
    beta: &Homotopy<C::Mor>,
) -> Result<C::Mor> {
    let ctx = kit.ctx;
    let bw = |m: &C::Mor| ctx.left_whisker(b, m);
    let g = glue_or_err(
        ctx,
        &bw(&fj.k.left)?,
        &bw(&fj.k.right)?,
        &bw(&fj.k.in_a)?,
        &bw(&fj.k.in_b)?,
        "B * K",
    )?;
    let on_k = g.copair(ctx, &alpha.cell, &beta.cell)?;
    let ext = ctx
        .lift_through(&bw(&fj.quotient)?, &on_k)?
        .ok_or_else(|| Error::NoFactorization("extension does not descend to B * J".into()))?;
    let back = ctx.compose(&ext, &bw(&fj.iota)?)?;
    if !ctx.mor_eq(&back, &alpha.cell)? {
        return Err(Error::NoFactorization("extension does not restrict to the cell".into()));
    }
    Ok(ext)
}

#[derive(Debug, Clone)]
pub enum Extension<M> {
    Extended(M),
    /// No inverse was found, and none of the enumerated maps `B * J -> A`
    /// restricts to the cell.
    NotInvertible {
        candidates: usize,
    },
}

/// Extends an invertible cell along `B * iota`, or certifies that no
/// enumerable extension exists.
pub fn extend_invertible_cell<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    fj: &FreeInvertible<C::Obj, C::Mor>,
    alpha: &Homotopy<C::Mor>,
) -> Result<Extension<C::Mor>> {
    let ctx = kit.ctx;
    let b = ctx.dom(&alpha.src);
    if let Some(beta) = kit.find_inverse(alpha)? {
        return extend_with_inverse(kit, fj, &b, alpha, &beta).map(Extension::Extended);
    }
    let bj = ctx.tensor(&b, &fj.j.cocat.c1)?;
    let restrict = ctx.left_whisker(&b, &fj.iota)?;
    let candidates = ctx.enumerate_hom(&bj, &ctx.cod(&alpha.src))?;
    for x in &candidates {
        if ctx.mor_eq(&ctx.compose(x, &restrict)?, &alpha.cell)? {
            return Err(Error::NoFactorization(
                "a non-invertible cell has an extension; the interval is inconsistent".into(),
            ));
        }
    }
    Ok(Extension::NotInvertible {
        candidates: candidates.len(),
    })
}

/// Meet and join on `J`: extend `iota . meet` over `I * J`, then the
/// twisted result over `J * J`, using the explicit inverses built from
/// the opposite operation and `sigma_J`.
fn lattice_on_j<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    fj: &FreeInvertible<C::Obj, C::Mor>,
    i_obj: &C::Obj,
) -> Result<(C::Mor, C::Mor)> {
    let ctx = kit.ctx;
    let (meet, join) = (kit.iv.meet.clone().unwrap(), kit.iv.join.clone().unwrap());
    let j = &fj.j.cocat;
    let sigma_j = fj.j.sigma.as_ref().expect("J carries sigma");
    let iota = &fj.iota;
    // B * I -> U * I -> I -> J -> J, a cell top_J . i => bot_J . i
    let reverse = |b: &C::Obj, i_b: &C::Mor| -> Result<Homotopy<C::Mor>> {
        let cell = ctx.chain(&[&ctx.right_whisker(i_b, i_obj)?, &ctx.lambda(i_obj)?, iota, sigma_j])?;
        kit.homotopy(b, &cell)
    };
    let cell = |b: &C::Obj, m: C::Mor| kit.homotopy(b, &m);

    let f = reverse(i_obj, &kit.iv.cocat.i)?;
    let meet_i = cell(i_obj, ctx.compose(iota, &meet)?)?;
    let join_i = cell(i_obj, ctx.compose(iota, &join)?)?;
    let half_meet = extend_with_inverse(kit, fj, i_obj, &meet_i, &kit.vcomp(&join_i, &f)?)?;
    let half_join = extend_with_inverse(kit, fj, i_obj, &join_i, &kit.vcomp(&f, &meet_i)?)?;

    let jo = &j.c1;
    let tw = ctx.tau(jo, i_obj)?;
    let big_f = reverse(jo, &j.i)?;
    let meet_j = cell(jo, ctx.compose(&half_meet, &tw)?)?;
    let join_j = cell(jo, ctx.compose(&half_join, &tw)?)?;
    let full_meet = extend_with_inverse(kit, fj, jo, &meet_j, &kit.vcomp(&join_j, &big_f)?)?;
    let full_join = extend_with_inverse(kit, fj, jo, &join_j, &kit.vcomp(&big_f, &meet_j)?)?;
    let tjj = ctx.tau(jo, jo)?;
    Ok((ctx.compose(&full_meet, &tjj)?, ctx.compose(&full_join, &tjj)?))
}

/// A target for the freeness check: an interval `H` with a map `xi: I -> H`.
pub struct FreenessTarget<'a, O, M> {
    pub name: String,
    pub h: &'a Interval<O, M>,
    pub xi: M,
}

/// Checkable parts of "J is the free commutative Hopf interval on I".
pub fn check_j_hopf<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    fj: &FreeInvertible<C::Obj, C::Mor>,
    probes: &Probes<C::Obj, C::Mor>,
    targets: &[FreenessTarget<'_, C::Obj, C::Mor>],
) -> CheckReport {
    let ctx = kit.ctx;
    let mut r = CheckReport::new("free-hopf-interval");
    let j = &fj.j;
    let jk = Kit::new(ctx, j);
    r.absorb("cocategory", check_cocategory(ctx, &j.cocat));
    match &j.sigma {
        Some(s) => r.absorb("cogroupoid", check_cogroupoid(ctx, &j.cocat, s)),
        None => r.error("cogroupoid", &Error::Unsupported("J has no coinverse".into())),
    }
    r.absorb("representable", check_representable(&jk, probes));
    r.property(
        "i-equivalence",
        search_i_equivalence(&jk),
        || json!({ "interval": j.name }),
    );

    let comonoid = match comonoid_of(&jk) {
        Ok((g, rep)) => {
            r.absorb("comonoid", rep);
            Some(g)
        }
        Err(e) => {
            r.error("comonoid", &e);
            None
        }
    };
    let (Some(g), Some(meet), Some(join)) = (comonoid, j.meet.clone(), j.join.clone()) else {
        r.error("hopf", &Error::MissingLattice);
        return r;
    };
    let c = &j.cocat;
    for (name, mul, unit) in [("meet", &meet, &c.top), ("join", &join, &c.bot)] {
        let m = Monoid {
            obj: c.c1.clone(),
            unit: unit.clone(),
            mul: mul.clone(),
        };
        r.absorb(&format!("hopf/{name}"), check_hopf(ctx, &m, &g));
    }

    // U + U -> J and i_J are comonoid and monoid morphisms.
    let ends = (|| -> Result<_> {
        let uu = coproduct_interval(ctx)?;
        let uk = Kit::new(ctx, &uu);
        let (gu, _) = comonoid_of(&uk)?;
        let cp = ctx.coproduct(&c.c0, &c.c0)?;
        let m = ctx.copair(&cp, &c.bot, &c.top)?;
        Ok((uu, gu, m))
    })();
    match ends {
        Ok((uu, gu, m)) => {
            check_comonoid_hom(ctx, &m, &gu, &g, &mut r, "endpoints/comonoid");
            r.equation(ctx, "endpoints/meet", || {
                Ok((
                    ctx.compose(&m, uu.meet.as_ref().unwrap())?,
                    ctx.compose(&meet, &ctx.tensor_mor(&m, &m)?)?,
                ))
            });
            r.equation(ctx, "endpoints/top", || {
                Ok((ctx.compose(&m, &uu.cocat.top)?, c.top.clone()))
            });
        }
        Err(e) => r.error("endpoints", &e),
    }
    match unit_comonoid(ctx) {
        Ok(gu) => check_comonoid_hom(ctx, &c.i, &g, &gu, &mut r, "counit/comonoid"),
        Err(e) => r.error("counit/comonoid", &e),
    }
    r.equation(ctx, "counit/meet", || {
        let u = &c.c0;
        Ok((
            ctx.compose(&c.i, &meet)?,
            ctx.compose(&ctx.lambda(u)?, &ctx.tensor_mor(&c.i, &c.i)?)?,
        ))
    });
    r.equation(ctx, "counit/top", || Ok((ctx.compose(&c.i, &c.top)?, ctx.id(&c.c0))));

    for t in targets {
        check_freeness(kit, fj, t, &mut r);
    }
    r
}

/// The map `J -> H` induced by `xi: I -> H` into an invertible interval:
/// `[xi, sigma_H . xi]` on `K`, descended through the quotient.
pub fn extend_to_j<C: MonoidalContext + ?Sized>(
    ctx: &C,
    fj: &FreeInvertible<C::Obj, C::Mor>,
    xi: &C::Mor,
    sigma_h: &C::Mor,
) -> Result<C::Mor> {
    let on_k = ctx.factor(&fj.k, xi, &ctx.compose(sigma_h, xi)?)?;
    ctx.lift_through(&fj.quotient, &on_k)?
        .ok_or_else(|| Error::NoFactorization("the induced map does not descend to J".into()))
}

fn check_freeness<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    fj: &FreeInvertible<C::Obj, C::Mor>,
    t: &FreenessTarget<'_, C::Obj, C::Mor>,
    r: &mut CheckReport,
) {
    let ctx = kit.ctx;
    let prefix = format!("freeness/{}", t.name);
    let Some(sigma_h) = &t.h.sigma else {
        r.push(
            prefix,
            Status::Pass,
            Some("refused: the target has no coinverse, so the extension is not defined".into()),
            None,
        );
        return;
    };
    let xb = match extend_to_j(ctx, fj, &t.xi, sigma_h) {
        Ok(x) => x,
        Err(e) => {
            r.error(format!("{prefix}/extension"), &e);
            return;
        }
    };
    let (j, h) = (&fj.j.cocat, &t.h.cocat);
    let sigma_j = fj.j.sigma.as_ref().expect("J carries sigma");
    r.equation(ctx, format!("{prefix}/extends"), || {
        Ok((ctx.compose(&xb, &fj.iota)?, t.xi.clone()))
    });
    r.equation(ctx, format!("{prefix}/bot"), || {
        Ok((ctx.compose(&xb, &j.bot)?, h.bot.clone()))
    });
    r.equation(ctx, format!("{prefix}/top"), || {
        Ok((ctx.compose(&xb, &j.top)?, h.top.clone()))
    });
    r.equation(ctx, format!("{prefix}/counit"), || {
        Ok((ctx.compose(&h.i, &xb)?, j.i.clone()))
    });
    r.equation(ctx, format!("{prefix}/sigma"), || {
        Ok((ctx.compose(&xb, sigma_j)?, ctx.compose(sigma_h, &xb)?))
    });
    r.set_data(&format!("{prefix}/map"), ctx.describe(&xb));
    match ctx.try_inverse(&xb) {
        Ok(inv) => r.set_data(&format!("{prefix}/isomorphism"), json!(inv.is_some())),
        Err(e) => r.error(format!("{prefix}/isomorphism"), &e),
    }
}

/// Whether `f: I -> I'` is an isomorphism of intervals: invertible and
/// compatible with endpoints, counit, cocomposition and whichever of
/// `sigma`, meet and join both sides carry.
pub fn check_interval_isomorphism<C: MonoidalContext + ?Sized>(
    ctx: &C,
    f: &C::Mor,
    from: &Interval<C::Obj, C::Mor>,
    to: &Interval<C::Obj, C::Mor>,
) -> CheckReport {
    let mut r = CheckReport::new("interval-isomorphism");
    let (a, b) = (&from.cocat, &to.cocat);
    r.property(
        "invertible",
        ctx.try_inverse(f).map(|k| k.is_some()),
        || json!({ "map": ctx.describe(f) }),
    );
    r.equation(ctx, "bot", || Ok((ctx.compose(f, &a.bot)?, b.bot.clone())));
    r.equation(ctx, "top", || Ok((ctx.compose(f, &a.top)?, b.top.clone())));
    r.equation(ctx, "counit", || Ok((ctx.compose(&b.i, f)?, a.i.clone())));
    r.equation(ctx, "star", || {
        let from_po = glue_or_err(ctx, &a.top, &a.bot, &a.down, &a.up, "source c2")?;
        let f2 = from_po.copair(ctx, &ctx.compose(&b.down, f)?, &ctx.compose(&b.up, f)?)?;
        Ok((ctx.compose(&f2, &a.star)?, ctx.compose(&b.star, f)?))
    });
    if let (Some(sa), Some(sb)) = (&from.sigma, &to.sigma) {
        r.equation(ctx, "sigma", || Ok((ctx.compose(f, sa)?, ctx.compose(sb, f)?)));
    }
    for (name, x, y) in [("meet", &from.meet, &to.meet), ("join", &from.join, &to.join)] {
        if let (Some(x), Some(y)) = (x, y) {
            r.equation(ctx, name, || {
                Ok((ctx.compose(f, x)?, ctx.compose(y, &ctx.tensor_mor(f, f)?)?))
            });
        }
    }
    r
}

/// Cells in each `E(A, B)` are all vertically invertible exactly when the
/// interval has a coinverse; both sides are decided by search.
pub fn check_groupoid_homs<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>, pairs: &[(C::Obj, C::Obj)]) -> CheckReport {
    let mut r = CheckReport::new("groupoid-homs");
    let coinverse = search_coinverse(kit);
    let mut all = Ok(true);
    for (a, b) in pairs {
        let here = (|| -> Result<bool> {
            for cell in kit.all_cells(a, b)? {
                if kit.find_inverse(&cell)?.is_none() {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        match &here {
            Ok(v) => {
                if let Ok(acc) = &mut all {
                    *acc &= *v;
                }
            }
            Err(e) => all = Err(e.clone()),
        }
    }
    match (coinverse, all) {
        (Ok(s), Ok(g)) => {
            r.set_data("coinverse", json!(s));
            r.set_data("all-cells-invertible", json!(g));
            if s == g {
                r.pass("coinverse iff invertible cells");
            } else {
                r.fail(
                    "coinverse iff invertible cells",
                    "the two sides disagree",
                    json!({ "coinverse": s, "all-cells-invertible": g }),
                );
            }
        }
        (Err(e), _) | (_, Err(e)) => r.error("coinverse iff invertible cells", &e),
    }
    r
}
