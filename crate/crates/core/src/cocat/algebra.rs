//! Monoids, comonoids, Hopf objects and lattices in a symmetric monoidal
//! context, plus the comonoid every interval carries.

use super::axioms::glue_or_err;
use super::cells::Kit;
use super::context::{ContextExt, MonoidalContext};
use super::report::CheckReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Monoid<O, M> {
    pub obj: O,
    /// `U -> M`
    pub unit: M,
    /// `M * M -> M`
    pub mul: M,
}

#[derive(Debug, Clone)]
pub struct Comonoid<O, M> {
    pub obj: O,
    /// `G -> U`
    pub counit: M,
    /// `G -> G * G`
    pub comul: M,
}

/// `(Delta, i)` for an interval, with the comonoid laws checked.
pub fn comonoid_of<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Result<(Comonoid<C::Obj, C::Mor>, CheckReport)> {
    let g = Comonoid {
        obj: kit.i().clone(),
        counit: kit.iv.cocat.i.clone(),
        comul: kit.delta()?,
    };
    let r = check_comonoid(kit.ctx, &g);
    Ok((g, r))
}

pub fn check_monoid<C: MonoidalContext + ?Sized>(ctx: &C, m: &Monoid<C::Obj, C::Mor>) -> CheckReport {
    let mut r = CheckReport::new("monoid");
    let x = &m.obj;
    r.equation(ctx, "unit/right", || {
        Ok((
            ctx.chain(&[&ctx.rho_inv(x)?, &ctx.left_whisker(x, &m.unit)?, &m.mul])?,
            ctx.id(x),
        ))
    });
    r.equation(ctx, "unit/left", || {
        Ok((
            ctx.chain(&[&ctx.lambda_inv(x)?, &ctx.right_whisker(&m.unit, x)?, &m.mul])?,
            ctx.id(x),
        ))
    });
    r.equation(ctx, "associativity", || {
        Ok((
            ctx.chain(&[&ctx.left_whisker(x, &m.mul)?, &m.mul])?,
            ctx.chain(&[&ctx.alpha(x, x, x)?, &ctx.right_whisker(&m.mul, x)?, &m.mul])?,
        ))
    });
    r
}

pub fn check_comonoid<C: MonoidalContext + ?Sized>(ctx: &C, g: &Comonoid<C::Obj, C::Mor>) -> CheckReport {
    let mut r = CheckReport::new("comonoid");
    let x = &g.obj;
    r.equation(ctx, "counit/left", || {
        Ok((
            ctx.chain(&[&g.comul, &ctx.right_whisker(&g.counit, x)?, &ctx.lambda(x)?])?,
            ctx.id(x),
        ))
    });
    r.equation(ctx, "counit/right", || {
        Ok((
            ctx.chain(&[&g.comul, &ctx.left_whisker(x, &g.counit)?, &ctx.rho(x)?])?,
            ctx.id(x),
        ))
    });
    r.equation(ctx, "coassociativity", || {
        Ok((
            ctx.chain(&[&g.comul, &ctx.right_whisker(&g.comul, x)?, &ctx.alpha_inv(x, x, x)?])?,
            ctx.chain(&[&g.comul, &ctx.left_whisker(x, &g.comul)?])?,
        ))
    });
    r
}

/// `(a*b)*(c*d) -> (a*c)*(b*d)`
pub fn interchange<C: MonoidalContext + ?Sized>(
    ctx: &C,
    a: &C::Obj,
    b: &C::Obj,
    c: &C::Obj,
    d: &C::Obj,
) -> Result<C::Mor> {
    let cd = ctx.tensor(c, d)?;
    let bd = ctx.tensor(b, d)?;
    ctx.chain(&[
        &ctx.alpha_inv(a, b, &cd)?,
        &ctx.left_whisker(a, &ctx.alpha(b, c, d)?)?,
        &ctx.left_whisker(a, &ctx.right_whisker(&ctx.tau(b, c)?, d)?)?,
        &ctx.left_whisker(a, &ctx.alpha_inv(c, b, d)?)?,
        &ctx.alpha(a, c, &bd)?,
    ])
}

/// The comonoid on `G * G` interleaving two copies of `Delta`.
pub fn tensor_comonoid<C: MonoidalContext + ?Sized>(
    ctx: &C,
    g: &Comonoid<C::Obj, C::Mor>,
) -> Result<Comonoid<C::Obj, C::Mor>> {
    let x = &g.obj;
    let xx = ctx.tensor(x, x)?;
    let comul = ctx.compose(&interchange(ctx, x, x, x, x)?, &ctx.tensor_mor(&g.comul, &g.comul)?)?;
    let u = ctx.unit();
    let counit = ctx.compose(&ctx.lambda(&u)?, &ctx.tensor_mor(&g.counit, &g.counit)?)?;
    Ok(Comonoid { obj: xx, counit, comul })
}

/// Comonoid homomorphism conditions for `f: G -> H`.
pub fn check_comonoid_hom<C: MonoidalContext + ?Sized>(
    ctx: &C,
    f: &C::Mor,
    g: &Comonoid<C::Obj, C::Mor>,
    h: &Comonoid<C::Obj, C::Mor>,
    r: &mut CheckReport,
    prefix: &str,
) {
    r.equation(ctx, format!("{prefix}/comultiplication"), || {
        Ok((
            ctx.compose(&h.comul, f)?,
            ctx.compose(&ctx.tensor_mor(f, f)?, &g.comul)?,
        ))
    });
    r.equation(ctx, format!("{prefix}/counit"), || {
        Ok((ctx.compose(&h.counit, f)?, g.counit.clone()))
    });
}

/// The trivial comonoid on the unit.
pub fn unit_comonoid<C: MonoidalContext + ?Sized>(ctx: &C) -> Result<Comonoid<C::Obj, C::Mor>> {
    let u = ctx.unit();
    Ok(Comonoid {
        comul: ctx.lambda_inv(&u)?,
        counit: ctx.id(&u),
        obj: u,
    })
}

/// A commutative Hopf object: monoid and comonoid laws, commutativity, and
/// both monoid structure maps comonoid homomorphisms.
pub fn check_hopf<C: MonoidalContext + ?Sized>(
    ctx: &C,
    m: &Monoid<C::Obj, C::Mor>,
    g: &Comonoid<C::Obj, C::Mor>,
) -> CheckReport {
    let mut r = CheckReport::new("hopf");
    if m.obj != g.obj {
        r.error(
            "typing",
            &Error::TypeMismatch("monoid and comonoid on different objects".into()),
        );
        return r;
    }
    r.absorb("monoid", check_monoid(ctx, m));
    r.equation(ctx, "monoid/commutativity", || {
        Ok((ctx.compose(&m.mul, &ctx.tau(&m.obj, &m.obj)?)?, m.mul.clone()))
    });
    r.absorb("comonoid", check_comonoid(ctx, g));
    match tensor_comonoid(ctx, g) {
        Ok(gg) => check_comonoid_hom(ctx, &m.mul, &gg, g, &mut r, "mul-hom"),
        Err(e) => r.error("mul-hom", &e),
    }
    match unit_comonoid(ctx) {
        Ok(u) => check_comonoid_hom(ctx, &m.unit, &u, g, &mut r, "unit-hom"),
        Err(e) => r.error("unit-hom", &e),
    }
    r
}

fn lattice_ops<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> Result<(C::Mor, C::Mor)> {
    match (&kit.iv.meet, &kit.iv.join) {
        (Some(m), Some(j)) => Ok((m.clone(), j.clone())),
        _ => Err(Error::MissingLattice),
    }
}

/// The four boundary conditions characterizing meet and join:
/// `meet` and `meet . tau` are cells `bot . i => 1`, `join` and
/// `join . tau` are cells `1 => top . i`.
pub fn check_meet_join_boundaries<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>, r: &mut CheckReport) {
    let ctx = kit.ctx;
    let (meet, join) = match lattice_ops(kit) {
        Ok(x) => x,
        Err(e) => {
            r.error("boundary-conditions", &e);
            return;
        }
    };
    let i = kit.i();
    let c = &kit.iv.cocat;
    let ends = || -> Result<(C::Mor, C::Mor, C::Mor)> {
        Ok((ctx.id(i), ctx.compose(&c.bot, &c.i)?, ctx.compose(&c.top, &c.i)?))
    };
    for (name, op, twist) in [
        ("meet", &meet, false),
        ("meet.tau", &meet, true),
        ("join", &join, false),
        ("join.tau", &join, true),
    ] {
        let is_meet = name.starts_with("meet");
        let cell = || -> Result<_> {
            let cell = if twist {
                ctx.compose(op, &ctx.tau(i, i)?)?
            } else {
                op.clone()
            };
            let h = kit.homotopy(i, &cell)?;
            let (one, low, high) = ends()?;
            Ok(if is_meet { (h, low, one) } else { (h, one, high) })
        };
        r.equation(ctx, format!("boundary-conditions/{name}/source"), || {
            let (h, src, _) = cell()?;
            Ok((h.src, src))
        });
        r.equation(ctx, format!("boundary-conditions/{name}/target"), || {
            let (h, _, tgt) = cell()?;
            Ok((h.tgt, tgt))
        });
    }
}

/// Unital distributive lattice laws for the interval's meet and join with
/// the interval's comonoid, and the four boundary conditions.
pub fn check_lattice<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>) -> CheckReport {
    let mut r = CheckReport::new("lattice");
    let ctx = kit.ctx;
    let (meet, join) = match lattice_ops(kit) {
        Ok(x) => x,
        Err(e) => {
            r.error("lattice-data", &e);
            return r;
        }
    };
    let delta = match kit.delta() {
        Ok(d) => d,
        Err(e) => {
            r.error("comultiplication", &e);
            return r;
        }
    };
    let l = kit.i();
    let c = &kit.iv.cocat;
    let eps = &c.i;
    let ops = [("meet", &meet, &join), ("join", &join, &meet)];

    for (name, op, _) in ops {
        r.equation(ctx, format!("associativity/{name}"), || {
            Ok((
                ctx.chain(&[&ctx.left_whisker(l, op)?, op])?,
                ctx.chain(&[&ctx.alpha(l, l, l)?, &ctx.right_whisker(op, l)?, op])?,
            ))
        });
        r.equation(ctx, format!("commutativity/{name}"), || {
            Ok((ctx.compose(op, &ctx.tau(l, l)?)?, op.clone()))
        });
        r.equation(ctx, format!("idempotency/{name}"), || {
            Ok((ctx.compose(op, &delta)?, ctx.id(l)))
        });
    }
    // op . Delta = [op . (bot * I) . lambda^-1, op . (I * top) . rho^-1] . star
    //            = [1, top . i] . star (join), [bot . i, 1] . star (meet)
    //            = 1
    let c2 = glue_or_err(ctx, &c.top, &c.bot, &c.down, &c.up, "interval c2");
    for (name, op) in [("meet", &meet), ("join", &join)] {
        let halves = || -> Result<(C::Mor, C::Mor)> {
            Ok((
                ctx.chain(&[&ctx.lambda_inv(l)?, &ctx.right_whisker(&c.bot, l)?, op])?,
                ctx.chain(&[&ctx.rho_inv(l)?, &ctx.left_whisker(l, &c.top)?, op])?,
            ))
        };
        let simplified = || -> Result<(C::Mor, C::Mor)> {
            if name == "meet" {
                Ok((ctx.compose(&c.bot, eps)?, ctx.id(l)))
            } else {
                Ok((ctx.id(l), ctx.compose(&c.top, eps)?))
            }
        };
        let glued = || c2.clone();
        r.equation(ctx, format!("idempotency/{name}/split"), || {
            let (h, k) = halves()?;
            Ok((
                ctx.compose(op, &delta)?,
                ctx.compose(&glued()?.copair(ctx, &h, &k)?, &c.star)?,
            ))
        });
        r.equation(ctx, format!("idempotency/{name}/units"), || {
            let g = glued()?;
            let (h, k) = halves()?;
            let (h2, k2) = simplified()?;
            Ok((g.copair(ctx, &h, &k)?, g.copair(ctx, &h2, &k2)?))
        });
        r.equation(ctx, format!("idempotency/{name}/counit"), || {
            let (h2, k2) = simplified()?;
            Ok((ctx.compose(&glued()?.copair(ctx, &h2, &k2)?, &c.star)?, ctx.id(l)))
        });
    }
    // x <> (x <club> y) = x
    for (name, diamond, club) in ops {
        r.equation(ctx, format!("absorption/{name}"), || {
            Ok((
                ctx.chain(&[
                    &ctx.right_whisker(&delta, l)?,
                    &ctx.alpha_inv(l, l, l)?,
                    &ctx.left_whisker(l, club)?,
                    diamond,
                ])?,
                ctx.compose(&ctx.rho(l)?, &ctx.left_whisker(l, eps)?)?,
            ))
        });
    }
    // units: top for meet, bot for join
    for (name, op, unit) in [("meet", &meet, &c.top), ("join", &join, &c.bot)] {
        r.equation(ctx, format!("unit/{name}/left"), || {
            Ok((
                ctx.chain(&[&ctx.lambda_inv(l)?, &ctx.right_whisker(unit, l)?, op])?,
                ctx.id(l),
            ))
        });
        r.equation(ctx, format!("unit/{name}/right"), || {
            Ok((
                ctx.chain(&[&ctx.rho_inv(l)?, &ctx.left_whisker(l, unit)?, op])?,
                ctx.id(l),
            ))
        });
    }
    // absorbing elements: bot for meet, top for join
    for (name, op, t) in [("meet", &meet, &c.bot), ("join", &join, &c.top)] {
        let te = ctx.compose(t, eps);
        r.equation(ctx, format!("absorbing/{name}/left"), || {
            Ok((
                ctx.compose(op, &ctx.right_whisker(t, l)?)?,
                ctx.compose(&te.clone()?, &ctx.lambda(l)?)?,
            ))
        });
        r.equation(ctx, format!("absorbing/{name}/right"), || {
            Ok((
                ctx.compose(op, &ctx.left_whisker(l, t)?)?,
                ctx.compose(&te.clone()?, &ctx.rho(l)?)?,
            ))
        });
    }
    // x <> (y <club> z) = (x <> y) <club> (x <> z)
    for (name, diamond, club) in ops {
        r.equation(ctx, format!("distributivity/{name}"), || {
            let ll = ctx.tensor(l, l)?;
            let lhs = ctx.compose(diamond, &ctx.left_whisker(l, club)?)?;
            let rhs = ctx.chain(&[
                &ctx.right_whisker(&delta, &ll)?,
                &ctx.alpha(&ll, l, l)?,
                &ctx.right_whisker(&ctx.alpha_inv(l, l, l)?, l)?,
                &ctx.right_whisker(&ctx.tau(l, &ll)?, l)?,
                &ctx.alpha_inv(&ll, l, l)?,
                &ctx.tensor_mor(diamond, diamond)?,
                club,
            ])?;
            Ok((lhs, rhs))
        });
    }
    check_meet_join_boundaries(kit, &mut r);
    r
}

/// Bounded evidence that meet and join are unique: every candidate
/// operation `I * I -> I` meeting the meet (resp. join) boundary conditions
/// equals the interval's meet (resp. join). Candidates default to every
/// map the context enumerates.
pub fn check_lattice_uniqueness<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    candidates: Option<Vec<C::Mor>>,
) -> CheckReport {
    let mut r = CheckReport::new("lattice-uniqueness");
    let ctx = kit.ctx;
    let outcome = (|| -> Result<(usize, Vec<(&'static str, C::Mor)>)> {
        let (meet, join) = lattice_ops(kit)?;
        let i = kit.i();
        let c = &kit.iv.cocat;
        let ii = ctx.tensor(i, i)?;
        let cands = match candidates {
            Some(c) => c,
            None => ctx.enumerate_hom(&ii, i)?,
        };
        let one = ctx.id(i);
        let low = ctx.compose(&c.bot, &c.i)?;
        let high = ctx.compose(&c.top, &c.i)?;
        let tw = ctx.tau(i, i)?;
        let mut offenders = Vec::new();
        for op in &cands {
            let plain = kit.homotopy(i, op)?;
            let twisted = kit.homotopy(i, &ctx.compose(op, &tw)?)?;
            let spans = |h: &super::structures::Homotopy<C::Mor>, s: &C::Mor, t: &C::Mor| -> Result<bool> {
                Ok(ctx.mor_eq(&h.src, s)? && ctx.mor_eq(&h.tgt, t)?)
            };
            if spans(&plain, &low, &one)? && spans(&twisted, &low, &one)? && !ctx.mor_eq(op, &meet)? {
                offenders.push(("meet", op.clone()));
            }
            if spans(&plain, &one, &high)? && spans(&twisted, &one, &high)? && !ctx.mor_eq(op, &join)? {
                offenders.push(("join", op.clone()));
            }
        }
        Ok((cands.len(), offenders))
    })();
    match outcome {
        Ok((n, offenders)) => {
            r.set_data("candidates", serde_json::json!(n));
            if let Some((which, op)) = offenders.first() {
                r.fail(
                    "uniqueness",
                    format!("another operation satisfies the {which} boundary conditions"),
                    serde_json::json!({ "operation": which, "candidate": ctx.describe(op) }),
                );
            } else {
                r.pass("uniqueness");
            }
            r.note("bounded evidence: only the listed or enumerated candidates are compared");
        }
        Err(e) => r.error("uniqueness", &e),
    }
    r
}
