use super::context::{ContextExt, MonoidalContext};
use super::structures::{Cocategory, Interval};
use crate::error::{Error, Result};

/// The discrete cocategory on the unit: every structure map is the
/// identity, and meet and join are both `lambda`.
pub fn discrete_interval<C: MonoidalContext + ?Sized>(ctx: &C) -> Result<Interval<C::Obj, C::Mor>> {
    let u = ctx.unit();
    let id = ctx.id(&u);
    let lam = ctx.lambda(&u)?;
    Ok(Interval::new(
        format!("discrete({})", ctx.name()),
        Cocategory {
            c0: u.clone(),
            c1: u.clone(),
            c2: u,
            bot: id.clone(),
            top: id.clone(),
            i: id.clone(),
            down: id.clone(),
            up: id.clone(),
            star: id.clone(),
        },
    )
    .with_sigma(id)
    .with_lattice(lam.clone(), lam))
}

/// The interval `U + U` with its two injections as endpoints. Meet and
/// join are read off through the isomorphism
/// `(U+U) * (U+U) = (U+U) + (U+U)`.
pub fn coproduct_interval<C: MonoidalContext + ?Sized>(ctx: &C) -> Result<Interval<C::Obj, C::Mor>> {
    let u = ctx.unit();
    let cp = ctx.coproduct(&u, &u)?;
    let l = cp.obj.clone();
    let (bot, top) = (cp.inl.clone(), cp.inr.clone());
    let i = ctx.copair(&cp, &ctx.id(&u), &ctx.id(&u))?;
    let po = ctx.pushout(&top, &bot)?;
    let (down, up) = (po.in_a.clone(), po.in_b.clone());
    let star = ctx.copair(&cp, &ctx.compose(&down, &bot)?, &ctx.compose(&up, &top)?)?;
    let sigma = ctx.copair(&cp, &top, &bot)?;

    // The corner (a, b) of (U+U)*(U+U) is (a * b) . lambda^-1.
    let corner =
        |a: &C::Mor, b: &C::Mor| -> Result<C::Mor> { ctx.compose(&ctx.tensor_mor(a, b)?, &ctx.lambda_inv(&u)?) };
    let outer = ctx.coproduct(&l, &l)?;
    let four = |bb: &C::Mor, bt: &C::Mor, tb: &C::Mor, tt: &C::Mor| -> Result<C::Mor> {
        ctx.copair(&outer, &ctx.copair(&cp, bb, bt)?, &ctx.copair(&cp, tb, tt)?)
    };
    let d = four(
        &corner(&bot, &bot)?,
        &corner(&bot, &top)?,
        &corner(&top, &bot)?,
        &corner(&top, &top)?,
    )?;
    let d_inv = ctx
        .try_inverse(&d)?
        .ok_or_else(|| Error::NoFactorization("(U+U)*(U+U) is not a coproduct of four units".into()))?;
    let meet = ctx.compose(&four(&bot, &bot, &bot, &top)?, &d_inv)?;
    let join = ctx.compose(&four(&bot, &top, &top, &top)?, &d_inv)?;

    Ok(Interval::new(
        format!("coproduct({})", ctx.name()),
        Cocategory {
            c0: u,
            c1: l,
            c2: po.obj,
            bot,
            top,
            i,
            down,
            up,
            star,
        },
    )
    .with_sigma(sigma)
    .with_lattice(meet, join))
}
