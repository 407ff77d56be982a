//! The categories `2` and `I` and their intervals, and the translation
//! between cells over `2` and natural transformations.

use super::category::{Cat, Path};
use super::constructions::{thin_functor, ProdGen, Shape};
use super::context::FinCatContext;
use super::functor::{Functor, NatTrans};
use crate::cocat::{Cocategory, Interval, MonoidalContext};
use crate::error::{Error, Result};

/// `2`: one arrow `u: bot -> top`.
pub fn two(ctx: &FinCatContext) -> Result<Cat> {
    ctx.category("2", &["bot", "top"], &[("u", "bot", "top")], &[])
}

/// `I`: the free groupoid on `2`, with `d` inverse to `u`.
pub fn iso(ctx: &FinCatContext) -> Result<Cat> {
    ctx.category(
        "I",
        &["bot", "top"],
        &[("u", "bot", "top"), ("d", "top", "bot")],
        &[("u;d", "id_bot"), ("d;u", "id_top")],
    )
}

fn point(ctx: &FinCatContext, c: &Cat, x: usize) -> Result<Functor> {
    Functor::typed(ctx.unit(), c.clone(), vec![x], vec![])
}

/// Cocategory structure on a two-object category whose generators run
/// between `bot` (0) and `top` (1): `star` sends each generator through
/// both copies in order.
fn cocategory(ctx: &FinCatContext, c: &Cat) -> Result<Cocategory<Cat, Functor>> {
    let bot = point(ctx, c, 0)?;
    let top = point(ctx, c, 1)?;
    let i = Functor::typed(
        c.clone(),
        ctx.unit(),
        vec![0; c.objects.len()],
        vec![Path::id(0); c.generators.len()],
    )?;
    let po = ctx.pushout(&top, &bot)?;
    let p = &po.obj;
    let (down, up) = (&po.in_a, &po.in_b);
    let mut gen_map = Vec::new();
    for (g, gen) in c.generators.iter().enumerate() {
        let one = c.gen_path(g);
        let (first, second) = if gen.src == 0 { (down, up) } else { (up, down) };
        gen_map.push(p.then(&first.apply(&one)?, &second.apply(&one)?)?);
    }
    let star = Functor::new(c.clone(), p.clone(), vec![down.obj_map[0], up.obj_map[1]], gen_map)?;
    Ok(Cocategory {
        c0: ctx.unit(),
        c1: c.clone(),
        c2: p.clone(),
        bot,
        top,
        i,
        down: down.clone(),
        up: up.clone(),
        star,
    })
}

/// Meet and join on a thin two-object category, read off objects.
fn lattice(ctx: &FinCatContext, c: &Cat) -> Result<(Functor, Functor)> {
    let cc = ctx.tensor(c, c)?;
    let (s, _, _) = Shape::of_product(&cc)?;
    let objs = |f: fn(usize, usize) -> usize| -> Vec<usize> {
        (0..cc.objects.len())
            .map(|k| {
                let (x, y) = s.split_obj(k);
                f(x, y)
            })
            .collect()
    };
    Ok((
        thin_functor(&cc, c, objs(|x, y| x & y))?,
        thin_functor(&cc, c, objs(|x, y| x | y))?,
    ))
}

/// `2` with meet and join; it has no coinverse.
pub fn interval_two(ctx: &FinCatContext) -> Result<Interval<Cat, Functor>> {
    let c = two(ctx)?;
    let (meet, join) = lattice(ctx, &c)?;
    Ok(Interval::new("cat-two", cocategory(ctx, &c)?).with_lattice(meet, join))
}

/// `I` with the swap as coinverse, and meet and join.
pub fn interval_iso(ctx: &FinCatContext) -> Result<Interval<Cat, Functor>> {
    let c = iso(ctx)?;
    let (meet, join) = lattice(ctx, &c)?;
    let sigma = thin_functor(&c, &c, vec![1, 0])?;
    Ok(Interval::new("cat-iso", cocategory(ctx, &c)?)
        .with_sigma(sigma)
        .with_lattice(meet, join))
}

fn interval_generator(iv: &Interval<Cat, Functor>) -> Result<usize> {
    let c = &iv.cocat.c1;
    match (c.objects.len(), c.generators.as_slice()) {
        (2, [g]) if g.src == 0 && g.tgt == 1 => Ok(0),
        _ => Err(Error::Unsupported(format!("{} is not the arrow category 2", c.name))),
    }
}

/// The natural transformation a cell `A * 2 -> B` encodes.
pub fn nat_trans_of_cell(ctx: &FinCatContext, iv: &Interval<Cat, Functor>, cell: &Functor) -> Result<NatTrans> {
    let u = interval_generator(iv)?;
    let (s, a, _) = Shape::of_product(&cell.src)?;
    let restrict = |t: &Functor| -> Result<Functor> {
        let at = ctx.tensor_mor(&ctx.id(&a), t)?;
        cell.after(&at)?.after(&ctx.rho_inv(&a)?)
    };
    let comps = (0..a.objects.len())
        .map(|x| cell.gen_map[s.gen(ProdGen::Right(x, u))].clone())
        .collect();
    NatTrans::new(restrict(&iv.cocat.bot)?, restrict(&iv.cocat.top)?, comps)
}

/// The cell `A * 2 -> B` of a natural transformation.
pub fn cell_of_nat_trans(ctx: &FinCatContext, iv: &Interval<Cat, Functor>, t: &NatTrans) -> Result<Functor> {
    let u = interval_generator(iv)?;
    let a = &t.src.src;
    let a2 = ctx.tensor(a, &iv.cocat.c1)?;
    let (s, _, _) = Shape::of_product(&a2)?;
    let obj_map = (0..a2.objects.len())
        .map(|k| {
            let (x, e) = s.split_obj(k);
            if e == 0 {
                t.src.obj_map[x]
            } else {
                t.tgt.obj_map[x]
            }
        })
        .collect();
    let gen_map = (0..a2.generators.len())
        .map(|k| match s.split_gen(k) {
            ProdGen::Left(g, 0) => t.src.gen_map[g].clone(),
            ProdGen::Left(g, _) => t.tgt.gen_map[g].clone(),
            ProdGen::Right(x, h) => {
                debug_assert_eq!(h, u);
                t.components[x].clone()
            }
        })
        .collect();
    Functor::new(a2, t.src.tgt.clone(), obj_map, gen_map)
}
