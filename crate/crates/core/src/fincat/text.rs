//! The line-based presentation format.
//!
//! ```text
//! name two
//! obj bot
//! obj top
//! gen u: bot -> top
//! rel u;d = id_bot
//! ```
//!
//! Words compose left to right with `;`; `id_X` is the identity at `X`.
//! An interval on the presented category is declared with `bot X` and
//! `top Y`, plus optional structure maps, each given object by object and
//! generator by generator:
//!
//! ```text
//! sigma obj bot -> top
//! sigma gen u -> d
//! star gen u -> down.u;up.u
//! meet obj (bot,top) -> bot
//! meet gen (u,top) -> u
//! ```
//!
//! `meet` and `join` are written on the product `I * I`, whose objects and
//! generators are named `(x,y)`, `(g,y)` and `(x,h)`. `star` targets the
//! gluing of two copies of `I`, addressed as `down.` and `up.`. Without
//! `star` lines the unique cocomposition passing the axioms is used.

use std::sync::Arc;

use super::category::{Cat, Generator, Path, PresentedCategory};
use super::context::FinCatContext;
use super::functor::{enumerate_functors, Functor};
use crate::cocat::{check_cocategory, Cocategory, Interval, MonoidalContext, Pushout};
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct FinCatInput {
    pub category: Cat,
    pub interval: Option<Interval<Cat, Functor>>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses `f;g;h` or `id_X` in `c`.
pub fn parse_word(c: &PresentedCategory, text: &str) -> Result<Path> {
    let text = text.trim();
    if let Some(obj) = text.strip_prefix("id_") {
        let x = c
            .object(obj)
            .ok_or_else(|| Error::InvalidMorphism(format!("unknown object {obj} in {}", c.name)))?;
        return Ok(Path::id(x));
    }
    let gens = text
        .split(';')
        .map(|t| {
            let t = t.trim();
            c.generator(t)
                .ok_or_else(|| Error::InvalidMorphism(format!("unknown generator {t} in {}", c.name)))
        })
        .collect::<Result<Vec<_>>>()?;
    c.word(gens)
}

#[derive(Default)]
struct MapLines {
    objs: Vec<(usize, usize, String, String)>,
    gens: Vec<(usize, usize, String, String)>,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl Line<'_> {
    fn col(&self, needle: &str) -> usize {
        self.text.find(needle).map(|k| k + 1).unwrap_or(1)
    }
}

pub fn parse_fincat_input(text: &str, ctx: &FinCatContext) -> Result<FinCatInput> {
    let mut name = "input".to_string();
    let mut objects: Vec<String> = Vec::new();
    let mut generators: Vec<Generator> = Vec::new();
    let mut relations: Vec<(usize, usize, String, String)> = Vec::new();
    let (mut bot, mut top) = (None, None);
    let mut maps: [MapLines; 4] = Default::default();
    const MAPS: [&str; 4] = ["sigma", "star", "meet", "join"];

    for (k, raw) in text.lines().enumerate() {
        let line = Line { no: k + 1, text: raw };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        let at = line.col(rest);
        match kw {
            "name" => name = rest.to_string(),
            "obj" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(perr(line.no, at, "expected `obj NAME`"));
                }
                if objects.iter().any(|o| o == rest) {
                    return Err(perr(line.no, at, format!("duplicate object {rest}")));
                }
                objects.push(rest.to_string());
            }
            "gen" => {
                let (g, ty) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(line.no, at, "expected `gen f: A -> B`"))?;
                let (s, t) = ty
                    .split_once("->")
                    .ok_or_else(|| perr(line.no, line.col(ty), "expected `A -> B`"))?;
                let g = g.trim();
                if g.is_empty() || generators.iter().any(|x| x.name == g) {
                    return Err(perr(line.no, at, format!("bad or duplicate generator name `{g}`")));
                }
                let find = |o: &str| {
                    let o = o.trim();
                    objects
                        .iter()
                        .position(|x| x == o)
                        .ok_or_else(|| perr(line.no, line.col(o), format!("unknown object {o}")))
                };
                generators.push(Generator {
                    name: g.to_string(),
                    src: find(s)?,
                    tgt: find(t)?,
                });
            }
            "rel" => {
                let (a, b) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line.no, at, "expected `rel w1 = w2`"))?;
                relations.push((line.no, line.col(a.trim()), a.to_string(), b.to_string()));
            }
            "bot" | "top" => {
                let x = objects
                    .iter()
                    .position(|o| o == rest)
                    .ok_or_else(|| perr(line.no, at, format!("unknown object {rest}")))?;
                if kw == "bot" {
                    bot = Some(x);
                } else {
                    top = Some(x);
                }
            }
            m if MAPS.contains(&m) => {
                let slot = &mut maps[MAPS.iter().position(|x| *x == m).unwrap()];
                let (kind, assign) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let (l, r) = assign
                    .split_once("->")
                    .ok_or_else(|| perr(line.no, at, format!("expected `{m} obj|gen X -> Y`")))?;
                let entry = (line.no, line.col(l.trim()), l.trim().to_string(), r.trim().to_string());
                match kind {
                    "obj" => slot.objs.push(entry),
                    "gen" => slot.gens.push(entry),
                    _ => return Err(perr(line.no, at, "expected `obj` or `gen`")),
                }
            }
            _ => return Err(perr(line.no, 1, format!("unknown keyword `{kw}`"))),
        }
    }
    if objects.is_empty() {
        return Err(perr(1, 1, "presentation has no objects"));
    }

    let skeleton = PresentedCategory::new(name.clone(), objects.clone(), generators.clone(), vec![], ctx.limits)?;
    let mut rels = Vec::new();
    for (no, col, a, b) in &relations {
        let wrap = |e: Error| perr(*no, *col, e.to_string());
        let (pa, pb) = (
            parse_word(&skeleton, a).map_err(wrap)?,
            parse_word(&skeleton, b).map_err(wrap)?,
        );
        if pa.src != pb.src || pa.tgt != pb.tgt {
            return Err(perr(
                *no,
                *col,
                format!("relation {} = {} is not parallel", a.trim(), b.trim()),
            ));
        }
        rels.push((pa, pb));
    }
    let category: Cat = Arc::new(PresentedCategory::new(name, objects, generators, rels, ctx.limits)?);

    let interval = match (bot, top) {
        (None, None) => {
            if maps.iter().any(|m| !m.objs.is_empty() || !m.gens.is_empty()) {
                return Err(perr(1, 1, "structure maps given without `bot` and `top`"));
            }
            None
        }
        (Some(b), Some(t)) => Some(build_interval(ctx, &category, b, t, &maps)?),
        _ => return Err(perr(1, 1, "an interval needs both `bot` and `top`")),
    };
    Ok(FinCatInput { category, interval })
}

fn point(ctx: &FinCatContext, c: &Cat, x: usize) -> Result<Functor> {
    Functor::typed(ctx.unit(), c.clone(), vec![x], vec![])
}

/// Reads a map `src -> tgt` from its lines; `word` resolves a target word.
fn read_map(
    src: &Cat,
    tgt: &Cat,
    lines: &MapLines,
    what: &str,
    resolve_obj: impl Fn(&str) -> Option<usize>,
    word: impl Fn(&str) -> Result<Path>,
) -> Result<Functor> {
    let mut obj_map = vec![None; src.objects.len()];
    for (no, col, l, r) in &lines.objs {
        let x = src
            .object(l)
            .ok_or_else(|| perr(*no, *col, format!("{what}: unknown object {l}")))?;
        obj_map[x] = Some(resolve_obj(r).ok_or_else(|| perr(*no, *col, format!("{what}: unknown object {r}")))?);
    }
    let mut gen_map = vec![None; src.generators.len()];
    for (no, col, l, r) in &lines.gens {
        let g = src
            .generator(l)
            .ok_or_else(|| perr(*no, *col, format!("{what}: unknown generator {l}")))?;
        gen_map[g] = Some(word(r).map_err(|e| perr(*no, *col, format!("{what}: {e}")))?);
    }
    // Objects may be left implicit when a generator fixes them.
    for (g, img) in gen_map.iter().enumerate() {
        if let Some(p) = img {
            let gen = &src.generators[g];
            obj_map[gen.src].get_or_insert(p.src);
            obj_map[gen.tgt].get_or_insert(p.tgt);
        }
    }
    let obj_map = obj_map
        .into_iter()
        .enumerate()
        .map(|(x, o)| o.ok_or_else(|| perr(1, 1, format!("{what}: no image for object {}", src.objects[x]))))
        .collect::<Result<Vec<_>>>()?;
    let gen_map = gen_map
        .into_iter()
        .enumerate()
        .map(|(g, p)| {
            p.or_else(|| {
                let gen = &src.generators[g];
                (obj_map[gen.src] == obj_map[gen.tgt]).then(|| Path::id(obj_map[gen.src]))
            })
            .ok_or_else(|| {
                perr(
                    1,
                    1,
                    format!("{what}: no image for generator {}", src.generators[g].name),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Functor::new(src.clone(), tgt.clone(), obj_map, gen_map).map_err(|e| perr(1, 1, format!("{what}: {e}")))
}

fn build_interval(
    ctx: &FinCatContext,
    c: &Cat,
    b: usize,
    t: usize,
    maps: &[MapLines; 4],
) -> Result<Interval<Cat, Functor>> {
    let unit = ctx.unit();
    let bot = point(ctx, c, b)?;
    let top = point(ctx, c, t)?;
    let i = Functor::typed(
        c.clone(),
        unit.clone(),
        vec![0; c.objects.len()],
        vec![Path::id(0); c.generators.len()],
    )?;
    let po = ctx.pushout(&top, &bot)?;
    let star = if maps[1].objs.is_empty() && maps[1].gens.is_empty() {
        default_star(ctx, c, &bot, &top, &i, &po)?
    } else {
        let side = |tok: &str| -> Option<(&Functor, String)> {
            let (s, rest) = tok.trim().split_once('.')?;
            match s {
                "down" => Some((&po.in_a, rest.to_string())),
                "up" => Some((&po.in_b, rest.to_string())),
                _ => None,
            }
        };
        read_map(
            c,
            &po.obj,
            &maps[1],
            "star",
            |o| {
                let (f, name) = side(o)?;
                Some(f.obj_map[c.object(&name)?])
            },
            |w| {
                let mut path: Option<Path> = None;
                for tok in w.split(';') {
                    let (f, name) = side(tok)
                        .ok_or_else(|| Error::InvalidMorphism(format!("expected down.X or up.X, got {tok}")))?;
                    let p = f.apply(&parse_word(c, &name)?)?;
                    path = Some(match path {
                        None => p,
                        Some(q) => po.obj.then(&q, &p)?,
                    });
                }
                path.ok_or_else(|| Error::InvalidMorphism("empty word".into()))
            },
        )?
    };
    let mut iv = Interval::new(
        c.name.clone(),
        Cocategory {
            c0: unit,
            c1: c.clone(),
            c2: po.obj.clone(),
            bot,
            top,
            i,
            down: po.in_a.clone(),
            up: po.in_b.clone(),
            star,
        },
    );
    if !maps[0].objs.is_empty() || !maps[0].gens.is_empty() {
        iv.sigma = Some(read_map(
            c,
            c,
            &maps[0],
            "sigma",
            |o| c.object(o),
            |w| parse_word(c, w),
        )?);
    }
    let has = |m: &MapLines| !m.objs.is_empty() || !m.gens.is_empty();
    if has(&maps[2]) || has(&maps[3]) {
        let cc = ctx.tensor(c, c)?;
        let op = |m: &MapLines, what| read_map(&cc, c, m, what, |o| c.object(o), |w| parse_word(c, w));
        iv.meet = Some(op(&maps[2], "meet")?);
        iv.join = Some(op(&maps[3], "join")?);
    }
    Ok(iv)
}

fn default_star(
    ctx: &FinCatContext,
    c: &Cat,
    bot: &Functor,
    top: &Functor,
    i: &Functor,
    po: &Pushout<Cat, Functor>,
) -> Result<Functor> {
    let mut found = Vec::new();
    for star in enumerate_functors(c, &po.obj)? {
        let cocat = Cocategory {
            c0: ctx.unit(),
            c1: c.clone(),
            c2: po.obj.clone(),
            bot: bot.clone(),
            top: top.clone(),
            i: i.clone(),
            down: po.in_a.clone(),
            up: po.in_b.clone(),
            star,
        };
        if check_cocategory(ctx, &cocat).passed() {
            found.push(cocat.star);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(perr(
            1,
            1,
            "no cocomposition satisfies the cocategory axioms; give `star` lines",
        )),
        n => Err(perr(
            1,
            1,
            format!("{n} cocompositions satisfy the axioms; give `star` lines"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO: &str = "name two\nobj bot\nobj top\ngen u: bot -> top\nbot bot\ntop top\n";

    #[test]
    fn parses_plain_presentation() {
        let ctx = FinCatContext::default();
        let text = "obj a\nobj b\ngen f: a -> b\ngen g: b -> a\nrel f;g = id_a\n";
        let inp = parse_fincat_input(text, &ctx).unwrap();
        assert_eq!(inp.category.objects.len(), 2);
        assert!(inp.interval.is_none());
    }

    #[test]
    fn interval_with_inferred_star() {
        let ctx = FinCatContext::default();
        let inp = parse_fincat_input(TWO, &ctx).unwrap();
        let iv = inp.interval.unwrap();
        assert!(check_cocategory(&ctx, &iv.cocat).passed());
    }

    #[test]
    fn errors_carry_positions() {
        let ctx = FinCatContext::default();
        match parse_fincat_input("obj a\ngen f: a -> c\n", &ctx) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 13);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_fincat_input("obj a\nfrob a\n", &ctx),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn non_parallel_relation() {
        let ctx = FinCatContext::default();
        let r = parse_fincat_input("obj a\nobj b\ngen u: a -> b\nrel u = id_a\n", &ctx);
        assert!(matches!(r, Err(Error::Parse { line: 4, .. })));
    }
}
