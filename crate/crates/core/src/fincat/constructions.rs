//! Products, coproducts, pushouts and quotients of presented categories.

use std::sync::Arc;

use super::category::{Cat, Generator, Limits, Path, PresentedCategory};
use super::functor::Functor;
use crate::error::{Error, Result};

/// Index arithmetic for a product `C x D`. Objects are `(x, y)` at
/// `x * |D| + y`; generators `(g, y)` come first, then `(x, h)`.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub l_obj: usize,
    pub r_obj: usize,
    pub l_gen: usize,
    pub r_gen: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProdGen {
    /// `(g, y)`: a generator of the left factor at an object of the right.
    Left(usize, usize),
    /// `(x, h)`
    Right(usize, usize),
}

impl Shape {
    pub fn of(c: &PresentedCategory, d: &PresentedCategory) -> Shape {
        Shape {
            l_obj: c.objects.len(),
            r_obj: d.objects.len(),
            l_gen: c.generators.len(),
            r_gen: d.generators.len(),
        }
    }

    pub fn of_product(p: &PresentedCategory) -> Result<(Shape, Cat, Cat)> {
        let (c, d) = p
            .factors
            .clone()
            .ok_or_else(|| Error::TypeMismatch(format!("{} is not a product", p.name)))?;
        Ok((Shape::of(&c, &d), c, d))
    }

    pub fn obj(&self, x: usize, y: usize) -> usize {
        x * self.r_obj + y
    }

    pub fn split_obj(&self, i: usize) -> (usize, usize) {
        (i / self.r_obj, i % self.r_obj)
    }

    pub fn gen(&self, g: ProdGen) -> usize {
        match g {
            ProdGen::Left(g, y) => g * self.r_obj + y,
            ProdGen::Right(x, h) => self.l_gen * self.r_obj + x * self.r_gen + h,
        }
    }

    pub fn split_gen(&self, k: usize) -> ProdGen {
        let left = self.l_gen * self.r_obj;
        if k < left {
            ProdGen::Left(k / self.r_obj, k % self.r_obj)
        } else {
            let k = k - left;
            ProdGen::Right(k / self.r_gen, k % self.r_gen)
        }
    }

    /// A path of the left factor, placed at `y`.
    pub fn lift_left(&self, p: &Path, y: usize) -> Path {
        Path {
            src: self.obj(p.src, y),
            tgt: self.obj(p.tgt, y),
            gens: p.gens.iter().map(|&g| self.gen(ProdGen::Left(g, y))).collect(),
        }
    }

    pub fn lift_right(&self, x: usize, q: &Path) -> Path {
        Path {
            src: self.obj(x, q.src),
            tgt: self.obj(x, q.tgt),
            gens: q.gens.iter().map(|&h| self.gen(ProdGen::Right(x, h))).collect(),
        }
    }
}

/// Rules of a completed category as typed equations.
fn rule_paths(c: &PresentedCategory) -> Vec<(Path, Path)> {
    c.rules()
        .iter()
        .map(|(l, r)| {
            let src = c.generators[l[0]].src;
            let tgt = c.generators[*l.last().unwrap()].tgt;
            (
                Path {
                    src,
                    tgt,
                    gens: l.clone(),
                },
                Path {
                    src,
                    tgt,
                    gens: r.clone(),
                },
            )
        })
        .collect()
}

/// Appends primes until `name` is not in `taken`.
fn fresh(name: &str, taken: &[String]) -> String {
    let mut n = name.to_string();
    while taken.contains(&n) {
        n.push('\'');
    }
    n
}

pub fn product(c: &Cat, d: &Cat, limits: Limits) -> Result<Cat> {
    let s = Shape::of(c, d);
    let mut objects = Vec::with_capacity(s.l_obj * s.r_obj);
    for x in &c.objects {
        for y in &d.objects {
            objects.push(format!("({x},{y})"));
        }
    }
    let mut generators = Vec::new();
    for g in &c.generators {
        for (y, yn) in d.objects.iter().enumerate() {
            generators.push(Generator {
                name: format!("({},{yn})", g.name),
                src: s.obj(g.src, y),
                tgt: s.obj(g.tgt, y),
            });
        }
    }
    for (x, xn) in c.objects.iter().enumerate() {
        for h in &d.generators {
            generators.push(Generator {
                name: format!("({xn},{})", h.name),
                src: s.obj(x, h.src),
                tgt: s.obj(x, h.tgt),
            });
        }
    }
    let mut relations = Vec::new();
    for (a, b) in rule_paths(c) {
        for y in 0..s.r_obj {
            relations.push((s.lift_left(&a, y), s.lift_left(&b, y)));
        }
    }
    for (a, b) in rule_paths(d) {
        for x in 0..s.l_obj {
            relations.push((s.lift_right(x, &a), s.lift_right(x, &b)));
        }
    }
    for (gi, g) in c.generators.iter().enumerate() {
        for (hi, h) in d.generators.iter().enumerate() {
            let right_first = vec![s.gen(ProdGen::Right(g.src, hi)), s.gen(ProdGen::Left(gi, h.tgt))];
            let left_first = vec![s.gen(ProdGen::Left(gi, h.src)), s.gen(ProdGen::Right(g.tgt, hi))];
            let (src, tgt) = (s.obj(g.src, h.src), s.obj(g.tgt, h.tgt));
            relations.push((
                Path {
                    src,
                    tgt,
                    gens: right_first,
                },
                Path {
                    src,
                    tgt,
                    gens: left_first,
                },
            ));
        }
    }
    let name = format!("({}*{})", c.name, d.name);
    Ok(Arc::new(PresentedCategory::build(
        name,
        objects,
        generators,
        relations,
        limits,
        Some((c.clone(), d.clone())),
    )?))
}

/// `F x G`
pub fn product_functor(f: &Functor, g: &Functor, src: &Cat, tgt: &Cat) -> Result<Functor> {
    let (s, _, _) = Shape::of_product(src)?;
    let (t, _, _) = Shape::of_product(tgt)?;
    let obj_map = (0..s.l_obj * s.r_obj)
        .map(|i| {
            let (x, y) = s.split_obj(i);
            t.obj(f.obj_map[x], g.obj_map[y])
        })
        .collect();
    let gen_map = (0..src.generators.len())
        .map(|k| match s.split_gen(k) {
            ProdGen::Left(a, y) => t.lift_left(&f.gen_map[a], g.obj_map[y]),
            ProdGen::Right(x, b) => t.lift_right(f.obj_map[x], &g.gen_map[b]),
        })
        .collect();
    Functor::typed(src.clone(), tgt.clone(), obj_map, gen_map)
}

pub struct Sum {
    pub obj: Cat,
    pub inl: Functor,
    pub inr: Functor,
}

pub fn coproduct(c: &Cat, d: &Cat, limits: Limits) -> Result<Sum> {
    let (no, ng) = (c.objects.len(), c.generators.len());
    let mut objects = c.objects.clone();
    for o in &d.objects {
        let n = fresh(o, &objects);
        objects.push(n);
    }
    let mut generators = c.generators.clone();
    let mut names: Vec<String> = generators.iter().map(|g| g.name.clone()).collect();
    for g in &d.generators {
        let n = fresh(&g.name, &names);
        names.push(n.clone());
        generators.push(Generator {
            name: n,
            src: g.src + no,
            tgt: g.tgt + no,
        });
    }
    let shift = |p: &Path| Path {
        src: p.src + no,
        tgt: p.tgt + no,
        gens: p.gens.iter().map(|g| g + ng).collect(),
    };
    let mut relations = rule_paths(c);
    relations.extend(rule_paths(d).iter().map(|(a, b)| (shift(a), shift(b))));
    let sum: Cat = Arc::new(PresentedCategory::new(
        format!("({}+{})", c.name, d.name),
        objects,
        generators,
        relations,
        limits,
    )?);
    let inl = Functor::typed(
        c.clone(),
        sum.clone(),
        (0..no).collect(),
        (0..ng).map(|g| sum.gen_path(g)).collect(),
    )?;
    let inr = Functor::typed(
        d.clone(),
        sum.clone(),
        (0..d.objects.len()).map(|x| x + no).collect(),
        (0..d.generators.len()).map(|g| sum.gen_path(g + ng)).collect(),
    )?;
    Ok(Sum { obj: sum, inl, inr })
}

/// `[h, k]` out of a coproduct.
pub fn copair(sum: &Sum, h: &Functor, k: &Functor) -> Result<Functor> {
    if h.tgt != k.tgt || h.src != sum.inl.src || k.src != sum.inr.src {
        return Err(Error::TypeMismatch("copair: maps do not match the coproduct".into()));
    }
    let obj_map = h.obj_map.iter().chain(&k.obj_map).copied().collect();
    let gen_map = h.gen_map.iter().chain(&k.gen_map).cloned().collect();
    Functor::typed(sum.obj.clone(), h.tgt.clone(), obj_map, gen_map)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // The smaller index stays representative, keeping names stable.
        if ra < rb {
            self.0[rb] = ra;
        } else {
            self.0[ra] = rb;
        }
    }

    /// Class index of each element, classes numbered by first member.
    fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut index = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = count;
                count += 1;
            }
            out[x] = index[r];
        }
        (out, count)
    }
}

fn class_names(names: &[String], class: &[usize], count: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(count);
    for (x, &c) in class.iter().enumerate() {
        if c == out.len() {
            let n = fresh(&names[x], &out);
            out.push(n);
        }
    }
    out
}

/// Pushout of `f: C -> A` and `g: C -> B`: objects glued by union-find,
/// generators of `A` and `B` side by side, and one identification per
/// generator of `C`.
pub fn pushout(f: &Functor, g: &Functor, limits: Limits) -> Result<(Cat, Functor, Functor)> {
    if f.src != g.src {
        return Err(Error::TypeMismatch("pushout of maps with different sources".into()));
    }
    let (a, b) = (&f.tgt, &g.tgt);
    let (na, nga) = (a.objects.len(), a.generators.len());
    let mut uf = UnionFind::new(na + b.objects.len());
    for x in 0..f.src.objects.len() {
        uf.union(f.obj_map[x], na + g.obj_map[x]);
    }
    let (class, count) = uf.classes();
    let all_names: Vec<String> = a.objects.iter().chain(&b.objects).cloned().collect();
    let objects = class_names(&all_names, &class, count);

    let mut names: Vec<String> = Vec::new();
    let mut generators = Vec::new();
    for gen in &a.generators {
        names.push(gen.name.clone());
        generators.push(Generator {
            name: gen.name.clone(),
            src: class[gen.src],
            tgt: class[gen.tgt],
        });
    }
    for gen in &b.generators {
        let n = fresh(&gen.name, &names);
        names.push(n.clone());
        generators.push(Generator {
            name: n,
            src: class[na + gen.src],
            tgt: class[na + gen.tgt],
        });
    }
    let from_a = |p: &Path| Path {
        src: class[p.src],
        tgt: class[p.tgt],
        gens: p.gens.clone(),
    };
    let from_b = |p: &Path| Path {
        src: class[na + p.src],
        tgt: class[na + p.tgt],
        gens: p.gens.iter().map(|x| x + nga).collect(),
    };
    let mut relations: Vec<(Path, Path)> = rule_paths(a).iter().map(|(l, r)| (from_a(l), from_a(r))).collect();
    relations.extend(rule_paths(b).iter().map(|(l, r)| (from_b(l), from_b(r))));
    for k in 0..f.src.generators.len() {
        relations.push((from_a(&f.gen_map[k]), from_b(&g.gen_map[k])));
    }
    let p: Cat = Arc::new(PresentedCategory::new(
        format!("({} +{} {})", a.name, f.src.name, b.name),
        objects,
        generators,
        relations,
        limits,
    )?);
    let in_a = Functor::typed(
        a.clone(),
        p.clone(),
        (0..na).map(|x| class[x]).collect(),
        (0..nga).map(|k| p.gen_path(k)).collect(),
    )?;
    let in_b = Functor::typed(
        b.clone(),
        p.clone(),
        (0..b.objects.len()).map(|x| class[na + x]).collect(),
        (0..b.generators.len()).map(|k| p.gen_path(k + nga)).collect(),
    )?;
    Ok((p, in_a, in_b))
}

/// The map out of a pushout built by [`pushout`], given on the two sides.
pub fn pushout_factor(p: &Cat, in_a: &Functor, in_b: &Functor, h: &Functor, k: &Functor) -> Result<Functor> {
    if h.tgt != k.tgt {
        return Err(Error::TypeMismatch(
            "pushout factor: maps have different targets".into(),
        ));
    }
    let mut obj_map = vec![usize::MAX; p.objects.len()];
    for (side, m) in [(in_a, h), (in_b, k)] {
        for (x, &c) in side.obj_map.iter().enumerate() {
            if obj_map[c] != usize::MAX && obj_map[c] != m.obj_map[x] {
                return Err(Error::NonCommutingCocone(
                    "objects glued in the pushout have different images".into(),
                ));
            }
            obj_map[c] = m.obj_map[x];
        }
    }
    let gen_map = h.gen_map.iter().chain(&k.gen_map).cloned().collect();
    Functor::new(p.clone(), h.tgt.clone(), obj_map, gen_map)
        .map_err(|e| Error::NonCommutingCocone(format!("pushout factor: {e}")))
}

/// Quotient of `cod(r1)` making `r1` and `r2` equal: the coequalizer map.
pub fn coequalize(r1: &Functor, r2: &Functor, limits: Limits) -> Result<Functor> {
    if r1.src != r2.src || r1.tgt != r2.tgt {
        return Err(Error::TypeMismatch("coequalizer of non-parallel maps".into()));
    }
    let y = &r1.tgt;
    let mut uf = UnionFind::new(y.objects.len());
    for x in 0..r1.src.objects.len() {
        uf.union(r1.obj_map[x], r2.obj_map[x]);
    }
    let (class, count) = uf.classes();
    let objects = class_names(&y.objects, &class, count);
    let generators = y
        .generators
        .iter()
        .map(|g| Generator {
            name: g.name.clone(),
            src: class[g.src],
            tgt: class[g.tgt],
        })
        .collect();
    let remap = |p: &Path| Path {
        src: class[p.src],
        tgt: class[p.tgt],
        gens: p.gens.clone(),
    };
    let mut relations: Vec<(Path, Path)> = rule_paths(y).iter().map(|(a, b)| (remap(a), remap(b))).collect();
    for k in 0..r1.src.generators.len() {
        relations.push((remap(&r1.gen_map[k]), remap(&r2.gen_map[k])));
    }
    let q: Cat = Arc::new(PresentedCategory::new(
        format!("{}/~", y.name),
        objects,
        generators,
        relations,
        limits,
    )?);
    Functor::typed(
        y.clone(),
        q.clone(),
        class,
        (0..y.generators.len()).map(|g| q.gen_path(g)).collect(),
    )
}

/// The unique `k` with `k . q = h`, when `q` hits every object and every
/// irreducible generator of its target with a generator.
pub fn lift_through(q: &Functor, h: &Functor) -> Result<Option<Functor>> {
    if q.src != h.src {
        return Err(Error::TypeMismatch("lift_through: maps have different sources".into()));
    }
    let y = &q.tgt;
    let mut obj_map = vec![usize::MAX; y.objects.len()];
    for (x, &t) in q.obj_map.iter().enumerate() {
        if obj_map[t] != usize::MAX && obj_map[t] != h.obj_map[x] {
            return Ok(None);
        }
        obj_map[t] = h.obj_map[x];
    }
    if obj_map.contains(&usize::MAX) {
        return Ok(None);
    }
    let mut gen_map: Vec<Option<Path>> = vec![None; y.generators.len()];
    for (s, img) in q.gen_map.iter().enumerate() {
        if let [t] = img.gens[..] {
            if gen_map[t].is_none() {
                gen_map[t] = Some(h.gen_map[s].clone());
            }
        }
    }
    // Generators that rewrite away are sent where their normal form goes.
    let mut pending: Vec<usize> = (0..y.generators.len()).filter(|&t| gen_map[t].is_none()).collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for t in pending {
            let nf = y.normalize(&y.gen_path(t))?;
            if nf.gens == [t] || nf.gens.iter().any(|&g| gen_map[g].is_none()) {
                rest.push(t);
                continue;
            }
            let mut gens = Vec::new();
            for &g in &nf.gens {
                gens.extend_from_slice(&gen_map[g].as_ref().unwrap().gens);
            }
            gen_map[t] = Some(Path {
                src: obj_map[nf.src],
                tgt: obj_map[nf.tgt],
                gens,
            });
        }
        if rest.len() == before {
            return Ok(None);
        }
        pending = rest;
    }
    let gen_map = gen_map.into_iter().map(Option::unwrap).collect();
    let k = match Functor::new(y.clone(), h.tgt.clone(), obj_map, gen_map) {
        Ok(k) => k,
        Err(Error::InvalidFunctor(_)) | Err(Error::InvalidMorphism(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(k.after(q)?.same(h).then_some(k))
}

/// The functor into a thin category determined by its object map.
pub fn thin_functor(src: &Cat, tgt: &Cat, obj_map: Vec<usize>) -> Result<Functor> {
    let mut gen_map = Vec::with_capacity(src.generators.len());
    for g in &src.generators {
        let hom = tgt.hom(obj_map[g.src], obj_map[g.tgt])?;
        match hom {
            [p] => gen_map.push(p.clone()),
            _ => {
                return Err(Error::InvalidFunctor(format!(
                    "{} has {} candidate images in {}",
                    g.name,
                    hom.len(),
                    tgt.name
                )))
            }
        }
    }
    Functor::new(src.clone(), tgt.clone(), obj_map, gen_map)
}
