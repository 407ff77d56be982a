use std::cell::RefCell;
use std::sync::Arc;

use serde_json::Value;

use super::category::{Cat, Generator, Limits, PresentedCategory};
use super::constructions::{self as cons, ProdGen, Shape, Sum};
use super::functor::{enumerate_functors, Functor};
use crate::cocat::{Coproduct, MonoidalContext, Pushout};
use crate::error::{Error, Result};

/// Small categories under the cartesian product, with the terminal
/// category as unit.
pub struct FinCatContext {
    pub limits: Limits,
    unit: Cat,
    products: RefCell<Vec<(Cat, Cat, Cat)>>,
    sums: RefCell<Vec<(Cat, Cat, Arc<Sum>)>>,
}

impl Default for FinCatContext {
    fn default() -> Self {
        FinCatContext::new(Limits::default())
    }
}

impl FinCatContext {
    pub fn new(limits: Limits) -> Self {
        let unit =
            PresentedCategory::new("1", vec!["*".into()], Vec::new(), Vec::new(), limits).expect("terminal category");
        FinCatContext {
            limits,
            unit: Arc::new(unit),
            products: RefCell::new(Vec::new()),
            sums: RefCell::new(Vec::new()),
        }
    }

    pub fn terminal(&self) -> Cat {
        self.unit.clone()
    }

    /// Builds a category with this context's limits.
    pub fn category(
        &self,
        name: &str,
        objects: &[&str],
        generators: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Result<Cat> {
        let objs: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let find = |o: &str| {
            objs.iter()
                .position(|x| x == o)
                .ok_or_else(|| Error::InvalidMorphism(format!("unknown object {o}")))
        };
        let gens = generators
            .iter()
            .map(|(n, s, t)| {
                Ok(Generator {
                    name: n.to_string(),
                    src: find(s)?,
                    tgt: find(t)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let skeleton = PresentedCategory::new(name, objs.clone(), gens.clone(), Vec::new(), self.limits)?;
        let rels = relations
            .iter()
            .map(|(a, b)| {
                Ok((
                    super::text::parse_word(&skeleton, a)?,
                    super::text::parse_word(&skeleton, b)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(PresentedCategory::new(name, objs, gens, rels, self.limits)?))
    }

    fn sum(&self, a: &Cat, b: &Cat) -> Result<Arc<Sum>> {
        if let Some((_, _, s)) = self.sums.borrow().iter().find(|(x, y, _)| x == a && y == b) {
            return Ok(s.clone());
        }
        let s = Arc::new(cons::coproduct(a, b, self.limits)?);
        self.sums.borrow_mut().push((a.clone(), b.clone(), s.clone()));
        Ok(s)
    }

    fn sum_of(&self, cp: &Coproduct<Cat, Functor>) -> Result<Arc<Sum>> {
        let s = self.sum(&cp.inl.src, &cp.inr.src)?;
        if s.obj != cp.obj {
            return Err(Error::TypeMismatch("coproduct was not built by this context".into()));
        }
        Ok(s)
    }

    fn product_parts(&self, p: &Cat) -> Result<(Shape, Cat, Cat)> {
        Shape::of_product(p)
    }

    /// A structural functor between products given by index maps.
    fn reindex(
        &self,
        src: &Cat,
        tgt: &Cat,
        obj: impl Fn(usize) -> usize,
        gen: impl Fn(usize) -> usize,
    ) -> Result<Functor> {
        Functor::typed(
            src.clone(),
            tgt.clone(),
            (0..src.objects.len()).map(obj).collect(),
            (0..src.generators.len()).map(|k| tgt.gen_path(gen(k))).collect(),
        )
    }
}

impl MonoidalContext for FinCatContext {
    type Obj = Cat;
    type Mor = Functor;

    fn name(&self) -> &'static str {
        "fincat"
    }

    fn dom(&self, f: &Functor) -> Cat {
        f.src.clone()
    }

    fn cod(&self, f: &Functor) -> Cat {
        f.tgt.clone()
    }

    fn id(&self, a: &Cat) -> Functor {
        Functor::identity(a)
    }

    fn compose(&self, g: &Functor, f: &Functor) -> Result<Functor> {
        g.after(f)
    }

    fn mor_eq(&self, f: &Functor, g: &Functor) -> Result<bool> {
        if f.src != g.src || f.tgt != g.tgt {
            return Err(Error::TypeMismatch(format!(
                "comparing {} -> {} with {} -> {}",
                f.src.name, f.tgt.name, g.src.name, g.tgt.name
            )));
        }
        Ok(f.same(g))
    }

    fn unit(&self) -> Cat {
        self.unit.clone()
    }

    fn tensor(&self, a: &Cat, b: &Cat) -> Result<Cat> {
        if let Some((_, _, p)) = self.products.borrow().iter().find(|(x, y, _)| x == a && y == b) {
            return Ok(p.clone());
        }
        let p = cons::product(a, b, self.limits)?;
        self.products.borrow_mut().push((a.clone(), b.clone(), p.clone()));
        Ok(p)
    }

    fn tensor_mor(&self, f: &Functor, g: &Functor) -> Result<Functor> {
        let src = self.tensor(&f.src, &g.src)?;
        let tgt = self.tensor(&f.tgt, &g.tgt)?;
        cons::product_functor(f, g, &src, &tgt)
    }

    fn lambda(&self, a: &Cat) -> Result<Functor> {
        let p = self.tensor(&self.unit, a)?;
        let (s, _, _) = self.product_parts(&p)?;
        self.reindex(
            &p,
            a,
            |i| s.split_obj(i).1,
            |k| match s.split_gen(k) {
                ProdGen::Right(_, h) => h,
                ProdGen::Left(..) => unreachable!("the unit has no generators"),
            },
        )
    }

    fn lambda_inv(&self, a: &Cat) -> Result<Functor> {
        let p = self.tensor(&self.unit, a)?;
        let (s, _, _) = self.product_parts(&p)?;
        self.reindex(a, &p, |y| s.obj(0, y), |h| s.gen(ProdGen::Right(0, h)))
    }

    fn rho(&self, a: &Cat) -> Result<Functor> {
        let p = self.tensor(a, &self.unit)?;
        let (s, _, _) = self.product_parts(&p)?;
        self.reindex(
            &p,
            a,
            |i| s.split_obj(i).0,
            |k| match s.split_gen(k) {
                ProdGen::Left(g, _) => g,
                ProdGen::Right(..) => unreachable!("the unit has no generators"),
            },
        )
    }

    fn rho_inv(&self, a: &Cat) -> Result<Functor> {
        let p = self.tensor(a, &self.unit)?;
        let (s, _, _) = self.product_parts(&p)?;
        self.reindex(a, &p, |x| s.obj(x, 0), |g| s.gen(ProdGen::Left(g, 0)))
    }

    fn alpha(&self, a: &Cat, b: &Cat, c: &Cat) -> Result<Functor> {
        let bc = self.tensor(b, c)?;
        let src = self.tensor(a, &bc)?;
        let ab = self.tensor(a, b)?;
        let tgt = self.tensor(&ab, c)?;
        let (s, _, _) = self.product_parts(&src)?;
        let (t, _, _) = self.product_parts(&bc)?;
        let (u, _, _) = self.product_parts(&tgt)?;
        let (v, _, _) = self.product_parts(&ab)?;
        self.reindex(
            &src,
            &tgt,
            |i| {
                let (x, yz) = s.split_obj(i);
                let (y, z) = t.split_obj(yz);
                u.obj(v.obj(x, y), z)
            },
            |k| match s.split_gen(k) {
                ProdGen::Left(g, yz) => {
                    let (y, z) = t.split_obj(yz);
                    u.gen(ProdGen::Left(v.gen(ProdGen::Left(g, y)), z))
                }
                ProdGen::Right(x, h) => match t.split_gen(h) {
                    ProdGen::Left(g, z) => u.gen(ProdGen::Left(v.gen(ProdGen::Right(x, g)), z)),
                    ProdGen::Right(y, g) => u.gen(ProdGen::Right(v.obj(x, y), g)),
                },
            },
        )
    }

    fn alpha_inv(&self, a: &Cat, b: &Cat, c: &Cat) -> Result<Functor> {
        let ab = self.tensor(a, b)?;
        let src = self.tensor(&ab, c)?;
        let bc = self.tensor(b, c)?;
        let tgt = self.tensor(a, &bc)?;
        let (s, _, _) = self.product_parts(&src)?;
        let (v, _, _) = self.product_parts(&ab)?;
        let (u, _, _) = self.product_parts(&tgt)?;
        let (t, _, _) = self.product_parts(&bc)?;
        self.reindex(
            &src,
            &tgt,
            |i| {
                let (xy, z) = s.split_obj(i);
                let (x, y) = v.split_obj(xy);
                u.obj(x, t.obj(y, z))
            },
            |k| match s.split_gen(k) {
                ProdGen::Left(h, z) => match v.split_gen(h) {
                    ProdGen::Left(g, y) => u.gen(ProdGen::Left(g, t.obj(y, z))),
                    ProdGen::Right(x, g) => u.gen(ProdGen::Right(x, t.gen(ProdGen::Left(g, z)))),
                },
                ProdGen::Right(xy, g) => {
                    let (x, y) = v.split_obj(xy);
                    u.gen(ProdGen::Right(x, t.gen(ProdGen::Right(y, g))))
                }
            },
        )
    }

    fn tau(&self, a: &Cat, b: &Cat) -> Result<Functor> {
        let src = self.tensor(a, b)?;
        let tgt = self.tensor(b, a)?;
        let (s, _, _) = self.product_parts(&src)?;
        let (t, _, _) = self.product_parts(&tgt)?;
        self.reindex(
            &src,
            &tgt,
            |i| {
                let (x, y) = s.split_obj(i);
                t.obj(y, x)
            },
            |k| match s.split_gen(k) {
                ProdGen::Left(g, y) => t.gen(ProdGen::Right(y, g)),
                ProdGen::Right(x, h) => t.gen(ProdGen::Left(h, x)),
            },
        )
    }

    fn coproduct(&self, a: &Cat, b: &Cat) -> Result<Coproduct<Cat, Functor>> {
        let s = self.sum(a, b)?;
        Ok(Coproduct {
            obj: s.obj.clone(),
            inl: s.inl.clone(),
            inr: s.inr.clone(),
        })
    }

    fn copair(&self, cp: &Coproduct<Cat, Functor>, h: &Functor, k: &Functor) -> Result<Functor> {
        cons::copair(&*self.sum_of(cp)?, h, k)
    }

    fn pushout(&self, left: &Functor, right: &Functor) -> Result<Pushout<Cat, Functor>> {
        let (obj, in_a, in_b) = cons::pushout(left, right, self.limits)?;
        Ok(Pushout {
            obj,
            in_a,
            in_b,
            left: left.clone(),
            right: right.clone(),
        })
    }

    fn lift_through(&self, q: &Functor, h: &Functor) -> Result<Option<Functor>> {
        cons::lift_through(q, h)
    }

    fn factor(&self, po: &Pushout<Cat, Functor>, h: &Functor, k: &Functor) -> Result<Functor> {
        if !h.after(&po.left)?.same(&k.after(&po.right)?) {
            return Err(Error::NonCommutingCocone("fincat pushout: h.left != k.right".into()));
        }
        cons::pushout_factor(&po.obj, &po.in_a, &po.in_b, h, k)
    }

    fn coequalize(&self, r1: &Functor, r2: &Functor) -> Result<Functor> {
        cons::coequalize(r1, r2, self.limits)
    }

    fn enumerate_hom(&self, a: &Cat, b: &Cat) -> Result<Vec<Functor>> {
        enumerate_functors(a, b)
    }

    fn describe(&self, f: &Functor) -> Value {
        f.to_json()
    }

    fn describe_obj(&self, a: &Cat) -> Value {
        a.to_json()
    }
}
