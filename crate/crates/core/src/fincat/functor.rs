use std::sync::Arc;

use serde_json::{Map, Value};

use super::category::{Cat, Path};
use crate::error::{Error, Result};

/// A functor between presented categories, given on objects and on
/// generators; generator images are kept in normal form.
#[derive(Debug, Clone)]
pub struct Functor {
    pub src: Cat,
    pub tgt: Cat,
    pub obj_map: Vec<usize>,
    pub gen_map: Vec<Path>,
}

impl Functor {
    /// Checks typing and that every relation of the source is preserved.
    pub fn new(src: Cat, tgt: Cat, obj_map: Vec<usize>, gen_map: Vec<Path>) -> Result<Functor> {
        let f = Functor::typed(src, tgt, obj_map, gen_map)?;
        for (a, b) in &f.src.relations {
            if f.apply(a)? != f.apply(b)? {
                return Err(Error::InvalidFunctor(format!(
                    "relation {} = {} of {} is not preserved",
                    f.src.format_path(a),
                    f.src.format_path(b),
                    f.src.name
                )));
            }
        }
        Ok(f)
    }

    /// Checks typing only; for maps that preserve relations by construction.
    pub(crate) fn typed(src: Cat, tgt: Cat, obj_map: Vec<usize>, gen_map: Vec<Path>) -> Result<Functor> {
        if obj_map.len() != src.objects.len() || gen_map.len() != src.generators.len() {
            return Err(Error::InvalidFunctor(format!(
                "{} -> {}: map sizes do not match the source",
                src.name, tgt.name
            )));
        }
        if let Some(&x) = obj_map.iter().find(|&&x| x >= tgt.objects.len()) {
            return Err(Error::InvalidFunctor(format!("object index {x} outside {}", tgt.name)));
        }
        let mut normal = Vec::with_capacity(gen_map.len());
        for (g, img) in src.generators.iter().zip(gen_map) {
            tgt.check_path(&img)?;
            if img.src != obj_map[g.src] || img.tgt != obj_map[g.tgt] {
                return Err(Error::InvalidFunctor(format!(
                    "image of {} has the wrong endpoints",
                    g.name
                )));
            }
            normal.push(tgt.normalize(&img)?);
        }
        Ok(Functor {
            src,
            tgt,
            obj_map,
            gen_map: normal,
        })
    }

    pub fn identity(c: &Cat) -> Functor {
        Functor {
            src: c.clone(),
            tgt: c.clone(),
            obj_map: (0..c.objects.len()).collect(),
            gen_map: (0..c.generators.len())
                .map(|g| c.normalize(&c.gen_path(g)).expect("a single generator normalizes"))
                .collect(),
        }
    }

    /// The normal form of the image of a path.
    pub fn apply(&self, p: &Path) -> Result<Path> {
        let mut gens = Vec::new();
        for &g in &p.gens {
            gens.extend_from_slice(&self.gen_map[g].gens);
        }
        self.tgt.normalize(&Path {
            src: self.obj_map[p.src],
            tgt: self.obj_map[p.tgt],
            gens,
        })
    }

    /// `self` after `f`.
    pub fn after(&self, f: &Functor) -> Result<Functor> {
        if f.tgt != self.src {
            return Err(Error::TypeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src.name, self.tgt.name, f.src.name, f.tgt.name
            )));
        }
        Ok(Functor {
            src: f.src.clone(),
            tgt: self.tgt.clone(),
            obj_map: f.obj_map.iter().map(|&x| self.obj_map[x]).collect(),
            gen_map: f.gen_map.iter().map(|p| self.apply(p)).collect::<Result<_>>()?,
        })
    }

    pub fn same(&self, other: &Functor) -> bool {
        self.src == other.src && self.tgt == other.tgt && self.obj_map == other.obj_map && self.gen_map == other.gen_map
    }

    pub fn to_json(&self) -> Value {
        let objects: Map<String, Value> = self
            .src
            .objects
            .iter()
            .zip(&self.obj_map)
            .map(|(o, &x)| (o.clone(), Value::String(self.tgt.objects[x].clone())))
            .collect();
        let generators: Map<String, Value> = self
            .src
            .generators
            .iter()
            .zip(&self.gen_map)
            .map(|(g, p)| (g.name.clone(), Value::String(self.tgt.format_path(p))))
            .collect();
        serde_json::json!({
            "source": self.src.name,
            "target": self.tgt.name,
            "objects": objects,
            "generators": generators,
        })
    }
}

/// A natural transformation, one component per object of the source.
#[derive(Debug, Clone)]
pub struct NatTrans {
    pub src: Functor,
    pub tgt: Functor,
    pub components: Vec<Path>,
}

impl NatTrans {
    pub fn new(src: Functor, tgt: Functor, components: Vec<Path>) -> Result<NatTrans> {
        if src.src != tgt.src || src.tgt != tgt.tgt {
            return Err(Error::TypeMismatch(
                "natural transformation between non-parallel functors".into(),
            ));
        }
        let c = src.src.clone();
        let d = src.tgt.clone();
        let mut comps = Vec::with_capacity(components.len());
        for (x, p) in components.into_iter().enumerate() {
            d.check_path(&p)?;
            if p.src != src.obj_map[x] || p.tgt != tgt.obj_map[x] {
                return Err(Error::InvalidMorphism(format!(
                    "component at {} has the wrong type",
                    c.objects[x]
                )));
            }
            comps.push(d.normalize(&p)?);
        }
        let t = NatTrans {
            src,
            tgt,
            components: comps,
        };
        if let Some(g) = t.first_unnatural()? {
            return Err(Error::InvalidMorphism(format!(
                "not natural at {}",
                c.generators[g].name
            )));
        }
        Ok(t)
    }

    fn first_unnatural(&self) -> Result<Option<usize>> {
        let d = &self.src.tgt;
        for (k, g) in self.src.src.generators.iter().enumerate() {
            let lhs = d.then(&self.src.gen_map[k], &self.components[g.tgt])?;
            let rhs = d.then(&self.components[g.src], &self.tgt.gen_map[k])?;
            if lhs != rhs {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    pub fn identity(f: &Functor) -> NatTrans {
        NatTrans {
            src: f.clone(),
            tgt: f.clone(),
            components: f.obj_map.iter().map(|&x| Path::id(x)).collect(),
        }
    }

    /// `self` followed by `other`, componentwise.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if !self.tgt.same(&other.src) {
            return Err(Error::BoundaryMismatch(
                "natural transformations are not composable".into(),
            ));
        }
        let d = &self.src.tgt;
        Ok(NatTrans {
            src: self.src.clone(),
            tgt: other.tgt.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(p, q)| d.then(p, q))
                .collect::<Result<_>>()?,
        })
    }

    pub fn same(&self, other: &NatTrans) -> bool {
        self.src.same(&other.src) && self.tgt.same(&other.tgt) && self.components == other.components
    }
}

/// All functors `c -> d` in canonical order: object maps lexicographically,
/// then generator images in hom order.
pub fn enumerate_functors(c: &Cat, d: &Cat) -> Result<Vec<Functor>> {
    let homs = d.homs()?;
    let cap = c.limits.cap.min(d.limits.cap);
    let n = c.objects.len();
    let m = d.objects.len();
    // Relations are checked as soon as their last generator is assigned.
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); c.generators.len()];
    for (k, (a, b)) in c.relations.iter().enumerate() {
        if let Some(&g) = a.gens.iter().chain(&b.gens).max() {
            due[g].push(k);
        }
    }
    let mut out = Vec::new();
    let mut obj_map = vec![0usize; n];
    let mut work = 0usize;
    let mut objs = ObjSearch {
        c,
        d,
        homs,
        m,
        due: &due,
        cap,
        out: &mut out,
        work: &mut work,
    };
    objs.assign(0, &mut obj_map)?;
    Ok(out)
}

struct ObjSearch<'a> {
    c: &'a Cat,
    d: &'a Cat,
    homs: &'a Vec<Vec<Vec<Path>>>,
    m: usize,
    due: &'a [Vec<usize>],
    cap: usize,
    out: &'a mut Vec<Functor>,
    work: &'a mut usize,
}

impl ObjSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        *self.work += 1;
        if *self.work > self.cap.saturating_mul(100) || self.out.len() > self.cap {
            return Err(Error::CapExceeded(format!(
                "functor enumeration out of {} exceeded the cap {}",
                self.c.name, self.cap
            )));
        }
        Ok(())
    }

    fn assign(&mut self, k: usize, obj_map: &mut Vec<usize>) -> Result<()> {
        if k == obj_map.len() {
            let mut gen_map = Vec::with_capacity(self.c.generators.len());
            return self.gens(obj_map, &mut gen_map);
        }
        for y in 0..self.m {
            self.tick()?;
            obj_map[k] = y;
            let feasible = self
                .c
                .generators
                .iter()
                .all(|g| g.src.max(g.tgt) != k || !self.homs[obj_map[g.src]][obj_map[g.tgt]].is_empty());
            if feasible {
                self.assign(k + 1, obj_map)?;
            }
        }
        Ok(())
    }

    fn gens(&mut self, obj_map: &[usize], gen_map: &mut Vec<Path>) -> Result<()> {
        let k = gen_map.len();
        if k == self.c.generators.len() {
            let f = Functor {
                src: self.c.clone(),
                tgt: Arc::clone(self.d),
                obj_map: obj_map.to_vec(),
                gen_map: gen_map.clone(),
            };
            self.out.push(f);
            return self.tick();
        }
        let g = &self.c.generators[k];
        let candidates = &self.homs[obj_map[g.src]][obj_map[g.tgt]];
        for p in candidates {
            self.tick()?;
            gen_map.push(p.clone());
            if self.relations_hold(obj_map, gen_map, k)? {
                self.gens(obj_map, gen_map)?;
            }
            gen_map.pop();
        }
        Ok(())
    }

    fn relations_hold(&self, obj_map: &[usize], gen_map: &[Path], k: usize) -> Result<bool> {
        let d = self.d;
        for &r in &self.due[k] {
            let (a, b) = &self.c.relations[r];
            let img = |p: &Path| -> Result<Path> {
                let mut gens = Vec::new();
                for &g in &p.gens {
                    gens.extend_from_slice(&gen_map[g].gens);
                }
                d.normalize(&Path {
                    src: obj_map[p.src],
                    tgt: obj_map[p.tgt],
                    gens,
                })
            };
            if img(a)? != img(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All natural transformations `f => g`, in canonical order.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor) -> Result<Vec<NatTrans>> {
    if f.src != g.src || f.tgt != g.tgt {
        return Err(Error::TypeMismatch(
            "natural transformations need parallel functors".into(),
        ));
    }
    let d = &f.tgt;
    let homs = d.homs()?;
    let mut out = Vec::new();
    let mut comps: Vec<Path> = Vec::with_capacity(f.src.objects.len());
    fn go(
        f: &Functor,
        g: &Functor,
        homs: &Vec<Vec<Vec<Path>>>,
        comps: &mut Vec<Path>,
        out: &mut Vec<NatTrans>,
    ) -> Result<()> {
        let x = comps.len();
        if x == f.src.objects.len() {
            let t = NatTrans {
                src: f.clone(),
                tgt: g.clone(),
                components: comps.clone(),
            };
            if t.first_unnatural()?.is_none() {
                if out.len() >= f.src.limits.cap {
                    return Err(Error::CapExceeded("natural transformation enumeration".into()));
                }
                out.push(t);
            }
            return Ok(());
        }
        for p in &homs[f.obj_map[x]][g.obj_map[x]] {
            comps.push(p.clone());
            go(f, g, homs, comps, out)?;
            comps.pop();
        }
        Ok(())
    }
    go(f, g, homs, &mut comps, &mut out)?;
    Ok(out)
}
