use std::cell::OnceCell;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::rewrite::{Bounds, RewriteSystem, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A composable word of generators, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub gens: Word,
}

impl Path {
    pub fn id(x: usize) -> Path {
        Path {
            src: x,
            tgt: x,
            gens: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Enumeration and rewriting limits shared by a context's categories.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub depth_bound: usize,
    /// Most morphisms (or functors) any enumeration may produce.
    pub cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            depth_bound: 12,
            cap: 10_000,
        }
    }
}

impl Limits {
    pub(crate) fn bounds(&self) -> Bounds {
        Bounds {
            depth_bound: self.depth_bound,
            ..Bounds::default()
        }
    }
}

/// A finitely presented category with a completed rewriting system.
pub struct PresentedCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub generators: Vec<Generator>,
    pub relations: Vec<(Path, Path)>,
    pub limits: Limits,
    system: RewriteSystem,
    /// The factors, when this category was built as a product.
    pub(crate) factors: Option<(Arc<PresentedCategory>, Arc<PresentedCategory>)>,
    homs: OnceCell<std::result::Result<Vec<Vec<Vec<Path>>>, Error>>,
}

pub type Cat = Arc<PresentedCategory>;

impl fmt::Debug for PresentedCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedCategory")
            .field("name", &self.name)
            .field("objects", &self.objects.len())
            .field("generators", &self.generators.len())
            .finish()
    }
}

impl PartialEq for PresentedCategory {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.objects == other.objects
                && self.generators == other.generators
                && self.system.rules() == other.system.rules())
    }
}

impl PresentedCategory {
    /// Validates the presentation and completes its relations.
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        generators: Vec<Generator>,
        relations: Vec<(Path, Path)>,
        limits: Limits,
    ) -> Result<Self> {
        Self::build(name.into(), objects, generators, relations, limits, None)
    }

    pub(crate) fn build(
        name: String,
        objects: Vec<String>,
        generators: Vec<Generator>,
        relations: Vec<(Path, Path)>,
        limits: Limits,
        factors: Option<(Cat, Cat)>,
    ) -> Result<Self> {
        let n = objects.len();
        for g in &generators {
            if g.src >= n || g.tgt >= n {
                return Err(Error::InvalidMorphism(format!(
                    "generator {} has an unknown endpoint",
                    g.name
                )));
            }
        }
        let mut cat = PresentedCategory {
            name,
            objects,
            generators,
            relations: Vec::new(),
            limits,
            system: RewriteSystem::default(),
            factors,
            homs: OnceCell::new(),
        };
        for (a, b) in &relations {
            cat.check_path(a)?;
            cat.check_path(b)?;
            if a.src != b.src || a.tgt != b.tgt {
                return Err(Error::NotParallel(format!(
                    "{} = {}",
                    cat.format_path(a),
                    cat.format_path(b)
                )));
            }
        }
        let eqs = relations
            .iter()
            .map(|(a, b)| (a.gens.clone(), b.gens.clone()))
            .collect();
        cat.system = RewriteSystem::complete(eqs, limits.bounds())?;
        cat.relations = relations;
        Ok(cat)
    }

    pub fn rules(&self) -> &[(Word, Word)] {
        self.system.rules()
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn check_path(&self, p: &Path) -> Result<()> {
        let mut at = p.src;
        if p.src >= self.objects.len() || p.tgt >= self.objects.len() {
            return Err(Error::NonComposable(format!("unknown endpoint in {}", self.name)));
        }
        for &g in &p.gens {
            let gen = self
                .generators
                .get(g)
                .ok_or_else(|| Error::NonComposable(format!("unknown generator {g} in {}", self.name)))?;
            if gen.src != at {
                return Err(Error::NonComposable(format!(
                    "{} starts at {}, not {}",
                    gen.name, self.objects[gen.src], self.objects[at]
                )));
            }
            at = gen.tgt;
        }
        if at != p.tgt {
            return Err(Error::NonComposable(format!(
                "word does not end at {}",
                self.objects[p.tgt]
            )));
        }
        Ok(())
    }

    /// The path of a nonempty word, checking composability.
    pub fn word(&self, gens: Word) -> Result<Path> {
        let first = *gens
            .first()
            .ok_or_else(|| Error::NonComposable("an empty word needs an object".into()))?;
        let last = *gens.last().unwrap();
        let p = Path {
            src: self.generators.get(first).map(|g| g.src).unwrap_or(usize::MAX),
            tgt: self.generators.get(last).map(|g| g.tgt).unwrap_or(usize::MAX),
            gens,
        };
        self.check_path(&p)?;
        Ok(p)
    }

    pub fn gen_path(&self, g: usize) -> Path {
        let gen = &self.generators[g];
        Path {
            src: gen.src,
            tgt: gen.tgt,
            gens: vec![g],
        }
    }

    pub fn normalize(&self, p: &Path) -> Result<Path> {
        Ok(Path {
            src: p.src,
            tgt: p.tgt,
            gens: self.system.normalize(&p.gens, Bounds::default().max_steps)?,
        })
    }

    /// `p` followed by `q`, normalized.
    pub fn then(&self, p: &Path, q: &Path) -> Result<Path> {
        if p.tgt != q.src {
            return Err(Error::NonComposable(format!(
                "{} ends at {}, {} starts at {}",
                self.format_path(p),
                self.objects[p.tgt],
                self.format_path(q),
                self.objects[q.src]
            )));
        }
        self.normalize(&Path {
            src: p.src,
            tgt: q.tgt,
            gens: [p.gens.as_slice(), q.gens.as_slice()].concat(),
        })
    }

    pub fn path_eq(&self, p: &Path, q: &Path) -> Result<bool> {
        Ok(p.src == q.src && p.tgt == q.tgt && self.normalize(p)? == self.normalize(q)?)
    }

    /// Normal forms of all morphisms, indexed `[src][tgt]`, in shortlex
    /// order. Fails with `CapExceeded` on categories too large to list.
    pub fn homs(&self) -> Result<&Vec<Vec<Vec<Path>>>> {
        self.homs
            .get_or_init(|| self.enumerate_homs())
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn hom(&self, x: usize, y: usize) -> Result<&[Path]> {
        Ok(&self.homs()?[x][y])
    }

    pub fn morphism_count(&self) -> Result<usize> {
        Ok(self.homs()?.iter().flatten().map(Vec::len).sum())
    }

    fn enumerate_homs(&self) -> Result<Vec<Vec<Vec<Path>>>> {
        let n = self.objects.len();
        let mut out = vec![vec![Vec::new(); n]; n];
        let mut total = 0usize;
        for x in 0..n {
            let mut frontier = vec![Path::id(x)];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for p in frontier {
                    total += 1;
                    if total > self.limits.cap {
                        return Err(Error::CapExceeded(format!(
                            "{} has more than {} morphisms",
                            self.name, self.limits.cap
                        )));
                    }
                    for (g, gen) in self.generators.iter().enumerate() {
                        if gen.src != p.tgt {
                            continue;
                        }
                        let mut w = p.gens.clone();
                        w.push(g);
                        if self.system.extends_irreducibly(&w) {
                            next.push(Path {
                                src: x,
                                tgt: gen.tgt,
                                gens: w,
                            });
                        }
                    }
                    out[x][p.tgt].push(p);
                }
                next.sort();
                frontier = next;
            }
        }
        Ok(out)
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.gens.is_empty() {
            return format!("id_{}", self.objects.get(p.src).map(String::as_str).unwrap_or("?"));
        }
        p.gens
            .iter()
            .map(|&g| self.generators.get(g).map(|g| g.name.as_str()).unwrap_or("?"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "objects": self.objects,
            "generators": self.generators.iter().map(|g| {
                format!("{}: {} -> {}", g.name, self.objects[g.src], self.objects[g.tgt])
            }).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|(a, b)| {
                format!("{} = {}", self.format_path(a), self.format_path(b))
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str, src: usize, tgt: usize) -> Generator {
        Generator {
            name: name.into(),
            src,
            tgt,
        }
    }

    fn cycle(limits: Limits) -> PresentedCategory {
        PresentedCategory::new(
            "K",
            vec!["bot".into(), "top".into()],
            vec![gen("u", 0, 1), gen("d", 1, 0)],
            vec![],
            limits,
        )
        .unwrap()
    }

    #[test]
    fn free_cycle_keeps_alternating_words() {
        let k = cycle(Limits {
            depth_bound: 3,
            cap: 100,
        });
        let w = k.word(vec![0, 1, 0]).unwrap();
        assert_eq!(k.normalize(&w).unwrap().gens.len(), 3);
        assert!(matches!(k.homs(), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn groupoid_has_four_morphisms() {
        let iso = PresentedCategory::new(
            "I",
            vec!["bot".into(), "top".into()],
            vec![gen("u", 0, 1), gen("d", 1, 0)],
            vec![
                (
                    Path {
                        src: 0,
                        tgt: 0,
                        gens: vec![0, 1],
                    },
                    Path::id(0),
                ),
                (
                    Path {
                        src: 1,
                        tgt: 1,
                        gens: vec![1, 0],
                    },
                    Path::id(1),
                ),
            ],
            Limits::default(),
        )
        .unwrap();
        assert_eq!(iso.morphism_count().unwrap(), 4);
        let du = iso.word(vec![1, 0]).unwrap();
        assert!(iso.normalize(&du).unwrap().is_identity());
    }

    #[test]
    fn non_parallel_relation_is_rejected() {
        let r = PresentedCategory::new(
            "two",
            vec!["bot".into(), "top".into()],
            vec![gen("u", 0, 1)],
            vec![(
                Path {
                    src: 0,
                    tgt: 1,
                    gens: vec![0],
                },
                Path::id(0),
            )],
            Limits::default(),
        );
        assert!(matches!(r, Err(Error::NotParallel(_))));
    }

    #[test]
    fn non_composable_word() {
        let k = cycle(Limits::default());
        assert!(matches!(k.word(vec![0, 0]), Err(Error::NonComposable(_))));
    }
}
