use std::sync::Arc;

use super::complex::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::exactalg::{pushout_modules, FpModule, Matrix};

/// Degreewise pushout of `B <-f- A -g-> C`.
///
/// The pushout is always available as a presented graded module; when every
/// degree is free it is also normalized to a [`ChainComplex`] with chain-map
/// inclusions.
#[derive(Debug, Clone)]
pub struct ComplexPushout {
    pub f: ChainMap,
    pub g: ChainMap,
    /// Presentation of each degree (generators: basis of B, then of C).
    pub modules: Vec<FpModule>,
    /// Differential on generators, `block_diag(d_B, d_C)`.
    pub generator_diffs: Vec<Matrix>,
    pub free: Option<FreePushout>,
}

#[derive(Debug, Clone)]
pub struct FreePushout {
    pub complex: Arc<ChainComplex>,
    pub in_b: ChainMap,
    pub in_c: ChainMap,
    /// Per degree, a section of the quotient map from generators.
    lifts: Vec<Matrix>,
}

pub fn pushout_complexes(f: &ChainMap, g: &ChainMap) -> Result<ComplexPushout> {
    if f.source() != g.source() {
        return Err(Error::TypeMismatch("pushout legs have different sources".into()));
    }
    let ring = f.ring();
    let (b, c) = (f.target(), g.target());
    let top = f.source().len().max(b.len()).max(c.len());

    let mut modules = Vec::with_capacity(top);
    for n in 0..top {
        let (m, _, _) = pushout_modules(&f.component(n), &g.component(n))?;
        modules.push(m);
    }
    let generator_diffs = (1..top)
        .map(|n| b.d(n).block_diag(&c.d(n)))
        .collect::<Result<Vec<_>>>()?;

    let mut quotients = Vec::with_capacity(top);
    for m in &modules {
        match m.to_free()? {
            Some(q) => quotients.push(q),
            None => {
                return Ok(ComplexPushout {
                    f: f.clone(),
                    g: g.clone(),
                    modules,
                    generator_diffs,
                    free: None,
                })
            }
        }
    }

    let ranks: Vec<usize> = quotients.iter().map(|q| q.rank).collect();
    let diffs = (1..top)
        .map(|n| {
            quotients[n - 1]
                .project
                .mul(&generator_diffs[n - 1])?
                .mul(&quotients[n].lift)
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = Arc::new(ChainComplex::new(ring, ranks, diffs)?);

    let mut in_b = Vec::with_capacity(top);
    let mut in_c = Vec::with_capacity(top);
    for (n, q) in quotients.iter().enumerate() {
        let (rb, rc) = (b.rank(n), c.rank(n));
        in_b.push(q.project.submatrix(0..q.rank, 0..rb));
        in_c.push(q.project.submatrix(0..q.rank, rb..rb + rc));
    }
    let in_b = ChainMap::new(b.clone(), complex.clone(), in_b)?;
    let in_c = ChainMap::new(c.clone(), complex.clone(), in_c)?;
    let lifts = quotients.into_iter().map(|q| q.lift).collect();
    Ok(ComplexPushout {
        f: f.clone(),
        g: g.clone(),
        modules,
        generator_diffs,
        free: Some(FreePushout {
            complex,
            in_b,
            in_c,
            lifts,
        }),
    })
}

impl ComplexPushout {
    fn check_cocone(&self, h: &ChainMap, k: &ChainMap) -> Result<()> {
        if h.source() != self.f.target() || k.source() != self.g.target() || h.target() != k.target() {
            return Err(Error::TypeMismatch("cocone legs are mistyped".into()));
        }
        if h.after(&self.f)? != k.after(&self.g)? {
            return Err(Error::NonCommutingCocone("h.f != k.g".into()));
        }
        Ok(())
    }

    /// The induced map on generators, degree by degree; valid for the
    /// presented (possibly non-free) pushout.
    pub fn factor_on_generators(&self, h: &ChainMap, k: &ChainMap) -> Result<Vec<Matrix>> {
        self.check_cocone(h, k)?;
        (0..self.modules.len())
            .map(|n| {
                let m = h.component(n).hstack(&k.component(n))?;
                debug_assert!(self.modules[n].map_is_well_defined(&m)?);
                Ok(m)
            })
            .collect()
    }

    /// `[h, k]: P -> X` when the pushout is free.
    pub fn factor(&self, h: &ChainMap, k: &ChainMap) -> Result<ChainMap> {
        let free = self
            .free
            .as_ref()
            .ok_or_else(|| Error::NotFree("pushout has torsion".into()))?;
        let on_gens = self.factor_on_generators(h, k)?;
        let comps = on_gens
            .iter()
            .zip(&free.lifts)
            .map(|(m, lift)| m.mul(lift))
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(free.complex.clone(), h.target().clone(), comps)
    }
}
