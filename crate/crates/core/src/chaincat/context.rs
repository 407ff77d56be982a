use std::sync::Arc;

use num_traits::Zero;
use serde_json::Value;

use super::complex::{ChainComplex, ChainMap};
use super::pushout::pushout_complexes;
use super::tensor::{associator, symmetry, tensor_complexes, tensor_maps};
use crate::cocat::{Coproduct, MonoidalContext, Pushout};
use crate::error::{Error, Result};
use crate::exactalg::{solve_linear, Matrix, Ring, Scalar};

/// Bounded chain complexes of finitely generated free modules over `ring`.
#[derive(Debug, Clone)]
pub struct ChainContext {
    pub ring: Ring,
    /// Highest degree a tensor product may reach.
    pub max_deg: usize,
    /// Coefficient box `[-coeff_box, coeff_box]` for hom enumeration.
    pub coeff_box: i64,
    /// Number of candidate matrices hom enumeration may inspect.
    pub enum_cap: usize,
}

impl ChainContext {
    pub fn new(ring: Ring) -> Self {
        ChainContext {
            ring,
            max_deg: 8,
            coeff_box: 3,
            enum_cap: 1_000_000,
        }
    }

    fn check_ring(&self, c: &ChainComplex) -> Result<()> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), c.ring().to_string()));
        }
        Ok(())
    }

    /// Scalars of the coefficient box, reduced and deduplicated.
    fn box_values(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::new();
        for v in -self.coeff_box..=self.coeff_box {
            let s = self.ring.from_i64(v);
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out
    }
}

impl MonoidalContext for ChainContext {
    type Obj = Arc<ChainComplex>;
    type Mor = ChainMap;

    fn name(&self) -> &'static str {
        "chaincat"
    }

    fn dom(&self, f: &ChainMap) -> Arc<ChainComplex> {
        f.source().clone()
    }

    fn cod(&self, f: &ChainMap) -> Arc<ChainComplex> {
        f.target().clone()
    }

    fn id(&self, a: &Arc<ChainComplex>) -> ChainMap {
        ChainMap::identity(a)
    }

    fn compose(&self, g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        g.after(f)
    }

    fn mor_eq(&self, f: &ChainMap, g: &ChainMap) -> Result<bool> {
        f.same_type(g)?;
        Ok(f == g)
    }

    fn unit(&self) -> Arc<ChainComplex> {
        Arc::new(ChainComplex::unit(self.ring))
    }

    fn tensor(&self, a: &Arc<ChainComplex>, b: &Arc<ChainComplex>) -> Result<Arc<ChainComplex>> {
        self.check_ring(a)?;
        self.check_ring(b)?;
        let t = tensor_complexes(a, b)?;
        if t.len() > self.max_deg + 1 {
            return Err(Error::DegreeBound(format!(
                "tensor product reaches degree {}, bound is {}",
                t.len() - 1,
                self.max_deg
            )));
        }
        Ok(Arc::new(t))
    }

    fn tensor_mor(&self, f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        let source = self.tensor(f.source(), g.source())?;
        let target = self.tensor(f.target(), g.target())?;
        tensor_maps(f, g, &source, &target)
    }

    // U*A and A*U coincide with A in the chosen basis order, so the unitors
    // are identity matrices.
    fn lambda(&self, a: &Arc<ChainComplex>) -> Result<ChainMap> {
        let ua = self.tensor(&self.unit(), a)?;
        ChainMap::new(ua, a.clone(), ChainMap::identity(a).components().to_vec())
    }

    fn lambda_inv(&self, a: &Arc<ChainComplex>) -> Result<ChainMap> {
        let ua = self.tensor(&self.unit(), a)?;
        ChainMap::new(a.clone(), ua, ChainMap::identity(a).components().to_vec())
    }

    fn rho(&self, a: &Arc<ChainComplex>) -> Result<ChainMap> {
        let au = self.tensor(a, &self.unit())?;
        ChainMap::new(au, a.clone(), ChainMap::identity(a).components().to_vec())
    }

    fn rho_inv(&self, a: &Arc<ChainComplex>) -> Result<ChainMap> {
        let au = self.tensor(a, &self.unit())?;
        ChainMap::new(a.clone(), au, ChainMap::identity(a).components().to_vec())
    }

    fn alpha(&self, a: &Arc<ChainComplex>, b: &Arc<ChainComplex>, c: &Arc<ChainComplex>) -> Result<ChainMap> {
        let x_yz = self.tensor(a, &self.tensor(b, c)?)?;
        let xy_z = self.tensor(&self.tensor(a, b)?, c)?;
        associator(a, b, c, &x_yz, &xy_z, false)
    }

    fn alpha_inv(&self, a: &Arc<ChainComplex>, b: &Arc<ChainComplex>, c: &Arc<ChainComplex>) -> Result<ChainMap> {
        let x_yz = self.tensor(a, &self.tensor(b, c)?)?;
        let xy_z = self.tensor(&self.tensor(a, b)?, c)?;
        associator(a, b, c, &x_yz, &xy_z, true)
    }

    fn tau(&self, a: &Arc<ChainComplex>, b: &Arc<ChainComplex>) -> Result<ChainMap> {
        let ab = self.tensor(a, b)?;
        let ba = self.tensor(b, a)?;
        symmetry(a, b, &ab, &ba)
    }

    fn coproduct(
        &self,
        a: &Arc<ChainComplex>,
        b: &Arc<ChainComplex>,
    ) -> Result<Coproduct<Arc<ChainComplex>, ChainMap>> {
        let sum = Arc::new(a.direct_sum(b)?);
        let top = sum.len();
        let ring = self.ring;
        let mut inl = Vec::with_capacity(top);
        let mut inr = Vec::with_capacity(top);
        for n in 0..top {
            let (ra, rb) = (a.rank(n), b.rank(n));
            inl.push(Matrix::identity(ring, ra).vstack(&Matrix::zeros(ring, rb, ra))?);
            inr.push(Matrix::zeros(ring, ra, rb).vstack(&Matrix::identity(ring, rb))?);
        }
        Ok(Coproduct {
            inl: ChainMap::new(a.clone(), sum.clone(), inl)?,
            inr: ChainMap::new(b.clone(), sum.clone(), inr)?,
            obj: sum,
        })
    }

    fn copair(&self, cp: &Coproduct<Arc<ChainComplex>, ChainMap>, h: &ChainMap, k: &ChainMap) -> Result<ChainMap> {
        if h.source() != cp.inl.source() || k.source() != cp.inr.source() || h.target() != k.target() {
            return Err(Error::TypeMismatch("copair legs are mistyped".into()));
        }
        let comps = (0..cp.obj.len())
            .map(|n| h.component(n).hstack(&k.component(n)))
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(cp.obj.clone(), h.target().clone(), comps)
    }

    fn pushout(&self, left: &ChainMap, right: &ChainMap) -> Result<Pushout<Arc<ChainComplex>, ChainMap>> {
        let po = pushout_complexes(left, right)?;
        let free = po
            .free
            .ok_or_else(|| Error::NotFree("pushout has torsion in some degree".into()))?;
        Ok(Pushout {
            obj: free.complex,
            in_a: free.in_b,
            in_b: free.in_c,
            left: left.clone(),
            right: right.clone(),
        })
    }

    /// Solves `k_n q_n = h_n` degreewise. A solution that fails the chain
    /// condition is reported as absent; when `q` is degreewise onto this
    /// cannot happen.
    fn lift_through(&self, q: &ChainMap, h: &ChainMap) -> Result<Option<ChainMap>> {
        if q.source() != h.source() {
            return Err(Error::TypeMismatch(
                "lift_through: q and h have different sources".into(),
            ));
        }
        let target = h.target();
        let top = q.target().len().max(target.len());
        let mut comps = Vec::with_capacity(top);
        for n in 0..top {
            let qt = q.component(n).transpose();
            let ht = h.component(n).transpose();
            match solve_linear(&qt, &ht)? {
                Some(kt) => comps.push(kt.transpose()),
                None => return Ok(None),
            }
        }
        match ChainMap::new(q.target().clone(), target.clone(), comps) {
            Ok(k) => Ok(Some(k)),
            Err(Error::NotAChainMap(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Chain maps with every entry in the coefficient box, found degree by
    /// degree with the chain condition pruning each new component.
    fn enumerate_hom(&self, a: &Arc<ChainComplex>, b: &Arc<ChainComplex>) -> Result<Vec<ChainMap>> {
        let top = a.len().max(b.len());
        let values = self.box_values();
        let mut budget = self.enum_cap;
        let mut partial: Vec<Vec<Matrix>> = vec![Vec::new()];
        for n in 0..top {
            let (rows, cols) = (b.rank(n), a.rank(n));
            let mut next = Vec::new();
            for prefix in &partial {
                let mut found = Vec::new();
                let mut m = Matrix::zeros(self.ring, rows, cols);
                fill(
                    &mut m,
                    0,
                    &values,
                    &mut budget,
                    &mut |m: &Matrix| {
                        if n == 0 {
                            return Ok(true);
                        }
                        Ok(b.d(n).mul(m)? == prefix[n - 1].mul(&a.d(n))?)
                    },
                    &mut found,
                )?;
                for m in found {
                    let mut p = prefix.clone();
                    p.push(m);
                    next.push(p);
                }
            }
            partial = next;
        }
        partial
            .into_iter()
            .map(|comps| ChainMap::new(a.clone(), b.clone(), comps))
            .collect()
    }

    fn describe(&self, f: &ChainMap) -> Value {
        f.to_json()
    }

    fn describe_obj(&self, a: &Arc<ChainComplex>) -> Value {
        a.to_json()
    }
}

fn fill(
    m: &mut Matrix,
    pos: usize,
    values: &[Scalar],
    budget: &mut usize,
    accept: &mut dyn FnMut(&Matrix) -> Result<bool>,
    out: &mut Vec<Matrix>,
) -> Result<()> {
    let cols = m.cols();
    if pos == m.rows() * cols {
        if *budget == 0 {
            return Err(Error::CapExceeded("chain map enumeration".into()));
        }
        *budget -= 1;
        if accept(m)? {
            out.push(m.clone());
        }
        return Ok(());
    }
    let (r, c) = (pos / cols, pos % cols);
    for v in values {
        m.set(r, c, v.clone());
        fill(m, pos + 1, values, budget, accept, out)?;
    }
    m.set(r, c, Scalar::zero());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaincat::interval::segment;
    use crate::cocat::ContextExt;

    #[test]
    fn symmetry_squares_to_identity() {
        let ctx = ChainContext::new(Ring::Integers);
        let seg = segment(Ring::Integers);
        let t = ctx.tau(&seg, &seg).unwrap();
        assert!(ctx.is_identity(&ctx.compose(&t, &t).unwrap()).unwrap());
    }

    #[test]
    fn unitors_are_inverse() {
        let ctx = ChainContext::new(Ring::Integers);
        let seg = segment(Ring::Integers);
        let l = ctx.lambda(&seg).unwrap();
        let li = ctx.lambda_inv(&seg).unwrap();
        assert!(ctx.is_identity(&ctx.compose(&l, &li).unwrap()).unwrap());
    }

    #[test]
    fn endomorphisms_of_the_segment() {
        let mut ctx = ChainContext::new(Ring::Integers);
        ctx.coeff_box = 1;
        let seg = segment(Ring::Integers);
        let homs = ctx.enumerate_hom(&seg, &seg).unwrap();
        // A chain map is fixed by f_0 with column sums agreeing on d(e).
        assert!(homs.contains(&ChainMap::identity(&seg)));
        for h in &homs {
            assert!(ChainMap::new(seg.clone(), seg.clone(), h.components().to_vec()).is_ok());
        }
    }

    #[test]
    fn degree_bound_is_enforced() {
        let mut ctx = ChainContext::new(Ring::Integers);
        ctx.max_deg = 1;
        let seg = segment(Ring::Integers);
        assert!(matches!(ctx.tensor(&seg, &seg), Err(Error::DegreeBound(_))));
    }
}
