use std::cell::{OnceCell, RefCell};

use super::axioms::{glue_or_err, Glued};
use super::context::{ContextExt, MonoidalContext};
use super::structures::{Boundary, Homotopy, Interval};
use crate::error::{Error, Result};

/// Cell calculus for one interval in one context. Pushout identifications
/// of `A * I2` and the comultiplication are computed once and cached.
pub struct Kit<'a, C: MonoidalContext + ?Sized> {
    pub ctx: &'a C,
    pub iv: &'a Interval<C::Obj, C::Mor>,
    glued: RefCell<Vec<(C::Obj, Glued<C::Obj, C::Mor>)>>,
    delta: OnceCell<C::Mor>,
}

impl<'a, C: MonoidalContext + ?Sized> Kit<'a, C> {
    pub fn new(ctx: &'a C, iv: &'a Interval<C::Obj, C::Mor>) -> Self {
        Kit {
            ctx,
            iv,
            glued: RefCell::new(Vec::new()),
            delta: OnceCell::new(),
        }
    }

    /// The interval object.
    pub fn i(&self) -> &C::Obj {
        &self.iv.cocat.c1
    }

    pub fn unit(&self) -> &C::Obj {
        &self.iv.cocat.c0
    }

    /// `A * I2` as the pushout of `A * top` and `A * bot`.
    pub fn glued_at(&self, a: &C::Obj) -> Result<Glued<C::Obj, C::Mor>> {
        if let Some((_, g)) = self.glued.borrow().iter().find(|(k, _)| k == a) {
            return Ok(g.clone());
        }
        let ctx = self.ctx;
        let c = &self.iv.cocat;
        let g = glue_or_err(
            ctx,
            &ctx.left_whisker(a, &c.top)?,
            &ctx.left_whisker(a, &c.bot)?,
            &ctx.left_whisker(a, &c.down)?,
            &ctx.left_whisker(a, &c.up)?,
            "A * I2",
        )?;
        self.glued.borrow_mut().push((a.clone(), g.clone()));
        Ok(g)
    }

    /// `cell . (A * t) . rho^-1` for an endpoint `t: U -> I`.
    pub fn endpoint(&self, a: &C::Obj, cell: &C::Mor, t: &C::Mor) -> Result<C::Mor> {
        let ctx = self.ctx;
        ctx.chain(&[&ctx.rho_inv(a)?, &ctx.left_whisker(a, t)?, cell])
    }

    /// Reads off source and target of `cell: A * I -> B`.
    pub fn homotopy(&self, a: &C::Obj, cell: &C::Mor) -> Result<Homotopy<C::Mor>> {
        Ok(Homotopy {
            src: self.endpoint(a, cell, &self.iv.cocat.bot)?,
            tgt: self.endpoint(a, cell, &self.iv.cocat.top)?,
            cell: cell.clone(),
        })
    }

    /// Checks the stated endpoints of a homotopy against its cell.
    pub fn validate(&self, h: &Homotopy<C::Mor>) -> Result<()> {
        let a = self.ctx.dom(&h.src);
        let actual = self.homotopy(&a, &h.cell)?;
        if !self.ctx.mor_eq(&actual.src, &h.src)? || !self.ctx.mor_eq(&actual.tgt, &h.tgt)? {
            return Err(Error::BoundaryMismatch(
                "cell does not restrict to its stated endpoints".into(),
            ));
        }
        Ok(())
    }

    /// `1_f = f . rho . (A * i)`
    pub fn identity_cell(&self, f: &C::Mor) -> Result<Homotopy<C::Mor>> {
        let ctx = self.ctx;
        let a = ctx.dom(f);
        let cell = ctx.chain(&[&ctx.left_whisker(&a, &self.iv.cocat.i)?, &ctx.rho(&a)?, f])?;
        Ok(Homotopy {
            src: f.clone(),
            tgt: f.clone(),
            cell,
        })
    }

    /// `eta` followed by `gamma`: `[eta, gamma] . (A * star)`.
    pub fn vcomp(&self, eta: &Homotopy<C::Mor>, gamma: &Homotopy<C::Mor>) -> Result<Homotopy<C::Mor>> {
        let ctx = self.ctx;
        if !ctx.mor_eq(&eta.tgt, &gamma.src)? {
            return Err(Error::BoundaryMismatch(
                "vertical composite: target of the first cell is not the source of the second".into(),
            ));
        }
        let a = ctx.dom(&eta.src);
        let g = self.glued_at(&a)?;
        let cp = g.copair(ctx, &eta.cell, &gamma.cell)?;
        let cell = ctx.compose(&cp, &ctx.left_whisker(&a, &self.iv.cocat.star)?)?;
        Ok(Homotopy {
            src: eta.src.clone(),
            tgt: gamma.tgt.clone(),
            cell,
        })
    }

    /// `Delta = [(bot * I) . lambda^-1, (I * top) . rho^-1] . star`
    pub fn delta(&self) -> Result<C::Mor> {
        if let Some(d) = self.delta.get() {
            return Ok(d.clone());
        }
        let ctx = self.ctx;
        let c = &self.iv.cocat;
        let i = self.i();
        let left = ctx.compose(&ctx.right_whisker(&c.bot, i)?, &ctx.lambda_inv(i)?)?;
        let right = ctx.compose(&ctx.left_whisker(i, &c.top)?, &ctx.rho_inv(i)?)?;
        let g = self.glued_at(self.unit())?;
        // A = U: the chosen object is U * I2, so move along lambda.
        let cp = g.copair(
            ctx,
            &ctx.compose(&left, &ctx.lambda(i)?)?,
            &ctx.compose(&right, &ctx.lambda(i)?)?,
        )?;
        let d = ctx.chain(&[&c.star, &ctx.lambda_inv(&c.c2)?, &cp])?;
        let _ = self.delta.set(d.clone());
        Ok(d)
    }

    /// `gamma * eta` for `eta: f => g: A -> B` and `gamma: h => k: B -> C`:
    /// `gamma . (eta * I) . alpha . (A * Delta)`.
    pub fn hcomp(&self, eta: &Homotopy<C::Mor>, gamma: &Homotopy<C::Mor>) -> Result<Homotopy<C::Mor>> {
        let ctx = self.ctx;
        let a = ctx.dom(&eta.src);
        let i = self.i();
        let cell = ctx.chain(&[
            &ctx.left_whisker(&a, &self.delta()?)?,
            &ctx.alpha(&a, i, i)?,
            &ctx.right_whisker(&eta.cell, i)?,
            &gamma.cell,
        ])?;
        Ok(Homotopy {
            src: ctx.compose(&gamma.src, &eta.src)?,
            tgt: ctx.compose(&gamma.tgt, &eta.tgt)?,
            cell,
        })
    }

    /// `h . eta`
    pub fn whisker_post(&self, h: &C::Mor, eta: &Homotopy<C::Mor>) -> Result<Homotopy<C::Mor>> {
        let ctx = self.ctx;
        Ok(Homotopy {
            src: ctx.compose(h, &eta.src)?,
            tgt: ctx.compose(h, &eta.tgt)?,
            cell: ctx.compose(h, &eta.cell)?,
        })
    }

    /// `eta . h`, i.e. `eta . (h * I)`
    pub fn whisker_pre(&self, eta: &Homotopy<C::Mor>, h: &C::Mor) -> Result<Homotopy<C::Mor>> {
        let ctx = self.ctx;
        Ok(Homotopy {
            src: ctx.compose(&eta.src, h)?,
            tgt: ctx.compose(&eta.tgt, h)?,
            cell: ctx.compose(&eta.cell, &ctx.right_whisker(h, self.i())?)?,
        })
    }

    pub fn cells_eq(&self, x: &Homotopy<C::Mor>, y: &Homotopy<C::Mor>) -> Result<bool> {
        self.ctx.mor_eq(&x.cell, &y.cell)
    }

    /// Whether `beta` is a two-sided vertical inverse of `eta`.
    pub fn is_inverse(&self, eta: &Homotopy<C::Mor>, beta: &Homotopy<C::Mor>) -> Result<bool> {
        let ctx = self.ctx;
        if !ctx.mor_eq(&eta.src, &beta.tgt)? || !ctx.mor_eq(&eta.tgt, &beta.src)? {
            return Ok(false);
        }
        let there = self.vcomp(eta, beta)?;
        let back = self.vcomp(beta, eta)?;
        Ok(self.cells_eq(&there, &self.identity_cell(&eta.src)?)?
            && self.cells_eq(&back, &self.identity_cell(&eta.tgt)?)?)
    }

    /// Searches the context's enumeration of `A * I -> B` for an inverse.
    pub fn find_inverse(&self, eta: &Homotopy<C::Mor>) -> Result<Option<Homotopy<C::Mor>>> {
        let ctx = self.ctx;
        let a = ctx.dom(&eta.src);
        let ai = ctx.tensor(&a, self.i())?;
        for cell in ctx.enumerate_hom(&ai, &ctx.cod(&eta.src))? {
            let beta = self.homotopy(&a, &cell)?;
            if self.is_inverse(eta, &beta)? {
                return Ok(Some(beta));
            }
        }
        Ok(None)
    }

    /// All cells `A * I -> B`, with their endpoints.
    pub fn all_cells(&self, a: &C::Obj, b: &C::Obj) -> Result<Vec<Homotopy<C::Mor>>> {
        let ai = self.ctx.tensor(a, self.i())?;
        self.ctx
            .enumerate_hom(&ai, b)?
            .iter()
            .map(|cell| self.homotopy(a, cell))
            .collect()
    }

    /// The four edges of a square `phi: B * (I * I) -> A`:
    /// `phi . (B * (t * I)) . (B * lambda^-1)` and
    /// `phi . (B * (I * t)) . (B * rho^-1)` for `t = bot, top`.
    pub fn boundary(&self, b: &C::Obj, phi: &C::Mor) -> Result<Boundary<C::Mor>> {
        let ctx = self.ctx;
        let c = &self.iv.cocat;
        let i = self.i();
        let li = ctx.left_whisker(b, &ctx.lambda_inv(i)?)?;
        let ri = ctx.left_whisker(b, &ctx.rho_inv(i)?)?;
        let left =
            |t: &C::Mor| -> Result<C::Mor> { ctx.chain(&[&li, &ctx.left_whisker(b, &ctx.right_whisker(t, i)?)?, phi]) };
        let right =
            |t: &C::Mor| -> Result<C::Mor> { ctx.chain(&[&ri, &ctx.left_whisker(b, &ctx.left_whisker(i, t)?)?, phi]) };
        Ok(Boundary {
            left_bot: left(&c.bot)?,
            left_top: left(&c.top)?,
            right_bot: right(&c.bot)?,
            right_top: right(&c.top)?,
        })
    }
}
