use std::fmt::Debug;

use serde_json::Value;

use crate::error::{Error, Result};

/// A chosen pushout of `left: C -> A` and `right: C -> B`, with
/// `in_a . left == in_b . right`.
#[derive(Debug, Clone)]
pub struct Pushout<O, M> {
    pub obj: O,
    pub in_a: M,
    pub in_b: M,
    pub left: M,
    pub right: M,
}

#[derive(Debug, Clone)]
pub struct Coproduct<O, M> {
    pub obj: O,
    pub inl: M,
    pub inr: M,
}

/// The symmetric monoidal category the generic checks run in.
///
/// Morphisms compose as functions: `compose(g, f)` is "g after f".
/// Structural isomorphisms follow the usual typing:
/// `lambda: U*A -> A`, `rho: A*U -> A`, `alpha: A*(B*C) -> (A*B)*C`,
/// `tau: A*B -> B*A`.
pub trait MonoidalContext {
    type Obj: Clone + Debug + PartialEq;
    type Mor: Clone + Debug;

    fn name(&self) -> &'static str;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool>;

    fn unit(&self) -> Self::Obj;
    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn lambda(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn lambda_inv(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn rho(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn rho_inv(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn alpha(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    fn alpha_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    fn tau(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    fn coproduct(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Coproduct<Self::Obj, Self::Mor>>;
    fn copair(&self, cp: &Coproduct<Self::Obj, Self::Mor>, h: &Self::Mor, k: &Self::Mor) -> Result<Self::Mor>;

    fn pushout(&self, left: &Self::Mor, right: &Self::Mor) -> Result<Pushout<Self::Obj, Self::Mor>>;

    /// The unique `k` with `k . q == h`, if one exists. Only required to be
    /// complete when `q` is an epimorphism or an isomorphism.
    fn lift_through(&self, q: &Self::Mor, h: &Self::Mor) -> Result<Option<Self::Mor>>;

    /// `[h, k]: P -> X` for a cocone `h . left == k . right`.
    fn factor(&self, po: &Pushout<Self::Obj, Self::Mor>, h: &Self::Mor, k: &Self::Mor) -> Result<Self::Mor> {
        let lhs = self.compose(h, &po.left)?;
        let rhs = self.compose(k, &po.right)?;
        if !self.mor_eq(&lhs, &rhs)? {
            return Err(Error::NonCommutingCocone(format!(
                "{} pushout: h.left != k.right",
                self.name()
            )));
        }
        let cp = self.coproduct(&self.cod(&po.left), &self.cod(&po.right))?;
        let cover = self.copair(&cp, &po.in_a, &po.in_b)?;
        let target = self.copair(&cp, h, k)?;
        self.lift_through(&cover, &target)?
            .ok_or_else(|| Error::NoFactorization("pushout comparison".into()))
    }

    /// Coequalizer of two parallel maps `r1, r2: X -> Y`, returned as the
    /// quotient map `Y -> Q`.
    fn coequalize(&self, _r1: &Self::Mor, _r2: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::Unsupported(format!("{}: quotients", self.name())))
    }

    /// Every morphism `a -> b` within the context's enumeration bound.
    fn enumerate_hom(&self, _a: &Self::Obj, _b: &Self::Obj) -> Result<Vec<Self::Mor>> {
        Err(Error::Unsupported(format!("{}: hom enumeration", self.name())))
    }

    fn describe(&self, f: &Self::Mor) -> Value;
    fn describe_obj(&self, a: &Self::Obj) -> Value;
}

/// Convenience combinators available on every context.
pub trait ContextExt: MonoidalContext {
    /// Composes in diagram order: `chain(&[f, g, h])` is `h . g . f`.
    fn chain(&self, maps: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = maps
            .split_first()
            .ok_or_else(|| Error::InvalidMorphism("empty composite".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| self.compose(m, &acc))
    }

    /// `A * f`
    fn left_whisker(&self, a: &Self::Obj, f: &Self::Mor) -> Result<Self::Mor> {
        self.tensor_mor(&self.id(a), f)
    }

    /// `f * A`
    fn right_whisker(&self, f: &Self::Mor, a: &Self::Obj) -> Result<Self::Mor> {
        self.tensor_mor(f, &self.id(a))
    }

    fn eq_chains(&self, lhs: &[&Self::Mor], rhs: &[&Self::Mor]) -> Result<bool> {
        let l = self.chain(lhs)?;
        let r = self.chain(rhs)?;
        self.mor_eq(&l, &r)
    }

    fn is_identity(&self, f: &Self::Mor) -> Result<bool> {
        let d = self.dom(f);
        if d != self.cod(f) {
            return Ok(false);
        }
        self.mor_eq(f, &self.id(&d))
    }

    /// Inverse of `f` when it is an isomorphism.
    fn try_inverse(&self, f: &Self::Mor) -> Result<Option<Self::Mor>> {
        let Some(k) = self.lift_through(f, &self.id(&self.dom(f)))? else {
            return Ok(None);
        };
        let back = self.compose(f, &k)?;
        if self.is_identity(&back)? && self.is_identity(&self.compose(&k, f)?)? {
            Ok(Some(k))
        } else {
            Ok(None)
        }
    }

    /// Checks that `f: a -> b` has the expected endpoints.
    fn expect_typed(&self, f: &Self::Mor, a: &Self::Obj, b: &Self::Obj, what: &str) -> Result<()> {
        if &self.dom(f) != a || &self.cod(f) != b {
            return Err(Error::TypeMismatch(format!("{what} has the wrong domain or codomain")));
        }
        Ok(())
    }
}

impl<C: MonoidalContext + ?Sized> ContextExt for C {}
