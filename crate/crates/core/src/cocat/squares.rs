//! Parameterized squares, the maps `theta` and `upsilon`, and the
//! comparison between arrows of `E(B, [I, A])` and commutative squares in
//! `E(B, A)`.
//!
//! A map `X: (B*I)*I -> A` stands for an arrow of `E(B, [I, A])`: the last
//! `I` is the exponent and the middle `I` is the cell direction. Cells in
//! the middle direction are composed by conjugating with the swap of the
//! two `I` factors.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::algebra::check_meet_join_boundaries;
use super::cells::Kit;
use super::context::{ContextExt, MonoidalContext};
use super::report::{CheckReport, Status};
use super::structures::{Homotopy, BOUNDARY_NAMES};
use crate::error::{Error, Result};

/// A commutative square of cells in `E(B, A)`:
/// `top: f => f'`, `left: f => g`, `right: f' => g'`, `bottom: g => g'`.
#[derive(Debug, Clone)]
pub struct CellSquare<M> {
    pub top: Homotopy<M>,
    pub bottom: Homotopy<M>,
    pub left: Homotopy<M>,
    pub right: Homotopy<M>,
}

/// Which squares to test for injective boundaries.
#[derive(Debug, Clone)]
pub enum Probes<O, M> {
    /// Explicit pairs of squares `B * (I * I) -> A` over a fixed `B`.
    Pairs { b: O, pairs: Vec<(M, M)> },
    /// Every square `B * (I * I) -> A` the context can enumerate.
    Enumerate { b: O, a: O },
}

fn key<C: MonoidalContext + ?Sized>(ctx: &C, f: &C::Mor) -> String {
    serde_json::to_string(&ctx.describe(f)).expect("descriptions serialize")
}

impl<'a, C: MonoidalContext + ?Sized> Kit<'a, C> {
    fn lattice(&self) -> Result<(&C::Mor, &C::Mor)> {
        match (&self.iv.meet, &self.iv.join) {
            (Some(m), Some(j)) => Ok((m, j)),
            _ => Err(Error::MissingLattice),
        }
    }

    /// `phi . (B * op) . alpha^-1` for a binary operation `op` on `I`.
    fn through_op(&self, b: &C::Obj, phi: &C::Mor, op: &C::Mor) -> Result<C::Mor> {
        let ctx = self.ctx;
        let i = self.i();
        ctx.chain(&[&ctx.alpha_inv(b, i, i)?, &ctx.left_whisker(b, op)?, phi])
    }

    pub fn flat(&self, b: &C::Obj, phi: &C::Mor) -> Result<C::Mor> {
        self.through_op(b, phi, self.lattice()?.0)
    }

    pub fn sharp(&self, b: &C::Obj, phi: &C::Mor) -> Result<C::Mor> {
        self.through_op(b, phi, self.lattice()?.1)
    }

    /// `phi . (rho * I) . ((B * i) * I)`: constant in the middle coordinate.
    pub fn natural(&self, b: &C::Obj, phi: &C::Mor) -> Result<C::Mor> {
        let ctx = self.ctx;
        let i = self.i();
        ctx.chain(&[
            &ctx.right_whisker(&ctx.left_whisker(b, &self.iv.cocat.i)?, i)?,
            &ctx.right_whisker(&ctx.rho(b)?, i)?,
            phi,
        ])
    }

    /// `(phi-flat, phi-sharp, phi-natural)`
    pub fn flats(&self, b: &C::Obj, phi: &C::Mor) -> Result<(C::Mor, C::Mor, C::Mor)> {
        Ok((self.flat(b, phi)?, self.sharp(b, phi)?, self.natural(b, phi)?))
    }

    /// Swap of the two `I` factors of `(B*I)*I`.
    pub fn swap(&self, b: &C::Obj) -> Result<C::Mor> {
        let ctx = self.ctx;
        let i = self.i();
        ctx.chain(&[
            &ctx.alpha_inv(b, i, i)?,
            &ctx.left_whisker(b, &ctx.tau(i, i)?)?,
            &ctx.alpha(b, i, i)?,
        ])
    }

    fn bi(&self, b: &C::Obj) -> Result<C::Obj> {
        self.ctx.tensor(b, self.i())
    }

    /// Vertical composite in the last coordinate of `(B*I)*I`.
    pub fn vcomp_last(&self, b: &C::Obj, x: &C::Mor, y: &C::Mor) -> Result<C::Mor> {
        let bi = self.bi(b)?;
        Ok(self.vcomp(&self.homotopy(&bi, x)?, &self.homotopy(&bi, y)?)?.cell)
    }

    /// Composite of arrows of `E(B, [I, A])`: `x` then `y`.
    pub fn vcomp_mid(&self, b: &C::Obj, x: &C::Mor, y: &C::Mor) -> Result<C::Mor> {
        let s = self.swap(b)?;
        let ctx = self.ctx;
        let inner = self.vcomp_last(b, &ctx.compose(x, &s)?, &ctx.compose(y, &s)?)?;
        ctx.compose(&inner, &s)
    }

    /// Source and target objects of an arrow of `E(B, [I, A])`.
    pub fn mid_ends(&self, b: &C::Obj, x: &C::Mor) -> Result<(C::Mor, C::Mor)> {
        let bi = self.bi(b)?;
        let xs = self.ctx.compose(x, &self.swap(b)?)?;
        let h = self.homotopy(&bi, &xs)?;
        Ok((h.src, h.tgt))
    }

    /// `theta_{phi,psi} = psi-flat . phi-natural`, an arrow `phi => psi.phi`.
    pub fn theta(&self, b: &C::Obj, phi: &Homotopy<C::Mor>, psi: &Homotopy<C::Mor>) -> Result<C::Mor> {
        if !self.ctx.mor_eq(&phi.tgt, &psi.src)? {
            return Err(Error::BoundaryMismatch("theta: cells are not composable".into()));
        }
        self.vcomp_last(b, &self.natural(b, &phi.cell)?, &self.flat(b, &psi.cell)?)
    }

    /// `upsilon_{phi,psi} = psi-natural . phi-sharp`, an arrow `psi.phi => psi`.
    pub fn upsilon(&self, b: &C::Obj, phi: &Homotopy<C::Mor>, psi: &Homotopy<C::Mor>) -> Result<C::Mor> {
        if !self.ctx.mor_eq(&phi.tgt, &psi.src)? {
            return Err(Error::BoundaryMismatch("upsilon: cells are not composable".into()));
        }
        self.vcomp_last(b, &self.sharp(b, &phi.cell)?, &self.natural(b, &psi.cell)?)
    }

    /// The boundary square of an arrow of `E(B, [I, A])`.
    pub fn phi(&self, b: &C::Obj, x: &C::Mor) -> Result<CellSquare<C::Mor>> {
        let bi = self.bi(b)?;
        let c = &self.iv.cocat;
        let top = self.endpoint(&bi, x, &c.bot)?;
        let bottom = self.endpoint(&bi, x, &c.top)?;
        let (left, right) = self.mid_ends(b, x)?;
        Ok(CellSquare {
            top: self.homotopy(b, &top)?,
            bottom: self.homotopy(b, &bottom)?,
            left: self.homotopy(b, &left)?,
            right: self.homotopy(b, &right)?,
        })
    }

    /// `upsilon_{top,right} . theta_{left,bottom}`
    pub fn psi(&self, b: &C::Obj, sq: &CellSquare<C::Mor>) -> Result<C::Mor> {
        let th = self.theta(b, &sq.left, &sq.bottom)?;
        let up = self.upsilon(b, &sq.top, &sq.right)?;
        self.vcomp_mid(b, &th, &up)
    }

    pub fn commutes(&self, sq: &CellSquare<C::Mor>) -> Result<bool> {
        let a = self.vcomp(&sq.left, &sq.bottom)?;
        let b = self.vcomp(&sq.top, &sq.right)?;
        self.cells_eq(&a, &b)
    }

    /// Every commutative square of cells among `cells`.
    pub fn commuting_squares(&self, cells: &[Homotopy<C::Mor>]) -> Result<Vec<CellSquare<C::Mor>>> {
        let ctx = self.ctx;
        let mut out = Vec::new();
        for left in cells {
            for top in cells.iter().filter(|t| ctx.mor_eq(&t.src, &left.src).unwrap_or(false)) {
                for right in cells.iter().filter(|r| ctx.mor_eq(&r.src, &top.tgt).unwrap_or(false)) {
                    for bottom in cells.iter().filter(|d| {
                        ctx.mor_eq(&d.src, &left.tgt).unwrap_or(false)
                            && ctx.mor_eq(&d.tgt, &right.tgt).unwrap_or(false)
                    }) {
                        let sq = CellSquare {
                            top: top.clone(),
                            bottom: bottom.clone(),
                            left: left.clone(),
                            right: right.clone(),
                        };
                        if self.commutes(&sq)? {
                            out.push(sq);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn describe_square(&self, sq: &CellSquare<C::Mor>) -> Value {
        let d = |h: &Homotopy<C::Mor>| self.ctx.describe(&h.cell);
        json!({ "top": d(&sq.top), "bottom": d(&sq.bottom), "left": d(&sq.left), "right": d(&sq.right) })
    }
}

/// Tallies instances of a law and keeps the first counterexample.
struct Tally {
    checked: usize,
    failed: usize,
    witness: Option<Value>,
    error: Option<Error>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failed: 0,
            witness: None,
            error: None,
        }
    }

    fn record(&mut self, outcome: Result<Option<Value>>) {
        self.checked += 1;
        match outcome {
            Ok(None) => {}
            Ok(Some(w)) => {
                self.failed += 1;
                self.witness.get_or_insert(w);
            }
            Err(e) => {
                self.error.get_or_insert(e);
            }
        }
    }

    fn finish(self, r: &mut CheckReport, name: &str) {
        if self.failed > 0 {
            r.fail(
                name,
                format!("{} of {} instances fail", self.failed, self.checked),
                self.witness.unwrap_or(Value::Null),
            );
        } else if let Some(e) = self.error {
            r.error(name, &e);
        } else {
            r.pass(name);
            r.set_data(&format!("{name}/instances"), json!(self.checked));
        }
    }
}

fn eq_or_witness<C: MonoidalContext + ?Sized>(ctx: &C, l: &C::Mor, rhs: &C::Mor) -> Result<Option<Value>> {
    Ok(if ctx.mor_eq(l, rhs)? {
        None
    } else {
        Some(json!({ "left": ctx.describe(l), "right": ctx.describe(rhs) }))
    })
}

/// Injective boundaries over a probe family. A failure is a re-verified
/// pair of distinct squares with equal boundaries; a pass is bounded
/// evidence only.
pub fn check_injective_boundaries<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    probes: &Probes<C::Obj, C::Mor>,
) -> CheckReport {
    let mut r = CheckReport::new("injective-boundaries");
    let ctx = kit.ctx;
    let (b, pairs): (C::Obj, Vec<(C::Mor, C::Mor)>) = match probes {
        Probes::Pairs { b, pairs } => (b.clone(), pairs.clone()),
        Probes::Enumerate { b, a } => {
            let enumerated = ctx
                .tensor(kit.i(), kit.i())
                .and_then(|ii| ctx.tensor(b, &ii))
                .and_then(|src| ctx.enumerate_hom(&src, a));
            let squares = match enumerated {
                Ok(s) => s,
                Err(e) => {
                    r.error("injective-boundaries", &e);
                    return r;
                }
            };
            r.set_data("coverage/squares", json!(squares.len()));
            let mut classes: BTreeMap<String, Vec<C::Mor>> = BTreeMap::new();
            for sq in &squares {
                match kit.boundary(b, sq) {
                    Ok(bd) => {
                        let k = bd
                            .components()
                            .iter()
                            .map(|m| key(ctx, m))
                            .collect::<Vec<_>>()
                            .join("|");
                        classes.entry(k).or_default().push(sq.clone());
                    }
                    Err(e) => {
                        r.error("injective-boundaries", &e);
                        return r;
                    }
                }
            }
            r.set_data("coverage/boundary-classes", json!(classes.len()));
            let pairs = classes
                .values()
                .filter(|v| v.len() > 1)
                .map(|v| (v[0].clone(), v[1].clone()))
                .collect();
            (b.clone(), pairs)
        }
    };
    if let Probes::Pairs { pairs, .. } = probes {
        r.set_data("coverage/pairs", json!(pairs.len()));
    }

    for (phi, psi) in &pairs {
        let verdict = (|| -> Result<Option<Value>> {
            let (bp, bq) = (kit.boundary(&b, phi)?, kit.boundary(&b, psi)?);
            for (x, y) in bp.components().iter().zip(bq.components()) {
                if !ctx.mor_eq(x, y)? {
                    return Ok(None);
                }
            }
            if ctx.mor_eq(phi, psi)? {
                return Ok(None);
            }
            let bd: serde_json::Map<String, Value> = BOUNDARY_NAMES
                .iter()
                .zip(bp.components())
                .map(|(n, m)| (n.to_string(), ctx.describe(m)))
                .collect();
            Ok(Some(json!({
                "parameter": ctx.describe_obj(&b),
                "phi": ctx.describe(phi),
                "psi": ctx.describe(psi),
                "boundary": bd,
            })))
        })();
        match verdict {
            Ok(None) => {}
            Ok(Some(w)) => {
                r.fail("injective-boundaries", "distinct squares share a boundary", w);
                return r;
            }
            Err(e) => {
                r.error("injective-boundaries", &e);
                return r;
            }
        }
    }
    r.pass("injective-boundaries");
    r.note("no counterexample within the probe family; this is bounded evidence");
    r
}

/// The representability criterion: meet/join boundary conditions plus
/// injective boundaries over `probes`.
pub fn check_representable<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    probes: &Probes<C::Obj, C::Mor>,
) -> CheckReport {
    let mut r = CheckReport::new("representable");
    check_meet_join_boundaries(kit, &mut r);
    r.absorb("injective-boundaries", check_injective_boundaries(kit, probes));
    let verdict = match r.status() {
        Status::Pass => "representable (bounded evidence)",
        Status::Fail => "not representable",
        Status::Inconclusive => "inconclusive",
    };
    r.set_data("verdict", json!(verdict));
    r
}

/// Round trip between arrows of `E(B, [I, A])` and commutative squares in
/// `E(B, A)`, over everything the context can enumerate.
pub fn check_phi_psi<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>, b: &C::Obj, a: &C::Obj) -> CheckReport {
    let mut r = CheckReport::new("phi-psi");
    let ctx = kit.ctx;
    let setup = (|| -> Result<_> {
        let cells = kit.all_cells(b, a)?;
        let squares = kit.commuting_squares(&cells)?;
        let bii = ctx.tensor(&ctx.tensor(b, kit.i())?, kit.i())?;
        let arrows = ctx.enumerate_hom(&bii, a)?;
        Ok((cells, squares, arrows))
    })();
    let (cells, squares, arrows) = match setup {
        Ok(x) => x,
        Err(e) => {
            r.error("enumeration", &e);
            return r;
        }
    };
    r.set_data("objects", json!(cells.len()));
    r.set_data("commuting-squares", json!(squares.len()));
    r.set_data("arrows", json!(arrows.len()));
    r.note("objects of both sides are the cells B*I -> A, matched by transposition");

    let mut forward = Tally::new();
    for sq in &squares {
        forward.record((|| {
            let back = kit.phi(b, &kit.psi(b, sq)?)?;
            for (x, y) in [
                (&back.top, &sq.top),
                (&back.bottom, &sq.bottom),
                (&back.left, &sq.left),
                (&back.right, &sq.right),
            ] {
                if !kit.cells_eq(x, y)? {
                    return Ok(Some(json!({
                        "square": kit.describe_square(sq),
                        "round-trip": kit.describe_square(&back),
                    })));
                }
            }
            Ok(None)
        })());
    }
    forward.finish(&mut r, "phi.psi = id");

    let mut ends = Tally::new();
    let mut backward = Tally::new();
    for x in &arrows {
        ends.record((|| {
            let sq = kit.phi(b, x)?;
            let ok = ctx.mor_eq(&sq.top.src, &sq.left.src)?
                && ctx.mor_eq(&sq.top.tgt, &sq.right.src)?
                && ctx.mor_eq(&sq.bottom.src, &sq.left.tgt)?
                && ctx.mor_eq(&sq.bottom.tgt, &sq.right.tgt)?
                && kit.commutes(&sq)?;
            Ok((!ok).then(|| json!({ "arrow": ctx.describe(x) })))
        })());
        backward.record((|| {
            let sq = kit.phi(b, x)?;
            eq_or_witness(ctx, &kit.psi(b, &sq)?, x)
        })());
    }
    ends.finish(&mut r, "domain-codomain");
    backward.finish(&mut r, "psi.phi = id");
    r
}

/// The cocycle identities for `theta` and `upsilon` on every composable
/// family of enumerable cells `B * I -> A`.
pub fn check_cocycle<C: MonoidalContext + ?Sized>(kit: &Kit<'_, C>, b: &C::Obj, a: &C::Obj) -> CheckReport {
    let mut r = CheckReport::new("cocycle");
    let ctx = kit.ctx;
    let cells = match kit.all_cells(b, a) {
        Ok(c) => c,
        Err(e) => {
            r.error("enumeration", &e);
            return r;
        }
    };
    let after = |x: &Homotopy<C::Mor>, y: &Homotopy<C::Mor>| ctx.mor_eq(&x.tgt, &y.src).unwrap_or(false);

    let mut theta_unit = Tally::new();
    let mut upsilon_unit = Tally::new();
    for phi in &cells {
        theta_unit.record((|| {
            let one = kit.identity_cell(&phi.tgt)?;
            eq_or_witness(ctx, &kit.theta(b, phi, &one)?, &kit.natural(b, &phi.cell)?)
        })());
        upsilon_unit.record((|| {
            let one = kit.identity_cell(&phi.src)?;
            eq_or_witness(ctx, &kit.upsilon(b, &one, phi)?, &kit.natural(b, &phi.cell)?)
        })());
    }
    theta_unit.finish(&mut r, "theta-unit");
    upsilon_unit.finish(&mut r, "upsilon-unit");

    let mut theta = Tally::new();
    let mut upsilon = Tally::new();
    for phi in &cells {
        for psi in cells.iter().filter(|p| after(phi, p)) {
            for chi in cells.iter().filter(|c| after(psi, c)) {
                theta.record((|| {
                    let pp = kit.vcomp(phi, psi)?;
                    let cp = kit.vcomp(psi, chi)?;
                    let lhs = kit.vcomp_mid(b, &kit.theta(b, phi, psi)?, &kit.theta(b, &pp, chi)?)?;
                    eq_or_witness(ctx, &lhs, &kit.theta(b, phi, &cp)?)
                })());
                upsilon.record((|| {
                    let pp = kit.vcomp(phi, psi)?;
                    let cp = kit.vcomp(psi, chi)?;
                    let lhs = kit.vcomp_mid(b, &kit.upsilon(b, phi, &cp)?, &kit.upsilon(b, psi, chi)?)?;
                    eq_or_witness(ctx, &lhs, &kit.upsilon(b, &pp, chi)?)
                })());
            }
        }
    }
    theta.finish(&mut r, "theta-cocycle");
    upsilon.finish(&mut r, "upsilon-cocycle");

    let mut square = Tally::new();
    match kit.commuting_squares(&cells) {
        Ok(squares) => {
            for s1 in &squares {
                for s2 in &squares {
                    if !kit.cells_eq(&s1.right, &s2.left).unwrap_or(false) {
                        continue;
                    }
                    let (gamma, delta, phi, psi) = (&s1.top, &s1.bottom, &s1.left, &s1.right);
                    let (gamma2, delta2, chi) = (&s2.top, &s2.bottom, &s2.right);
                    square.record((|| {
                        let lhs = kit.vcomp_mid(
                            b,
                            &kit.theta(b, &kit.vcomp(phi, delta)?, delta2)?,
                            &kit.upsilon(b, gamma, &kit.vcomp(gamma2, chi)?)?,
                        )?;
                        let rhs = kit.vcomp_mid(b, &kit.upsilon(b, gamma, psi)?, &kit.theta(b, psi, delta2)?)?;
                        eq_or_witness(ctx, &lhs, &rhs)
                    })());
                }
            }
        }
        Err(e) => square.error = Some(e),
    }
    square.finish(&mut r, "cocycle-square");
    r
}

/// Unit and associativity laws for vertical composition and the
/// interchange law, over all enumerable cells `A -> B` and `B -> C`.
pub fn check_two_category<C: MonoidalContext + ?Sized>(
    kit: &Kit<'_, C>,
    a: &C::Obj,
    b: &C::Obj,
    c: &C::Obj,
) -> CheckReport {
    let mut r = CheckReport::new("two-category");
    let ctx = kit.ctx;
    let cells = match (kit.all_cells(a, b), kit.all_cells(b, c)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            r.error("enumeration", &e);
            return r;
        }
    };
    let after = |x: &Homotopy<C::Mor>, y: &Homotopy<C::Mor>| ctx.mor_eq(&x.tgt, &y.src).unwrap_or(false);
    let ab = &cells.0;

    let mut unit = Tally::new();
    let mut assoc = Tally::new();
    for eta in ab {
        unit.record((|| {
            let l = kit.vcomp(&kit.identity_cell(&eta.src)?, eta)?;
            let rr = kit.vcomp(eta, &kit.identity_cell(&eta.tgt)?)?;
            Ok(eq_or_witness(ctx, &l.cell, &eta.cell)?.or(eq_or_witness(ctx, &rr.cell, &eta.cell)?))
        })());
        for eta2 in ab.iter().filter(|e| after(eta, e)) {
            for eta3 in ab.iter().filter(|e| after(eta2, e)) {
                assoc.record((|| {
                    let l = kit.vcomp(&kit.vcomp(eta, eta2)?, eta3)?;
                    let rr = kit.vcomp(eta, &kit.vcomp(eta2, eta3)?)?;
                    eq_or_witness(ctx, &l.cell, &rr.cell)
                })());
            }
        }
    }
    unit.finish(&mut r, "vertical-unit");
    assoc.finish(&mut r, "vertical-associativity");

    let mut interchange = Tally::new();
    let bc = &cells.1;
    for eta in ab {
        for eta2 in ab.iter().filter(|e| after(eta, e)) {
            for gamma in bc {
                for gamma2 in bc.iter().filter(|g| after(gamma, g)) {
                    interchange.record((|| {
                        let l = kit.hcomp(&kit.vcomp(eta, eta2)?, &kit.vcomp(gamma, gamma2)?)?;
                        let rr = kit.vcomp(&kit.hcomp(eta, gamma)?, &kit.hcomp(eta2, gamma2)?)?;
                        eq_or_witness(ctx, &l.cell, &rr.cell)
                    })());
                }
            }
        }
    }
    interchange.finish(&mut r, "interchange");
    r
}
