use super::matrix::Matrix;
use super::ring::Ring;
use super::snf::{smith_normal_form, solve_linear};
use crate::error::{Error, Result};

/// A finitely presented module: free on `generators`, modulo the column
/// span of `relations`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpModule {
    generators: usize,
    relations: Matrix,
}

/// A free module isomorphic to an [`FpModule`], with the quotient map
/// `project` from generator coordinates and a chosen section `lift`
/// (`project * lift == id`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeQuotient {
    pub rank: usize,
    pub project: Matrix,
    pub lift: Matrix,
}

impl FpModule {
    pub fn new(generators: usize, relations: Matrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        Ok(FpModule { generators, relations })
    }

    pub fn free(ring: Ring, rank: usize) -> Self {
        FpModule {
            generators: rank,
            relations: Matrix::zeros(ring, rank, 0),
        }
    }

    pub fn ring(&self) -> Ring {
        self.relations.ring()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// Decides whether two coordinate columns denote the same element.
    pub fn elements_equal(&self, x: &Matrix, y: &Matrix) -> Result<bool> {
        let diff = x.sub(y)?;
        Ok(solve_linear(&self.relations, &diff)?.is_some())
    }

    /// Decides whether a map out of this module, given on generators, kills
    /// every relation (and is hence well defined).
    pub fn map_is_well_defined(&self, on_generators: &Matrix) -> Result<bool> {
        Ok(on_generators.mul(&self.relations)?.is_zero())
    }

    /// Returns a free presentation when every invariant factor of the
    /// relation matrix is a unit; torsion makes the module non-free.
    pub fn to_free(&self) -> Result<Option<FreeQuotient>> {
        let ring = self.ring();
        let snf = smith_normal_form(&self.relations)?;
        let factors = snf.invariant_factors();
        if factors.iter().any(|f| !ring.is_unit(f)) {
            return Ok(None);
        }
        let r = factors.len();
        let n = self.generators;
        let project = snf.u.submatrix(r..n, 0..n);
        let lift = snf.u_inv.submatrix(0..n, r..n);
        Ok(Some(FreeQuotient {
            rank: n - r,
            project,
            lift,
        }))
    }
}

/// Pushout of free modules `B <-f- A -g-> C`, presented as the cokernel of
/// the stacked map `(f; -g)`. Returns the module and the two inclusions,
/// expressed in generator coordinates.
pub fn pushout_modules(f: &Matrix, g: &Matrix) -> Result<(FpModule, Matrix, Matrix)> {
    if f.cols() != g.cols() {
        return Err(Error::DimensionMismatch(format!(
            "pushout legs have sources of rank {} and {}",
            f.cols(),
            g.cols()
        )));
    }
    let ring = f.ring();
    let (rb, rc) = (f.rows(), g.rows());
    let relations = f.vstack(&g.neg())?;
    let module = FpModule::new(rb + rc, relations)?;
    let in_b = Matrix::identity(ring, rb).vstack(&Matrix::zeros(ring, rc, rb))?;
    let in_c = Matrix::zeros(ring, rb, rc).vstack(&Matrix::identity(ring, rc))?;
    Ok((module, in_b, in_c))
}

/// Induced map `[h, k]` out of a pushout presentation, on generators.
/// Errors when the cocone `h f = k g` fails.
pub fn pushout_factor(f: &Matrix, g: &Matrix, h: &Matrix, k: &Matrix) -> Result<Matrix> {
    if h.mul(f)? != k.mul(g)? {
        return Err(Error::NonCommutingCocone("h*f != k*g".into()));
    }
    h.hstack(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pushout_is_a_copy() {
        let z = Ring::Integers;
        let id = Matrix::identity(z, 1);
        let (p, in_b, in_c) = pushout_modules(&id, &id).unwrap();
        let free = p.to_free().unwrap().unwrap();
        assert_eq!(free.rank, 1);
        let b = free.project.mul(&in_b).unwrap();
        let c = free.project.mul(&in_c).unwrap();
        assert_eq!(b, c);
        assert!(z.is_unit(b.get(0, 0)));
    }

    #[test]
    fn doubling_against_identity() {
        // coker of the column (2, -1): e2 = 2 e1, so P is Z with inC = 2 inB.
        let z = Ring::Integers;
        let f = Matrix::from_rows(z, &[&[2]]);
        let g = Matrix::identity(z, 1);
        let (p, in_b, in_c) = pushout_modules(&f, &g).unwrap();
        let free = p.to_free().unwrap().unwrap();
        assert_eq!(free.rank, 1);
        let b = free.project.mul(&in_b).unwrap();
        let c = free.project.mul(&in_c).unwrap();
        assert!(z.is_unit(b.get(0, 0)));
        assert_eq!(c, b.scale(&z.from_i64(2)));
    }

    #[test]
    fn pushout_over_zero_is_coproduct() {
        let z = Ring::Integers;
        let f = Matrix::zeros(z, 1, 0);
        let (p, _, _) = pushout_modules(&f, &f).unwrap();
        assert_eq!(p.to_free().unwrap().unwrap().rank, 2);
    }

    #[test]
    fn torsion_is_not_free() {
        let z = Ring::Integers;
        let f = Matrix::from_rows(z, &[&[2]]);
        let zero = Matrix::zeros(z, 0, 1);
        let (p, _, _) = pushout_modules(&f, &zero).unwrap();
        assert!(p.to_free().unwrap().is_none());
        let x = Matrix::from_rows(z, &[&[2]]);
        assert!(p.elements_equal(&x, &Matrix::zeros(z, 1, 1)).unwrap());
        assert!(!p
            .elements_equal(&Matrix::from_rows(z, &[&[1]]), &Matrix::zeros(z, 1, 1))
            .unwrap());
    }

    #[test]
    fn factorization_requires_commuting_cocone() {
        let z = Ring::Integers;
        let f = Matrix::from_rows(z, &[&[2]]);
        let g = Matrix::identity(z, 1);
        let h = Matrix::from_rows(z, &[&[1]]);
        let k = Matrix::from_rows(z, &[&[2]]);
        let m = pushout_factor(&f, &g, &h, &k).unwrap();
        assert_eq!(m, Matrix::from_rows(z, &[&[1, 2]]));
        assert!(pushout_factor(&f, &g, &h, &h).is_err());
    }

    #[test]
    fn mismatched_legs() {
        let z = Ring::Integers;
        assert!(pushout_modules(&Matrix::zeros(z, 1, 2), &Matrix::zeros(z, 1, 1)).is_err());
    }
}
