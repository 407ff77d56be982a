use num_traits::Zero;

use super::matrix::Matrix;
use super::ring::Scalar;
use crate::error::{Error, Result};

/// Result of a Smith normal form computation: `u * m * v == d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    /// Inverses of `u` and `v`, tracked alongside so callers never invert.
    pub u_inv: Matrix,
    pub v_inv: Matrix,
}

impl SmithForm {
    /// Nonzero diagonal entries of `d`, in order.
    pub fn invariant_factors(&self) -> Vec<Scalar> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|v| !v.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Calc {
    d: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Calc {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += k row[src]; the inverse gets col[src] -= k col[dst].
    fn add_row(&mut self, dst: usize, src: usize, k: &Scalar) {
        let ring = self.d.ring();
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &ring.neg(k));
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &Scalar) {
        let ring = self.d.ring();
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &ring.neg(k));
    }

    fn scale_row(&mut self, r: usize, unit: &Scalar) {
        let ring = self.d.ring();
        let inv = ring.divide(&ring.one(), unit).expect("unit");
        self.d.scale_row(r, unit);
        self.u.scale_row(r, unit);
        self.u_inv.scale_col(r, &inv);
    }
}

/// Diagonalizes `m` by invertible row and column operations. Over Z the
/// diagonal forms a divisibility chain with nonnegative entries; over a
/// field the nonzero diagonal entries are all one.
pub fn smith_normal_form(m: &Matrix) -> Result<SmithForm> {
    let ring = m.ring();
    ring.require_pid()?;
    let (rows, cols) = m.shape();
    let mut calc = Calc {
        d: m.clone(),
        u: Matrix::identity(ring, rows),
        u_inv: Matrix::identity(ring, rows),
        v: Matrix::identity(ring, cols),
        v_inv: Matrix::identity(ring, cols),
    };

    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&calc.d, t) else {
            break;
        };
        calc.swap_rows(t, pr);
        calc.swap_cols(t, pc);

        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if calc.d.get(r, t).is_zero() {
                    continue;
                }
                let (q, rem) = ring.div_rem(calc.d.get(r, t), calc.d.get(t, t));
                calc.add_row(r, t, &ring.neg(&q));
                if !rem.is_zero() {
                    calc.swap_rows(t, r);
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if calc.d.get(t, c).is_zero() {
                    continue;
                }
                let (q, rem) = ring.div_rem(calc.d.get(t, c), calc.d.get(t, t));
                calc.add_col(c, t, &ring.neg(&q));
                if !rem.is_zero() {
                    calc.swap_cols(t, c);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the
            // remaining block by pulling an offending row into the pivot row.
            let pivot = calc.d.get(t, t).clone();
            let offending =
                (t + 1..rows).find(|&r| (t + 1..cols).any(|c| ring.divide(calc.d.get(r, c), &pivot).is_none()));
            match offending {
                Some(r) => calc.add_row(t, r, &ring.one()),
                None => break,
            }
        }

        let unit = ring.normalize_unit(calc.d.get(t, t));
        if unit != ring.one() {
            calc.scale_row(t, &unit);
        }
    }

    Ok(SmithForm {
        u: calc.u,
        d: calc.d,
        v: calc.v,
        u_inv: calc.u_inv,
        v_inv: calc.v_inv,
    })
}

fn smallest_entry(d: &Matrix, t: usize) -> Option<(usize, usize)> {
    let ring = d.ring();
    let mut best: Option<(usize, usize)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            let v = d.get(r, c);
            if v.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((br, bc)) => ring.euclid_size(v) < ring.euclid_size(d.get(br, bc)),
            };
            if better {
                best = Some((r, c));
            }
        }
    }
    best
}

/// Solves `a * x == b`. Returns the canonical solution (free coordinates in
/// the Smith basis set to zero) or `None` when no solution exists over the
/// ring.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch(a.ring().to_string(), b.ring().to_string()));
    }
    let ring = a.ring();
    let snf = smith_normal_form(a)?;
    let ub = snf.u.mul(b)?;
    let rank = snf.rank();
    let mut y = Matrix::zeros(ring, a.cols(), b.cols());
    for c in 0..b.cols() {
        for r in 0..ub.rows() {
            let rhs = ub.get(r, c);
            if r < rank {
                match ring.divide(rhs, snf.d.get(r, r)) {
                    Some(q) => y.set(r, c, q),
                    None => return Ok(None),
                }
            } else if !rhs.is_zero() {
                return Ok(None);
            }
        }
    }
    Ok(Some(snf.v.mul(&y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::Ring;

    fn check(m: &Matrix) -> SmithForm {
        let s = smith_normal_form(m).unwrap();
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.mul(&s.u_inv).unwrap().is_identity());
        assert!(s.v.mul(&s.v_inv).unwrap().is_identity());
        for r in 0..s.d.rows() {
            for c in 0..s.d.cols() {
                if r != c {
                    assert!(s.d.get(r, c).is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn identity_is_its_own_form() {
        let z = Ring::Integers;
        let s = check(&Matrix::identity(z, 2));
        assert!(s.d.is_identity());
    }

    #[test]
    fn two_by_two_integer_example() {
        // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
        let z = Ring::Integers;
        let s = check(&Matrix::from_rows(z, &[&[2, 4], &[6, 8]]));
        assert_eq!(s.invariant_factors(), vec![z.from_i64(2), z.from_i64(4)]);
    }

    #[test]
    fn zero_matrix() {
        let z = Ring::Integers;
        let s = check(&Matrix::zeros(z, 2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        let z = Ring::Integers;
        let s = check(&Matrix::from_rows(z, &[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariant_factors(), vec![z.from_i64(1), z.from_i64(6)]);
    }

    #[test]
    fn composite_modulus_rejected() {
        let r = Ring::IntegersMod(6);
        let m = Matrix::identity(r, 1);
        assert!(matches!(smith_normal_form(&m), Err(Error::UnsupportedRing(_))));
    }

    #[test]
    fn field_forms_are_zero_one() {
        let q = Ring::Rationals;
        let s = check(&Matrix::from_rows(q, &[&[2, 4], &[6, 8]]));
        assert_eq!(s.invariant_factors(), vec![q.one(), q.one()]);
        let p = Ring::IntegersMod(5);
        let s = check(&Matrix::from_rows(p, &[&[2, 4], &[1, 2]]));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let z = Ring::Integers;
        let b = Matrix::from_rows(z, &[&[3, -1], &[0, 5]]);
        assert_eq!(solve_linear(&Matrix::identity(z, 2), &b).unwrap(), Some(b));
        let two = Matrix::from_rows(z, &[&[2]]);
        let three = Matrix::from_rows(z, &[&[3]]);
        assert_eq!(solve_linear(&two, &three).unwrap(), None);
        let q = Ring::Rationals;
        let x = solve_linear(&Matrix::from_rows(q, &[&[2]]), &Matrix::from_rows(q, &[&[3]]))
            .unwrap()
            .unwrap();
        assert_eq!(x.get(0, 0), &Scalar::new(3.into(), 2.into()));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let z = Ring::Integers;
        let a = Matrix::zeros(z, 2, 2);
        let b = Matrix::zeros(z, 3, 1);
        assert!(matches!(solve_linear(&a, &b), Err(Error::DimensionMismatch(_))));
    }
}
