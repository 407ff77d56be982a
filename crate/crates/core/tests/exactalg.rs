use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use cointerval::chaincat::{double_segment, segment, symmetry, tensor_complexes, ChainMap};
use cointerval::exactalg::{smith_normal_form, solve_linear, Matrix, Ring, Scalar};

fn matrix(ring: Ring, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    let data = entries[..rows * cols].iter().map(|&v| ring.from_i64(v)).collect();
    Matrix::from_vec(ring, rows, cols, data).unwrap()
}

fn integer(v: &Scalar) -> BigInt {
    assert!(v.is_integer());
    v.to_integer()
}

fn shapes() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5, proptest::collection::vec(-9i64..10, 16))
}

#[test]
fn worked_example() {
    let m = Matrix::from_rows(Ring::Integers, &[&[2, 4], &[6, 8]]);
    let s = smith_normal_form(&m).unwrap();
    assert_eq!(s.d, Matrix::from_rows(Ring::Integers, &[&[2, 0], &[0, 4]]));
    assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d);
}

#[test]
fn swap_is_an_involution() {
    let ring = Ring::Integers;
    let (x, y) = (segment(ring), double_segment(ring));
    let xy = Arc::new(tensor_complexes(&x, &y).unwrap());
    let yx = Arc::new(tensor_complexes(&y, &x).unwrap());
    let there = symmetry(&x, &y, &xy, &yx).unwrap();
    let back = symmetry(&y, &x, &yx, &xy).unwrap();
    assert_eq!(back.after(&there).unwrap(), ChainMap::identity(&xy));
}

proptest! {
    #[test]
    fn smith_form_over_z((rows, cols, entries) in shapes()) {
        let ring = Ring::Integers;
        let m = matrix(ring, rows, cols, &entries);
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.mul(&s.u_inv).unwrap().is_identity());
        prop_assert!(s.v.mul(&s.v_inv).unwrap().is_identity());
        for r in 0..rows {
            for c in 0..cols {
                prop_assert!(r == c || s.d.get(r, c).is_zero());
            }
        }
        let factors: Vec<BigInt> = s.invariant_factors().iter().map(integer).collect();
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        // The first invariant factor is the gcd of the entries.
        let g = m.entries().iter().map(integer).fold(BigInt::zero(), |a, b| a.gcd(&b));
        match factors.first() {
            Some(d1) => prop_assert_eq!(d1.abs(), g),
            None => prop_assert!(g.is_zero()),
        }
    }

    #[test]
    fn smith_form_over_fields((rows, cols, entries) in shapes(), p in prop_oneof![Just(0u64), Just(5), Just(7)]) {
        let ring = if p == 0 { Ring::Rationals } else { Ring::IntegersMod(p) };
        let m = matrix(ring, rows, cols, &entries);
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        for f in s.invariant_factors() {
            prop_assert!(ring.is_unit(&f));
        }
    }

    #[test]
    fn solving_recovers_a_solution((rows, cols, entries) in shapes(), xs in proptest::collection::vec(-5i64..6, 4)) {
        let ring = Ring::Integers;
        let a = matrix(ring, rows, cols, &entries);
        let x = matrix(ring, cols, 1, &xs);
        let b = a.mul(&x).unwrap();
        let y = solve_linear(&a, &b).unwrap();
        prop_assert!(y.is_some());
        prop_assert_eq!(a.mul(&y.unwrap()).unwrap(), b);
    }
}
