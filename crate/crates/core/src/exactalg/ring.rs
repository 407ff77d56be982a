use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ring elements are stored as reduced fractions. Over `Integers` and
/// `IntegersMod` every stored value has denominator one, and residues are
/// kept in `[0, n)`.
pub type Scalar = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::IntegersMod(n) => write!(f, "Zmod:{n}"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            _ => {
                let n = s
                    .strip_prefix("Zmod:")
                    .and_then(|n| n.parse::<u64>().ok())
                    .ok_or_else(|| Error::Config(format!("unknown ring '{s}'")))?;
                Ring::modular(n)
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedRing(format!("Zmod:{n} needs n >= 2")));
        }
        Ok(Ring::IntegersMod(n))
    }

    /// True when the ring is a field (Q or Z/p).
    pub fn is_field(&self) -> bool {
        match self {
            Ring::Integers => false,
            Ring::Rationals => true,
            Ring::IntegersMod(n) => is_prime(*n),
        }
    }

    /// Smith normal form and linear solving need a PID.
    pub fn require_pid(&self) -> Result<()> {
        match self {
            Ring::IntegersMod(n) if !is_prime(*n) => Err(Error::UnsupportedRing(format!(
                "Zmod:{n} is not a principal ideal domain"
            ))),
            _ => Ok(()),
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.normalize(Scalar::from_integer(BigInt::from(v)))
    }

    /// Brings an arbitrary fraction into canonical form for this ring.
    /// Callers only hand over fractions that are valid ring elements.
    pub fn normalize(&self, v: Scalar) -> Scalar {
        match self {
            Ring::Rationals => v,
            Ring::Integers => {
                debug_assert!(v.is_integer(), "non-integer {v} over Z");
                v
            }
            Ring::IntegersMod(n) => {
                let m = BigInt::from(*n);
                Scalar::from_integer(v.to_integer().mod_floor(&m))
            }
        }
    }

    /// Parses "3", "-2" or "3/2" into a ring element.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Config(format!("bad ring element '{s}'"));
        let v = match s.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(bad());
                }
                Scalar::new(a, b)
            }
            None => Scalar::from_integer(s.trim().parse().map_err(|_| bad())?),
        };
        match self {
            Ring::Rationals => Ok(v),
            _ if !v.is_integer() => Err(bad()),
            _ => Ok(self.normalize(v)),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a - b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.normalize(-a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a * b)
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        match self {
            Ring::Integers => a.abs().is_one(),
            Ring::Rationals => !a.is_zero(),
            Ring::IntegersMod(n) => {
                let g = a.to_integer().gcd(&BigInt::from(*n));
                g.is_one()
            }
        }
    }

    /// Exact quotient `a / b` when it exists in the ring.
    pub fn divide(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        if b.is_zero() {
            return if a.is_zero() { Some(Scalar::zero()) } else { None };
        }
        match self {
            Ring::Rationals => Some(a / b),
            Ring::Integers => {
                let (q, r) = a.to_integer().div_rem(&b.to_integer());
                r.is_zero().then(|| Scalar::from_integer(q))
            }
            Ring::IntegersMod(n) => {
                let inv = mod_inverse(&b.to_integer(), *n)?;
                Some(self.normalize(a * Scalar::from_integer(inv)))
            }
        }
    }

    /// Euclidean size used for pivot selection: |a| over Z, and 0/1 over
    /// the fields.
    pub(crate) fn euclid_size(&self, a: &Scalar) -> BigInt {
        match self {
            Ring::Integers => a.to_integer().abs(),
            _ if a.is_zero() => BigInt::zero(),
            _ => BigInt::one(),
        }
    }

    /// Euclidean division `a = q*b + r` with `size(r) < size(b)`.
    pub(crate) fn div_rem(&self, a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        match self {
            Ring::Integers => {
                let (q, r) = a.to_integer().div_mod_floor(&b.to_integer());
                (Scalar::from_integer(q), Scalar::from_integer(r))
            }
            _ => (
                self.divide(a, b).expect("division by a unit in a field"),
                Scalar::zero(),
            ),
        }
    }

    /// Canonical associate: positive over Z, one over a field.
    pub(crate) fn normalize_unit(&self, a: &Scalar) -> Scalar {
        match self {
            Ring::Integers if a.is_negative() => -Scalar::one(),
            Ring::Integers => Scalar::one(),
            _ if a.is_zero() => Scalar::one(),
            _ => self.divide(&Scalar::one(), a).expect("field inverse"),
        }
    }
}

fn mod_inverse(a: &BigInt, n: u64) -> Option<BigInt> {
    let m = BigInt::from(n);
    let e = a.mod_floor(&m).extended_gcd(&m);
    e.gcd.is_one().then(|| e.x.mod_floor(&m))
}

/// Formats an element as an integer when possible, else `p/q`.
pub fn scalar_to_json(v: &Scalar) -> serde_json::Value {
    if v.is_integer() {
        let i = v.to_integer();
        if let Ok(small) = i64::try_from(&i) {
            return serde_json::Value::from(small);
        }
    }
    serde_json::Value::from(v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_arithmetic_is_reduced() {
        let r = Ring::modular(5).unwrap();
        assert_eq!(r.from_i64(-1), Scalar::from_integer(4.into()));
        assert_eq!(r.mul(&r.from_i64(3), &r.from_i64(4)), r.from_i64(2));
        assert_eq!(r.divide(&r.one(), &r.from_i64(2)), Some(r.from_i64(3)));
    }

    #[test]
    fn integer_division_is_exact_or_absent() {
        let r = Ring::Integers;
        assert_eq!(r.divide(&r.from_i64(6), &r.from_i64(3)), Some(r.from_i64(2)));
        assert_eq!(r.divide(&r.from_i64(3), &r.from_i64(2)), None);
    }

    #[test]
    fn ring_parsing() {
        assert_eq!("Z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("Zmod:7".parse::<Ring>().unwrap(), Ring::IntegersMod(7));
        assert!("Zmod:1".parse::<Ring>().is_err());
        assert!(Ring::IntegersMod(6).require_pid().is_err());
        assert!(Ring::IntegersMod(7).require_pid().is_ok());
    }
}
