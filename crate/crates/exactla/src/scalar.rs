use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::LaError;

/// Field descriptor: the rationals or a prime field `GF(p)` with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Validates the modulus.
    pub fn prime(p: u64) -> Result<Field, LaError> {
        if p >= 1 << 31 {
            return Err(LaError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LaError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p as u64,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// Every element of a prime field in the order `0, 1, ..., p-1`.
    pub fn elements(self) -> Result<Vec<Scalar>, LaError> {
        match self {
            Field::Rational => Err(LaError::InfiniteField),
            Field::Prime(p) => Ok((0..p).map(|v| Scalar::Residue { value: v, modulus: p }).collect()),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = LaError;

    fn from_str(s: &str) -> Result<Field, LaError> {
        let t = s.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| LaError::Parse(s.to_string()))?;
        let p: u64 = inner.trim().parse().map_err(|_| LaError::Parse(s.to_string()))?;
        Field::prime(p)
    }
}

/// An element of `Q` (always in lowest terms, positive denominator) or of
/// `GF(p)` (a residue in `[0, p)`).
///
/// The arithmetic operators panic when the two operands live in different
/// fields; use the `checked_*` methods where that can happen on user input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn from_i64(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar::Rational(q)
    }

    /// Parses `"3"`, `"-2"` or `"3/4"`. Fractions in `GF(p)` are read as
    /// `n * d^-1`.
    pub fn parse(field: Field, s: &str) -> Result<Scalar, LaError> {
        let err = || LaError::Parse(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| err())?;
        let d: BigInt = den.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(LaError::DivisionByZero);
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let nv = n.mod_floor(&pb).to_u32().ok_or_else(err)?;
                let dv = d.mod_floor(&pb).to_u32().ok_or_else(err)?;
                let ns = Scalar::Residue { value: nv, modulus: p };
                let ds = Scalar::Residue { value: dv, modulus: p };
                Ok(&ns * &ds.inv()?)
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Residue value for prime-field scalars.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, LaError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                })
            }
            _ => Err(LaError::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, LaError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                })
            }
            _ => Err(LaError::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, LaError> {
        self.checked_add(&-other)
    }

    pub fn inv(&self) -> Result<Scalar, LaError> {
        if self.is_zero() {
            return Err(LaError::DivisionByZero);
        }
        match self {
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Residue { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let mut base = *value as u64;
                let mut e = p - 2;
                let mut acc = 1u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                Ok(Scalar::Residue { value: acc as u32, modulus: *modulus })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let s = Scalar::parse(Field::Rational, "6/-4").unwrap();
        assert_eq!(s.to_string(), "-3/2");
    }

    #[test]
    fn residue_fraction_uses_inverse() {
        let f = Field::prime(7).unwrap();
        let s = Scalar::parse(f, "3/4").unwrap();
        // 4^-1 = 2 mod 7
        assert_eq!(s.residue(), Some(6));
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(Field::prime(4), Err(LaError::NotPrime(4)));
        assert_eq!("GF(4)".parse::<Field>(), Err(LaError::NotPrime(4)));
        assert!(Field::prime(1 << 31).is_err());
        assert_eq!("GF(2147483647)".parse::<Field>(), Ok(Field::Prime(2147483647)));
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = Field::Rational.one();
        let b = Field::Prime(3).one();
        assert!(matches!(a.checked_add(&b), Err(LaError::FieldMismatch(_, _))));
        assert!(Field::Prime(3).one().checked_mul(&Field::Prime(5).one()).is_err());
    }

    #[test]
    fn large_modulus_products_do_not_overflow() {
        let f = Field::Prime(2147483647);
        let a = Scalar::from_i64(f, -1);
        assert_eq!((&a * &a).residue(), Some(1));
        assert_eq!((&a * &a.inv().unwrap()).residue(), Some(1));
    }

    #[test]
    fn big_rationals_stay_exact() {
        let mut s = Field::Rational.one();
        let two = Scalar::from_i64(Field::Rational, 2);
        for _ in 0..200 {
            s = &s * &two;
        }
        let back = (0..200).fold(s, |acc, _| &acc * &two.inv().unwrap());
        assert!(back.is_one());
    }
}
