//! Exact scalars: residues modulo a small prime and arbitrary-precision
//! rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The ground field of every algebra: GF(p) for a prime `p < 2^16`, or ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u32),
    Rationals,
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !(2..65536).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 65536")));
        }
        Ok(Field::Prime(p))
    }

    /// Characteristic of the field (0 for ℚ).
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p as u64),
            Field::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { value: 0, modulus: *p },
            Field::Rationals => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(*p as i64) as u32,
                modulus: *p,
            },
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// The `index`-th element in a fixed enumeration of a finite field.
    pub fn element(&self, index: u64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: (index % *p as u64) as u32,
                modulus: *p,
            },
            Field::Rationals => self.from_i64(index as i64),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }

    /// Parses `"3"`, `"-2"`, `"-2/7"`; the unicode minus sign is accepted.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let err = || Error::ScalarParse {
            text: text.to_string(),
            field: *self,
        };
        let cleaned = text.trim().replace('\u{2212}', "-");
        let (num, den) = match cleaned.split_once('/') {
            Some((n, d)) => (n.trim().to_string(), d.trim().to_string()),
            None => (cleaned.clone(), "1".to_string()),
        };
        let num = BigInt::from_str(&num).map_err(|_| err())?;
        let den = BigInt::from_str(&den).map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        match self {
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &m) + &m) % &m;
                    u32::try_from(r).expect("residue fits in u32")
                };
                let n = Scalar::Mod {
                    value: reduce(&num),
                    modulus: *p,
                };
                let d = Scalar::Mod {
                    value: reduce(&den),
                    modulus: *p,
                };
                let inv = d.inv().ok_or_else(err)?;
                Ok(&n * &inv)
            }
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `GF(p)`, `gf p`, `GF:p`, `p`, `Q`, `QQ`, `rationals`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if matches!(lower.as_str(), "q" | "qq" | "rationals" | "rational" | "\u{211a}") {
            return Ok(Field::Rationals);
        }
        let digits = lower
            .trim_start_matches("gf")
            .trim_start_matches("f")
            .trim_matches(|c: char| c == '(' || c == ')' || c == ':' || c.is_whitespace());
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("cannot parse field {t:?}")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Residues live in `[0, modulus)`; rationals are
/// kept reduced with positive denominator (guaranteed by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, modulus: u32 },
    Rational(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
            Scalar::Rational(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, *modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }

    /// Residue as a signed integer in `(-p/2, p/2]`, or the rational itself;
    /// used for human-friendly comparisons such as "coefficient is ±3".
    pub fn symmetric_residue(&self) -> Option<i64> {
        match self {
            Scalar::Mod { value, modulus } => {
                let v = *value as i64;
                let m = *modulus as i64;
                Some(if v > m / 2 { v - m } else { v })
            }
            Scalar::Rational(r) if r.is_integer() => i64::try_from(r.to_integer()).ok(),
            Scalar::Rational(_) => None,
        }
    }

    pub(crate) fn add_assign_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Mod { value, modulus }, Scalar::Mod { value: x, .. }, Scalar::Mod { value: y, .. }) => {
                let m = *modulus as u64;
                *value = ((*value as u64 + (*x as u64) * (*y as u64)) % m) as u32;
            }
            _ => {
                let prod = a * b;
                *self = &*self + &prod;
            }
        }
    }
}

fn pow_mod(base: u32, mut exp: u32, m: u32) -> u32 {
    let m64 = m as u64;
    let mut acc = 1u64 % m64;
    let mut b = base as u64 % m64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m64;
        }
        b = b * b % m64;
        exp >>= 1;
    }
    acc as u32
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    let sign = if r.is_negative() { "-" } else { "" };
                    write!(f, "{sign}{}/{}", r.numer().abs(), r.denom())
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(65521).is_ok());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(65537).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("GF(5)".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("gf 2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert!("GF(6)".parse::<Field>().is_err());
    }

    #[test]
    fn residues_and_inverses() {
        let f = Field::Prime(5);
        let three = f.from_i64(-2);
        assert_eq!(three, f.from_i64(3));
        assert_eq!(&three * &three.inv().unwrap(), f.one());
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(3));
        assert!(f.parse("1/5").is_err());
        assert_eq!(f.from_i64(4).symmetric_residue(), Some(-1));
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rationals;
        let x = q.parse("-4/6").unwrap();
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(q.parse("\u{2212}2/7").unwrap().to_string(), "-2/7");
        assert_eq!((&x + &q.parse("2/3").unwrap()).to_string(), "0");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    #[should_panic(expected = "scalar field mismatch")]
    fn mixed_arithmetic_panics() {
        let _ = &Field::Prime(2).one() + &Field::Prime(3).one();
    }
}
