//! Irreducible fractions `r/s` with `s > 0`, plus the point `∞ = 1/0` used by
//! Farey constructions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An irreducible fraction. `den == 0` encodes `∞ = 1/0` (with `num == 1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac {
    num: BigInt,
    den: BigInt,
}

impl Frac {
    /// Reduce and normalize the sign. `0/0` is rejected; `k/0` collapses to `∞`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::Parse("0/0 is not a fraction".into()));
            }
            return Ok(Frac::infinity());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Frac { num, den })
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Frac {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Frac::from_int(0)
    }

    pub fn one() -> Self {
        Frac::from_int(1)
    }

    pub fn infinity() -> Self {
        Frac {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    pub fn ceil(&self) -> BigInt {
        self.num.div_ceil(&self.den)
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `1/α`; maps `0 ↦ ∞` and `∞ ↦ 0`.
    pub fn recip(&self) -> Frac {
        if self.num.is_zero() {
            return Frac::infinity();
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Frac { num, den }
    }

    pub fn add_int(&self, n: impl Into<BigInt>) -> Frac {
        if self.is_infinite() {
            return self.clone();
        }
        Frac {
            num: &self.num + n.into() * &self.den,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Frac) -> Result<Frac> {
        if self.is_infinite() || other.is_infinite() {
            return Err(Error::Infinite);
        }
        Frac::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Frac) -> Result<Frac> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Frac) -> Result<Frac> {
        if self.is_infinite() || other.is_infinite() {
            return Err(Error::Infinite);
        }
        Frac::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.partial_cmp(&Frac::from_int(n)).unwrap()
    }
}

/// Cross-multiplication order; `∞` compares greater than every finite value.
impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Frac) -> Option<Ordering> {
        Some((&self.num * &other.den).cmp(&(&other.num * &self.den)))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `r/s`, `-r/s`, a bare integer, or `inf`.
impl FromStr for Frac {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.len() > crate::MAX_PARSE_DIGITS {
            return Err(Error::Parse("fraction literal too long".into()));
        }
        if text == "inf" {
            return Ok(Frac::infinity());
        }
        let parse_int = |part: &str| -> Result<BigInt> {
            if part.is_empty() {
                return Err(Error::Parse("empty integer".into()));
            }
            BigInt::from_str(part).map_err(|_| Error::Parse(format!("not an integer: {part:?}")))
        };
        match text.split_once('/') {
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = parse_int(den)?;
                if den.is_negative() {
                    return Err(Error::Parse("denominator must be positive".into()));
                }
                Frac::new(num, den)
            }
            None => Ok(Frac::from_int(parse_int(text)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let f = Frac::new(-4, 6).unwrap();
        assert_eq!(f, Frac::new(2, -3).unwrap());
        assert_eq!(f.to_string(), "-2/3");
        assert_eq!(Frac::new(5, 0).unwrap(), Frac::infinity());
        assert!(Frac::new(0, 0).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("7/5".parse::<Frac>().unwrap(), Frac::new(7, 5).unwrap());
        assert_eq!("-3".parse::<Frac>().unwrap(), Frac::from_int(-3));
        assert_eq!("inf".parse::<Frac>().unwrap(), Frac::infinity());
        assert!("3/-5".parse::<Frac>().is_err());
        assert!("".parse::<Frac>().is_err());
        assert!("1/2/3".parse::<Frac>().is_err());
    }

    #[test]
    fn ordering_with_infinity() {
        let a = Frac::new(7, 5).unwrap();
        assert!(a > Frac::one());
        assert!(a < Frac::infinity());
        assert!(Frac::from_int(-2) < Frac::zero());
    }

    #[test]
    fn floor_ceil() {
        let f = Frac::new(7, 5).unwrap();
        assert_eq!(f.floor(), BigInt::from(1));
        assert_eq!(f.ceil(), BigInt::from(2));
        let g = Frac::new(-7, 5).unwrap();
        assert_eq!(g.floor(), BigInt::from(-2));
        assert_eq!(g.ceil(), BigInt::from(-1));
    }

    #[test]
    fn arithmetic() {
        let a = Frac::new(7, 5).unwrap();
        assert_eq!(a.add_int(1), Frac::new(12, 5).unwrap());
        assert_eq!(a.recip(), Frac::new(5, 7).unwrap());
        assert_eq!(Frac::zero().recip(), Frac::infinity());
        assert_eq!(
            a.sub(&Frac::one()).unwrap(),
            Frac::new(2, 5).unwrap()
        );
        assert_eq!(Frac::new(-5, 7).unwrap().recip(), Frac::new(-7, 5).unwrap());
    }
}
