//! Exact arithmetic in `ℤ[ω]` and `ℤ[i]`, and evaluation of (Laurent)
//! polynomials at the roots of unity `ω = (-1+√-3)/2`, `i`, and `-ω`.
//!
//! Elements are stored on the integral bases `{1, ω}` (with `ω² = -1-ω`) and
//! `{1, i}`; the representation is unique, so no reduction step is needed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{LaurentPoly, QPoly};

/// `a + bω` with `ω² = -1 - ω`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Eisenstein {
    pub a: BigInt,
    pub b: BigInt,
}

impl Eisenstein {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Eisenstein {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Eisenstein::new(0, 0)
    }

    pub fn one() -> Self {
        Eisenstein::new(1, 0)
    }

    pub fn omega() -> Self {
        Eisenstein::new(0, 1)
    }

    /// `ω² = -1 - ω`.
    pub fn omega_sq() -> Self {
        Eisenstein::new(-1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Squared modulus `|a+bω|² = a² - ab + b²`, an exact integer.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// The six units `±1, ±ω, ±ω²`.
    pub fn units() -> [Eisenstein; 6] {
        [
            Eisenstein::one(),
            -&Eisenstein::one(),
            Eisenstein::omega(),
            -&Eisenstein::omega(),
            Eisenstein::omega_sq(),
            -&Eisenstein::omega_sq(),
        ]
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Symbolic rendition for the twelve elements of norm ≤ 3 that the
    /// special-value theorems name (`-w^2`, `1-w`, …); coordinates otherwise.
    pub fn symbol(&self) -> String {
        let named: [(Eisenstein, &str); 13] = [
            (Eisenstein::zero(), "0"),
            (Eisenstein::one(), "1"),
            (-&Eisenstein::one(), "-1"),
            (Eisenstein::omega(), "w"),
            (-&Eisenstein::omega(), "-w"),
            (Eisenstein::omega_sq(), "w^2"),
            (-&Eisenstein::omega_sq(), "-w^2"),
            (Eisenstein::new(1, -1), "1-w"),
            (Eisenstein::new(-1, 1), "-(1-w)"),
            (Eisenstein::new(1, 2), "w(1-w)"),
            (Eisenstein::new(-1, -2), "-w(1-w)"),
            (Eisenstein::new(-2, -1), "w^2(1-w)"),
            (Eisenstein::new(2, 1), "-w^2(1-w)"),
        ];
        for (value, name) in named {
            if *self == value {
                return name.to_string();
            }
        }
        self.to_string()
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bmag = self.b.magnitude();
        let wterm = if bmag.is_one() {
            "w".to_string()
        } else {
            format!("{bmag}w")
        };
        if self.a.is_zero() {
            return write!(f, "{}{}", if self.b.is_negative() { "-" } else { "" }, wterm);
        }
        write!(
            f,
            "{}{}{}",
            self.a,
            if self.b.is_negative() { "-" } else { "+" },
            wterm
        )
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-&self.a, -&self.b)
    }
}

/// `(a+bω)(c+dω) = ac - bd + (ad + bc - bd)ω`.
impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        let bd = &self.b * &rhs.b;
        Eisenstein::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - &bd,
        )
    }
}

/// `a + bi` with `i² = -1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub a: BigInt,
    pub b: BigInt,
}

impl Gaussian {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Gaussian {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Gaussian::new(0, 0)
    }

    pub fn one() -> Self {
        Gaussian::new(1, 0)
    }

    pub fn i() -> Self {
        Gaussian::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Squared modulus `a² + b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.b * &self.b
    }

    pub fn units() -> [Gaussian; 4] {
        [
            Gaussian::one(),
            -&Gaussian::one(),
            Gaussian::i(),
            -&Gaussian::i(),
        ]
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// The eight elements of norm ≤ 2 by name, coordinates otherwise.
    pub fn symbol(&self) -> String {
        let named: [(Gaussian, &str); 9] = [
            (Gaussian::zero(), "0"),
            (Gaussian::one(), "1"),
            (-&Gaussian::one(), "-1"),
            (Gaussian::i(), "i"),
            (-&Gaussian::i(), "-i"),
            (Gaussian::new(1, 1), "1+i"),
            (Gaussian::new(-1, -1), "-(1+i)"),
            (Gaussian::new(1, -1), "1-i"),
            (Gaussian::new(-1, 1), "-(1-i)"),
        ];
        for (value, name) in named {
            if *self == value {
                return name.to_string();
            }
        }
        self.to_string()
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bmag = self.b.magnitude();
        let iterm = if bmag.is_one() {
            "i".to_string()
        } else {
            format!("{bmag}i")
        };
        if self.a.is_zero() {
            return write!(f, "{}{}", if self.b.is_negative() { "-" } else { "" }, iterm);
        }
        write!(
            f,
            "{}{}{}",
            self.a,
            if self.b.is_negative() { "-" } else { "+" },
            iterm
        )
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-&self.a, -&self.b)
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(
            &self.a * &rhs.a - &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl LaurentPoly {
    /// Ring map `q ↦ ω`; `ω⁻¹ = ω²` makes this exact on Laurent polynomials.
    /// Equals the remainder of the body mod `q²+q+1` evaluated at `ω`.
    pub fn eval_eisenstein(&self) -> Eisenstein {
        // bucket coefficients by exponent mod 3, then ω² = -1-ω
        let mut buckets = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        if let Some(lo) = self.min_exp() {
            for (k, c) in self.body().coeffs().iter().enumerate() {
                let exp = (lo + k as i64).rem_euclid(3) as usize;
                buckets[exp] += c;
            }
        }
        let [c0, c1, c2] = buckets;
        Eisenstein::new(c0 - &c2, c1 - &c2)
    }

    /// Ring map `q ↦ i` (`i⁻¹ = -i`); equals reduction mod `q²+1` at `i`.
    pub fn eval_gaussian(&self) -> Gaussian {
        let mut buckets = [
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
        ];
        if let Some(lo) = self.min_exp() {
            for (k, c) in self.body().coeffs().iter().enumerate() {
                let exp = (lo + k as i64).rem_euclid(4) as usize;
                buckets[exp] += c;
            }
        }
        let [c0, c1, c2, c3] = buckets;
        Gaussian::new(c0 - &c2, c1 - &c3)
    }

    /// `q ↦ -ω`, expressed as the sign flip `q ↦ -q` followed by `q ↦ ω`.
    pub fn eval_minus_omega(&self) -> Eisenstein {
        self.flip_sign().eval_eisenstein()
    }
}

impl QPoly {
    pub fn eval_eisenstein(&self) -> Eisenstein {
        LaurentPoly::from(self.clone()).eval_eisenstein()
    }

    pub fn eval_gaussian(&self) -> Gaussian {
        LaurentPoly::from(self.clone()).eval_gaussian()
    }

    pub fn eval_minus_omega(&self) -> Eisenstein {
        LaurentPoly::from(self.clone()).eval_minus_omega()
    }
}
