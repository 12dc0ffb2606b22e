//! Dense integer polynomials and Laurent polynomials in the formal variable `q`.
//!
//! `QPoly` stores coefficients ascending by exponent with the trailing entry
//! nonzero (the zero polynomial is the empty sequence).  `LaurentPoly` is a
//! `QPoly` together with a minimal exponent; the offset is kept tight so that
//! equality is representational equality.  Everything is exact: coefficients
//! are arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial in `q` with integer coefficients, stored densely by ascending
/// exponent. Invariant: empty ⇔ zero, otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    /// Convenience constructor from machine integers, ascending by exponent.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `[n]_q = 1 + q + … + q^{n-1}` for `n ≥ 0` (empty sum for `n = 0`).
    pub fn qint(n: usize) -> Self {
        QPoly {
            coeffs: vec![BigInt::one(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitute `q ↦ -q` (sign flip on odd-degree coefficients).
    pub fn flip_sign(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `f(1)`, the sum of coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Reciprocal polynomial `f^∨(q) = q^{deg f} f(1/q)`: the coefficient
    /// sequence reversed after trimming.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(QPoly::new(coeffs))
    }

    /// `f` is palindromic iff `f^∨ = f`.
    pub fn is_palindromic(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    /// Euclidean division `f = quot·g + rem` with `deg rem < deg g`, valid in
    /// `ℤ[q]` because the divisor's leading coefficient must be `±1`.
    pub fn divrem(&self, g: &QPoly) -> Result<(QPoly, QPoly)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = g.leading_coeff();
        if !lc.magnitude().is_one() {
            return Err(Error::NonUnitLeading(lc.to_string()));
        }
        let dg = g.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = if lc.is_one() {
                rem[k].clone()
            } else {
                -rem[k].clone()
            };
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = gj * &c;
                rem[k - dg + j] -= t;
            }
            quot[k - dg] = c;
        }
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Exact division in `ℤ[q]`, `None` if `g` does not divide `f` over `ℤ`.
    pub fn div_exact(&self, g: &QPoly) -> Option<QPoly> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let dg = g.degree().unwrap();
        let lc = g.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg && !self.is_zero() {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (c, r) = rem[k].div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = gj * &c;
                rem[k - dg + j] -= t;
            }
            quot[k - dg] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(QPoly::new(quot))
        } else {
            None
        }
    }

    pub fn divides(&self, f: &QPoly) -> bool {
        f.div_exact(self).is_some()
    }

    /// Content (gcd of coefficients, carrying the sign of the leading
    /// coefficient) and primitive part with positive leading coefficient.
    pub fn content_primitive(&self) -> (BigInt, QPoly) {
        if self.is_zero() {
            return (BigInt::zero(), QPoly::zero());
        }
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let prim = QPoly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        };
        (content, prim)
    }

    /// JSON form `{"coeffs":[c0,c1,…]}`.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\"coeffs\":[");
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&c.to_string());
        }
        s.push_str("]}");
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let coeffs = obj
            .get("coeffs")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("missing \"coeffs\" array".into()))?;
        if coeffs.len() > crate::MAX_PARSE_TERMS {
            return Err(Error::Parse("coefficient list too long".into()));
        }
        let coeffs = coeffs
            .iter()
            .map(json_number_to_bigint)
            .collect::<Result<Vec<_>>>()?;
        Ok(QPoly::new(coeffs))
    }
}

fn json_number_to_bigint(v: &serde_json::Value) -> Result<BigInt> {
    let n = v
        .as_number()
        .ok_or_else(|| Error::Parse("coefficients must be integers".into()))?;
    let text = n.to_string();
    if text.len() > crate::MAX_PARSE_DIGITS {
        return Err(Error::Parse("integer literal too long".into()));
    }
    BigInt::from_str(&text).map_err(|_| Error::Parse(format!("not an integer: {text}")))
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Pretty-prints in descending powers, matching the usual display style:
/// `q^4+2q^3+2q^2+q+1`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, k as i64, first)?;
            first = false;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, exp: i64, first: bool) -> fmt::Result {
    let mag = c.magnitude();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    if exp == 0 {
        write!(f, "{mag}")
    } else {
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        if exp == 1 {
            write!(f, "q")
        } else {
            write!(f, "q^{exp}")
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (k, c) in short.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] -= c;
        }
        QPoly::new(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly { coeffs }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[k] += c;
        }
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

/// Laurent polynomial: `q^offset · body` with the offset kept tight (the
/// body's constant coefficient is nonzero unless the value is zero).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    offset: i64,
    body: QPoly,
}

impl LaurentPoly {
    pub fn new(offset: i64, body: QPoly) -> Self {
        if body.is_zero() {
            return LaurentPoly {
                offset: 0,
                body,
            };
        }
        let low = body.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if low == 0 {
            LaurentPoly { offset, body }
        } else {
            LaurentPoly {
                offset: offset + low as i64,
                body: QPoly::new(body.coeffs[low..].to_vec()),
            }
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            body: QPoly::zero(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            offset: 0,
            body: QPoly::one(),
        }
    }

    /// `q^k` as a Laurent monomial.
    pub fn q_pow(k: i64) -> Self {
        LaurentPoly {
            offset: k,
            body: QPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn body(&self) -> &QPoly {
        &self.body
    }

    /// Least exponent with nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.body.degree().map(|d| self.offset + d as i64)
    }

    /// Reinterpret as an ordinary polynomial when no negative exponents occur.
    pub fn as_poly(&self) -> Option<QPoly> {
        if self.is_zero() {
            Some(QPoly::zero())
        } else if self.offset >= 0 {
            Some(self.body.shift_up(self.offset as usize))
        } else {
            None
        }
    }

    pub fn mul_q_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            body: self.body.clone(),
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.offset {
            return BigInt::zero();
        }
        self.body.coeff((exp - self.offset) as usize)
    }

    /// Substitute `q ↦ -q`.
    pub fn flip_sign(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let body = if self.offset.rem_euclid(2) == 0 {
            self.body.flip_sign()
        } else {
            -&self.body.flip_sign()
        };
        LaurentPoly {
            offset: self.offset,
            body,
        }
    }

    /// Exact evaluation at an integer. Negative exponents require the result
    /// to stay integral, otherwise `Error::NonIntegral`; `n = 0` with negative
    /// offset is rejected.
    pub fn eval_int(&self, n: &BigInt) -> Result<BigInt> {
        if self.is_zero() {
            return Ok(BigInt::zero());
        }
        if self.offset >= 0 {
            return Ok(self.body.eval(n) * n.pow(self.offset as u32));
        }
        if n.is_zero() {
            return Err(Error::Domain(
                "evaluation at 0 with negative exponents".into(),
            ));
        }
        let value = self.body.eval(n);
        let denom = n.pow((-self.offset) as u32);
        let (quot, rem) = value.div_rem(&denom);
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonIntegral(format!("{value}/{denom}")))
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.body.eval_one()
    }

    /// JSON form `{"offset":k,"coeffs":[…]}`.
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\"offset\":{},\"coeffs\":[", self.offset);
        for (k, c) in self.body.coeffs.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&c.to_string());
        }
        s.push_str("]}");
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let offset = obj
            .get("offset")
            .map(json_number_to_bigint)
            .transpose()?
            .unwrap_or_else(BigInt::zero);
        let offset = i64::try_from(&offset).map_err(|_| Error::Parse("offset too large".into()))?;
        let coeffs = obj
            .get("coeffs")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("missing \"coeffs\" array".into()))?;
        if coeffs.len() > crate::MAX_PARSE_TERMS {
            return Err(Error::Parse("coefficient list too long".into()));
        }
        let coeffs = coeffs
            .iter()
            .map(json_number_to_bigint)
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::new(offset, QPoly::new(coeffs)))
    }
}

impl From<QPoly> for LaurentPoly {
    fn from(p: QPoly) -> Self {
        LaurentPoly::new(0, p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.body.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, self.offset + k as i64, first)?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let offset = self.offset.min(rhs.offset);
        let a = self.body.shift_up((self.offset - offset) as usize);
        let b = rhs.body.shift_up((rhs.offset - offset) as usize);
        LaurentPoly::new(offset, &a + &b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            offset: self.offset + rhs.offset,
            body: &self.body * &rhs.body,
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: if self.is_zero() { 0 } else { self.offset },
            body: -&self.body,
        }
    }
}

/// `[a]_q = (1 - q^a)/(1 - q)` for any integer `a`:
/// `q^{a-1} + … + q + 1` for `a > 0`, `0` for `a = 0`, and
/// `-q^a - q^{a+1} - … - q^{-1}` for `a < 0`.
pub fn qint(a: i64) -> LaurentPoly {
    use std::cmp::Ordering;
    match a.cmp(&0) {
        Ordering::Greater => LaurentPoly::new(0, QPoly::qint(a as usize)),
        Ordering::Equal => LaurentPoly::zero(),
        Ordering::Less => {
            let n = (-a) as usize;
            LaurentPoly::new(a, QPoly::new(vec![BigInt::from(-1); n]))
        }
    }
}

/// 2×2 matrix with Laurent polynomial entries, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl Mat2 {
    pub fn new(
        a: LaurentPoly,
        b: LaurentPoly,
        c: LaurentPoly,
        d: LaurentPoly,
    ) -> Self {
        Mat2 {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Mat2::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    pub fn mat_mul(&self, rhs: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| -> LaurentPoly {
            &(&self.entries[i][0] * &rhs.entries[0][j])
                + &(&self.entries[i][1] * &rhs.entries[1][j])
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Apply to a column vector.
    pub fn mat_apply(&self, v: &(LaurentPoly, LaurentPoly)) -> (LaurentPoly, LaurentPoly) {
        (
            &(&self.entries[0][0] * &v.0) + &(&self.entries[0][1] * &v.1),
            &(&self.entries[1][0] * &v.0) + &(&self.entries[1][1] * &v.1),
        )
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.entries[0][0] * &self.entries[1][1])
            - &(&self.entries[0][1] * &self.entries[1][0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_ints(coeffs)
    }

    #[test]
    fn qint_positive_zero_negative() {
        assert_eq!(qint(5), LaurentPoly::from(p(&[1, 1, 1, 1, 1])));
        assert!(qint(0).is_zero());
        // [-2]_q = -q^{-2} - q^{-1}
        let m2 = qint(-2);
        assert_eq!(m2.min_exp(), Some(-2));
        assert_eq!(m2.coeff(-2), BigInt::from(-1));
        assert_eq!(m2.coeff(-1), BigInt::from(-1));
        assert_eq!(m2.coeff(0), BigInt::zero());
    }

    #[test]
    fn qint_shift_identity() {
        // [a+n]_q = q^n [a]_q + [n]_q for a selection of signs
        for a in -6i64..=6 {
            for n in -6i64..=6 {
                let lhs = qint(a + n);
                let rhs = &qint(a).mul_q_pow(n) + &qint(n);
                assert_eq!(lhs, rhs, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        // E of the r/17 table and its printed reciprocal
        let e = p(&[1, 2, 3, 4, 4, 2, 1]);
        let e_dual = p(&[1, 2, 4, 4, 3, 2, 1]);
        assert_eq!(e.reciprocal().unwrap(), e_dual);
        assert_eq!(QPoly::one().reciprocal().unwrap(), QPoly::one());
        assert_eq!(p(&[1, 2]).reciprocal().unwrap(), p(&[2, 1]));
        assert_eq!(QPoly::zero().reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn palindromic_examples() {
        assert!(QPoly::qint(17).is_palindromic().unwrap());
        let e = p(&[1, 2, 3, 4, 4, 2, 1]);
        assert!(!e.is_palindromic().unwrap());
        assert!(p(&[1, 3, 1]).is_palindromic().unwrap());
    }

    #[test]
    fn divrem_examples() {
        // (q^2+q+1) = q·(q+1) + 1
        let (quot, rem) = p(&[1, 1, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(quot, p(&[0, 1]));
        assert_eq!(rem, p(&[1]));
        // (1+q)(1+q^2) = [4]_q
        assert_eq!(&p(&[1, 1]) * &p(&[1, 0, 1]), QPoly::qint(4));
        // round trip f = q·g + r
        let f = p(&[3, -1, 4, 1, -5, 9]);
        let g = p(&[2, 7, -1]);
        let (quot, rem) = f.divrem(&g).unwrap();
        assert_eq!(&(&quot * &g) + &rem, f);
        assert_eq!(
            p(&[1]).divrem(&QPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            p(&[1, 1]).divrem(&p(&[1, 2])),
            Err(Error::NonUnitLeading(_))
        ));
    }

    #[test]
    fn div_exact_detects_non_divisors() {
        let f = &p(&[1, 1]) * &p(&[-1, 2, 3]);
        assert_eq!(f.div_exact(&p(&[1, 1])), Some(p(&[-1, 2, 3])));
        assert_eq!(f.div_exact(&p(&[1, 0, 1])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2, 2])), None);
    }

    #[test]
    fn laurent_normalization_is_tight() {
        let x = LaurentPoly::new(-3, p(&[0, 0, 5, 1]));
        assert_eq!(x.min_exp(), Some(-1));
        assert_eq!(x.max_exp(), Some(0));
        let y = LaurentPoly::new(4, QPoly::zero());
        assert!(y.is_zero());
        assert_eq!(y.offset(), 0);
    }

    #[test]
    fn laurent_eval_int() {
        let x = qint(-2); // -q^{-2} - q^{-1}
        assert_eq!(x.eval_int(&BigInt::one()).unwrap(), BigInt::from(-2));
        assert_eq!(
            x.eval_int(&BigInt::from(-1)).unwrap(),
            BigInt::zero()
        );
        assert!(matches!(
            x.eval_int(&BigInt::zero()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            x.eval_int(&BigInt::from(3)),
            Err(Error::NonIntegral(_))
        ));
        // q^{-1}(q^2+q) evaluates exactly everywhere
        let y = LaurentPoly::new(-1, p(&[0, 1, 1]));
        assert_eq!(y.eval_int(&BigInt::from(3)).unwrap(), BigInt::from(4));
        assert_eq!(QPoly::qint(5).eval(&BigInt::one()), BigInt::from(5));
    }

    #[test]
    fn display_style() {
        assert_eq!(p(&[1, 1, 2, 2, 1]).to_string(), "q^4+2q^3+2q^2+q+1");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(p(&[1, -2, 1]).to_string(), "q^2-2q+1");
        assert_eq!(qint(-2).to_string(), "-q^-1-q^-2");
    }

    #[test]
    fn json_round_trip() {
        let f = p(&[1, 0, -3, 12]);
        assert_eq!(QPoly::from_json(&f.to_json()).unwrap(), f);
        assert_eq!(f.to_json(), "{\"coeffs\":[1,0,-3,12]}");
        let x = LaurentPoly::new(-2, p(&[-1, -1]));
        assert_eq!(LaurentPoly::from_json(&x.to_json()).unwrap(), x);
        assert!(QPoly::from_json("{\"coeffs\":[1.5]}").is_err());
        assert!(QPoly::from_json("[]").is_err());
    }

    #[test]
    fn mat_mul_column_example() {
        // M_q^-(2)^2 applied to (1,0)ᵀ stays consistent with [[2,2]] = 3/2
        let m = crate::qdeform::mq_minus(2);
        let sq = m.mat_mul(&m);
        let (r, s) = sq.mat_apply(&(LaurentPoly::one(), LaurentPoly::zero()));
        assert_eq!(r.eval_one(), BigInt::from(3));
        assert_eq!(s.eval_one(), BigInt::from(2));
    }
}
