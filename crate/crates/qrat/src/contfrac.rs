//! Continued fractions (regular and negative), their integer matrices, Farey
//! neighbors/parents/sums, and the operators `i`, `r`, `ir` on positive
//! rationals.
//!
//! A regular expansion `[a₁,…,aₙ]` nests with `+1/(·)`; the canonical stored
//! form ends with `aₙ ≥ 2` when `n ≥ 2`, and either parity is available via
//! the rewrite `[…,aₙ] = […,aₙ-1,1]`.  A negative expansion `[[c₁,…,c_l]]`
//! nests with `-1/(·)`, has `cᵢ ≥ 2` for `i ≥ 2`, and is unique.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frac::Frac;

/// Requested length parity for a regular expansion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Any,
    Even,
    Odd,
}

/// Regular continued fraction `[a₁,…,aₙ]`: `a₁ ∈ ℤ`, `aᵢ ≥ 1` for `i ≥ 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegularCF {
    terms: Vec<BigInt>,
}

impl RegularCF {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse("regular cf needs at least one term".into()));
        }
        if terms.iter().skip(1).any(|a| !a.is_positive()) {
            return Err(Error::Parse("regular cf terms after the first must be ≥ 1".into()));
        }
        Ok(RegularCF { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self) -> Frac {
        cf_value(&self.terms)
    }

    /// `M(a₁,…,aₙ) = M(a₁)⋯M(aₙ)` with `M(a) = [[a,1],[1,0]]`;
    /// `det = (-1)ⁿ`, and for `α > 1` the first column is `(r, s)ᵀ`.
    pub fn matrix(&self) -> IntMat2 {
        let mut m = IntMat2::identity();
        for a in &self.terms {
            m = m.mul(&IntMat2::new(
                a.clone(),
                BigInt::one(),
                BigInt::one(),
                BigInt::zero(),
            ));
        }
        m
    }

    /// Same value, opposite length parity, via the trailing-one rewrite.
    pub fn toggled_parity(&self) -> RegularCF {
        let mut terms = self.terms.clone();
        let last = terms.last().unwrap();
        if terms.len() >= 2 && last.is_one() {
            terms.pop();
            *terms.last_mut().unwrap() += 1;
        } else {
            *terms.last_mut().unwrap() -= 1;
            terms.push(BigInt::one());
        }
        RegularCF { terms }
    }
}

impl fmt::Display for RegularCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.terms))
    }
}

impl FromStr for RegularCF {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("expected [a1,a2,...]".into()))?;
        RegularCF::new(parse_terms(inner)?)
    }
}

/// Negative continued fraction `[[c₁,…,c_l]]`: `c₁ ∈ ℤ`, `cᵢ ≥ 2` for `i ≥ 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NegativeCF {
    terms: Vec<BigInt>,
}

impl NegativeCF {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse("negative cf needs at least one term".into()));
        }
        if terms.iter().skip(1).any(|c| *c < BigInt::from(2)) {
            return Err(Error::Parse("negative cf terms after the first must be ≥ 2".into()));
        }
        Ok(NegativeCF { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn value(&self) -> Frac {
        let mut m = IntMat2::identity();
        for c in &self.terms {
            m = m.mul(&IntMat2::new(
                c.clone(),
                BigInt::from(-1),
                BigInt::one(),
                BigInt::zero(),
            ));
        }
        Frac::new(m.m[0][0].clone(), m.m[1][0].clone()).expect("cf value")
    }

    /// `M⁻(c₁,…,c_l)` with `M⁻(c) = [[c,-1],[1,0]]`; always in `SL(2,ℤ)`.
    pub fn matrix(&self) -> IntMat2 {
        let mut m = IntMat2::identity();
        for c in &self.terms {
            m = m.mul(&IntMat2::new(
                c.clone(),
                BigInt::from(-1),
                BigInt::one(),
                BigInt::zero(),
            ));
        }
        m
    }
}

impl fmt::Display for NegativeCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}]]", join(&self.terms))
    }
}

impl FromStr for NegativeCF {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse("expected [[c1,c2,...]]".into()))?;
        NegativeCF::new(parse_terms(inner)?)
    }
}

fn join(terms: &[BigInt]) -> String {
    terms
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_terms(inner: &str) -> Result<Vec<BigInt>> {
    if inner.len() > crate::MAX_PARSE_DIGITS {
        return Err(Error::Parse("term list too long".into()));
    }
    let mut terms = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        terms.push(
            BigInt::from_str(part).map_err(|_| Error::Parse(format!("not an integer: {part:?}")))?,
        );
        if terms.len() > crate::MAX_PARSE_TERMS {
            return Err(Error::Parse("too many terms".into()));
        }
    }
    Ok(terms)
}

/// Evaluate `[a₁,…,aₙ]` as the projective action of `M(a₁)⋯M(aₙ)` on `∞`;
/// the empty sequence is `∞ = 1/0`.
pub fn cf_value(terms: &[BigInt]) -> Frac {
    let (mut p, mut q) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    for a in terms {
        let np = a * &p + &p1;
        let nq = a * &q + &q1;
        p1 = std::mem::replace(&mut p, np);
        q1 = std::mem::replace(&mut q, nq);
    }
    Frac::new(p, q).expect("cf value")
}

/// Regular continued fraction of a finite rational by floor-division Euclid;
/// canonical form unless a specific parity is requested.
pub fn regular_cf(alpha: &Frac, parity: Parity) -> Result<RegularCF> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    let mut n = alpha.num().clone();
    let mut d = alpha.den().clone();
    let mut terms = Vec::new();
    loop {
        let (q, r) = n.div_mod_floor(&d);
        terms.push(q);
        if r.is_zero() {
            break;
        }
        n = d;
        d = r;
    }
    let cf = RegularCF { terms };
    let want_even = match parity {
        Parity::Any => return Ok(cf),
        Parity::Even => true,
        Parity::Odd => false,
    };
    if (cf.len() % 2 == 0) == want_even {
        Ok(cf)
    } else {
        Ok(cf.toggled_parity())
    }
}

/// Negative continued fraction by the ceiling recursion
/// `c₁ = ⌈α⌉`, then recurse on `1/(c₁-α)`; unique for every finite rational.
pub fn negative_cf(alpha: &Frac) -> Result<NegativeCF> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    let mut n = alpha.num().clone();
    let mut d = alpha.den().clone();
    let mut terms = Vec::new();
    loop {
        let (q, r) = n.div_mod_ceil(&d);
        terms.push(q);
        if r.is_zero() {
            break;
        }
        // α = c - r/d with 0 < r < d ⟹ recurse on d/r
        n = d;
        d = r;
    }
    Ok(NegativeCF { terms })
}

/// Ceiling division with the (nonnegative) defect: `n = q·d - r`, `0 ≤ r < d`.
trait DivModCeil {
    fn div_mod_ceil(&self, d: &BigInt) -> (BigInt, BigInt);
}

impl DivModCeil for BigInt {
    fn div_mod_ceil(&self, d: &BigInt) -> (BigInt, BigInt) {
        let (q, r) = self.div_mod_floor(d);
        if r.is_zero() {
            (q, r)
        } else {
            (q + 1, d - r)
        }
    }
}

/// 2×2 integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat2 {
    pub m: [[BigInt; 2]; 2],
}

impl IntMat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        IntMat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        IntMat2::new(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn mul(&self, rhs: &IntMat2) -> IntMat2 {
        let e = |i: usize, j: usize| -> BigInt {
            &self.m[i][0] * &rhs.m[0][j] + &self.m[i][1] * &rhs.m[1][j]
        };
        IntMat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// First column as a fraction.
    pub fn first_column(&self) -> (BigInt, BigInt) {
        (self.m[0][0].clone(), self.m[1][0].clone())
    }
}

/// `x/a` and `y/b` are Farey neighbors when `ay - bx = 1` (so `x/a < y/b`;
/// `∞ = 1/0` is allowed).
pub fn is_farey_neighbor(left: &Frac, right: &Frac) -> bool {
    (left.den() * right.num() - right.den() * left.num()).is_one()
}

/// The mediant `x/a ♯ y/b = (x+y)/(a+b)`; irreducible whenever the inputs are
/// Farey neighbors.
pub fn farey_sum(left: &Frac, right: &Frac) -> Result<Frac> {
    Frac::new(left.num() + right.num(), left.den() + right.den())
}

/// The unique Farey-neighbor pair `(left, right)` with `left ♯ right = α`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FareyParent {
    pub left: Frac,
    pub right: Frac,
}

/// Farey parent of `α > 0`, read off the regular continued fraction:
/// dropping the last term gives one parent, lowering it by one gives the
/// other, the integer case getting `∞` for its right parent.
pub fn farey_parent(alpha: &Frac) -> Result<FareyParent> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    if !alpha.is_positive() {
        return Err(Error::Domain(format!("farey parent needs α > 0, got {alpha}")));
    }
    let cf = regular_cf(alpha, Parity::Any)?;
    let terms = cf.terms();
    let n = terms.len();
    if n == 1 {
        return Ok(FareyParent {
            left: Frac::new(terms[0].clone() - 1, 1u8)?,
            right: Frac::infinity(),
        });
    }
    let mut lowered = terms.to_vec();
    *lowered.last_mut().unwrap() -= 1;
    let dropped = &terms[..n - 1];
    let (left, right) = if n % 2 == 1 {
        (cf_value(&lowered), cf_value(dropped))
    } else {
        (cf_value(dropped), cf_value(&lowered))
    };
    Ok(FareyParent { left, right })
}

fn check_positive_finite(alpha: &Frac) -> Result<()> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    if !alpha.is_positive() {
        return Err(Error::Domain(format!(
            "operators i, r, ir are defined on (0,1) ∪ (1,∞), got {alpha}"
        )));
    }
    Ok(())
}

/// `i(α) = 1 - α` on `(0,1)`, extended by `i(α) = (i(α⁻¹))⁻¹` for `α > 1`.
/// `α = 1` is a documented fixed point of all three operators.
pub fn op_i(alpha: &Frac) -> Result<Frac> {
    check_positive_finite(alpha)?;
    match alpha.cmp_int(1) {
        std::cmp::Ordering::Equal => Ok(Frac::one()),
        std::cmp::Ordering::Less => Frac::one().sub(alpha),
        std::cmp::Ordering::Greater => Ok(op_i(&alpha.recip())?.recip()),
    }
}

/// `r(z/c) = a/c` where `(x/a, y/b)` is the Farey parent of `z/c ∈ (0,1)`;
/// equivalently `a ≡ z⁻¹ (mod c)` with `1 ≤ a < c`. Extended by inversion to
/// `α > 1`.
pub fn op_r(alpha: &Frac) -> Result<Frac> {
    check_positive_finite(alpha)?;
    match alpha.cmp_int(1) {
        std::cmp::Ordering::Equal => Ok(Frac::one()),
        std::cmp::Ordering::Less => {
            let a = mod_inverse(alpha.num(), alpha.den());
            Frac::new(a, alpha.den().clone())
        }
        std::cmp::Ordering::Greater => Ok(op_r(&alpha.recip())?.recip()),
    }
}

/// `ir(z/c) = b/c` with `b ≡ -z⁻¹ (mod c)`, `1 ≤ b < c`; extended by
/// inversion to `α > 1`.
pub fn op_ir(alpha: &Frac) -> Result<Frac> {
    check_positive_finite(alpha)?;
    match alpha.cmp_int(1) {
        std::cmp::Ordering::Equal => Ok(Frac::one()),
        std::cmp::Ordering::Less => {
            let a = mod_inverse(alpha.num(), alpha.den());
            Frac::new(alpha.den() - a, alpha.den().clone())
        }
        std::cmp::Ordering::Greater => Ok(op_ir(&alpha.recip())?.recip()),
    }
}

/// Inverse of `z` modulo `c` in `[1, c-1]`; requires `gcd(z, c) = 1`.
fn mod_inverse(z: &BigInt, c: &BigInt) -> BigInt {
    let e = z.extended_gcd(c);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(c)
}
