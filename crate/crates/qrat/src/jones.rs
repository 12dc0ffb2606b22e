//! Special values of `R_α`, `S_α` at the roots of unity `-1`, `ω`, `i`, `-ω`,
//! the divisibility criteria for `[2]_q`, `[3]_q`, `q²+1`, `[4]_q`, and the
//! normalized Jones polynomial `J_α(q) = q·R_α + (1-q)·S_α` of the rational
//! link `L(α)` with its special-value classification.
//!
//! Evaluations are computed directly in `ℤ[ω]` and `ℤ[i]` from the negative
//! continued fraction, so sweeping thousands of fractions stays cheap; the
//! polynomial path gives the same answers (and the tests check that).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::contfrac::negative_cf;
use crate::cyclo::{Eisenstein, Gaussian};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::poly::QPoly;
use crate::qdeform::q_deform;

/// Minimal ring interface for evaluating the matrix recurrences at a fixed
/// root of unity.
trait CycloValue: Clone {
    fn val_zero() -> Self;
    fn val_one() -> Self;
    fn val_add(&self, rhs: &Self) -> Self;
    fn val_sub(&self, rhs: &Self) -> Self;
    fn val_mul(&self, rhs: &Self) -> Self;
}

impl CycloValue for Eisenstein {
    fn val_zero() -> Self {
        Eisenstein::zero()
    }
    fn val_one() -> Self {
        Eisenstein::one()
    }
    fn val_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn val_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn val_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl CycloValue for Gaussian {
    fn val_zero() -> Self {
        Gaussian::zero()
    }
    fn val_one() -> Self {
        Gaussian::one()
    }
    fn val_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn val_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn val_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl CycloValue for BigInt {
    fn val_zero() -> Self {
        BigInt::zero()
    }
    fn val_one() -> Self {
        BigInt::one()
    }
    fn val_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn val_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn val_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// `[n]_v = 1 + v + … + v^{n-1}`.
fn qint_at<R: CycloValue>(n: u64, v: &R) -> R {
    let mut acc = R::val_zero();
    let mut power = R::val_one();
    for _ in 0..n {
        acc = acc.val_add(&power);
        power = power.val_mul(v);
    }
    acc
}

fn pow_at<R: CycloValue>(v: &R, n: u64) -> R {
    let mut acc = R::val_one();
    for _ in 0..n {
        acc = acc.val_mul(v);
    }
    acc
}

/// `(R_α(v), S_α(v))` for any finite α, evaluated at a unit `v` with given
/// inverse: negative continued-fraction product for `α > 1`, shift pullback
/// `R_α(v) = v⁻ⁿ(R_{α+n}(v) - [n]_v S(v))` otherwise.
fn rs_at<R: CycloValue>(alpha: &Frac, v: &R, v_inv: &R) -> Result<(R, R)> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    if alpha > &Frac::one() {
        let cf = negative_cf(alpha)?;
        let mut r = R::val_one();
        let mut s = R::val_zero();
        for c in cf.terms().iter().rev() {
            let c = u64::try_from(c).map_err(|_| Error::Internal("cf term out of range".into()))?;
            // (r, s) ← ([c]_v·r - v^{c-1}·s, r)
            let new_r = qint_at(c, v).val_mul(&r).val_sub(&pow_at(v, c - 1).val_mul(&s));
            s = std::mem::replace(&mut r, new_r);
        }
        return Ok((r, s));
    }
    let n = Frac::one().sub(alpha)?.floor() + 1;
    let n = u64::try_from(&n).map_err(|_| Error::Internal("shift out of range".into()))?;
    let (r_up, s) = rs_at(&alpha.add_int(n), v, v_inv)?;
    let r = pow_at(v_inv, n).val_mul(&r_up.val_sub(&qint_at(n, v).val_mul(&s)));
    Ok((r, s))
}

/// `(R_α(ω), S_α(ω))`.
pub fn rs_at_omega(alpha: &Frac) -> Result<(Eisenstein, Eisenstein)> {
    rs_at(alpha, &Eisenstein::omega(), &Eisenstein::omega_sq())
}

/// `(R_α(i), S_α(i))`.
pub fn rs_at_i(alpha: &Frac) -> Result<(Gaussian, Gaussian)> {
    rs_at(alpha, &Gaussian::i(), &(-&Gaussian::i()))
}

/// `(R_α(-ω), S_α(-ω))`.
pub fn rs_at_minus_omega(alpha: &Frac) -> Result<(Eisenstein, Eisenstein)> {
    let v = -&Eisenstein::omega();
    let v_inv = -&Eisenstein::omega_sq();
    rs_at(alpha, &v, &v_inv)
}

/// `(R_α(-1), S_α(-1))`.
pub fn rs_at_minus_one(alpha: &Frac) -> Result<(BigInt, BigInt)> {
    let minus_one = BigInt::from(-1);
    rs_at(alpha, &minus_one, &minus_one)
}

/// Exact values of `R_α` and `S_α` at `-1`, `ω`, `i`, `-ω`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialValueReport {
    pub alpha: Frac,
    pub at_minus1: (BigInt, BigInt),
    pub at_omega: (Eisenstein, Eisenstein),
    pub at_i: (Gaussian, Gaussian),
    pub at_minus_omega: (Eisenstein, Eisenstein),
}

pub fn special_values(alpha: &Frac) -> Result<SpecialValueReport> {
    Ok(SpecialValueReport {
        alpha: alpha.clone(),
        at_minus1: rs_at_minus_one(alpha)?,
        at_omega: rs_at_omega(alpha)?,
        at_i: rs_at_i(alpha)?,
        at_minus_omega: rs_at_minus_omega(alpha)?,
    })
}

impl SpecialValueReport {
    /// Membership in the sets the special-value theorems guarantee:
    /// `R(-1), S(-1) ∈ {0,±1}`, `R(ω), S(ω) ∈ {0,±1,±ω,±ω²}`,
    /// `R(i), S(i) ∈ {0,±1,±i,±(1+i),±(1-i)}` (no claim at `-ω`).
    pub fn memberships_hold(&self) -> bool {
        let int_ok = |v: &BigInt| v.magnitude() <= &1u8.into();
        let omega_ok = |v: &Eisenstein| v.norm() <= BigInt::one();
        let i_ok = |v: &Gaussian| v.norm() <= BigInt::from(2);
        int_ok(&self.at_minus1.0)
            && int_ok(&self.at_minus1.1)
            && omega_ok(&self.at_omega.0)
            && omega_ok(&self.at_omega.1)
            && i_ok(&self.at_i.0)
            && i_ok(&self.at_i.1)
    }
}

/// Divisibility of `S_α` by the small cyclotomic polynomials, decided by
/// actual division: `[2]_q ⟺ 2|s`, `[3]_q ⟺ 3|s`, `q²+1 ⟺ [4]_q ⟺ 4|s`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DivisibilityFlags {
    pub by_q2: bool,
    pub by_q3: bool,
    pub by_q_squared_plus_one: bool,
    pub by_q4: bool,
}

pub fn divisibility(alpha: &Frac) -> Result<DivisibilityFlags> {
    let s = q_deform(alpha)?.s_poly().clone();
    let divides = |d: &QPoly| s.divrem(d).map(|(_, rem)| rem.is_zero());
    Ok(DivisibilityFlags {
        by_q2: divides(&QPoly::qint(2))?,
        by_q3: divides(&QPoly::qint(3))?,
        by_q_squared_plus_one: divides(&QPoly::from_ints(&[1, 0, 1]))?,
        by_q4: divides(&QPoly::qint(4))?,
    })
}

/// Symbolic class of a special value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CyclotomicClass {
    Zero,
    /// norm 1
    Unit,
    /// `unit·(1-ω)`, squared modulus 3
    UnitTimesOneMinusOmega,
    /// `unit·(1±i)`, squared modulus 2
    UnitTimesOnePlusI,
}

impl fmt::Display for CyclotomicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            CyclotomicClass::Zero => "zero",
            CyclotomicClass::Unit => "unit",
            CyclotomicClass::UnitTimesOneMinusOmega => "unit*(1-w)",
            CyclotomicClass::UnitTimesOnePlusI => "unit*(1+-i)",
        };
        write!(f, "{text}")
    }
}

/// Classify by squared modulus (0, 1, 3 are the possibilities that occur).
pub fn classify_eisenstein(v: &Eisenstein) -> Option<CyclotomicClass> {
    let n = v.norm();
    if n.is_zero() {
        Some(CyclotomicClass::Zero)
    } else if n.is_one() {
        Some(CyclotomicClass::Unit)
    } else if n == BigInt::from(3) {
        Some(CyclotomicClass::UnitTimesOneMinusOmega)
    } else {
        None
    }
}

/// Classify by squared modulus (0, 1, 2 are the possibilities that occur).
pub fn classify_gaussian(v: &Gaussian) -> Option<CyclotomicClass> {
    let n = v.norm();
    if n.is_zero() {
        Some(CyclotomicClass::Zero)
    } else if n.is_one() {
        Some(CyclotomicClass::Unit)
    } else if n == BigInt::from(2) {
        Some(CyclotomicClass::UnitTimesOnePlusI)
    } else {
        None
    }
}

/// The normalized Jones polynomial of `L(α)` and its special values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonesReport {
    pub alpha: Frac,
    pub j_poly: QPoly,
    pub at_minus1: BigInt,
    pub at_omega: Eisenstein,
    pub at_i: Gaussian,
    pub at_minus_omega: Eisenstein,
}

/// `J_α(q) = q·R_α(q) + (1-q)·S_α(q)` for `α > 1`, with `J_1 = 1` and
/// `J_∞ = q`; the constant term is 1 by construction.  Every rational link is
/// isotopic to some `L(β)` with `β > 1`, so smaller finite α are rejected.
pub fn jones(alpha: &Frac) -> Result<JonesReport> {
    let j_poly = if alpha.is_infinite() {
        QPoly::from_ints(&[0, 1])
    } else if alpha == &Frac::one() {
        QPoly::one()
    } else if alpha > &Frac::one() {
        let x = q_deform(alpha)?;
        let r = x
            .r_poly()
            .ok_or_else(|| Error::Internal("R_α not a polynomial for α > 1".into()))?;
        crate::qdeform::jones_from_pair(&r, x.s_poly())
    } else {
        return Err(Error::Domain(format!(
            "J_α is computed for α > 1 (or α = 1, ∞); {alpha} ≤ 1 — shift to the isotopic link with α > 1"
        )));
    };
    let lp = crate::poly::LaurentPoly::from(j_poly.clone());
    Ok(JonesReport {
        alpha: alpha.clone(),
        at_minus1: lp.eval_int(&BigInt::from(-1))?,
        at_omega: lp.eval_eisenstein(),
        at_i: lp.eval_gaussian(),
        at_minus_omega: lp.eval_minus_omega(),
        j_poly,
    })
}

/// Special values of `J_α` with their symbolic classes:
/// `|J(-1)|` is 2 exactly when `r` is even; `J(ω)` is a unit unless `3 | r`,
/// in which case it lands in `(1-ω)·units`; `J(i)` follows `r mod 4`
/// (0 exactly when `r ≡ 2`); `J(-ω)` is always a unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonesClassification {
    pub alpha: Frac,
    pub at_minus1: BigInt,
    pub at_omega: (Eisenstein, CyclotomicClass),
    pub at_i: (Gaussian, CyclotomicClass),
    pub at_minus_omega: (Eisenstein, CyclotomicClass),
}

pub fn jones_special_classification(alpha: &Frac) -> Result<JonesClassification> {
    let report = jones(alpha)?;
    let omega_class = classify_eisenstein(&report.at_omega).ok_or_else(|| {
        Error::Internal(format!("J_{alpha}(ω) outside the guaranteed classes"))
    })?;
    let i_class = classify_gaussian(&report.at_i).ok_or_else(|| {
        Error::Internal(format!("J_{alpha}(i) outside the guaranteed classes"))
    })?;
    let minus_omega_class = classify_eisenstein(&report.at_minus_omega).ok_or_else(|| {
        Error::Internal(format!("J_{alpha}(-ω) outside the guaranteed classes"))
    })?;
    Ok(JonesClassification {
        alpha: alpha.clone(),
        at_minus1: report.at_minus1,
        at_omega: (report.at_omega, omega_class),
        at_i: (report.at_i, i_class),
        at_minus_omega: (report.at_minus_omega, minus_omega_class),
    })
}

/// `|S_{α_l}(-ω)|²` for `α_l = [[3,3,…,3]]` (`l` threes); the sequence grows
/// without bound, witnessing that `{S_α(-ω)}` is an infinite set.
pub fn triple_ladder_norms(l_max: usize) -> Vec<BigInt> {
    let v = -&Eisenstein::omega();
    // M⁻(3) at -ω acts as (r,s) ← ([3]_{-ω}·r - ω²·s, r)
    let coeff = qint_at(3, &v);
    let pow2 = pow_at(&v, 2);
    let mut r = Eisenstein::one();
    let mut s = Eisenstein::zero();
    let mut norms = Vec::with_capacity(l_max);
    for _ in 0..l_max {
        let new_r = coeff.val_mul(&r).val_sub(&pow2.val_mul(&s));
        s = std::mem::replace(&mut r, new_r);
        norms.push(s.norm());
    }
    norms
}
