//! The q-deformation `[α]_q = R_α(q)/S_α(q)` of a rational number, built two
//! independent ways (negative and regular continued-fraction matrix products),
//! together with the shift and complement identities, the `(a,b)_q`
//! polynomials, and the q-deformed Farey sum.
//!
//! The canonical computation path is the negative continued fraction: its
//! expansion is unique, so results are reproducible bit for bit.  The regular
//! path is kept as an independent oracle (the two agree by construction of
//! the theory, and the test suite insists on it).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{self, negative_cf, regular_cf, Parity};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::poly::{qint, LaurentPoly, Mat2, QPoly};

/// A rational together with its numerator and denominator q-polynomials.
///
/// `S_α` is an ordinary polynomial with constant and leading coefficient 1
/// for every α; `R_α` is ordinary for `α ≥ 1`, vanishes at 0 for `0 < α < 1`,
/// and is a genuine Laurent polynomial for `α < 0`, hence the asymmetry in
/// the field types.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRational {
    alpha: Frac,
    r: LaurentPoly,
    s: QPoly,
}

impl QRational {
    pub fn alpha(&self) -> &Frac {
        &self.alpha
    }

    /// `R_α(q)` as a Laurent polynomial (exact for every finite α).
    pub fn r_laurent(&self) -> &LaurentPoly {
        &self.r
    }

    /// `R_α(q)` as an ordinary polynomial, available whenever `α > 0`.
    pub fn r_poly(&self) -> Option<QPoly> {
        self.r.as_poly()
    }

    /// `S_α(q)`.
    pub fn s_poly(&self) -> &QPoly {
        &self.s
    }
}

/// `M_q(a) = [[ [a]_q, q^a ], [1, 0]]`.
pub fn mq(a: i64) -> Mat2 {
    Mat2::new(
        qint(a),
        LaurentPoly::q_pow(a),
        LaurentPoly::one(),
        LaurentPoly::zero(),
    )
}

/// `M_q⁻(a) = [[ [a]_q, -q^{a-1} ], [1, 0]]`.
pub fn mq_minus(a: i64) -> Mat2 {
    Mat2::new(
        qint(a),
        &LaurentPoly::zero() - &LaurentPoly::q_pow(a - 1),
        LaurentPoly::one(),
        LaurentPoly::zero(),
    )
}

/// `[c]_q · f` for `c ≥ 1` via a sliding window over the coefficients.
fn qint_mul(c: usize, f: &QPoly) -> QPoly {
    if f.is_zero() {
        return QPoly::zero();
    }
    if c == 1 {
        return f.clone();
    }
    let coeffs = f.coeffs();
    let mut out = Vec::with_capacity(coeffs.len() + c - 1);
    let mut window = BigInt::zero();
    for k in 0..coeffs.len() + c - 1 {
        if k < coeffs.len() {
            window += &coeffs[k];
        }
        if k >= c {
            window -= &coeffs[k - c];
        }
        out.push(window.clone());
    }
    QPoly::new(out)
}

/// `(R_α, S_α)` for `α > 1` from the negative continued-fraction product
/// `M_q⁻(c₁,…,c_l)(1,0)ᵀ`, kept in `ℤ[q]` throughout.
fn q_deform_from_negative(alpha: &Frac) -> Result<(QPoly, QPoly)> {
    let cf = negative_cf(alpha)?;
    let mut r = QPoly::one();
    let mut s = QPoly::zero();
    for c in cf.terms().iter().rev() {
        let c = u64::try_from(c).map_err(|_| Error::Internal("cf term out of range".into()))? as usize;
        debug_assert!(c >= 2);
        // (r, s) ← ([c]_q·r - q^{c-1}·s, r)
        let mut new_r = qint_mul(c, &r);
        new_r = &new_r - &s.shift_up(c - 1);
        s = std::mem::replace(&mut r, new_r);
    }
    Ok((r, s))
}

/// The q-deformation of any finite rational.
///
/// For `α > 1` this is the negative continued-fraction product; for `α ≤ 1`
/// the value is pulled back from `α + n > 1` through the shift relation
/// `R_α = q⁻ⁿ(R_{α+n} - [n]_q S_{α+n})`, `S_α = S_{α+n}`.
pub fn q_deform(alpha: &Frac) -> Result<QRational> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    if alpha > &Frac::one() {
        let (r, s) = q_deform_from_negative(alpha)?;
        return Ok(QRational {
            alpha: alpha.clone(),
            r: LaurentPoly::from(r),
            s,
        });
    }
    // least n with α + n > 1
    let n = Frac::one().sub(alpha)?.floor() + 1;
    let n = i64::try_from(&n).map_err(|_| Error::Internal("shift out of range".into()))?;
    let base = q_deform(&alpha.add_int(n))?;
    Ok(shift(&base, -n))
}

/// `R_{α+n} = qⁿ R_α + [n]_q S_α`, `S_{α+n} = S_α`.
pub fn shift(x: &QRational, n: i64) -> QRational {
    if n == 0 {
        return x.clone();
    }
    let s_laurent = LaurentPoly::from(x.s.clone());
    let r = &x.r.mul_q_pow(n) + &(&qint(n) * &s_laurent);
    QRational {
        alpha: x.alpha.add_int(n),
        r,
        s: x.s.clone(),
    }
}

/// Independent construction of the same pair through the even-length regular
/// continued fraction: `M̃_q(a₁,…,a_{2m})(1,0)ᵀ = (qR_α, qS_α)ᵀ`.
///
/// Valid for `α > 0` (the case `0 < α ≤ 1` enters with `a₁ ≤ 0` formally
/// substituted); exists as an oracle against [`q_deform`].
pub fn q_deform_regular(alpha: &Frac) -> Result<QRational> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    if !alpha.is_positive() {
        return Err(Error::Domain(format!(
            "regular-cf construction is validated for α > 0 only, got {alpha}; use q_deform"
        )));
    }
    let cf = regular_cf(alpha, Parity::Even)?;
    let mut product = Mat2::identity();
    let mut even_sum: i64 = 0;
    for (idx, a) in cf.terms().iter().enumerate() {
        let a = i64::try_from(a).map_err(|_| Error::Internal("cf term out of range".into()))?;
        let factor = if idx % 2 == 0 {
            mq(a)
        } else {
            even_sum += a;
            invert_variable_mat(&mq(a))
        };
        product = product.mat_mul(&factor);
    }
    let (qr, qs) = product.mat_apply(&(LaurentPoly::one(), LaurentPoly::zero()));
    let r = qr.mul_q_pow(even_sum - 1);
    let s = qs.mul_q_pow(even_sum - 1);
    let s = s
        .as_poly()
        .ok_or_else(|| Error::Internal(format!("S_α not a polynomial for {alpha}")))?;
    Ok(QRational {
        alpha: alpha.clone(),
        r,
        s,
    })
}

/// Substitute `q ↦ q⁻¹` in every entry (turns `M_q` into `M_{q⁻¹}`).
fn invert_variable_mat(m: &Mat2) -> Mat2 {
    let inv = |p: &LaurentPoly| -> LaurentPoly {
        match p.max_exp() {
            None => LaurentPoly::zero(),
            Some(hi) => {
                let mut coeffs = p.body().coeffs().to_vec();
                coeffs.reverse();
                LaurentPoly::new(-hi, QPoly::new(coeffs))
            }
        }
    };
    Mat2::new(
        inv(&m.entries[0][0]),
        inv(&m.entries[0][1]),
        inv(&m.entries[1][0]),
        inv(&m.entries[1][1]),
    )
}

/// The complement identities: for coprime `1 ≤ a ≤ x`,
/// `R_{a/x} = R_{x/(x-a)} - S_{x/(x-a)}` and `S_{a/x} = R_{x/(x-a)}`.
/// Returns `(R_{a/x}, S_{a/x})` computed from the right-hand sides.
pub fn complement_identities(a: &BigInt, x: &BigInt) -> Result<(QPoly, QPoly)> {
    if !a.is_positive() || a > x {
        return Err(Error::Domain(format!("need 1 ≤ a ≤ x, got a={a}, x={x}")));
    }
    if !a.gcd(x).is_one() {
        return Err(Error::NotCoprime(a.to_string(), x.to_string()));
    }
    if a == x {
        // a = x = 1: R_1 = S_1 = 1
        return Ok((QPoly::one(), QPoly::one()));
    }
    let big = q_deform(&Frac::new(x.clone(), x - a)?)?;
    let r_big = big
        .r_poly()
        .ok_or_else(|| Error::Internal("R_{x/(x-a)} not a polynomial".into()))?;
    Ok((&r_big - &big.s_poly().clone(), r_big))
}

/// Memo table for the `(a,b)_q` polynomials of coprime nonnegative pairs.
///
/// The table is not internally synchronized: concurrent scanners keep one
/// table per worker, which matches the results-independent-of-interleaving
/// contract trivially.
#[derive(Default)]
pub struct QPairTable {
    memo: HashMap<(BigInt, BigInt), QPoly>,
}

impl QPairTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `(a,b)_q` by the two-branch recursion
    /// `(a,b)_q = (a-r,r)_q + q(a,b-a)_q` for `a < b` (`r = b mod a`) and
    /// `(a,b)_q = (a-b,b)_q + q^{⌈a/b⌉}(r,b-r)_q` for `a > b` (`r = a mod b`),
    /// with `(1,n)_q = (n,1)_q = [1+n]_q`.  Evaluated iteratively.
    pub fn qpair(&mut self, a: &BigInt, b: &BigInt) -> Result<QPoly> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::Domain(format!("(a,b)_q needs a,b ≥ 0, got ({a},{b})")));
        }
        if !a.gcd(b).is_one() {
            return Err(Error::NotCoprime(a.to_string(), b.to_string()));
        }
        let key = (a.clone(), b.clone());
        let mut stack = vec![key.clone()];
        while let Some((a, b)) = stack.last().cloned() {
            if self.memo.contains_key(&(a.clone(), b.clone())) {
                stack.pop();
                continue;
            }
            if a.is_one() || b.is_one() {
                let n = if a.is_one() { &b } else { &a };
                let n = u64::try_from(n).map_err(|_| Error::Domain("pair too large".into()))?;
                self.memo
                    .insert((a, b), QPoly::qint(n as usize + 1));
                stack.pop();
                continue;
            }
            let (first, second, power) = if a < b {
                let r = b.mod_floor(&a);
                ((&a - &r, r), (a.clone(), &b - &a), 1u64)
            } else {
                let r = a.mod_floor(&b);
                let power = u64::try_from(a.div_ceil(&b))
                    .map_err(|_| Error::Domain("pair too large".into()))?;
                ((&a - &b, b.clone()), (r.clone(), &b - &r), power)
            };
            match (self.memo.get(&first), self.memo.get(&second)) {
                (Some(f), Some(g)) => {
                    let value = f + &g.shift_up(power as usize);
                    self.memo.insert((a, b), value);
                    stack.pop();
                }
                (f, g) => {
                    if f.is_none() {
                        stack.push(first);
                    }
                    if g.is_none() {
                        stack.push(second);
                    }
                }
            }
        }
        Ok(self.memo[&key].clone())
    }
}

/// The q-deformed Farey sum: for Farey neighbors `α, β ≥ 1` with
/// `α♯β = [[c₁,…,c_l]]`,
/// `[α♯β]_q = (R_α + q^{c_l-1} R_β) / (S_α + q^{c_l-1} S_β)`.
pub fn q_farey_sum(alpha: &Frac, beta: &Frac) -> Result<QRational> {
    if alpha.is_infinite() || beta.is_infinite() {
        return Err(Error::Infinite);
    }
    if alpha < &Frac::one() || beta < &Frac::one() {
        return Err(Error::Domain("q-deformed Farey sum needs α, β ≥ 1".into()));
    }
    if !contfrac::is_farey_neighbor(alpha, beta) {
        return Err(Error::Domain(format!("{alpha} and {beta} are not Farey neighbors")));
    }
    let gamma = contfrac::farey_sum(alpha, beta)?;
    let c_last = negative_cf(&gamma)?.terms().last().unwrap().clone();
    let shift = usize::try_from(c_last - 1).map_err(|_| Error::Internal("bad cf".into()))?;
    let (ra, sa) = split_polys(&q_deform(alpha)?)?;
    let (rb, sb) = split_polys(&q_deform(beta)?)?;
    Ok(QRational {
        alpha: gamma,
        r: LaurentPoly::from(&ra + &rb.shift_up(shift)),
        s: &sa + &sb.shift_up(shift),
    })
}

fn split_polys(x: &QRational) -> Result<(QPoly, QPoly)> {
    let r = x
        .r_poly()
        .ok_or_else(|| Error::Internal("expected polynomial numerator".into()))?;
    Ok((r, x.s_poly().clone()))
}

/// Normalized Jones polynomial `J_α(q) = q·R_α + (1-q)·S_α` for `α > 1`,
/// used here for the `(a,p)_q` decomposition check (the full Jones surface
/// lives in [`crate::jones`]).
pub(crate) fn jones_from_pair(r: &QPoly, s: &QPoly) -> QPoly {
    let one_minus_q = QPoly::from_ints(&[1, -1]);
    &r.shift_up(1) + &(&one_minus_q * s)
}

/// Checks `(a,p)_q = J_{p/a}(q) + q(a-r,r)_q` with `r = p mod a`, for
/// coprime `1 ≤ a < p`.  The boundary `a = 1` (where `r = 0`) runs through
/// the base case `(1,0)_q = [1]_q = 1`.
pub fn jones_decomposition_check(a: &BigInt, p: &BigInt, table: &mut QPairTable) -> Result<bool> {
    if !a.is_positive() || a >= p {
        return Err(Error::Domain(format!("need 1 ≤ a < p, got a={a}, p={p}")));
    }
    let lhs = table.qpair(a, p)?;
    let x = q_deform(&Frac::new(p.clone(), a.clone())?)?;
    let (r_poly, s_poly) = split_polys(&x)?;
    let jones = jones_from_pair(&r_poly, &s_poly);
    let rem = p.mod_floor(a);
    let tail = table.qpair(&(a - &rem), &rem)?;
    Ok(lhs == &jones + &tail.shift_up(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Eisenstein;

    fn frac(n: i64, d: i64) -> Frac {
        Frac::new(n, d).unwrap()
    }

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_ints(coeffs)
    }

    #[test]
    fn matrix_generators() {
        let m = mq_minus(2);
        assert_eq!(m.entries[0][0], qint(2));
        assert_eq!(m.entries[0][1].to_string(), "-q");
        assert_eq!(m.entries[1][0], LaurentPoly::one());
        assert!(m.entries[1][1].is_zero());
        let m = mq(0);
        assert!(m.entries[0][0].is_zero());
        assert_eq!(m.entries[0][1], LaurentPoly::one());
        // M_q⁻(3) at q = ω is [[0, -ω²], [1, 0]]
        let m = mq_minus(3);
        assert!(m.entries[0][0].eval_eisenstein().is_zero());
        assert_eq!(
            m.entries[0][1].eval_eisenstein(),
            -&Eisenstein::omega_sq()
        );
    }

    #[test]
    fn q_deform_paper_values() {
        let x = q_deform(&frac(7, 5)).unwrap();
        assert_eq!(x.r_poly().unwrap(), p(&[1, 1, 2, 2, 1]));
        assert_eq!(x.s_poly(), &p(&[1, 1, 2, 1]));

        for n in 2i64..=9 {
            let x = q_deform(&frac(n, 1)).unwrap();
            assert_eq!(x.r_poly().unwrap(), QPoly::qint(n as usize));
            assert_eq!(x.s_poly(), &QPoly::one());
        }

        let x = q_deform(&frac(5, 24)).unwrap();
        assert_eq!(x.s_poly(), &p(&[1, 2, 3, 4, 4, 4, 3, 2, 1]));

        let x = q_deform(&frac(2, 17)).unwrap();
        assert_eq!(x.s_poly(), &p(&[1, 1, 2, 2, 2, 2, 2, 2, 2, 1]));

        assert_eq!(q_deform(&Frac::infinity()), Err(Error::Infinite));
    }

    #[test]
    fn q_deform_below_one_and_negative() {
        // R_1 = S_1 = 1
        let x = q_deform(&Frac::one()).unwrap();
        assert_eq!(x.r_poly().unwrap(), QPoly::one());
        assert_eq!(x.s_poly(), &QPoly::one());
        // 0 < α < 1 has polynomial R with R(0) = 0
        let x = q_deform(&frac(2, 5)).unwrap();
        let r = x.r_poly().unwrap();
        assert_eq!(r.constant_term(), BigInt::zero());
        assert_eq!(r.eval_one(), BigInt::from(2));
        assert_eq!(x.s_poly().eval_one(), BigInt::from(5));
        // α < 0 is a genuine Laurent polynomial
        let x = q_deform(&frac(-7, 5)).unwrap();
        assert!(x.r_laurent().min_exp().unwrap() < 0);
        assert_eq!(x.r_laurent().eval_one(), BigInt::from(-7));
        assert_eq!(x.s_poly().eval_one(), BigInt::from(5));
        // [0]: R = 0
        let x = q_deform(&Frac::zero()).unwrap();
        assert!(x.r_laurent().is_zero());
        assert_eq!(x.s_poly(), &QPoly::one());
    }

    #[test]
    fn regular_construction_matches() {
        // [6/5]_q = [6]_q/[5]_q
        let x = q_deform_regular(&frac(6, 5)).unwrap();
        assert_eq!(x.r_poly().unwrap(), QPoly::qint(6));
        assert_eq!(x.s_poly(), &QPoly::qint(5));
        // 7/5 via [1,2,1,1]
        let a = q_deform_regular(&frac(7, 5)).unwrap();
        let b = q_deform(&frac(7, 5)).unwrap();
        assert_eq!(a.r_laurent(), b.r_laurent());
        assert_eq!(a.s_poly(), b.s_poly());
        // 5/2 via [2,2]
        let x = q_deform_regular(&frac(5, 2)).unwrap();
        assert_eq!(x.r_laurent().eval_one(), BigInt::from(5));
        assert_eq!(x.s_poly().eval_one(), BigInt::from(2));
        assert_eq!(x.r_laurent(), q_deform(&frac(5, 2)).unwrap().r_laurent());
        assert!(q_deform_regular(&frac(-1, 2)).is_err());
    }

    #[test]
    fn oracle_equality_sweep() {
        for s in 1i64..=60 {
            for r in 1..=2 * s + 1 {
                if BigInt::from(r).gcd(&BigInt::from(s)).is_one() {
                    let alpha = frac(r, s);
                    let a = q_deform(&alpha).unwrap();
                    let b = q_deform_regular(&alpha).unwrap();
                    assert_eq!(a.r_laurent(), b.r_laurent(), "{alpha}");
                    assert_eq!(a.s_poly(), b.s_poly(), "{alpha}");
                }
            }
        }
    }

    #[test]
    fn shift_relation() {
        let x = q_deform(&frac(7, 5)).unwrap();
        let shifted = shift(&x, 1);
        let direct = q_deform(&frac(12, 5)).unwrap();
        assert_eq!(shifted, direct);
        assert_eq!(shift(&x, 0), x);
        let round = shift(&shift(&x, 5), -5);
        assert_eq!(round, x);
        let down = shift(&x, -3);
        assert_eq!(down, q_deform(&frac(-8, 5)).unwrap());
    }

    #[test]
    fn complement_examples() {
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let (r, s) = complement_identities(&two, &five).unwrap();
        let direct = q_deform(&frac(2, 5)).unwrap();
        assert_eq!(r, direct.r_poly().unwrap());
        assert_eq!(s, direct.s_poly().clone());
        // S_{2/5} = R_{5/3}
        assert_eq!(
            s,
            q_deform(&frac(5, 3)).unwrap().r_poly().unwrap()
        );
        let one = BigInt::one();
        assert_eq!(
            complement_identities(&one, &one).unwrap(),
            (QPoly::one(), QPoly::one())
        );
        // S_{1/2} = R_{2/1} = [2]_q
        let (_, s) = complement_identities(&one, &two).unwrap();
        assert_eq!(s, QPoly::qint(2));
        assert!(complement_identities(&two, &BigInt::from(4)).is_err());
    }

    #[test]
    fn qpair_examples() {
        let mut table = QPairTable::new();
        assert_eq!(
            table.qpair(&BigInt::one(), &BigInt::from(4)).unwrap(),
            QPoly::qint(5)
        );
        assert_eq!(
            table.qpair(&BigInt::one(), &BigInt::one()).unwrap(),
            QPoly::qint(2)
        );
        // (2,15)_q = R_{17/2}
        let lhs = table.qpair(&BigInt::from(2), &BigInt::from(15)).unwrap();
        let rhs = q_deform(&frac(17, 2)).unwrap().r_poly().unwrap();
        assert_eq!(lhs, rhs);
        // (1,0) and (0,1) are the n = 0 base cases
        assert_eq!(
            table.qpair(&BigInt::one(), &BigInt::zero()).unwrap(),
            QPoly::one()
        );
        assert!(table.qpair(&BigInt::from(2), &BigInt::from(4)).is_err());
        assert!(table
            .qpair(&BigInt::from(-1), &BigInt::from(2))
            .is_err());
    }

    #[test]
    fn q_farey_sum_examples() {
        // 2/1 ♯ 3/1 = 5/2 with c_l = 2
        let x = q_farey_sum(&frac(2, 1), &frac(3, 1)).unwrap();
        let direct = q_deform(&frac(5, 2)).unwrap();
        assert_eq!(x, direct);
        let x = q_farey_sum(&Frac::one(), &frac(2, 1)).unwrap();
        assert_eq!(x, q_deform(&frac(3, 2)).unwrap());
        assert!(q_farey_sum(&frac(2, 1), &frac(2, 1)).is_err());
        assert!(q_farey_sum(&frac(1, 2), &frac(1, 1)).is_err());
    }

    #[test]
    fn jones_decomposition_examples() {
        let mut table = QPairTable::new();
        assert!(jones_decomposition_check(&BigInt::from(2), &BigInt::from(5), &mut table).unwrap());
        assert!(jones_decomposition_check(&BigInt::from(5), &BigInt::from(17), &mut table).unwrap());
        for n in 2i64..=9 {
            assert!(
                jones_decomposition_check(&BigInt::one(), &BigInt::from(n), &mut table).unwrap()
            );
        }
        assert!(jones_decomposition_check(&BigInt::from(3), &BigInt::from(2), &mut table).is_err());
    }

    #[test]
    fn lemma_quotient_step() {
        // R_{x/a} = [c+1]_q R_{a/(a-r)} - q^c S_{a/(a-r)}, S_{x/a} = R_{a/(a-r)}
        for x in 1i64..=60 {
            for a in 1..=x {
                if !BigInt::from(a).gcd(&BigInt::from(x)).is_one() {
                    continue;
                }
                let c = x.div_euclid(a);
                let r = x.rem_euclid(a);
                let inner = if a == 1 {
                    q_deform(&Frac::one()).unwrap()
                } else {
                    q_deform(&frac(a, a - r)).unwrap()
                };
                let inner_r = inner.r_poly().unwrap();
                let inner_s = inner.s_poly().clone();
                let expect_r = &qint_mul(c as usize + 1, &inner_r) - &inner_s.shift_up(c as usize);
                let got = q_deform(&frac(x, a)).unwrap();
                assert_eq!(got.r_poly().unwrap(), expect_r, "{x}/{a}");
                assert_eq!(got.s_poly(), &inner_r, "{x}/{a}");
            }
        }
    }

    #[test]
    fn qrational_invariants_sweep() {
        for s in 1i64..=40 {
            for r in 1..=3 * s {
                if !BigInt::from(r).gcd(&BigInt::from(s)).is_one() {
                    continue;
                }
                let alpha = frac(r, s);
                let x = q_deform(&alpha).unwrap();
                assert_eq!(x.r_laurent().eval_one(), BigInt::from(r));
                assert_eq!(x.s_poly().eval_one(), BigInt::from(s));
                assert_eq!(x.s_poly().constant_term(), BigInt::one());
                assert_eq!(x.s_poly().leading_coeff(), BigInt::one());
                // positivity for α > 0
                let rp = x.r_poly().unwrap();
                assert!(rp.coeffs().iter().all(|c| !c.is_negative()), "{alpha}");
                assert!(x.s_poly().coeffs().iter().all(|c| !c.is_negative()));
                if alpha >= Frac::one() {
                    assert_eq!(rp.constant_term(), BigInt::one());
                    assert_eq!(rp.leading_coeff(), BigInt::one());
                }
            }
        }
    }
}
