//! Complete factorization of integer polynomials: squarefree decomposition,
//! Cantor–Zassenhaus factorization modulo a small prime, quadratic Hensel
//! lifting to a coefficient bound, and subset recombination.
//!
//! Everything is deterministic: the equal-degree splitting draws from a
//! fixed-seed generator and factor lists are kept in sorted order, so two
//! runs produce identical output.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::QPoly;

/// `unit · Π factorᵏ` reconstructs the input exactly. The unit carries the
/// sign together with the integer content (so it is `±1` for primitive
/// inputs); every factor is primitive, irreducible over `ℚ`, and has a
/// positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(QPoly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> QPoly {
        let mut acc = QPoly::constant(self.unit.clone());
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Greatest common divisor in `ℚ[q]`, returned primitive with positive
/// leading coefficient, computed by a primitive polynomial remainder
/// sequence.
pub fn gcd_q(f: &QPoly, g: &QPoly) -> Result<QPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = f.content_primitive().1;
    let mut b = g.content_primitive().1;
    if a.is_zero() {
        return Ok(b);
    }
    if b.is_zero() {
        return Ok(a);
    }
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r.content_primitive().1;
    }
    Ok(a)
}

/// Pseudo-remainder: the remainder of `lc(g)^{deg f - deg g + 1} · f` by `g`.
fn pseudo_rem(f: &QPoly, g: &QPoly) -> QPoly {
    let dg = g.degree().expect("nonzero divisor");
    let lc = g.leading_coeff();
    let mut rem: Vec<BigInt> = f.coeffs().to_vec();
    let df = f.degree().expect("nonzero dividend");
    if df < dg {
        return f.clone();
    }
    for k in (dg..=df).rev() {
        let head = rem[k].clone();
        for c in rem.iter_mut().take(k + 1) {
            *c *= &lc;
        }
        if !head.is_zero() {
            for (j, gj) in g.coeffs().iter().enumerate() {
                rem[k - dg + j] -= gj * &head;
            }
        }
        debug_assert!(rem[k].is_zero());
    }
    rem.truncate(dg);
    QPoly::new(rem)
}

/// Complete factorization over `ℤ`.
pub fn factor_z(f: &QPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, prim) = f.content_primitive();
    let mut factors: Vec<(QPoly, u32)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&prim)? {
        for irred in factor_squarefree(&g)? {
            merge_factor(&mut factors, irred, mult);
        }
    }
    factors.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    let result = Factorization {
        unit: content,
        factors,
    };
    debug_assert_eq!(result.product(), *f);
    Ok(result)
}

/// `true` iff the polynomial (of degree ≥ 1) is irreducible over `ℚ`.
/// A reduction that stays irreducible modulo some small prime answers early;
/// otherwise the full factorization decides.
pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::Domain("irreducibility needs degree ≥ 1".into()));
    }
    if deg == 1 {
        return Ok(true);
    }
    let prim = f.content_primitive().1;
    // squarefree test first: a repeated factor means reducible
    let deriv = prim.derivative();
    if gcd_q(&prim, &deriv)?.degree() != Some(0) {
        return Ok(false);
    }
    for p in suitable_primes(&prim, 4) {
        match modp::irreducible_mod_p(&prim, p) {
            Some(true) => return Ok(true),
            Some(false) | None => continue,
        }
    }
    Ok(factor_z(&prim)?.is_irreducible())
}

/// Degree-pattern evidence gathered modulo several primes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModularEvidence {
    /// No proper factor degree is compatible with every tested prime.
    ConfirmsIrreducible,
    /// The patterns allow (but do not prove) a factorization.
    Inconclusive,
}

/// Spot-check a claimed-irreducible polynomial against the degree patterns of
/// its reductions modulo three primes: intersect the subset-sums of the
/// modular factor degrees; an empty intersection confirms irreducibility and
/// a nonempty one is inconclusive (patterns alone can never contradict).
pub fn modular_degree_check(f: &QPoly) -> Result<ModularEvidence> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg <= 1 {
        return Ok(ModularEvidence::ConfirmsIrreducible);
    }
    let prim = f.content_primitive().1;
    let mut feasible: Option<Vec<bool>> = None;
    for p in suitable_primes(&prim, 3) {
        let degrees = modp::ddf_degrees(&prim, p);
        // subset sums of the modular degrees
        let mut sums = vec![false; deg + 1];
        sums[0] = true;
        for d in degrees {
            for k in (d..=deg).rev() {
                if sums[k - d] {
                    sums[k] = true;
                }
            }
        }
        feasible = Some(match feasible {
            None => sums,
            Some(old) => old.iter().zip(&sums).map(|(a, b)| *a && *b).collect(),
        });
    }
    let feasible = feasible.ok_or_else(|| Error::Internal("no usable primes".into()))?;
    if feasible[1..deg].iter().any(|&ok| ok) {
        Ok(ModularEvidence::Inconclusive)
    } else {
        Ok(ModularEvidence::ConfirmsIrreducible)
    }
}

fn merge_factor(factors: &mut Vec<(QPoly, u32)>, f: QPoly, mult: u32) {
    for (existing, m) in factors.iter_mut() {
        if *existing == f {
            *m += mult;
            return;
        }
    }
    factors.push((f, mult));
}

fn cmp_poly(a: &QPoly, b: &QPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Yun's algorithm: primitive input, output (squarefree primitive factor,
/// multiplicity) with positive leading coefficients.
fn squarefree_decomposition(f: &QPoly) -> Result<Vec<(QPoly, u32)>> {
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let deriv = f.derivative();
    let a0 = gcd_q(f, &deriv)?;
    if a0.degree() == Some(0) {
        out.push((f.clone(), 1));
        return Ok(out);
    }
    let mut b = f
        .div_exact(&a0)
        .ok_or_else(|| Error::Internal("squarefree: inexact division".into()))?;
    let mut c = deriv
        .div_exact(&a0)
        .ok_or_else(|| Error::Internal("squarefree: inexact division".into()))?;
    let mut d = &c - &b.derivative();
    let mut mult = 1u32;
    loop {
        let a = gcd_q(&b, &d)?;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), mult));
        }
        b = b
            .div_exact(&a)
            .ok_or_else(|| Error::Internal("squarefree: inexact division".into()))?;
        if b.degree() == Some(0) {
            break;
        }
        c = d
            .div_exact(&a)
            .ok_or_else(|| Error::Internal("squarefree: inexact division".into()))?;
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Odd primes for which the reduction stays squarefree, smallest first.
fn suitable_primes(f: &QPoly, how_many: usize) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 3u64;
    let mut tried = 0;
    while primes.len() < how_many && tried < 200 {
        if (f.leading_coeff().mod_floor(&BigInt::from(p))).is_zero() {
            // degree would drop
        } else if modp::squarefree_mod_p(f, p) {
            primes.push(p);
        }
        tried += 1;
        p = next_prime(p);
    }
    primes
}

fn next_prime(p: u64) -> u64 {
    let mut n = p + 2;
    loop {
        if is_small_prime(n) {
            return n;
        }
        n += 2;
    }
}

fn is_small_prime(n: u64) -> bool {
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

/// Factor a primitive squarefree polynomial (positive leading coefficient)
/// into irreducibles: choose the prime minimizing the modular factor count,
/// Hensel-lift past the coefficient bound, recombine subsets.
fn factor_squarefree(g: &QPoly) -> Result<Vec<QPoly>> {
    let deg = g.degree().expect("nonzero");
    if deg <= 1 {
        return Ok(vec![g.clone()]);
    }

    // reduce to the monic associate b^{n-1}·g(x/b)
    let lc = g.leading_coeff();
    let monic = monic_associate(g);

    let candidates = suitable_primes(&monic, 4);
    if candidates.is_empty() {
        return Err(Error::Internal("no squarefree prime reduction found".into()));
    }
    let mut best: Option<(u64, Vec<modp::ModPoly>)> = None;
    for p in candidates {
        let factors = modp::factor_mod_p(&monic, p);
        if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    let (p, mod_factors) = best.unwrap();
    if mod_factors.len() == 1 {
        return Ok(vec![g.clone()]);
    }

    // lift to p^(2^j) ≥ 2B+1 with B = 2^deg · Σ|coeffs|
    let bound: BigInt = BigInt::from(2).pow(deg as u32)
        * monic
            .coeffs()
            .iter()
            .map(|c| c.magnitude().to_owned())
            .sum::<BigUint>()
            .to_bigint();
    let target: BigInt = bound * 2 + 1;
    let lifted = hensel::lift_factorization(&monic, &mod_factors, p, &target)?;
    let modulus = lifted.modulus.clone();

    // subset recombination in increasing subset size
    let mut remaining: Vec<QPoly> = lifted.factors;
    let mut current = monic;
    let mut found: Vec<QPoly> = Vec::new();
    let mut trials: u64 = 0;
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let mut chooser = SubsetChooser::new(remaining.len(), size);
        while let Some(subset) = chooser.next() {
            trials += 1;
            if trials > 1 << 20 {
                return Err(Error::Internal(
                    "subset recombination exceeded 2^20 trials".into(),
                ));
            }
            let candidate = centered_product(subset.iter().map(|&i| &remaining[i]), &modulus);
            if let Some(quotient) = current.div_exact(&candidate) {
                found.push(candidate);
                let mut keep = Vec::new();
                for (i, f) in remaining.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f);
                    }
                }
                remaining = keep;
                current = quotient;
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.degree().unwrap_or(0) > 0 || found.is_empty() {
        found.push(current);
    }

    // map factors of the monic associate back through x ↦ bx
    let result = found
        .into_iter()
        .map(|u| {
            if lc.is_one() {
                u
            } else {
                substitute_scaled(&u, &lc).content_primitive().1
            }
        })
        .collect();
    Ok(result)
}

/// `b^{n-1}·g(x/b)`: the monic integer polynomial whose factors correspond to
/// the factors of `g`.
fn monic_associate(g: &QPoly) -> QPoly {
    let lc = g.leading_coeff();
    if lc.is_one() {
        return g.clone();
    }
    let n = g.degree().unwrap();
    let coeffs: Vec<BigInt> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k == n {
                BigInt::one()
            } else {
                c * lc.pow((n - 1 - k) as u32)
            }
        })
        .collect();
    QPoly::new(coeffs)
}

/// `u(b·x)`.
fn substitute_scaled(u: &QPoly, b: &BigInt) -> QPoly {
    QPoly::new(
        u.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * b.pow(k as u32))
            .collect(),
    )
}

trait ToBigIntExt {
    fn to_bigint(&self) -> BigInt;
}

impl ToBigIntExt for BigUint {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(self.clone())
    }
}

/// Product of lifted factors with coefficients centered into `(-m/2, m/2]`.
fn centered_product<'a>(factors: impl Iterator<Item = &'a QPoly>, modulus: &BigInt) -> QPoly {
    let mut acc = QPoly::one();
    for f in factors {
        acc = &acc * f;
    }
    let half = modulus / 2;
    QPoly::new(
        acc.coeffs()
            .iter()
            .map(|c| {
                let c = c.mod_floor(modulus);
                if c > half {
                    c - modulus
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Lexicographic k-subset enumerator over `0..n`.
struct SubsetChooser {
    n: usize,
    indices: Vec<usize>,
    started: bool,
}

impl SubsetChooser {
    fn new(n: usize, k: usize) -> Self {
        SubsetChooser {
            n,
            indices: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.indices.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.indices[i] != i + self.n - k {
                break;
            }
        }
        self.indices[i] += 1;
        for j in i + 1..k {
            self.indices[j] = self.indices[j - 1] + 1;
        }
        Some(&self.indices)
    }
}

/// Arithmetic in `F_p[x]` for odd primes `p < 2³¹`.
pub(crate) mod modp {
    use super::*;

    #[derive(Clone, PartialEq, Eq, Debug)]
    pub struct ModPoly {
        pub p: u64,
        pub coeffs: Vec<u64>,
    }

    impl ModPoly {
        pub fn from_qpoly(f: &QPoly, p: u64) -> ModPoly {
            let pb = BigInt::from(p);
            let coeffs = f
                .coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap())
                .collect();
            ModPoly { p, coeffs }.trimmed()
        }

        pub fn zero(p: u64) -> ModPoly {
            ModPoly { p, coeffs: vec![] }
        }

        pub fn one(p: u64) -> ModPoly {
            ModPoly { p, coeffs: vec![1] }
        }

        pub fn x(p: u64) -> ModPoly {
            ModPoly { p, coeffs: vec![0, 1] }
        }

        pub fn is_zero(&self) -> bool {
            self.coeffs.is_empty()
        }

        pub fn degree(&self) -> Option<usize> {
            self.coeffs.len().checked_sub(1)
        }

        fn trimmed(mut self) -> ModPoly {
            while self.coeffs.last() == Some(&0) {
                self.coeffs.pop();
            }
            self
        }

        pub fn sub(&self, rhs: &ModPoly) -> ModPoly {
            let p = self.p;
            let mut coeffs = self.coeffs.clone();
            if coeffs.len() < rhs.coeffs.len() {
                coeffs.resize(rhs.coeffs.len(), 0);
            }
            for (k, c) in rhs.coeffs.iter().enumerate() {
                coeffs[k] = (coeffs[k] + p - c) % p;
            }
            ModPoly { p, coeffs }.trimmed()
        }

        pub fn mul(&self, rhs: &ModPoly) -> ModPoly {
            if self.is_zero() || rhs.is_zero() {
                return ModPoly::zero(self.p);
            }
            let p = self.p as u128;
            let mut coeffs = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    coeffs[i + j] = (coeffs[i + j] + a as u128 * b as u128) % p;
                }
            }
            ModPoly {
                p: self.p,
                coeffs: coeffs.into_iter().map(|c| c as u64).collect(),
            }
            .trimmed()
        }

        pub fn scale(&self, c: u64) -> ModPoly {
            let p = self.p;
            ModPoly {
                p,
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|&a| ((a as u128 * c as u128) % p as u128) as u64)
                    .collect(),
            }
            .trimmed()
        }

        pub fn monic(&self) -> ModPoly {
            match self.coeffs.last() {
                None | Some(1) => self.clone(),
                Some(&lc) => self.scale(mod_inv(lc, self.p)),
            }
        }

        pub fn rem(&self, g: &ModPoly) -> ModPoly {
            let dg = g.degree().expect("mod rem by zero");
            let p = self.p;
            let inv_lc = mod_inv(*g.coeffs.last().unwrap(), p);
            let mut rem = self.coeffs.clone();
            let mut k = rem.len();
            while k > dg {
                k -= 1;
                let head = rem[k];
                if head == 0 {
                    continue;
                }
                let c = (head as u128 * inv_lc as u128 % p as u128) as u64;
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    let t = (gj as u128 * c as u128) % p as u128;
                    let idx = k - dg + j;
                    rem[idx] = ((rem[idx] as u128 + p as u128 - t) % p as u128) as u64;
                }
            }
            ModPoly { p, coeffs: rem }.trimmed()
        }

        pub fn divrem(&self, g: &ModPoly) -> (ModPoly, ModPoly) {
            let dg = g.degree().expect("mod div by zero");
            let p = self.p;
            if self.degree().map_or(true, |df| df < dg) {
                return (ModPoly::zero(p), self.clone());
            }
            let inv_lc = mod_inv(*g.coeffs.last().unwrap(), p);
            let mut rem = self.coeffs.clone();
            let mut quot = vec![0u64; rem.len() - dg];
            let mut k = rem.len();
            while k > dg {
                k -= 1;
                let head = rem[k];
                if head == 0 {
                    continue;
                }
                let c = (head as u128 * inv_lc as u128 % p as u128) as u64;
                quot[k - dg] = c;
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    let t = (gj as u128 * c as u128) % p as u128;
                    let idx = k - dg + j;
                    rem[idx] = ((rem[idx] as u128 + p as u128 - t) % p as u128) as u64;
                }
            }
            (
                ModPoly { p, coeffs: quot }.trimmed(),
                ModPoly { p, coeffs: rem }.trimmed(),
            )
        }

        pub fn gcd(&self, rhs: &ModPoly) -> ModPoly {
            let mut a = self.clone();
            let mut b = rhs.clone();
            while !b.is_zero() {
                let r = a.rem(&b);
                a = b;
                b = r;
            }
            a.monic()
        }

        pub fn derivative(&self) -> ModPoly {
            let p = self.p;
            ModPoly {
                p,
                coeffs: self
                    .coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, &c)| ((k as u128 % p as u128) * c as u128 % p as u128) as u64)
                    .collect(),
            }
            .trimmed()
        }

        /// `self^e mod m` with a big exponent.
        pub fn pow_mod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
            let mut result = ModPoly::one(self.p);
            let base = self.rem(m);
            let bits = e.bits();
            for i in (0..bits).rev() {
                result = result.mul(&result).rem(m);
                if e.bit(i) {
                    result = result.mul(&base).rem(m);
                }
            }
            result
        }
    }

    pub fn mod_inv(a: u64, p: u64) -> u64 {
        // Fermat: p prime
        let mut result = 1u128;
        let mut base = a as u128 % p as u128;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        result as u64
    }

    pub fn squarefree_mod_p(f: &QPoly, p: u64) -> bool {
        let fp = ModPoly::from_qpoly(f, p);
        if fp.degree() != f.degree() {
            return false;
        }
        let d = fp.derivative();
        if d.is_zero() {
            return false;
        }
        fp.gcd(&d).degree() == Some(0)
    }

    /// Multiset of irreducible-factor degrees of the (squarefree) reduction.
    pub fn ddf_degrees(f: &QPoly, p: u64) -> Vec<usize> {
        let fp = ModPoly::from_qpoly(f, p).monic();
        distinct_degree(&fp)
            .into_iter()
            .flat_map(|(d, product)| {
                let count = product.degree().unwrap() / d;
                std::iter::repeat(d).take(count)
            })
            .collect()
    }

    /// `Some(true)` when the reduction is irreducible, `Some(false)` when it
    /// properly splits, `None` when the prime is unusable.
    pub fn irreducible_mod_p(f: &QPoly, p: u64) -> Option<bool> {
        if !squarefree_mod_p(f, p) {
            return None;
        }
        let fp = ModPoly::from_qpoly(f, p).monic();
        let deg = fp.degree().unwrap();
        let stages = distinct_degree(&fp);
        Some(stages.len() == 1 && stages[0].0 == deg)
    }

    /// Distinct-degree stages `(d, product of all degree-d factors)`.
    fn distinct_degree(f: &ModPoly) -> Vec<(usize, ModPoly)> {
        let p = f.p;
        let mut out = Vec::new();
        let mut f = f.clone();
        let mut h = ModPoly::x(p);
        let mut d = 0usize;
        while f.degree().unwrap_or(0) > 0 {
            d += 1;
            if 2 * d > f.degree().unwrap() {
                let deg = f.degree().unwrap();
                out.push((deg, f));
                break;
            }
            h = h.pow_mod(&BigUint::from(p), &f);
            let g = h.sub(&ModPoly::x(p)).gcd(&f);
            if g.degree().unwrap_or(0) > 0 {
                out.push((d, g.clone()));
                f = f.divrem(&g).0;
                h = h.rem(&f);
            }
        }
        out
    }

    /// Fixed seed for the equal-degree splitting stream.
    const FACTOR_SEED: u64 = 0x5eed_0fac_7052_a55e;

    /// Monic irreducible factors of a monic squarefree reduction, sorted.
    pub fn factor_mod_p(f: &QPoly, p: u64) -> Vec<ModPoly> {
        let fp = ModPoly::from_qpoly(f, p).monic();
        let mut rng = SplitMix::new(FACTOR_SEED ^ p);
        let mut out = Vec::new();
        for (d, product) in distinct_degree(&fp) {
            equal_degree(&product, d, &mut rng, &mut out);
        }
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        out
    }

    /// Cantor–Zassenhaus equal-degree splitting (p odd).
    fn equal_degree(f: &ModPoly, d: usize, rng: &mut SplitMix, out: &mut Vec<ModPoly>) {
        let deg = f.degree().unwrap();
        if deg == d {
            out.push(f.monic());
            return;
        }
        let p = f.p;
        let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let r = random_poly(p, deg, rng);
            if r.degree().unwrap_or(0) == 0 {
                continue;
            }
            let g = r.gcd(f);
            if g.degree().unwrap_or(0) > 0 && g.degree().unwrap() < deg {
                let (q, _) = f.divrem(&g);
                equal_degree(&g, d, rng, out);
                equal_degree(&q, d, rng, out);
                return;
            }
            let m = r.pow_mod(&e, f).sub(&ModPoly::one(p));
            let g = m.gcd(f);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < deg {
                let (q, _) = f.divrem(&g);
                equal_degree(&g, d, rng, out);
                equal_degree(&q, d, rng, out);
                return;
            }
        }
    }

    fn random_poly(p: u64, below_degree: usize, rng: &mut SplitMix) -> ModPoly {
        let coeffs = (0..below_degree).map(|_| rng.next() % p).collect();
        ModPoly { p, coeffs }.trimmed()
    }

    /// Fixed-seed splitmix64 stream so factorizations are reproducible.
    pub struct SplitMix {
        state: u64,
    }

    impl SplitMix {
        pub fn new(seed: u64) -> Self {
            SplitMix { state: seed }
        }

        pub fn next(&mut self) -> u64 {
            self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }
    }
}

/// Quadratic Hensel lifting of a monic modular factorization.
mod hensel {
    use super::modp::{mod_inv, ModPoly};
    use super::*;

    pub struct Lifted {
        pub factors: Vec<QPoly>,
        pub modulus: BigInt,
    }

    /// Coefficients kept in `[0, m)`.
    type MPoly = Vec<BigInt>;

    fn trim(mut f: MPoly) -> MPoly {
        while f.last().map_or(false, |c| c.is_zero()) {
            f.pop();
        }
        f
    }

    fn from_modpoly(f: &ModPoly) -> MPoly {
        f.coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn from_qpoly(f: &QPoly, m: &BigInt) -> MPoly {
        trim(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
    }

    fn to_qpoly(f: &MPoly) -> QPoly {
        QPoly::new(f.clone())
    }

    fn add(a: &MPoly, b: &MPoly, m: &BigInt) -> MPoly {
        let mut out = a.clone();
        if out.len() < b.len() {
            out.resize(b.len(), BigInt::zero());
        }
        for (k, c) in b.iter().enumerate() {
            out[k] = (&out[k] + c).mod_floor(m);
        }
        trim(out)
    }

    fn sub(a: &MPoly, b: &MPoly, m: &BigInt) -> MPoly {
        let mut out = a.clone();
        if out.len() < b.len() {
            out.resize(b.len(), BigInt::zero());
        }
        for (k, c) in b.iter().enumerate() {
            out[k] = (&out[k] - c).mod_floor(m);
        }
        trim(out)
    }

    fn mul(a: &MPoly, b: &MPoly, m: &BigInt) -> MPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out.into_iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Division by a monic divisor, coefficients mod `m`.
    fn divrem_monic(a: &MPoly, b: &MPoly, m: &BigInt) -> (MPoly, MPoly) {
        let db = b.len() - 1;
        debug_assert!(b.last().map_or(false, |c| c.is_one()));
        if a.len() <= db {
            return (Vec::new(), a.clone());
        }
        let mut rem = a.clone();
        let mut quot = vec![BigInt::zero(); a.len() - db];
        for k in (db..a.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            quot[k - db] = c.clone();
            for (j, bj) in b.iter().enumerate() {
                rem[k - db + j] = (&rem[k - db + j] - bj * &c).mod_floor(m);
            }
        }
        (trim(quot), trim(rem))
    }

    /// One quadratic Hensel step: from `f ≡ g·h (mod m)` with
    /// `s·g + t·h ≡ 1 (mod m)` (g, h monic, deg s < deg h, deg t < deg g)
    /// to the same data mod `m²`.
    #[allow(clippy::too_many_arguments)]
    fn step(
        f: &QPoly,
        g: &MPoly,
        h: &MPoly,
        s: &MPoly,
        t: &MPoly,
        m: &BigInt,
    ) -> (MPoly, MPoly, MPoly, MPoly, BigInt) {
        let m2 = m * m;
        let fq = from_qpoly(f, &m2);
        let e = sub(&fq, &mul(g, h, &m2), &m2);
        let (q, r) = divrem_monic(&mul(s, &e, &m2), h, &m2);
        let g_new = add(&add(g, &mul(t, &e, &m2), &m2), &mul(&q, g, &m2), &m2);
        let h_new = add(h, &r, &m2);
        let b = sub(
            &add(&mul(s, &g_new, &m2), &mul(t, &h_new, &m2), &m2),
            &vec![BigInt::one()],
            &m2,
        );
        let (c, d) = divrem_monic(&mul(s, &b, &m2), &h_new, &m2);
        let s_new = sub(s, &d, &m2);
        let t_new = sub(&sub(t, &mul(t, &b, &m2), &m2), &mul(&c, &g_new, &m2), &m2);
        (g_new, h_new, s_new, t_new, m2)
    }

    /// Bezout cofactors in `F_p[x]`: `s·g + t·h = 1`, `deg s < deg h`,
    /// `deg t < deg g`.
    fn bezout(g: &ModPoly, h: &ModPoly) -> (ModPoly, ModPoly) {
        let p = g.p;
        let (mut r0, mut r1) = (g.clone(), h.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 = gcd = constant (coprime inputs)
        let inv = mod_inv(r0.coeffs[0], p);
        let s = s0.scale(inv).rem(h);
        // t = (1 - s·g)/h
        let num = ModPoly::one(p).sub(&s.mul(g));
        let (t, rem) = num.divrem(h);
        debug_assert!(rem.is_zero());
        (s, t)
    }

    /// Lift `f ≡ Π factors (mod p)` (everything monic) to a factorization
    /// modulo `p^(2^j) ≥ target` by a balanced factor tree.
    pub fn lift_factorization(
        f: &QPoly,
        factors: &[ModPoly],
        p: u64,
        target: &BigInt,
    ) -> Result<Lifted> {
        let mut out = Vec::new();
        let mut modulus_out = BigInt::from(p);
        lift_node(f, factors, p, target, &mut out, &mut modulus_out)?;
        Ok(Lifted {
            factors: out,
            modulus: modulus_out,
        })
    }

    fn lift_node(
        f: &QPoly,
        factors: &[modp::ModPoly],
        p: u64,
        target: &BigInt,
        out: &mut Vec<QPoly>,
        modulus_out: &mut BigInt,
    ) -> Result<()> {
        if factors.len() == 1 {
            // the lifted factor is f itself reduced mod the final modulus
            let mut m = BigInt::from(p);
            while &m < target {
                m = &m * &m;
            }
            *modulus_out = m.clone();
            out.push(to_qpoly(&from_qpoly(f, &m)));
            return Ok(());
        }
        // split balanced by total degree
        let total: usize = factors.iter().map(|f| f.degree().unwrap()).sum();
        let mut left_deg = 0;
        let mut split = factors.len() - 1;
        for (i, fac) in factors.iter().enumerate() {
            left_deg += fac.degree().unwrap();
            if 2 * left_deg >= total && i + 1 < factors.len() {
                split = i + 1;
                break;
            }
        }
        let (lhs, rhs) = factors.split_at(split);
        let g0 = lhs.iter().fold(ModPoly::one(p), |acc, f| acc.mul(f));
        let h0 = rhs.iter().fold(ModPoly::one(p), |acc, f| acc.mul(f));
        let (s0, t0) = bezout(&g0, &h0);

        let mut m = BigInt::from(p);
        let mut g = from_modpoly(&g0);
        let mut h = from_modpoly(&h0);
        let mut s = from_modpoly(&s0);
        let mut t = from_modpoly(&t0);
        while &m < target {
            let (g2, h2, s2, t2, m2) = step(f, &g, &h, &s, &t, &m);
            g = g2;
            h = h2;
            s = s2;
            t = t2;
            m = m2;
        }
        *modulus_out = m.clone();
        let g_poly = to_qpoly(&g);
        let h_poly = to_qpoly(&h);
        debug_assert_eq!(
            from_qpoly(&(&g_poly * &h_poly), &m),
            from_qpoly(f, &m),
            "hensel step lost the factorization"
        );
        lift_leaves(&g_poly, lhs, p, &m, out)?;
        lift_leaves(&h_poly, rhs, p, &m, out)?;
        Ok(())
    }

    /// Recurse within a lifted branch: the branch product is known modulo the
    /// final modulus, and the modulus tower `p^(2^j)` is reproduced exactly,
    /// so the same machinery applies with that modulus as the target.
    fn lift_leaves(
        f: &QPoly,
        factors: &[ModPoly],
        p: u64,
        modulus: &BigInt,
        out: &mut Vec<QPoly>,
    ) -> Result<()> {
        let mut m_out = modulus.clone();
        lift_node(f, factors, p, modulus, out, &mut m_out)?;
        debug_assert_eq!(&m_out, modulus);
        Ok(())
    }
}
