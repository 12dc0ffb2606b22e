//! Type-A quivers `Q(a₁,…,a_s)` given by alternating blocks of left/right
//! arrows, and their closure polynomials `cl(Q) = Σ ρ_ℓ(Q) q^ℓ` computed by
//! three independent algorithms: subset brute force, a left-to-right transfer
//! DP, and the valley/Δ closed-form decomposition.
//!
//! A closure is a vertex subset closed under arrow targets (if the source of
//! an arrow is marked, so is its target); equivalently it is the support of a
//! subrepresentation of the full interval module, so `ρ₁` counts sinks and
//! the constant and leading coefficients are 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::contfrac::{regular_cf, Parity};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::poly::QPoly;

/// Closure polynomials are ordinary `q`-polynomials.
pub type ClosurePoly = QPoly;

/// Arrow direction between consecutive vertices `i` and `i+1`:
/// `Right` is `i → i+1`, `Left` is `i ← i+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Arrow {
    Left,
    Right,
}

impl Arrow {
    pub fn flipped(self) -> Arrow {
        match self {
            Arrow::Left => Arrow::Right,
            Arrow::Right => Arrow::Left,
        }
    }
}

/// Block-length tuple `(a₁,…,a_s)`: ends may be zero, interior parts must be
/// positive. The quiver `Q(a)` has `Σaᵢ + 1` vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse("composition needs at least one part".into()));
        }
        if parts.len() > 2 && parts[1..parts.len() - 1].iter().any(|&p| p == 0) {
            return Err(Error::Parse("interior parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().sum::<usize>() + 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Text form `a1,a2,...,as`.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        if text.len() > crate::MAX_PARSE_DIGITS {
            return Err(Error::Parse("composition literal too long".into()));
        }
        let mut parts = Vec::new();
        for piece in text.trim().split(',') {
            let piece = piece.trim();
            let value: usize = piece
                .parse()
                .map_err(|_| Error::Parse(format!("not a part: {piece:?}")))?;
            if value > 1 << 20 {
                return Err(Error::Parse("part too large".into()));
            }
            parts.push(value);
            if parts.len() > crate::MAX_PARSE_TERMS {
                return Err(Error::Parse("too many parts".into()));
            }
        }
        Composition::new(parts)
    }
}

/// A type-A quiver as an arrow-direction word. The empty quiver (no vertices
/// at all) is distinct from the single-vertex quiver with no arrows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuiverA {
    Empty,
    Path(Vec<Arrow>),
}

impl QuiverA {
    pub fn single_vertex() -> Self {
        QuiverA::Path(Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            QuiverA::Empty => 0,
            QuiverA::Path(arrows) => arrows.len() + 1,
        }
    }

    pub fn arrows(&self) -> &[Arrow] {
        match self {
            QuiverA::Empty => &[],
            QuiverA::Path(arrows) => arrows,
        }
    }

    /// Alternating blocks: `a₁` left arrows, `a₂` right arrows, … (empty
    /// blocks permitted, so this also builds degenerate shapes like
    /// `Q(0,p₁,p₂)` with `p₁ = 0`).
    pub fn from_blocks(parts: &[usize]) -> Self {
        let mut arrows = Vec::new();
        for (i, &len) in parts.iter().enumerate() {
            let dir = if i % 2 == 0 { Arrow::Left } else { Arrow::Right };
            arrows.extend(std::iter::repeat(dir).take(len));
        }
        QuiverA::Path(arrows)
    }

    pub fn from_composition(c: &Composition) -> Self {
        QuiverA::from_blocks(c.parts())
    }

    /// Canonical composition of a nonempty quiver: leading zero when the word
    /// starts with right arrows, no trailing zero.
    pub fn to_composition(&self) -> Option<Composition> {
        match self {
            QuiverA::Empty => None,
            QuiverA::Path(arrows) => {
                let mut parts = Vec::new();
                let mut dir = Arrow::Left;
                let mut run = 0usize;
                for &a in arrows {
                    if a == dir {
                        run += 1;
                    } else {
                        parts.push(run);
                        dir = a;
                        run = 1;
                    }
                }
                parts.push(run);
                Some(Composition { parts })
            }
        }
    }

    /// Opposite quiver: every arrow reversed; `cl(Q^∨) = cl(Q)^∨`.
    pub fn opposite(&self) -> QuiverA {
        match self {
            QuiverA::Empty => QuiverA::Empty,
            QuiverA::Path(arrows) => {
                QuiverA::Path(arrows.iter().map(|a| a.flipped()).collect())
            }
        }
    }

    /// π-rotation: the word reversed and every arrow flipped; an isomorphic
    /// quiver, so `cl(Q^rot) = cl(Q)`.
    pub fn rotate(&self) -> QuiverA {
        match self {
            QuiverA::Empty => QuiverA::Empty,
            QuiverA::Path(arrows) => {
                QuiverA::Path(arrows.iter().rev().map(|a| a.flipped()).collect())
            }
        }
    }

    /// Vertices (1-based) with no incoming arrow.
    pub fn sources(&self) -> Vec<usize> {
        self.extremal(true)
    }

    /// Vertices (1-based) with no outgoing arrow; `ρ₁ = #sinks`.
    pub fn sinks(&self) -> Vec<usize> {
        self.extremal(false)
    }

    fn extremal(&self, source: bool) -> Vec<usize> {
        let arrows = match self {
            QuiverA::Empty => return Vec::new(),
            QuiverA::Path(arrows) => arrows,
        };
        let n = arrows.len() + 1;
        (1..=n)
            .filter(|&v| {
                // arrow v-1 sits to the left of vertex v, arrow v to the right
                let left_ok = if v == 1 {
                    true
                } else {
                    let a = arrows[v - 2];
                    if source { a == Arrow::Left } else { a == Arrow::Right }
                };
                let right_ok = if v == n {
                    true
                } else {
                    let a = arrows[v - 1];
                    if source { a == Arrow::Right } else { a == Arrow::Left }
                };
                // a source points away on both sides, a sink receives on both
                if source {
                    left_ok && right_ok
                } else {
                    left_ok && right_ok
                }
            })
            .collect()
    }
}

/// Exhaustive `2ⁿ` enumeration of closures, the ground-truth oracle.
/// Capped at 22 vertices.
pub fn closure_poly_bruteforce(q: &QuiverA) -> Result<ClosurePoly> {
    let n = q.vertex_count();
    if n > 22 {
        return Err(Error::Domain(format!(
            "brute-force closure enumeration capped at 22 vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(QPoly::one());
    }
    let arrows = q.arrows();
    let mut right_mask: u32 = 0;
    let mut left_mask: u32 = 0;
    for (i, a) in arrows.iter().enumerate() {
        match a {
            Arrow::Right => right_mask |= 1 << i,
            Arrow::Left => left_mask |= 1 << i,
        }
    }
    let mut counts = vec![BigInt::from(0u8); n + 1];
    for mask in 0u32..(1u32 << n) {
        let shifted = mask >> 1;
        // right arrow i→i+1 forbids source marked, target unmarked
        let viol_r = mask & !shifted & right_mask;
        // left arrow i+1→i forbids source (i+1) marked, target (i) unmarked
        let viol_l = shifted & !mask & left_mask;
        if viol_r == 0 && viol_l == 0 {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(QPoly::new(counts))
}

/// Linear transfer DP over the vertex line, tracking whether the current
/// vertex is in the closure. For a right arrow `(marked, unmarked)` is
/// forbidden; for a left arrow `(unmarked, marked)` is forbidden.
pub fn closure_poly_dp(q: &QuiverA) -> ClosurePoly {
    if q.vertex_count() == 0 {
        return QPoly::one();
    }
    let mut f_in = QPoly::monomial(BigInt::one(), 1);
    let mut f_out = QPoly::one();
    for a in q.arrows() {
        match a {
            Arrow::Right => {
                // next in: from either; next out: only from out
                f_in = (&f_in + &f_out).shift_up(1);
                // f_out unchanged
            }
            Arrow::Left => {
                let new_in = f_in.shift_up(1);
                f_out = &f_in + &f_out;
                f_in = new_in;
            }
        }
    }
    &f_in + &f_out
}

/// Closed-form closure polynomial of a `(p₁,p₂)`-valley
/// (`p₁` right arrows into the sink, `p₂` left arrows into it):
/// `val_q(p₁,p₂) = cl(Q(0,p₁,p₂))`, symmetric in its arguments.
pub fn val_poly(p1: usize, p2: usize) -> QPoly {
    let (p1, p2) = if p1 >= p2 { (p1, p2) } else { (p2, p1) };
    let mut coeffs = vec![BigInt::from(0u8); p1 + p2 + 2];
    coeffs[0] = BigInt::one();
    for k in 1..=p2 + 1 {
        coeffs[k] = BigInt::from(k);
    }
    for k in p2 + 2..=p1 + 1 {
        coeffs[k] = BigInt::from(p2 + 1);
    }
    for k in p1 + 2..=p1 + p2 + 1 {
        coeffs[k] = BigInt::from(p1 + p2 + 2 - k);
    }
    QPoly::new(coeffs)
}

/// One `Δ̃` term of the valley decomposition: the chosen top vertices and the
/// polynomial they contribute.
#[derive(Clone, Debug)]
pub struct DeltaTerm {
    pub tops: Vec<usize>,
    pub poly: QPoly,
}

/// The valley decomposition of `cl(Q(a))`: the valley pairs `(b_{2i-1},b_{2i})`,
/// their product, and one `Δ̃` term per nonempty subset of the top vertices.
#[derive(Clone, Debug)]
pub struct ValleyBreakdown {
    pub pairs: Vec<(usize, usize)>,
    pub val_product: QPoly,
    pub terms: Vec<DeltaTerm>,
    pub total: QPoly,
}

impl ValleyBreakdown {
    /// Look up the `Δ̃` term for an exact set of top vertices.
    pub fn term(&self, tops: &[usize]) -> Option<&QPoly> {
        self.terms
            .iter()
            .find(|t| t.tops == tops)
            .map(|t| &t.poly)
    }
}

struct TopData {
    vertex: usize,
    /// mandatory interval when this top is marked
    lo: usize,
    hi: usize,
    /// generating polynomials of the optional stretches beside the interval
    left_opt: QPoly,
    right_opt: QPoly,
}

/// The §-style valley formula:
/// `cl(Q(a)) = Π val_q(b_{2i-1}, b_{2i}) + Σ_T Δ̃_q(T)` over nonempty subsets
/// `T` of the top vertices.  Every `Δ̃` is assembled from runs of consecutive
/// tops: a run forces the interval from the sink below its first top to the
/// sink below past its last top, contributes that interval as a power of `q`,
/// and keeps the two optional stretches at its ends; valleys not adjacent to
/// any chosen top contribute their `val` factors unchanged.
pub fn valley_breakdown(comp: &Composition) -> Result<ValleyBreakdown> {
    let parts = canonical_parts(comp.parts());
    let s = parts.len();
    let n: usize = parts.iter().sum::<usize>() + 1;

    // top vertices 1 + a₁ + a₂ + ⋯ + a_{2k-1}, soc vertices from even prefixes
    let mut tops = Vec::new();
    let mut sinks = Vec::new();
    if parts[0] != 0 {
        sinks.push(1);
    }
    let mut prefix = 0usize;
    for (idx, &part) in parts.iter().enumerate() {
        prefix += part;
        if idx % 2 == 0 {
            tops.push(1 + prefix);
        } else {
            sinks.push(1 + prefix);
        }
    }

    // valley pairs from the b-sequence of the decomposition
    let a_minus_one: Vec<usize> = parts.iter().map(|&p| p.saturating_sub(1)).collect();
    let mut b: Vec<usize> = Vec::new();
    if parts[0] != 0 {
        b.push(0);
        b.extend(&a_minus_one);
        if s % 2 == 0 {
            b.push(0);
        }
    } else {
        b.extend(&a_minus_one[1..]);
        if s % 2 == 0 {
            b.push(0);
        }
    }
    debug_assert!(b.len() % 2 == 0);
    let pairs: Vec<(usize, usize)> = b.chunks(2).map(|c| (c[0], c[1])).collect();

    // valley spans, in the same order as the pairs
    let mut spans: Vec<(usize, usize)> = Vec::new();
    let t = tops.len();
    if tops[0] > 1 {
        spans.push((1, tops[0] - 1));
    }
    for i in 0..t - 1 {
        spans.push((tops[i] + 1, tops[i + 1] - 1));
    }
    if tops[t - 1] < n {
        spans.push((tops[t - 1] + 1, n));
    }
    if spans.len() != pairs.len() {
        return Err(Error::Internal(format!(
            "valley bookkeeping mismatch for Q({comp}): {} spans vs {} pairs",
            spans.len(),
            pairs.len()
        )));
    }

    let val_product = pairs
        .iter()
        .fold(QPoly::one(), |acc, &(p1, p2)| &acc * &val_poly(p1, p2));

    // per-top mandatory interval and optional stretches
    let data: Vec<TopData> = (0..t)
        .map(|i| {
            let k = tops[i];
            let lo = sinks.iter().rev().find(|&&l| l < k).copied().unwrap_or(k);
            let hi = sinks.iter().find(|&&l| l > k).copied().unwrap_or(k);
            let left_opt = if lo == k {
                QPoly::one()
            } else if i > 0 {
                QPoly::qint(lo - tops[i - 1])
            } else {
                QPoly::qint(lo) // lo = 1 here: a single choice
            };
            let right_opt = if hi == k {
                QPoly::one()
            } else if i + 1 < t {
                QPoly::qint(tops[i + 1] - hi)
            } else {
                QPoly::qint(n - hi + 1)
            };
            TopData {
                vertex: k,
                lo,
                hi,
                left_opt,
                right_opt,
            }
        })
        .collect();

    if t > 22 {
        return Err(Error::Domain(format!(
            "valley decomposition sums over 2^{t} top subsets; use the dp method"
        )));
    }

    let mut terms = Vec::new();
    let mut total = val_product.clone();
    for mask in 1u32..(1u32 << t) {
        let chosen: Vec<usize> = (0..t).filter(|i| mask & (1 << i) != 0).collect();
        let mut exponent = 0usize;
        let mut poly = QPoly::one();
        let mut run_start = 0usize;
        for (pos, &i) in chosen.iter().enumerate() {
            let run_begins = pos == 0 || chosen[pos - 1] + 1 != i;
            if run_begins {
                run_start = i;
                poly = &poly * &data[i].left_opt;
            }
            let run_ends = pos + 1 == chosen.len() || chosen[pos + 1] != i + 1;
            if run_ends {
                exponent += data[i].hi - data[run_start].lo + 1;
                poly = &poly * &data[i].right_opt;
            }
        }
        // val factors of valleys not adjacent to any chosen top
        for (span, &(p1, p2)) in spans.iter().zip(&pairs) {
            let adjacent = chosen.iter().any(|&i| {
                let k = data[i].vertex;
                (k > 1 && span.0 <= k - 1 && k - 1 <= span.1)
                    || (span.0 <= k + 1 && k + 1 <= span.1)
            });
            if !adjacent {
                poly = &poly * &val_poly(p1, p2);
            }
        }
        let poly = poly.shift_up(exponent);
        total += &poly;
        terms.push(DeltaTerm {
            tops: chosen.iter().map(|&i| data[i].vertex).collect(),
            poly,
        });
    }

    Ok(ValleyBreakdown {
        pairs,
        val_product,
        terms,
        total,
    })
}

/// `cl(Q(a))` through the valley decomposition.
pub fn closure_poly_valley(comp: &Composition) -> Result<ClosurePoly> {
    Ok(valley_breakdown(comp)?.total)
}

/// Strip a trailing zero block (it contributes no arrows but would confuse
/// the top/soc bookkeeping, which assumes the final block is genuine).
fn canonical_parts(parts: &[usize]) -> Vec<usize> {
    let mut parts = parts.to_vec();
    while parts.len() > 1 && *parts.last().unwrap() == 0 {
        parts.pop();
    }
    parts
}

/// The closure quivers of `α = [a₁,…,a_{2m}] > 1`:
/// `Q_α^R = Q(a₁-1, a₂, …, a_{2m-1}, a_{2m}-1)` and `Q_α^S` the result of
/// deleting the first `a₁` arrows (with its degenerate small cases).
/// `cl(Q_α^R) = R_α` and `cl(Q_α^S) = S_α`.
pub fn quivers_from_cf(alpha: &Frac) -> Result<(QuiverA, QuiverA)> {
    if alpha.is_infinite() {
        return Err(Error::Infinite);
    }
    if alpha <= &Frac::one() {
        return Err(Error::Domain(format!(
            "closure quivers are defined for α > 1, got {alpha}"
        )));
    }
    let cf = regular_cf(alpha, Parity::Even)?;
    let terms: Vec<usize> = cf
        .terms()
        .iter()
        .map(|t| usize::try_from(t).map_err(|_| Error::Domain("cf term too large".into())))
        .collect::<Result<_>>()?;
    Ok(quivers_from_even_terms(&terms))
}

/// Shared construction for any even- or odd-length expansion with `a₁ ≥ 1`
/// (odd lengths are valid for non-integer α).
pub(crate) fn quivers_from_even_terms(terms: &[usize]) -> (QuiverA, QuiverA) {
    let len = terms.len();
    let mut r_parts = terms.to_vec();
    r_parts[0] -= 1;
    r_parts[len - 1] -= 1;
    let q_r = QuiverA::from_blocks(&r_parts);

    let q_s = if len == 2 {
        match terms[1] {
            1 => QuiverA::Empty,
            2 => QuiverA::single_vertex(),
            a2 => QuiverA::from_blocks(&[0, a2 - 2]),
        }
    } else if terms[1] == 1 {
        let mut parts = terms[2..].to_vec();
        *parts.last_mut().unwrap() -= 1;
        QuiverA::from_blocks(&parts)
    } else {
        let mut parts = vec![0, terms[1] - 1];
        parts.extend_from_slice(&terms[2..]);
        *parts.last_mut().unwrap() -= 1;
        QuiverA::from_blocks(&parts)
    };
    (q_r, q_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdeform::q_deform;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_ints(coeffs)
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn frac(n: i64, d: i64) -> Frac {
        Frac::new(n, d).unwrap()
    }

    #[test]
    fn composition_validation_and_text() {
        assert!(Composition::new(vec![0, 2, 1, 0]).is_ok());
        assert!(Composition::new(vec![1, 0, 1]).is_err());
        assert!(Composition::new(vec![]).is_err());
        let c: Composition = "1,3,1,1".parse().unwrap();
        assert_eq!(c.parts(), &[1, 3, 1, 1]);
        assert_eq!(c.to_string(), "1,3,1,1");
        assert_eq!(c.vertex_count(), 7);
        assert!("1,-2".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
    }

    #[test]
    fn word_construction() {
        use Arrow::*;
        let q = QuiverA::from_composition(&comp(&[1, 3, 1, 1]));
        assert_eq!(q.arrows(), &[Left, Right, Right, Right, Left, Right]);
        assert_eq!(q.sources(), vec![2, 6]);
        assert_eq!(q.sinks(), vec![1, 5, 7]);
        let c = q.to_composition().unwrap();
        assert_eq!(c.parts(), &[1, 3, 1, 1]);
        // leading zero round-trips, trailing zero canonicalizes away
        let q = QuiverA::from_composition(&comp(&[0, 2, 1, 0]));
        assert_eq!(q.arrows(), &[Right, Right, Left]);
        assert_eq!(q.to_composition().unwrap().parts(), &[0, 2, 1]);
    }

    #[test]
    fn brute_force_examples() {
        // Q(0) is a single vertex: 1 + q
        let single = QuiverA::from_composition(&comp(&[0]));
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(closure_poly_bruteforce(&single).unwrap(), p(&[1, 1]));
        assert_eq!(
            closure_poly_bruteforce(&QuiverA::from_composition(&comp(&[0, 0]))).unwrap(),
            p(&[1, 1])
        );
        // worked example 1
        let q = QuiverA::from_composition(&comp(&[1, 3, 1, 1]));
        assert_eq!(
            closure_poly_bruteforce(&q).unwrap(),
            p(&[1, 3, 4, 5, 5, 4, 2, 1])
        );
        assert_eq!(
            closure_poly_bruteforce(&QuiverA::Empty).unwrap(),
            QPoly::one()
        );
        let too_big = QuiverA::from_blocks(&[23]);
        assert!(closure_poly_bruteforce(&too_big).is_err());
    }

    #[test]
    fn dp_examples() {
        // worked example 2
        let q = QuiverA::from_composition(&comp(&[0, 3, 1, 5, 1]));
        assert_eq!(
            closure_poly_dp(&q),
            p(&[1, 2, 4, 6, 8, 9, 9, 8, 7, 5, 3, 1])
        );
        assert_eq!(closure_poly_dp(&QuiverA::Empty), QPoly::one());
        // dp equals brute force on every composition with ≤ 13 arrows total
        for parts in all_compositions(10) {
            let q = QuiverA::from_blocks(&parts);
            assert_eq!(
                closure_poly_dp(&q),
                closure_poly_bruteforce(&q).unwrap(),
                "Q({parts:?})"
            );
        }
    }

    #[test]
    fn closure_polynomial_shape() {
        for parts in all_compositions(9) {
            let q = QuiverA::from_blocks(&parts);
            let cl = closure_poly_dp(&q);
            assert_eq!(cl.degree().unwrap(), q.vertex_count());
            assert_eq!(cl.constant_term(), BigInt::one());
            assert_eq!(cl.leading_coeff(), BigInt::one());
            assert_eq!(cl.coeff(1), BigInt::from(q.sinks().len()));
        }
    }

    #[test]
    fn reverse_ops() {
        use Arrow::*;
        assert_eq!(Right.flipped(), Left);
        let q = QuiverA::from_composition(&comp(&[1, 3, 1, 1]));
        let cl = closure_poly_dp(&q);
        assert_eq!(
            closure_poly_dp(&q.opposite()),
            cl.reciprocal().unwrap()
        );
        assert_eq!(closure_poly_dp(&q.rotate()), cl);
        assert_eq!(q.rotate().rotate(), q);
        // cl(Q(0,a)) = cl(Q(a))^∨
        for parts in all_compositions(8) {
            let q = QuiverA::from_blocks(&parts);
            let mut zero_a = vec![0];
            zero_a.extend(&parts);
            let q0 = QuiverA::from_blocks(&zero_a);
            assert_eq!(
                closure_poly_dp(&q0),
                closure_poly_dp(&q).reciprocal().unwrap()
            );
        }
    }

    #[test]
    fn palindromic_reversal_lemma() {
        // cl(Q(a^pal)) = cl(Q(a)) for odd part count, reciprocal for even
        for parts in all_compositions(9) {
            let q = QuiverA::from_blocks(&parts);
            let rev: Vec<usize> = parts.iter().rev().copied().collect();
            let qrev = QuiverA::from_blocks(&rev);
            let cl = closure_poly_dp(&q);
            let clrev = closure_poly_dp(&qrev);
            if parts.len() % 2 == 0 {
                assert_eq!(clrev, cl, "{parts:?}");
            } else {
                assert_eq!(clrev, cl.reciprocal().unwrap(), "{parts:?}");
            }
        }
    }

    #[test]
    fn val_poly_examples() {
        assert_eq!(val_poly(0, 0), p(&[1, 1]));
        assert_eq!(val_poly(2, 0), p(&[1, 1, 1, 1]));
        assert_eq!(val_poly(0, 2), val_poly(2, 0));
        // val(0,0)·val(2,0)·val(0,0) from the worked example
        let prod = &(&val_poly(0, 0) * &val_poly(2, 0)) * &val_poly(0, 0);
        assert_eq!(prod, p(&[1, 3, 4, 4, 3, 1]));
        // val is the closure polynomial of the valley quiver
        for p1 in 0..=6 {
            for p2 in 0..=6 {
                let q = QuiverA::from_blocks(&[0, p1, p2]);
                assert_eq!(
                    val_poly(p1, p2),
                    closure_poly_dp(&q),
                    "val({p1},{p2})"
                );
            }
        }
    }

    #[test]
    fn valley_worked_example_1() {
        let b = valley_breakdown(&comp(&[1, 3, 1, 1])).unwrap();
        assert_eq!(b.pairs, vec![(0, 0), (2, 0), (0, 0)]);
        assert_eq!(b.val_product, p(&[1, 3, 4, 4, 3, 1]));
        assert_eq!(b.term(&[2]).unwrap(), &p(&[0, 0, 0, 0, 0, 1, 1]));
        assert_eq!(b.term(&[6]).unwrap(), &p(&[0, 0, 0, 1, 2, 2, 1]));
        assert_eq!(
            b.term(&[2, 6]).unwrap(),
            &QPoly::monomial(BigInt::one(), 7)
        );
        assert_eq!(b.total, p(&[1, 3, 4, 5, 5, 4, 2, 1]));
    }

    #[test]
    fn valley_worked_example_2() {
        let b = valley_breakdown(&comp(&[0, 3, 1, 5, 1])).unwrap();
        assert_eq!(b.pairs, vec![(2, 0), (4, 0)]);
        assert_eq!(b.val_product, p(&[1, 2, 3, 4, 4, 4, 3, 2, 1]));
        assert_eq!(
            b.term(&[1]).unwrap(),
            &p(&[0, 0, 0, 0, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(b.term(&[5]).unwrap(), &p(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 1]));
        assert_eq!(
            b.term(&[11]).unwrap(),
            &p(&[0, 0, 1, 2, 3, 4, 4, 3, 2, 1])
        );
        assert_eq!(
            b.term(&[1, 5]).unwrap(),
            &QPoly::monomial(BigInt::one(), 10)
        );
        assert_eq!(
            b.term(&[1, 11]).unwrap(),
            &p(&[0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            b.term(&[5, 11]).unwrap(),
            &p(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1])
        );
        assert_eq!(
            b.term(&[1, 5, 11]).unwrap(),
            &QPoly::monomial(BigInt::one(), 11)
        );
        assert_eq!(b.total, p(&[1, 2, 4, 6, 8, 9, 9, 8, 7, 5, 3, 1]));
    }

    #[test]
    fn valley_matches_brute_force_exhaustively() {
        for parts in all_compositions(11) {
            if let Ok(c) = Composition::new(parts.clone()) {
                let q = QuiverA::from_composition(&c);
                let brute = closure_poly_bruteforce(&q).unwrap();
                let valley = closure_poly_valley(&c).unwrap();
                assert_eq!(valley, brute, "Q({parts:?})");
            }
        }
    }

    #[test]
    fn valley_matches_dp_on_random_compositions() {
        // deterministic splitmix64 stream
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        let mut tested = 0;
        while tested < 500 {
            let s = (next() % 14 + 1) as usize;
            let mut parts: Vec<usize> = (0..s).map(|_| (next() % 4 + 1) as usize).collect();
            if next() % 2 == 0 {
                parts[0] = 0;
            }
            if s > 1 && next() % 2 == 0 {
                *parts.last_mut().unwrap() = 0;
            }
            if parts.iter().sum::<usize>() + 1 > 60 {
                continue;
            }
            let c = match Composition::new(parts.clone()) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let q = QuiverA::from_composition(&c);
            assert_eq!(
                closure_poly_valley(&c).unwrap(),
                closure_poly_dp(&q),
                "Q({parts:?})"
            );
            tested += 1;
        }
    }

    #[test]
    fn quivers_from_cf_examples() {
        // 7/5 = [1,2,1,1]: Q^R = Q(0,2,1,0)
        let (q_r, q_s) = quivers_from_cf(&frac(7, 5)).unwrap();
        assert_eq!(
            q_r,
            QuiverA::from_composition(&comp(&[0, 2, 1, 0]))
        );
        assert_eq!(
            closure_poly_dp(&q_r),
            q_deform(&frac(7, 5)).unwrap().r_poly().unwrap()
        );
        assert_eq!(
            closure_poly_dp(&q_s),
            q_deform(&frac(7, 5)).unwrap().s_poly().clone()
        );
        // integers: Q^S = ∅ and cl(Q^R) = [n]_q
        for n in 2i64..=7 {
            let (q_r, q_s) = quivers_from_cf(&frac(n, 1)).unwrap();
            assert_eq!(q_s, QuiverA::Empty);
            assert_eq!(closure_poly_dp(&q_r), QPoly::qint(n as usize));
            assert_eq!(closure_poly_dp(&q_s), QPoly::one());
        }
        // a₂ = 2, m = 1: Q^S = Q(0)
        let (_, q_s) = quivers_from_cf(&frac(5, 2)).unwrap();
        assert_eq!(q_s, QuiverA::single_vertex());
        assert!(quivers_from_cf(&frac(1, 2)).is_err());
    }

    #[test]
    fn closure_theorem_small_sweep() {
        use num_integer::Integer as _;
        for s in 1i64..=40 {
            for r in s + 1..=2 * s + 1 {
                if BigInt::from(r).gcd(&BigInt::from(s)).is_one() {
                    let alpha = frac(r, s);
                    let x = q_deform(&alpha).unwrap();
                    let (q_r, q_s) = quivers_from_cf(&alpha).unwrap();
                    assert_eq!(closure_poly_dp(&q_r), x.r_poly().unwrap(), "{alpha}");
                    assert_eq!(closure_poly_dp(&q_s), x.s_poly().clone(), "{alpha}");
                    // deleting the first a₁ arrows of Q^R yields Q^S
                    let a1 = alpha.floor();
                    let a1 = usize::try_from(&a1).unwrap();
                    let arrows = q_r.arrows();
                    let expect_s = if arrows.len() >= a1 {
                        QuiverA::Path(arrows[a1..].to_vec())
                    } else {
                        QuiverA::Empty
                    };
                    assert_eq!(q_s, expect_s, "{alpha}");
                }
            }
        }
    }

    #[test]
    fn odd_length_construction_agrees() {
        use num_integer::Integer as _;
        // Remark: for non-integral α the same construction on the odd-length
        // expansion yields the same polynomials
        for s in 2i64..=30 {
            for r in s + 1..=2 * s {
                if BigInt::from(r).gcd(&BigInt::from(s)).is_one() {
                    let alpha = frac(r, s);
                    let odd = regular_cf(&alpha, Parity::Odd).unwrap();
                    let terms: Vec<usize> = odd
                        .terms()
                        .iter()
                        .map(|t| usize::try_from(t).unwrap())
                        .collect();
                    let (q_r_odd, q_s_odd) = quivers_from_even_terms(&terms);
                    let (q_r, q_s) = quivers_from_cf(&alpha).unwrap();
                    assert_eq!(
                        closure_poly_dp(&q_r_odd),
                        closure_poly_dp(&q_r),
                        "{alpha}"
                    );
                    assert_eq!(
                        closure_poly_dp(&q_s_odd),
                        closure_poly_dp(&q_s),
                        "{alpha}"
                    );
                }
            }
        }
    }

    /// All block tuples with ends ≥ 0, interior ≥ 1, total ≤ `max_sum`.
    fn all_compositions(max_sum: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        // s = 1
        for a in 0..=max_sum {
            out.push(vec![a]);
        }
        // s ≥ 2: choose interior compositions and free ends
        for first in 0..=max_sum {
            for last in 0..=max_sum - first {
                let rest = max_sum - first - last;
                let mut interiors: Vec<Vec<usize>> = vec![vec![]];
                let mut frontier = vec![vec![]];
                while let Some(cur) = frontier.pop() {
                    let used: usize = cur.iter().sum();
                    for nxt in 1..=rest - used {
                        let mut v = cur.clone();
                        v.push(nxt);
                        if v.iter().sum::<usize>() <= rest {
                            interiors.push(v.clone());
                            frontier.push(v);
                        }
                    }
                }
                for interior in interiors {
                    let mut parts = vec![first];
                    parts.extend(interior);
                    parts.push(last);
                    out.push(parts);
                }
            }
        }
        out
    }
}
