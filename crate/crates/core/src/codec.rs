//! Polynomials over GF(q), minimal and generator polynomials, BCH code
//! objects and exhaustive minimum distance.
//!
//! Coefficients are stored as elements of the extension field that holds the
//! n-th roots of unity; every polynomial produced here for a code has its
//! coefficients in the GF(q) subfield, which is asserted on construction.

use std::fmt;

use serde::Serialize;

use crate::arith::gcd;
use crate::cyclotomic::{coset_of, CosetIndex};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::params::BchParams;

/// Default number of nonzero codewords examined by the exhaustive search.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![FieldElement::ONE],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `c x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut v = vec![FieldElement::ZERO; k + 1];
        v[k] = c;
        Poly::from_coeffs(v)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(ctx: &FieldContext, n: usize) -> Self {
        let mut v = vec![FieldElement::ZERO; n + 1];
        v[0] = ctx.neg(FieldElement::ONE);
        v[n] = FieldElement::ONE;
        Poly::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| ctx.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| ctx.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: FieldElement, ctx: &FieldContext) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn div_rem(&self, divisor: &Poly, ctx: &FieldContext) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = ctx.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = ctx.mul(rem[k + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = ctx.sub(rem[k + j], ctx.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn eval(&self, x: FieldElement, ctx: &FieldContext) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// `x^deg p(1/x)`.
    pub fn reciprocal(&self) -> Poly {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::from_coeffs(v)
    }

    pub fn monic(&self, ctx: &FieldContext) -> Result<Poly> {
        Ok(self.scale(ctx.inv(self.leading())?, ctx))
    }

    pub fn in_base_field(&self, ctx: &FieldContext) -> bool {
        self.coeffs.iter().all(|&c| ctx.in_base_field(c))
    }
}

/// Labels for the GF(q) subfield: label `j` is the `j`-th subfield element in
/// canonical order, so label 0 is zero. For prime `q` the label of `c` is
/// the integer `c`.
#[derive(Debug, Clone)]
pub struct Subfield {
    elems: Vec<FieldElement>,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
}

impl Subfield {
    pub fn new(ctx: &FieldContext) -> Self {
        let elems = ctx.base_field_elements();
        let label = |e: FieldElement| elems.binary_search(&e).expect("closed subfield") as u8;
        let table = |f: &dyn Fn(FieldElement, FieldElement) -> FieldElement| {
            elems
                .iter()
                .map(|&a| elems.iter().map(|&b| label(f(a, b))).collect())
                .collect()
        };
        let add = table(&|a, b| ctx.add(a, b));
        let mul = table(&|a, b| ctx.mul(a, b));
        Subfield { elems, add, mul }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn label(&self, e: FieldElement) -> Option<usize> {
        self.elems.binary_search(&e).ok()
    }

    pub fn element(&self, label: usize) -> FieldElement {
        self.elems[label]
    }

    /// Coefficient labels of a polynomial with subfield coefficients.
    pub fn labels(&self, p: &Poly) -> Vec<u64> {
        p.coeffs()
            .iter()
            .map(|&c| self.label(c).expect("coefficient outside GF(q)") as u64)
            .collect()
    }
}

/// Monic minimal polynomial of `β^i` over GF(q), with `β` the primitive
/// n-th root of unity of `ctx`.
pub fn minimal_polynomial(ctx: &FieldContext, n: u64, i: i64) -> Result<Poly> {
    let beta = ctx.primitive_nth_root(n)?;
    let coset = coset_of(n, ctx.q().q(), i)?;
    let mut p = Poly::one();
    for &j in &coset.members {
        let root = ctx.pow(beta, j);
        p = p.mul(&Poly::from_coeffs(vec![ctx.neg(root), FieldElement::ONE]), ctx);
    }
    assert!(
        p.in_base_field(ctx),
        "minimal polynomial of beta^{i} has coefficients outside GF(q)"
    );
    Ok(p)
}

/// Product of one minimal polynomial per coset met by the defining range.
pub fn generator_polynomial(ctx: &FieldContext, idx: &CosetIndex, params: &BchParams) -> Result<Poly> {
    let mut g = Poly::one();
    for leader in idx.leaders_in(&params.range())? {
        g = g.mul(&minimal_polynomial(ctx, params.n, leader as i64)?, ctx);
    }
    Ok(g)
}

#[derive(Debug, Clone)]
pub struct BchCode {
    pub params: BchParams,
    pub generator: Poly,
    pub dimension: u64,
    /// Residues of the defining range, sorted.
    pub defining_set: Vec<u64>,
    /// Designed distance; a lower bound on the minimum distance.
    pub bch_bound: u64,
}

/// Builds the code in a caller-supplied field and coset index.
pub fn build_code(ctx: &FieldContext, idx: &CosetIndex, params: &BchParams) -> Result<BchCode> {
    if idx.n() != params.n {
        return Err(Error::LengthMismatch {
            range: params.n,
            index: idx.n(),
        });
    }
    let generator = generator_polynomial(ctx, idx, params)?;
    let deg = generator.degree().expect("generator is nonzero") as u64;
    debug_assert_eq!(deg, idx.union_size(&params.range())?);
    Ok(BchCode {
        params: *params,
        dimension: params.n - deg,
        generator,
        defining_set: params.range().resolved_set(),
        bch_bound: params.delta,
    })
}

impl BchCode {
    /// Builds the field and coset index for the parameters, then the code.
    pub fn build(params: &BchParams) -> Result<(FieldContext, BchCode)> {
        let ctx = FieldContext::for_length(params.q, params.n)?;
        let idx = CosetIndex::build(params.n, params.q())?;
        let code = build_code(&ctx, &idx, params)?;
        Ok((ctx, code))
    }

    /// Whether `g` equals its monic reciprocal.
    pub fn is_reversible(&self, ctx: &FieldContext) -> bool {
        self.generator
            .reciprocal()
            .monic(ctx)
            .map(|r| r == self.generator)
            .unwrap_or(false)
    }

    /// Whether the word (as a polynomial of degree < n) is a codeword.
    pub fn contains(&self, ctx: &FieldContext, word: &Poly) -> bool {
        word.degree().is_none_or(|d| (d as u64) < self.params.n)
            && word
                .div_rem(&self.generator, ctx)
                .map(|(_, r)| r.is_zero())
                .unwrap_or(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinDistance {
    Exact(u64),
    /// The code has dimension 0.
    ZeroCode,
    /// More than `budget` nonzero codewords would be needed. `codewords` is
    /// `None` when the count does not fit in a `u128`.
    Unknown {
        codewords: Option<u128>,
        budget: u64,
    },
}

impl MinDistance {
    pub fn exact(self) -> Option<u64> {
        match self {
            MinDistance::Exact(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::ZeroCode => f.write_str("zero code"),
            MinDistance::Unknown { codewords: Some(c), budget } => {
                write!(f, "unknown ({c} codewords, budget {budget})")
            }
            MinDistance::Unknown { codewords: None, budget } => {
                write!(f, "unknown (over 2^128 codewords, budget {budget})")
            }
        }
    }
}

/// Minimum nonzero weight by enumerating every message. Messages are walked
/// in a q-ary Gray order, so each step adds one scaled generator row and the
/// weight is updated on that row's support only.
pub fn exhaustive_min_distance(ctx: &FieldContext, code: &BchCode, budget: u64) -> MinDistance {
    let k = code.dimension as u32;
    if k == 0 {
        return MinDistance::ZeroCode;
    }
    let sf = Subfield::new(ctx);
    let q = sf.size();
    let nonzero = match (q as u128).checked_pow(k).map(|t| t - 1) {
        Some(c) if c <= budget as u128 => c as u64,
        codewords => return MinDistance::Unknown { codewords, budget },
    };
    let n = code.params.n as usize;
    let g = sf.labels(&code.generator);

    // step[j] = label of elems[(j+1) % q] - elems[j]
    let step: Vec<u8> = (0..q)
        .map(|j| {
            let d = ctx.sub(sf.element((j + 1) % q), sf.element(j));
            sf.label(d).unwrap() as u8
        })
        .collect();
    // scaled[s] = sparse support of s*g, for every scalar label s
    let scaled: Vec<Vec<(usize, u8)>> = (0..q)
        .map(|s| {
            g.iter()
                .enumerate()
                .filter_map(|(i, &c)| {
                    let v = sf.mul[s][c as usize];
                    (v != 0).then_some((i, v))
                })
                .collect()
        })
        .collect();

    let mut word = vec![0u8; n];
    let mut digit = vec![0usize; k as usize];
    let mut weight = 0usize;
    let mut best = usize::MAX;
    for t in 1..=nonzero {
        let mut i = 0usize;
        let mut x = t;
        while x % q as u64 == 0 {
            x /= q as u64;
            i += 1;
        }
        let s = step[digit[i]] as usize;
        digit[i] = (digit[i] + 1) % q;
        for &(pos, v) in &scaled[s] {
            let p = pos + i;
            let old = word[p];
            let new = sf.add[old as usize][v as usize];
            word[p] = new;
            weight = weight + (new != 0) as usize - (old != 0) as usize;
        }
        best = best.min(weight);
    }
    MinDistance::Exact(best as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    /// `n` symbols, position `i` is the coefficient of `x^i`.
    pub symbols: Vec<FieldElement>,
    pub weight: usize,
}

impl Codeword {
    pub fn poly(&self) -> Poly {
        Poly::from_coeffs(self.symbols.clone())
    }
}

/// The explicit low-weight word
/// `(x^n' - 1)/(x^{n'/δ_b} - 1) * prod_{i=1}^{k-1} (x^{n'/(δ_b(q-1))} - β^{i n'/(q-1)})`
/// of the narrow-sense code of length `n'` and designed distance `kδ_b`.
pub fn construct_min_weight_codeword(
    ctx: &FieldContext,
    n_prime: u64,
    delta_b: u64,
    k: u64,
) -> Result<Codeword> {
    let q = ctx.q().q();
    let bad = |msg: String| Err(Error::PreconditionViolation(msg));
    if n_prime < 2 || gcd(n_prime, q) != 1 {
        return bad(format!("gcd(n'={n_prime}, q={q}) must be 1"));
    }
    if n_prime % (q - 1) != 0 {
        return bad(format!("q-1={} must divide n'={n_prime}", q - 1));
    }
    let per = n_prime / (q - 1);
    if delta_b == 0 || per % delta_b != 0 {
        return bad(format!("δ_b={delta_b} must divide n'/(q-1)={per}"));
    }
    if k < 1 || k > q - 1 {
        return bad(format!("k={k} outside [1, {}]", q - 1));
    }
    let beta = ctx.primitive_nth_root(n_prime)?;
    let stride = (n_prime / delta_b) as usize;
    let mut c = Poly::from_coeffs(
        (0..n_prime as usize)
            .map(|i| {
                if i % stride == 0 {
                    FieldElement::ONE
                } else {
                    FieldElement::ZERO
                }
            })
            .collect(),
    );
    let e = (per / delta_b) as usize;
    for i in 1..k {
        let root = ctx.pow(beta, i * per);
        let factor = Poly::monomial(FieldElement::ONE, e).sub(&Poly::from_coeffs(vec![root]), ctx);
        c = c.mul(&factor, ctx);
    }
    assert!(c.in_base_field(ctx), "constructed word leaves GF(q)");
    let mut symbols = c.coeffs().to_vec();
    symbols.resize(n_prime as usize, FieldElement::ZERO);
    let weight = c.weight();
    Ok(Codeword { symbols, weight })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimePower;
    use crate::params::Family;

    fn code(family: Family, q: u64, m: u32, delta: u64, b: i64) -> (FieldContext, BchCode) {
        BchCode::build(&BchParams::new(family, q, m, delta, b).unwrap()).unwrap()
    }

    #[test]
    fn minimal_polynomials() {
        let ctx = FieldContext::for_length(PrimePower::new(2).unwrap(), 15).unwrap();
        let m0 = minimal_polynomial(&ctx, 15, 0).unwrap();
        assert_eq!(m0.coeffs(), &[FieldElement::ONE, FieldElement::ONE]);
        assert_eq!(minimal_polynomial(&ctx, 15, 1).unwrap().degree(), Some(4));
        assert_eq!(minimal_polynomial(&ctx, 15, 5).unwrap().degree(), Some(2));
    }

    #[test]
    fn generator_degrees() {
        assert_eq!(code(Family::Primitive, 2, 4, 5, 1).1.generator.degree(), Some(8));
        let (_, c) = code(Family::Primitive, 2, 4, 2, 0);
        assert_eq!(c.generator.coeffs(), &[FieldElement::ONE, FieldElement::ONE]);
        let p = BchParams::from_length(2, 9, 3, 1);
        // 9 is 2^3+1
        let (_, c) = BchCode::build(&p.unwrap()).unwrap();
        assert_eq!(c.generator.degree(), Some(6));
    }

    #[test]
    fn code_dimensions() {
        assert_eq!(code(Family::Primitive, 2, 4, 5, 1).1.dimension, 7);
        assert_eq!(code(Family::Primitive, 3, 2, 4, 1).1.dimension, 4);
        assert_eq!(code(Family::QmPlus1, 2, 4, 3, 1).1.dimension, 9);
    }

    #[test]
    fn reversibility() {
        let (ctx, c) = code(Family::QmPlus1, 2, 4, 3, 1);
        assert!(c.is_reversible(&ctx));
        let (ctx, c) = code(Family::Projective, 3, 5, 20, -9);
        assert!(c.is_reversible(&ctx));
        let (ctx, c) = code(Family::Primitive, 2, 4, 5, 1);
        assert!(!c.is_reversible(&ctx));
    }

    #[test]
    fn small_distances() {
        let (ctx, c) = code(Family::Primitive, 2, 4, 5, 1);
        assert_eq!(exhaustive_min_distance(&ctx, &c, DEFAULT_BUDGET), MinDistance::Exact(5));
        let (ctx, c) = code(Family::Primitive, 2, 4, 7, 1);
        assert_eq!(exhaustive_min_distance(&ctx, &c, DEFAULT_BUDGET), MinDistance::Exact(7));
        let (ctx, c) = code(Family::Primitive, 3, 2, 4, 1);
        assert_eq!(exhaustive_min_distance(&ctx, &c, DEFAULT_BUDGET), MinDistance::Exact(4));
        assert!(matches!(
            exhaustive_min_distance(&ctx, &c, 10),
            MinDistance::Unknown { codewords: Some(80), .. }
        ));
    }

    #[test]
    fn constructed_words() {
        let ctx = FieldContext::for_length(PrimePower::new(3).unwrap(), 8).unwrap();
        let w = construct_min_weight_codeword(&ctx, 8, 4, 1).unwrap();
        let one = FieldElement::ONE;
        let zero = FieldElement::ZERO;
        assert_eq!(w.symbols, vec![one, zero, one, zero, one, zero, one, zero]);
        assert_eq!(w.weight, 4);
        let w2 = construct_min_weight_codeword(&ctx, 8, 4, 2).unwrap();
        assert_eq!(w2.weight, 8);
        let (ctx8, c) = code(Family::Primitive, 3, 2, 8, 1);
        assert!(c.contains(&ctx8, &w2.poly()));

        let ctx = FieldContext::for_length(PrimePower::new(2).unwrap(), 15).unwrap();
        let w = construct_min_weight_codeword(&ctx, 15, 5, 1).unwrap();
        assert_eq!(w.weight, 5);
        assert!(matches!(
            construct_min_weight_codeword(&ctx, 15, 5, 2),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            construct_min_weight_codeword(&ctx, 15, 4, 1),
            Err(Error::PreconditionViolation(_))
        ));
    }
}
