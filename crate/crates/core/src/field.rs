//! Exact arithmetic in GF(q) and GF(q^m).
//!
//! A field GF((p^e)^m) is represented directly as GF(p^(e*m)): elements are
//! coefficient vectors over GF(p) in the polynomial basis of a canonical
//! irreducible modulus, packed into an integer `sum c_i p^i`. The subfield
//! GF(q) is the fixed field of `x -> x^q`.
//!
//! The modulus is the first monic irreducible polynomial of degree `e*m` when
//! coefficient vectors `(c_0, ..., c_{d-1})` are listed lexicographically, and
//! the generator `alpha` is the first element of full order in the integer
//! enumeration of elements. Both choices depend only on `(p, e*m)`, so two
//! contexts built from the same arguments are identical.

use serde::Serialize;

use crate::arith::{self, gcd, prime_factors};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimePower {
    p: u64,
    e: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = prime_factors(q)[0];
        let mut rest = q;
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(PrimePower { p, e, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// An element of a [`FieldContext`], identified by its index in the canonical
/// enumeration. Zero is index 0, one is index 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldLimits {
    /// Exp/log tables are built when the field order is at most this.
    pub table_threshold: u64,
    /// Largest field order accepted at all.
    pub max_order: u64,
}

impl Default for FieldLimits {
    fn default() -> Self {
        FieldLimits {
            table_threshold: 1 << 20,
            max_order: 1 << 31,
        }
    }
}

/// Arithmetic in GF(p)[x] modulo a fixed monic polynomial, on packed
/// integer encodings.
#[derive(Debug, Clone)]
struct PolyBasis {
    p: u64,
    degree: usize,
    /// Monic modulus, ascending coefficients, length `degree + 1`.
    modulus: Vec<u64>,
}

impl PolyBasis {
    fn unpack(&self, mut v: u64) -> Vec<u64> {
        let mut out = vec![0; self.degree];
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    fn pack(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let (x, y) = (self.unpack(a), self.unpack(b));
        let mut prod = vec![0u64; 2 * self.degree];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        for k in (self.degree..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            // x^degree = -(modulus without its leading term)
            for (i, &mi) in self.modulus[..self.degree].iter().enumerate() {
                let idx = k - self.degree + i;
                prod[idx] = (prod[idx] + (self.p - mi) * c) % self.p;
            }
            prod[k] = 0;
        }
        self.pack(&prod[..self.degree])
    }

    fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }
}

#[derive(Debug, Clone)]
struct LogTables {
    /// `exp[i] = alpha^i` for `0 <= i < 2(r-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct FieldContext {
    q: PrimePower,
    m: u32,
    order: u64,
    basis: PolyBasis,
    alpha: FieldElement,
    tables: Option<LogTables>,
}

/// Builds GF(q^m) with default limits.
pub fn make_field(q: PrimePower, m: u32) -> Result<FieldContext> {
    FieldContext::new(q, m)
}

impl FieldContext {
    pub fn new(q: PrimePower, m: u32) -> Result<Self> {
        Self::with_limits(q, m, FieldLimits::default())
    }

    /// The smallest extension of GF(q) containing a primitive `n`-th root of
    /// unity, i.e. GF(q^ord_n(q)).
    pub fn for_length(q: PrimePower, n: u64) -> Result<Self> {
        let m = if n == 1 { 1 } else { ord_mod(n, q.q())? };
        Self::new(q, m)
    }

    pub fn with_limits(q: PrimePower, m: u32, limits: FieldLimits) -> Result<Self> {
        if m == 0 {
            return Err(Error::params("extension degree must be at least 1"));
        }
        let degree = q.e() * m;
        let order = (q.p() as u128).checked_pow(degree).unwrap_or(u128::MAX);
        let cap = limits.max_order.min(u32::MAX as u64);
        if order > cap as u128 {
            return Err(Error::SizeExceeded {
                what: "field order",
                size: order,
                limit: cap as u128,
            });
        }
        let order = order as u64;
        let modulus = first_irreducible(q.p(), degree as usize);
        let basis = PolyBasis {
            p: q.p(),
            degree: degree as usize,
            modulus,
        };

        let group = order - 1;
        let factors = prime_factors(group);
        let alpha = (1..order)
            .find(|&v| factors.iter().all(|&l| basis.pow(v, group / l) != 1))
            .expect("a finite field has a primitive element");

        let tables = (order <= limits.table_threshold).then(|| {
            let len = group as usize;
            let mut exp = vec![0u32; 2 * len];
            let mut log = vec![0u32; order as usize];
            let mut x = 1u64;
            for i in 0..len {
                exp[i] = x as u32;
                exp[i + len] = x as u32;
                log[x as usize] = i as u32;
                x = basis.mul(x, alpha);
            }
            debug_assert_eq!(x, 1);
            LogTables { exp, log }
        });

        Ok(FieldContext {
            q,
            m,
            order,
            basis,
            alpha: FieldElement(alpha as u32),
            tables,
        })
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    /// Extension degree over GF(q).
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn characteristic(&self) -> u64 {
        self.q.p()
    }

    /// Number of elements, `q^m`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The monic irreducible modulus over GF(p), ascending coefficients.
    pub fn modulus(&self) -> &[u64] {
        &self.basis.modulus
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value >= self.order {
            return Err(Error::FieldMismatch {
                value,
                order: self.order,
            });
        }
        Ok(FieldElement(value as u32))
    }

    /// Embeds an element of the prime field GF(p).
    pub fn from_prime_field(&self, c: u64) -> FieldElement {
        FieldElement((c % self.q.p()) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(|v| FieldElement(v as u32))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.basis.add(a.0 as u64, b.0 as u64) as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.basis.neg(a.0 as u64) as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                FieldElement(t.exp[i])
            }
            None => FieldElement(self.basis.mul(a.0 as u64, b.0 as u64) as u32),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, exp: u64) -> FieldElement {
        if exp == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let group = self.order - 1;
                let l = t.log[a.0 as usize] as u64;
                let i = arith::mul_mod(l, exp % group, group);
                FieldElement(t.exp[i as usize])
            }
            None => FieldElement(self.basis.pow(a.0 as u64, exp) as u32),
        }
    }

    /// `alpha^k`.
    pub fn alpha_pow(&self, k: u64) -> FieldElement {
        self.pow(self.alpha, k)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.order - 1;
        for l in prime_factors(ord) {
            while ord % l == 0 && self.pow(a, ord / l) == FieldElement::ONE {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// Membership in the subfield GF(q).
    pub fn in_base_field(&self, a: FieldElement) -> bool {
        self.pow(a, self.q.q()) == a
    }

    /// The `q` elements of GF(q) inside this field, in canonical order.
    pub fn base_field_elements(&self) -> Vec<FieldElement> {
        let q = self.q.q();
        let step = (self.order - 1) / (q - 1);
        let gamma = self.alpha_pow(step);
        let mut out: Vec<FieldElement> = std::iter::once(FieldElement::ZERO)
            .chain((0..q - 1).map(|j| self.pow(gamma, j)))
            .collect();
        out.sort();
        out
    }

    /// `beta = alpha^((q^m - 1)/n)`, a primitive `n`-th root of unity.
    pub fn primitive_nth_root(&self, n: u64) -> Result<FieldElement> {
        let group = self.order - 1;
        if n == 0 || group % n != 0 {
            return Err(Error::NotDivisor { n, order: group });
        }
        Ok(self.alpha_pow(group / n))
    }
}

/// Least `m >= 1` with `q^m = 1 (mod n)`.
pub fn ord_mod(n: u64, q: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let q = q % n;
    let mut x = q;
    let mut m = 1u32;
    while x != 1 {
        x = arith::mul_mod(x, q, n);
        m += 1;
    }
    Ok(m)
}

// --- GF(p)[x] helpers for the modulus search; ascending coefficient vectors.

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    arith::pow_mod(a, p - 2, p)
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = (r[idx] + (p - c) * bi % p) % p;
            }
        }
        r.pop();
        if r.is_empty() {
            r.push(0);
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^k) mod f`.
fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut x = poly_rem(&[0, 1], f, p);
    for _ in 0..k {
        let mut acc = vec![1u64];
        let mut base = x.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        x = acc;
    }
    x
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let x_mod = poly_rem(&[0, 1], f, p);
    let sub_x = |mut v: Vec<u64>| {
        v.resize(v.len().max(2), 0);
        v[1] = (v[1] + p - 1) % p;
        trim(&mut v);
        v
    };
    if frobenius_power(f, p, d) != x_mod {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let h = sub_x(frobenius_power(f, p, d / r as usize));
        let g = poly_gcd(f, &h, p);
        g.len() == 1
    })
}

fn first_irreducible(p: u64, degree: usize) -> Vec<u64> {
    let total = arith::pow(p, degree as u32);
    for t in 0..total {
        // c_0 is the most significant digit of t
        let mut f = vec![0u64; degree + 1];
        let mut rest = t;
        for i in (0..degree).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[degree] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
