//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! Elements are encoded as integers in `[0, p^m)`: the coefficient vector
//! `(c_0, ..., c_{m-1})` of the polynomial representation maps to
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Multiplication goes through
//! log/exp tables built once per field.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

/// Largest field order this crate will build tables for.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus {0:?} is reducible over GF({1})")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("field order {0} exceeds the supported maximum of 2^20")]
    TooLarge(u64),
    #[error("elements belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid element encoding: {0}")]
    BadElement(String),
}

/// The parameters identifying a finite field: characteristic, extension
/// degree and the monic irreducible modulus (constant term first, empty
/// for prime fields).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default)]
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// Validates `(p, m, modulus)`. When `modulus` is absent and `m > 1`
    /// the first irreducible monic polynomial is chosen, walking the lower
    /// coefficients as a base-p counter with the constant term least
    /// significant.
    pub fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Self, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NonPrimeP(p as u64));
        }
        if m == 0 {
            return Err(GfError::DegreeMismatch("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(GfError::TooLarge(q));
        }
        if m == 1 {
            return match modulus {
                None => Ok(Self { p, m, modulus: Vec::new() }),
                Some(v) if v.is_empty() => Ok(Self { p, m, modulus: Vec::new() }),
                Some(v) => {
                    // accept an explicit monic linear modulus, it adds nothing
                    if v.len() == 2 && v[1] == 1 && v[0] < p {
                        Ok(Self { p, m, modulus: Vec::new() })
                    } else {
                        Err(GfError::DegreeMismatch(format!(
                            "prime field takes an empty modulus, got {v:?}"
                        )))
                    }
                }
            };
        }
        let modulus = match modulus {
            Some(v) => {
                if v.len() != m as usize + 1 || v[m as usize] != 1 {
                    return Err(GfError::DegreeMismatch(format!(
                        "modulus must be monic of degree {m} ({} coefficients), got {v:?}",
                        m + 1
                    )));
                }
                if v.iter().any(|&c| c >= p) {
                    return Err(GfError::DegreeMismatch(format!(
                        "modulus coefficients must lie in [0, {p})"
                    )));
                }
                if !is_irreducible(&v, p) {
                    return Err(GfError::ReducibleModulus(v, p));
                }
                v
            }
            None => default_modulus(p, m),
        };
        Ok(Self { p, m, modulus })
    }

    pub fn prime(p: u32) -> Result<Self, GfError> {
        Self::new(p, 1, None)
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    /// p^i for i in 0..m
    digit_weights: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field with precomputed arithmetic tables. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Self, GfError> {
        Ok(Self::from_valid_spec(FieldSpec::new(p, m, modulus)?))
    }

    pub fn prime(p: u32) -> Result<Self, GfError> {
        Self::new(p, 1, None)
    }

    /// Builds the field for a spec, revalidating it first (specs may come
    /// straight from JSON).
    pub fn from_spec(spec: &FieldSpec) -> Result<Self, GfError> {
        let modulus = if spec.m == 1 { None } else { Some(spec.modulus.clone()) };
        Self::new(spec.p, spec.m, modulus)
    }

    /// Finds `(p, m)` with `p^m = q` and builds the field with the default modulus.
    pub fn with_order(q: u32) -> Result<Self, GfError> {
        let (p, m) = prime_power(q as u64).ok_or(GfError::NonPrimeP(q as u64))?;
        Self::new(p as u32, m, None)
    }

    fn from_valid_spec(spec: FieldSpec) -> Self {
        let q = spec.order();
        let digit_weights = (0..spec.m).map(|i| spec.p.pow(i)).collect::<Vec<_>>();
        let ctx = PolyCtx { p: spec.p, m: spec.m as usize, modulus: &spec.modulus, digit_weights: &digit_weights };
        let gen = ctx.primitive_element(q);
        let mut exp = vec![0u32; q as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) {
            exp[i as usize] = x;
            log[x as usize] = i;
            x = ctx.mul(x, gen);
        }
        // exp is periodic with period q-1; the extra slot keeps inv() branch-free
        exp[(q - 1) as usize] = 1;
        Field(Arc::new(Tables { spec, q, digit_weights, exp, log }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.m
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let t = &*self.0;
        let p = t.spec.p;
        if t.spec.m == 1 {
            return (a + b) % p;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &t.digit_weights {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let t = &*self.0;
        let p = t.spec.p;
        if t.spec.m == 1 {
            return (p - a % p) % p;
        }
        if p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &t.digit_weights {
            out += ((p - a % p) % p) * w;
            a /= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        let s = t.log[a as usize] + t.log[b as usize];
        let s = if s >= t.q - 1 { s - (t.q - 1) } else { s };
        t.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let t = &*self.0;
        Some(t.exp[(t.q - 1 - t.log[a as usize]) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.0;
        let l = (t.log[a as usize] as u64 * (e % (t.q as u64 - 1))) % (t.q as u64 - 1);
        t.exp[l as usize]
    }

    /// Image of an integer under the prime-subfield embedding.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.spec.p as i64) as u32
    }

    pub fn coeffs(&self, v: u32) -> Vec<u32> {
        let p = self.0.spec.p;
        let mut v = v;
        (0..self.0.spec.m)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32, GfError> {
        let t = &*self.0;
        if coeffs.len() != t.spec.m as usize {
            return Err(GfError::BadElement(format!(
                "expected {} coefficients, got {}",
                t.spec.m,
                coeffs.len()
            )));
        }
        let mut out = 0;
        for (&c, &w) in coeffs.iter().zip(&t.digit_weights) {
            if c >= t.spec.p {
                return Err(GfError::BadElement(format!("coefficient {c} not reduced mod {}", t.spec.p)));
            }
            out += c * w;
        }
        Ok(out)
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, GfError> {
        if value >= self.order() {
            return Err(GfError::BadElement(format!("{value} out of range for {}", self.spec())));
        }
        Ok(FieldElement { field: self.clone(), value })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 1 }
    }

    /// Every element exactly once, zero first, in increasing encoding order.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.order()).map(|value| FieldElement { field: self.clone(), value }).collect()
    }

    /// JSON form of an element: a bare integer for prime fields, the
    /// coefficient array otherwise.
    pub fn element_to_json(&self, v: u32) -> Value {
        if self.degree() == 1 {
            Value::from(v)
        } else {
            Value::from(self.coeffs(v))
        }
    }

    /// Accepts bare integers (reduced into the prime subfield, so `-1` works)
    /// or coefficient arrays of length m.
    pub fn element_from_json(&self, v: &Value) -> Result<u32, GfError> {
        match v {
            Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| GfError::BadElement(format!("not an integer: {n}")))?;
                Ok(self.from_int(i))
            }
            Value::Array(items) => {
                let mut coeffs = Vec::with_capacity(items.len());
                for it in items {
                    let i = it
                        .as_i64()
                        .ok_or_else(|| GfError::BadElement(format!("not an integer: {it}")))?;
                    coeffs.push(i.rem_euclid(self.characteristic() as i64) as u32);
                }
                self.from_coeffs(&coeffs)
            }
            other => Err(GfError::BadElement(format!("unsupported element encoding {other}"))),
        }
    }
}

/// A field element carrying its field. Operations between elements of
/// different fields fail with [`GfError::SpecMismatch`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{:?}", self.field.coeffs(self.value))
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Self) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::SpecMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        Self { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, GfError> {
        self.check(other)?;
        let v = self.field.div(self.value, other.value).ok_or(GfError::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        let v = self.field.inv(self.value).ok_or(GfError::DivisionByZero)?;
        Ok(self.with(v))
    }
}

// ---------------------------------------------------------------------------
// slow polynomial arithmetic, used only while building tables

struct PolyCtx<'a> {
    p: u32,
    m: usize,
    modulus: &'a [u32],
    digit_weights: &'a [u32],
}

impl PolyCtx<'_> {
    fn decode(&self, v: u32) -> Vec<u32> {
        let mut v = v;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn encode(&self, c: &[u32]) -> u32 {
        c.iter().zip(self.digit_weights).map(|(&c, &w)| c * w).sum()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.m == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let (a, b) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for deg in (self.m..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &mc) in self.modulus[..self.m].iter().enumerate() {
                let idx = deg - self.m + i;
                prod[idx] = (prod[idx] + (p - c) * mc as u64) % p;
            }
            prod[deg] = 0;
        }
        let out: Vec<u32> = prod[..self.m].iter().map(|&c| c as u32).collect();
        self.encode(&out)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn primitive_element(&self, q: u32) -> u32 {
        if q == 2 {
            return 1;
        }
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        (2..q)
            .find(|&g| factors.iter().all(|&l| self.pow(g, order / l) != 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(p, m)` when `q = p^m` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut m = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        m += 1;
    }
    Some((p, m))
}

/// Remainder of `f` modulo monic `g` over GF(p); both constant term first.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let top = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if top != 0 {
            for (i, &gc) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - top) * gc as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Exhaustive trial division by every monic polynomial of degree up to m/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    for deg in 1..=m / 2 {
        let count = (p as u64).pow(deg as u32);
        for t in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut t = t;
            for _ in 0..deg {
                g.push((t % p as u64) as u32);
                t /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for t in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut t = t;
        for _ in 0..m {
            f.push((t % p as u64) as u32);
            t /= p as u64;
        }
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.add(2, 2), 1);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(3), Some(2));
        assert_eq!(f5.spec(), &FieldSpec { p: 5, m: 1, modulus: vec![] });
    }

    #[test]
    fn gf9_default_modulus_is_x2_plus_1() {
        // brute force: x^2 + bx + c is irreducible iff it has no root in GF(3)
        let first = (0..9u32)
            .map(|t| (t % 3, t / 3))
            .find(|&(c, b)| (0..3u32).all(|x| (x * x + b * x + c) % 3 != 0))
            .unwrap();
        assert_eq!(first, (1, 0));
        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(f9.spec().modulus, vec![1, 0, 1]);
        // x * x = x^2 = -1 = 2 under x^2 + 1
        let x = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.coeffs(f9.mul(x, x)), vec![2, 0]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1, None), Err(GfError::NonPrimeP(4)));
        assert!(matches!(FieldSpec::new(3, 2, Some(vec![0, 0, 1])), Err(GfError::ReducibleModulus(..))));
        assert!(matches!(FieldSpec::new(3, 2, Some(vec![1, 1])), Err(GfError::DegreeMismatch(_))));
        assert!(matches!(FieldSpec::new(3, 2, Some(vec![1, 0, 2])), Err(GfError::DegreeMismatch(_))));
        assert!(matches!(FieldSpec::new(2, 21, None), Err(GfError::TooLarge(_))));
    }

    #[test]
    fn element_ops_check_spec() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        let a = f5.element(3).unwrap();
        let b = f7.element(3).unwrap();
        assert_eq!(a.add(&b), Err(GfError::SpecMismatch));
        assert_eq!(f5.zero().inv(), Err(GfError::DivisionByZero));
        assert_eq!(a.inv().unwrap().value(), 2);
        assert_eq!(a.div(&f5.zero()), Err(GfError::DivisionByZero));
        assert_eq!(a.neg().value(), 2);
    }

    #[test]
    fn enumerate_orders() {
        let vals = |f: &Field| f.enumerate().iter().map(|e| e.value()).collect::<Vec<_>>();
        assert_eq!(vals(&Field::prime(2).unwrap()), vec![0, 1]);
        assert_eq!(vals(&Field::prime(3).unwrap()), vec![0, 1, 2]);
        let f9 = Field::new(3, 2, None).unwrap();
        let mut v = vals(&f9);
        assert_eq!(v.len(), 9);
        v.dedup();
        assert_eq!(v.len(), 9);
    }

    fn exhaustive_axioms(f: &Field) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (p, m) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (3, 4)] {
            let f = Field::new(p, m, None).unwrap();
            assert!(f.order() <= 81);
            exhaustive_axioms(&f);
        }
    }

    #[test]
    fn table_mul_matches_polynomial_mul() {
        for (p, m) in [(2, 5), (3, 3), (5, 2), (7, 2)] {
            let f = Field::new(p, m, None).unwrap();
            let spec = f.spec().clone();
            let weights = (0..m).map(|i| p.pow(i)).collect::<Vec<_>>();
            let ctx = PolyCtx { p, m: m as usize, modulus: &spec.modulus, digit_weights: &weights };
            for a in 0..f.order() {
                for b in 0..f.order() {
                    assert_eq!(f.mul(a, b), ctx.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(4099), Some((4099, 1)));
        assert_eq!(prime_power(12), None);
        assert!(Field::with_order(16).is_ok());
    }

    #[test]
    fn json_round_trip_of_elements() {
        let f9 = Field::new(3, 2, None).unwrap();
        for e in f9.enumerate() {
            let j = f9.element_to_json(e.value());
            assert_eq!(f9.element_from_json(&j).unwrap(), e.value());
        }
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.element_from_json(&serde_json::json!(-1)).unwrap(), 6);
    }
}
