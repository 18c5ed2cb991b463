//! Exact arithmetic in GF(p^n).
//!
//! An element is stored as the integer `c0 + c1*p + ... + c_{n-1}*p^(n-1)` of
//! its coefficient vector over the polynomial basis `1, x, ..., x^(n-1)`.
//! Multiplication goes through exp/log tables built once per field from a
//! primitive element, so every operation is a couple of table lookups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order accepted (3^11).
pub const MAX_ORDER: u64 = 177_147;

/// Non-binary extension fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("modulus must have {expected} coefficients, got {got}")]
    ModulusLength { expected: usize, got: usize },
    #[error("modulus coefficient {0} is not reduced mod p")]
    ModulusCoefficient(u32),
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus {0} is reducible over GF(p)")]
    Reducible(String),
    #[error("no built-in modulus for q = {0}; pass one explicitly as p^n:c0,c1,...")]
    NoBuiltinModulus(u64),
    #[error("{value} is not an element of GF({q})")]
    OutOfRange { value: u64, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different fields ({0} vs {1})")]
    Mismatch(String, String),
    #[error("cannot parse field description {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, FieldError>;

/// Parameters of a finite field: characteristic, degree and defining modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    /// `n + 1` coefficients, constant term first; the last one is 1.
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// Validates `(p, n, modulus)`. Irreducibility is checked by trial
    /// division with every monic polynomial of degree at most `n / 2`.
    pub fn new(p: u32, n: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::ZeroExponent);
        }
        let q = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        if modulus.len() != n as usize + 1 {
            return Err(FieldError::ModulusLength {
                expected: n as usize + 1,
                got: modulus.len(),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::ModulusCoefficient(c));
        }
        if modulus[n as usize] != 1 {
            return Err(FieldError::NotMonic);
        }
        let spec = FieldSpec { p, n, modulus };
        if !spec.modulus_is_irreducible() {
            return Err(FieldError::Reducible(spec.modulus_string()));
        }
        Ok(spec)
    }

    /// Looks up the built-in modulus for `p^n`.
    pub fn builtin(p: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::ZeroExponent);
        }
        let q = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        let modulus = builtin_modulus(p, n).ok_or(FieldError::NoBuiltinModulus(q))?;
        FieldSpec::new(p, n, modulus)
    }

    /// Builds the spec for a prime power `q` from the built-in table.
    pub fn for_order(q: u64) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or(FieldError::NoBuiltinModulus(q))?;
        FieldSpec::builtin(p, n)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.n)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `c0,c1,...,cn`
    pub fn modulus_string(&self) -> String {
        join(&self.modulus)
    }

    fn modulus_is_irreducible(&self) -> bool {
        let p = self.p;
        let n = self.n as usize;
        for d in 1..=n / 2 {
            // every monic polynomial of degree d
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut g = decode_digits(code, p, d);
                g.push(1);
                if poly_rem(&self.modulus, &g, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}

/// Report-header form: `p n c0,c1,...,cn`.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.p, self.n, self.modulus_string())
    }
}

/// Accepts either a prime power (`9`) or an explicit modulus (`3^2:1,0,1`).
impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || FieldError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once(':') {
            None => {
                let q: u64 = s.parse().map_err(|_| bad())?;
                FieldSpec::for_order(q)
            }
            Some((pn, coeffs)) => {
                let (p, n) = pn.split_once('^').ok_or_else(bad)?;
                let p: u32 = p.trim().parse().map_err(|_| bad())?;
                let n: u32 = n.trim().parse().map_err(|_| bad())?;
                let modulus = parse_list(coeffs).ok_or_else(bad)?;
                FieldSpec::new(p, n, modulus)
            }
        }
    }
}

/// Built-in moduli. Any prime gets `x`; the extension fields use the
/// polynomials listed here.
pub fn builtin_modulus(p: u32, n: u32) -> Option<Vec<u32>> {
    if n == 1 {
        return is_prime(p).then(|| vec![0, 1]);
    }
    let m: &[u32] = match (p, n) {
        (2, 2) => &[1, 1, 1],          // x^2 + x + 1
        (2, 3) => &[1, 1, 0, 1],       // x^3 + x + 1
        (2, 4) => &[1, 1, 0, 0, 1],    // x^4 + x + 1
        (2, 5) => &[1, 0, 1, 0, 0, 1], // x^5 + x^2 + 1
        (3, 2) => &[1, 0, 1],          // x^2 + 1
        (3, 3) => &[1, 2, 0, 1],       // x^3 + 2x + 1
        (3, 4) => &[2, 0, 0, 2, 1],    // x^4 + 2x^3 + 2
        (3, 5) => &[1, 2, 0, 0, 0, 1], // x^5 + 2x + 1
        (5, 2) => &[2, 4, 1],          // x^2 + 4x + 2
        _ => return None,
    };
    Some(m.to_vec())
}

/// An element of some GF(q), as its canonical integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[repr(transparent)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps a canonical value without a range check; use [`Field::elem`]
    /// when the value comes from outside.
    pub const fn from_raw(value: u32) -> Self {
        FieldElem(value)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A field with its arithmetic tables.
#[derive(Clone)]
pub struct Field {
    spec: FieldSpec,
    q: u32,
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`, doubled to skip a reduction.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) [{}]", self.q, self.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

/// `make_field(p, n, modulus)`: validates the parameters (or takes the
/// built-in modulus) and builds the arithmetic tables.
pub fn make_field(p: u32, n: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
    let spec = match modulus {
        Some(m) => FieldSpec::new(p, n, m)?,
        None => FieldSpec::builtin(p, n)?,
    };
    Ok(Field::new(spec))
}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let p = spec.p;
        let n = spec.n as usize;
        let q = spec.q();
        let slow_mul = |a: u32, b: u32| -> u32 {
            let pa = decode_digits(a as u64, p, n);
            let pb = decode_digits(b as u64, p, n);
            let prod = poly_mul(&pa, &pb, p);
            encode_digits(&poly_rem(&prod, &spec.modulus, p), p)
        };

        let order = q - 1;
        let (exp, log) = if q == 2 {
            (vec![1, 1], vec![0, 0])
        } else {
            let mut found = None;
            for g in 2..q {
                let mut powers = Vec::with_capacity(order as usize);
                let mut x = 1u32;
                for _ in 0..order {
                    powers.push(x);
                    x = slow_mul(x, g);
                    if x == 1 {
                        break;
                    }
                }
                if powers.len() == order as usize && x == 1 {
                    found = Some(powers);
                    break;
                }
            }
            // A field of order q always has a primitive element.
            let powers = found.expect("multiplicative group must be cyclic");
            let mut log = vec![0u32; q as usize];
            for (i, &v) in powers.iter().enumerate() {
                log[v as usize] = i as u32;
            }
            let mut exp = powers.clone();
            exp.extend_from_slice(&powers);
            (exp, log)
        };

        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let d: Vec<u32> = decode_digits(a as u64, p, n)
                    .into_iter()
                    .map(|c| (p - c) % p)
                    .collect();
                encode_digits(&d, p)
            })
            .collect();

        let add = (p != 2 && n > 1 && q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b, p);
                }
            }
            t
        });

        Field {
            spec,
            q,
            exp,
            log,
            neg,
            add,
        }
    }

    /// Parses a CLI-style description (see [`FieldSpec::from_str`]).
    pub fn parse(s: &str) -> Result<Self> {
        Ok(Field::new(s.parse()?))
    }

    pub fn for_order(q: u64) -> Result<Self> {
        Ok(Field::new(FieldSpec::for_order(q)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn elem(&self, value: u64) -> Result<FieldElem> {
        if value < self.q as u64 {
            Ok(FieldElem(value as u32))
        } else {
            Err(FieldError::OutOfRange { value, q: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.spec.p as i64) as u32)
    }

    /// Generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> FieldElem {
        FieldElem(if self.q == 2 { 1 } else { self.exp[1] })
    }

    /// All elements in ascending canonical order.
    pub fn elements(&self) -> Vec<FieldElem> {
        (0..self.q).map(FieldElem).collect()
    }

    /// Coefficients `c0..c_{n-1}` of an element.
    pub fn coefficients(&self, a: FieldElem) -> Vec<u32> {
        decode_digits(a.0 as u64, self.spec.p, self.spec.n as usize)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElem> {
        let p = self.spec.p;
        if coeffs.len() > self.spec.n as usize {
            return Err(FieldError::Parse(format!("{coeffs:?}")));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(FieldError::OutOfRange { value: c as u64, q: p });
        }
        Ok(FieldElem(encode_digits(coeffs, p)))
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        let p = self.spec.p;
        FieldElem(if p == 2 {
            a.0 ^ b.0
        } else if self.spec.n == 1 {
            let s = a.0 + b.0;
            if s >= p {
                s - p
            } else {
                s
            }
        } else if let Some(t) = &self.add {
            t[(a.0 * self.q + b.0) as usize]
        } else {
            digit_add(a.0, b.0, p)
        })
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let i = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElem(self.exp[i as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FieldElem(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^s)`, the s-th power of the Frobenius map.
    pub fn frob_pow(&self, a: FieldElem, s: u32) -> FieldElem {
        (0..s).fold(a, |x, _| self.pow(x, self.spec.p as u64))
    }

    /// Whether `x -> x^e` permutes the field, checked by enumeration.
    pub fn power_map_is_bijective(&self, e: u64) -> bool {
        let mut seen = vec![false; self.q() as usize];
        for a in self.elements() {
            seen[self.pow(a, e).value() as usize] = true;
        }
        seen.into_iter().all(|x| x)
    }

    /// Wraps an element together with its field for checked arithmetic.
    pub fn scalar(&self, value: u64) -> Result<Scalar<'_>> {
        Ok(Scalar {
            field: self,
            elem: self.elem(value)?,
        })
    }
}

/// An element bound to its field. Binary operations check that both
/// operands come from the same field.
#[derive(Debug, Clone, Copy)]
pub struct Scalar<'f> {
    field: &'f Field,
    elem: FieldElem,
}

impl<'f> Scalar<'f> {
    pub fn elem(&self) -> FieldElem {
        self.elem
    }

    fn same_field(&self, other: &Scalar<'_>) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field.spec == other.field.spec {
            Ok(())
        } else {
            Err(FieldError::Mismatch(
                self.field.spec.to_string(),
                other.field.spec.to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Scalar<'_>) -> Result<Scalar<'f>> {
        self.same_field(other)?;
        Ok(Scalar {
            field: self.field,
            elem: self.field.add(self.elem, other.elem),
        })
    }

    pub fn try_mul(&self, other: &Scalar<'_>) -> Result<Scalar<'f>> {
        self.same_field(other)?;
        Ok(Scalar {
            field: self.field,
            elem: self.field.mul(self.elem, other.elem),
        })
    }

    pub fn neg(&self) -> Scalar<'f> {
        Scalar {
            field: self.field,
            elem: self.field.neg(self.elem),
        }
    }

    pub fn inv(&self) -> Result<Scalar<'f>> {
        Ok(Scalar {
            field: self.field,
            elem: self.field.inv(self.elem)?,
        })
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^n` with `p` prime, if it is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 || q > u32::MAX as u64 {
        return None;
    }
    let q = q as u32;
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut n = 0;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

fn digit_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn decode_digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

fn encode_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

/// Remainder of `a` modulo the monic polynomial `m`, padded to `deg m` coefficients.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &mc) in m[..dm].iter().enumerate() {
                let sub = (lead as u64 * mc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
    }
    r.resize(dm, 0);
    r
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn parse_list(s: &str) -> Option<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().ok())
        .collect()
}
