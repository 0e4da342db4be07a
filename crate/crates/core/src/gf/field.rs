use std::fmt;

use serde::{Deserialize, Serialize};

use super::arith::{is_prime, pow_mod, prime_factors, prime_power};
use super::poly;
use crate::error::{Error, Result};

/// Largest field order accepted by [`make_field`]. Products of two encodings
/// must fit in a `u64`.
pub const MAX_FIELD_ORDER: u64 = 1 << 31;

/// Extension fields up to this order get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 16;

/// Parameters of GF(p^a): characteristic, degree, order and the defining
/// monic irreducible (little-endian, length a+1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub a: u32,
    pub q: u64,
    pub modulus: Vec<u64>,
}

/// A field element in its canonical integer encoding `sum coeffs[i] * p^i`.
///
/// Elements do not carry their field; all arithmetic goes through [`Field`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn enc(self) -> u64 {
        self.0
    }

    /// Wraps an encoding without range checking; see [`Field::try_elem`].
    pub fn from_raw(enc: u64) -> Self {
        FieldElement(enc)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    group_primes: Vec<u64>,
    tables: Option<LogTables>,
}

/// Builds GF(p^a) with the lexicographically first monic irreducible modulus.
pub fn make_field(p: u64, a: u32) -> Result<Field> {
    Field::new(p, a)
}

impl Field {
    pub fn new(p: u64, a: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if a == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        let q =
            p.checked_pow(a).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(Error::OrderTooLarge { p, a, bound: MAX_FIELD_ORDER })?;
        let modulus = poly::first_irreducible(p, a);
        let mut field = Field { spec: FieldSpec { p, a, q, modulus }, group_primes: prime_factors(q - 1), tables: None };
        if a > 1 && q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// GF(q) for a prime power q.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, a)
    }

    fn build_tables(&self) -> LogTables {
        let q = self.spec.q;
        let g = (1..q).map(FieldElement).find(|&x| self.order_slow(x) == q - 1).expect("the multiplicative group is cyclic");
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut cur = FieldElement::ONE;
        for i in 0..n {
            exp[i] = cur.0 as u32;
            exp[i + n] = cur.0 as u32;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, g);
        }
        LogTables { exp, log }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.a
    }

    pub fn order(&self) -> u64 {
        self.spec.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.spec.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.spec.a == 1
    }

    pub fn characteristic_two(&self) -> bool {
        self.spec.p == 2
    }

    /// Element with the given encoding. Panics if `enc >= q`.
    pub fn elem(&self, enc: u64) -> FieldElement {
        assert!(enc < self.spec.q, "encoding {enc} out of range for GF({})", self.spec.q);
        FieldElement(enc)
    }

    pub fn try_elem(&self, enc: u64) -> Option<FieldElement> {
        (enc < self.spec.q).then_some(FieldElement(enc))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.spec.p as i64) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.spec.q).map(FieldElement)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.spec.q).map(FieldElement)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        let mut rest = x.0;
        (0..self.spec.a)
            .map(|_| {
                let c = rest % self.spec.p;
                rest /= self.spec.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let p = self.spec.p;
        let reduced = poly::rem(coeffs, &self.spec.modulus, p);
        FieldElement(reduced.iter().rev().fold(0u64, |acc, &c| acc * p + c % p))
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.a == 1 {
            return FieldElement((x.0 + y.0) % p);
        }
        if p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.a == 1 {
            return FieldElement((p - x.0) % p);
        }
        if p == 2 {
            return x;
        }
        let mut a = x.0;
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        if self.spec.a == 1 {
            return FieldElement(x.0 * y.0 % self.spec.p);
        }
        match &self.tables {
            Some(t) => FieldElement(t.exp[(t.log[x.0 as usize] + t.log[y.0 as usize]) as usize] as u64),
            None => self.mul_slow(x, y),
        }
    }

    fn mul_slow(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.spec.p;
        let prod = poly::mul_mod(&self.coeffs(x), &self.coeffs(y), &self.spec.modulus, p);
        FieldElement(prod.iter().rev().fold(0u64, |acc, &c| acc * p + c))
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.0 == 0 {
            return FieldElement::ZERO;
        }
        if self.spec.a == 1 {
            return FieldElement(pow_mod(x.0, e, self.spec.p));
        }
        if let Some(t) = &self.tables {
            let n = self.spec.q - 1;
            let l = (t.log[x.0 as usize] as u64 * (e % n)) % n;
            return FieldElement(t.exp[l as usize] as u64);
        }
        self.pow_slow(x, e)
    }

    fn pow_slow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Option<FieldElement> {
        if x.0 == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            let n = (self.spec.q - 1) as u32;
            let l = (n - t.log[x.0 as usize]) % n;
            return Some(FieldElement(t.exp[l as usize] as u64));
        }
        Some(self.pow(x, self.spec.q - 2))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Option<FieldElement> {
        self.inv(y).map(|yi| self.mul(x, yi))
    }

    fn order_slow(&self, x: FieldElement) -> u64 {
        let mut t = self.spec.q - 1;
        for &r in &self.group_primes {
            while t.is_multiple_of(r) && self.pow_slow(x, t / r) == FieldElement::ONE {
                t /= r;
            }
        }
        t
    }

    /// Least `t >= 1` with `x^t = 1`, found by stripping prime factors from
    /// `q - 1`.
    pub fn element_order(&self, x: FieldElement) -> Result<u64> {
        if x.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let mut t = self.spec.q - 1;
        for &r in &self.group_primes {
            while t.is_multiple_of(r) && self.pow(x, t / r) == FieldElement::ONE {
                t /= r;
            }
        }
        Ok(t)
    }

    pub fn is_primitive(&self, x: FieldElement) -> bool {
        if x.0 == 0 {
            return false;
        }
        let n = self.spec.q - 1;
        self.group_primes.iter().all(|&r| self.pow(x, n / r) != FieldElement::ONE)
    }

    /// Primitive elements in increasing encoding.
    pub fn primitive_iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.nonzero().filter(move |&x| self.is_primitive(x))
    }

    pub fn first_primitive(&self) -> FieldElement {
        self.primitive_iter().next().expect("the multiplicative group is cyclic")
    }

    /// Square root when one exists (brute force; planes stay small).
    pub fn sqrt(&self, x: FieldElement) -> Option<FieldElement> {
        self.elements().find(|&t| self.mul(t, t) == x)
    }
}
