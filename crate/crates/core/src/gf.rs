//! Exact arithmetic in GF(r^n).
//!
//! Elements are packed as integers `Σ c_i r^i` over the polynomial basis
//! `1, x, …, x^{n-1}`. Besides that packed encoding every field carries a
//! second, *indexed* ordering: index 0 is the zero element and index `i ≥ 1`
//! is `g^{i-1}` for the chosen primitive element `g`. Groups and matrices
//! built on top of a field are indexed in this order, which makes the
//! multiplicative (Singer) cycle a literal cycle on indices `1..q-1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order for which log/exp tables are built.
pub const MAX_FIELD_ORDER: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus {0} is reducible")]
    ReduciblePolynomial(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    FieldTooLarge(u64),
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// Dense polynomials over GF(r), constant term first.
// ---------------------------------------------------------------------------

fn poly_trim(p: &mut Vec<u32>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn inv_mod_prime(a: u32, r: u32) -> u32 {
    // Fermat; r is prime and small.
    let mut result = 1u64;
    let mut base = u64::from(a % r);
    let mut e = r - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % u64::from(r);
        }
        base = base * base % u64::from(r);
        e >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo `m` over GF(r). `m` must be trimmed and nonzero.
fn poly_rem(a: &[u32], m: &[u32], r: u32) -> Vec<u32> {
    let mut rem: Vec<u32> = a.to_vec();
    poly_trim(&mut rem);
    let dm = m.len() - 1;
    let lead_inv = inv_mod_prime(m[dm], r);
    while rem.len() > dm {
        let top = rem.len() - 1;
        let coef = rem[top] * lead_inv % r;
        let shift = top - dm;
        for (i, &mc) in m.iter().enumerate() {
            let sub = coef * mc % r;
            rem[shift + i] = (rem[shift + i] + r - sub) % r;
        }
        poly_trim(&mut rem);
    }
    rem
}

fn poly_mul(a: &[u32], b: &[u32], r: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % r;
        }
    }
    poly_trim(&mut out);
    out
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most `deg/2`.
fn poly_is_irreducible(m: &[u32], r: u32) -> bool {
    let deg = m.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (r as u64).pow(d as u32);
        for packed in 0..count {
            let mut divisor = unpack(packed as u32, r, d);
            divisor.push(1);
            if poly_rem(m, &divisor, r).is_empty() {
                return false;
            }
        }
    }
    true
}

fn unpack(mut v: u32, r: u32, n: usize) -> Vec<u32> {
    let mut c = Vec::with_capacity(n);
    for _ in 0..n {
        c.push(v % r);
        v /= r;
    }
    c
}

fn pack(c: &[u32], r: u32) -> u32 {
    c.iter().rev().fold(0u32, |acc, &x| acc * r + x)
}

/// Formats a coefficient list (constant term first) as `x^3+x+1`.
pub fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let term = match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

/// A concrete finite field GF(r^n) with a fixed irreducible modulus.
#[derive(Clone)]
pub struct FieldSpec {
    characteristic: u32,
    degree: u32,
    modulus: Vec<u32>,
    order: usize,
    primitive: u32,
    /// `exp[i] = g^i` (packed), `i < q-1`.
    exp: Vec<u32>,
    /// `log[v]` for packed `v != 0`.
    log: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.characteristic == other.characteristic
            && self.degree == other.degree
            && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})/{}", self.order, format_poly(&self.modulus))
    }
}

#[derive(Serialize, Deserialize)]
struct FieldSpecRepr {
    characteristic: u32,
    degree: u32,
    modulus: Vec<u32>,
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FieldSpecRepr {
            characteristic: self.characteristic,
            degree: self.degree,
            modulus: self.modulus.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = FieldSpecRepr::deserialize(d)?;
        FieldSpec::new(repr.characteristic, repr.degree, Some(&repr.modulus))
            .map_err(serde::de::Error::custom)
    }
}

impl FieldSpec {
    /// Builds GF(r^n). Without an explicit modulus the irreducible polynomial
    /// with the smallest packed encoding is used (x^2+x+1, x^3+x+1, x^4+x+1, …).
    pub fn new(r: u32, n: u32, modulus: Option<&[u32]>) -> Result<Self, GfError> {
        if !is_prime_u64(u64::from(r)) {
            return Err(GfError::NonPrimeCharacteristic(r));
        }
        if n == 0 {
            return Err(GfError::InvalidModulus("degree must be positive".into()));
        }
        let q = (r as u64).checked_pow(n).unwrap_or(u64::MAX);
        if q > MAX_FIELD_ORDER as u64 {
            return Err(GfError::FieldTooLarge(q));
        }
        let n_us = n as usize;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != n_us + 1 {
                    return Err(GfError::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        n_us + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= r) {
                    return Err(GfError::InvalidModulus("coefficient not reduced mod r".into()));
                }
                if m[n_us] == 0 {
                    return Err(GfError::InvalidModulus("leading coefficient is zero".into()));
                }
                if !poly_is_irreducible(m, r) {
                    return Err(GfError::ReduciblePolynomial(format_poly(m)));
                }
                m.to_vec()
            }
            None => default_modulus(r, n_us),
        };

        let mut spec = FieldSpec {
            characteristic: r,
            degree: n,
            modulus,
            order: q as usize,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    /// GF(r^n) with the default modulus.
    pub fn with_default_modulus(r: u32, n: u32) -> Result<Self, GfError> {
        Self::new(r, n, None)
    }

    fn build_tables(&mut self) {
        let q = self.order;
        let target = (q - 1) as u64;
        let primitive = (1..q as u32)
            .find(|&v| self.raw_order(v) == target)
            .expect("a finite field always has a primitive element");
        self.primitive = primitive;
        self.exp = Vec::with_capacity(q - 1);
        self.log = vec![u32::MAX; q];
        let mut cur = 1u32;
        for i in 0..q - 1 {
            self.exp.push(cur);
            self.log[cur as usize] = i as u32;
            cur = self.mul_poly(cur, primitive);
        }
        debug_assert_eq!(cur, 1);
    }

    fn raw_order(&self, v: u32) -> u64 {
        let mut cur = v;
        let mut k = 1u64;
        while cur != 1 {
            cur = self.mul_poly(cur, v);
            k += 1;
            if k > self.order as u64 {
                return 0;
            }
        }
        k
    }

    /// Multiplication by schoolbook polynomial product and reduction. Kept
    /// independent of the log tables so the two can be compared.
    pub fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let r = self.characteristic;
        let n = self.degree as usize;
        let prod = poly_mul(&unpack(a, r, n), &unpack(b, r, n), r);
        let rem = poly_rem(&prod, &self.modulus, r);
        pack(&rem, r)
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements q = r^n.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { spec: self, value: 0 }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { spec: self, value: 1 }
    }

    /// The polynomial `x` (or the constant `0`/`1` when n = 1 and r = 2).
    pub fn x(&self) -> FieldElement<'_> {
        let v = if self.degree > 1 { self.characteristic } else { 0 };
        FieldElement { spec: self, value: v }
    }

    pub fn from_packed(&self, value: u32) -> Option<FieldElement<'_>> {
        ((value as usize) < self.order).then_some(FieldElement { spec: self, value })
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Option<FieldElement<'_>> {
        if coeffs.len() > self.degree as usize || coeffs.iter().any(|&c| c >= self.characteristic) {
            return None;
        }
        self.from_packed(pack(coeffs, self.characteristic))
    }

    /// Primitive element: the smallest packed value of multiplicative order q-1.
    pub fn primitive(&self) -> FieldElement<'_> {
        FieldElement { spec: self, value: self.primitive }
    }

    /// Element at position `index` of the indexed ordering (0, g^0, g^1, …).
    pub fn element_at(&self, index: usize) -> FieldElement<'_> {
        assert!(index < self.order, "field index out of range");
        let value = if index == 0 { 0 } else { self.exp[index - 1] };
        FieldElement { spec: self, value }
    }

    pub fn index_of(&self, e: FieldElement<'_>) -> usize {
        if e.value == 0 {
            0
        } else {
            self.log[e.value as usize] as usize + 1
        }
    }

    /// Iterates all elements in indexed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    // Index-space arithmetic used by the group layer.

    pub(crate) fn packed_at(&self, index: usize) -> u32 {
        if index == 0 {
            0
        } else {
            self.exp[index - 1]
        }
    }

    pub(crate) fn index_of_packed(&self, v: u32) -> usize {
        if v == 0 {
            0
        } else {
            self.log[v as usize] as usize + 1
        }
    }

    pub(crate) fn add_packed(&self, a: u32, b: u32) -> u32 {
        let r = self.characteristic;
        if r == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.degree {
            out += ((a % r + b % r) % r) * place;
            a /= r;
            b /= r;
            place *= r;
        }
        out
    }

    pub(crate) fn neg_packed(&self, a: u32) -> u32 {
        let r = self.characteristic;
        if r == 2 {
            return a;
        }
        let c: Vec<u32> = unpack(a, r, self.degree as usize)
            .into_iter()
            .map(|x| (r - x) % r)
            .collect();
        pack(&c, r)
    }

    pub(crate) fn add_idx(&self, i: usize, j: usize) -> usize {
        self.index_of_packed(self.add_packed(self.packed_at(i), self.packed_at(j)))
    }

    pub(crate) fn neg_idx(&self, i: usize) -> usize {
        self.index_of_packed(self.neg_packed(self.packed_at(i)))
    }

    pub(crate) fn mul_idx(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            0
        } else {
            (i - 1 + j - 1) % (self.order - 1) + 1
        }
    }

    pub(crate) fn inv_idx(&self, i: usize) -> usize {
        assert!(i != 0);
        let m = self.order - 1;
        (m - (i - 1)) % m + 1
    }
}

/// Lowest packed encoding among monic irreducible polynomials of degree n.
fn default_modulus(r: u32, n: usize) -> Vec<u32> {
    let count = (r as u64).pow(n as u32);
    (0..count)
        .map(|low| {
            let mut m = unpack(low as u32, r, n);
            m.push(1);
            m
        })
        .find(|m| poly_is_irreducible(m, r))
        .expect("irreducible polynomials exist in every degree")
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
pub struct FieldElement<'a> {
    spec: &'a FieldSpec,
    value: u32,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && same_spec(self.spec, other.spec)
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.coeffs()))
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.coeffs()))
    }
}

fn same_spec(a: &FieldSpec, b: &FieldSpec) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'a> FieldElement<'a> {
    pub fn spec(&self) -> &'a FieldSpec {
        self.spec
    }

    pub fn packed(&self) -> u32 {
        self.value
    }

    /// Polynomial-basis coordinates, constant term first, length n.
    pub fn coeffs(&self) -> Vec<u32> {
        unpack(self.value, self.spec.characteristic, self.spec.degree as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn index(&self) -> usize {
        self.spec.index_of(*self)
    }

    fn check(&self, other: &Self) -> Result<(), GfError> {
        if same_spec(self.spec, other.spec) {
            Ok(())
        } else {
            Err(GfError::SpecMismatch)
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, GfError> {
        self.check(&rhs)?;
        Ok(Self {
            spec: self.spec,
            value: self.spec.add_packed(self.value, rhs.value),
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, GfError> {
        self.check(&rhs)?;
        let neg = self.spec.neg_packed(rhs.value);
        Ok(Self {
            spec: self.spec,
            value: self.spec.add_packed(self.value, neg),
        })
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, GfError> {
        self.check(&rhs)?;
        Ok(Self {
            spec: self.spec,
            value: self.spec.mul_poly(self.value, rhs.value),
        })
    }

    pub fn inverse(self) -> Result<Self, GfError> {
        if self.value == 0 {
            return Err(GfError::ZeroInverse);
        }
        let idx = self.spec.inv_idx(self.index());
        Ok(self.spec.element_at(idx))
    }

    /// `self^e`; negative exponents invert first.
    pub fn pow(self, e: i64) -> Result<Self, GfError> {
        let base = if e < 0 { self.inverse()? } else { self };
        let mut e = e.unsigned_abs();
        let mut acc = self.spec.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let m = (self.spec.order - 1) as u64;
        let l = (self.index() - 1) as u64;
        Some(m / gcd(m, l))
    }

    /// Absolute trace `Σ_{i<n} a^{r^i}`, returned as an element of GF(r).
    pub fn trace(self) -> u32 {
        let r = i64::from(self.spec.characteristic);
        let mut acc = self.spec.zero();
        let mut conj = self;
        for _ in 0..self.spec.degree {
            acc = acc + conj;
            conj = conj.pow(r).expect("nonnegative exponent");
        }
        assert!(
            acc.value < self.spec.characteristic,
            "trace left the prime subfield"
        );
        acc.value
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl<'a> Add for FieldElement<'a> {
    type Output = FieldElement<'a>;
    fn add(self, rhs: Self) -> Self::Output {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl<'a> Sub for FieldElement<'a> {
    type Output = FieldElement<'a>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.checked_sub(rhs).expect("field mismatch in subtraction")
    }
}

impl<'a> Mul for FieldElement<'a> {
    type Output = FieldElement<'a>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.checked_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl<'a> Neg for FieldElement<'a> {
    type Output = FieldElement<'a>;
    fn neg(self) -> Self::Output {
        FieldElement {
            spec: self.spec,
            value: self.spec.neg_packed(self.value),
        }
    }
}

/// Summary of an exhaustive field self-test.
#[derive(Debug, Clone, Serialize)]
pub struct FieldSelfTest {
    pub field: String,
    pub order: usize,
    pub primitive: Vec<u32>,
    pub axioms_ok: bool,
    pub table_matches_polynomial: bool,
    pub trace_additive: bool,
    pub characters_orthogonal: bool,
}

impl FieldSelfTest {
    pub fn passed(&self) -> bool {
        self.axioms_ok && self.table_matches_polynomial && self.trace_additive && self.characters_orthogonal
    }
}

/// Exhaustive checks of the field axioms (triples), the log-table product
/// against polynomial multiplication, trace additivity and, for r = 2,
/// orthogonality of the additive character matrix.
pub fn self_test(spec: &FieldSpec) -> FieldSelfTest {
    let q = spec.order();
    let els: Vec<_> = spec.elements().collect();
    let zero = spec.zero();
    let one = spec.one();

    let mut axioms_ok = true;
    for &a in &els {
        axioms_ok &= a + zero == a && a * one == a && a + (-a) == zero;
        if !a.is_zero() {
            axioms_ok &= a * a.inverse().unwrap() == one;
        }
        for &b in &els {
            axioms_ok &= a + b == b + a && a * b == b * a;
            if q <= 64 {
                for &c in &els {
                    axioms_ok &= (a + b) + c == a + (b + c);
                    axioms_ok &= (a * b) * c == a * (b * c);
                    axioms_ok &= a * (b + c) == a * b + a * c;
                }
            }
        }
    }

    let table_matches_polynomial = (0..q).all(|i| {
        (0..q).all(|j| {
            let via_table = spec.packed_at(spec.mul_idx(i, j));
            via_table == spec.mul_poly(spec.packed_at(i), spec.packed_at(j))
        })
    });

    let trace_additive = els
        .iter()
        .all(|&a| els.iter().all(|&b| (a.trace() + b.trace()) % spec.characteristic() == (a + b).trace()));

    let characters_orthogonal = spec.characteristic() != 2 || additive_characters_orthogonal(spec);

    FieldSelfTest {
        field: spec.to_string(),
        order: q,
        primitive: spec.primitive().coeffs(),
        axioms_ok,
        table_matches_polynomial,
        trace_additive,
        characters_orthogonal,
    }
}

/// The q×q matrix `(-1)^{Tr(ab)}` has rows that are pairwise orthogonal with
/// squared norm q.
pub fn additive_characters_orthogonal(spec: &FieldSpec) -> bool {
    let els: Vec<_> = spec.elements().collect();
    let rows: Vec<Vec<i64>> = els
        .iter()
        .map(|&b| els.iter().map(|&a| if (a * b).trace() == 0 { 1 } else { -1 }).collect())
        .collect();
    let q = els.len() as i64;
    rows.iter().enumerate().all(|(i, ri)| {
        rows.iter().enumerate().all(|(j, rj)| {
            let dot: i64 = ri.iter().zip(rj).map(|(x, y)| x * y).sum();
            dot == if i == j { q } else { 0 }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn create_gf4_and_gf8() {
        let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(f4.to_string(), "GF(4)/x^2+x+1");
        let f8 = FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        assert_eq!(f8.order(), 8);
    }

    #[test]
    fn reducible_and_bad_inputs_rejected() {
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(GfError::ReduciblePolynomial(_))
        ));
        assert_eq!(FieldSpec::new(4, 2, None).unwrap_err(), GfError::NonPrimeCharacteristic(4));
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 1, 0])),
            Err(GfError::InvalidModulus(_))
        ));
    }

    #[test]
    fn default_moduli() {
        assert_eq!(FieldSpec::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 4, None).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(FieldSpec::new(2, 7, None).unwrap().modulus(), &[1, 1, 0, 0, 0, 0, 0, 1]);
        // x^2+1 is irreducible over GF(3)
        assert_eq!(FieldSpec::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn small_products() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let w = f4.x();
        assert_eq!(w * w, w + f4.one());
        assert_eq!(w.inverse().unwrap(), w + f4.one());

        let f8 = FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        let x = f8.x();
        let x2 = x * x;
        assert_eq!(x * x2, x + f8.one());
    }

    #[test]
    fn zero_inverse_and_mismatch() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        assert_eq!(f4.zero().inverse().unwrap_err(), GfError::ZeroInverse);
        assert_eq!(f4.one().checked_mul(f8.one()).unwrap_err(), GfError::SpecMismatch);
        assert_eq!(f4.x().pow(-1).unwrap(), f4.x().inverse().unwrap());
        assert_eq!(f4.x().pow(3).unwrap(), f4.one());
    }

    #[test]
    fn primitive_elements() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.primitive(), f4.x());
        assert_eq!(f4.primitive().multiplicative_order(), Some(3));

        let f8 = FieldSpec::new(2, 3, None).unwrap();
        let x = f8.x();
        assert_eq!(f8.primitive(), x);
        let mut powers = std::collections::HashSet::new();
        let mut cur = f8.one();
        for _ in 0..7 {
            powers.insert(cur.packed());
            cur = cur * x;
        }
        assert_eq!(powers.len(), 7);

        let f2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f2.primitive(), f2.one());
        assert_eq!(f2.primitive().multiplicative_order(), Some(1));
    }

    #[test]
    fn traces() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.zero().trace(), 0);
        assert_eq!(f4.x().trace(), 1);
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        assert_eq!(f8.one().trace(), 1);
    }

    #[test]
    fn indexed_ordering_is_singer_cycle() {
        let f = FieldSpec::new(2, 4, None).unwrap();
        let g = f.primitive();
        for i in 1..f.order() {
            assert_eq!(f.element_at(i), g.pow(i as i64 - 1).unwrap());
            assert_eq!(f.element_at(i).index(), i);
        }
        assert!(f.element_at(0).is_zero());
    }

    #[test]
    fn self_test_passes_up_to_16() {
        for n in 1..=4 {
            let f = FieldSpec::new(2, n, None).unwrap();
            assert!(self_test(&f).passed(), "{f}");
        }
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        assert!(self_test(&f9).passed());
    }

    #[test]
    fn serde_roundtrip_revalidates() {
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        let s = serde_json::to_string(&f8).unwrap();
        assert_eq!(s, r#"{"characteristic":2,"degree":3,"modulus":[1,1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f8);
        assert!(serde_json::from_str::<FieldSpec>(r#"{"characteristic":2,"degree":2,"modulus":[1,0,1]}"#).is_err());
    }
}
