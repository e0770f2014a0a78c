//! Finite fields GF(p^m) in polynomial basis.
//!
//! An element is stored as a single integer `rep` in `[0, q)`: the base-p
//! digits of `rep` are the coefficients of the element's polynomial, with
//! the coefficient of `x^0` as the least-significant digit. Multiplication
//! is schoolbook polynomial multiplication followed by reduction modulo the
//! field's monic irreducible modulus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order accepted unless a different bound is requested.
pub const DEFAULT_ORDER_BOUND: u64 = 1 << 20;

// With p >= 2 and q <= 2^20 the degree never exceeds 20; the bound below
// leaves room for callers that raise the order bound.
const MAX_DEGREE: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("modulus is not a monic irreducible polynomial of the right degree: {0}")]
    ReducibleModulus(String),
    #[error("no built-in modulus for GF({p}^{m}); supply one")]
    NoBuiltinModulus { p: u64, m: u32 },
    #[error("field order {p}^{m} exceeds the configured bound {bound}")]
    OrderTooLarge { p: u64, m: u32, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element representation {rep} out of range for a field of order {order}")]
    InvalidRep { rep: u64, order: u64 },
}

/// Serialized form of a field: `{"p": int, "m": int, "modulus": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub m: u32,
    #[serde(default)]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    p: u32,
    m: u32,
    // constant term first, length m + 1, leading coefficient 1
    modulus: Vec<u32>,
    order: u32,
}

/// A validated finite field GF(p^m).
///
/// Cloning is cheap; all clones describe the same field.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}, modulus {:?})",
            self.inner.p, self.inner.m, self.inner.modulus
        )
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.m)
        }
    }
}

/// Conway polynomials for the non-prime orders with a built-in modulus.
fn builtin_modulus(p: u64, m: u32) -> Option<&'static [u32]> {
    let poly: &'static [u32] = match (p, m) {
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 1, 1, 0, 1],
        (2, 7) => &[1, 1, 0, 0, 0, 0, 0, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (3, 4) => &[2, 0, 0, 2, 1],
        (5, 2) => &[2, 4, 1],
        (5, 3) => &[3, 3, 0, 1],
        (7, 2) => &[3, 6, 1],
        (11, 2) => &[2, 7, 1],
        _ => return None,
    };
    Some(poly)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, `p` prime.
pub fn prime_power(q: u64) -> Result<(u64, u32), GfError> {
    if q < 2 {
        return Err(GfError::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Ok((q, 1));
    }
    let mut rest = q;
    let mut m = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Ok((p, m))
    } else {
        Err(GfError::NotPrimePower(q))
    }
}

fn checked_order(p: u64, m: u32, bound: u64) -> Result<u64, GfError> {
    let mut order = 1u64;
    for _ in 0..m {
        order = order
            .checked_mul(p)
            .filter(|&o| o <= bound)
            .ok_or(GfError::OrderTooLarge { p, m, bound })?;
    }
    if order > u32::MAX as u64 {
        return Err(GfError::OrderTooLarge { p, m, bound });
    }
    Ok(order)
}

/// Remainder of `num` modulo the monic `den` over GF(p); both constant term first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    // every monic divisor candidate of degree 1..=m/2
    for deg in 1..=m / 2 {
        let count = (p as u64).pow(deg as u32);
        for code in 0..count {
            let mut cand = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                cand.push((c % p as u64) as u32);
                c /= p as u64;
            }
            cand.push(1);
            if poly_rem(modulus, &cand, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^m) with the default order bound.
    ///
    /// When `modulus` is `None` and `m > 1`, a built-in Conway polynomial is
    /// used for the orders 4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125 and 128.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Self, GfError> {
        Self::with_order_bound(p, m, modulus, DEFAULT_ORDER_BOUND)
    }

    pub fn with_order_bound(p: u64, m: u32, modulus: Option<&[u64]>, bound: u64) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(GfError::InvalidDegree);
        }
        let order = checked_order(p, m, bound)?;
        if m as usize > MAX_DEGREE {
            return Err(GfError::OrderTooLarge { p, m, bound });
        }
        let modulus: Vec<u32> = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1 {
                    return Err(GfError::ReducibleModulus(format!(
                        "expected {} coefficients for degree {}, got {}",
                        m + 1,
                        m,
                        coeffs.len()
                    )));
                }
                if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
                    return Err(GfError::ReducibleModulus(format!(
                        "coefficient {c} is not reduced mod {p}"
                    )));
                }
                if coeffs[m as usize] != 1 {
                    return Err(GfError::ReducibleModulus("leading coefficient must be 1".into()));
                }
                coeffs.iter().map(|&c| c as u32).collect()
            }
            None if m == 1 => vec![0, 1],
            None => builtin_modulus(p, m)
                .ok_or(GfError::NoBuiltinModulus { p, m })?
                .to_vec(),
        };
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            if !is_irreducible(&modulus, p as u32) {
                return Err(GfError::ReducibleModulus(format!(
                    "{modulus:?} has a proper factor over GF({p})"
                )));
            }
            modulus
        };
        Ok(FieldSpec {
            inner: Arc::new(Inner {
                p: p as u32,
                m,
                modulus,
                order: order as u32,
            }),
        })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self, GfError> {
        let (p, m) = prime_power(q)?;
        Self::new(p, m, None)
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Self, GfError> {
        Self::new(desc.p, desc.m, desc.modulus.as_deref())
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.inner.p as u64,
            m: self.inner.m,
            modulus: Some(self.inner.modulus.iter().map(|&c| c as u64).collect()),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            rep: 0,
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            rep: 1,
            field: self.clone(),
        }
    }

    pub fn element(&self, rep: u64) -> Result<FieldElement, GfError> {
        if rep >= self.inner.order as u64 {
            return Err(GfError::InvalidRep {
                rep,
                order: self.inner.order as u64,
            });
        }
        Ok(FieldElement {
            rep: rep as u32,
            field: self.clone(),
        })
    }

    /// All `q` elements in ascending rep order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.order).map(move |rep| FieldElement {
            rep,
            field: self.clone(),
        })
    }

    // Raw arithmetic on reps. Callers guarantee reps are < q.

    pub fn add_reps(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.m == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    pub fn neg_rep(&self, a: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.m == 1 {
            return (p - a % p) % p;
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    pub fn sub_reps(&self, a: u32, b: u32) -> u32 {
        self.add_reps(a, self.neg_rep(b))
    }

    pub fn mul_reps(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.p as u64;
        if self.inner.m == 1 {
            return (a as u64 * b as u64 % p) as u32;
        }
        let m = self.inner.m as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        let modulus = &self.inner.modulus;
        for top in (m..2 * m - 1).rev() {
            let lead = prod[top];
            if lead == 0 {
                continue;
            }
            // x^top = -(modulus - x^m) * x^(top - m)
            for (i, &c) in modulus[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + (p - lead) * c as u64) % p;
            }
            prod[top] = 0;
        }
        let mut out = 0u64;
        for i in (0..m).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }

    pub fn pow_rep(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_reps(acc, base);
            }
            base = self.mul_reps(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv_rep(&self, a: u32) -> Result<u32, GfError> {
        if a == 0 {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.pow_rep(a, self.inner.order as u64 - 2))
    }

    fn digits(&self, mut a: u32) -> [u32; MAX_DEGREE] {
        let p = self.inner.p;
        let mut out = [0u32; MAX_DEGREE];
        for slot in out.iter_mut().take(self.inner.m as usize) {
            *slot = a % p;
            a /= p;
        }
        out
    }
}

/// An element of a specific [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    rep: u32,
    field: FieldSpec,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// A single field operation, as accepted by [`arith`].
#[derive(Debug, Clone, Copy)]
pub enum Operation<'a> {
    Add(&'a FieldElement),
    Sub(&'a FieldElement),
    Mul(&'a FieldElement),
    Div(&'a FieldElement),
    Neg,
    Inv,
    Pow(u64),
}

/// Applies `op` to `a`.
pub fn arith(a: &FieldElement, op: Operation<'_>) -> Result<FieldElement, GfError> {
    match op {
        Operation::Add(b) => a.checked_add(b),
        Operation::Sub(b) => a.checked_sub(b),
        Operation::Mul(b) => a.checked_mul(b),
        Operation::Div(b) => a.checked_div(b),
        Operation::Neg => Ok(a.neg_elem()),
        Operation::Inv => a.inv(),
        Operation::Pow(e) => Ok(a.pow(e)),
    }
}

impl FieldElement {
    pub fn rep(&self) -> u32 {
        self.rep
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with_rep(&self, rep: u32) -> FieldElement {
        FieldElement {
            rep,
            field: self.field.clone(),
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        Ok(self.with_rep(self.field.add_reps(self.rep, other.rep)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        Ok(self.with_rep(self.field.sub_reps(self.rep, other.rep)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        Ok(self.with_rep(self.field.mul_reps(self.rep, other.rep)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(other)?;
        let inv = self.field.inv_rep(other.rep)?;
        Ok(self.with_rep(self.field.mul_reps(self.rep, inv)))
    }

    fn neg_elem(&self) -> FieldElement {
        self.with_rep(self.field.neg_rep(self.rep))
    }

    pub fn inv(&self) -> Result<FieldElement, GfError> {
        Ok(self.with_rep(self.field.inv_rep(self.rep)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with_rep(self.field.pow_rep(self.rep, e))
    }
}

// Operator forms panic on mixed fields; use the `checked_*` methods or
// `arith` to get an error instead.

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch in subtraction")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_elem()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldSpec {
        FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn prime_field() {
        let f = FieldSpec::new(11, 1, None).unwrap();
        assert_eq!(f.order(), 11);
        assert_eq!(f.modulus(), &[0, 1]);
        let a = f.element(6).unwrap();
        let b = f.element(7).unwrap();
        assert_eq!((&a * &b).rep(), 9);
        assert_eq!(f.element(2).unwrap().inv().unwrap().rep(), 6);
    }

    #[test]
    fn gf8_multiplication() {
        let f = gf8();
        assert_eq!(f.order(), 8);
        let x = f.element(2).unwrap();
        let x2 = f.element(4).unwrap();
        // x * x^2 = x^3 = x + 1
        assert_eq!(arith(&x, Operation::Mul(&x2)).unwrap().rep(), 3);
    }

    #[test]
    fn malformed_moduli_rejected() {
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 1])),
            Err(GfError::ReducibleModulus(_))
        ));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(GfError::ReducibleModulus(_))
        ));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(matches!(
            FieldSpec::new(2, 4, Some(&[1, 0, 1, 0, 1])),
            Err(GfError::ReducibleModulus(_))
        ));
        assert!(matches!(
            FieldSpec::new(3, 2, Some(&[1, 0, 2])),
            Err(GfError::ReducibleModulus(_))
        ));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(6, 1, None), Err(GfError::NonPrimeCharacteristic(6)));
        assert_eq!(FieldSpec::new(5, 0, None), Err(GfError::InvalidDegree));
        assert_eq!(
            FieldSpec::new(3, 5, None),
            Err(GfError::NoBuiltinModulus { p: 3, m: 5 })
        );
        assert!(matches!(
            FieldSpec::new(2, 21, None),
            Err(GfError::OrderTooLarge { .. })
        ));
        assert!(matches!(
            FieldSpec::with_order_bound(13, 2, None, 100),
            Err(GfError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn builtin_table_is_irreducible() {
        for q in [4u64, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128] {
            let f = FieldSpec::of_order(q).unwrap();
            assert_eq!(f.order() as u64, q);
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(11), Ok((11, 1)));
        assert_eq!(prime_power(8), Ok((2, 3)));
        assert_eq!(prime_power(81), Ok((3, 4)));
        assert_eq!(prime_power(12), Err(GfError::NotPrimePower(12)));
        assert_eq!(prime_power(1), Err(GfError::NotPrimePower(1)));
    }

    #[test]
    fn division_and_mismatch_errors() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        let g = FieldSpec::new(7, 1, None).unwrap();
        let a = f.element(3).unwrap();
        assert_eq!(a.checked_div(&f.zero()), Err(GfError::DivisionByZero));
        assert_eq!(f.zero().inv(), Err(GfError::DivisionByZero));
        assert_eq!(a.checked_add(&g.one()), Err(GfError::FieldMismatch));
        assert_eq!(arith(&a, Operation::Mul(&g.one())), Err(GfError::FieldMismatch));
        assert!(f.element(5).is_err());
    }

    #[test]
    fn field_equality_is_structural() {
        let a = FieldSpec::new(2, 3, None).unwrap();
        let b = FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        let c = FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.one().checked_add(&c.one()).is_err());
    }

    #[test]
    fn enumeration_order() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        let reps: Vec<u32> = f.elements().map(|e| e.rep()).collect();
        assert_eq!(reps, vec![0, 1, 2, 3, 4]);
        let g = gf8();
        let all: Vec<u32> = g.elements().map(|e| e.rep()).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], 0);
        assert_eq!(all[7], 7);
    }

    fn small_fields() -> Vec<FieldSpec> {
        vec![
            FieldSpec::new(2, 1, None).unwrap(),
            FieldSpec::new(5, 1, None).unwrap(),
            FieldSpec::new(7, 1, None).unwrap(),
            FieldSpec::of_order(4).unwrap(),
            gf8(),
            FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).unwrap(),
            FieldSpec::of_order(9).unwrap(),
            FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap(),
            FieldSpec::of_order(16).unwrap(),
        ]
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add_reps(a, 0), a);
                assert_eq!(f.mul_reps(a, 1), a);
                assert_eq!(f.add_reps(a, f.neg_rep(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul_reps(a, f.inv_rep(a).unwrap()), 1);
                    assert_eq!(f.pow_rep(a, q as u64 - 1), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add_reps(a, b), f.add_reps(b, a));
                    assert_eq!(f.mul_reps(a, b), f.mul_reps(b, a));
                    assert_eq!(f.sub_reps(f.add_reps(a, b), b), a);
                    for c in 0..q {
                        assert_eq!(f.add_reps(f.add_reps(a, b), c), f.add_reps(a, f.add_reps(b, c)));
                        assert_eq!(f.mul_reps(f.mul_reps(a, b), c), f.mul_reps(a, f.mul_reps(b, c)));
                        assert_eq!(
                            f.mul_reps(a, f.add_reps(b, c)),
                            f.add_reps(f.mul_reps(a, b), f.mul_reps(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let f = gf8();
        let json = serde_json::to_string(&f.descriptor()).unwrap();
        assert_eq!(json, r#"{"p":2,"m":3,"modulus":[1,1,0,1]}"#);
        let back: FieldDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(FieldSpec::from_descriptor(&back).unwrap(), f);
        let bare: FieldDescriptor = serde_json::from_str(r#"{"p":11,"m":1}"#).unwrap();
        assert_eq!(FieldSpec::from_descriptor(&bare).unwrap().order(), 11);
    }
}
