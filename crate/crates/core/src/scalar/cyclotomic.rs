//! Elements of the cyclotomic field Q(ζ_N), stored in canonical form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (low degree first) of the N-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            poly = exact_monic_division(&poly, &phi_d);
        }
    }
    let poly = Arc::new(poly);
    cache().lock().unwrap().insert(n, poly.clone());
    poly
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient, i.e. the degree of Φ_N.
pub fn totient(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn reduce(mut v: Vec<Rational>, order: u32) -> Vec<Rational> {
    trim(&mut v);
    if order == 1 {
        // Φ_1 = x - 1: evaluate at 1
        if v.len() > 1 {
            let s = v.iter().fold(Rational::zero(), |acc, c| acc + c);
            v = if s.is_zero() { vec![] } else { vec![s] };
        }
        return v;
    }
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    if v.len() <= deg {
        return v;
    }
    for top in (deg..v.len()).rev() {
        if v[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[top], Rational::zero());
        for (j, pj) in phi.iter().enumerate().take(deg) {
            if !pj.is_zero() {
                v[top - deg + j] -= &c * Rational::from_integer(pj.clone());
            }
        }
    }
    v.truncate(deg);
    trim(&mut v);
    v
}

/// An exact element of Q(ζ_N): the coefficient vector of a polynomial in ζ_N
/// of degree below φ(N), reduced modulo the N-th cyclotomic polynomial.
#[derive(Clone, Debug)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn zero() -> Self {
        CycScalar { order: 1, coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let coeffs = if q.is_zero() { vec![] } else { vec![q] };
        CycScalar { order: 1, coeffs }
    }

    /// Builds Σ coeffs[j] ζ_N^j for arbitrary-length input and reduces it.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(CycScalar { order, coeffs: reduce(coeffs, order) })
    }

    /// ζ_N^power for any integer power.
    pub fn root_of_unity(order: u32, power: i64) -> Self {
        assert!(order > 0, "root of unity of order 0");
        let e = power.rem_euclid(order as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        CycScalar { order, coeffs: reduce(v, order) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Reduced coefficients, lowest power first, trailing zeros removed.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Re-expresses the element in Q(ζ_target); requires N | target.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if target == 0 {
            return Err(Error::ZeroOrder);
        }
        if target == self.order {
            return Ok(self.clone());
        }
        if !target.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch { left: self.order, right: target });
        }
        if self.coeffs.len() <= 1 {
            return Ok(CycScalar { order: target, coeffs: self.coeffs.clone() });
        }
        let step = (target / self.order) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step] = c.clone();
        }
        Ok(CycScalar { order: target, coeffs: reduce(v, target) })
    }

    fn common_order(&self, other: &Self) -> Result<u32> {
        let (a, b) = (self.order, other.order);
        if a == b || b == 1 || (a % b == 0) {
            Ok(a)
        } else if a == 1 || b % a == 0 {
            Ok(b)
        } else if self.coeffs.len() <= 1 || other.coeffs.len() <= 1 {
            // a rational value embeds anywhere
            Ok(if self.coeffs.len() <= 1 { b } else { a })
        } else {
            Err(Error::OrderMismatch { left: a, right: b })
        }
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        let o = self.common_order(other)?;
        Ok((self.embed_unchecked(o), other.embed_unchecked(o)))
    }

    fn embed_unchecked(&self, target: u32) -> Self {
        if self.coeffs.len() <= 1 {
            CycScalar { order: target, coeffs: self.coeffs.clone() }
        } else {
            self.embed(target).expect("embedding checked by caller")
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.order.is_multiple_of(self.order) {
            return Ok(other.clone());
        }
        let (mut a, b) = self.aligned(other)?;
        if a.coeffs.len() < b.coeffs.len() {
            a.coeffs.resize(b.coeffs.len(), Rational::zero());
        }
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        trim(&mut a.coeffs);
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let o = self.common_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CycScalar { order: o, coeffs: vec![] });
        }
        if self.coeffs.len() == 1 && other.coeffs.len() == 1 {
            return Ok(CycScalar { order: o, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] });
        }
        let (a, b) = self.aligned(other)?;
        let mut v = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Ok(CycScalar { order: o, coeffs: reduce(v, o) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Self {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Complex conjugation, ζ ↦ ζ^{N-1}.
    pub fn conj(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        let n = self.order as usize;
        let mut v = vec![Rational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[(n - j) % n] += c;
        }
        CycScalar { order: self.order, coeffs: reduce(v, self.order) }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(CycScalar { order: self.order, coeffs: vec![self.coeffs[0].recip()] });
        }
        let phi: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let u = poly_inverse_mod(&self.coeffs, &phi).ok_or(Error::DivisionByZero)?;
        Ok(CycScalar { order: self.order, coeffs: reduce(u, self.order) })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycScalar { order: self.order, coeffs: vec![Rational::one()] };
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn poly_trimmed(mut v: Vec<Rational>) -> Vec<Rational> {
    trim(&mut v);
    v
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    (poly_trimmed(quot), poly_trimmed(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    poly_trimmed(v)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut v = a.to_vec();
    if v.len() < b.len() {
        v.resize(b.len(), Rational::zero());
    }
    for (x, y) in v.iter_mut().zip(b) {
        *x -= y;
    }
    poly_trimmed(v)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm over Q[x].
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), poly_trimmed(a.to_vec()));
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(s0.into_iter().map(|x| x * &c).collect())
}

/// Arithmetic selector for [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn cyc_arith(a: &CycScalar, b: &CycScalar, op: ArithOp) -> Result<CycScalar> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order || (self.coeffs.len() <= 1 && other.coeffs.len() <= 1) {
            return self.coeffs == other.coeffs;
        }
        let o = lcm(self.order, other.order);
        self.embed_unchecked(o).coeffs == other.embed_unchecked(o).coeffs
    }
}

impl Eq for CycScalar {}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for CycScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.neg_ref()
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.neg_ref()
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let root = match j {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, j),
            };
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    order: u32,
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.order as usize;
        let mut num = Vec::with_capacity(n);
        let mut den = Vec::with_capacity(n);
        for j in 0..n {
            match self.coeffs.get(j) {
                Some(c) => {
                    num.push(c.numer().to_string());
                    den.push(c.denom().to_string());
                }
                None => {
                    num.push("0".to_string());
                    den.push("1".to_string());
                }
            }
        }
        ScalarRepr { order: self.order, num, den }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ScalarRepr::deserialize(d)?;
        if repr.num.len() != repr.den.len() {
            return Err(D::Error::custom("num and den lengths differ"));
        }
        let mut coeffs = Vec::with_capacity(repr.num.len());
        for (n, dn) in repr.num.iter().zip(&repr.den) {
            let n: BigInt = n.parse().map_err(D::Error::custom)?;
            let dn: BigInt = dn.parse().map_err(D::Error::custom)?;
            if dn.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(n, dn));
        }
        CycScalar::from_coeffs(repr.order, coeffs).map_err(D::Error::custom)
    }
}
