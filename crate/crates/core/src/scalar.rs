//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! An element is stored in the power basis `1, zeta_m, ..., zeta_m^(phi(m)-1)` modulo the
//! cyclotomic polynomial `Phi_m`, with arbitrary-precision rational coordinates. Binary
//! operations on elements of different conductors first embed both operands into
//! `Q(zeta_lcm)` via `zeta_d -> zeta_M^(M/d)`. Elements whose non-constant coordinates vanish are
//! stored with conductor 1, so rationals never drag a conductor around.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor must be at least 1")]
    InvalidConductor,
    #[error("expected {expected} power-basis coefficients for conductor {conductor}, got {found}")]
    CoefficientCount { conductor: u32, expected: usize, found: usize },
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Coefficients of `Phi_m`, lowest degree first, via
/// `Phi_m(x) = (x^m - 1) / prod_{d | m, d < m} Phi_d(x)`.
pub fn cyclotomic_polynomial(m: u32) -> Rc<Vec<i64>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    let p = Rc::new(num);
    PHI_CACHE.with(|c| c.borrow_mut().insert(m, p.clone()));
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] = rem[k + j]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division must be exact");
    quot
}

/// Euler's totient, the degree of `Phi_m`.
pub fn totient(m: u32) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

/// Reduces a polynomial in `zeta_m` to its canonical power-basis coordinates.
fn reduce(mut poly: Vec<Rational>, m: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[k], Rational::zero());
            for (j, &p) in phi[..deg].iter().enumerate() {
                if p != 0 {
                    poly[k - deg + j] -= &c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

/// An exact element of `Q(zeta_m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds an element from power-basis coordinates.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Result<Self, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::InvalidConductor);
        }
        let expected = totient(conductor);
        if coeffs.len() != expected {
            return Err(ScalarError::CoefficientCount { conductor, expected, found: coeffs.len() });
        }
        Ok(Cyclotomic { conductor, coeffs }.normalized())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `zeta_m^k`, reduced modulo `Phi_m`.
    pub fn zeta(m: u32, k: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Cyclotomic { conductor: m, coeffs: reduce(poly, m) }.normalized()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    fn normalized(mut self) -> Self {
        if self.conductor > 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            if self.coeffs.is_empty() {
                self.coeffs.push(Rational::zero());
            }
            self.conductor = 1;
        }
        self
    }

    /// Embeds into `Q(zeta_target)`; `None` when the conductor does not divide `target`.
    pub fn to_conductor(&self, target: u32) -> Option<Self> {
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return None;
        }
        Some(self.embed(target))
    }

    /// Coordinates in `Q(zeta_target)` without the rational normalization; the conductor must
    /// divide `target`. Used to build hashable keys over a fixed field.
    pub fn coords_at(&self, target: u32) -> Vec<Rational> {
        assert!(target.is_multiple_of(self.conductor), "conductor must divide the target");
        if self.conductor == target {
            return self.coeffs.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce(poly, target)
    }

    fn embed(&self, target: u32) -> Self {
        if self.conductor == target {
            return self.clone();
        }
        Cyclotomic { conductor: target, coeffs: self.coords_at(target) }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.conductor.lcm(&b.conductor);
        (a.embed(m), b.embed(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
            return Cyclotomic { conductor: self.conductor, coeffs }.normalized();
        }
        if other.conductor == 1 {
            let mut out = self.clone();
            out.coeffs[0] += &other.coeffs[0];
            return out;
        }
        if self.conductor == 1 {
            return other.add_ref(self);
        }
        let (a, b) = Self::aligned(self, other);
        a.add_ref(&b)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if self.conductor != other.conductor {
            let (a, b) = Self::aligned(self, other);
            return a.mul_ref(&b);
        }
        let n = self.coeffs.len();
        let mut poly = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Cyclotomic { conductor: self.conductor, coeffs: reduce(poly, self.conductor) }.normalized()
    }

    /// Multiplies by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the coordinate
    /// polynomial and `Phi_m` over `Q`.
    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let m = self.conductor;
        let phi: Vec<Rational> =
            cyclotomic_polynomial(m).iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "Phi_m is irreducible, so the gcd is a unit");
        let c = r0[0].recip();
        let inv: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
        Ok(Cyclotomic { conductor: m, coeffs: reduce(inv, m) }.normalized())
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let mut base = if e < 0 { self.invert()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let m = self.conductor as usize;
        let mut poly = vec![Rational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(m - k) % m] += c;
        }
        Cyclotomic { conductor: self.conductor, coeffs: reduce(poly, self.conductor) }.normalized()
    }

    /// `|a|^2 = a * conj(a)`, which is always rational-valued for the elements we meet but is
    /// returned as a field element.
    pub fn norm_squared(&self) -> Self {
        self * &self.conjugate()
    }

    /// Multiplicative order if the element is a root of unity.
    ///
    /// The search bound is `d <= 2m^2` for conductor `m`. Every root of unity in `Q(zeta_m)` has
    /// order dividing `L = lcm(2, m) <= 2m <= 2m^2`, so the bounded search is equivalent to
    /// testing `a^L = 1` and then taking the least divisor `d` of `L` with `a^d = 1`.
    pub fn is_root_of_unity(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let l = self.conductor.lcm(&2);
        if !self.pow(l as i64).ok()?.is_one() {
            return None;
        }
        (1..=l).filter(|d| l.is_multiple_of(*d)).find(|&d| self.pow(d as i64).map(|p| p.is_one()).unwrap_or(false))
    }

    /// Approximate complex value `(re, im)` under `zeta_m -> exp(2 pi i / m)`. For display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * k as f64 / m;
            (re + v * angle.cos(), im + v * angle.sin())
        })
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Division with remainder; `b` must be nonzero and trimmed.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().expect("divisor is nonzero").recip();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// Canonical power-basis rendering, e.g. `-1/2 + 3*ζ12^2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let power = match k {
                0 => None,
                1 => Some(format!("ζ{}", self.conductor)),
                _ => Some(format!("ζ{}^{k}", self.conductor)),
            };
            match power {
                None => write!(f, "{abs}")?,
                Some(p) if abs.is_one() => write!(f, "{p}")?,
                Some(p) => write!(f, "{abs}*{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.invert().expect("division by zero")));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor && self.conductor > 1 {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
            let n = std::mem::replace(self, Cyclotomic::zero());
            *self = n.normalized();
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Product<&'a Cyclotomic> for Cyclotomic {
    fn product<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| &acc * x)
    }
}

impl Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    /// Random element of `Q(zeta_m)` from small integer data.
    fn element(m: u32, data: &[(i64, i64)]) -> Cyclotomic {
        let deg = totient(m);
        let coeffs = (0..deg)
            .map(|k| {
                let (n, d) = data[k % data.len()];
                q(n, d.abs().max(1))
            })
            .collect();
        Cyclotomic::from_coeffs(m, coeffs).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_match_table() {
        let table: [(u32, &[i64]); 12] = [
            (1, &[-1, 1]),
            (2, &[1, 1]),
            (3, &[1, 1, 1]),
            (4, &[1, 0, 1]),
            (5, &[1, 1, 1, 1, 1]),
            (6, &[1, -1, 1]),
            (7, &[1, 1, 1, 1, 1, 1, 1]),
            (8, &[1, 0, 0, 0, 1]),
            (9, &[1, 0, 0, 1, 0, 0, 1]),
            (10, &[1, -1, 1, -1, 1]),
            (11, &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
            (12, &[1, 0, -1, 0, 1]),
        ];
        for (m, coeffs) in table {
            assert_eq!(cyclotomic_polynomial(m).as_slice(), coeffs, "Phi_{m}");
        }
        assert_eq!(totient(105), 48);
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn zeta_examples() {
        let i = Cyclotomic::zeta(4, 1);
        assert_eq!(&i * &i, c(-1));
        assert_eq!(Cyclotomic::zeta(2, 1), c(-1));
        assert_eq!(Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2), c(-1));
        assert_eq!(Cyclotomic::zeta(7, 0), c(1));
        assert_eq!(Cyclotomic::zeta(6, 1), -Cyclotomic::zeta(3, 2));
        assert_eq!(Cyclotomic::zeta(12, 3), Cyclotomic::zeta(4, 1));
    }

    #[test]
    fn arithmetic_examples() {
        let x = element(12, &[(3, 2), (-1, 5), (0, 1), (7, 3)]);
        assert_eq!(&c(1) * &x, x);
        assert_eq!(Cyclotomic::zeta(3, 1) * Cyclotomic::zeta(3, 2), c(1));
        let i = Cyclotomic::zeta(4, 1);
        assert_eq!((&i + &c(1)) * (&i - &c(1)), c(-2));
        assert_eq!(&x - &x, c(0));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(c(-2).invert().unwrap(), Cyclotomic::from_rational(q(-1, 2)));
        assert_eq!(Cyclotomic::zeta(8, 3).invert().unwrap(), Cyclotomic::zeta(8, 5));
        assert_eq!(c(0).invert(), Err(ScalarError::DivisionByZero));
        let x = Cyclotomic::zeta(5, 1) + c(1);
        assert_eq!(&x * &x.invert().unwrap(), c(1));
    }

    #[test]
    fn invert_random_in_q_zeta6() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let mut checked = 0;
        while checked < 100 {
            let data: Vec<(i64, i64)> = (0..2).map(|_| (rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
            let x = element(6, &data);
            if x.is_zero() {
                continue;
            }
            assert_eq!(&x * &x.invert().unwrap(), c(1));
            checked += 1;
        }
    }

    #[test]
    fn root_of_unity_detection() {
        assert_eq!(c(1).is_root_of_unity(), Some(1));
        assert_eq!(c(-1).is_root_of_unity(), Some(2));
        assert_eq!(Cyclotomic::zeta(6, 1).is_root_of_unity(), Some(6));
        assert_eq!(c(2).is_root_of_unity(), None);
        assert_eq!(c(0).is_root_of_unity(), None);
        // -zeta_3 has order 6 although its natural conductor is 3: the lcm(2, m) boundary.
        assert_eq!((-Cyclotomic::zeta(3, 1)).is_root_of_unity(), Some(6));
        assert_eq!((-Cyclotomic::zeta(5, 2)).is_root_of_unity(), Some(10));
        for m in 1..=24u32 {
            for k in 0..m as i64 {
                let order = m / (m.gcd(&(k as u32)));
                assert_eq!(Cyclotomic::zeta(m, k).is_root_of_unity(), Some(order), "zeta({m},{k})");
            }
        }
        // 3/5 + 4/5 i has modulus one but is not a root of unity.
        let x = Cyclotomic::from_rational(q(3, 5)) + Cyclotomic::zeta(4, 1).scale(&q(4, 5));
        assert_eq!(x.norm_squared(), c(1));
        assert_eq!(x.is_root_of_unity(), None);
    }

    #[test]
    fn conjugation_and_display() {
        let z = Cyclotomic::zeta(8, 3);
        assert_eq!(z.conjugate(), Cyclotomic::zeta(8, 5));
        assert_eq!(z.norm_squared(), c(1));
        assert_eq!(c(-2).to_string(), "-2");
        assert_eq!(Cyclotomic::zeta(3, 2).to_string(), "-1 - ζ3");
        assert_eq!(Cyclotomic::zeta(4, 1).scale(&q(-1, 2)).to_string(), "-1/2*ζ4");
        assert_eq!(c(0).to_string(), "0");
        let (re, im) = Cyclotomic::zeta(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let z = Cyclotomic::zeta(9, 2);
        assert_eq!(z.pow(-1).unwrap(), Cyclotomic::zeta(9, 7));
        assert_eq!(z.pow(9).unwrap(), c(1));
        assert_eq!(c(3).pow(-2).unwrap(), Cyclotomic::from_rational(q(1, 9)));
    }

    #[test]
    fn mixed_conductors_embed() {
        let a = Cyclotomic::zeta(4, 1);
        let b = Cyclotomic::zeta(3, 1);
        let ab = &a * &b;
        assert_eq!(ab.conductor(), 12);
        assert_eq!(ab, Cyclotomic::zeta(12, 7));
        assert_eq!(a.to_conductor(12).unwrap(), a);
        assert!(a.to_conductor(6).is_none());
    }

    fn arb_element() -> impl Strategy<Value = Cyclotomic> {
        (prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 12]), prop::collection::vec((-20i64..20, 1i64..7), 1..5))
            .prop_map(|(m, data)| element(m, &data))
    }

    proptest! {
        #[test]
        fn equality_is_coefficientwise_after_alignment(a in arb_element(), b in arb_element()) {
            let m = a.conductor().lcm(&b.conductor());
            let same = a.coords_at(m) == b.coords_at(m);
            prop_assert_eq!((&a - &b).is_zero(), same);
            prop_assert_eq!(a == b, same);
        }

        #[test]
        fn field_axioms(a in arb_element(), b in arb_element(), d in arb_element()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &d, &(&a * &d) + &(&b * &d));
            prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
        }

        #[test]
        fn invert_is_an_involution(a in arb_element()) {
            prop_assume!(!a.is_zero());
            let inv = a.invert().unwrap();
            prop_assert_eq!(&a * &inv, Cyclotomic::one());
            prop_assert_eq!(inv.invert().unwrap(), a);
        }
    }
}
