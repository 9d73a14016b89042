//! Arithmetic in cyclotomic fields Q(zeta_n).
//!
//! A `CycNum` stores exact rational coordinates over the power basis
//! 1, z, ..., z^(phi(n)-1) of Q[x]/(Phi_n(x)), so z^n = 1 and Phi_n(z) = 0
//! hold under all operations. Elements of different orders combine by
//! lifting both to the lcm order. Coordinates are kept reduced modulo the
//! cyclotomic polynomial; equality is coordinate-wise after lifting.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::intpoly::cyclotomic_poly;
use super::AlgebraError;

/// Euler totient for small orders.
pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut result = n;
    let mut p = 2u32;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result as usize
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

struct OrderData {
    phi: usize,
    /// Monic Phi_n as integer coefficients, constant term first.
    min_poly: Vec<BigInt>,
}

static ORDER_CACHE: Lazy<Mutex<HashMap<u32, Arc<OrderData>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn order_data(n: u32) -> Arc<OrderData> {
    let mut cache = ORDER_CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| {
            let poly = cyclotomic_poly(n);
            Arc::new(OrderData {
                phi: poly.coeffs().len() - 1,
                min_poly: poly.coeffs().to_vec(),
            })
        })
        .clone()
}

/// An exact element of Q(zeta_n).
#[derive(Clone)]
pub struct CycNum {
    order: u32,
    coords: Vec<BigRational>,
}

impl CycNum {
    /// Builds an element from coefficients over powers zeta^0, zeta^1, ...
    /// The vector may have any length; it is reduced modulo Phi_n.
    pub fn new(order: u32, coeffs: Vec<BigRational>) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::BadOrder);
        }
        Ok(Self::reduced(order, coeffs))
    }

    fn reduced(order: u32, mut v: Vec<BigRational>) -> Self {
        let data = order_data(order);
        let phi = data.phi;
        while v.len() > phi {
            let c = v.pop().unwrap();
            if !c.is_zero() {
                let k = v.len(); // popped coefficient was for x^k
                // x^k = -sum_j f_j x^(k-phi+j) for monic f of degree phi
                for j in 0..phi {
                    let adj = &c * BigRational::from(data.min_poly[j].clone());
                    v[k - phi + j] -= adj;
                }
            }
        }
        v.resize(phi, BigRational::zero());
        CycNum { order, coords: v }
    }

    pub fn zero() -> Self {
        CycNum {
            order: 1,
            coords: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        CycNum {
            order: 1,
            coords: vec![BigRational::one()],
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycNum {
            order: 1,
            coords: vec![r],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The primitive n-th root of unity zeta_n.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn zeta_pow(order: u32, k: u32) -> Self {
        let mut v = vec![BigRational::zero(); (k % order) as usize + 1];
        let last = v.len() - 1;
        v[last] = BigRational::one();
        Self::reduced(order, v)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in Q(zeta_m) for a multiple m of the order.
    pub fn lift_to(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        debug_assert!(m % self.order == 0);
        let step = (m / self.order) as usize;
        let mut v = vec![BigRational::zero(); (self.coords.len() - 1) * step + 1];
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                v[k * step] = c.clone();
            }
        }
        Self::reduced(m, v)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let m = lcm_u32(self.order, other.order);
            (self.lift_to(m), other.lift_to(m))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for x in a.coords.iter_mut() {
            *x = -x.clone();
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        if a.is_zero() || b.is_zero() {
            return CycNum {
                order: a.order,
                coords: vec![BigRational::zero(); a.coords.len()],
            };
        }
        let mut conv = vec![BigRational::zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        Self::reduced(a.order, conv)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut a = self.clone();
        for x in a.coords.iter_mut() {
            *x *= r;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo Phi_n.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let data = order_data(self.order);
        let modulus: Vec<BigRational> = data
            .min_poly
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let u = super::ratpoly::invert_mod(&self.coords, &modulus)
            .ok_or(AlgebraError::DivisionByZero)?;
        Ok(Self::reduced(self.order, u))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        Ok(result)
    }

    /// Floating complex embedding at zeta_n = exp(2 pi i / n).
    ///
    /// Accurate to roughly 48 bits for moderate coordinates; larger
    /// precision requests are rejected since the backend is f64.
    pub fn complex_embed(&self, precision_bits: u32) -> Result<(f64, f64), AlgebraError> {
        if precision_bits > 48 {
            return Err(AlgebraError::PrecisionUnsupported(precision_bits));
        }
        let theta = 2.0 * std::f64::consts::PI / self.order as f64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = rational_to_f64(c);
            re += cf * (theta * k as f64).cos();
            im += cf * (theta * k as f64).sin();
        }
        Ok((re, im))
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coords == b.coords
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if k == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.order, k)?;
            } else {
                write!(f, "{}*z{}^{}", mag, self.order, k)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn omega_relation() {
        // w^2 + w + 1 = 0 for a primitive cube root of unity
        let w = CycNum::zeta(3);
        let sum = w.mul(&w).add(&w).add(&CycNum::one());
        assert!(sum.is_zero());
    }

    #[test]
    fn eta_relation() {
        // eta = zeta_6 satisfies eta^2 - eta + 1 = 0 and eta^3 = -1
        let eta = CycNum::zeta(6);
        let rel = eta.mul(&eta).sub(&eta).add(&CycNum::one());
        assert!(rel.is_zero());
        assert_eq!(eta.pow(3).unwrap(), CycNum::from_int(-1));
    }

    #[test]
    fn root_of_unity_inverse() {
        for n in [1u32, 3, 4, 5, 6, 12] {
            let z = CycNum::zeta(n);
            let prod = z.mul(&z.pow(n as i64 - 1).unwrap());
            assert!(prod.is_one(), "zeta_{} * zeta^(n-1) != 1", n);
        }
    }

    #[test]
    fn mixed_order_arithmetic() {
        let w = CycNum::zeta(3);
        let i = CycNum::zeta(4);
        let s = w.add(&i);
        assert_eq!(s.order(), 12);
        assert_eq!(s.sub(&i), w.lift_to(12));
    }

    #[test]
    fn inverse_of_one_minus_eta() {
        // (1 - eta)^-1 = eta in Q(zeta_6), since eta^2 = eta - 1
        let eta = CycNum::zeta(6);
        let x = CycNum::one().sub(&eta);
        assert_eq!(x.inv().unwrap(), eta);
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(CycNum::zero().inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn embed_matches_known_value() {
        let w = CycNum::zeta(3);
        let (re, im) = w.complex_embed(40).unwrap();
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(w.complex_embed(60).is_err());
    }
}
