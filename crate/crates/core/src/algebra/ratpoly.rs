//! Dense univariate polynomial helpers over Q, used for modular inverses,
//! gcds, and Sturm chains. A polynomial is a coefficient vector with the
//! constant term first; trailing zeros are trimmed.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use super::intpoly::IntPoly;

pub type RatPoly = Vec<BigRational>;

pub fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn is_zero(p: &RatPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn degree(p: &RatPoly) -> usize {
    p.len().saturating_sub(1)
}

pub fn mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if is_zero(a) || is_zero(b) {
        return vec![];
    }
    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                v[i + j] += x * y;
            }
        }
    }
    trim(v)
}

pub fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut v = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        v[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        v[i] -= x;
    }
    trim(v)
}

/// Division with remainder: returns (quotient, remainder).
pub fn divmod(a: &RatPoly, d: &RatPoly) -> (RatPoly, RatPoly) {
    let d = trim(d.clone());
    assert!(!is_zero(&d), "division by zero polynomial");
    let mut rem = trim(a.clone());
    if rem.len() < d.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - d.len() + 1];
    let dl = d.last().unwrap().clone();
    for k in (0..quot.len()).rev() {
        if rem.len() < d.len() + k {
            continue;
        }
        let top = rem[k + d.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let q = &top / &dl;
        for (j, c) in d.iter().enumerate() {
            let val = &q * c;
            rem[k + j] -= val;
        }
        quot[k] = q;
    }
    (trim(quot), trim(rem))
}

pub fn rem(a: &RatPoly, d: &RatPoly) -> RatPoly {
    divmod(a, d).1
}

pub fn div_exact(a: &RatPoly, d: &RatPoly) -> Option<RatPoly> {
    let (q, r) = divmod(a, d);
    if is_zero(&r) {
        Some(q)
    } else {
        None
    }
}

/// Monic gcd over Q.
pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut x = trim(a.clone());
    let mut y = trim(b.clone());
    while !is_zero(&y) {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if is_zero(&x) {
        return x;
    }
    let lead = x.last().unwrap().clone();
    trim(x.into_iter().map(|c| c / &lead).collect())
}

/// Finds u with u*a = 1 (mod m), if a is invertible modulo m.
pub fn invert_mod(a: &RatPoly, m: &RatPoly) -> Option<RatPoly> {
    // extended Euclid: r0 = m, r1 = a mod m
    let mut r0 = trim(m.clone());
    let mut r1 = rem(a, m);
    let mut s0: RatPoly = vec![];
    let mut s1: RatPoly = vec![BigRational::one()];
    while !is_zero(&r1) {
        let (q, r) = divmod(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(&r0) != 0 || is_zero(&r0) {
        return None;
    }
    let lead = r0[0].clone();
    Some(trim(s0.into_iter().map(|c| c / &lead).collect()))
}

/// Scales to integer coefficients (multiplies by the lcm of denominators).
pub fn clear_denominators(p: &RatPoly) -> IntPoly {
    let mut l = BigInt::one();
    for c in p {
        l = num::integer::lcm(l, c.denom().clone());
    }
    IntPoly::new(
        p.iter()
            .map(|c| {
                let scaled = c * BigRational::from(l.clone());
                scaled.to_integer()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(v: &[i64]) -> RatPoly {
        trim(v.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    #[test]
    fn divmod_basic() {
        // (t^2 - 1) / (t - 1) = t + 1
        let (q, r) = divmod(&rp(&[-1, 0, 1]), &rp(&[-1, 1]));
        assert_eq!(q, rp(&[1, 1]));
        assert!(is_zero(&r));
    }

    #[test]
    fn gcd_basic() {
        // gcd((t-1)(t+2), (t-1)(t-3)) = t - 1 (monic)
        let a = mul(&rp(&[-1, 1]), &rp(&[2, 1]));
        let b = mul(&rp(&[-1, 1]), &rp(&[-3, 1]));
        assert_eq!(gcd(&a, &b), rp(&[-1, 1]));
    }

    #[test]
    fn invert_mod_works() {
        // invert t modulo t^2+1: t * (-t) = -t^2 = 1 (mod t^2+1)
        let u = invert_mod(&rp(&[0, 1]), &rp(&[1, 0, 1])).unwrap();
        assert_eq!(u, rp(&[0, -1]));
    }
}
