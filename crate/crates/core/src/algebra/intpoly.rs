//! Dense integer polynomials in one variable `t`, Laurent polynomials with
//! integer coefficients, cyclotomic polynomials, and cyclotomic factor
//! stripping.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Dense integer polynomial, constant term first. The zero polynomial has
/// an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial c * t^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] -= c;
        }
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division; `None` when the divisor does not divide exactly
    /// over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - d.degree() + 1];
        let dl = d.leading();
        for k in (0..quot.len()).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % &dl) != BigInt::zero() {
                return None;
            }
            let q = &top / &dl;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Content (gcd of coefficients, nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num::integer::gcd(g, c.clone());
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Coefficient-reversed polynomial t^deg * p(1/t).
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && (self.reversed() == *self)
    }

    pub fn to_rational_coeffs(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect()
    }

    /// Squarefree part p / gcd(p, p'), normalized primitive with positive
    /// leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let g = super::ratpoly::gcd(
            &self.to_rational_coeffs(),
            &self.derivative().to_rational_coeffs(),
        );
        let q = super::ratpoly::div_exact(&self.to_rational_coeffs(), &g)
            .expect("gcd divides its argument");
        let mut p = super::ratpoly::clear_denominators(&q).primitive_part();
        if p.leading().is_negative() {
            p = p.neg();
        }
        p
    }
}

fn fmt_int_poly(p: &IntPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if k == 0 {
            write!(f, "{}", mag)?;
        } else if mag.is_one() {
            write!(f, "t^{}", k)?;
        } else {
            write!(f, "{}*t^{}", mag, k)?;
        }
    }
    Ok(())
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_int_poly(self, f)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_int_poly(self, f)
    }
}

/// The n-th cyclotomic polynomial Phi_n, computed by dividing t^n - 1 by
/// Phi_d over all proper divisors d of n.
pub fn cyclotomic_poly(n: u32) -> IntPoly {
    assert!(n >= 1);
    let mut p = {
        let mut v = vec![BigInt::zero(); n as usize + 1];
        v[0] = BigInt::from(-1);
        v[n as usize] = BigInt::one();
        IntPoly::new(v)
    };
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            p = p.div_exact(&phi_d).expect("cyclotomic division is exact");
        }
    }
    p
}

/// Divides out every cyclotomic factor Phi_k with phi(k) <= deg(p),
/// repeatedly. Returns the stripped polynomial and the list of factors
/// (k, multiplicity) that were removed.
pub fn strip_cyclotomic_factors(p: &IntPoly) -> (IntPoly, Vec<(u32, usize)>) {
    let mut rest = p.clone();
    let mut removed = Vec::new();
    if rest.is_zero() {
        return (rest, removed);
    }
    let deg0 = rest.degree() as u32;
    let mut k = 1u32;
    // phi(k) > deg0 for all k > 2*(deg0+1)^2, which bounds the search
    let k_max = 2 * (deg0 + 1) * (deg0 + 1);
    while k <= k_max && rest.degree() > 0 {
        if super::cyclotomic::euler_phi(k) <= rest.degree() {
            let phi_k = cyclotomic_poly(k);
            let mut mult = 0;
            while let Some(q) = rest.div_exact(&phi_k) {
                rest = q;
                mult += 1;
                if rest.degree() == 0 {
                    break;
                }
            }
            if mult > 0 {
                removed.push((k, mult));
            }
        }
        k += 1;
    }
    (rest, removed)
}

/// Integer Laurent polynomial: coefficients indexed from `min_exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: vec![],
        }
    }

    /// c * t^k
    pub fn term(c: i64, k: i64) -> Self {
        LaurentPoly {
            min_exp: k,
            coeffs: vec![BigInt::from(c)],
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(other.min_exp + other.coeffs.len() as i64);
        let mut v = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[(other.min_exp - lo) as usize + i] += c;
        }
        LaurentPoly {
            min_exp: lo,
            coeffs: v,
        }
        .trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        LaurentPoly {
            min_exp: self.min_exp + other.min_exp,
            coeffs: v,
        }
        .trimmed()
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Converts to an ordinary polynomial; fails if negative powers remain.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.min_exp < 0 {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.min_exp as usize + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[self.min_exp as usize + i] = c.clone();
        }
        Some(IntPoly::new(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_table() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn strip_factors_example() {
        // t^4 - 1 = Phi_1 Phi_2 Phi_4
        let p = IntPoly::from_i64(&[-1, 0, 0, 0, 1]);
        let (rest, removed) = strip_cyclotomic_factors(&p);
        assert_eq!(rest, IntPoly::one());
        assert_eq!(removed, vec![(1, 1), (2, 1), (4, 1)]);
    }

    #[test]
    fn salem_factor_survives_stripping() {
        // t^11(t^3-t-1)+t^3+t^2-1 = (t-1)(t+1)(t^4+1)(t^8-t^5-t^4-t^3+1)
        let p = IntPoly::from_i64(&[-1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 1]);
        let (rest, removed) = strip_cyclotomic_factors(&p);
        assert_eq!(rest, IntPoly::from_i64(&[1, 0, 0, -1, -1, -1, 0, 0, 1]));
        assert!(removed.contains(&(1, 1)));
        assert!(removed.contains(&(2, 1)));
        assert!(removed.contains(&(8, 1)));
    }

    #[test]
    fn laurent_round_trip() {
        let a = LaurentPoly::term(1, -3).add(&LaurentPoly::term(2, 1));
        let b = a.mul(&LaurentPoly::term(1, 3));
        assert_eq!(
            b.to_int_poly().unwrap(),
            IntPoly::from_i64(&[1, 0, 0, 0, 2])
        );
    }

    #[test]
    fn squarefree_part_splits_multiplicity() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2  ->  (t-1)(t+2) = t^2 + t - 2
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part(), IntPoly::from_i64(&[-2, 1, 1]));
    }
}
