//! Sparse homogeneous polynomials in 3 or 4 variables with cyclotomic
//! coefficients. Exponent vectors all share the same total degree and no
//! zero coefficients are stored.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CycNum;
use super::unipoly::UniPoly;
use super::AlgebraError;

/// Ring values that a homogeneous polynomial can be evaluated at.
pub trait RingValue: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_scale(&self, c: &CycNum) -> Self;
}

impl RingValue for CycNum {
    fn ring_zero() -> Self {
        CycNum::zero()
    }
    fn ring_one() -> Self {
        CycNum::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_scale(&self, c: &CycNum) -> Self {
        self.mul(c)
    }
}

impl RingValue for UniPoly {
    fn ring_zero() -> Self {
        UniPoly::zero()
    }
    fn ring_one() -> Self {
        UniPoly::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_scale(&self, c: &CycNum) -> Self {
        self.scale(c)
    }
}

/// Sparse homogeneous polynomial. The zero polynomial has an empty term
/// map and degree 0 by convention.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogPoly {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u16>, CycNum>,
}

impl HomogPoly {
    pub fn zero(nvars: usize) -> Self {
        HomogPoly {
            nvars,
            degree: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(nvars: usize, exps: &[u16], coeff: CycNum) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        let degree = exps.iter().map(|&e| e as usize).sum();
        if !coeff.is_zero() {
            terms.insert(exps.to_vec(), coeff);
        }
        HomogPoly {
            nvars,
            degree,
            terms,
        }
    }

    pub fn constant(nvars: usize, c: CycNum) -> Self {
        Self::monomial(nvars, &vec![0; nvars], c)
    }

    /// The variable x_i as a degree-1 polynomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        Self::monomial(nvars, &e, CycNum::one())
    }

    /// The linear form sum_i coeffs[i] * x_i.
    pub fn linear_form(coeffs: &[CycNum]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        p.degree = 1;
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u16; nvars];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p.normalize();
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: Vec<(Vec<u16>, CycNum)>,
    ) -> Result<Self, AlgebraError> {
        let mut map: BTreeMap<Vec<u16>, CycNum> = BTreeMap::new();
        let mut degree: Option<usize> = None;
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(AlgebraError::VariableMismatch(e.len(), nvars));
            }
            if c.is_zero() {
                continue;
            }
            let d: usize = e.iter().map(|&x| x as usize).sum();
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Err(AlgebraError::Inhomogeneous),
                _ => {}
            }
            let entry = map.entry(e).or_insert_with(CycNum::zero);
            *entry = entry.add(&c);
        }
        let mut p = HomogPoly {
            nvars,
            degree: degree.unwrap_or(0),
            terms: map,
        };
        p.normalize();
        Ok(p)
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.degree = 0;
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.degree == 0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &CycNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u16]) -> CycNum {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(CycNum::zero)
    }

    /// Leading term in the map order (lexicographic on exponent vectors).
    pub fn leading_term(&self) -> Option<(&Vec<u16>, &CycNum)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::VariableMismatch(self.nvars, other.nvars));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(AlgebraError::Inhomogeneous);
        }
        let mut result = self.clone();
        for (e, c) in &other.terms {
            let entry = result.terms.entry(e.clone()).or_insert_with(CycNum::zero);
            *entry = entry.add(c);
        }
        result.normalize();
        Ok(result)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = c.neg();
        }
        p
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v = v.mul(c);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut terms: BTreeMap<Vec<u16>, CycNum> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                let c = c1.mul(c2);
                let entry = terms.entry(e).or_insert_with(CycNum::zero);
                *entry = entry.add(&c);
            }
        }
        let mut p = HomogPoly {
            nvars: self.nvars,
            degree: self.degree + other.degree,
            terms,
        };
        p.normalize();
        p
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::constant(self.nvars, CycNum::one());
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let mut terms: BTreeMap<Vec<u16>, CycNum> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut en = e.clone();
            en[var] -= 1;
            let cn = c.mul(&CycNum::from_int(e[var] as i64));
            let entry = terms.entry(en).or_insert_with(CycNum::zero);
            *entry = entry.add(&cn);
        }
        let mut p = HomogPoly {
            nvars: self.nvars,
            degree: self.degree.saturating_sub(1),
            terms,
        };
        p.normalize();
        p
    }

    /// Evaluates at a tuple of ring values (points, parameterized curves,
    /// or series lifts).
    pub fn eval_with<T: RingValue>(&self, values: &[T]) -> T {
        assert_eq!(values.len(), self.nvars);
        let mut acc = T::ring_zero();
        for (e, c) in &self.terms {
            let mut term = T::ring_one();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.ring_mul(&values[i]);
                }
            }
            acc = acc.ring_add(&term.ring_scale(c));
        }
        acc
    }

    pub fn eval(&self, point: &[CycNum]) -> CycNum {
        self.eval_with(point)
    }

    /// Substitutes a tuple of equal-degree polynomials for the variables.
    pub fn substitute(&self, polys: &[HomogPoly]) -> Result<Self, AlgebraError> {
        assert_eq!(polys.len(), self.nvars);
        if polys.is_empty() {
            return Err(AlgebraError::VariableMismatch(0, self.nvars));
        }
        let inner_nvars = polys[0].nvars;
        let inner_deg = polys[0].degree;
        for p in polys {
            if p.nvars != inner_nvars {
                return Err(AlgebraError::VariableMismatch(p.nvars, inner_nvars));
            }
            if p.degree != inner_deg && !p.is_zero() {
                return Err(AlgebraError::Inhomogeneous);
            }
        }
        let mut acc = Self::zero(inner_nvars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(inner_nvars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&polys[i]);
                }
            }
            acc = match acc.add(&term) {
                Ok(v) => v,
                Err(_) => {
                    // degrees differ only when one side is zero times ...
                    if acc.is_zero() {
                        term
                    } else {
                        return Err(AlgebraError::Inhomogeneous);
                    }
                }
            };
        }
        Ok(acc)
    }

    /// Restricts x_var := 0 and drops that variable, producing a
    /// polynomial in nvars-1 variables.
    pub fn restrict_to_hyperplane(&self, var: usize) -> Self {
        let mut terms: BTreeMap<Vec<u16>, CycNum> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] != 0 {
                continue;
            }
            let mut en = e.clone();
            en.remove(var);
            terms.insert(en, c.clone());
        }
        let mut p = HomogPoly {
            nvars: self.nvars - 1,
            degree: self.degree,
            terms,
        };
        p.normalize();
        p
    }

    /// Substitutes a curve parameterization (one UniPoly per variable).
    pub fn eval_curve(&self, curve: &[UniPoly]) -> UniPoly {
        self.eval_with(curve)
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    write!(f, "*x{}", i)?;
                } else if exp > 1 {
                    write!(f, "*x{}^{}", i, exp)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Tuples proportional as projective maps: all 2x2 cross products vanish.
pub fn tuples_proportional(a: &[HomogPoly], b: &[HomogPoly]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let lhs = a[i].mul(&b[j]);
            let rhs = a[j].mul(&b[i]);
            if lhs.sub(&rhs).map_or(true, |d| !d.is_zero()) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> HomogPoly {
        HomogPoly::var(4, i)
    }

    #[test]
    fn difference_of_squares() {
        let a = x(0).add(&x(1)).unwrap();
        let b = x(0).sub(&x(1)).unwrap();
        let prod = a.mul(&b);
        let expect = x(0).mul(&x(0)).sub(&x(1).mul(&x(1))).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn partial_derivative_of_product() {
        let p = x(0).mul(&x(1)).mul(&x(2)).mul(&x(3));
        let d = p.partial_derivative(0);
        assert_eq!(d, x(1).mul(&x(2)).mul(&x(3)));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let bad = HomogPoly::from_terms(
            4,
            vec![
                (vec![1, 0, 0, 0], CycNum::one()),
                (vec![1, 1, 0, 0], CycNum::one()),
            ],
        );
        assert_eq!(bad.unwrap_err(), AlgebraError::Inhomogeneous);
    }

    #[test]
    fn restriction_drops_variable() {
        // x0*(a*x0 + w*x2 + x3) with x3 := 0 -> x0*(a*x0 + w*x2)
        let w = CycNum::zeta(3);
        let a = CycNum::from_int(2);
        let f3 = x(0).mul(
            &HomogPoly::linear_form(&[a.clone(), CycNum::zero(), w.clone(), CycNum::one()]),
        );
        let restricted = f3.restrict_to_hyperplane(3);
        let expect = HomogPoly::var(3, 0).mul(&HomogPoly::linear_form(&[
            a,
            CycNum::zero(),
            w,
        ]));
        assert_eq!(restricted, expect);
    }

    #[test]
    fn curve_substitution() {
        // evaluate x0*x1 on the curve [t, t^2, 1, 0]
        let p = x(0).mul(&x(1));
        let t = UniPoly::t();
        let curve = [
            t.clone(),
            t.mul(&t),
            UniPoly::one(),
            UniPoly::zero(),
        ];
        let r = p.eval_curve(&curve);
        assert_eq!(r, UniPoly::monomial(CycNum::one(), 3));
    }
}
