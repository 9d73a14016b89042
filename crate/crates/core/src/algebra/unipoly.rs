//! Dense univariate polynomials over the cyclotomic coefficient field,
//! used for curve parameterizations in an affine parameter `t`.

use std::fmt;

use super::cyclotomic::CycNum;
use super::AlgebraError;

/// Polynomial in one variable with `CycNum` coefficients, constant first.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<CycNum>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![CycNum::one()],
        }
    }

    pub fn constant(c: CycNum) -> Self {
        Self::new(vec![c])
    }

    /// The parameter t itself.
    pub fn t() -> Self {
        UniPoly {
            coeffs: vec![CycNum::zero(), CycNum::one()],
        }
    }

    pub fn monomial(c: CycNum, k: usize) -> Self {
        let mut v = vec![CycNum::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CycNum {
        self.coeffs.get(k).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> CycNum {
        self.coeffs.last().cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![CycNum::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] = v[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] = v[i].add(c);
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![CycNum::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&CycNum::from_int(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Division with remainder over the field.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![CycNum::zero(); rem.len() - d.coeffs.len() + 1];
        let dl_inv = d.leading().inv()?;
        for k in (0..quot.len()).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.mul(&dl_inv);
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(c));
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NotDivisible)
        }
    }

    /// Monic gcd over the field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Number of distinct roots over the complex numbers (degree of the
    /// squarefree part).
    pub fn distinct_root_count(&self) -> usize {
        if self.is_zero() || self.degree() == 0 {
            return 0;
        }
        self.squarefree_part().degree()
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*t^{}", c, k)?;
            }
        }
        Ok(())
    }
}

/// Greatest common divisor of a list (monic).
pub fn list_gcd(polys: &[UniPoly]) -> UniPoly {
    let mut g = UniPoly::zero();
    for p in polys {
        if g.is_zero() {
            g = p.monic();
        } else if !p.is_zero() {
            g = g.gcd(p);
        }
        if g.degree() == 0 && !g.is_zero() {
            return UniPoly::one();
        }
    }
    g
}

/// Divides every entry of a tuple by the common polynomial content,
/// making the tuple primitive in the parameter.
pub fn make_primitive(tuple: &mut [UniPoly]) -> UniPoly {
    let g = list_gcd(tuple);
    if g.is_zero() || g.degree() == 0 {
        return UniPoly::one();
    }
    for p in tuple.iter_mut() {
        *p = p.div_exact(&g).expect("content divides");
    }
    g
}

/// Whether the two polynomials are proportional as coefficient vectors,
/// i.e. the pair (p(t) : q(t)) has a constant projective ratio. Zero
/// entries count as proportional to anything.
pub fn proportional(p: &UniPoly, q: &UniPoly) -> bool {
    if p.is_zero() || q.is_zero() {
        return true;
    }
    if p.degree() != q.degree() {
        return false;
    }
    p.scale(&q.leading()).sub(&q.scale(&p.leading())).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> CycNum {
        CycNum::from_int(v)
    }

    #[test]
    fn gcd_and_primitive() {
        // (t-1)(t+2) and (t-1)(t+3)
        let a = UniPoly::new(vec![c(-2), c(1), c(1)]);
        let b = UniPoly::new(vec![c(-3), c(2), c(1)]);
        let g = a.gcd(&b);
        assert_eq!(g, UniPoly::new(vec![c(-1), c(1)]));
        let mut tup = [a, b];
        let content = make_primitive(&mut tup);
        assert_eq!(content.degree(), 1);
        assert_eq!(tup[0], UniPoly::new(vec![c(2), c(1)]));
    }

    #[test]
    fn proportional_pairs() {
        let p = UniPoly::new(vec![c(1), c(2)]);
        let q = p.scale(&CycNum::from_ratio(3, 7));
        assert!(proportional(&p, &q));
        let r = UniPoly::new(vec![c(1), c(3)]);
        assert!(!proportional(&p, &r));
        assert!(proportional(&UniPoly::zero(), &p));
    }

    #[test]
    fn distinct_roots() {
        // (t-1)^2 (t-2): 2 distinct roots
        let p = UniPoly::new(vec![c(-2), c(5), c(-4), c(1)]);
        assert_eq!(p.distinct_root_count(), 2);
    }
}
