//! Real root isolation for integer polynomials via Sturm chains, and
//! algebraic real numbers (defining polynomial plus isolating interval).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::ratpoly::{self, RatPoly};
use super::AlgebraError;

/// A real algebraic number: squarefree defining polynomial with an
/// isolating rational interval. The polynomial changes sign across
/// [lo, hi]; for rational roots lo == hi.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    pub poly: IntPoly,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl AlgebraicReal {
    pub fn from_rational(q: BigRational, poly: IntPoly) -> Self {
        AlgebraicReal {
            poly,
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn approx_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from(BigInt::from(2));
        super::cyclotomic::rational_to_f64(&mid)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Shrinks the isolating interval below `tol` by bisection.
    pub fn refine(&mut self, tol: &BigRational) {
        if self.lo == self.hi {
            return;
        }
        let two = BigRational::from(BigInt::from(2));
        let mut flo = self.poly.eval_rational(&self.lo);
        while self.width() > *tol {
            let mid = (&self.lo + &self.hi) / &two;
            let fmid = self.poly.eval_rational(&mid);
            if fmid.is_zero() {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if (flo.is_negative() && fmid.is_negative())
                || (flo.is_positive() && fmid.is_positive())
            {
                self.lo = mid;
                flo = fmid;
            } else {
                self.hi = mid;
            }
        }
    }

    /// Exact comparison with a rational number.
    pub fn cmp_rational(&self, q: &BigRational) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if self.lo == self.hi {
            return self.lo.cmp(q);
        }
        if *q <= self.lo {
            // root is strictly inside (lo, hi) unless lo is the root
            if self.poly.eval_rational(&self.lo).is_zero() && *q == self.lo {
                return Equal;
            }
            return Greater;
        }
        if *q >= self.hi {
            if self.poly.eval_rational(&self.hi).is_zero() && *q == self.hi {
                return Equal;
            }
            return Less;
        }
        // q lies inside: compare by sign change
        let fq = self.poly.eval_rational(q);
        if fq.is_zero() {
            return Equal;
        }
        let flo = self.poly.eval_rational(&self.lo);
        if flo.is_zero() {
            // degenerate: treat lo as the root
            return Less;
        }
        if (flo.is_negative() && fq.is_negative()) || (flo.is_positive() && fq.is_positive()) {
            Greater
        } else {
            Less
        }
    }
}

fn sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a squarefree rational polynomial.
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone()];
    let dp = derivative(p);
    if !ratpoly::is_zero(&dp) {
        chain.push(dp);
    }
    while chain.len() >= 2 {
        let n = chain.len();
        let r = ratpoly::rem(&chain[n - 2], &chain[n - 1]);
        if ratpoly::is_zero(&r) {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn derivative(p: &RatPoly) -> RatPoly {
    if p.len() <= 1 {
        return vec![];
    }
    p[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * BigRational::from(BigInt::from(i as i64 + 1)))
        .collect()
}

fn eval(p: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = sign(&eval(p, x));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of roots of the (squarefree) chain polynomial in (a, b].
fn count_roots(chain: &[RatPoly], a: &BigRational, b: &BigRational) -> usize {
    variations(chain, a) - variations(chain, b)
}

/// Cauchy root bound: all real roots lie in [-B, B].
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().abs();
    let mut maxc = BigRational::zero();
    for c in p.coeffs() {
        let r = BigRational::new(c.abs(), lead.clone());
        if r > maxc {
            maxc = r;
        }
    }
    maxc + BigRational::one()
}

/// Isolates all real roots of an integer polynomial. The polynomial is
/// replaced by its squarefree part internally. Intervals are disjoint,
/// each bracketing one sign change, refined below `tol`.
pub fn isolate_real_roots(p: &IntPoly, tol: &BigRational) -> Result<Vec<AlgebraicReal>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(vec![]);
    }
    let sf = p.squarefree_part();
    let chain = sturm_chain(&sf.to_rational_coeffs());
    let bound = cauchy_bound(&sf);
    // the Cauchy bound strictly exceeds every root, so the outer
    // endpoints are never roots; splits below preserve that invariant
    let mut stack = vec![(-bound.clone(), bound.clone())];
    let mut found: Vec<AlgebraicReal> = Vec::new();
    let two = BigRational::from(BigInt::from(2));
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            let mut root = AlgebraicReal {
                poly: sf.clone(),
                lo: a,
                hi: b,
            };
            root.refine(tol);
            found.push(root);
            continue;
        }
        let mid = (&a + &b) / &two;
        if !sf.eval_rational(&mid).is_zero() {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        } else {
            // the midpoint is an exact rational root
            found.push(AlgebraicReal::from_rational(mid.clone(), sf.clone()));
            let mut eps = (&b - &a) / BigRational::from(BigInt::from(1024));
            loop {
                let left = &mid - &eps;
                let right = &mid + &eps;
                if !sf.eval_rational(&left).is_zero()
                    && !sf.eval_rational(&right).is_zero()
                    && count_roots(&chain, &left, &right) == 1
                {
                    stack.push((a, left));
                    stack.push((right, b));
                    break;
                }
                eps = eps / &two;
            }
        }
    }
    found.sort_by(|r, s| {
        let rm = (&r.lo + &r.hi) / &two;
        let sm = (&s.lo + &s.hi) / &two;
        rm.cmp(&sm)
    });
    Ok(found)
}

/// The largest real root strictly greater than `threshold`, if any.
pub fn largest_root_above(
    p: &IntPoly,
    threshold: i64,
    tol: &BigRational,
) -> Result<Option<AlgebraicReal>, AlgebraError> {
    let roots = isolate_real_roots(p, tol)?;
    let thr = BigRational::from(BigInt::from(threshold));
    let mut best: Option<AlgebraicReal> = None;
    for mut r in roots {
        // refine until clear of the threshold or proven equal
        while r.lo < thr && r.hi > thr && r.lo != r.hi {
            let half = r.width() / BigRational::from(BigInt::from(2));
            r.refine(&half);
            if r.poly.eval_rational(&thr).is_zero() && r.lo < thr && r.hi > thr {
                // the root is exactly the threshold
                r.lo = thr.clone();
                r.hi = thr.clone();
            }
        }
        if r.cmp_rational(&thr) == std::cmp::Ordering::Greater {
            best = Some(r);
        }
    }
    Ok(best)
}

pub fn tolerance(pow10: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(pow10))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_plastic_root() {
        // x^3 - x - 1: one real root ~ 1.324718
        let p = IntPoly::from_i64(&[-1, -1, 0, 1]);
        let roots = isolate_real_roots(&p, &tolerance(7)).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].approx_f64() - 1.324718).abs() < 1e-5);
    }

    #[test]
    fn salem_octic_largest_root() {
        // t^8 - t^5 - t^4 - t^3 + 1: largest real root ~ 1.280638
        let p = IntPoly::from_i64(&[1, 0, 0, -1, -1, -1, 0, 0, 1]);
        let r = largest_root_above(&p, 1, &tolerance(7)).unwrap().unwrap();
        assert!((r.approx_f64() - 1.28064).abs() < 1e-5);
    }

    #[test]
    fn quadratic_with_rational_roots() {
        // t^2 - 1
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        let roots = isolate_real_roots(&p, &tolerance(6)).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].approx_f64() + 1.0).abs() < 1e-6);
        assert!((roots[1].approx_f64() - 1.0).abs() < 1e-6);
        // and no root strictly above 1
        assert!(largest_root_above(&p, 1, &tolerance(6)).unwrap().is_none());
    }

    #[test]
    fn root_count_matches_sign_variations() {
        // (t^2-2)(t^2-3): four real roots
        let p = IntPoly::from_i64(&[6, 0, -5, 0, 1]);
        let roots = isolate_real_roots(&p, &tolerance(6)).unwrap();
        assert_eq!(roots.len(), 4);
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo, "intervals must be disjoint");
        }
    }
}
