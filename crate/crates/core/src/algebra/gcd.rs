//! Multivariate gcd and common-factor reduction for homogeneous tuples.
//!
//! Tuple reduction first trial-divides by supplied candidate factors (for
//! map composition these are the exceptional forms of the inner map), then
//! certifies coprimality of the result. The certificate restricts the
//! tuple to two fixed rational lines and takes a univariate gcd; a
//! nontrivial result falls back to the general multivariate gcd, which is
//! a primitive pseudo-remainder sequence recursing on the main variable.

use num::bigint::BigInt;
use num::rational::BigRational;

use super::cyclotomic::CycNum;
use super::homog::HomogPoly;
use super::unipoly::{list_gcd, UniPoly};
use super::AlgebraError;

/// Exact multivariate division by lead-term reduction (lexicographic
/// order on exponent vectors). Returns `None` if not divisible.
pub fn exact_div(num: &HomogPoly, den: &HomogPoly) -> Option<HomogPoly> {
    if den.is_zero() {
        return None;
    }
    if num.is_zero() {
        return Some(HomogPoly::zero(num.nvars()));
    }
    if num.degree() < den.degree() {
        return None;
    }
    let nvars = num.nvars();
    let (dlead_e, dlead_c) = {
        let (e, c) = den.leading_term().unwrap();
        (e.clone(), c.clone())
    };
    let dlead_inv = dlead_c.inv().ok()?;
    let mut rem = num.clone();
    let mut quot_terms: Vec<(Vec<u16>, CycNum)> = Vec::new();
    while !rem.is_zero() {
        let (rlead_e, rlead_c) = {
            let (e, c) = rem.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        let mut qe = vec![0u16; nvars];
        for i in 0..nvars {
            if rlead_e[i] < dlead_e[i] {
                return None;
            }
            qe[i] = rlead_e[i] - dlead_e[i];
        }
        let qc = rlead_c.mul(&dlead_inv);
        let qterm = HomogPoly::monomial(nvars, &qe, qc.clone());
        rem = rem.sub(&qterm.mul(den)).ok()?;
        quot_terms.push((qe, qc));
    }
    HomogPoly::from_terms(nvars, quot_terms).ok()
}

/// Divides by `den` as many times as possible, returning the reduced
/// polynomial and the multiplicity removed.
pub fn divide_out(num: &HomogPoly, den: &HomogPoly) -> (HomogPoly, usize) {
    let mut p = num.clone();
    let mut count = 0;
    if den.is_constant() {
        return (p, 0);
    }
    while let Some(q) = exact_div(&p, den) {
        p = q;
        count += 1;
        if p.is_zero() {
            break;
        }
    }
    (p, count)
}

fn degree_in_var(p: &HomogPoly, var: usize) -> usize {
    p.terms().map(|(e, _)| e[var] as usize).max().unwrap_or(0)
}

/// Coefficients of p viewed as a univariate polynomial in `var`, each a
/// homogeneous polynomial with zero degree in `var`.
fn as_univariate(p: &HomogPoly, var: usize) -> Vec<HomogPoly> {
    let d = degree_in_var(p, var);
    let mut coeffs: Vec<Vec<(Vec<u16>, CycNum)>> = vec![Vec::new(); d + 1];
    for (e, c) in p.terms() {
        let k = e[var] as usize;
        let mut en = e.clone();
        en[var] = 0;
        coeffs[k].push((en, c.clone()));
    }
    coeffs
        .into_iter()
        .map(|terms| HomogPoly::from_terms(p.nvars(), terms).expect("slices are homogeneous"))
        .collect()
}

fn from_univariate(coeffs: &[HomogPoly], var: usize, nvars: usize) -> HomogPoly {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        for (e, v) in c.terms() {
            let mut en = e.clone();
            en[var] = k as u16;
            terms.push((en, v.clone()));
        }
    }
    HomogPoly::from_terms(nvars, terms).expect("homogeneous by construction")
}

fn uni_trim(v: &mut Vec<HomogPoly>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// gcd of all coefficients (the content with respect to `var`).
fn content(coeffs: &[HomogPoly]) -> HomogPoly {
    let mut g: Option<HomogPoly> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = Some(match g {
            None => c.clone(),
            Some(prev) => multi_gcd(&prev, c),
        });
        if let Some(ref p) = g {
            if p.is_constant() {
                return HomogPoly::constant(c.nvars(), CycNum::one());
            }
        }
    }
    g.unwrap_or_else(|| HomogPoly::constant(coeffs[0].nvars(), CycNum::one()))
}

/// Pseudo-remainder of a by b in variable `var` (coefficient vectors).
fn pseudo_rem(a: &[HomogPoly], b: &[HomogPoly], nvars: usize, _var: usize) -> Vec<HomogPoly> {
    let mut r = a.to_vec();
    uni_trim(&mut r);
    let mut bb = b.to_vec();
    uni_trim(&mut bb);
    let db = bb.len() - 1;
    let lb = bb.last().unwrap().clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r := lb * r - lr * x^(dr-db) * b
        let mut new_r = vec![HomogPoly::zero(nvars); dr + 1];
        for (i, c) in r.iter().enumerate() {
            new_r[i] = c.mul(&lb);
        }
        for (j, c) in bb.iter().enumerate() {
            let idx = dr - db + j;
            new_r[idx] = new_r[idx].sub(&lr.mul(c)).expect("degrees align");
        }
        new_r.pop(); // leading term cancels
        r = new_r;
        uni_trim(&mut r);
    }
    r
}

/// General multivariate gcd of homogeneous polynomials over the
/// cyclotomic coefficient field (primitive PRS). The result is
/// normalized with leading coefficient one.
pub fn multi_gcd(a: &HomogPoly, b: &HomogPoly) -> HomogPoly {
    let nvars = a.nvars();
    assert_eq!(nvars, b.nvars());
    if a.is_zero() {
        return normalize_lead(b);
    }
    if b.is_zero() {
        return normalize_lead(a);
    }
    if a.is_constant() || b.is_constant() {
        return HomogPoly::constant(nvars, CycNum::one());
    }
    // monomial fast path
    if a.num_terms() == 1 || b.num_terms() == 1 {
        return monomial_gcd(a, b);
    }
    // pick a variable present in both
    let mut var = None;
    for v in 0..nvars {
        let (da, db) = (degree_in_var(a, v), degree_in_var(b, v));
        if da > 0 && db > 0 {
            var = Some(v);
            break;
        }
    }
    let var = match var {
        Some(v) => v,
        None => {
            // no shared variable: gcd divides the monomial parts only
            return monomial_gcd(a, b);
        }
    };
    let ua = as_univariate(a, var);
    let ub = as_univariate(b, var);
    let ca = content(&ua);
    let cb = content(&ub);
    let cg = multi_gcd(&ca, &cb);
    let pa: Vec<HomogPoly> = ua
        .iter()
        .map(|c| exact_div(c, &ca).expect("content divides"))
        .collect();
    let pb: Vec<HomogPoly> = ub
        .iter()
        .map(|c| exact_div(c, &cb).expect("content divides"))
        .collect();
    // primitive PRS on the primitive parts
    let (mut r0, mut r1) = if pa.len() >= pb.len() {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&r0, &r1, nvars, var);
        if r.is_empty() {
            break;
        }
        let cr = content(&r);
        let rp: Vec<HomogPoly> = r
            .iter()
            .map(|c| exact_div(c, &cr).expect("content divides"))
            .collect();
        r0 = r1;
        r1 = rp;
        if r1.len() == 1 {
            // coprime in var
            return normalize_lead(&cg);
        }
    }
    let cr1 = content(&r1);
    let prim: Vec<HomogPoly> = r1
        .iter()
        .map(|c| exact_div(c, &cr1).expect("content divides"))
        .collect();
    let g = cg.mul(&from_univariate(&prim, var, nvars));
    normalize_lead(&g)
}

fn monomial_gcd(a: &HomogPoly, b: &HomogPoly) -> HomogPoly {
    let nvars = a.nvars();
    let mut mins = vec![u16::MAX; nvars];
    for p in [a, b] {
        let mut pmin = vec![u16::MAX; nvars];
        for (e, _) in p.terms() {
            for i in 0..nvars {
                pmin[i] = pmin[i].min(e[i]);
            }
        }
        for i in 0..nvars {
            mins[i] = mins[i].min(pmin[i]);
        }
    }
    let mins: Vec<u16> = mins
        .into_iter()
        .map(|m| if m == u16::MAX { 0 } else { m })
        .collect();
    HomogPoly::monomial(nvars, &mins, CycNum::one())
}

fn normalize_lead(p: &HomogPoly) -> HomogPoly {
    if p.is_zero() {
        return p.clone();
    }
    let lead = p.leading_term().unwrap().1.clone();
    p.scale(&lead.inv().expect("nonzero leading coefficient"))
}

/// gcd of a whole tuple.
pub fn tuple_gcd(tuple: &[HomogPoly]) -> HomogPoly {
    let nvars = tuple.first().map_or(0, |p| p.nvars());
    let mut g = HomogPoly::zero(nvars);
    for p in tuple {
        g = multi_gcd(&g, p);
        if g.is_constant() && !g.is_zero() {
            return g;
        }
    }
    g
}

/// Two fixed rational probe lines used by the coprimality certificate.
fn probe_lines(nvars: usize) -> [Vec<UniPoly>; 2] {
    let mk = |base: &[i64], dir: &[i64]| -> Vec<UniPoly> {
        (0..nvars)
            .map(|i| {
                UniPoly::new(vec![
                    CycNum::from_int(base[i]),
                    CycNum::from_int(dir[i]),
                ])
            })
            .collect()
    };
    let base1 = [1i64, 2, 3, 5];
    let dir1 = [7i64, 11, -13, 17];
    let base2 = [2i64, -3, 5, 7];
    let dir2 = [-11i64, 13, 17, 19];
    [
        mk(&base1[..nvars], &dir1[..nvars]),
        mk(&base2[..nvars], &dir2[..nvars]),
    ]
}

/// Restricting the tuple to a line and finding a trivial univariate gcd
/// certifies the tuple has no common polynomial factor.
fn certify_coprime(tuple: &[HomogPoly]) -> bool {
    let nvars = tuple[0].nvars();
    for line in probe_lines(nvars).iter() {
        let restricted: Vec<UniPoly> = tuple.iter().map(|p| p.eval_curve(line)).collect();
        let g = list_gcd(&restricted);
        if !g.is_zero() && g.degree() == 0 {
            return true;
        }
    }
    false
}

/// Report of a tuple reduction: which factors were removed.
#[derive(Debug, Clone)]
pub struct ReductionReport {
    pub removed: Vec<(HomogPoly, usize)>,
    pub used_general_gcd: bool,
}

/// Removes the full common factor from a tuple of homogeneous
/// polynomials. Candidate factors are trial-divided first; the general
/// multivariate gcd runs whenever the certificate cannot confirm the
/// remainder is primitive, so the output provably has no common factor.
pub fn gcd_reduce(
    tuple: &[HomogPoly],
    candidates: &[HomogPoly],
) -> Result<(Vec<HomogPoly>, ReductionReport), AlgebraError> {
    if tuple.iter().all(|p| p.is_zero()) {
        return Err(AlgebraError::ZeroTuple);
    }
    let mut out: Vec<HomogPoly> = tuple.to_vec();
    let mut report = ReductionReport {
        removed: Vec::new(),
        used_general_gcd: false,
    };
    for cand in candidates {
        if cand.is_constant() {
            continue;
        }
        loop {
            let mut divided = Vec::with_capacity(out.len());
            let mut ok = true;
            for p in &out {
                if p.is_zero() {
                    divided.push(p.clone());
                    continue;
                }
                match exact_div(p, cand) {
                    Some(q) => divided.push(q),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                break;
            }
            out = divided;
            match report.removed.iter_mut().find(|(f, _)| f == cand) {
                Some((_, m)) => *m += 1,
                None => report.removed.push((cand.clone(), 1)),
            }
        }
    }
    if !certify_coprime(&out) {
        report.used_general_gcd = true;
        let g = tuple_gcd(&out);
        if !g.is_constant() {
            let reduced: Vec<HomogPoly> = out
                .iter()
                .map(|p| {
                    if p.is_zero() {
                        p.clone()
                    } else {
                        exact_div(p, &g).expect("tuple gcd divides")
                    }
                })
                .collect();
            report.removed.push((g, 1));
            out = reduced;
        }
    }
    Ok((out, report))
}

/// Scales a cyclotomic-coefficient polynomial so some fixed coefficient is
/// a convenient rational; used only for stable display.
pub fn normalize_for_display(p: &HomogPoly) -> HomogPoly {
    normalize_lead(p)
}

#[allow(dead_code)]
fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> HomogPoly {
        HomogPoly::var(4, i)
    }

    #[test]
    fn reduce_with_candidate() {
        // (x0*x1, x0*x2) with candidate x0 -> (x1, x2)
        let tuple = [x(0).mul(&x(1)), x(0).mul(&x(2))];
        let (reduced, report) = gcd_reduce(&tuple, &[x(0)]).unwrap();
        assert_eq!(reduced, vec![x(1), x(2)]);
        assert_eq!(report.removed.len(), 1);
    }

    #[test]
    fn reduce_without_candidate_uses_fallback() {
        let tuple = [x(0).mul(&x(1)), x(0).mul(&x(2))];
        let (reduced, report) = gcd_reduce(&tuple, &[]).unwrap();
        assert_eq!(reduced, vec![x(1), x(2)]);
        assert!(report.used_general_gcd);
    }

    #[test]
    fn coprime_tuple_unchanged() {
        let tuple = [x(0), x(1), x(2), x(3)];
        let (reduced, _) = gcd_reduce(&tuple, &[x(0)]).unwrap();
        assert_eq!(reduced, tuple.to_vec());
    }

    #[test]
    fn zero_tuple_rejected() {
        let z = HomogPoly::zero(4);
        assert!(gcd_reduce(&[z.clone(), z], &[]).is_err());
    }

    #[test]
    fn multi_gcd_extracts_common_factor() {
        // gcd((x0+x1)^2 * x2, (x0+x1) * x3^2) = x0 + x1
        let s = x(0).add(&x(1)).unwrap();
        let a = s.mul(&s).mul(&x(2));
        let b = s.mul(&x(3)).mul(&x(3));
        let g = multi_gcd(&a, &b);
        assert_eq!(g, s);
    }

    #[test]
    fn multi_gcd_of_coprime_is_constant() {
        let a = x(0).mul(&x(1));
        let b = x(2).mul(&x(3)).add(&x(0).mul(&x(1))).unwrap();
        let g = multi_gcd(&a, &b);
        assert!(g.is_constant());
    }
}
