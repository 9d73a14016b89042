//! Divisor-class pullback matrices on the blown-up spaces, their
//! characteristic polynomials (by determinant and by the closed bracket
//! formula from the orbit signature), dynamical degrees, degree
//! prediction, growth classification, and Salem-number verdicts.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::algreal::{isolate_real_roots, largest_root_above, tolerance, AlgebraicReal};
use crate::algebra::intpoly::{strip_cyclotomic_factors, IntPoly, LaurentPoly};
use crate::algebra::AlgebraError;
use crate::orbit::OrbitSignature;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PicardError {
    #[error("inconsistent orbit signature: {0}")]
    BadSignature(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Square integer matrix with labeled basis; columns are the images of
/// the basis classes under pullback.
#[derive(Debug, Clone, PartialEq)]
pub struct PicAction {
    pub labels: Vec<String>,
    pub m: Vec<Vec<BigInt>>,
}

impl PicAction {
    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.m[row][col]
    }

    pub fn identity_like(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                if i == j {
                    self.m[i][j].is_one()
                } else {
                    self.m[i][j].is_zero()
                }
            })
        })
    }

    pub fn mat_mul(&self, other: &PicAction) -> PicAction {
        let n = self.dim();
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.m[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.m[k][j].is_zero() {
                        out[i][j] += &self.m[i][k] * &other.m[k][j];
                    }
                }
            }
        }
        PicAction {
            labels: self.labels.clone(),
            m: out,
        }
    }

    pub fn mat_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        let n = self.dim();
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if !self.m[i][j].is_zero() && !v[j].is_zero() {
                    out[i] += &self.m[i][j] * &v[j];
                }
            }
        }
        out
    }

    /// Least k <= bound with M^k = I, if any.
    pub fn multiplicative_order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.identity_like() {
                return Some(k);
            }
            if k < bound {
                acc = acc.mat_mul(self);
            }
        }
        None
    }
}

/// Characteristic polynomial det(tI - M) by the division-free
/// Samuelson-Berkowitz recursion; monic, exact integers.
pub fn char_poly_det(action: &PicAction) -> IntPoly {
    let n = action.dim();
    let a = &action.m;
    // p holds the char poly coefficients of the leading principal
    // submatrix, highest degree first
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..n {
        // Toeplitz column entries s_0 .. s_{i+1}
        let mut s = Vec::with_capacity(i + 2);
        s.push(BigInt::one());
        s.push(-a[i][i].clone());
        if i > 0 {
            let row: Vec<&BigInt> = (0..i).map(|j| &a[i][j]).collect();
            let col: Vec<&BigInt> = (0..i).map(|j| &a[j][i]).collect();
            // iterate M^k * col
            let mut v: Vec<BigInt> = col.iter().map(|c| (*c).clone()).collect();
            for _ in 0..i {
                let dot: BigInt = row
                    .iter()
                    .zip(v.iter())
                    .map(|(r, x)| (*r) * x)
                    .sum();
                s.push(-dot);
                // v = M_i * v with M_i the leading i x i block
                let mut nv = vec![BigInt::zero(); i];
                for r in 0..i {
                    for c in 0..i {
                        if !a[r][c].is_zero() && !v[c].is_zero() {
                            nv[r] += &a[r][c] * &v[c];
                        }
                    }
                }
                v = nv;
            }
        }
        // multiply the Toeplitz matrix built from s into p
        let mut np = vec![BigInt::zero(); p.len() + 1];
        for (r, item) in np.iter_mut().enumerate() {
            for (c, pc) in p.iter().enumerate() {
                if r >= c && r - c < s.len() {
                    *item += &s[r - c] * pc;
                }
            }
        }
        p = np;
    }
    // p is highest-degree-first; convert to constant-first
    p.reverse();
    IntPoly::new(p)
}

/// The 5 x 5 pullback on the four-blowup space: basis
/// {H, E1, S03, S01, E3}.
pub fn pic_y_matrix() -> PicAction {
    let labels = ["H", "E1", "S03", "S01", "E3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let cols: [[i64; 5]; 5] = [
        [2, -1, 0, -1, -1],  // H -> 2H - E1 - S01 - E3
        [0, 0, 1, 0, 0],     // E1 -> S03
        [1, -1, -1, -1, -1], // S03 -> H - E1 - S03 - S01 - E3
        [0, 0, 0, 0, 1],     // S01 -> E3
        [1, 0, 0, -1, -1],   // E3 -> H - S01 - E3
    ];
    let n = 5;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            m[i][j] = BigInt::from(v);
        }
    }
    PicAction { labels, m }
}

fn validate_signature(sig: &OrbitSignature) -> Result<(), PicardError> {
    let n = sig.n_close;
    if n < 2 {
        return Err(PicardError::BadSignature("closing time below 2".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &d in sig.d_list.iter().chain(sig.u_list.iter()) {
        if d < 2 || d >= n {
            return Err(PicardError::BadSignature(format!(
                "event index {} out of range",
                d
            )));
        }
        if !seen.insert(d) {
            return Err(PicardError::BadSignature("duplicate event index".into()));
        }
    }
    if let Some(ms) = sig.m_s {
        if ms < 1 || ms + 5 > n {
            return Err(PicardError::BadSignature(format!(
                "special-fiber index {} out of range",
                ms
            )));
        }
        for k in ms..=ms + 4 {
            if seen.contains(&k) {
                return Err(PicardError::BadSignature(
                    "special-fiber block overlaps event indices".into(),
                ));
            }
        }
    }
    Ok(())
}

/// The (N+5) x (N+5) pullback matrix on the fully blown-up space, built
/// from the orbit signature. Basis order {H, E1, S03, S01, E3, F_N,
/// F_{N-1}, ..., F_1}; rows 1-6 are fixed, rows 7..N+5 depend on the
/// event indices, with a five-row block when the special fiber occurs.
pub fn pic_z_matrix(sig: &OrbitSignature) -> Result<PicAction, PicardError> {
    validate_signature(sig)?;
    let n = sig.n_close as usize;
    let dim = n + 5;
    let mut labels = vec![
        "H".to_string(),
        "E1".to_string(),
        "S03".to_string(),
        "S01".to_string(),
        "E3".to_string(),
    ];
    for j in (1..=n).rev() {
        labels.push(format!("F{}", j));
    }
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); dim]; dim];
    let set = |rows: &mut Vec<Vec<BigInt>>, r: usize, entries: &[(usize, i64)]| {
        for &(c, v) in entries {
            rows[r - 1][c - 1] = BigInt::from(v);
        }
    };
    // fixed rows (1-indexed like the construction)
    set(&mut rows, 1, &[(1, 2), (3, 1), (5, 1), (dim, 1)]);
    set(&mut rows, 2, &[(1, -1), (3, -1), (dim, -1)]);
    set(&mut rows, 3, &[(2, 1), (3, -1)]);
    set(&mut rows, 4, &[(1, -1), (3, -1), (5, -1)]);
    set(&mut rows, 5, &[(1, -1), (3, -1), (4, 1), (5, -1)]);
    set(&mut rows, 6, &[(1, -1), (5, -1), (dim, -1)]);
    // rows 7 .. N+5 indexed by j = 1 .. N-1
    for j in 1..n {
        let r = j + 6;
        if sig.d_list.iter().any(|&d| j == n - d as usize) {
            set(&mut rows, r, &[(j + 5, 1), (dim, -1)]);
        } else if sig.u_list.iter().any(|&u| j == n - u as usize) {
            set(&mut rows, r, &[(1, -1), (5, -1), (j + 5, 1), (dim, -1)]);
        } else {
            set(&mut rows, r, &[(j + 5, 1)]);
        }
    }
    if let Some(ms) = sig.m_s {
        let j = n - ms as usize;
        // five-row block replacing the defaults
        for r in j + 2..=j + 6 {
            rows[r - 1] = vec![BigInt::zero(); dim];
        }
        set(&mut rows, j + 2, &[(1, -1), (3, -1), (j + 1, 1), (dim, -1)]);
        set(&mut rows, j + 3, &[(3, -1), (j + 2, 1)]);
        set(
            &mut rows,
            j + 4,
            &[(1, -1), (3, -1), (5, -1), (j + 3, 1), (dim, -1)],
        );
        set(&mut rows, j + 5, &[(1, -1), (3, -1), (5, -1), (j + 4, 1)]);
        set(&mut rows, j + 6, &[(5, -1), (j + 5, 1)]);
    }
    Ok(PicAction { labels, m: rows })
}

/// The closed characteristic-polynomial bracket built from the orbit
/// signature: four Laurent building blocks combined and cleared to an
/// integer polynomial of degree N + 3.
pub fn char_poly_bracket(sig: &OrbitSignature) -> Result<IntPoly, PicardError> {
    validate_signature(sig)?;
    let n = sig.n_close as i64;
    let term = LaurentPoly::term;
    let sum_d = sig
        .d_list
        .iter()
        .fold(LaurentPoly::zero(), |acc, &d| acc.add(&term(1, -(d as i64))));
    let sum_u = sig
        .u_list
        .iter()
        .fold(LaurentPoly::zero(), |acc, &u| acc.add(&term(1, -(u as i64))));
    let ms = sig.m_s.map(|v| v as i64);

    // q1 = -1 - sum_d + t^-(ms+1)
    let mut q1 = term(-1, 0).sub(&sum_d);
    if let Some(ms) = ms {
        q1 = q1.add(&term(1, -(ms + 1)));
    }
    // q2 = t^-ms (t^-1 + t^-2 + t^-3 + t^-4)
    let mut q2 = LaurentPoly::zero();
    if let Some(ms) = ms {
        for k in 1..=4 {
            q2 = q2.add(&term(1, -(ms + k)));
        }
    }
    // q3 = -1 - sum_d + t^-ms (1 + t^-1 - t^-4)
    let mut q3 = term(-1, 0).sub(&sum_d);
    if let Some(ms) = ms {
        q3 = q3
            .add(&term(1, -ms))
            .add(&term(1, -(ms + 1)))
            .sub(&term(1, -(ms + 4)));
    }
    // q4 = -t - t sum_d - t sum_u - t^-(N-1) - t^-ms (t^-1 + t^-3)
    let t1 = term(1, 1);
    let mut q4 = term(-1, 1)
        .sub(&t1.mul(&sum_d))
        .sub(&t1.mul(&sum_u))
        .sub(&term(1, -(n - 1)));
    if let Some(ms) = ms {
        q4 = q4.sub(&term(1, -(ms + 1))).sub(&term(1, -(ms + 3)));
    }

    // bracket = t^(N-1) [ (q1-q4) t^3 + (2q1-q2-q3-q4) t^2 + (q1-q3) t + q4 ]
    let two_q1 = q1.add(&q1);
    let inner = q1
        .sub(&q4)
        .mul(&term(1, 3))
        .add(&two_q1.sub(&q2).sub(&q3).sub(&q4).mul(&term(1, 2)))
        .add(&q1.sub(&q3).mul(&term(1, 1)))
        .add(&q4);
    let cleared = inner.shift(n - 1);
    cleared
        .to_int_poly()
        .ok_or_else(|| PicardError::BadSignature("bracket has negative powers".into()))
        .map(|p| {
            // normalize the sign so the leading coefficient is positive
            if p.leading().is_negative() {
                p.neg()
            } else {
                p
            }
        })
}

/// Report of the two-route characteristic polynomial comparison: the
/// determinant route must equal +-(t^2+1) times the bracket route.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub holds: bool,
    pub sign: i32,
    pub det_poly: IntPoly,
    pub bracket: IntPoly,
}

pub fn identity_check(sig: &OrbitSignature) -> Result<IdentityReport, PicardError> {
    let action = pic_z_matrix(sig)?;
    let det_poly = char_poly_det(&action);
    let bracket = char_poly_bracket(sig)?;
    let factor = IntPoly::from_i64(&[1, 0, 1]);
    let product = factor.mul(&bracket);
    let (holds, sign) = if product == det_poly {
        (true, 1)
    } else if product.neg() == det_poly {
        (true, -1)
    } else {
        (false, 0)
    };
    Ok(IdentityReport {
        holds,
        sign,
        det_poly,
        bracket,
    })
}

/// A dynamical degree: the largest real root of the polynomial at or
/// above 1, together with the factor that carries it after removing all
/// cyclotomic factors.
#[derive(Debug, Clone)]
pub struct DynamicalDegree {
    pub value: AlgebraicReal,
    pub approx: f64,
    pub all_cyclotomic: bool,
    pub carrier: IntPoly,
    pub cyclotomic_factors: Vec<(u32, usize)>,
}

pub fn dynamical_degree(poly: &IntPoly) -> Result<DynamicalDegree, PicardError> {
    if poly.is_zero() {
        return Err(PicardError::Algebra(AlgebraError::ZeroPolynomial));
    }
    let (stripped, removed) = strip_cyclotomic_factors(poly);
    let tol = tolerance(9);
    if stripped.degree() == 0 {
        let one = AlgebraicReal::from_rational(BigRational::one(), IntPoly::from_i64(&[-1, 1]));
        return Ok(DynamicalDegree {
            value: one,
            approx: 1.0,
            all_cyclotomic: true,
            carrier: stripped,
            cyclotomic_factors: removed,
        });
    }
    let root = largest_root_above(&stripped, 1, &tol)?;
    match root {
        Some(r) => {
            let approx = r.approx_f64();
            Ok(DynamicalDegree {
                value: r,
                approx,
                all_cyclotomic: false,
                carrier: stripped,
                cyclotomic_factors: removed,
            })
        }
        None => {
            let one =
                AlgebraicReal::from_rational(BigRational::one(), IntPoly::from_i64(&[-1, 1]));
            Ok(DynamicalDegree {
                value: one,
                approx: 1.0,
                all_cyclotomic: true,
                carrier: stripped,
                cyclotomic_factors: removed,
            })
        }
    }
}

/// Degree growth classification of a pullback action.
#[derive(Debug, Clone)]
pub enum GrowthClass {
    Periodic { order: u32 },
    Bounded { note: String },
    Linear,
    Quadratic,
    Exponential { degree: Box<DynamicalDegree> },
}

/// Ranks of (M - I)^k over the rationals, k = 1, 2, 3, ...
fn unipotent_ranks(action: &PicAction) -> Vec<usize> {
    let n = action.dim();
    let mut mi: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = action.m[i][j].clone();
                    let v = if i == j { v - BigInt::one() } else { v };
                    BigRational::from(v)
                })
                .collect()
        })
        .collect();
    let base = mi.clone();
    let mut ranks = Vec::new();
    for _ in 0..4 {
        ranks.push(rational_rank(&mi));
        // mi = mi * base
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if mi[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !base[k][j].is_zero() {
                        let add = &mi[i][k] * &base[k][j];
                        next[i][j] += add;
                    }
                }
            }
        }
        mi = next;
    }
    ranks
}

fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = m.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for c in 0..ncols {
        let mut pivot = None;
        for r in rank..nrows {
            if !m[r][c].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].clone();
        for j in c..ncols {
            let v = &m[rank][j] / &inv;
            m[rank][j] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..ncols {
                    let sub = &f * &m[rank][j];
                    m[r][j] -= sub;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Classifies degree growth: exponential when the spectral radius
/// exceeds 1, periodic when a matrix power is the identity, otherwise
/// linear or quadratic from the largest Jordan block at eigenvalue 1.
pub fn growth_class(action: &PicAction) -> Result<GrowthClass, PicardError> {
    let cp = char_poly_det(action);
    let (stripped, removed) = strip_cyclotomic_factors(&cp);
    if stripped.degree() > 0 {
        let dd = dynamical_degree(&cp)?;
        return Ok(GrowthClass::Exponential {
            degree: Box::new(dd),
        });
    }
    // all eigenvalues are roots of unity; candidate period = lcm of their
    // orders, capped
    let mut lcm: u64 = 1;
    for (k, _) in &removed {
        lcm = num::integer::lcm(lcm, *k as u64);
        if lcm > 1000 {
            break;
        }
    }
    let bound = (2 * lcm).min(1000) as u32;
    if let Some(k) = action.multiplicative_order(bound) {
        return Ok(GrowthClass::Periodic { order: k });
    }
    let ranks = unipotent_ranks(action);
    // sizes of Jordan blocks at eigenvalue 1: rank drops reveal them
    let n = action.dim();
    let blocks_ge = |s: usize| -> usize {
        // number of blocks of size >= s equals rank((M-I)^(s-1)) - rank((M-I)^s)
        let r_prev = if s == 1 { n } else { ranks[s - 2] };
        r_prev - ranks[s - 1]
    };
    let mut largest = 0;
    for s in (1..=4).rev() {
        if blocks_ge(s) > 0 {
            largest = s;
            break;
        }
    }
    match largest {
        3 => Ok(GrowthClass::Quadratic),
        2 => Ok(GrowthClass::Linear),
        _ => Ok(GrowthClass::Bounded {
            note: format!("largest block at eigenvalue 1 has size {}", largest),
        }),
    }
}

/// Predicted degrees of the iterates: the H-component of M^n applied to
/// the H class, n = 1..n_max.
pub fn predicted_degrees(action: &PicAction, n_max: u32) -> Vec<BigInt> {
    let n = action.dim();
    let mut v = vec![BigInt::zero(); n];
    v[0] = BigInt::one();
    let mut out = Vec::new();
    for _ in 0..n_max {
        v = action.mat_vec(&v);
        out.push(v[0].clone());
    }
    out
}

/// Salem verdict for an integer polynomial: after removing cyclotomic
/// factors and multiplicities, the factor carrying the largest root must
/// be self-reciprocal of even degree 2k >= 4 with exactly one real
/// trace-transform root above 2 and the other k-1 inside (-2, 2). The
/// trace transform makes the unit-circle census exact; a floating census
/// is reported alongside.
#[derive(Debug, Clone)]
pub enum SalemVerdict {
    Salem {
        lambda: AlgebraicReal,
        factor: IntPoly,
    },
    NotSalem {
        reason: String,
    },
}

pub fn salem_verdict(poly: &IntPoly) -> Result<SalemVerdict, PicardError> {
    if poly.is_zero() {
        return Err(PicardError::Algebra(AlgebraError::ZeroPolynomial));
    }
    let (stripped, _) = strip_cyclotomic_factors(poly);
    if stripped.degree() == 0 {
        return Ok(SalemVerdict::NotSalem {
            reason: "all factors cyclotomic".into(),
        });
    }
    let sf = stripped.squarefree_part();
    if !sf.is_self_reciprocal() {
        return Ok(SalemVerdict::NotSalem {
            reason: "carrier factor is not self-reciprocal".into(),
        });
    }
    let deg = sf.degree();
    if deg % 2 != 0 || deg < 4 {
        return Ok(SalemVerdict::NotSalem {
            reason: format!("carrier factor has degree {}", deg),
        });
    }
    let k = deg / 2;
    let q = trace_transform(&sf);
    debug_assert_eq!(q.degree(), k);
    let tol = tolerance(9);
    let roots = isolate_real_roots(&q, &tol)?;
    let two = BigRational::from(BigInt::from(2));
    let minus_two = -two.clone();
    let mut above = 0;
    let mut inside = 0;
    let mut below = 0;
    for r in &roots {
        match (
            r.cmp_rational(&two),
            r.cmp_rational(&minus_two),
        ) {
            (std::cmp::Ordering::Greater, _) => above += 1,
            (_, std::cmp::Ordering::Less) => below += 1,
            _ => inside += 1,
        }
    }
    if above == 1 && below == 0 && inside == k - 1 && roots.len() == k {
        let lambda = largest_root_above(&sf, 1, &tol)?
            .expect("a Salem factor has a real root above 1");
        Ok(SalemVerdict::Salem { lambda, factor: sf })
    } else {
        Ok(SalemVerdict::NotSalem {
            reason: format!(
                "trace-transform root census (above, inside, below, real) = ({}, {}, {}, {}) of degree {}",
                above, inside, below, roots.len(), k
            ),
        })
    }
}

/// For a self-reciprocal p of degree 2k, the polynomial q with
/// p(t) = t^k q(t + 1/t), via the recursion for t^j + t^-j.
fn trace_transform(p: &IntPoly) -> IntPoly {
    let deg = p.degree();
    let k = deg / 2;
    // v_j(w) = t^j + t^-j as a polynomial in w = t + 1/t
    let mut v: Vec<IntPoly> = vec![IntPoly::from_i64(&[2]), IntPoly::from_i64(&[0, 1])];
    for j in 2..=k {
        let next = IntPoly::from_i64(&[0, 1]).mul(&v[j - 1]).sub(&v[j - 2]);
        v.push(next);
    }
    let mut q = IntPoly::monomial(p.coeff(k), 0);
    for j in 1..=k {
        q = q.add(&v[j].scale(&p.coeff(k + j)));
    }
    q
}

/// Deterministic sampler of valid orbit signatures (interlaced event
/// lists, optional special-fiber index with a disjoint five-step block),
/// for randomized cross-checks of the two characteristic-polynomial
/// routes.
pub fn sample_signatures(count: usize, n_max: u32, seed: u64) -> Vec<OrbitSignature> {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = move |m: u64| -> u64 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) % m
    };
    let mut out = Vec::new();
    while out.len() < count {
        let n = 6 + next((n_max - 5) as u64) as u32;
        let max_pairs = ((n - 2) / 2).min(3);
        let m = next(max_pairs as u64 + 1) as u32;
        let mut picks = std::collections::BTreeSet::new();
        while (picks.len() as u32) < 2 * m {
            picks.insert(2 + next((n - 2) as u64) as u32);
        }
        let sorted: Vec<u32> = picks.iter().cloned().collect();
        let d_list: Vec<u32> = sorted.iter().step_by(2).cloned().collect();
        let u_list: Vec<u32> = sorted.iter().skip(1).step_by(2).cloned().collect();
        let mut m_s = None;
        if n >= 7 && next(2) == 0 {
            for _ in 0..6 {
                let ms = 1 + next((n - 6) as u64) as u32;
                let block: Vec<u32> = (ms..=ms + 4).collect();
                if block.iter().all(|b| !sorted.contains(b)) {
                    m_s = Some(ms);
                    break;
                }
            }
        }
        let sig = OrbitSignature::abstract_data(n, d_list, u_list, m_s);
        if validate_signature(&sig).is_ok() {
            out.push(sig);
        }
    }
    out
}

/// A numeric unit-circle census of polynomial roots, used for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCensus {
    pub outside: usize,
    pub on_circle: usize,
    pub inside: usize,
}

/// Floating root census by the Durand-Kerner iteration with tolerance
/// 1e-9 for the circle test; reporting only, never used for decisions.
pub fn root_census(poly: &IntPoly) -> RootCensus {
    let sf = poly.squarefree_part();
    let deg = sf.degree();
    if deg == 0 {
        return RootCensus {
            outside: 0,
            on_circle: 0,
            inside: 0,
        };
    }
    let coeffs: Vec<f64> = sf
        .coeffs()
        .iter()
        .map(|c| {
            let r = BigRational::from(c.clone());
            crate::algebra::cyclotomic::rational_to_f64(&r)
        })
        .collect();
    let lead = coeffs[deg];
    let eval = |z: (f64, f64)| -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for &c in coeffs.iter().rev() {
            let nre = re * z.0 - im * z.1 + c;
            let nim = re * z.1 + im * z.0;
            re = nre;
            im = nim;
        }
        (re, im)
    };
    // initial guesses on a slightly irrational circle
    let mut roots: Vec<(f64, f64)> = (0..deg)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.3) / deg as f64;
            (1.2 * th.cos(), 1.2 * th.sin())
        })
        .collect();
    for _ in 0..200 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (pre, pim) = eval(roots[i]);
            let mut dre = lead;
            let mut dim = 0.0;
            for j in 0..deg {
                if i == j {
                    continue;
                }
                let zre = roots[i].0 - roots[j].0;
                let zim = roots[i].1 - roots[j].1;
                let nre = dre * zre - dim * zim;
                let nim = dre * zim + dim * zre;
                dre = nre;
                dim = nim;
            }
            let denom = dre * dre + dim * dim;
            if denom == 0.0 {
                continue;
            }
            let sre = (pre * dre + pim * dim) / denom;
            let sim = (pim * dre - pre * dim) / denom;
            roots[i].0 -= sre;
            roots[i].1 -= sim;
            max_step = max_step.max((sre * sre + sim * sim).sqrt());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    let tol = 1e-9;
    let mut census = RootCensus {
        outside: 0,
        on_circle: 0,
        inside: 0,
    };
    for z in roots {
        let m = (z.0 * z.0 + z.1 * z.1).sqrt();
        if (m - 1.0).abs() <= tol {
            census.on_circle += 1;
        } else if m > 1.0 {
            census.outside += 1;
        } else {
            census.inside += 1;
        }
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: u32, d: &[u32], u: &[u32], ms: Option<u32>) -> OrbitSignature {
        OrbitSignature::abstract_data(n, d.to_vec(), u.to_vec(), ms)
    }

    #[test]
    fn base_matrix_char_poly() {
        // (x^2 + 1)(x^3 - x - 1) = x^5 - x^2 - x - 1
        let m = pic_y_matrix();
        let cp = char_poly_det(&m);
        assert_eq!(cp, IntPoly::from_i64(&[-1, -1, -1, 0, 0, 1]));
        let dd = dynamical_degree(&cp).unwrap();
        assert!((dd.approx - 1.32472).abs() < 1e-4);
        // first column: H -> 2H - ...
        assert_eq!(*m.entry(0, 0), BigInt::from(2));
    }

    #[test]
    fn bracket_matches_closed_forms() {
        // N, no events: t^N (t^3 - t - 1) + t^3 + t^2 - 1
        let b = char_poly_bracket(&sig(11, &[], &[], None)).unwrap();
        assert_eq!(
            b,
            IntPoly::from_i64(&[-1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 1])
        );
        let b3 = char_poly_bracket(&sig(3, &[], &[], None)).unwrap();
        // t^6 - t^4 + t^2 - 1
        assert_eq!(b3, IntPoly::from_i64(&[-1, 0, 1, 0, -1, 0, 1]));
        // N = 10, m_s = 3: t^10(t^3-t-1) + t^5(t-1)(t^2+t+1) + t^3+t^2-1
        let bl = char_poly_bracket(&sig(10, &[], &[], Some(3))).unwrap();
        assert_eq!(
            bl,
            IntPoly::from_i64(&[-1, 0, 1, 1, 0, -1, 0, 0, 1, 0, -1, -1, 0, 1])
        );
    }

    #[test]
    fn determinant_identity_on_fixtures() {
        for s in [
            sig(11, &[], &[], None),
            sig(3, &[], &[], None),
            sig(4, &[], &[], None),
            sig(5, &[2], &[3], None),
            sig(6, &[2], &[4], None),
            sig(10, &[], &[], Some(3)),
            sig(19, &[], &[], None),
        ] {
            let rep = identity_check(&s).unwrap();
            assert!(
                rep.holds,
                "determinant disagrees with bracket for N = {}: {} vs {}",
                s.n_close, rep.det_poly, rep.bracket
            );
        }
    }

    #[test]
    fn matrix_orders_match_map_periods() {
        let cases = [
            (sig(3, &[], &[], None), 8u32),
            (sig(4, &[], &[], None), 12),
            (sig(5, &[2], &[3], None), 8),
            (sig(6, &[2], &[4], None), 12),
        ];
        for (s, expect) in cases {
            let m = pic_z_matrix(&s).unwrap();
            assert_eq!(m.multiplicative_order(32), Some(expect));
        }
    }

    #[test]
    fn growth_classification() {
        let lyness = pic_z_matrix(&sig(10, &[], &[], Some(3))).unwrap();
        assert!(matches!(growth_class(&lyness).unwrap(), GrowthClass::Quadratic));
        let entropy = pic_z_matrix(&sig(11, &[], &[], None)).unwrap();
        match growth_class(&entropy).unwrap() {
            GrowthClass::Exponential { degree } => {
                assert!((degree.approx - 1.28064).abs() < 1e-4);
            }
            other => panic!("expected exponential, got {:?}", other),
        }
        let periodic = pic_z_matrix(&sig(5, &[2], &[3], None)).unwrap();
        assert!(matches!(
            growth_class(&periodic).unwrap(),
            GrowthClass::Periodic { order: 8 }
        ));
    }

    #[test]
    fn predicted_degree_head() {
        let m = pic_z_matrix(&sig(11, &[], &[], None)).unwrap();
        let degs = predicted_degrees(&m, 3);
        assert_eq!(degs[0], BigInt::from(2));
    }

    #[test]
    fn salem_verdicts() {
        // t^8 - t^5 - t^4 - t^3 + 1 is a Salem factor
        let p = IntPoly::from_i64(&[1, 0, 0, -1, -1, -1, 0, 0, 1]);
        match salem_verdict(&p).unwrap() {
            SalemVerdict::Salem { lambda, .. } => {
                assert!((lambda.approx_f64() - 1.28064).abs() < 1e-4)
            }
            SalemVerdict::NotSalem { reason } => panic!("expected Salem: {}", reason),
        }
        // t^2 - 3t + 1: degree too small, conjugate off the circle
        let q = IntPoly::from_i64(&[1, -3, 1]);
        assert!(matches!(
            salem_verdict(&q).unwrap(),
            SalemVerdict::NotSalem { .. }
        ));
        // t^6 - 4t^5 + 3t^4 + t^2 - 2t + 1: not self-reciprocal after
        // stripping
        let r = IntPoly::from_i64(&[1, -2, 1, 0, 3, -4, 1]);
        assert!(matches!(
            salem_verdict(&r).unwrap(),
            SalemVerdict::NotSalem { .. }
        ));
        let census = root_census(&p);
        assert_eq!(
            census,
            RootCensus {
                outside: 1,
                on_circle: 6,
                inside: 1
            }
        );
    }

    #[test]
    fn bracket_at_one_vanishes() {
        for s in [
            sig(11, &[], &[], None),
            sig(5, &[2], &[3], None),
            sig(10, &[], &[], Some(3)),
            sig(12, &[3, 7], &[5, 9], None),
        ] {
            let b = char_poly_bracket(&s).unwrap();
            assert!(b.eval_int(&BigInt::one()).is_zero());
        }
    }
}
