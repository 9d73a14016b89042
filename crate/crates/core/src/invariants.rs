//! Invariant-polynomial machinery: solving P . f = t * j_f * P for
//! homogeneous P by exact linear algebra, scanning candidate multipliers,
//! multiplier ratios of pencil members, and singular-point classification
//! of invariant surfaces.
//!
//! The Jacobian convention is fixed to the exact signed determinant of
//! the reduced quadratic representative; stated multipliers elsewhere may
//! differ by the normalization of j_f, so only multiplier ratios are
//! convention-free.

use thiserror::Error;

use crate::algebra::gcd::exact_div;
use crate::algebra::{AlgebraError, CycNum, HomogPoly};
use crate::birmap::{build_family_map, jacobian, BirmapError, MapParameters};
use crate::curves::{kernel_basis, monomials};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum InvariantError {
    #[error("polynomial is not a solution of the invariance equation")]
    NotASolution,
    #[error("quadratic ideal is not invertible (reducible modulus?)")]
    UnsupportedIdeal,
    #[error(transparent)]
    Birmap(#[from] BirmapError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A multiplier together with a basis of homogeneous solutions P of
/// P . f = t * j_f * P.
#[derive(Debug, Clone)]
pub struct MultiplierSolution {
    pub multiplier: CycNum,
    pub basis: Vec<HomogPoly>,
}

struct PencilData {
    /// coefficient rows of m_c . f over degree-2d monomials
    a_cols: Vec<Vec<CycNum>>,
    /// coefficient rows of j * m_c
    b_cols: Vec<Vec<CycNum>>,
    basis_monomials: Vec<Vec<u16>>,
    target_len: usize,
}

fn pencil_data(params: &MapParameters, degree: usize) -> Result<PencilData, InvariantError> {
    let f = build_family_map(params)?;
    let j = jacobian(&f);
    let basis_monomials = monomials(4, degree);
    let target = monomials(4, 2 * degree);
    let index: std::collections::BTreeMap<Vec<u16>, usize> = target
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut a_cols = Vec::with_capacity(basis_monomials.len());
    let mut b_cols = Vec::with_capacity(basis_monomials.len());
    for e in &basis_monomials {
        let mono = HomogPoly::monomial(4, e, CycNum::one());
        let composed = mono.substitute(f.components())?;
        let mut a = vec![CycNum::zero(); target.len()];
        for (te, tc) in composed.terms() {
            a[index[te]] = tc.clone();
        }
        let prod = j.mul(&mono);
        let mut b = vec![CycNum::zero(); target.len()];
        for (te, tc) in prod.terms() {
            b[index[te]] = tc.clone();
        }
        a_cols.push(a);
        b_cols.push(b);
    }
    Ok(PencilData {
        a_cols,
        b_cols,
        basis_monomials,
        target_len: target.len(),
    })
}

impl PencilData {
    fn kernel_at(&self, t: &CycNum) -> Vec<Vec<CycNum>> {
        let ncols = self.a_cols.len();
        let mut rows = vec![vec![CycNum::zero(); ncols]; self.target_len];
        for (c, (a, b)) in self.a_cols.iter().zip(self.b_cols.iter()).enumerate() {
            for r in 0..self.target_len {
                let v = a[r].sub(&t.mul(&b[r]));
                if !v.is_zero() {
                    rows[r][c] = v;
                }
            }
        }
        kernel_basis(&rows, ncols)
    }

    fn vector_to_poly(&self, v: &[CycNum]) -> HomogPoly {
        HomogPoly::from_terms(
            4,
            self.basis_monomials
                .iter()
                .cloned()
                .zip(v.iter().cloned())
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
        .expect("basis monomials share the degree")
    }
}

/// Exact kernel basis of the invariance equation at the given multiplier.
/// The two sides of the equation only have matching degrees for quartics;
/// other degrees return an empty basis.
pub fn invariant_space(
    params: &MapParameters,
    degree: usize,
    t: &CycNum,
) -> Result<Vec<HomogPoly>, InvariantError> {
    if 2 * degree != degree + 4 {
        return Ok(vec![]);
    }
    let data = pencil_data(params, degree)?;
    Ok(data
        .kernel_at(t)
        .into_iter()
        .map(|v| data.vector_to_poly(&v))
        .collect())
}

/// The exact multiplier of a solution: t with P . f = t * j_f * P, or
/// `None` when P is not a solution.
pub fn multiplier_of(params: &MapParameters, p: &HomogPoly) -> Result<Option<CycNum>, InvariantError> {
    let f = build_family_map(params)?;
    let j = jacobian(&f);
    let composed = p.substitute(f.components())?;
    let base = j.mul(p);
    if base.is_zero() {
        return Ok(None);
    }
    let (be, bc) = {
        let (e, c) = base.leading_term().unwrap();
        (e.clone(), c.clone())
    };
    let t = composed.coeff(&be).div(&bc)?;
    let check = base.scale(&t);
    if composed == check {
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

/// Scans a set of candidate multipliers and returns those with a
/// nontrivial solution space, sorted by descending kernel dimension.
///
/// The default candidate list is the grid {q zeta^k} for
/// q in {1, -1, 1/2, -1/2, 2, -2} over the parameter field's roots of
/// unity, pre-filtered by the vanishing of the determinant of a seeded
/// square row-selection of the pencil (an over-approximation of the
/// true multiplier set; every survivor is verified by the exact kernel).
pub fn scan_multipliers(
    params: &MapParameters,
    degree: usize,
    extra_candidates: &[CycNum],
    seed: u64,
) -> Result<Vec<(CycNum, usize)>, InvariantError> {
    if 2 * degree != degree + 4 {
        return Ok(vec![]);
    }
    let data = pencil_data(params, degree)?;
    let order = params
        .alpha
        .iter()
        .chain(params.beta.iter())
        .map(|c| c.order())
        .fold(1u32, crate::algebra::cyclotomic::lcm_u32);
    let mut candidates: Vec<CycNum> = Vec::new();
    for q in [(1i64, 1i64), (-1, 1), (1, 2), (-1, 2), (2, 1), (-2, 1)] {
        for k in 0..order {
            let c = CycNum::from_ratio(q.0, q.1).mul(&CycNum::zeta_pow(order, k));
            if candidates.iter().all(|x| x != &c) {
                candidates.push(c);
            }
        }
    }
    for c in extra_candidates {
        if candidates.iter().all(|x| x != c) {
            candidates.push(c.clone());
        }
    }
    // det of a seeded square row-selection as a pre-filter
    let det_poly = selection_determinant(&data, seed);
    let mut out = Vec::new();
    for cand in candidates {
        if let Some(dp) = &det_poly {
            let val = eval_cyc_poly(dp, &cand);
            if !val.is_zero() {
                continue;
            }
        }
        let dim = data.kernel_at(&cand).len();
        if dim > 0 {
            out.push((cand, dim));
        }
    }
    out.sort_by(|a, b| b.1.cmp(&a.1));
    Ok(out)
}

/// Determinant of a seeded 35-row selection of A - t B as a polynomial in
/// t (coefficients in the parameter field), by interpolation. `None` when
/// the selected square pencil is identically singular.
fn selection_determinant(data: &PencilData, seed: u64) -> Option<Vec<CycNum>> {
    let ncols = data.a_cols.len();
    let mut state = seed
        .wrapping_mul(0x9E3779B97F4A7C15)
        .wrapping_add(0xD1B54A32D192ED03);
    let mut next = move |m: u64| -> u64 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) % m
    };
    for _attempt in 0..3 {
        let mut rows: Vec<usize> = Vec::new();
        while rows.len() < ncols {
            let r = next(data.target_len as u64) as usize;
            if !rows.contains(&r) {
                rows.push(r);
            }
        }
        // interpolate det(A_sel - t B_sel) at t = 0..ncols
        let mut points = Vec::with_capacity(ncols + 1);
        let mut values = Vec::with_capacity(ncols + 1);
        let mut nonzero = false;
        for k in 0..=ncols {
            let t = CycNum::from_int(k as i64);
            let m: Vec<Vec<CycNum>> = rows
                .iter()
                .map(|&r| {
                    (0..ncols)
                        .map(|c| data.a_cols[c][r].sub(&t.mul(&data.b_cols[c][r])))
                        .collect()
                })
                .collect();
            let d = cyc_det(m);
            nonzero |= !d.is_zero();
            points.push(t);
            values.push(d);
        }
        if nonzero {
            return Some(lagrange_interpolate(&points, &values));
        }
    }
    None
}

fn cyc_det(mut m: Vec<Vec<CycNum>>) -> CycNum {
    let n = m.len();
    let mut det = CycNum::one();
    for c in 0..n {
        let pivot = (c..n).find(|&r| !m[r][c].is_zero());
        let Some(p) = pivot else {
            return CycNum::zero();
        };
        if p != c {
            m.swap(c, p);
            det = det.neg();
        }
        det = det.mul(&m[c][c]);
        let inv = m[c][c].inv().expect("pivot nonzero");
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = m[r][c].mul(&inv);
            for k in c..n {
                let adj = factor.mul(&m[c][k]);
                m[r][k] = m[r][k].sub(&adj);
            }
        }
    }
    det
}

fn lagrange_interpolate(points: &[CycNum], values: &[CycNum]) -> Vec<CycNum> {
    let n = points.len();
    let mut coeffs = vec![CycNum::zero(); n];
    for i in 0..n {
        // L_i(t) = prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut num = vec![CycNum::one()];
        let mut denom = CycNum::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            // num *= (t - x_j)
            let mut next = vec![CycNum::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(&points[j]));
            }
            num = next;
            denom = denom.mul(&points[i].sub(&points[j]));
        }
        let scale = values[i].div(&denom).expect("distinct nodes");
        for (k, c) in num.iter().enumerate() {
            coeffs[k] = coeffs[k].add(&c.mul(&scale));
        }
    }
    while coeffs.last().map_or(false, |c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

fn eval_cyc_poly(coeffs: &[CycNum], x: &CycNum) -> CycNum {
    let mut acc = CycNum::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// The multiplier ratio kappa = t_P / t_Q of two solutions; independent
/// of the normalizations of j_f and of the map representative.
pub fn pencil_action(
    params: &MapParameters,
    p: &HomogPoly,
    q: &HomogPoly,
) -> Result<CycNum, InvariantError> {
    let tp = multiplier_of(params, p)?.ok_or(InvariantError::NotASolution)?;
    let tq = multiplier_of(params, q)?.ok_or(InvariantError::NotASolution)?;
    Ok(tp.div(&tq)?)
}

/// Exact divisibility of P . f by j_f (integrality of the multiplier).
pub fn composed_divisible_by_jacobian(
    params: &MapParameters,
    p: &HomogPoly,
) -> Result<bool, InvariantError> {
    let f = build_family_map(params)?;
    let j = jacobian(&f);
    let composed = p.substitute(f.components())?;
    Ok(exact_div(&composed, &j).is_some())
}

/// Where to probe a surface for a singular point: an exact point, or the
/// symmetric quadratic locus x1 = x2 = x3 = s, x0 = 1 with
/// s^2 = trace * s + norm (both roots handled at once by computing
/// modulo the quadratic).
#[derive(Debug, Clone)]
pub enum SingularProbe {
    Point([CycNum; 4]),
    SymmetricQuadratic { trace: CycNum, norm: CycNum },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularClass {
    SmoothOffSurface,
    SmoothOnSurface,
    OrdinaryDoublePoint,
    CorankOne,
    Degenerate,
}

/// Gradient membership and Hessian-rank classification at the probe:
/// rank 3 of the affine Hessian at a singular point gives an ordinary
/// double point, rank 2 corank one, lower ranks degenerate.
pub fn singular_check(
    p: &HomogPoly,
    probe: &SingularProbe,
) -> Result<SingularClass, InvariantError> {
    match probe {
        SingularProbe::Point(pt) => {
            let onto = p.eval(pt).is_zero();
            if !onto {
                return Ok(SingularClass::SmoothOffSurface);
            }
            let grad_zero = (0..4).all(|i| p.partial_derivative(i).eval(pt).is_zero());
            if !grad_zero {
                return Ok(SingularClass::SmoothOnSurface);
            }
            let chart = (0..4)
                .find(|&i| !pt[i].is_zero())
                .expect("projective point");
            let scale = pt[chart].inv()?;
            let affine: Vec<CycNum> = (0..4).map(|i| pt[i].mul(&scale)).collect();
            let others: Vec<usize> = (0..4).filter(|&i| i != chart).collect();
            let mut hess = vec![vec![CycNum::zero(); 3]; 3];
            for (r, &i) in others.iter().enumerate() {
                for (c, &j) in others.iter().enumerate() {
                    hess[r][c] = p
                        .partial_derivative(i)
                        .partial_derivative(j)
                        .eval(&affine);
                }
            }
            Ok(rank_class(cyc_matrix_rank(&hess)))
        }
        SingularProbe::SymmetricQuadratic { trace, norm } => {
            let modulus = (trace.clone(), norm.clone());
            let eval_quad = |poly: &HomogPoly| -> QuadElem {
                let mut acc = QuadElem::zero();
                for (e, c) in poly.terms() {
                    // x0 = 1, x1 = x2 = x3 = s
                    let spow = (e[1] + e[2] + e[3]) as usize;
                    acc = acc.add(&QuadElem::s_power(spow, &modulus).scale(c));
                }
                acc
            };
            if !eval_quad(p).is_zero() {
                return Ok(SingularClass::SmoothOffSurface);
            }
            let grad_zero = (0..4).all(|i| eval_quad(&p.partial_derivative(i)).is_zero());
            if !grad_zero {
                return Ok(SingularClass::SmoothOnSurface);
            }
            let mut hess = vec![vec![QuadElem::zero(); 3]; 3];
            for (r, i) in (1..4).enumerate() {
                for (c, j) in (1..4).enumerate() {
                    hess[r][c] = eval_quad(&p.partial_derivative(i).partial_derivative(j));
                }
            }
            let rank = quad_matrix_rank(&mut hess, &modulus)?;
            Ok(rank_class(rank))
        }
    }
}

fn rank_class(rank: usize) -> SingularClass {
    match rank {
        3 => SingularClass::OrdinaryDoublePoint,
        2 => SingularClass::CorankOne,
        _ => SingularClass::Degenerate,
    }
}

fn cyc_matrix_rank(m: &[Vec<CycNum>]) -> usize {
    let mut m: Vec<Vec<CycNum>> = m.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for c in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].inv().expect("pivot nonzero");
        for r in 0..nrows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].mul(&inv);
                for k in c..ncols {
                    let adj = f.mul(&m[rank][k]);
                    m[r][k] = m[r][k].sub(&adj);
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

/// An element a + b s of the quadratic extension with s^2 = u s + v.
#[derive(Debug, Clone)]
struct QuadElem {
    a: CycNum,
    b: CycNum,
}

impl QuadElem {
    fn zero() -> Self {
        QuadElem {
            a: CycNum::zero(),
            b: CycNum::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        QuadElem {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        QuadElem {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
        }
    }

    fn scale(&self, c: &CycNum) -> Self {
        QuadElem {
            a: self.a.mul(c),
            b: self.b.mul(c),
        }
    }

    fn mul(&self, other: &Self, modulus: &(CycNum, CycNum)) -> Self {
        let (u, v) = modulus;
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 v + (a1 b2 + b1 a2 + b1 b2 u) s
        let bb = self.b.mul(&other.b);
        QuadElem {
            a: self.a.mul(&other.a).add(&bb.mul(v)),
            b: self
                .a
                .mul(&other.b)
                .add(&self.b.mul(&other.a))
                .add(&bb.mul(u)),
        }
    }

    fn inv(&self, modulus: &(CycNum, CycNum)) -> Option<Self> {
        let (u, v) = modulus;
        // conjugate of a + b s is (a + b u) - b s; norm = a^2 + a b u - b^2 v
        let norm = self
            .a
            .mul(&self.a)
            .add(&self.a.mul(&self.b).mul(u))
            .sub(&self.b.mul(&self.b).mul(v));
        let ninv = norm.inv().ok()?;
        Some(QuadElem {
            a: self.a.add(&self.b.mul(u)).mul(&ninv),
            b: self.b.neg().mul(&ninv),
        })
    }

    fn s_power(k: usize, modulus: &(CycNum, CycNum)) -> Self {
        let mut acc = QuadElem {
            a: CycNum::one(),
            b: CycNum::zero(),
        };
        let s = QuadElem {
            a: CycNum::zero(),
            b: CycNum::one(),
        };
        for _ in 0..k {
            acc = acc.mul(&s, modulus);
        }
        acc
    }
}

fn quad_matrix_rank(
    m: &mut [Vec<QuadElem>],
    modulus: &(CycNum, CycNum),
) -> Result<usize, InvariantError> {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for c in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][c]
            .inv(modulus)
            .ok_or(InvariantError::UnsupportedIdeal)?;
        for r in 0..nrows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].mul(&inv, modulus);
                for k in c..ncols {
                    let adj = f.mul(&m[rank][k], modulus);
                    m[r][k] = m[r][k].sub(&adj);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Ok(rank)
}
