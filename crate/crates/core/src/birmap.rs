//! The family of birational maps of P^3 induced by 3-step linear
//! fractional recurrences: construction from coefficient vectors
//! (alpha, beta), inverses, composition with common-factor reduction,
//! degree sequences, periodicity, Jacobians, parameter classification and
//! normalization, and the induced plane return map of the invariant
//! 8-cycle of planes.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::gcd::{divide_out, gcd_reduce};
use crate::algebra::homog::tuples_proportional;
use crate::algebra::{AlgebraError, CycNum, HomogPoly};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BirmapError {
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("parameters are not critical")]
    NotCritical,
    #[error("plane restriction requires the invariant-plane cycle (normalized critical with beta0 = 0)")]
    NonInvariantPlane,
    #[error("degree bound {0} exceeded")]
    DegreeBound(usize),
    #[error("internal consistency check failed: {0}")]
    Validation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Coefficient data (alpha, beta) of a family member together with the
/// derived vectors used throughout: gamma = beta1*alpha - alpha1*beta,
/// B = (-alpha1, 0, 0, beta1), C = beta1*acheck - alpha1*bcheck where
/// acheck = (alpha0, alpha2, alpha3, 0) and bcheck = (beta0, beta2, beta3, 0).
#[derive(Debug, Clone, PartialEq)]
pub struct MapParameters {
    pub alpha: [CycNum; 4],
    pub beta: [CycNum; 4],
}

impl MapParameters {
    pub fn new(alpha: [CycNum; 4], beta: [CycNum; 4]) -> Result<Self, BirmapError> {
        let p = MapParameters { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    /// Nondegeneracy: alpha not proportional to beta, beta not supported
    /// on the constant slot only, and (alpha1, beta1) != (0, 0).
    fn validate(&self) -> Result<(), BirmapError> {
        if self.beta[1].is_zero() && self.beta[2].is_zero() && self.beta[3].is_zero() {
            return Err(BirmapError::Degenerate(
                "beta = (beta0, 0, 0, 0) gives a linear map".into(),
            ));
        }
        if self.alpha[1].is_zero() && self.beta[1].is_zero() {
            return Err(BirmapError::Degenerate(
                "(alpha1, beta1) = (0, 0) degenerates to a 2-step recurrence".into(),
            ));
        }
        // proportionality alpha = lambda * beta
        let mut proportional = true;
        for i in 0..4 {
            for j in (i + 1)..4 {
                let cross = self.alpha[i]
                    .mul(&self.beta[j])
                    .sub(&self.alpha[j].mul(&self.beta[i]));
                if !cross.is_zero() {
                    proportional = false;
                }
            }
        }
        if proportional {
            return Err(BirmapError::Degenerate(
                "alpha proportional to beta gives a linear map".into(),
            ));
        }
        Ok(())
    }

    pub fn gamma(&self) -> [CycNum; 4] {
        std::array::from_fn(|i| {
            self.beta[1]
                .mul(&self.alpha[i])
                .sub(&self.alpha[1].mul(&self.beta[i]))
        })
    }

    pub fn b_vector(&self) -> [CycNum; 4] {
        [
            self.alpha[1].neg(),
            CycNum::zero(),
            CycNum::zero(),
            self.beta[1].clone(),
        ]
    }

    pub fn c_vector(&self) -> [CycNum; 4] {
        let acheck = [
            self.alpha[0].clone(),
            self.alpha[2].clone(),
            self.alpha[3].clone(),
            CycNum::zero(),
        ];
        let bcheck = [
            self.beta[0].clone(),
            self.beta[2].clone(),
            self.beta[3].clone(),
            CycNum::zero(),
        ];
        std::array::from_fn(|i| {
            self.beta[1]
                .mul(&acheck[i])
                .sub(&self.alpha[1].mul(&bcheck[i]))
        })
    }

    /// The criticality condition: beta2 = beta3 = 0 and beta1, alpha2,
    /// alpha3 all nonzero.
    pub fn is_critical(&self) -> bool {
        self.beta[2].is_zero()
            && self.beta[3].is_zero()
            && !self.beta[1].is_zero()
            && !self.alpha[2].is_zero()
            && !self.alpha[3].is_zero()
    }

    /// Whether the parameters are already in the normalized critical form
    /// beta = (beta0, 1, 0, 0), alpha = (alpha0, 0, alpha2, 1).
    pub fn is_normalized_critical(&self) -> bool {
        self.is_critical()
            && self.beta[1].is_one()
            && self.alpha[1].is_zero()
            && self.alpha[3].is_one()
    }

    /// Overall scaling of both coefficient vectors (map unchanged).
    pub fn act_scale_all(&self, lambda: &CycNum) -> Self {
        MapParameters {
            alpha: std::array::from_fn(|i| self.alpha[i].mul(lambda)),
            beta: std::array::from_fn(|i| self.beta[i].mul(lambda)),
        }
    }

    /// Conjugation by the affine coordinate scaling x -> c*x.
    pub fn act_scale_vars(&self, c: &CycNum) -> Self {
        let c2 = c.mul(c);
        MapParameters {
            alpha: [
                self.alpha[0].clone(),
                self.alpha[1].mul(c),
                self.alpha[2].mul(c),
                self.alpha[3].mul(c),
            ],
            beta: [
                self.beta[0].mul(c),
                self.beta[1].mul(&c2),
                self.beta[2].mul(&c2),
                self.beta[3].mul(&c2),
            ],
        }
    }

    /// Conjugation by the translation x -> x + (mu, mu, mu): substituting
    /// z = w + mu into the recurrence gives
    ///   beta0' = beta0 + mu (beta1 + beta2 + beta3)
    ///   alpha_i' = alpha_i - mu beta_i          (i = 1, 2, 3)
    ///   alpha0' = alpha0 + mu (alpha1 + alpha2 + alpha3) - mu beta0'.
    pub fn act_translate(&self, mu: &CycNum) -> Self {
        let [a0, a1, a2, a3] = &self.alpha;
        let [b0, b1, b2, b3] = &self.beta;
        let bsum = b1.add(b2).add(b3);
        let asum = a1.add(a2).add(a3);
        let b0n = b0.add(&mu.mul(&bsum));
        let a0n = a0.add(&mu.mul(&asum)).sub(&mu.mul(&b0n));
        MapParameters {
            alpha: [
                a0n,
                a1.sub(&mu.mul(b1)),
                a2.sub(&mu.mul(b2)),
                a3.sub(&mu.mul(b3)),
            ],
            beta: [b0n, b1.clone(), b2.clone(), b3.clone()],
        }
    }
}

/// The coefficients (lambda, c, mu) of the conjugacy used to normalize a
/// critical map: translate by mu, scale variables by c, then rescale the
/// coefficient vectors by lambda.
#[derive(Debug, Clone)]
pub struct NormalizingAction {
    pub mu: CycNum,
    pub c: CycNum,
    pub lambda: CycNum,
}

/// Case labels for the non-critical parameter regimes, named by the
/// parameter conditions that identify them (after the conjugations that
/// set beta3 = 1, beta2 = 1 or alpha1 = 0 where applicable).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NonCriticalCase {
    /// beta1 = 0, beta3 != 0, beta2 != 0: the contracted plane has a
    /// periodic point orbit.
    B1ZeroB2B3Nonzero,
    /// beta1 = 0, beta3 != 0, beta2 = 0, alpha2 = 0: pre-periodic point
    /// orbit.
    B1ZeroB2ZeroA2Zero,
    /// beta1 = 0, beta3 != 0, beta2 = 0, alpha2 != 0: orbit enters a
    /// 2-cycle of a line and an exceptional fiber.
    B1ZeroB2ZeroA2Nonzero,
    /// beta1 = 0, beta3 = 0, beta2 != 0: the inverse has a fixed point at
    /// a triple chart corner.
    B1ZeroB3Zero,
    /// beta1 != 0 and (beta2, beta3) != (0, 0): the plane x0 = 0 is
    /// exceptional and pre-periodic for the inverse.
    BetaTailNonzero,
    /// beta1 != 0, beta2 = beta3 = 0, alpha3 = 0, alpha2 != 0.
    AlphaThreeZero,
    /// beta1 != 0, beta2 = beta3 = 0, alpha2 = 0, alpha3 != 0.
    AlphaTwoZero,
    /// beta1 != 0, beta2 = beta3 = alpha2 = alpha3 = 0: essentially a
    /// linear recurrence.
    QuasiLinear,
}

/// Result of classifying parameters: critical maps come with their
/// canonical normalized form, non-critical ones with the case label and a
/// prepared (partially normalized) parameter set for certificates.
#[derive(Debug, Clone)]
pub enum ParamClass {
    Critical {
        normalized: MapParameters,
        action: NormalizingAction,
    },
    NonCritical {
        case: NonCriticalCase,
        prepared: MapParameters,
    },
}

/// Classifies parameters as critical (with normalization) or names the
/// applicable non-critical regime.
pub fn classify_parameters(params: &MapParameters) -> Result<ParamClass, BirmapError> {
    params.validate()?;
    if params.is_critical() {
        let b1 = &params.beta[1];
        let mu = params.alpha[1].div(b1)?;
        let translated = params.act_translate(&mu);
        debug_assert!(translated.alpha[1].is_zero());
        let a3 = translated.alpha[3].clone();
        let c = a3.div(b1)?;
        let lambda = b1.div(&a3.mul(&a3))?;
        let normalized = translated.act_scale_vars(&c).act_scale_all(&lambda);
        debug_assert!(normalized.is_normalized_critical());
        return Ok(ParamClass::Critical {
            normalized,
            action: NormalizingAction { mu, c, lambda },
        });
    }
    if params.beta[1].is_zero() {
        // alpha1 != 0 by nondegeneracy; normalize the last nonzero beta
        // entry to 1 by an overall scaling
        if !params.beta[3].is_zero() {
            let prepared = params.act_scale_all(&params.beta[3].inv()?);
            let case = if !prepared.beta[2].is_zero() {
                NonCriticalCase::B1ZeroB2B3Nonzero
            } else if prepared.alpha[2].is_zero() {
                NonCriticalCase::B1ZeroB2ZeroA2Zero
            } else {
                NonCriticalCase::B1ZeroB2ZeroA2Nonzero
            };
            return Ok(ParamClass::NonCritical { case, prepared });
        }
        let prepared = params.act_scale_all(&params.beta[2].inv()?);
        return Ok(ParamClass::NonCritical {
            case: NonCriticalCase::B1ZeroB3Zero,
            prepared,
        });
    }
    // beta1 != 0: set beta1 = 1 and alpha1 = 0
    let mu = params.alpha[1].div(&params.beta[1])?;
    let translated = params.act_translate(&mu);
    let prepared = translated.act_scale_all(&translated.beta[1].inv()?);
    if !prepared.beta[2].is_zero() || !prepared.beta[3].is_zero() {
        return Ok(ParamClass::NonCritical {
            case: NonCriticalCase::BetaTailNonzero,
            prepared,
        });
    }
    // beta2 = beta3 = 0 with alpha2 * alpha3 = 0
    let case = match (prepared.alpha[2].is_zero(), prepared.alpha[3].is_zero()) {
        (false, true) => NonCriticalCase::AlphaThreeZero,
        (true, false) => NonCriticalCase::AlphaTwoZero,
        (true, true) => NonCriticalCase::QuasiLinear,
        (false, false) => unreachable!("critical handled above"),
    };
    Ok(ParamClass::NonCritical { case, prepared })
}

/// A rational self-map given by a gcd-reduced tuple of homogeneous
/// polynomials of equal degree.
#[derive(Debug, Clone, PartialEq)]
pub struct BirationalMap {
    components: Vec<HomogPoly>,
}

impl BirationalMap {
    pub fn new(components: Vec<HomogPoly>) -> Result<Self, BirmapError> {
        if components.iter().all(|c| c.is_zero()) {
            return Err(BirmapError::Algebra(AlgebraError::ZeroTuple));
        }
        Ok(BirationalMap { components })
    }

    pub fn components(&self) -> &[HomogPoly] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn degree(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn identity(nvars: usize) -> Self {
        BirationalMap {
            components: (0..nvars).map(|i| HomogPoly::var(nvars, i)).collect(),
        }
    }

    pub fn is_projective_identity(&self) -> bool {
        if self.degree() != 1 {
            return false;
        }
        let id = Self::identity(self.nvars());
        tuples_proportional(&self.components, &id.components)
    }

    /// Evaluates the map at an exact point, returning `None` on the
    /// indeterminacy locus.
    pub fn eval_point(&self, point: &[CycNum]) -> Option<Vec<CycNum>> {
        let image: Vec<CycNum> = self.components.iter().map(|c| c.eval(point)).collect();
        if image.iter().all(|v| v.is_zero()) {
            None
        } else {
            Some(image)
        }
    }
}

/// The quadratic family member with the given coefficients:
/// [x0 (beta.x) : x2 (beta.x) : x3 (beta.x) : x0 (alpha.x)].
pub fn build_family_map(params: &MapParameters) -> Result<BirationalMap, BirmapError> {
    params.validate()?;
    let x = |i: usize| HomogPoly::var(4, i);
    let beta_form = HomogPoly::linear_form(&params.beta);
    let alpha_form = HomogPoly::linear_form(&params.alpha);
    let raw = vec![
        x(0).mul(&beta_form),
        x(2).mul(&beta_form),
        x(3).mul(&beta_form),
        x(0).mul(&alpha_form),
    ];
    let (components, _) = gcd_reduce(&raw, &[x(0), beta_form])?;
    BirationalMap::new(components)
}

/// The inverse family member:
/// [x0 (B.x) : x0 (acheck.x) - x3 (bcheck.x) : x1 (B.x) : x2 (B.x)].
pub fn build_family_inverse(params: &MapParameters) -> Result<BirationalMap, BirmapError> {
    params.validate()?;
    let x = |i: usize| HomogPoly::var(4, i);
    let b_form = HomogPoly::linear_form(&params.b_vector());
    let acheck = HomogPoly::linear_form(&[
        params.alpha[0].clone(),
        params.alpha[2].clone(),
        params.alpha[3].clone(),
        CycNum::zero(),
    ]);
    let bcheck = HomogPoly::linear_form(&[
        params.beta[0].clone(),
        params.beta[2].clone(),
        params.beta[3].clone(),
        CycNum::zero(),
    ]);
    let raw = vec![
        x(0).mul(&b_form),
        x(0).mul(&acheck).sub(&x(3).mul(&bcheck))?,
        x(1).mul(&b_form),
        x(2).mul(&b_form),
    ];
    let (components, _) = gcd_reduce(&raw, &[x(0), b_form])?;
    BirationalMap::new(components)
}

/// Parameters of a critical map conjugate to the inverse: for a critical
/// map with beta = (beta0, 1, 0, 0), alpha = (alpha0, 0, alpha2, 1), the
/// inverse is linearly conjugate (by swapping x1 and x3) to the critical
/// map with beta' = (0, 1, 0, 0), alpha' = (alpha0, -beta0, 1, alpha2).
pub fn conjugate_inverse_params(params: &MapParameters) -> Result<MapParameters, BirmapError> {
    if !params.is_normalized_critical() {
        return Err(BirmapError::NotCritical);
    }
    MapParameters::new(
        [
            params.alpha[0].clone(),
            params.beta[0].neg(),
            CycNum::one(),
            params.alpha[2].clone(),
        ],
        [
            CycNum::zero(),
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ],
    )
}

/// The exceptional linear forms of a family member: x0, beta.x, gamma.x.
/// Compositions g . f can only acquire common factors supported on these
/// (the hypersurfaces f contracts), so they are the trial divisors for
/// iterate reduction.
pub fn exceptional_forms(params: &MapParameters) -> Vec<HomogPoly> {
    vec![
        HomogPoly::var(4, 0),
        HomogPoly::linear_form(&params.beta),
        HomogPoly::linear_form(&params.gamma()),
    ]
}

/// Substitutes `inner` into `outer` and removes the full common factor.
/// `candidates` should contain the exceptional forms of `inner`; a
/// certified general gcd pass guarantees the output is primitive even if
/// the candidate list is incomplete.
pub fn compose_reduce(
    outer: &BirationalMap,
    inner: &BirationalMap,
    candidates: &[HomogPoly],
) -> Result<BirationalMap, BirmapError> {
    let substituted: Result<Vec<HomogPoly>, AlgebraError> = outer
        .components
        .iter()
        .map(|c| c.substitute(&inner.components))
        .collect();
    let (components, _) = gcd_reduce(&substituted?, candidates)?;
    BirationalMap::new(components)
}

/// Exact degree sequence deg(f^n) for n = 1..n_max; stops early (with the
/// truncation flag) if a degree exceeds `degree_bound`.
pub fn iterate_degrees(
    params: &MapParameters,
    n_max: u32,
    degree_bound: usize,
) -> Result<(Vec<usize>, bool), BirmapError> {
    let f = build_family_map(params)?;
    let candidates = exceptional_forms(params);
    let mut degrees = Vec::new();
    let mut current = f.clone();
    degrees.push(current.degree());
    for _ in 1..n_max {
        if current.degree() * f.degree() > degree_bound {
            return Ok((degrees, true));
        }
        current = compose_reduce(&current, &f, &candidates)?;
        degrees.push(current.degree());
    }
    Ok((degrees, false))
}

/// Least p <= p_max with f^p projectively the identity, if any.
pub fn period_of(params: &MapParameters, p_max: u32) -> Result<Option<u32>, BirmapError> {
    let f = build_family_map(params)?;
    let candidates = exceptional_forms(params);
    let mut current = f.clone();
    for p in 1..=p_max {
        if current.is_projective_identity() {
            return Ok(Some(p));
        }
        if p < p_max {
            current = compose_reduce(&current, &f, &candidates)?;
        }
    }
    Ok(None)
}

/// Exact Jacobian determinant of the 4-component map.
pub fn jacobian(map: &BirationalMap) -> HomogPoly {
    let n = map.components.len();
    let rows: Vec<Vec<HomogPoly>> = map
        .components
        .iter()
        .map(|c| (0..n).map(|j| c.partial_derivative(j)).collect())
        .collect();
    poly_det(&rows)
}

fn poly_det(m: &[Vec<HomogPoly>]) -> HomogPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let nvars = m[0][0].nvars();
    let mut acc = HomogPoly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<HomogPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&poly_det(&minor));
        acc = if j % 2 == 0 {
            match acc.add(&term) {
                Ok(v) => v,
                Err(_) => term,
            }
        } else {
            match acc.sub(&term) {
                Ok(v) => v,
                Err(_) => term.neg(),
            }
        };
    }
    acc
}

/// The Jacobian of a family member factored as
/// c * x0 * (gamma.x) * (beta.x)^2; verifies exact divisibility by each
/// factor and returns the scalar cofactor.
pub struct JacobianFactorization {
    pub determinant: HomogPoly,
    pub scalar: CycNum,
    pub verified: bool,
}

pub fn jacobian_factored(params: &MapParameters) -> Result<JacobianFactorization, BirmapError> {
    let f = build_family_map(params)?;
    let det = jacobian(&f);
    let x0 = HomogPoly::var(4, 0);
    let beta_form = HomogPoly::linear_form(&params.beta);
    let gamma_form = HomogPoly::linear_form(&params.gamma());
    let mut rest = det.clone();
    let mut verified = true;
    for (factor, mult) in [(&x0, 1usize), (&gamma_form, 1), (&beta_form, 2)] {
        let (q, removed) = divide_out(&rest, factor);
        if removed < mult {
            verified = false;
            break;
        }
        // put back any extra powers beyond the required multiplicity
        rest = q;
        for _ in mult..removed {
            rest = rest.mul(factor);
        }
    }
    let scalar = if verified && rest.is_constant() && !rest.is_zero() {
        rest.coeff(&[0, 0, 0, 0])
    } else {
        verified = false;
        CycNum::zero()
    };
    Ok(JacobianFactorization {
        determinant: det,
        scalar,
        verified,
    })
}

/// The planes of P^3 by coordinate index; `Sigma3` is the target of the
/// plane return map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plane {
    Sigma3,
}

/// The return map of the 8-cycle of planes and exceptional surfaces,
/// restricted to the plane x3 = 0, computed by composing the eight
/// chart-level restriction maps of the cycle and cross-checked against
/// pointwise iteration of the 3-space map at exact sample points.
pub fn rotor_return_map(
    params: &MapParameters,
    plane: Plane,
) -> Result<BirationalMap, BirmapError> {
    let Plane::Sigma3 = plane;
    if !params.is_normalized_critical() || !params.beta[0].is_zero() {
        return Err(BirmapError::NonInvariantPlane);
    }
    let a0 = params.alpha[0].clone();
    let a2 = params.alpha[2].clone();
    let y = |i: usize| HomogPoly::var(3, i);
    let lf = |c: &[CycNum; 3]| HomogPoly::linear_form(c);
    let zero = CycNum::zero;
    let one = CycNum::one;

    // chart-level steps around the cycle, in affine charts homogenized to
    // 3 coordinates; beta0 = 0 throughout
    let step_a = vec![
        y(0).mul(&y(1)),
        y(1).mul(&y(2)),
        y(0).mul(&lf(&[a0.clone(), zero(), a2.clone()])),
    ];
    let step_b = vec![
        y(0).mul(&y(1)),
        y(1).mul(&y(2)),
        y(0).mul(&lf(&[a0.clone(), zero(), one()])),
    ];
    let step_d = vec![y(0), y(2), y(1)];
    let step_e = vec![
        y(1).mul(&y(2)),
        y(0).mul(&y(1)),
        y(0).mul(&lf(&[one(), zero(), a2.clone()])),
    ];
    let step_f = vec![
        y(0).mul(&y(1)),
        y(0).mul(&y(2)),
        y(1).mul(&lf(&[zero(), a2.clone(), one()])),
    ];
    let step_g = vec![y(0), y(2), y(1).scale(&a2)];

    let steps: Vec<Vec<HomogPoly>> = vec![
        step_a, step_b, /* C = identity */ step_d, step_e, step_f, step_g,
        /* H = identity */
    ];
    let mut composite = BirationalMap::new(steps[0].clone())?;
    for step in &steps[1..] {
        let outer = BirationalMap::new(step.clone())?;
        composite = compose_reduce(&outer, &composite, &[])?;
    }

    // cross-check against the symbolic 8th iterate: the reduced composite
    // of the 3-space map, restricted to x3 = 0, is the strict-transform
    // return map of the plane
    let f = build_family_map(params)?;
    let candidates = exceptional_forms(params);
    let mut f8 = f.clone();
    for _ in 1..8 {
        f8 = compose_reduce(&f8, &f, &candidates)?;
    }
    let last_restricted = f8.components()[3].restrict_to_hyperplane(3);
    if !last_restricted.is_zero() {
        return Err(BirmapError::Validation(
            "8th iterate does not preserve the plane x3 = 0".into(),
        ));
    }
    let restricted: Vec<HomogPoly> = f8.components()[..3]
        .iter()
        .map(|c| c.restrict_to_hyperplane(3))
        .collect();
    let (restricted, _) = gcd_reduce(&restricted, &[])?;
    if !tuples_proportional(&restricted, &composite.components) {
        return Err(BirmapError::Validation(
            "plane return map disagrees with the restricted 8th iterate".into(),
        ));
    }
    Ok(composite)
}

/// Projective equality of exact points.
pub fn points_proportional(p: &[CycNum], q: &[CycNum]) -> bool {
    if p.len() != q.len() {
        return false;
    }
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if !p[i].mul(&q[j]).sub(&p[j].mul(&q[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> CycNum {
        CycNum::zeta(3)
    }

    fn params_section7(a: i64) -> MapParameters {
        MapParameters::new(
            [
                CycNum::from_int(a),
                CycNum::zero(),
                w(),
                CycNum::one(),
            ],
            [
                CycNum::zero(),
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
            ],
        )
        .unwrap()
    }

    fn params_lyness_like(a0: i64, a2: i64) -> MapParameters {
        MapParameters::new(
            [
                CycNum::from_int(a0),
                CycNum::zero(),
                CycNum::from_int(a2),
                CycNum::one(),
            ],
            [
                CycNum::zero(),
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn family_map_components() {
        // alpha = (a, 0, w, 1), beta = (0,1,0,0):
        // [x0 x1 : x1 x2 : x1 x3 : x0 (a x0 + w x2 + x3)]
        let f = build_family_map(&params_section7(2)).unwrap();
        let x = |i: usize| HomogPoly::var(4, i);
        let expect = vec![
            x(0).mul(&x(1)),
            x(1).mul(&x(2)),
            x(1).mul(&x(3)),
            x(0).mul(&HomogPoly::linear_form(&[
                CycNum::from_int(2),
                CycNum::zero(),
                w(),
                CycNum::one(),
            ])),
        ];
        assert_eq!(f.components(), &expect[..]);
    }

    #[test]
    fn degenerate_beta_rejected() {
        let r = MapParameters::new(
            [
                CycNum::one(),
                CycNum::zero(),
                CycNum::one(),
                CycNum::one(),
            ],
            [
                CycNum::from_int(5),
                CycNum::zero(),
                CycNum::zero(),
                CycNum::zero(),
            ],
        );
        assert!(matches!(r, Err(BirmapError::Degenerate(_))));
    }

    #[test]
    fn inverse_composes_to_identity() {
        for params in [params_section7(2), params_lyness_like(1, 1)] {
            let f = build_family_map(&params).unwrap();
            let finv = build_family_inverse(&params).unwrap();
            let comp = compose_reduce(&f, &finv, &[HomogPoly::var(4, 0)]).unwrap();
            assert!(comp.is_projective_identity(), "f . f^-1 != id");
            let comp2 = compose_reduce(&finv, &f, &exceptional_forms(&params)).unwrap();
            assert!(comp2.is_projective_identity(), "f^-1 . f != id");
        }
    }

    #[test]
    fn inverse_degree_two() {
        let finv = build_family_inverse(&params_section7(2)).unwrap();
        assert_eq!(finv.degree(), 2);
    }

    #[test]
    fn period_eight_map() {
        let params = params_lyness_like(1, 1);
        assert_eq!(period_of(&params, 16).unwrap(), Some(8));
    }

    #[test]
    fn identity_iteration_degrees() {
        let params = params_lyness_like(1, 1);
        let (degs, truncated) = iterate_degrees(&params, 9, 200).unwrap();
        assert!(!truncated);
        assert_eq!(degs.len(), 9);
        assert_eq!(degs[7], 1, "period-8 map returns to degree 1");
        assert!(degs.iter().all(|&d| d <= 4));
    }

    #[test]
    fn jacobian_factorization() {
        // determinant = -2 x0 x1^2 (2 x0 + w x2 + x3) for the a = 2 case
        let params = params_section7(2);
        let fac = jacobian_factored(&params).unwrap();
        assert!(fac.verified);
        assert_eq!(fac.scalar, CycNum::from_int(-2));
    }

    #[test]
    fn linear_map_constant_jacobian() {
        let id = BirationalMap::identity(4);
        assert!(jacobian(&id).is_constant());
    }

    #[test]
    fn classification_normalizes_critical() {
        // beta = (1, 1, 0, 0), alpha = (-1/2, 0, -1, 1) is already in the
        // normalized form
        let params = MapParameters::new(
            [
                CycNum::from_ratio(-1, 2),
                CycNum::zero(),
                CycNum::from_int(-1),
                CycNum::one(),
            ],
            [
                CycNum::one(),
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
            ],
        )
        .unwrap();
        match classify_parameters(&params).unwrap() {
            ParamClass::Critical { normalized, .. } => assert_eq!(normalized, params),
            _ => panic!("expected critical"),
        }
    }

    #[test]
    fn classification_invariant_under_conjugacy() {
        let params = params_section7(2);
        let moved = params
            .act_translate(&CycNum::from_ratio(3, 5))
            .act_scale_vars(&CycNum::from_int(2))
            .act_scale_all(&CycNum::from_ratio(7, 3));
        match (
            classify_parameters(&params).unwrap(),
            classify_parameters(&moved).unwrap(),
        ) {
            (
                ParamClass::Critical { normalized: n1, .. },
                ParamClass::Critical { normalized: n2, .. },
            ) => assert_eq!(n1, n2),
            _ => panic!("both should be critical"),
        }
    }

    #[test]
    fn classification_noncritical_cases() {
        // beta = (0, 1, 1, 1): beta tail nonzero with beta1 != 0
        let p1 = MapParameters::new(
            [
                CycNum::from_int(2),
                CycNum::zero(),
                CycNum::one(),
                CycNum::one(),
            ],
            [
                CycNum::zero(),
                CycNum::one(),
                CycNum::one(),
                CycNum::one(),
            ],
        )
        .unwrap();
        match classify_parameters(&p1).unwrap() {
            ParamClass::NonCritical { case, .. } => {
                assert_eq!(case, NonCriticalCase::BetaTailNonzero)
            }
            _ => panic!("expected non-critical"),
        }
        // beta = (0, 1, 0, 0), alpha = (a, 0, 0, 1): alpha2 = 0
        let p2 = params_lyness_like(3, 0);
        match classify_parameters(&p2).unwrap() {
            ParamClass::NonCritical { case, .. } => {
                assert_eq!(case, NonCriticalCase::AlphaTwoZero)
            }
            _ => panic!("expected non-critical"),
        }
        // beta1 = 0 with beta2, beta3 nonzero
        let p3 = MapParameters::new(
            [
                CycNum::one(),
                CycNum::from_int(2),
                CycNum::one(),
                CycNum::one(),
            ],
            [
                CycNum::zero(),
                CycNum::zero(),
                CycNum::one(),
                CycNum::one(),
            ],
        )
        .unwrap();
        match classify_parameters(&p3).unwrap() {
            ParamClass::NonCritical { case, .. } => {
                assert_eq!(case, NonCriticalCase::B1ZeroB2B3Nonzero)
            }
            _ => panic!("expected non-critical"),
        }
    }

    #[test]
    fn rotor_return_map_matches_direct_formula() {
        // a = 2: the restriction of the 8th iterate to x3 = 0 is the cubic
        // [x0 (a x0 + w x2)(a x0 + a x1 + w x2)
        //  : x1 (x1 x2 + a w x0^2 + a w x0 x1 + a w x0 x2 + w^2 x0 x2 + w^2 x2^2)
        //  : w x2 (a x0 + w x2)(x1 + a w x0 + w^2 x2)]
        let params = params_section7(2);
        let g = rotor_return_map(&params, Plane::Sigma3).unwrap();
        assert_eq!(g.degree(), 3);
        let a = CycNum::from_int(2);
        let y = |i: usize| HomogPoly::var(3, i);
        let l1 = HomogPoly::linear_form(&[a.clone(), CycNum::zero(), w()]);
        let l2 = HomogPoly::linear_form(&[a.clone(), a.clone(), w()]);
        let l3 = HomogPoly::linear_form(&[a.mul(&w()), CycNum::one(), w().mul(&w())]);
        let aw = a.mul(&w());
        let w2 = w().mul(&w());
        let conic = HomogPoly::from_terms(
            3,
            vec![
                (vec![0, 1, 1], CycNum::one()),
                (vec![2, 0, 0], aw.clone()),
                (vec![1, 1, 0], aw.clone()),
                (vec![1, 0, 1], aw.add(&w2)),
                (vec![0, 0, 2], w2.clone()),
            ],
        )
        .unwrap();
        let expect = vec![
            y(0).mul(&l1).mul(&l2),
            y(1).mul(&conic),
            y(2).scale(&w()).mul(&l1).mul(&l3),
        ];
        assert!(tuples_proportional(g.components(), &expect));
    }

    #[test]
    fn rotor_return_map_case_81b_degree_two() {
        // alpha = (0, 0, w, 1): common factor drops the return map to
        // degree 2
        let params = MapParameters::new(
            [CycNum::zero(), CycNum::zero(), w(), CycNum::one()],
            [
                CycNum::zero(),
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
            ],
        )
        .unwrap();
        let g = rotor_return_map(&params, Plane::Sigma3).unwrap();
        assert_eq!(g.degree(), 2);
    }

    #[test]
    fn rotor_return_map_lyness_form() {
        // alpha = (a, 0, 1, 1): return map is
        // [x0(a x0 + a x1 + x2) : x1(x0 + x1 + x2) : x2(a x0 + x1 + x2)]
        let params = params_lyness_like(3, 1);
        let g = rotor_return_map(&params, Plane::Sigma3).unwrap();
        let a = CycNum::from_int(3);
        let y = |i: usize| HomogPoly::var(3, i);
        let one = CycNum::one();
        let expect = vec![
            y(0).mul(&HomogPoly::linear_form(&[a.clone(), a.clone(), one.clone()])),
            y(1).mul(&HomogPoly::linear_form(&[one.clone(), one.clone(), one.clone()])),
            y(2).mul(&HomogPoly::linear_form(&[a.clone(), one.clone(), one.clone()])),
        ];
        assert!(tuples_proportional(g.components(), &expect));
    }
}
