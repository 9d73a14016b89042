//! Forward-orbit tracking of the contracted plane's image curve through
//! the blown-up space, event classification, orbit signatures, duality
//! checking, non-critical certificates, and the invariant 8-cycle's curve
//! intersection data.

use thiserror::Error;

use crate::algebra::unipoly::{proportional, UniPoly};
use crate::algebra::CycNum;
use crate::atlas::{
    apply_map, group_proportional_const, Atlas, AtlasError, ChartId, Divisor, OrbitElement,
};
use crate::birmap::{
    build_family_inverse, build_family_map, classify_parameters, BirmapError, MapParameters,
    NonCriticalCase, ParamClass,
};
use crate::curves::{intersection_count, same_curve_set, CurveError};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OrbitError {
    #[error("parameters are not critical")]
    NotCritical,
    #[error("orbit touched the forbidden invariant set ({0})")]
    Forbidden(String),
    #[error("orbit event at step {step} not supported: {reason}")]
    Unsupported { step: u32, reason: String },
    #[error("atlas error at step {step}: {source}")]
    Atlas { step: u32, source: AtlasError },
    #[error(transparent)]
    Birmap(#[from] BirmapError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("genericity violated: {0}")]
    NonGeneric(String),
}

/// Classification of one tracking step.
#[derive(Debug, Clone, PartialEq)]
pub enum EventTag {
    /// Plain forward step.
    Advance,
    /// The element is a contracted fiber line inside the exceptional
    /// plane, recorded with the fiber ratio (lambda2 : lambda3).
    FiberContraction(CycNum, CycNum),
    /// The element is a point of the critical intersection line and blows
    /// up to a pencil line, recorded with the pencil ratio (mu1 : mu2).
    IntersectionBlowup(CycNum, CycNum),
    /// The element lies on the special fiber over the base point of the
    /// critical intersection; `whole_fiber` records whether the whole
    /// fiber was reached.
    SpecialFiberEntry { whole_fiber: bool },
    /// The element equals the critical intersection line: orbit closed.
    Closure,
}

#[derive(Debug, Clone)]
pub struct OrbitEvent {
    pub step: u32,
    pub tag: EventTag,
    pub element: OrbitElement,
}

/// The combinatorial record of a closed orbit: closing time N, the steps
/// where the element was a contracted fiber (d-list), where it was a
/// blowup point on the critical intersection (u-list), and the special
/// fiber entry time m_s (entry happens at step m_s + 2), plus the trace.
#[derive(Debug, Clone)]
pub struct OrbitSignature {
    pub n_close: u32,
    pub d_list: Vec<u32>,
    pub u_list: Vec<u32>,
    pub m_s: Option<u32>,
    pub whole_fiber_ok: bool,
    pub trace: Vec<OrbitEvent>,
}

impl OrbitSignature {
    /// Abstract signature without a trace, for matrix/polynomial work.
    pub fn abstract_data(n: u32, d: Vec<u32>, u: Vec<u32>, m_s: Option<u32>) -> Self {
        OrbitSignature {
            n_close: n,
            d_list: d,
            u_list: u,
            m_s,
            whole_fiber_ok: true,
            trace: vec![],
        }
    }

    /// The interlacing shape 1 < d1 < u1 < ... < dm < um < N with equal
    /// list lengths.
    pub fn shape_ok(&self) -> bool {
        if self.d_list.len() != self.u_list.len() {
            return false;
        }
        let mut prev = 1;
        for (d, u) in self.d_list.iter().zip(self.u_list.iter()) {
            if *d <= prev || *u <= *d {
                return false;
            }
            prev = *u;
        }
        prev < self.n_close
    }
}

#[derive(Debug, Clone)]
pub enum TrackOutcome {
    Closed(OrbitSignature),
    NonClosing { n_max: u32, trace: Vec<OrbitEvent> },
}

#[derive(Debug, Clone, Copy)]
pub struct TrackerConfig {
    pub n_max: u32,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig { n_max: 64 }
    }
}

struct CriticalData {
    alpha0: CycNum,
    alpha2: CycNum,
    beta_form: Vec<CycNum>,
    gamma_form: Vec<CycNum>,
}

impl CriticalData {
    fn new(params: &MapParameters) -> Self {
        CriticalData {
            alpha0: params.alpha[0].clone(),
            alpha2: params.alpha[2].clone(),
            beta_form: params.beta.to_vec(),
            gamma_form: params.gamma().to_vec(),
        }
    }

    fn form_vanishes(form: &[CycNum], coords: &[UniPoly]) -> bool {
        let mut acc = UniPoly::zero();
        for (c, p) in form.iter().zip(coords.iter()) {
            acc = acc.add(&p.scale(c));
        }
        acc.is_zero()
    }

    /// The starting curve: the image of the contracted plane, i.e. the
    /// line {B.x = 0, C.x = 0} parameterized as [1 : t : -a0 - a2 t : 0].
    fn start_element(&self) -> OrbitElement {
        let t = UniPoly::t();
        OrbitElement::p3_curve(vec![
            UniPoly::one(),
            t.clone(),
            UniPoly::constant(self.alpha0.neg()).sub(&t.scale(&self.alpha2)),
            UniPoly::zero(),
        ])
    }

    /// The continuation of a blowup point p on the critical intersection:
    /// the pencil line {C.x = 0, p3 x1 = p2 x2} through e3, checked
    /// against the one-parameter form [1 : mu : -a0 - a2 mu : t].
    fn blowup_continuation(&self, p: &[CycNum]) -> Result<OrbitElement, String> {
        let (p2, p3) = (p[2].clone(), p[3].clone());
        let denom = self.alpha2.mul(&p2).add(&p3);
        if p2.is_zero() && p3.is_zero() {
            return Err("pencil base point: continuation line undetermined".into());
        }
        let q1 = [
            denom.neg(),
            self.alpha0.mul(&p2),
            self.alpha0.mul(&p3),
            CycNum::zero(),
        ];
        if q1.iter().all(|c| c.is_zero()) {
            return Err("degenerate pencil line".into());
        }
        let coords: Vec<UniPoly> = vec![
            UniPoly::constant(q1[0].clone()),
            UniPoly::constant(q1[1].clone()),
            UniPoly::constant(q1[2].clone()),
            UniPoly::t(),
        ];
        let line = OrbitElement::p3_curve(coords);
        // cross-check against the one-parameter pencil form where defined
        if !denom.is_zero() && !self.alpha0.is_zero() {
            let mu = self.alpha0.mul(&p2).div(&denom).expect("denom nonzero").neg();
            let alt = OrbitElement::p3_curve(vec![
                UniPoly::one(),
                UniPoly::constant(mu.clone()),
                UniPoly::constant(self.alpha0.neg().sub(&self.alpha2.mul(&mu))),
                UniPoly::t(),
            ]);
            if !same_curve_set(&line.coords, &alt.coords) {
                return Err("pencil continuation forms disagree".into());
            }
        }
        Ok(line)
    }

    /// The special fiber on the target side: the fiber of the blown line
    /// {x0 = x3 = 0} over the base point [1 : -a2].
    fn special_fiber_target(&self) -> OrbitElement {
        OrbitElement::exc(
            Divisor::S03,
            vec![
                UniPoly::one(),
                UniPoly::t(),
                UniPoly::one(),
                UniPoly::constant(self.alpha2.neg()),
            ],
        )
    }

    /// Whether an element sits on the forbidden totally invariant set
    /// (the line {x0 = x2 = 0} or the first fiber over its blown end).
    fn forbidden_contact(&self, el: &OrbitElement) -> Option<String> {
        match el.chart {
            ChartId::P3 => {
                let x0 = &el.coords[0];
                let x2 = &el.coords[2];
                if x0.is_zero() && x2.is_zero() {
                    return Some("element inside the line {x0 = x2 = 0}".into());
                }
                // meeting the line away from the blown points e1, e3 is
                // forbidden; crossings at the blown points are separated
                let g = x0.gcd(x2);
                if g.degree() > 0 {
                    let blown = el.coords[1].mul(&el.coords[3]);
                    let g_sep = g.gcd(&blown);
                    if g.degree() > g_sep.degree() {
                        return Some("element meets the line {x0 = x2 = 0}".into());
                    }
                }
                None
            }
            ChartId::Exc(Divisor::S01) => {
                if group_proportional_const(&el.coords[2..], &[CycNum::one(), CycNum::zero()]) {
                    Some("element on the first fiber over the shared base point".into())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn classify(&self, el: &OrbitElement) -> Classification {
        match el.chart {
            ChartId::P3 => {
                let beta_zero = Self::form_vanishes(&self.beta_form, &el.coords);
                let gamma_zero = Self::form_vanishes(&self.gamma_form, &el.coords);
                if el.is_point() {
                    if beta_zero && gamma_zero {
                        return Classification::BlowupPoint;
                    }
                    return Classification::Plain;
                }
                if beta_zero && gamma_zero {
                    return Classification::CriticalLine;
                }
                if gamma_zero && proportional(&el.coords[2], &el.coords[3]) {
                    return Classification::Fiber;
                }
                Classification::Plain
            }
            ChartId::Exc(Divisor::S01) => {
                if group_proportional_const(
                    &el.coords[2..],
                    &[CycNum::one(), self.alpha2.neg()],
                ) {
                    Classification::SpecialFiber
                } else {
                    Classification::Plain
                }
            }
            _ => Classification::Plain,
        }
    }
}

enum Classification {
    Plain,
    Fiber,
    BlowupPoint,
    SpecialFiber,
    CriticalLine,
}

/// Ratio (lambda2 : lambda3) with lambda2 * x2(t) = lambda3 * x3(t).
fn fiber_ratio(x2: &UniPoly, x3: &UniPoly) -> (CycNum, CycNum) {
    if x2.is_zero() {
        (CycNum::one(), CycNum::zero())
    } else if x3.is_zero() {
        (CycNum::zero(), CycNum::one())
    } else {
        (x3.leading(), x2.leading())
    }
}

/// Tracks the forward orbit of the contracted plane's image through the
/// blown-up space for a normalized critical map, classifying every step
/// and emitting the orbit signature when the orbit closes on the
/// critical intersection line.
pub fn gamma_orbit_signature(
    params: &MapParameters,
    cfg: TrackerConfig,
) -> Result<TrackOutcome, OrbitError> {
    let normalized = match classify_parameters(params)? {
        ParamClass::Critical { normalized, .. } => normalized,
        ParamClass::NonCritical { .. } => return Err(OrbitError::NotCritical),
    };
    let data = CriticalData::new(&normalized);
    let atlas = Atlas::critical();
    let f = build_family_map(&normalized)?;

    let mut trace: Vec<OrbitEvent> = Vec::new();
    let mut d_list = Vec::new();
    let mut u_list = Vec::new();
    let mut m_s: Option<u32> = None;
    let mut whole_fiber_ok = true;
    let mut element = data.start_element();

    for step in 1..=cfg.n_max {
        if let Some(reason) = data.forbidden_contact(&element) {
            return Err(OrbitError::Forbidden(reason));
        }
        match data.classify(&element) {
            Classification::CriticalLine => {
                trace.push(OrbitEvent {
                    step,
                    tag: EventTag::Closure,
                    element,
                });
                return Ok(TrackOutcome::Closed(OrbitSignature {
                    n_close: step,
                    d_list,
                    u_list,
                    m_s,
                    whole_fiber_ok,
                    trace,
                }));
            }
            Classification::Fiber => {
                d_list.push(step);
                let (l2, l3) = fiber_ratio(&element.coords[2], &element.coords[3]);
                trace.push(OrbitEvent {
                    step,
                    tag: EventTag::FiberContraction(l2, l3),
                    element: element.clone(),
                });
                element = apply_map(&atlas, &f, &element)
                    .map_err(|source| OrbitError::Atlas { step, source })?;
            }
            Classification::BlowupPoint => {
                u_list.push(step);
                let p: Vec<CycNum> = element.coords.iter().map(|c| c.coeff(0)).collect();
                let continuation = data
                    .blowup_continuation(&p)
                    .map_err(|reason| OrbitError::Unsupported { step, reason })?;
                trace.push(OrbitEvent {
                    step,
                    tag: EventTag::IntersectionBlowup(p[3].clone(), p[2].clone()),
                    element: element.clone(),
                });
                element = continuation;
            }
            Classification::SpecialFiber => {
                let whole = !proportional(&element.coords[0], &element.coords[1]);
                if step < 3 {
                    return Err(OrbitError::Unsupported {
                        step,
                        reason: "special fiber reached before step 3".into(),
                    });
                }
                if m_s.is_some() {
                    return Err(OrbitError::Unsupported {
                        step,
                        reason: "special fiber entered twice".into(),
                    });
                }
                m_s = Some(step - 2);
                whole_fiber_ok &= whole;
                trace.push(OrbitEvent {
                    step,
                    tag: EventTag::SpecialFiberEntry { whole_fiber: whole },
                    element: element.clone(),
                });
                element = data.special_fiber_target();
            }
            Classification::Plain => {
                trace.push(OrbitEvent {
                    step,
                    tag: EventTag::Advance,
                    element: element.clone(),
                });
                element = apply_map(&atlas, &f, &element)
                    .map_err(|source| OrbitError::Atlas { step, source })?;
            }
        }
    }
    Ok(TrackOutcome::NonClosing {
        n_max: cfg.n_max,
        trace,
    })
}

/// The duality relations between the signature of a map and the signature
/// of (a map conjugate to) its inverse: equal closing times and
/// N - u_j = d'_{m+1-j}, N - d_j = u'_{m+1-j}.
pub fn duality_check(sig_f: &OrbitSignature, sig_finv: &OrbitSignature) -> bool {
    if sig_f.n_close != sig_finv.n_close {
        return false;
    }
    let n = sig_f.n_close;
    let m = sig_f.d_list.len();
    if sig_finv.d_list.len() != m || sig_f.u_list.len() != m || sig_finv.u_list.len() != m {
        return false;
    }
    for j in 0..m {
        if n - sig_f.u_list[j] != sig_finv.d_list[m - 1 - j] {
            return false;
        }
        if n - sig_f.d_list[j] != sig_finv.u_list[m - 1 - j] {
            return false;
        }
    }
    true
}

/// A replayed orbit for a non-critical parameter regime: the trace of
/// elements, whether it closed onto an earlier element, and where.
#[derive(Debug, Clone)]
pub struct NonCriticalReport {
    pub case: NonCriticalCase,
    pub trace: Vec<OrbitElement>,
    pub closed: bool,
    pub cycle_start: Option<usize>,
    pub note: String,
}

fn elements_same_set(a: &OrbitElement, b: &OrbitElement) -> bool {
    if a.chart != b.chart {
        return false;
    }
    match a.chart {
        ChartId::Exc(d) if !d.is_point_blowup() => {
            // compare fiber and base pairs as curves in the product
            same_curve_set(&a.coords[..2], &b.coords[..2])
                && same_curve_set(&a.coords[2..], &b.coords[2..])
        }
        _ => same_curve_set(&a.coords, &b.coords),
    }
}

/// Certifies the pre-periodic behavior of the relevant exceptional
/// hypersurface for a non-critical map by replaying its orbit in the
/// appropriate blowup atlas: the orbit of a generic slice (or of its
/// contracted image) must re-enter itself without ever meeting the
/// indeterminacy set.
pub fn noncritical_certificate(params: &MapParameters) -> Result<NonCriticalReport, OrbitError> {
    let (case, prepared) = match classify_parameters(params)? {
        ParamClass::NonCritical { case, prepared } => (case, prepared),
        ParamClass::Critical { .. } => {
            return Err(OrbitError::Unsupported {
                step: 0,
                reason: "parameters are critical; use the orbit tracker".into(),
            })
        }
    };
    let bound = 24;
    match case {
        NonCriticalCase::B1ZeroB2B3Nonzero
        | NonCriticalCase::B1ZeroB2ZeroA2Zero
        | NonCriticalCase::B1ZeroB2ZeroA2Nonzero => {
            // forward orbit of the contracted plane {beta.x = 0}
            let atlas = Atlas::base();
            let f = build_family_map(&prepared)?;
            let start = plane_slice(&prepared.beta);
            run_cycle_certificate(case, &atlas, &f, start, bound)
        }
        NonCriticalCase::B1ZeroB3Zero => {
            // backward orbit of the plane {x0 = 0}
            let atlas = Atlas::base();
            let finv = build_family_inverse(&prepared)?;
            let start = plane_slice(&[
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
                CycNum::zero(),
            ]);
            run_cycle_certificate(case, &atlas, &finv, start, bound)
        }
        NonCriticalCase::BetaTailNonzero => {
            // backward orbit of {x0 = 0} in plain projective space
            let atlas = Atlas::new(vec![]);
            let finv = build_family_inverse(&prepared)?;
            let start = plane_slice(&[
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
                CycNum::zero(),
            ]);
            run_cycle_certificate(case, &atlas, &finv, start, bound)
        }
        NonCriticalCase::AlphaThreeZero | NonCriticalCase::AlphaTwoZero => {
            let atlas = Atlas::axis2();
            let map = if case == NonCriticalCase::AlphaThreeZero {
                build_family_map(&prepared)?
            } else {
                build_family_inverse(&prepared)?
            };
            // a slice of the blown divisor over {x0 = x2 = 0}: generic
            // constant fiber direction, base running along the line
            let start = OrbitElement::exc(
                Divisor::S02,
                vec![
                    UniPoly::one(),
                    UniPoly::constant(CycNum::from_ratio(7, 3)),
                    UniPoly::t(),
                    UniPoly::one(),
                ],
            );
            run_cycle_certificate(case, &atlas, &map, start, bound)
        }
        NonCriticalCase::QuasiLinear => Ok(NonCriticalReport {
            case,
            trace: vec![],
            closed: true,
            cycle_start: None,
            note: "numerator and denominator depend on the first variable only; the recurrence is linear-fractional in one step".into(),
        }),
    }
}

/// A generic line inside the plane {form.x = 0}.
fn plane_slice(form: &[CycNum]) -> OrbitElement {
    // two independent points on the plane
    let mut pts: Vec<Vec<CycNum>> = Vec::new();
    let samples: [[i64; 4]; 6] = [
        [1, 2, 3, 5],
        [2, -1, 7, 3],
        [5, 1, -2, 9],
        [3, 8, 1, -4],
        [1, 0, 11, 6],
        [0, 3, 2, 13],
    ];
    for s in samples {
        // project the sample onto the plane: q = s - (form.s / form.k) e_k
        // with k the last nonzero slot of form
        let k = (0..4).rev().find(|&i| !form[i].is_zero()).unwrap();
        let mut dot = CycNum::zero();
        for i in 0..4 {
            dot = dot.add(&form[i].mul(&CycNum::from_int(s[i])));
        }
        let mut q: Vec<CycNum> = (0..4).map(|i| CycNum::from_int(s[i])).collect();
        q[k] = q[k].sub(&dot.div(&form[k]).unwrap());
        if q.iter().all(|c| c.is_zero()) {
            continue;
        }
        if pts.iter().all(|p| !crate::birmap::points_proportional(p, &q)) {
            pts.push(q);
        }
        if pts.len() == 2 {
            break;
        }
    }
    let (p, q) = (&pts[0], &pts[1]);
    OrbitElement::p3_curve(
        (0..4)
            .map(|i| UniPoly::new(vec![p[i].clone(), q[i].clone()]))
            .collect(),
    )
}

fn run_cycle_certificate(
    case: NonCriticalCase,
    atlas: &Atlas,
    map: &crate::birmap::BirationalMap,
    start: OrbitElement,
    bound: u32,
) -> Result<NonCriticalReport, OrbitError> {
    let mut trace = vec![start];
    for step in 1..=bound {
        let next = apply_map(atlas, map, trace.last().unwrap())
            .map_err(|source| OrbitError::Atlas { step, source })?;
        for (i, prev) in trace.iter().enumerate() {
            if elements_same_set(prev, &next) {
                let note = format!(
                    "orbit re-enters element {} after {} steps; no indeterminacy met",
                    i,
                    trace.len()
                );
                trace.push(next);
                return Ok(NonCriticalReport {
                    case,
                    trace,
                    closed: true,
                    cycle_start: Some(i),
                    note,
                });
            }
        }
        trace.push(next);
    }
    Ok(NonCriticalReport {
        case,
        trace,
        closed: false,
        cycle_start: None,
        note: "orbit did not close within the bound".into(),
    })
}

/// The tracked curves of the invariant 8-cycle for the positive-entropy
/// family, with their chart tags.
#[derive(Debug, Clone)]
pub struct RotorOrbit {
    pub curves: Vec<OrbitElement>,
}

/// Runs the orbit tracker for the positive-entropy parameters (generic
/// coefficient a) and returns the 11 tracked curves.
pub fn rotor_orbit(params: &MapParameters) -> Result<RotorOrbit, OrbitError> {
    // genericity: a nonzero and not a cube root of unity
    let a = params.alpha[0].clone();
    if a.is_zero() {
        return Err(OrbitError::NonGeneric("a = 0".into()));
    }
    if a.pow(3).unwrap().is_one() {
        return Err(OrbitError::NonGeneric("a^3 = 1".into()));
    }
    match gamma_orbit_signature(params, TrackerConfig { n_max: 16 })? {
        TrackOutcome::Closed(sig) => {
            if sig.n_close != 11 || !sig.d_list.is_empty() || sig.m_s.is_some() {
                return Err(OrbitError::NonGeneric(format!(
                    "orbit signature (N = {}) is not the generic one",
                    sig.n_close
                )));
            }
            Ok(RotorOrbit {
                curves: sig.trace.into_iter().map(|e| e.element).collect(),
            })
        }
        TrackOutcome::NonClosing { .. } => Err(OrbitError::NonGeneric(
            "orbit did not close within 16 steps".into(),
        )),
    }
}

/// Distinct intersection points of two tracked curves. Supports pairs of
/// projective-space curves and the mixed case of a projective curve with
/// a curve on a blown line divisor.
pub fn curve_intersections(a: &OrbitElement, b: &OrbitElement) -> Result<usize, OrbitError> {
    match (a.chart, b.chart) {
        (ChartId::P3, ChartId::P3) => Ok(intersection_count(&a.coords, &b.coords)?),
        (ChartId::P3, ChartId::Exc(d)) if !d.is_point_blowup() => {
            mixed_intersection(a, b, d)
        }
        (ChartId::Exc(d), ChartId::P3) if !d.is_point_blowup() => {
            mixed_intersection(b, a, d)
        }
        _ => Err(OrbitError::Unsupported {
            step: 0,
            reason: format!(
                "intersection of {} with {} charts",
                a.chart.label(),
                b.chart.label()
            ),
        }),
    }
}

/// Intersection of a projective curve (through the blown line) with a
/// curve on the line's exceptional divisor: the strict transform of the
/// first meets the divisor in finitely many chart points; count how often
/// the second passes through them.
fn mixed_intersection(
    p3_el: &OrbitElement,
    exc_el: &OrbitElement,
    d: Divisor,
) -> Result<usize, OrbitError> {
    let (f0, f1) = match d {
        Divisor::S01 => (0usize, 1usize),
        Divisor::S02 => (0, 2),
        Divisor::S03 => (0, 3),
        _ => unreachable!(),
    };
    let (b0, b1) = match d {
        Divisor::S01 => (2usize, 3usize),
        Divisor::S02 => (1, 3),
        Divisor::S03 => (1, 2),
        _ => unreachable!(),
    };
    let g = p3_el.coords[f0].gcd(&p3_el.coords[f1]);
    if g.is_zero() {
        return Err(OrbitError::Unsupported {
            step: 0,
            reason: "projective curve lies inside the blown line".into(),
        });
    }
    if g.degree() == 0 {
        return Ok(0);
    }
    if g.degree() > 1 {
        return Err(OrbitError::Unsupported {
            step: 0,
            reason: "crossing parameters not in the coefficient field".into(),
        });
    }
    // single crossing at t0 = -c0/c1
    let t0 = g.coeff(0).div(&g.coeff(1)).unwrap().neg();
    let mut u = p3_el.coords[f0].clone();
    let mut v = p3_el.coords[f1].clone();
    loop {
        let (qu, qv) = (u.div_exact(&g), v.div_exact(&g));
        match (qu, qv) {
            (Ok(qu), Ok(qv)) => {
                u = qu;
                v = qv;
            }
            _ => break,
        }
    }
    let fiber_pt = [u.eval(&t0), v.eval(&t0)];
    let base_pt = [p3_el.coords[b0].eval(&t0), p3_el.coords[b1].eval(&t0)];
    // conditions on the divisor curve's parameter
    let cond_fiber = exc_el.coords[0]
        .scale(&fiber_pt[1])
        .sub(&exc_el.coords[1].scale(&fiber_pt[0]));
    let cond_base = exc_el.coords[2]
        .scale(&base_pt[1])
        .sub(&exc_el.coords[3].scale(&base_pt[0]));
    let df = exc_el.coords[0].degree().max(exc_el.coords[1].degree());
    let db = exc_el.coords[2].degree().max(exc_el.coords[3].degree());
    if cond_fiber.is_zero() && cond_base.is_zero() {
        return Err(OrbitError::Unsupported {
            step: 0,
            reason: "divisor curve passes through the crossing identically".into(),
        });
    }
    let g2 = cond_fiber.gcd(&cond_base);
    let mut count = g2.distinct_root_count();
    // a match at the divisor curve's parameter infinity shows up as a
    // degree drop in both conditions viewed as forms
    let drop_f = cond_fiber.is_zero() || cond_fiber.degree() < df;
    let drop_b = cond_base.is_zero() || cond_base.degree() < db;
    if drop_f && drop_b {
        count += 1;
    }
    Ok(count)
}
