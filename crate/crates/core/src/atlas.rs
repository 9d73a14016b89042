//! Blowup charts over P^3 with configurable centers (the coordinate
//! points e1, e2, e3 and coordinate lines {x0=x1=0}, {x0=x2=0},
//! {x0=x3=0}) and the series-lift application of a rational map to
//! chart-tagged points and parameterized curves.
//!
//! Elements on an exceptional divisor are lifted to P^3 with a formal
//! transverse parameter eps, the map is applied exactly as polynomials in
//! (t, eps), the minimal eps power and parameter content are divided out,
//! and the image chart is solved from the leading eps terms. Plain P^3
//! elements whose image lands on a center are re-lifted along two
//! distinct transverse directions and the results must agree.
//!
//! Only single-eps lifts are supported: configurations that sit on a
//! second-level locus (a blown point on a blown line, or the later of two
//! blown lines through a common point) raise a typed error. Blowups are
//! ordered points first, then the lines in slot order, which fixes which
//! fiber over a shared point is at level one.

use thiserror::Error;

use crate::algebra::unipoly::{list_gcd, make_primitive, UniPoly};
use crate::algebra::CycNum;
use crate::birmap::BirationalMap;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AtlasError {
    #[error("element chart is not a center of the active atlas")]
    NotInAtlas,
    #[error("element is contained in the indeterminacy locus")]
    Indeterminate,
    #[error("image depends on the transverse direction")]
    DirectionDependent,
    #[error("configuration requires a depth-2 lift: {0}")]
    UnsupportedConfiguration(String),
    #[error("malformed element: {0}")]
    BadElement(String),
}

/// Exceptional divisors over the supported centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Divisor {
    E1,
    E2,
    E3,
    S01,
    S02,
    S03,
}

impl Divisor {
    pub fn label(&self) -> &'static str {
        match self {
            Divisor::E1 => "E1",
            Divisor::E2 => "E2",
            Divisor::E3 => "E3",
            Divisor::S01 => "S01",
            Divisor::S02 => "S02",
            Divisor::S03 => "S03",
        }
    }

    pub fn is_point_blowup(&self) -> bool {
        matches!(self, Divisor::E1 | Divisor::E2 | Divisor::E3)
    }

    /// For a point blowup: the blown point's coordinate slot.
    fn center_slot(&self) -> usize {
        match self {
            Divisor::E1 => 1,
            Divisor::E2 => 2,
            Divisor::E3 => 3,
            _ => unreachable!(),
        }
    }

    /// For a point blowup: the three direction slots in order.
    fn direction_slots(&self) -> [usize; 3] {
        match self {
            Divisor::E1 => [0, 2, 3],
            Divisor::E2 => [0, 1, 3],
            Divisor::E3 => [0, 1, 2],
            _ => unreachable!(),
        }
    }

    /// For a line blowup: the two vanishing (fiber) slots.
    fn fiber_slots(&self) -> [usize; 2] {
        match self {
            Divisor::S01 => [0, 1],
            Divisor::S02 => [0, 2],
            Divisor::S03 => [0, 3],
            _ => unreachable!(),
        }
    }

    /// For a line blowup: the two base slots parameterizing the line.
    fn base_slots(&self) -> [usize; 2] {
        match self {
            Divisor::S01 => [2, 3],
            Divisor::S02 => [1, 3],
            Divisor::S03 => [1, 2],
            _ => unreachable!(),
        }
    }
}

/// Chart tag of an orbit element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartId {
    P3,
    Exc(Divisor),
}

impl ChartId {
    pub fn label(&self) -> &'static str {
        match self {
            ChartId::P3 => "P3",
            ChartId::Exc(d) => d.label(),
        }
    }
}

/// A chart-tagged point or parameterized curve.
///
/// Coordinates are univariate polynomials in the affine curve parameter;
/// constant coordinates describe a point. Meaning per chart:
///  - `P3`: four homogeneous coordinates;
///  - point blowups `Ej`: three homogeneous normal directions, listed in
///    coordinate-slot order skipping the center slot;
///  - line blowups `Sij`: fiber direction pair then base point pair.
#[derive(Debug, Clone)]
pub struct OrbitElement {
    pub chart: ChartId,
    pub coords: Vec<UniPoly>,
}

impl OrbitElement {
    pub fn p3_point(coords: &[CycNum]) -> Self {
        OrbitElement {
            chart: ChartId::P3,
            coords: coords
                .iter()
                .map(|c| UniPoly::constant(c.clone()))
                .collect(),
        }
    }

    pub fn p3_curve(coords: Vec<UniPoly>) -> Self {
        let mut el = OrbitElement {
            chart: ChartId::P3,
            coords,
        };
        el.normalize();
        el
    }

    pub fn exc(divisor: Divisor, coords: Vec<UniPoly>) -> Self {
        let mut el = OrbitElement {
            chart: ChartId::Exc(divisor),
            coords,
        };
        el.normalize();
        el
    }

    pub fn is_point(&self) -> bool {
        self.coords.iter().all(|c| c.is_constant())
    }

    pub fn dimension(&self) -> usize {
        if self.is_point() {
            0
        } else {
            1
        }
    }

    fn normalize(&mut self) {
        match self.chart {
            ChartId::P3 => {
                make_primitive(&mut self.coords);
            }
            ChartId::Exc(d) if d.is_point_blowup() => {
                make_primitive(&mut self.coords);
            }
            ChartId::Exc(_) => {
                let (fiber, base) = self.coords.split_at_mut(2);
                make_primitive(fiber);
                make_primitive(base);
            }
        }
    }

    /// Structural equality as parameterized elements: same chart and
    /// proportional coordinate groups.
    pub fn same_parameterized(&self, other: &Self) -> bool {
        if self.chart != other.chart || self.coords.len() != other.coords.len() {
            return false;
        }
        match self.chart {
            ChartId::Exc(d) if !d.is_point_blowup() => {
                group_proportional(&self.coords[..2], &other.coords[..2])
                    && group_proportional(&self.coords[2..], &other.coords[2..])
            }
            _ => group_proportional(&self.coords, &other.coords),
        }
    }
}

/// Cross-product proportionality of two coordinate groups.
pub fn group_proportional(a: &[UniPoly], b: &[UniPoly]) -> bool {
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if !a[i].mul(&b[j]).sub(&a[j].mul(&b[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Proportionality of a coordinate group to a constant reference vector.
pub fn group_proportional_const(a: &[UniPoly], v: &[CycNum]) -> bool {
    let b: Vec<UniPoly> = v.iter().map(|c| UniPoly::constant(c.clone())).collect();
    group_proportional(a, &b)
}

/// Polynomial in the formal transverse parameter eps with `UniPoly`
/// coefficients; index = eps power.
#[derive(Debug, Clone)]
pub struct EpsPoly {
    pub parts: Vec<UniPoly>,
}

impl EpsPoly {
    pub fn zero() -> Self {
        EpsPoly { parts: vec![] }
    }

    pub fn from_uni(p: UniPoly) -> Self {
        EpsPoly { parts: vec![p] }
    }

    pub fn eps_times(p: UniPoly) -> Self {
        EpsPoly {
            parts: vec![UniPoly::zero(), p],
        }
    }

    fn trimmed(mut self) -> Self {
        while self.parts.last().map_or(false, |p| p.is_zero()) {
            self.parts.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    /// Index of the lowest nonzero eps power.
    pub fn valuation(&self) -> Option<usize> {
        self.parts.iter().position(|p| !p.is_zero())
    }

    pub fn part(&self, k: usize) -> UniPoly {
        self.parts.get(k).cloned().unwrap_or_else(UniPoly::zero)
    }

    fn shift_down(&self, k: usize) -> Self {
        if self.parts.len() <= k {
            return Self::zero();
        }
        EpsPoly {
            parts: self.parts[k..].to_vec(),
        }
    }
}

impl crate::algebra::homog::RingValue for EpsPoly {
    fn ring_zero() -> Self {
        EpsPoly::zero()
    }
    fn ring_one() -> Self {
        EpsPoly::from_uni(UniPoly::one())
    }
    fn ring_add(&self, other: &Self) -> Self {
        let n = self.parts.len().max(other.parts.len());
        let mut parts = Vec::with_capacity(n);
        for i in 0..n {
            parts.push(self.part(i).add(&other.part(i)));
        }
        EpsPoly { parts }.trimmed()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return EpsPoly::zero();
        }
        let mut parts = vec![UniPoly::zero(); self.parts.len() + other.parts.len() - 1];
        for (i, a) in self.parts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.parts.iter().enumerate() {
                if !b.is_zero() {
                    parts[i + j] = parts[i + j].add(&a.mul(b));
                }
            }
        }
        EpsPoly { parts }.trimmed()
    }
    fn ring_scale(&self, c: &CycNum) -> Self {
        EpsPoly {
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
        .trimmed()
    }
}

/// A set of blowup centers over P^3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atlas {
    centers: Vec<Divisor>,
}

impl Atlas {
    pub fn new(mut centers: Vec<Divisor>) -> Self {
        centers.sort();
        centers.dedup();
        Atlas { centers }
    }

    /// Blowups of e1, e3 and both coordinate lines through them: the
    /// smallest space on which a critical map has a single exceptional
    /// hypersurface.
    pub fn critical() -> Self {
        Atlas::new(vec![Divisor::E1, Divisor::E3, Divisor::S01, Divisor::S03])
    }

    /// Blowups of e1 and the line {x0 = x3 = 0}.
    pub fn base() -> Self {
        Atlas::new(vec![Divisor::E1, Divisor::S03])
    }

    /// Blowups of e2 and the line {x0 = x2 = 0}.
    pub fn axis2() -> Self {
        Atlas::new(vec![Divisor::E2, Divisor::S02])
    }

    pub fn contains(&self, d: Divisor) -> bool {
        self.centers.contains(&d)
    }

    pub fn centers(&self) -> &[Divisor] {
        &self.centers
    }

    /// The blown point underneath a point divisor.
    fn point_coords(d: Divisor) -> [CycNum; 4] {
        let mut v = [
            CycNum::zero(),
            CycNum::zero(),
            CycNum::zero(),
            CycNum::zero(),
        ];
        v[d.center_slot()] = CycNum::one();
        v
    }

    /// Special base positions on a blown line: (position pair, the point
    /// divisor over that position, lines through it that are earlier in
    /// the blowup order).
    fn special_base_points(line: Divisor) -> Vec<([i64; 2], Divisor, Vec<Divisor>)> {
        match line {
            // base slots (x2, x3): [1:0] = e2, [0:1] = e3
            Divisor::S01 => vec![
                ([1, 0], Divisor::E2, vec![]),
                ([0, 1], Divisor::E3, vec![]),
            ],
            // base slots (x1, x3): [1:0] = e1, [0:1] = e3
            Divisor::S02 => vec![
                ([1, 0], Divisor::E1, vec![]),
                ([0, 1], Divisor::E3, vec![Divisor::S01]),
            ],
            // base slots (x1, x2): [1:0] = e1, [0:1] = e2
            Divisor::S03 => vec![
                ([1, 0], Divisor::E1, vec![Divisor::S02]),
                ([0, 1], Divisor::E2, vec![Divisor::S01]),
            ],
            _ => vec![],
        }
    }

    /// Directions at a blown point along blown lines (level-2 loci).
    fn forbidden_directions(&self, point: Divisor) -> Vec<[i64; 3]> {
        // direction triples are in direction-slot order
        let mut out = Vec::new();
        match point {
            Divisor::E1 => {
                // slots (x0, x2, x3); lines through e1: S02 dir (0,0,1),
                // S03 dir (0,1,0)
                if self.contains(Divisor::S02) {
                    out.push([0, 0, 1]);
                }
                if self.contains(Divisor::S03) {
                    out.push([0, 1, 0]);
                }
            }
            Divisor::E2 => {
                // slots (x0, x1, x3); lines through e2: S01 dir (0,0,1),
                // S03 dir (0,1,0)
                if self.contains(Divisor::S01) {
                    out.push([0, 0, 1]);
                }
                if self.contains(Divisor::S03) {
                    out.push([0, 1, 0]);
                }
            }
            Divisor::E3 => {
                // slots (x0, x1, x2); lines through e3: S01 dir (0,0,1),
                // S02 dir (0,1,0)
                if self.contains(Divisor::S01) {
                    out.push([0, 0, 1]);
                }
                if self.contains(Divisor::S02) {
                    out.push([0, 1, 0]);
                }
            }
            _ => {}
        }
        out
    }

    /// Checks that an element is representable with a single-eps lift.
    pub fn check_representable(&self, el: &OrbitElement) -> Result<(), AtlasError> {
        match el.chart {
            ChartId::P3 => {
                // points exactly on a blown center are chart points, not
                // P3 points
                if el.is_point() {
                    let pt: Vec<CycNum> = el.coords.iter().map(|c| c.coeff(0)).collect();
                    if self.on_center_point(&pt).is_some() {
                        return Err(AtlasError::BadElement(
                            "point lies on a blowup center; use the chart element".into(),
                        ));
                    }
                }
                Ok(())
            }
            ChartId::Exc(d) => {
                if !self.contains(d) {
                    return Err(AtlasError::NotInAtlas);
                }
                if d.is_point_blowup() {
                    if el.coords.len() != 3 {
                        return Err(AtlasError::BadElement("need 3 direction coords".into()));
                    }
                    for dir in self.forbidden_directions(d) {
                        let v: Vec<CycNum> =
                            dir.iter().map(|&k| CycNum::from_int(k)).collect();
                        if group_proportional_const(&el.coords, &v) {
                            return Err(AtlasError::UnsupportedConfiguration(format!(
                                "{} direction along a blown line",
                                d.label()
                            )));
                        }
                    }
                } else {
                    if el.coords.len() != 4 {
                        return Err(AtlasError::BadElement(
                            "need fiber pair and base pair".into(),
                        ));
                    }
                    let base = &el.coords[2..];
                    for (pos, over_point, earlier_lines) in Self::special_base_points(d) {
                        let v = [CycNum::from_int(pos[0]), CycNum::from_int(pos[1])];
                        if group_proportional_const(base, &v) {
                            if self.contains(over_point) {
                                return Err(AtlasError::UnsupportedConfiguration(format!(
                                    "{} fiber over a blown point",
                                    d.label()
                                )));
                            }
                            for line in earlier_lines {
                                if self.contains(line) {
                                    return Err(AtlasError::UnsupportedConfiguration(
                                        format!(
                                            "{} fiber over a point of an earlier blown line",
                                            d.label()
                                        ),
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    fn on_center_point(&self, pt: &[CycNum]) -> Option<Divisor> {
        for d in [Divisor::E1, Divisor::E2, Divisor::E3] {
            if !self.contains(d) {
                continue;
            }
            let c = Self::point_coords(d);
            if crate::birmap::points_proportional(pt, &c) {
                return Some(d);
            }
        }
        None
    }

    /// What center (if any) the support of a P3 tuple lies on. Point
    /// centers take precedence; among lines, the earlier blowup wins.
    fn tuple_on_center(&self, tuple: &[UniPoly]) -> Option<Divisor> {
        for d in [Divisor::E1, Divisor::E2, Divisor::E3] {
            if !self.contains(d) {
                continue;
            }
            let slot = d.center_slot();
            if (0..4).all(|i| i == slot || tuple[i].is_zero()) {
                return Some(d);
            }
        }
        for d in [Divisor::S01, Divisor::S02, Divisor::S03] {
            if !self.contains(d) {
                continue;
            }
            let [f0, f1] = d.fiber_slots();
            if tuple[f0].is_zero() && tuple[f1].is_zero() {
                return Some(d);
            }
        }
        None
    }
}

/// Lifts a chart element to a P^3 tuple with a formal transverse
/// parameter eps. P3 elements lift to themselves.
pub fn chart_to_p3(el: &OrbitElement) -> [EpsPoly; 4] {
    match el.chart {
        ChartId::P3 => std::array::from_fn(|i| EpsPoly::from_uni(el.coords[i].clone())),
        ChartId::Exc(d) if d.is_point_blowup() => {
            let slots = d.direction_slots();
            let mut out: [EpsPoly; 4] = std::array::from_fn(|_| EpsPoly::zero());
            out[d.center_slot()] = EpsPoly::from_uni(UniPoly::one());
            for (k, &slot) in slots.iter().enumerate() {
                out[slot] = EpsPoly::eps_times(el.coords[k].clone());
            }
            out
        }
        ChartId::Exc(d) => {
            let [f0, f1] = d.fiber_slots();
            let [b0, b1] = d.base_slots();
            let mut out: [EpsPoly; 4] = std::array::from_fn(|_| EpsPoly::zero());
            out[f0] = EpsPoly::eps_times(el.coords[0].clone());
            out[f1] = EpsPoly::eps_times(el.coords[1].clone());
            out[b0] = EpsPoly::from_uni(el.coords[2].clone());
            out[b1] = EpsPoly::from_uni(el.coords[3].clone());
            out
        }
    }
}

/// Divides the whole tuple by its common parameter content (gcd over all
/// eps slices of all components).
fn divide_tuple_content(tuple: &mut [EpsPoly; 4]) {
    let mut all: Vec<UniPoly> = Vec::new();
    for comp in tuple.iter() {
        for p in &comp.parts {
            if !p.is_zero() {
                all.push(p.clone());
            }
        }
    }
    let g = list_gcd(&all);
    if g.is_zero() || g.degree() == 0 {
        return;
    }
    for comp in tuple.iter_mut() {
        for p in comp.parts.iter_mut() {
            if !p.is_zero() {
                *p = p.div_exact(&g).expect("content divides");
            }
        }
    }
}

/// Resolves an image tuple (after eps shift and content division) into an
/// orbit element of the atlas.
fn resolve_tuple(atlas: &Atlas, tuple: &[EpsPoly; 4]) -> Result<OrbitElement, AtlasError> {
    let base: Vec<UniPoly> = tuple.iter().map(|c| c.part(0)).collect();
    debug_assert!(!base.iter().all(|p| p.is_zero()));
    match atlas.tuple_on_center(&base) {
        None => Ok(OrbitElement::p3_curve(base)),
        Some(d) if d.is_point_blowup() => {
            let slots = d.direction_slots();
            let triple = [&tuple[slots[0]], &tuple[slots[1]], &tuple[slots[2]]];
            let v = triple
                .iter()
                .filter_map(|c| c.valuation())
                .min()
                .ok_or_else(|| {
                    AtlasError::BadElement("no direction data at a blown point".into())
                })?;
            let dirs: Vec<UniPoly> = triple.iter().map(|c| c.part(v)).collect();
            let el = OrbitElement::exc(d, dirs);
            atlas.check_representable(&el)?;
            Ok(el)
        }
        Some(d) => {
            let [f0, f1] = d.fiber_slots();
            let [b0, b1] = d.base_slots();
            let v = [&tuple[f0], &tuple[f1]]
                .iter()
                .filter_map(|c| c.valuation())
                .min()
                .ok_or_else(|| {
                    AtlasError::BadElement("no fiber data at a blown line".into())
                })?;
            let fiber = vec![tuple[f0].part(v), tuple[f1].part(v)];
            let base_pair = vec![tuple[b0].part(0), tuple[b1].part(0)];
            let mut coords = fiber;
            coords.extend(base_pair);
            let el = OrbitElement::exc(d, coords);
            atlas.check_representable(&el)?;
            Ok(el)
        }
    }
}

fn apply_eps_tuple(
    atlas: &Atlas,
    map: &BirationalMap,
    lift: &[EpsPoly; 4],
) -> Result<OrbitElement, AtlasError> {
    let mut image: [EpsPoly; 4] =
        std::array::from_fn(|i| map.components()[i].eval_with(&lift[..]));
    let v = image.iter().filter_map(|c| c.valuation()).min();
    let v = match v {
        Some(v) => v,
        None => return Err(AtlasError::Indeterminate),
    };
    for comp in image.iter_mut() {
        *comp = comp.shift_down(v);
    }
    divide_tuple_content(&mut image);
    resolve_tuple(atlas, &image)
}

const TRANSVERSE_DIRECTIONS: [[i64; 4]; 3] = [[3, 17, 5, 11], [7, -5, 13, -3], [-11, 2, 19, 23]];

/// Applies the rational map to a chart element of the atlas.
///
/// Lifts the element to P^3 with the formal transverse parameter,
/// applies the map componentwise, divides the minimal eps power and the
/// parameter content, and solves the target chart from the leading eps
/// terms when the image lands on a blown-up center. P3 elements whose
/// image needs direction data are recomputed along two distinct generic
/// directions, which must agree.
pub fn apply_map(
    atlas: &Atlas,
    map: &BirationalMap,
    el: &OrbitElement,
) -> Result<OrbitElement, AtlasError> {
    atlas.check_representable(el)?;
    match el.chart {
        ChartId::P3 => {
            // direct strict transform first
            let mut image: Vec<UniPoly> = map
                .components()
                .iter()
                .map(|c| c.eval_curve(&el.coords))
                .collect();
            if image.iter().all(|p| p.is_zero()) {
                return Err(AtlasError::Indeterminate);
            }
            make_primitive(&mut image);
            if atlas.tuple_on_center(&image).is_none() {
                return Ok(OrbitElement::p3_curve(image));
            }
            // the image lies on a center: lift along two directions
            let mut results = Vec::new();
            for dir in TRANSVERSE_DIRECTIONS.iter().take(2) {
                let lift: [EpsPoly; 4] = std::array::from_fn(|i| EpsPoly {
                    parts: vec![
                        el.coords[i].clone(),
                        UniPoly::constant(CycNum::from_int(dir[i])),
                    ],
                });
                results.push(apply_eps_tuple(atlas, map, &lift)?);
            }
            if !results[0].same_parameterized(&results[1]) {
                return Err(AtlasError::DirectionDependent);
            }
            Ok(results.swap_remove(0))
        }
        ChartId::Exc(_) => {
            let lift = chart_to_p3(el);
            apply_eps_tuple(atlas, map, &lift)
        }
    }
}

/// Round trip: resolves a lifted chart element back, used as a
/// consistency check on the chart conventions.
pub fn resolve_lift(atlas: &Atlas, el: &OrbitElement) -> Result<OrbitElement, AtlasError> {
    let lift = chart_to_p3(el);
    resolve_tuple(atlas, &lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birmap::{build_family_map, MapParameters};

    fn c(v: i64) -> CycNum {
        CycNum::from_int(v)
    }

    fn up(v: &[i64]) -> UniPoly {
        UniPoly::new(v.iter().map(|&k| c(k)).collect())
    }

    /// normalized critical parameters (beta0, alpha0, alpha2 rational)
    fn critical(beta0: (i64, i64), alpha0: (i64, i64), alpha2: (i64, i64)) -> MapParameters {
        MapParameters::new(
            [
                CycNum::from_ratio(alpha0.0, alpha0.1),
                CycNum::zero(),
                CycNum::from_ratio(alpha2.0, alpha2.1),
                CycNum::one(),
            ],
            [
                CycNum::from_ratio(beta0.0, beta0.1),
                CycNum::one(),
                CycNum::zero(),
                CycNum::zero(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn round_trip_identity() {
        let atlas = Atlas::critical();
        let e3_el = OrbitElement::exc(Divisor::E3, vec![up(&[1]), up(&[2, 1]), up(&[5])]);
        let back = resolve_lift(&atlas, &e3_el).unwrap();
        assert!(back.same_parameterized(&e3_el));
        let s01_el = OrbitElement::exc(
            Divisor::S01,
            vec![up(&[1]), up(&[0, 1]), up(&[1]), up(&[7])],
        );
        let back = resolve_lift(&atlas, &s01_el).unwrap();
        assert!(back.same_parameterized(&s01_el));
    }

    #[test]
    fn contracted_plane_slice_to_point_blowup() {
        // a curve inside {beta.x = 0} maps into the exceptional divisor
        // over e3 with directions [x0 : x2 : x3]
        let atlas = Atlas::critical();
        let params = critical((4, 3), (2, 1), (5, 7));
        let f = build_family_map(&params).unwrap();
        // [x0 : -beta0 x0 : x2 : x3] with x0 = 1, x2 = t, x3 = 2 - 3t
        let curve = OrbitElement::p3_curve(vec![
            up(&[1]),
            UniPoly::constant(CycNum::from_ratio(-4, 3)),
            up(&[0, 1]),
            up(&[2, -3]),
        ]);
        let img = apply_map(&atlas, &f, &curve).unwrap();
        assert_eq!(img.chart, ChartId::Exc(Divisor::E3));
        // directions [x0 : x2 : x3] = [1 : t : 2 - 3t]
        let expect = OrbitElement::exc(Divisor::E3, vec![up(&[1]), up(&[0, 1]), up(&[2, -3])]);
        assert!(img.same_parameterized(&expect));
    }

    #[test]
    fn point_blowup_to_line_blowup() {
        // (0, xi1, xi2) on the e3 divisor maps to the {x0=x1=0} divisor
        // as (0, xi2, beta0 + xi1)
        let atlas = Atlas::critical();
        let params = critical((4, 3), (2, 1), (5, 7));
        let f = build_family_map(&params).unwrap();
        let el = OrbitElement::exc(Divisor::E3, vec![up(&[1]), up(&[0, 1]), up(&[9])]);
        let img = apply_map(&atlas, &f, &el).unwrap();
        assert_eq!(img.chart, ChartId::Exc(Divisor::S01));
        // fiber [1 : xi2] = [1 : 9], base (x2, x3) = [beta0 + xi1 : 1]
        let expect = OrbitElement::exc(
            Divisor::S01,
            vec![
                up(&[1]),
                up(&[9]),
                UniPoly::constant(CycNum::from_ratio(4, 3)).add(&up(&[0, 1])),
                up(&[1]),
            ],
        );
        assert!(img.same_parameterized(&expect));
    }

    #[test]
    fn line_blowup_to_plane() {
        // (0, eta1, x2) on the {x0=x1=0} divisor maps into the plane
        // x0 = 0 as [0 : x2(beta0+eta1) : beta0+eta1 : 1 + alpha2 x2]
        let atlas = Atlas::critical();
        let params = critical((4, 3), (2, 1), (5, 7));
        let f = build_family_map(&params).unwrap();
        // fiber [1 : eta1] with eta1 = t, base [x2 : x3] = [3 : 1]
        let el = OrbitElement::exc(
            Divisor::S01,
            vec![up(&[1]), up(&[0, 1]), up(&[3]), up(&[1])],
        );
        let img = apply_map(&atlas, &f, &el).unwrap();
        assert_eq!(img.chart, ChartId::P3);
        let b0 = CycNum::from_ratio(4, 3);
        let a2 = CycNum::from_ratio(5, 7);
        let factor = UniPoly::constant(b0).add(&up(&[0, 1]));
        let expect = OrbitElement::p3_curve(vec![
            UniPoly::zero(),
            factor.scale(&c(3)),
            factor,
            UniPoly::constant(CycNum::one().add(&a2.mul(&c(3)))),
        ]);
        assert!(img.same_parameterized(&expect));
    }

    #[test]
    fn special_fiber_maps_to_whole_special_fiber() {
        // the fiber of {x0=x1=0} over the point [0:0:1:-alpha2] blows
        // onto the whole fiber of {x0=x3=0} over [0:1:-alpha2:0]
        let atlas = Atlas::critical();
        let params = critical((4, 3), (2, 1), (5, 7));
        let a2 = CycNum::from_ratio(5, 7);
        let f = build_family_map(&params).unwrap();
        let el = OrbitElement::exc(
            Divisor::S01,
            vec![
                up(&[1]),
                up(&[0, 1]),
                up(&[1]),
                UniPoly::constant(a2.neg()),
            ],
        );
        let img = apply_map(&atlas, &f, &el).unwrap();
        assert_eq!(img.chart, ChartId::Exc(Divisor::S03));
        // base [x1 : x2] = [1 : -alpha2], fiber varies over the parameter
        assert!(group_proportional_const(
            &img.coords[2..],
            &[CycNum::one(), a2.neg()]
        ));
        let fiber_constant = crate::algebra::unipoly::proportional(&img.coords[0], &img.coords[1]);
        assert!(!fiber_constant, "fiber must vary along the parameter");
    }

    #[test]
    fn fiber_over_shared_point_maps_to_coordinate_line() {
        // the level-1 fiber over e2 inside the {x0=x1=0} divisor maps to
        // the line {x0 = x2 = 0}: (eta, 0, 0) -> [0 : 1 : 0 : alpha2 eta / (beta0 eta + 1)]
        let atlas = Atlas::critical();
        let params = critical((4, 3), (2, 1), (5, 7));
        let f = build_family_map(&params).unwrap();
        // fiber [eta : 1] = [t : 1], base [x2 : x3] = [1 : 0] (over e2)
        let el = OrbitElement::exc(
            Divisor::S01,
            vec![up(&[0, 1]), up(&[1]), up(&[1]), UniPoly::zero()],
        );
        let img = apply_map(&atlas, &f, &el).unwrap();
        assert_eq!(img.chart, ChartId::P3);
        // [0 : beta0 t + 1 : 0 : alpha2 t]
        let b0 = CycNum::from_ratio(4, 3);
        let a2 = CycNum::from_ratio(5, 7);
        let expect = OrbitElement::p3_curve(vec![
            UniPoly::zero(),
            UniPoly::new(vec![CycNum::one(), b0]),
            UniPoly::zero(),
            UniPoly::new(vec![CycNum::zero(), a2]),
        ]);
        assert!(img.same_parameterized(&expect));
    }

    #[test]
    fn coordinate_line_point_blows_up_direction_dependently() {
        // points of {x0 = x2 = 0} blow up: the transverse direction
        // changes the image, which must be reported
        let atlas = Atlas::critical();
        let params = critical((0, 1), (2, 1), (5, 7));
        let f = build_family_map(&params).unwrap();
        let el = OrbitElement::p3_point(&[c(0), c(1), c(0), c(4)]);
        let err = apply_map(&atlas, &f, &el).unwrap_err();
        assert_eq!(err, AtlasError::DirectionDependent);
    }

    #[test]
    fn gamma_fiber_contracts_to_image_curve_point() {
        // a line through e1 inside {gamma.x = 0} contracts to the point
        // [p0 : p2 : -alpha0 p0 - alpha2 p2 : 0]
        let atlas = Atlas::critical();
        let params = critical((0, 1), (2, 1), (5, 7));
        let a2 = CycNum::from_ratio(5, 7);
        let f = build_family_map(&params).unwrap();
        // gamma.x = alpha.x = 2 x0 + (5/7) x2 + x3; point p on it:
        // p = [1 : 4 : 7 : -7], line p + s e1 in parameter s
        let p = [c(1), c(4), c(7), c(-2 - 5)];
        let line = OrbitElement::p3_curve(vec![
            up(&[1]),
            up(&[4, 1]),
            up(&[7]),
            UniPoly::constant(p[3].clone()),
        ]);
        let img = apply_map(&atlas, &f, &line).unwrap();
        assert!(img.is_point());
        let expect = OrbitElement::p3_point(&[
            c(1),
            c(7),
            c(-2).sub(&a2.mul(&c(7))),
            c(0),
        ]);
        assert!(img.same_parameterized(&expect));
    }

    #[test]
    fn level2_configurations_rejected() {
        let atlas = Atlas::critical();
        // e3-divisor direction along the blown line {x0=x1=0}
        let el = OrbitElement::exc(Divisor::E3, vec![up(&[0]), up(&[0]), up(&[1])]);
        assert!(matches!(
            atlas.check_representable(&el),
            Err(AtlasError::UnsupportedConfiguration(_))
        ));
        // fiber of {x0=x1=0} over the blown point e3
        let el = OrbitElement::exc(
            Divisor::S01,
            vec![up(&[1]), up(&[0, 1]), up(&[0]), up(&[1])],
        );
        assert!(matches!(
            atlas.check_representable(&el),
            Err(AtlasError::UnsupportedConfiguration(_))
        ));
    }
}
