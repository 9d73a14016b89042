//! Exact-arithmetic analysis of the 3-step linear fractional recurrences
//! viewed as birational maps of projective 3-space: degree growth, orbits
//! of exceptional surfaces through blowup charts, divisor-class pullback
//! matrices, dynamical degrees, periodicity, invariant quartics, and the
//! induced plane "rotor" maps.

pub mod algebra;
pub mod atlas;
pub mod birmap;
pub mod codec;
pub mod curves;
pub mod invariants;
pub mod orbit;
pub mod picard;
pub mod planar;
pub mod presets;

pub use algebra::{AlgebraicReal, CycNum, HomogPoly, IntPoly, UniPoly};
pub use birmap::{BirationalMap, MapParameters, ParamClass};
