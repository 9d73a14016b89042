//! Named parameter sets used throughout the test suites, the self test,
//! and the command-line examples.

use crate::algebra::CycNum;
use crate::birmap::MapParameters;

fn mk(alpha: [CycNum; 4], beta: [CycNum; 4]) -> MapParameters {
    MapParameters::new(alpha, beta).expect("preset parameters are nondegenerate")
}

/// The positive-entropy family: alpha = (a, 0, w, 1), beta = (0, 1, 0, 0)
/// with w a primitive cube root of unity.
pub fn entropy_family(a: CycNum) -> MapParameters {
    let w = CycNum::zeta(3);
    mk(
        [a, CycNum::zero(), w, CycNum::one()],
        [
            CycNum::zero(),
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ],
    )
}

/// The integrable family alpha = (a, 0, 1, 1), beta = (0, 1, 0, 0)
/// (quadratic degree growth for a != 1).
pub fn integrable_family(a: CycNum) -> MapParameters {
    mk(
        [a, CycNum::zero(), CycNum::one(), CycNum::one()],
        [
            CycNum::zero(),
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ],
    )
}

/// The companion integrable case alpha = (0, 0, w, 1), beta = (0, 1, 0, 0).
pub fn integrable_cubic_family() -> MapParameters {
    let w = CycNum::zeta(3);
    mk(
        [CycNum::zero(), CycNum::zero(), w, CycNum::one()],
        [
            CycNum::zero(),
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ],
    )
}

/// Period 8: alpha = (1, 0, 1, 1), beta = (0, 1, 0, 0).
pub fn period8_plus() -> MapParameters {
    integrable_family(CycNum::one())
}

/// Period 8: alpha = (-1, 0, -1, 1), beta = (0, 1, 0, 0).
pub fn period8_minus() -> MapParameters {
    mk(
        [
            CycNum::from_int(-1),
            CycNum::zero(),
            CycNum::from_int(-1),
            CycNum::one(),
        ],
        [
            CycNum::zero(),
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ],
    )
}

/// Period 12: alpha = (-1/2, 0, -1, 1), beta = (1, 1, 0, 0).
pub fn period12_rational() -> MapParameters {
    mk(
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
}

/// Period 12 with eta a primitive sixth root of unity:
/// beta = (eta^2, 1, 0, 0), alpha = (eta/(1-eta), 0, eta, 1).
pub fn period12_sixth_root() -> MapParameters {
    let eta = CycNum::zeta(6);
    let eta2 = eta.mul(&eta);
    let a0 = eta
        .div(&CycNum::one().sub(&eta))
        .expect("1 - eta is invertible");
    mk(
        [a0, CycNum::zero(), eta.clone(), CycNum::one()],
        [eta2, CycNum::one(), CycNum::zero(), CycNum::zero()],
    )
}

/// The fifth-root variant: alpha = (0, 0, z5, 1), beta = (0, 1, 0, 0).
pub fn fifth_root_family() -> MapParameters {
    mk(
        [
            CycNum::zero(),
            CycNum::zero(),
            CycNum::zeta(5),
            CycNum::one(),
        ],
        [
            CycNum::zero(),
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ],
    )
}
