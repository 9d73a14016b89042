//! Property checks binding the two characteristic-polynomial routes, the
//! degree prediction, and the symbolic iterate degrees.

use num::bigint::BigInt;
use num::traits::Zero;
use trifract::algebra::CycNum;
use trifract::birmap::iterate_degrees;
use trifract::orbit::{gamma_orbit_signature, TrackOutcome, TrackerConfig};
use trifract::picard::{
    char_poly_bracket, identity_check, pic_z_matrix, predicted_degrees, sample_signatures,
};
use trifract::presets;

#[test]
fn determinant_equals_bracket_on_random_signatures() {
    let sigs = sample_signatures(60, 25, 7);
    assert!(sigs.len() >= 50);
    for sig in &sigs {
        let rep = identity_check(sig).expect("valid signature");
        assert!(
            rep.holds,
            "identity failed for N={} d={:?} u={:?} m_s={:?}",
            sig.n_close, sig.d_list, sig.u_list, sig.m_s
        );
        // the bracket vanishes at 1 for every valid signature
        assert!(rep.bracket.eval_int(&BigInt::from(1)).is_zero());
    }
}

#[test]
fn predicted_degrees_match_symbolic_iterates() {
    // the H-component of the matrix powers equals the exact reduced
    // degree of the iterates
    for (params, n_check) in [
        (presets::integrable_family(CycNum::from_int(3)), 10u32),
        (presets::entropy_family(CycNum::from_int(2)), 8),
        (presets::period8_plus(), 8),
    ] {
        let sig = match gamma_orbit_signature(&params, TrackerConfig::default()).unwrap() {
            TrackOutcome::Closed(sig) => sig,
            _ => panic!("orbit must close"),
        };
        let m = pic_z_matrix(&sig).unwrap();
        let predicted = predicted_degrees(&m, n_check);
        let (symbolic, truncated) = iterate_degrees(&params, n_check, 400).unwrap();
        assert!(!truncated);
        for (k, (p, s)) in predicted.iter().zip(symbolic.iter()).enumerate() {
            assert_eq!(
                p,
                &BigInt::from(*s as i64),
                "degree mismatch at iterate {} for signature N={}",
                k + 1,
                sig.n_close
            );
        }
    }
}

#[test]
fn predicted_degrees_satisfy_bracket_recurrence() {
    // the degree sequence satisfies the linear recurrence given by the
    // bracket polynomial (a factor of the full characteristic polynomial)
    let params = presets::entropy_family(CycNum::from_int(2));
    let sig = match gamma_orbit_signature(&params, TrackerConfig::default()).unwrap() {
        TrackOutcome::Closed(sig) => sig,
        _ => panic!("orbit must close"),
    };
    let m = pic_z_matrix(&sig).unwrap();
    let full = trifract::picard::char_poly_det(&m);
    let degs = predicted_degrees(&m, (full.degree() + 6) as u32);
    // sum_k c_k deg(f^(n+k)) = 0 for n large enough
    for n in 0..3 {
        let mut acc = BigInt::from(0);
        for (k, c) in full.coeffs().iter().enumerate() {
            acc += c * &degs[n + k];
        }
        assert_eq!(acc, BigInt::from(0));
    }
    // the bracket factor alone does not annihilate the sequence: the
    // omitted (t^2+1) factor contributes a 4-periodic oscillation, so the
    // bracket residual satisfies r(n+2) = -r(n) instead
    let bracket = char_poly_bracket(&sig).unwrap();
    let residual = |n: usize| -> BigInt {
        let mut acc = BigInt::from(0);
        for (k, c) in bracket.coeffs().iter().enumerate() {
            acc += c * &degs[n + k];
        }
        acc
    };
    for n in 0..4 {
        assert_eq!(residual(n + 2), -residual(n));
    }
}

#[test]
fn submultiplicative_degrees() {
    let params = presets::entropy_family(CycNum::from_int(2));
    let (degs, _) = iterate_degrees(&params, 8, 400).unwrap();
    for n in 1..degs.len() {
        for m in 1..degs.len() {
            if n + m <= degs.len() {
                assert!(degs[n + m - 1] <= degs[n - 1] * degs[m - 1]);
            }
        }
    }
}
