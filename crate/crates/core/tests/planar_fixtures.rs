//! Plane-ledger fixtures: pullback matrices, characteristic polynomials,
//! degree cross-checks, stability witnesses, and conjugacy verdicts for
//! the six special coefficients of the plane return map.

use trifract::algebra::IntPoly;
use trifract::picard::{growth_class, salem_verdict, GrowthClass, SalemVerdict};
use trifract::planar::{
    automorphism_verdict, invariant_class_self_intersection, ledger_from_json, plane_pic_matrix,
    ConjugacyVerdict, LedgerReport,
};

fn load(name: &str) -> LedgerReport {
    let path = format!(
        "{}/../../fixtures/ledgers/{}.json",
        env!("CARGO_MANIFEST_DIR"),
        name
    );
    let text = std::fs::read_to_string(&path).expect("fixture file");
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let ledger = ledger_from_json(&value).expect("ledger parses");
    plane_pic_matrix(&ledger).expect("ledger report")
}

#[test]
fn generic_coefficient_ledger() {
    let rep = load("c1");
    assert_eq!(rep.char_poly, IntPoly::from_i64(&[1, -3, 1]));
    assert!(rep.degree_check_passed, "degrees: {:?} vs {:?}", rep.degrees_symbolic, rep.degrees_predicted);
    assert_eq!(rep.degrees_symbolic, vec![3, 8, 21, 55]);
    assert!(rep.stability_witnessed, "{:?}", rep.witnesses);
    // invariant class theta = lambda H - E1 has theta^2 = lambda^2 - 1,
    // nonzero in the eigenvalue field
    let (theta_sq, nonzero) =
        invariant_class_self_intersection(&rep.action, &rep.char_poly).unwrap();
    assert!(nonzero);
    // lambda^2 - 1 = 3 lambda - 2 modulo lambda^2 - 3 lambda + 1
    use num::bigint::BigInt;
    use num::rational::BigRational;
    assert_eq!(
        theta_sq,
        vec![
            BigRational::from(BigInt::from(-2)),
            BigRational::from(BigInt::from(3))
        ]
    );
    let growth = growth_class(&rep.action).unwrap();
    let salem = salem_verdict(&rep.char_poly).unwrap();
    assert!(matches!(salem, SalemVerdict::NotSalem { .. }));
    let verdict = automorphism_verdict(&growth, Some(&salem), Some(nonzero));
    assert!(matches!(verdict, ConjugacyVerdict::NotConjugate { .. }));
}

#[test]
fn sixth_root_ledger() {
    let rep = load("c2");
    // the degree-consistent pullback; the printed display's polynomial
    // t^6 - 4t^5 + 3t^4 + t^2 - 2t + 1 is incompatible with the degree
    // growth bound of the generic case
    assert_eq!(rep.char_poly, IntPoly::from_i64(&[1, 0, 0, 0, 1, -3, 1]));
    assert!(rep.degree_check_passed, "degrees: {:?} vs {:?}", rep.degrees_symbolic, rep.degrees_predicted);
    // the line orbit of the third curve genuinely meets the indeterminacy
    // set at this coefficient, so the declared witness fails
    assert!(!rep.stability_witnessed);
    let failing: Vec<&str> = rep
        .witnesses
        .iter()
        .filter(|w| !w.verified)
        .map(|w| w.label.as_str())
        .collect();
    assert_eq!(failing, vec!["C3"]);
    let growth = growth_class(&rep.action).unwrap();
    let salem = salem_verdict(&rep.char_poly).unwrap();
    assert!(matches!(salem, SalemVerdict::NotSalem { .. }));
    let verdict = automorphism_verdict(&growth, Some(&salem), None);
    assert!(matches!(verdict, ConjugacyVerdict::NotConjugate { .. }));
}

#[test]
fn fourth_root_ledger() {
    let rep = load("c3");
    // +-(t^7 - 3t^6 + t^5 + t), sign normalized to a positive leading
    // coefficient by the determinant route
    let expect = IntPoly::from_i64(&[0, 1, 0, 0, 0, 1, -3, 1]);
    assert_eq!(rep.char_poly, expect);
    assert!(rep.degree_check_passed, "degrees: {:?} vs {:?}", rep.degrees_symbolic, rep.degrees_predicted);
    // the first curve's divisor orbit reaches the indeterminate direction
    // after eight steps, so its persistence declaration fails
    assert!(!rep.stability_witnessed);
    let failing: Vec<&str> = rep
        .witnesses
        .iter()
        .filter(|w| !w.verified)
        .map(|w| w.label.as_str())
        .collect();
    assert_eq!(failing, vec!["C1"]);
    let growth = growth_class(&rep.action).unwrap();
    let salem = salem_verdict(&rep.char_poly).unwrap();
    assert!(matches!(salem, SalemVerdict::NotSalem { .. }));
    let verdict = automorphism_verdict(&growth, Some(&salem), None);
    assert!(matches!(verdict, ConjugacyVerdict::NotConjugate { .. }));
}

#[test]
fn cube_root_ledger() {
    let rep = load("c4");
    // the dynamical degree carrier divides the characteristic polynomial
    let carrier = IntPoly::from_i64(&[-1, -2, -1, 1]);
    assert!(
        rep.char_poly.div_exact(&carrier).is_some()
            || rep.char_poly.neg().div_exact(&carrier).is_some(),
        "char poly {} lacks the cubic carrier",
        rep.char_poly
    );
    assert!(rep.degree_check_passed, "degrees: {:?} vs {:?}", rep.degrees_symbolic, rep.degrees_predicted);
    assert!(rep.stability_witnessed, "{:?}", rep.witnesses);
    let growth = growth_class(&rep.action).unwrap();
    match &growth {
        GrowthClass::Exponential { degree } => {
            // largest root of t^3 - t^2 - 2t - 1
            assert!((degree.approx - 2.1478990).abs() < 1e-4);
        }
        other => panic!("expected exponential growth, got {:?}", other),
    }
    let salem = salem_verdict(&rep.char_poly).unwrap();
    assert!(matches!(salem, SalemVerdict::NotSalem { .. }));
    let verdict = automorphism_verdict(&growth, Some(&salem), None);
    assert!(matches!(verdict, ConjugacyVerdict::NotConjugate { .. }));
}

#[test]
fn degenerate_quadratic_ledger() {
    let rep = load("c5");
    // the degree-consistent stable model has (t-1)^3 (t^2+t+1); the
    // return map at this coefficient is in fact periodic of period 3
    let expect = IntPoly::from_i64(&[-1, 2, -1, 1, -2, 1]);
    assert_eq!(rep.char_poly, expect);
    assert!(rep.degree_check_passed, "degrees: {:?} vs {:?}", rep.degrees_symbolic, rep.degrees_predicted);
    assert_eq!(rep.degrees_symbolic, vec![2, 2, 1, 2, 2, 1]);
    assert!(rep.stability_witnessed, "{:?}", rep.witnesses);
    let growth = growth_class(&rep.action).unwrap();
    assert!(
        matches!(growth, GrowthClass::Periodic { order: 3 }),
        "got {:?}",
        growth
    );
    let verdict = automorphism_verdict(&growth, None, None);
    assert!(matches!(verdict, ConjugacyVerdict::Possible { .. }));
}

#[test]
fn unit_coefficient_ledger() {
    let rep = load("c6");
    // (t-1)^4 (t+1) (t^2+t+1)
    let expect = IntPoly::from_i64(&[1, -2, 0, 1, 1, 0, -2, 1]);
    assert_eq!(rep.char_poly, expect);
    // the matrix follows the declared blowup recipe but the actual map is
    // periodic of period 3, so the degree prediction diverges from the
    // exact iterate degrees; reported, not hidden
    assert!(!rep.degree_check_passed);
    assert_eq!(&rep.degrees_symbolic[..3], &[3, 3, 1]);
    assert!(rep.stability_witnessed, "{:?}", rep.witnesses);
    let growth = growth_class(&rep.action).unwrap();
    assert!(matches!(growth, GrowthClass::Quadratic), "got {:?}", growth);
    let verdict = automorphism_verdict(&growth, None, None);
    assert!(matches!(verdict, ConjugacyVerdict::Possible { .. }));
}
