use super::*;

fn m(rows: &[&[f64]]) -> ComplexMatrix {
    ComplexMatrix::from_real_rows(rows).unwrap()
}

fn nil2() -> ComplexMatrix {
    m(&[&[0.0, 2.0], &[0.0, 0.0]])
}

fn diag21() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[2.0, 1.0]).unwrap()
}

fn zero() -> ComplexMatrix {
    ComplexMatrix::zeros(2).unwrap()
}

fn close(x: f64, y: f64) {
    assert!((x - y).abs() <= 1e-10, "{x} != {y}");
}

#[test]
fn weighted_mean_examples() {
    close(rhs_weighted_thm21(&nil2(), 1.0, 0.5).unwrap(), 1.0);
    close(rhs_weighted_thm21(&nil2(), 1.0, 0.0).unwrap(), 2.0);
    close(rhs_weighted_thm21(&diag21(), 1.0, 0.5).unwrap(), 3.0);
}

#[test]
fn weighted_norm_examples() {
    close(rhs_weighted_norm_cor23(&nil2(), 1.0, 0.5).unwrap(), 1.0);
    close(rhs_weighted_norm_cor23(&diag21(), 1.0, 0.5).unwrap(), 3.0);
    close(rhs_weighted_norm_cor23(&zero(), 1.0, 0.5).unwrap(), 0.0);
}

#[test]
fn bhunia_paul_examples() {
    close(rhs_bhunia_paul_eq3(&nil2(), 1.0).unwrap(), 1.0);
    close(rhs_bhunia_paul_eq3(&diag21(), 1.0).unwrap(), 4.0);
    close(rhs_bhunia_paul_eq3(&zero(), 1.0).unwrap(), 0.0);
    assert!(rhs_bhunia_paul_eq3(&diag21(), 0.9).is_err());
}

#[test]
fn kittaneh_examples() {
    close(rhs_kittaneh_eq2(&nil2()).unwrap(), 2.0);
    close(rhs_kittaneh_eq2(&diag21()).unwrap(), 4.0);
    close(rhs_kittaneh_eq2(&zero()).unwrap(), 0.0);
}

#[test]
fn spectral_cross_examples() {
    close(rhs_spectral_thm31(&nil2(), 1.0).unwrap(), 1.0);
    close(rhs_spectral_thm31(&diag21(), 1.0).unwrap(), 3.0);
    close(rhs_spectral_thm31(&zero(), 1.0).unwrap(), 0.0);
}

#[test]
fn norm_power_mix_examples() {
    close(rhs_classical_mix_cor34(&nil2()).unwrap(), 1.0);
    close(rhs_classical_mix_cor34(&ComplexMatrix::identity(3).unwrap()).unwrap(), 1.0);
    close(rhs_classical_mix_cor34(&diag21()).unwrap(), 2.0);
}

#[test]
fn block_weighted_examples() {
    close(rhs_block_thm41(&diag21(), &diag21(), 1.0).unwrap(), 5.0);
    close(rhs_block_thm41(&zero(), &zero(), 1.0).unwrap(), 0.0);
    close(rhs_block_thm41(&nil2(), &zero(), 1.0).unwrap(), 1.0);
    let e = evaluate(BoundId::BlockWeighted, &diag21(), Some(&diag21()), BoundParams::default()).unwrap();
    close(e.lhs, 4.0);
    assert!(e.satisfied);
}

#[test]
fn block_symmetric_examples() {
    close(rhs_block_sym_cor42(&diag21(), 1.0).unwrap(), 5.0);
    close(rhs_block_sym_cor42(&zero(), 1.0).unwrap(), 0.0);
    close(rhs_block_sym_cor42(&nil2(), 1.0).unwrap(), 3.0);
    let e = evaluate(BoundId::BlockSymmetric, &nil2(), None, BoundParams::default()).unwrap();
    close(e.lhs, 1.0);
}

#[test]
fn block_spectral_examples() {
    close(rhs_block_spectral_thm43(&diag21(), &diag21(), 1.0).unwrap(), 5.0);
    close(rhs_block_spectral_thm43(&zero(), &zero(), 1.0).unwrap(), 0.0);
    close(rhs_block_spectral_thm43(&nil2(), &zero(), 1.0).unwrap(), 1.0);
}

#[test]
fn block_half_sum_examples() {
    close(rhs_block_halfsum_cor45(&diag21(), &diag21()).unwrap(), 2.0);
    close(rhs_block_halfsum_cor45(&zero(), &zero()).unwrap(), 0.0);
    close(rhs_block_halfsum_cor45(&nil2(), &zero()).unwrap(), 1.0);
    let e = evaluate(BoundId::BlockHalfSum, &nil2(), Some(&zero()), BoundParams::default()).unwrap();
    close(e.lhs, 1.0);
    assert!(e.satisfied);
}

#[test]
fn evaluate_examples() {
    let e = evaluate(BoundId::Kittaneh, &nil2(), None, BoundParams::default()).unwrap();
    close(e.lhs, 1.0);
    close(e.rhs, 2.0);
    assert!(e.satisfied);

    let e = evaluate(BoundId::WeightedMean, &diag21(), None, BoundParams::new(1.0, 0.5).unwrap()).unwrap();
    close(e.lhs, 4.0);
    close(e.rhs, 3.0);
    close(e.margin, -1.0);
    assert!(!e.satisfied);

    let a = m(&[&[1.0, 2.0, 0.0], &[0.0, -1.0, 0.5], &[0.3, 0.0, 0.2]]);
    let e = evaluate(BoundId::ClassicalLower, &a, None, BoundParams::default()).unwrap();
    close(e.lhs, operator_norm(&a) / 2.0);
    close(e.rhs, numerical_radius(&a, DEFAULT_RTOL).unwrap().value);
    assert!(e.satisfied);
}

#[test]
fn operand_contract() {
    let p = BoundParams::default();
    assert_eq!(evaluate(BoundId::BlockWeighted, &nil2(), None, p), Err(Error::MissingOperand("block_thm41")));
    assert_eq!(evaluate(BoundId::Kittaneh, &nil2(), Some(&zero()), p), Err(Error::UnexpectedOperand("kittaneh_eq2")));
    let three = ComplexMatrix::zeros(3).unwrap();
    assert!(matches!(evaluate(BoundId::BlockHalfSum, &nil2(), Some(&three), p), Err(Error::DimensionMismatch { .. })));
    let bad = BoundParams { r: 0.5, theta: 0.5 };
    assert!(matches!(evaluate(BoundId::BhuniaPaul, &nil2(), None, bad), Err(Error::InvalidParameter { .. })));
    let bad = BoundParams { r: 1.0, theta: -0.1 };
    assert!(matches!(evaluate(BoundId::WeightedMean, &nil2(), None, bad), Err(Error::InvalidParameter { .. })));
}

#[test]
fn verdict_tolerance() {
    let e = BoundEvaluation::new(BoundId::ClassicalUpper, BoundParams::default(), 2.0, 2.0 - 1.5e-8, String::new());
    assert!(e.satisfied);
    assert_eq!(e.tol_margin, 2e-8);
    let e = BoundEvaluation::new(BoundId::ClassicalUpper, BoundParams::default(), 2.0, 2.0 - 3e-8, String::new());
    assert!(!e.satisfied);
    let e = BoundEvaluation::new(BoundId::ClassicalUpper, BoundParams::default(), 0.0, -5e-9, String::new());
    assert!(e.satisfied);
}

#[test]
fn digest_is_input_sensitive() {
    let p = BoundParams::default();
    let e1 = evaluate(BoundId::ClassicalUpper, &nil2(), None, p).unwrap();
    let e2 = evaluate(BoundId::ClassicalUpper, &nil2(), None, p).unwrap();
    let e3 = evaluate(BoundId::ClassicalUpper, &diag21(), None, p).unwrap();
    let e4 = evaluate(BoundId::ClassicalUpper, &nil2(), None, BoundParams::new(2.0, 0.5).unwrap()).unwrap();
    assert_eq!(e1.inputs_digest, e2.inputs_digest);
    assert_ne!(e1.inputs_digest, e3.inputs_digest);
    assert_ne!(e1.inputs_digest, e4.inputs_digest);
}
