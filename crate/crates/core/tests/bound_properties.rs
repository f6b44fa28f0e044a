mod common;

use common::{draw, ginibre, unitary};
use numrad_core::bounds::{equality_certificate_weighted, BoundId, BoundParams, Evaluator};
use numrad_core::lab::{EnsembleKind, SWEEP_RTOL};
use numrad_core::linop::operator_norm;
use numrad_core::{Complex64, ComplexMatrix};
use proptest::prelude::*;

fn evaluator(a: ComplexMatrix, b: Option<ComplexMatrix>) -> Evaluator {
    Evaluator::new(a, b, SWEEP_RTOL).unwrap()
}

fn params() -> impl Strategy<Value = BoundParams> {
    (1.0f64..3.0, 0.0f64..=1.0).prop_map(|(r, theta)| BoundParams::new(r, theta).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn established_bounds_hold(seed in any::<u64>(), n in 1usize..6, kind in 0usize..5, p in params()) {
        let k = EnsembleKind::ALL[kind];
        let ev = evaluator(draw(k, n, seed), Some(draw(k, n, seed ^ 0xB)));
        for bound in BoundId::ESTABLISHED {
            let e = ev.evaluate(bound, p).unwrap();
            prop_assert!(e.satisfied, "{} violated: {:?}", bound, e);
        }
    }

    #[test]
    fn dominance_chain(seed in any::<u64>(), n in 1usize..6, p in params()) {
        let ev = evaluator(ginibre(n, seed), Some(ginibre(n, !seed)));
        let tol = |x: f64| 1e-9 * x.abs().max(1.0);
        let weighted = ev.rhs(BoundId::WeightedMean, p).unwrap();
        let normed = ev.rhs(BoundId::WeightedMeanNorm, p).unwrap();
        prop_assert!(normed >= weighted - tol(weighted));

        let half = BoundParams::new(p.r, 0.5).unwrap();
        let spectral = ev.rhs(BoundId::SpectralCross, half).unwrap();
        let at_half = ev.rhs(BoundId::WeightedMean, half).unwrap();
        prop_assert!(spectral <= at_half + tol(at_half));

        let block = ev.rhs(BoundId::BlockWeighted, half).unwrap();
        let block_spectral = ev.rhs(BoundId::BlockSpectral, half).unwrap();
        prop_assert!(block_spectral <= block + tol(block));
    }

    #[test]
    fn theta_endpoints_agree(seed in any::<u64>(), n in 1usize..6, r in 1.0f64..3.0) {
        let a = ginibre(n, seed);
        let scale = operator_norm(&a).max(1.0).powf(2.0 * r);
        let ev = evaluator(a, None);
        let at0 = ev.rhs(BoundId::WeightedMean, BoundParams::new(r, 0.0).unwrap()).unwrap();
        let at1 = ev.rhs(BoundId::WeightedMean, BoundParams::new(r, 1.0).unwrap()).unwrap();
        prop_assert!((at0 - at1).abs() <= 1e-9 * scale);
    }

    #[test]
    fn scale_covariance(seed in any::<u64>(), n in 1usize..5, c in 0.1f64..10.0, p in params()) {
        let a = ginibre(n, seed);
        let b = ginibre(n, !seed);
        let cc = Complex64::new(c, 0.0);
        let ev = evaluator(a.clone(), Some(b.clone()));
        let scaled = evaluator(a.scale(cc), Some(b.scale(cc)));
        for bound in BoundId::ALL.into_iter().filter(|b| b.is_homogeneous()) {
            let e = ev.evaluate(bound, p).unwrap();
            let s = scaled.evaluate(bound, p).unwrap();
            let k = c.powf(bound.lhs_degree(p.r));
            prop_assert!((s.lhs - k * e.lhs).abs() <= 1e-8 * (k * e.lhs).max(1e-12), "{} lhs", bound);
            prop_assert!((s.rhs - k * e.rhs).abs() <= 1e-8 * (k * e.rhs).max(1e-12), "{} rhs", bound);
            prop_assert_eq!(s.satisfied, e.satisfied);
        }
    }

    #[test]
    fn certificate_soundness(seed in any::<u64>(), n in 1usize..5, c in 0.0f64..3.0, p in params(), scalar in any::<bool>()) {
        // Scalar multiples of unitaries make the cross term scalar; Ginibre draws almost never do.
        let a = if scalar { unitary(n, seed).scale(Complex64::new(c, 0.0)) } else { ginibre(n, seed) };
        let cert = equality_certificate_weighted(&a, p.r, p.theta).unwrap();
        if scalar {
            prop_assert!(cert.is_scalar_multiple_of_identity);
        }
        if cert.is_scalar_multiple_of_identity {
            // A scalar cross term has equal numerical radius and norm, so both forms coincide.
            let scale = operator_norm(&a).max(1.0).powf(2.0 * p.r);
            let ev = evaluator(a, None);
            let rhs = ev.rhs(BoundId::WeightedMean, p).unwrap();
            let normed = ev.rhs(BoundId::WeightedMeanNorm, p).unwrap();
            prop_assert!((rhs - normed).abs() <= 1e-9 * scale);
        }
    }
}

#[test]
fn spectral_cross_dominated_on_every_ensemble() {
    for kind in EnsembleKind::ALL {
        for seed in 0..10 {
            let ev = evaluator(draw(kind, 4, seed), None);
            let p = BoundParams::default();
            let s = ev.rhs(BoundId::SpectralCross, p).unwrap();
            let w = ev.rhs(BoundId::WeightedMean, p).unwrap();
            assert!(s <= w + 1e-9 * w.max(1.0), "{kind} seed {seed}");
        }
    }
}
