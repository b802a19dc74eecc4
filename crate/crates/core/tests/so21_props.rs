use cga_core::so21::{build_rep, two_sided_spectrum_check};
use cga_core::RepLabel;
use proptest::prelude::*;

fn label() -> impl Strategy<Value = RepLabel> {
    prop_oneof![
        (0.05f64..3.0, prop_oneof![Just(0.0), Just(0.5)]).prop_map(|(s, e)| RepLabel::principal(s, e).unwrap()),
        (1u32..6).prop_map(|k| RepLabel::discrete_plus(k as f64).unwrap()),
        (1u32..6).prop_map(|k| RepLabel::discrete_minus(k as f64).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interior_identities_hold(l in label(), m in 4usize..24) {
        let rep = build_rep(l, m).unwrap();
        prop_assert!(rep.check_commutators().max_interior() <= 1e-10);
        prop_assert!(rep.check_casimir().max_interior() <= 1e-10);
        prop_assert!(rep.casimir_commutator_residual() <= 1e-10);
        prop_assert!(rep.hermiticity_residual() <= 1e-12);
    }

    #[test]
    fn residuals_do_not_depend_on_truncation(l in label()) {
        let a = build_rep(l, 10).unwrap().check_casimir();
        let b = build_rep(l, 40).unwrap().check_casimir();
        prop_assert!((a.max_interior() - b.max_interior()).abs() < 1e-12);
    }

    #[test]
    fn spectrum_sidedness(l in label()) {
        let principal = matches!(l, RepLabel::Principal { .. });
        prop_assert_eq!(two_sided_spectrum_check(&l), principal);
    }
}
