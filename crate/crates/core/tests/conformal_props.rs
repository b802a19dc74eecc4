use cga_core::{ConformalModel, Convention, RoundKind, TargetPoint};
use proptest::prelude::*;

fn coords(n: usize) -> impl Strategy<Value = TargetPoint> {
    proptest::collection::vec(-20.0f64..20.0, n).prop_map(TargetPoint::new)
}

fn model_alias() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("E2"), Just("M11")]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn embed_then_project_is_identity(alias in model_alias(), x in coords(2), w in 0.1f64..10.0) {
        let m = ConformalModel::from_alias(alias).unwrap();
        let p = m.embed_point(&x).unwrap();
        prop_assert!(p.scalar_product(&p).unwrap().abs() < 1e-10 * (1.0 + p.norm() * p.norm()));
        // Projection ignores the homogeneous weight.
        let back = m.project_point(&p.scale(w)).unwrap();
        for (a, b) in back.coords().iter().zip(x.coords()) {
            prop_assert!((a - b).abs() < 1e-12 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn distance_matches_coordinates(alias in model_alias(), a in coords(2), b in coords(2)) {
        let m = ConformalModel::from_alias(alias).unwrap();
        let oracle: f64 = (0..2)
            .map(|i| m.target().square(i) * (a.coords()[i] - b.coords()[i]).powi(2))
            .sum();
        let d = m.squared_distance(&a, &b, Convention::Standard).unwrap();
        prop_assert!((d - oracle).abs() < 1e-10 * (1.0 + oracle.abs()));
        let literal = m.squared_distance(&a, &b, Convention::Paper).unwrap();
        prop_assert!((literal + 0.5 * oracle).abs() < 1e-10 * (1.0 + oracle.abs()));
    }

    #[test]
    fn dual_round_sign_tracks_radius(c in coords(2), r2 in prop_oneof![-9.0f64..-0.1, 0.1f64..9.0]) {
        let m = ConformalModel::from_alias("M11").unwrap();
        let s = m.dual_round(&c, r2).unwrap();
        let sq = s.blade.scalar_product(&s.blade).unwrap();
        prop_assert!((sq - r2).abs() < 1e-9 * (1.0 + s.blade.norm().powi(2)));
        let want = if r2 > 0.0 { RoundKind::ShellSpacelike } else { RoundKind::ShellTimelike };
        prop_assert_eq!(s.kind, want);
    }

    #[test]
    fn points_on_a_circle_are_incident(
        cx in -3.0f64..3.0, cy in -3.0f64..3.0, r in 0.5f64..5.0,
        t in proptest::array::uniform4(0.0f64..std::f64::consts::TAU),
    ) {
        let at = |a: f64| TargetPoint::new(vec![cx + r * a.cos(), cy + r * a.sin()]);
        let gap = |a: f64, b: f64| (a - b).abs().min(std::f64::consts::TAU - (a - b).abs());
        prop_assume!(gap(t[0], t[1]) > 0.2 && gap(t[1], t[2]) > 0.2 && gap(t[0], t[2]) > 0.2);
        let m = ConformalModel::from_alias("E2").unwrap();
        let s = m.circle_through(&at(t[0]), &at(t[1]), &at(t[2])).unwrap();
        prop_assert_eq!(s.kind, RoundKind::Circle);
        let d = m.dualize(&s);
        prop_assert!(m.is_incident(&at(t[3]), &s).unwrap());
        prop_assert!(m.is_incident(&at(t[3]), &d).unwrap());
        let off = TargetPoint::new(vec![cx + (r + 0.01) * t[3].cos(), cy + (r + 0.01) * t[3].sin()]);
        prop_assert!(!m.is_incident(&off, &s).unwrap());
        prop_assert!(!m.is_incident(&off, &d).unwrap());
    }
}
