use localdkw::{
    cvar_integrated_point, cvar_loss_bounds, cvar_loss_point, cvar_reward_bounds,
    cvar_reward_point, functional_bounds, make_ecdf, replication_sample, value_at_risk,
    EmpiricalCdf, LipschitzLedger, Partition, PhiSpec, RiskSide, VarKind,
};
use proptest::prelude::*;

/// Samples on a coarse lattice so that ties (atoms) are common, inside a
/// support `[a, b]` with `a >= 0`.
fn ecdf_strategy() -> impl Strategy<Value = EmpiricalCdf> {
    (
        prop::collection::vec(0u32..20, 1..=100),
        0.0f64..1.0,
        0.05f64..0.2,
        0.0f64..1.0,
    )
        .prop_map(|(ks, a, step, pad)| {
            let xs: Vec<f64> = ks.iter().map(|&k| a + 0.01 + k as f64 * step).collect();
            let b = a + 0.02 + 19.0 * step + pad;
            make_ecdf(&xs, (a, b)).unwrap()
        })
}

/// Either a generic level or one sitting exactly on a jump of `F_n`.
fn level_for(e: &EmpiricalCdf, u: f64, on_lattice: bool) -> f64 {
    let n = e.len();
    if on_lattice && n > 1 {
        let k = 1 + ((u * (n - 1) as f64) as usize).min(n - 2);
        k as f64 / n as f64
    } else {
        u.clamp(1e-3, 1.0 - 1e-3)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn optimization_and_integrated_forms_agree(
        e in ecdf_strategy(),
        u in 0.0f64..1.0,
        on_lattice in any::<bool>(),
    ) {
        let level = level_for(&e, u, on_lattice);
        let r0 = cvar_reward_point(&e, level).unwrap();
        let r1 = cvar_integrated_point(&e, level, RiskSide::Reward).unwrap();
        prop_assert!((r0 - r1).abs() <= 1e-12, "reward {level}: {r0} vs {r1}");
        let l0 = cvar_loss_point(&e, level).unwrap();
        let l1 = cvar_integrated_point(&e, level, RiskSide::Loss).unwrap();
        prop_assert!((l0 - l1).abs() <= 1e-12, "loss {level}: {l0} vs {l1}");
    }

    #[test]
    fn quantile_certificate_and_var_ordering(
        e in ecdf_strategy(),
        u in 0.0f64..1.0,
        on_lattice in any::<bool>(),
    ) {
        let level = level_for(&e, u, on_lattice);
        let x = value_at_risk(&e, level, VarKind::LowerVaR).unwrap();
        prop_assert!(e.eval_left(x) <= level && level <= e.eval(x));
        let up = value_at_risk(&e, level, VarKind::UpperVaR).unwrap();
        prop_assert!(x <= up);
        prop_assert!(e.eval(up) > level && e.eval_left(up) <= level);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bounds_bracket_the_point_and_widen_with_confidence(
        e in ecdf_strategy(),
        u in 0.02f64..0.98,
        d1 in 0.01f64..0.95,
        d2 in 0.01f64..0.95,
    ) {
        let (small, large) = (d1.min(d2), d1.max(d2));
        let reward = |d| cvar_reward_bounds(&e, u, d).unwrap();
        let loss = |d| cvar_loss_bounds(&e, u, d).unwrap();
        for (tight, wide) in [(reward(large), reward(small)), (loss(large), loss(small))] {
            for b in [tight, wide] {
                prop_assert!(b.lower <= b.point + 1e-12 && b.point <= b.upper + 1e-12);
            }
            prop_assert!(wide.lower <= tight.lower + 1e-12);
            prop_assert!(wide.upper + 1e-12 >= tight.upper);
        }
    }
}

#[test]
fn uniform_cvar_estimates() {
    let xs = replication_sample(8, 0, 10_000);
    let e = make_ecdf(&xs, (0.0, 1.0)).unwrap();
    assert!((cvar_reward_point(&e, 0.05).unwrap() - 0.025).abs() < 0.01);
    assert!((cvar_loss_point(&e, 0.95).unwrap() - 0.975).abs() < 0.01);
}

#[test]
fn loss_bounds_cover_uniform_truth() {
    let (n, kappa, delta, reps) = (200, 0.9, 0.1, 500u64);
    let truth = 1.0 - (1.0 - kappa) / 2.0;
    let hits = (0..reps)
        .filter(|&rep| {
            let e = make_ecdf(&replication_sample(77, rep, n), (0.0, 1.0)).unwrap();
            let b = cvar_loss_bounds(&e, kappa, delta).unwrap();
            b.lower <= truth && truth <= b.upper
        })
        .count();
    let coverage = hits as f64 / reps as f64;
    assert!(coverage >= 0.9 - 0.03, "coverage {coverage}");
}

#[test]
fn mean_functional_bounds_cover_uniform_mean() {
    let (n, reps) = (200, 500u64);
    let phi = PhiSpec::new(|y| 1.0 - y)
        .with_lower_right(LipschitzLedger::uniform(1.0).unwrap())
        .with_upper_left(LipschitzLedger::uniform(1.0).unwrap());
    let partition = Partition::uniform(10, 0.1).unwrap();
    let (mut low_ok, mut high_ok) = (0, 0);
    for rep in 0..reps {
        let e = make_ecdf(&replication_sample(1234, rep, n), (0.0, 1.0)).unwrap();
        let b = functional_bounds(&e, &phi, &partition, 1.0).unwrap();
        assert!(b.lower.unwrap() <= b.point && b.point <= b.upper.unwrap());
        low_ok += usize::from(b.lower.unwrap() <= 0.5);
        high_ok += usize::from(0.5 <= b.upper.unwrap());
    }
    let floor = 1.0 - partition.total_delta() - 0.03;
    assert!(low_ok as f64 / reps as f64 >= floor);
    assert!(high_ok as f64 / reps as f64 >= floor);
}
