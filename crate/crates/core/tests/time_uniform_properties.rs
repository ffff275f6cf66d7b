use localdkw::{
    build_schedule, g_partial_sum, g_sum_upper_bound, invert_radius, tu_radius, tu_radius_global,
    tu_radius_with, GFunction, RadiusQuery, Scheme, TailSide, TimeUniformConfig, UnitInterval,
};

fn unclipped_massart(n: usize, level: f64) -> localdkw::Result<f64> {
    Ok(((1.0 / level).ln() / (2.0 * n as f64)).sqrt())
}

#[test]
fn massart_substitution_recovers_global_radius() {
    for horizon in [10usize, 100, 1000, 50_000] {
        for n in [1usize, 2, 7, 10, 99, 1000, 50_000] {
            if n > horizon {
                continue;
            }
            for delta in [0.001, 0.05, 0.1, 0.3, 0.49] {
                for eta in [1.01, 1.1, 1.5, 2.0] {
                    if n as f64 <= eta - 1.0 {
                        continue;
                    }
                    let cfg = TimeUniformConfig {
                        eta,
                        ..TimeUniformConfig::new(
                            horizon,
                            delta,
                            UnitInterval::FULL,
                            TailSide::EmpiricalAbove,
                        )
                    };
                    let a = tu_radius_with(n, &cfg, unclipped_massart).unwrap();
                    let b = tu_radius_global(n, horizon, delta, eta).unwrap();
                    assert!(
                        (a - b).abs() <= 1e-12,
                        "N={n} n={horizon} d={delta} eta={eta}"
                    );
                }
            }
        }
    }
}

#[test]
fn time_uniform_radius_dominates_fixed_sample_radius() {
    for (lo, hi) in [(0.0, 1.0), (0.0, 0.2), (0.6, 1.0)] {
        let iv = UnitInterval::new(lo, hi).unwrap();
        for tail in [TailSide::EmpiricalAbove, TailSide::EmpiricalBelow] {
            let cfg = TimeUniformConfig::new(400, 0.1, iv, tail);
            for n in [1usize, 5, 20, 100, 400] {
                let tu = tu_radius(n, &cfg).unwrap();
                let fixed = invert_radius(&RadiusQuery::new(n, 0.1, iv, tail))
                    .unwrap()
                    .epsilon;
                assert!(tu >= fixed, "[{lo},{hi}] {tail} n={n}: {tu} < {fixed}");
            }
        }
    }
}

#[test]
fn telescoping_weights_sum_to_one() {
    for t in [10usize, 1000, 100_000] {
        let partial = g_partial_sum(GFunction::TT1, t).unwrap();
        assert!((partial - t as f64 / (t as f64 + 1.0)).abs() < 1e-12);
        assert!((g_sum_upper_bound(GFunction::TT1, t).unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn catalog_sums_are_finite_and_tails_shrink() {
    for g in GFunction::catalog() {
        let a = g_sum_upper_bound(g, 10_000).unwrap();
        let b = g_sum_upper_bound(g, 1_000_000).unwrap();
        assert!(a.is_finite() && b <= a + 1e-9, "{g}: {b} > {a}");
    }
}

#[test]
fn log_weight_sums_exceed_one() {
    // Both weights are summable but their reciprocal sums are above 1, so
    // they cannot be used directly as failure-probability budgets.
    let logsq = g_partial_sum(GFunction::LogSq, 1_000_000).unwrap();
    assert!(logsq > 1.4);
    let loglog_first = 1.0 / localdkw::g_value(GFunction::LogLogSq, 1).unwrap();
    assert!(loglog_first > 3.0);
}

#[test]
fn klucb_budget_grows_slower_than_log() {
    let sched = build_schedule(Scheme::KlUcbB { xi: 3.0 }, 1_000_000).unwrap();
    let mut running = 0.0;
    let mut ratios = Vec::new();
    let checkpoints = [100usize, 1000, 10_000, 100_000, 1_000_000];
    let mut next = 0;
    for e in &sched.entries {
        running += e.k_t as f64 * e.delta_t;
        if e.t == checkpoints[next] {
            ratios.push(running / (e.t as f64).ln());
            next += 1;
            if next == checkpoints.len() {
                break;
            }
        }
    }
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
}
