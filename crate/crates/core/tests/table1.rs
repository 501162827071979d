use pps_core::models::{pulse_spectrum, PulseParams, PulseSolver};

const PARAMS: PulseParams = PulseParams { a: 100.0, b: -50.0, lambda: 1.0 };

const COLUMN_100: [f64; 6] =
    [32.769451481023, 23.244111726155, 15.147885796825, 8.556078499364, 3.599423896564, 0.569839032667];

fn levels(n: usize) -> Vec<f64> {
    pulse_spectrum(&PARAMS, &PulseSolver::with_n(n)).unwrap().iter().map(|e| -e).collect()
}

#[test]
fn converged_column() {
    let got = levels(100);
    assert_eq!(got.len(), 6);
    for (g, w) in got.iter().zip(COLUMN_100) {
        assert!((g - w).abs() <= 1e-11 * w, "{g} vs {w}");
    }
}

#[test]
fn upper_levels_converge_first() {
    let converged = levels(100);
    let small = levels(15);
    let dev: Vec<f64> = small.iter().zip(&converged).map(|(s, c)| (s - c).abs() / c).collect();
    assert!(dev[0] < 1e-12 && dev[1] < 1e-12, "{dev:?}");
    assert!(dev[3] < dev[4] && dev[4] < dev[5], "{dev:?}");
}

#[test]
fn truncation_approaches_from_below() {
    // the truncated matrices are compressions, so every level rises with N
    let converged = levels(100);
    for n in [12, 15, 20] {
        for (s, c) in levels(n).iter().zip(&converged) {
            assert!(*s <= c + 1e-11 * c, "N = {n}: {s} > {c}");
        }
    }
}

#[test]
fn stable_between_fifty_and_two_hundred() {
    for (a, b) in levels(50).iter().zip(levels(200)) {
        assert!((a - b).abs() <= 1e-12 * b);
    }
}
