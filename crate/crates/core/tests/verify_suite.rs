//! End-to-end checks of the verification layer against live zero scans and
//! coefficient tables.

use std::sync::OnceLock;

use xiprime::arith::ArithTable;
use xiprime::verify::{
    ef_lhs, ef_report, ef_rhs, mean_value_integral, r1_moment_check, EfRequest,
};
use xiprime::zeros::{find_zeros, GridPolicy, ZeroKind, ZeroSet};

fn xip_zeros() -> &'static ZeroSet {
    static ZS: OnceLock<ZeroSet> = OnceLock::new();
    ZS.get_or_init(|| {
        find_zeros(ZeroKind::XiPrime, 0.0, 1600.0, &GridPolicy::default()).unwrap()
    })
}

fn table() -> &'static ArithTable {
    static TB: OnceLock<ArithTable> = OnceLock::new();
    TB.get_or_init(|| ArithTable::build(200_000, 8, 1 << 30).unwrap())
}

#[test]
fn lhs_is_real_positive_at_x_one() {
    let zs = xip_zeros();
    for &t in &[30.0, 80.0, 150.0, 400.0, 900.0] {
        let got = ef_lhs(1.0, t, 1.5, zs, 500.0).unwrap();
        // Every term is a positive Lorentzian weight times x^{i gamma} = 1.
        assert_eq!(got.value.im, 0.0, "t = {t}");
        assert!(got.value.re > 0.0, "t = {t}");
        // The windowed sum tracks 2 pi times the local density ~ log(t/2pi)/2pi.
        let density = (t / std::f64::consts::TAU).ln() / std::f64::consts::TAU;
        let expect = 2.0 * std::f64::consts::PI * density;
        assert!(
            (got.value.re - expect).abs() < 0.75 * expect.max(1.0),
            "t = {t}: lhs {} vs coarse density {expect}",
            got.value.re
        );
    }
}

#[test]
fn window_doubling_moves_lhs_less_than_tail_bound() {
    let zs = xip_zeros();
    for &(x, t) in &[(1.0, 50.0), (10.0, 50.0), (100.0, 50.0), (2.0, 100.0)] {
        let narrow = ef_lhs(x, t, 1.5, zs, 500.0).unwrap();
        let wide = ef_lhs(x, t, 1.5, zs, 1000.0).unwrap();
        let moved = (narrow.value - wide.value).norm();
        assert!(
            moved <= narrow.tail_bound,
            "x={x} t={t}: moved {moved:.3e} > bound {:.3e}",
            narrow.tail_bound
        );
    }
}

#[test]
fn rhs_conjugates_under_t_negation() {
    let tb = table();
    for &(x, t) in &[(10.0, 50.0), (3.0, 120.0)] {
        let plus = ef_rhs(x, t, 1.5, 5, tb).unwrap().value;
        let minus = ef_rhs(x, -t, 1.5, 5, tb).unwrap().value;
        let dev = (plus - minus.conj()).norm();
        assert!(dev <= 1e-12 * plus.norm(), "x={x} t={t}: dev {dev:.3e}");
    }
}

#[test]
fn desk_samples_sit_inside_their_budgets() {
    let zs = xip_zeros();
    let tb = table();
    let mut requests = Vec::new();
    for &x in &[1.0, 10.0, 100.0] {
        for &t in &[50.0, 200.0, 1000.0] {
            requests.push(EfRequest { x, t, sigma: 1.5, k: 5 });
        }
    }
    let report = ef_report(&requests, zs, tb, 500.0).unwrap();
    assert_eq!(report.samples.len(), 9);
    for s in &report.samples {
        assert!(
            s.residual <= 3.0 * s.budget,
            "x={} t={}: residual {:.4} vs 3x budget {:.4}",
            s.x,
            s.t,
            s.residual,
            s.budget
        );
        assert!(s.rel_residual.is_finite() && s.rel_residual >= 0.0);
    }
    // Measured working points: outside the three corners where the
    // formula's own O(1)-scale error terms dominate the small left side
    // (x=1 at t=200 and x=100 at t <= 200), the sides agree to a few
    // percent; at those corners the budget column tells the story.
    for s in &report.samples {
        let hard = (s.x == 1.0 && s.t == 200.0) || (s.x == 100.0 && s.t <= 200.0);
        if !hard {
            assert!(
                s.rel_residual <= 0.1,
                "x={} t={}: rel {:.4}",
                s.x,
                s.t,
                s.rel_residual
            );
        }
    }
}

#[test]
fn report_serializes_deterministically() {
    let zs = xip_zeros();
    let tb = table();
    let requests = [
        EfRequest { x: 10.0, t: 50.0, sigma: 1.5, k: 5 },
        EfRequest { x: 1.0, t: 50.0, sigma: 1.5, k: 5 },
    ];
    let a = serde_json::to_string(&ef_report(&requests, zs, tb, 500.0).unwrap()).unwrap();
    let b = serde_json::to_string(&ef_report(&requests, zs, tb, 500.0).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(a.contains("truncation_note"));
}

#[test]
fn mean_value_interval_length_is_exact_at_zero_powers() {
    let mv = mean_value_integral(1.0, 0, 0, 1.5, 1.0e4).unwrap();
    assert!((mv.numeric.re - 1.0e4).abs() <= 1e-9 * 1.0e4);
    assert!(mv.numeric.im.abs() <= 1e-9 * 1.0e4);
}

#[test]
fn mean_value_deviation_shrinks_with_height() {
    // |numeric - predicted|/predicted falls from T = 1e3 to T = 1e5 for the
    // three power pairs the envelope lemma is used with.
    for &(k, l) in &[(1u32, 0u32), (1, 1), (2, 1)] {
        let lo = mean_value_integral(1.0, k, l, 1.5, 1.0e3).unwrap();
        let hi = mean_value_integral(1.0, k, l, 1.5, 1.0e5).unwrap();
        let dev_lo = (lo.numeric - lo.predicted).norm() / lo.predicted.re;
        let dev_hi = (hi.numeric - hi.predicted).norm() / hi.predicted.re;
        assert!(
            dev_hi < dev_lo,
            "(k,l)=({k},{l}): deviation {dev_lo:.4} -> {dev_hi:.4}"
        );
    }
}

#[test]
fn mean_value_first_power_band_at_moderate_height() {
    // (1,0) at T = 1e4 sits inside the stated band; the higher pairs carry
    // second-order log corrections of 30-60 percent at this height (the
    // 1/log expansion of the integrand loses a full power only slowly).
    let mv = mean_value_integral(1.0, 1, 0, 1.5, 1.0e4).unwrap();
    let ratio = mv.numeric.re / mv.predicted.re;
    assert!(ratio > 0.8 && ratio < 1.2, "ratio {ratio:.4}");
}

#[test]
fn mean_value_off_one_x_stays_small() {
    // x = 2: the integral is O(1/log x); report the constant.
    let mv = mean_value_integral(2.0, 1, 0, 1.5, 1.0e4).unwrap();
    let c = mv.numeric.norm() * 2.0f64.ln();
    assert!(c > 0.0 && c < 30.0, "C = {c:.3}");
    assert!(mv.predicted.norm() == 0.0);
}

#[test]
fn moment_grid_converges_and_prediction_is_k_stable() {
    let tb = table();
    let a = r1_moment_check(100.0, 5000.0, 4, tb).unwrap();
    let b = r1_moment_check(100.0, 5000.0, 4, tb).unwrap();
    assert_eq!(a.numeric.to_bits(), b.numeric.to_bits());
    assert_eq!(a.n_cut, 3200);
    assert!(a.est_rel <= 1e-3);
    // Boundary mass keeps the raw integral above the diagonal prediction.
    assert!(a.numeric > a.predicted);
    let k8 = r1_moment_check(100.0, 5000.0, 8, tb).unwrap();
    let drift = (a.predicted - k8.predicted).abs() / a.predicted;
    assert!(drift < 0.02, "prediction moved {drift:.4} from K=4 to K=8");
}

#[test]
fn verify_preconditions_surface_as_errors() {
    let zs = xip_zeros();
    let tb = table();
    // Coverage shortfall: t + window beyond the scan.
    assert!(ef_lhs(1.0, 1200.0, 1.5, zs, 500.0).is_err());
    // Narrow window.
    assert!(ef_lhs(1.0, 50.0, 1.5, zs, 100.0).is_err());
    // Truncation order beyond the table.
    assert!(ef_rhs(1.0, 50.0, 1.5, 9, tb).is_err());
    // Moment x below the supported floor.
    assert!(r1_moment_check(10.0, 5000.0, 4, tb).is_err());
}
