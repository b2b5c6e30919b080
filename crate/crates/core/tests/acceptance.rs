//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them) and asserting both
//! the mathematical content and its time budget.

use std::time::Instant;

use betti_core::arith::{parse_rat, rat, rat_int, BiPoly, IntPoly};
use betti_core::branches::{
    check_crossing_shadow, check_figure_reproduction, check_scaled_limit,
};
use betti_core::identities::{
    verify_g_limit_identity, verify_getzler_param, verify_phi_pde, verify_psi_power,
    verify_slice_slope, verify_u_ode, verify_weight_identity, WeightFamily,
};
use betti_core::recurrences::Cache;
use betti_core::verify::{
    check_fhat_root_location, check_fm_real_rooted, check_interlacing_step,
    check_k_root_structure, check_real_rooted, check_root_location, check_rulc, coeff_sequence,
    ulc_report,
};

fn run(criterion: usize, label: &str, budget_secs: f64, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("criterion {criterion:2} PASS ({elapsed:7.2}s) {label}"),
        Err(e) => println!("criterion {criterion:2} FAIL ({elapsed:7.2}s) {label}: {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {criterion} failed: {e}");
    }
    assert!(
        elapsed < budget_secs,
        "criterion {criterion} exceeded its {budget_secs}s budget ({elapsed:.2}s)"
    );
}

#[test]
fn criterion_01_golden_polynomials() {
    run(1, "golden polynomials, bit-exact", 1.0, || {
        let c = Cache::new();
        if c.p(4) != IntPoly::from_i64(&[1, 1]) {
            return Err("P_4".into());
        }
        if c.p(5) != IntPoly::from_i64(&[1, 5, 1]) {
            return Err("P_5".into());
        }
        if c.p(6) != IntPoly::from_i64(&[1, 16, 16, 1]) {
            return Err("P_6".into());
        }
        if c.p(7) != IntPoly::from_i64(&[1, 42, 127, 42, 1]) {
            return Err("P_7".into());
        }
        if c.f(2) != BiPoly::y() {
            return Err("F_2".into());
        }
        let f3 = BiPoly::new(vec![
            IntPoly::zero(),
            IntPoly::from_i64(&[-2, 1]),
            IntPoly::from_i64(&[3]),
        ]);
        if c.f(3) != f3 {
            return Err("F_3".into());
        }
        let f4 = BiPoly::new(vec![
            IntPoly::zero(),
            IntPoly::from_i64(&[6, -5, 1]),
            IntPoly::from_i64(&[-20, 10]),
            IntPoly::from_i64(&[15]),
        ]);
        if c.f(4) != f4 {
            return Err("F_4".into());
        }
        // published factored form: y (t^2 + 10ty - 5t + 15y^2 - 20y + 6)
        let inner = BiPoly::new(vec![
            IntPoly::from_i64(&[6, -5, 1]),
            IntPoly::from_i64(&[-20, 10]),
            IntPoly::from_i64(&[15]),
        ]);
        if c.f(4) != &BiPoly::y() * &inner {
            return Err("F_4 factored form".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_02_real_rootedness_to_25() {
    run(2, "P_n square-free, n-3 negative simple roots, 4 <= n <= 25", 60.0, || {
        let c = Cache::new();
        for n in 4..=25u32 {
            check_real_rooted(&c.p(n), n as usize - 3).map_err(|e| format!("n = {n}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_03_interlacing_to_20() {
    run(3, "strict interlacing of P_n, P_{n+1}, 4 <= n <= 20", 120.0, || {
        let c = Cache::new();
        for n in 4..=20u32 {
            check_interlacing_step(&c, n).map_err(|e| format!("n = {n}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_ultra_log_concavity() {
    run(4, "1-ULC margins, 2-ULC to n = 15, r = 3, 4 reported", 10.0, || {
        let c = Cache::new();
        for n in 3..=25u32 {
            let coeffs = coeff_sequence(&c.p(n));
            check_rulc("P", &coeffs, 1).map_err(|e| format!("P_{n} 1-ULC: {e}"))?;
        }
        for n in 1..=25u32 {
            let coeffs = coeff_sequence(&c.ptilde(n));
            check_rulc("Ptilde", &coeffs, 1).map_err(|e| format!("Ptilde_{n} 1-ULC: {e}"))?;
        }
        for n in 4..=15u32 {
            let coeffs = coeff_sequence(&c.p(n));
            check_rulc("P", &coeffs, 2).map_err(|e| format!("P_{n} 2-ULC: {e}"))?;
        }
        // higher orders are reported, not asserted
        for n in [10u32, 15, 20, 25] {
            let coeffs = coeff_sequence(&c.p(n));
            for r in [3u32, 4] {
                let report = ulc_report(format!("P_{n}"), &coeffs, r);
                println!(
                    "  report: P_{n} is {}{}-ULC",
                    if report.passes() { "" } else { "not " },
                    r
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_fixed_t_root_location() {
    run(5, "fixed-t root structure of F_m and Fhat_n, indices 2..12", 30.0, || {
        let c = Cache::new();
        let samples = [rat(-1, 2), rat_int(-1), rat_int(-3), rat_int(-10)];
        for m in 2..=12u32 {
            for t0 in &samples {
                check_root_location(&c, m, t0)
                    .map_err(|e| format!("F_{m} at t = {t0}: {e}"))?;
                check_fhat_root_location(&c, m, t0)
                    .map_err(|e| format!("Fhat_{m} at t = {t0}: {e}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_identity_suite() {
    run(6, "generating-function and weight identities", 60.0, || {
        let c = Cache::new();
        verify_u_ode(&c, 15).map_err(|e| format!("ODE at order 15: {e}"))?;
        verify_phi_pde(&c, 15).map_err(|e| format!("PDE at order 15: {e}"))?;
        for m in 2..=15u32 {
            verify_slice_slope(&c, m).map_err(|e| format!("slice/slope m = {m}: {e}"))?;
        }
        verify_getzler_param(&c, 10).map_err(|e| format!("parametrization at order 10: {e}"))?;
        verify_psi_power(&c, 12).map_err(|e| format!("binomial power at order 12: {e}"))?;
        for i in 1..=12u32 {
            verify_weight_identity(&c, WeightFamily::F, i)
                .map_err(|e| format!("F weight {i}: {e}"))?;
            verify_weight_identity(&c, WeightFamily::Fhat, i)
                .map_err(|e| format!("Fhat weight {i}: {e}"))?;
            verify_g_limit_identity(&c, i).map_err(|e| format!("G limit {i}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_fm_real_rootedness() {
    run(7, "(1+t) | Ptilde_n and Phat_n real-rooted, 1 <= n <= 20", 60.0, || {
        let c = Cache::new();
        for n in 1..=20u32 {
            check_fm_real_rooted(&c, n).map_err(|e| format!("n = {n}: {e}"))?;
        }
        let square = &IntPoly::from_i64(&[1, 1]) * &IntPoly::from_i64(&[1, 1]);
        if c.ptilde(2) != square {
            return Err("Ptilde_2 != (1+t)^2".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_08_figure_reproduction() {
    run(8, "published branch table and crossings within 5e-7", 5.0, || {
        let c = Cache::new();
        check_figure_reproduction(&c)
    });
}

#[test]
fn criterion_09_crossing_shadow() {
    run(9, "one sign change per branch, one root per bracket, 5 <= n <= 10", 120.0, || {
        let c = Cache::new();
        let width = rat(1, 1_000_000);
        for n in 5..=10u32 {
            check_crossing_shadow(&c, n, &width).map_err(|e| format!("n = {n}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_10_scaled_limit_and_k_structure() {
    run(10, "scaled branches near G_m roots; K_n root structure", 30.0, || {
        let c = Cache::new();
        let t_big = rat_int(-1_000_000);
        let tol = rat(1, 1000);
        for m in 3..=8u32 {
            check_scaled_limit(&c, m, &t_big, &tol).map_err(|e| format!("m = {m}: {e}"))?;
        }
        for n in 2..=12u32 {
            check_k_root_structure(&c, n).map_err(|e| format!("K_{n}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn figure_grid_has_29_times() {
    let grid = betti_core::branches::figure_grid();
    assert_eq!(grid.len(), 29);
    // the two special times are the printed crossing approximations
    assert!(grid.contains(&parse_rat("-4.79128785").unwrap()));
    assert!(grid.contains(&parse_rat("-0.20871215").unwrap()));
}
