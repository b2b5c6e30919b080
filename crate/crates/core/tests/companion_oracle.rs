//! Numeric cross-validation of the certified root isolation: midpoints of
//! the exact isolation intervals must match the eigenvalues of the
//! (balanced) companion matrix computed by a shifted QR iteration. The
//! eigensolver shares no code path with the Sturm machinery, so agreement
//! is meaningful.

use betti_core::arith::{rat, Rat};
use betti_core::realroot::{isolate_roots, Domain};
use betti_core::recurrences::Cache;

/// Real eigenvalues of the companion matrix of `coeffs` (lowest degree
/// first, leading nonzero). Panics if the QR iteration stalls or finds a
/// complex pair; the inputs here are real-rooted by theorem.
#[allow(clippy::needless_range_loop)]
fn companion_eigenvalues(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    assert!(n >= 1 && coeffs[n] != 0.0);
    let mut h = vec![vec![0.0f64; n]; n];
    for i in 1..n {
        h[i][i - 1] = 1.0;
    }
    for i in 0..n {
        h[i][n - 1] = -coeffs[i] / coeffs[n];
    }
    balance(&mut h);
    let mut eigen = Vec::with_capacity(n);
    let mut hi = n; // active block is 0..hi
    let mut iterations = 0;
    while hi > 0 {
        if hi == 1 {
            eigen.push(h[0][0]);
            hi = 0;
            continue;
        }
        // deflate negligible subdiagonals from the bottom of the block
        let last = hi - 1;
        let sub = h[last][last - 1].abs();
        let scale = h[last][last].abs() + h[last - 1][last - 1].abs();
        if sub <= 1e-13 * (scale + 1e-300) {
            eigen.push(h[last][last]);
            hi -= 1;
            continue;
        }
        iterations += 1;
        assert!(iterations < 200 * n, "QR iteration failed to converge");
        // Wilkinson-style shift from the trailing 2x2 block
        let a = h[last - 1][last - 1];
        let b = h[last - 1][last];
        let c = h[last][last - 1];
        let d = h[last][last];
        let tr = a + d;
        let det = a * d - b * c;
        let disc = tr * tr / 4.0 - det;
        let shift = if disc >= 0.0 {
            let r = disc.sqrt();
            let e1 = tr / 2.0 + r;
            let e2 = tr / 2.0 - r;
            if (e1 - d).abs() < (e2 - d).abs() {
                e1
            } else {
                e2
            }
        } else {
            d
        };
        qr_step(&mut h, hi, shift);
    }
    eigen.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigen
}

/// One explicit single-shift QR step on the leading `m x m` Hessenberg
/// block, via Givens rotations.
#[allow(clippy::needless_range_loop)]
fn qr_step(h: &mut [Vec<f64>], m: usize, shift: f64) {
    for i in 0..m {
        h[i][i] -= shift;
    }
    let mut rotations = Vec::with_capacity(m - 1);
    for k in 0..m - 1 {
        let x = h[k][k];
        let z = h[k + 1][k];
        let r = (x * x + z * z).sqrt();
        let (c, s) = if r == 0.0 { (1.0, 0.0) } else { (x / r, z / r) };
        rotations.push((c, s));
        for j in k..m {
            let t1 = h[k][j];
            let t2 = h[k + 1][j];
            h[k][j] = c * t1 + s * t2;
            h[k + 1][j] = -s * t1 + c * t2;
        }
    }
    for (k, (c, s)) in rotations.iter().enumerate() {
        for i in 0..=(k + 1).min(m - 1) {
            let t1 = h[i][k];
            let t2 = h[i][k + 1];
            h[i][k] = c * t1 + s * t2;
            h[i][k + 1] = -s * t1 + c * t2;
        }
    }
    for i in 0..m {
        h[i][i] += shift;
    }
}

/// Parlett-Reinsch balancing with power-of-two scaling.
#[allow(clippy::needless_range_loop)]
fn balance(h: &mut [Vec<f64>]) {
    let n = h.len();
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += h[j][i].abs();
                    row += h[i][j].abs();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let mut factor = 1.0;
            let target = row / 2.0;
            let mut c = col;
            while c < target {
                factor *= 2.0;
                c *= 4.0;
            }
            let target = row * 2.0;
            while c > target {
                factor /= 2.0;
                c /= 4.0;
            }
            if (col * factor + row / factor) < 0.95 * (col + row) {
                done = false;
                for j in 0..n {
                    h[i][j] /= factor;
                }
                for j in 0..n {
                    h[j][i] *= factor;
                }
            }
        }
    }
}

fn to_f64_coeffs(p: &betti_core::IntPoly) -> Vec<f64> {
    p.coeffs()
        .iter()
        .map(|c| {
            let s = c.to_string();
            s.parse::<f64>().expect("coefficient fits in f64 range")
        })
        .collect()
}

fn rat_to_f64(x: &Rat) -> f64 {
    let n: f64 = x.numer().to_string().parse().unwrap();
    let d: f64 = x.denom().to_string().parse().unwrap();
    n / d
}

fn cross_validate(label: &str, p: &betti_core::IntPoly, domain: Domain) {
    let width = rat(1, 10_000);
    let list = isolate_roots(p, &domain, &width).unwrap();
    let eigen = companion_eigenvalues(&to_f64_coeffs(p));
    assert_eq!(
        list.len(),
        eigen.len(),
        "{label}: certified count vs eigenvalue count"
    );
    let tol = rat_to_f64(&width);
    for (iv, eig) in list.iter().zip(eigen.iter()) {
        let mid = rat_to_f64(&iv.midpoint());
        assert!(
            (mid - eig).abs() <= tol,
            "{label}: midpoint {mid} vs eigenvalue {eig}"
        );
    }
}

#[test]
fn quadratic_sanity() {
    // roots of x^2 - 2
    let eigen = companion_eigenvalues(&[-2.0, 0.0, 1.0]);
    assert!((eigen[0] + 2.0f64.sqrt()).abs() < 1e-12);
    assert!((eigen[1] - 2.0f64.sqrt()).abs() < 1e-12);
}

#[test]
fn moduli_polynomials_match_eigenvalues() {
    let c = Cache::new();
    for n in 4..=12u32 {
        cross_validate(&format!("P_{n}"), &c.p(n), Domain::real_line());
    }
}

#[test]
fn fm_residuals_match_eigenvalues() {
    let c = Cache::new();
    for n in 2..=12u32 {
        cross_validate(&format!("Phat_{n}"), &c.phat(n).unwrap(), Domain::real_line());
    }
}

#[test]
fn scaled_limit_families_match_eigenvalues() {
    let c = Cache::new();
    for m in 2..=12u32 {
        cross_validate(&format!("G_{m}"), &c.g(m), Domain::real_line());
        cross_validate(&format!("K_{m}"), &c.k(m), Domain::real_line());
    }
}

#[test]
fn interlacing_agrees_with_numeric_roots() {
    // numeric confirmation of the exact interlacing verdicts
    let c = Cache::new();
    for n in 4..=10u32 {
        let p = companion_eigenvalues(&to_f64_coeffs(&c.p(n)));
        let q = companion_eigenvalues(&to_f64_coeffs(&c.p(n + 1)));
        for i in 0..p.len() {
            assert!(q[i] < p[i] && p[i] < q[i + 1], "n = {n}, i = {i}");
        }
        assert!(betti_core::realroot::check_interlacing(&c.p(n), &c.p(n + 1)).unwrap());
    }
}
