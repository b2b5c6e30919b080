//! Property checkers that turn the structural theorems about the
//! polynomial families into exact per-instance verdicts: real-rootedness,
//! strict interlacing, root location of the deformations, sign
//! alternation at the crossing times, and r-ultra-log-concavity.
//!
//! Every check is exact. Signs at irrational roots are obtained by
//! certified interval sign evaluation: the isolating interval is refined
//! until the second polynomial provably has no root inside it, and then a
//! single rational evaluation decides the sign everywhere on the interval.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{rat_to_string, IntPoly, Rat};
use crate::error::Error;
use crate::realroot::{
    check_interlacing, count_roots_in, is_square_free, isolate_roots, refine, Domain,
    RootInterval,
};
use crate::recurrences::{binomial, Cache};

/// Outcome of one claim at one index. A failed verdict always carries a
/// witness describing what broke.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub index: i64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u128,
}

/// Runs a check under a claim label, timing it and capturing the witness.
pub fn verdict(claim: impl Into<String>, index: i64, f: impl FnOnce() -> CheckResult) -> Verdict {
    let start = Instant::now();
    let outcome = f();
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(()) => Verdict {
            claim: claim.into(),
            index,
            pass: true,
            witness: None,
            millis,
        },
        Err(witness) => Verdict {
            claim: claim.into(),
            index,
            pass: false,
            witness: Some(witness),
            millis,
        },
    }
}

/// `Ok(())` on pass, or a witness string explaining the failure.
pub type CheckResult = std::result::Result<(), String>;

fn fail(msg: impl Into<String>) -> CheckResult {
    Err(msg.into())
}

/// Square-free, exactly `expected` distinct real roots, all strictly
/// negative.
pub fn check_real_rooted(p: &IntPoly, expected: usize) -> CheckResult {
    if p.is_zero() {
        return fail("zero polynomial");
    }
    if !is_square_free(p).map_err(|e| e.to_string())? {
        return fail("not square-free");
    }
    let neg = count_roots_in(p, &Domain::below(Rat::zero(), false)).map_err(|e| e.to_string())?;
    if neg != expected {
        return fail(format!("expected {expected} negative roots, found {neg}"));
    }
    let nonneg =
        count_roots_in(p, &Domain::above(Rat::zero(), true)).map_err(|e| e.to_string())?;
    if nonneg != 0 {
        return fail(format!("{nonneg} roots are >= 0"));
    }
    Ok(())
}

/// Strict interlacing of the roots of `P_n` between those of `P_{n+1}`.
/// `n = 3` is the vacuous base case: the constant has no roots, and the
/// single root of `P_4` must be negative.
pub fn check_interlacing_step(cache: &Cache, n: u32) -> CheckResult {
    if n < 3 {
        return fail("interlacing is considered from n = 3");
    }
    let p = cache.p(n);
    let q = cache.p(n + 1);
    if n == 3 {
        return check_real_rooted(&q, 1);
    }
    match check_interlacing(&p, &q) {
        Ok(true) => Ok(()),
        Ok(false) => fail("roots do not strictly interlace"),
        Err(e) => fail(e.to_string()),
    }
}

/// Exact r-ultra-log-concavity report. `margins[i-1]` is the value of
/// `(a_i / C_i^r)^2 - (a_{i-1} / C_{i-1}^r)(a_{i+1} / C_{i+1}^r)` with
/// `C_i = binomial(len-1, i)`; the sequence is r-ULC iff all margins are
/// nonnegative.
#[derive(Debug, Clone)]
pub struct UlcReport {
    pub label: String,
    pub r: u32,
    pub margins: Vec<Rat>,
}

impl UlcReport {
    pub fn passes(&self) -> bool {
        self.margins.iter().all(|m| !m.is_negative())
    }

    pub fn first_failure(&self) -> Option<(usize, &Rat)> {
        self.margins
            .iter()
            .enumerate()
            .find(|(_, m)| m.is_negative())
            .map(|(i, m)| (i + 1, m))
    }
}

/// Builds the exact margin table for a positive coefficient sequence.
pub fn ulc_report(label: impl Into<String>, coeffs: &[BigInt], r: u32) -> UlcReport {
    assert!(
        coeffs.iter().all(|c| c.is_positive()),
        "r-ULC is defined for positive sequences"
    );
    let n = coeffs.len() - 1;
    let weight = |i: usize| -> Rat {
        let c = binomial(n, i).pow(r);
        Rat::new(coeffs[i].clone(), c)
    };
    let mut margins = Vec::new();
    for i in 1..n {
        let mid = weight(i);
        let m = &mid * &mid - weight(i - 1) * weight(i + 1);
        margins.push(m);
    }
    UlcReport {
        label: label.into(),
        r,
        margins,
    }
}

pub fn check_rulc(label: &str, coeffs: &[BigInt], r: u32) -> CheckResult {
    let report = ulc_report(label, coeffs, r);
    match report.first_failure() {
        None => Ok(()),
        Some((i, m)) => fail(format!("margin at i={i} is {} < 0", rat_to_string(m))),
    }
}

/// Palindromic (sequence equals its reversal) and weakly unimodal.
pub fn check_palindrome_unimodal(coeffs: &[BigInt]) -> CheckResult {
    if coeffs.is_empty() {
        return fail("empty coefficient sequence");
    }
    let reversed: Vec<_> = coeffs.iter().rev().cloned().collect();
    if coeffs != reversed.as_slice() {
        return fail("not palindromic");
    }
    let poly = IntPoly::new(coeffs.to_vec());
    if !crate::recurrences::is_unimodal(&poly) {
        return fail("not unimodal");
    }
    Ok(())
}

/// Integer polynomial in `y` carrying the slice of a deformation at a
/// fixed rational `t0`; clearing denominators rescales by a positive
/// constant and so keeps every root and every sign query intact.
pub fn slice_at_t(f: &crate::arith::BiPoly, t0: &Rat) -> IntPoly {
    f.eval_t(t0).clear_denominators()
}

/// Fixed-t root structure of the deformation `F_m`: a simple root at
/// `y = 0`, exactly `m - 2` simple roots in the open interval
/// `(0, 1 - t0)`, and nothing anywhere else.
pub fn check_root_location(cache: &Cache, m: u32, t0: &Rat) -> CheckResult {
    if m < 2 {
        return fail("root location is considered from m = 2");
    }
    if !t0.is_negative() {
        return fail("t0 must be negative");
    }
    let q = slice_at_t(&cache.f(m), t0);
    let expected_interior = m as usize - 2;
    check_deformation_roots(&q, true, expected_interior, t0)
}

/// Fixed-t root structure of the residual deformation: `n - 1` simple
/// roots in `(0, 1 - t0)`, no root at zero, nothing elsewhere.
pub fn check_fhat_root_location(cache: &Cache, n: u32, t0: &Rat) -> CheckResult {
    if n < 2 {
        return fail("root location is considered from n = 2");
    }
    if !t0.is_negative() {
        return fail("t0 must be negative");
    }
    let q = slice_at_t(&cache.fhat(n), t0);
    let expected_interior = n as usize - 1;
    check_deformation_roots(&q, false, expected_interior, t0)
}

fn check_deformation_roots(
    q: &IntPoly,
    root_at_zero: bool,
    expected_interior: usize,
    t0: &Rat,
) -> CheckResult {
    if q.is_zero() {
        return fail("slice is the zero polynomial");
    }
    if !is_square_free(q).map_err(|e| e.to_string())? {
        return fail("slice is not square-free, so some root is not simple");
    }
    let zero = Rat::zero();
    let upper = Rat::one() - t0;
    let at_zero = q.sign_at(&zero) == 0;
    if at_zero != root_at_zero {
        return fail(if root_at_zero {
            "missing the root at y = 0"
        } else {
            "unexpected root at y = 0"
        });
    }
    let interior = count_roots_in(q, &Domain::open(zero.clone(), upper.clone()))
        .map_err(|e| e.to_string())?;
    if interior != expected_interior {
        return fail(format!(
            "expected {expected_interior} roots in (0, {}), found {interior}",
            rat_to_string(&upper)
        ));
    }
    let below = count_roots_in(q, &Domain::below(zero, false)).map_err(|e| e.to_string())?;
    if below != 0 {
        return fail(format!("{below} roots below y = 0"));
    }
    let above =
        count_roots_in(q, &Domain::above(upper.clone(), true)).map_err(|e| e.to_string())?;
    if above != 0 {
        return fail(format!("{above} roots in [{}, +inf)", rat_to_string(&upper)));
    }
    Ok(())
}

/// Refines an isolating interval of `base` until `other` provably has no
/// root inside it, then returns the certified constant sign of `other`
/// over the whole interval.
pub fn certified_sign_on_interval(
    base: &IntPoly,
    iv: &RootInterval,
    other: &IntPoly,
    budget: usize,
) -> std::result::Result<i8, Error> {
    if iv.is_exact() {
        return Ok(other.sign_at(iv.lo()));
    }
    let mut iv = iv.clone();
    for _ in 0..budget {
        let inside = count_roots_in(other, &Domain::closed(iv.lo().clone(), iv.hi().clone()))?;
        if inside == 0 {
            return Ok(other.sign_at(&iv.midpoint()));
        }
        let tighter = iv.width() / crate::arith::rat_int(4);
        iv = refine(base, &iv, &tighter);
    }
    Err(Error::RefinementBudgetExceeded)
}

/// Sign pattern at the crossing times: reading the roots
/// `tau_1 < ... < tau_d` of `P_n` from the left, `S_{n+1}(tau_i)` has sign
/// `(-1)^(d-i)`, and `P_{n+1}(tau_i) = tau_i S_{n+1}(tau_i)` is certified
/// both in sign and, at rational roots, by exact evaluation.
pub fn check_sign_alternation(cache: &Cache, n: u32) -> CheckResult {
    if n < 4 {
        return fail("sign alternation is considered from n = 4");
    }
    let d = n as usize - 3;
    let p_n = cache.p(n);
    let p_next = cache.p(n + 1);
    let s_next = cache.s(n + 1);

    // the recurrence itself, which at a root of P_n collapses to
    // P_{n+1}(tau) = tau * S_{n+1}(tau)
    let one_plus_t = IntPoly::from_i64(&[1, 1]);
    let t = IntPoly::var();
    let recombined = &(&one_plus_t * &p_n) + &(&t * &s_next);
    if recombined != p_next {
        return fail("recurrence for P_{n+1} failed to recombine");
    }

    let width = crate::arith::rat(1, 1 << 20);
    let taus = isolate_roots(&p_n, &Domain::below(Rat::zero(), false), &width)
        .map_err(|e| e.to_string())?;
    if taus.len() != d {
        return fail(format!("expected {d} crossing times, found {}", taus.len()));
    }
    for (pos, iv) in taus.iter().enumerate() {
        let i = pos + 1;
        let expect_s: i8 = if (d - i).is_multiple_of(2) { 1 } else { -1 };
        let sign_s =
            certified_sign_on_interval(&p_n, iv, &s_next, 256).map_err(|e| e.to_string())?;
        if sign_s != expect_s {
            return fail(format!(
                "S_{}(tau_{i}) has sign {sign_s}, expected {expect_s}",
                n + 1
            ));
        }
        let sign_p =
            certified_sign_on_interval(&p_n, iv, &p_next, 256).map_err(|e| e.to_string())?;
        if sign_p != -expect_s {
            return fail(format!(
                "P_{}(tau_{i}) has sign {sign_p}, expected {}",
                n + 1,
                -expect_s
            ));
        }
        if iv.is_exact() {
            // rational crossing: the relation holds as exact numbers
            let tau = iv.lo();
            let lhs = p_next.eval(tau);
            let rhs = tau * s_next.eval(tau);
            if lhs != rhs {
                return fail(format!(
                    "P_{}({tau}) != tau * S_{}({tau})",
                    n + 1,
                    n + 1,
                    tau = rat_to_string(tau)
                ));
            }
        }
    }
    Ok(())
}

/// Scaled-limit family `G_m`: simple root at zero and exactly `m - 2`
/// further simple roots in `(-1, 0)`.
pub fn check_g_root_structure(cache: &Cache, m: u32) -> CheckResult {
    if m < 2 {
        return fail("G root structure is considered from m = 2");
    }
    let g = cache.g(m);
    if !is_square_free(&g).map_err(|e| e.to_string())? {
        return fail("G_m is not square-free");
    }
    if g.sign_at(&Rat::zero()) != 0 {
        return fail("missing the root at x = 0");
    }
    let interior = count_roots_in(&g, &Domain::open(-Rat::one(), Rat::zero()))
        .map_err(|e| e.to_string())?;
    if interior != m as usize - 2 {
        return fail(format!(
            "expected {} roots in (-1, 0), found {interior}",
            m - 2
        ));
    }
    let total = crate::realroot::count_real_roots(&g).map_err(|e| e.to_string())?;
    if total != m as usize - 1 {
        return fail(format!(
            "expected {} real roots in total, found {total}",
            m - 1
        ));
    }
    Ok(())
}

/// Residual scaled-limit family `K_n`: `n - 1` simple roots in `[-1, 0)`,
/// exactly one of them at `-1`.
pub fn check_k_root_structure(cache: &Cache, n: u32) -> CheckResult {
    if n < 2 {
        return fail("K root structure is considered from n = 2");
    }
    let k = cache.k(n);
    if !is_square_free(&k).map_err(|e| e.to_string())? {
        return fail("K_n is not square-free");
    }
    if k.sign_at(&(-Rat::one())) != 0 {
        return fail("missing the root at x = -1");
    }
    let interior = count_roots_in(&k, &Domain::open(-Rat::one(), Rat::zero()))
        .map_err(|e| e.to_string())?;
    if interior != n as usize - 2 {
        return fail(format!(
            "expected {} roots in (-1, 0), found {interior}",
            n - 2
        ));
    }
    let total = crate::realroot::count_real_roots(&k).map_err(|e| e.to_string())?;
    if total != n as usize - 1 {
        return fail(format!(
            "expected {} real roots in total, found {total}",
            n - 1
        ));
    }
    Ok(())
}

/// Fulton-MacPherson real-rootedness: `(1+t)` divides `Ptilde_n` exactly,
/// the quotient has `n - 1` simple negative roots, and the removed factor
/// contributes the explicit extra root at `-1`.
pub fn check_fm_real_rooted(cache: &Cache, n: u32) -> CheckResult {
    let ptilde = cache.ptilde(n);
    let phat = match cache.phat(n) {
        Ok(p) => p,
        Err(_) => return fail("(1+t) does not divide Ptilde"),
    };
    if !ptilde.eval(&(-Rat::one())).is_zero() {
        return fail("Ptilde(-1) != 0");
    }
    check_real_rooted(&phat, n as usize - 1)
}

/// Extracts the coefficient sequence for ULC checks.
pub fn coeff_sequence(p: &IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}
