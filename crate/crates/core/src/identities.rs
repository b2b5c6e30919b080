//! Truncated formal-power-series engine certifying the generating-function
//! and weight identities behind the polynomial families, to a configurable
//! order.
//!
//! Series here use the exponential convention: the k-th stored coefficient
//! is the coefficient of `x^k / k!`, so products convolve with binomial
//! weights. Misreading that convention is the most likely way to get these
//! identities wrong, which is why the product engine is cross-checked
//! against the closed convolution for `S_n` in the tests below.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{IntPoly, Rat, RatPoly};
use crate::recurrences::{binomial, deform_step_f, deform_step_fhat, Cache};
use crate::verify::CheckResult;
use crate::BiPoly;

fn fail(msg: impl Into<String>) -> CheckResult {
    Err(msg.into())
}

/// Truncated series in `x` with coefficients in `Z[y, t]`, exponential
/// convention: `coeffs[k]` multiplies `x^k / k!`.
#[derive(Debug, Clone, PartialEq)]
pub struct EgfSeries {
    coeffs: Vec<BiPoly>,
}

impl EgfSeries {
    pub fn zeros(order: usize) -> EgfSeries {
        EgfSeries {
            coeffs: vec![BiPoly::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BiPoly {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, value: BiPoly) {
        self.coeffs[k] = value;
    }

    /// d/dx shifts coefficients down one place (exponential convention).
    pub fn deriv_x(&self) -> EgfSeries {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        EgfSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Multiplication by `x`: the x^k/k! coefficient becomes k times the
    /// previous coefficient. Exact through one order beyond the input.
    pub fn mul_x(&self) -> EgfSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BiPoly::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.mul_scalar(&BigInt::from(k + 1)));
        }
        EgfSeries { coeffs }
    }

    /// Product with binomial convolution, truncated at the shorter order.
    pub fn mul(&self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        let mut out = EgfSeries::zeros(order);
        for k in 0..=order {
            let mut acc = BiPoly::zero();
            for j in 0..=k {
                let a = &self.coeffs[j];
                let b = &rhs.coeffs[k - j];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b).mul_scalar(&binomial(k, j));
            }
            out.coeffs[k] = acc;
        }
        out
    }

    pub fn add(&self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }

    /// Multiplies every coefficient by a fixed polynomial.
    pub fn mul_poly(&self, p: &BiPoly) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_scalar(c)).collect(),
        }
    }

    /// Coefficientwise d/dy.
    pub fn deriv_y(&self) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| c.deriv_y()).collect(),
        }
    }

    /// First order where the two series disagree, scanning up to `through`.
    pub fn first_mismatch(&self, rhs: &EgfSeries, through: usize) -> Option<usize> {
        (0..=through).find(|&k| self.coeffs[k] != rhs.coeffs[k])
    }
}

/// The series whose x^k/k! coefficient is `P_{k+1}` for k >= 2 (and zero
/// below); this is the exponential generating function of the Poincaré
/// polynomials, shifted by one in the index.
pub fn u_series(cache: &Cache, order: usize) -> EgfSeries {
    assert!(order >= 2);
    let mut u = EgfSeries::zeros(order);
    for k in 2..=order {
        u.set_coeff(k, BiPoly::from_t_poly(cache.p(k as u32 + 1)));
    }
    u
}

/// The deformation series: x^m/m! carries `F_m` for m >= 1.
pub fn phi_series(cache: &Cache, order: usize) -> EgfSeries {
    assert!(order >= 1);
    let mut phi = EgfSeries::zeros(order);
    for m in 1..=order {
        phi.set_coeff(m, cache.f(m as u32));
    }
    phi
}

/// ODE for the generating function of the `P` family:
/// `dU/dx - x = (1+t) U + t U dU/dx`, checked coefficientwise through
/// order `n - 1`.
pub fn verify_u_ode(cache: &Cache, order: usize) -> CheckResult {
    if order < 3 {
        return fail("order must be at least 3");
    }
    let u = u_series(cache, order);
    let du = u.deriv_x();
    let mut lhs = du.clone();
    // subtract x, which lives at k = 1 with unit coefficient
    lhs.set_coeff(1, lhs.coeff(1) - &BiPoly::one());
    let one_plus_t = BiPoly::from_t_poly(IntPoly::from_i64(&[1, 1]));
    let t = BiPoly::from_t_poly(IntPoly::var());
    let rhs = u.mul_poly(&one_plus_t).add(&u.mul(&du).mul_poly(&t));
    match lhs.first_mismatch(&rhs, order - 1) {
        None => Ok(()),
        Some(k) => fail(format!("ODE fails at the x^{k} coefficient")),
    }
}

/// PDE for the deformation series:
/// `(1 - (y-1)x) dPhi/dx - y(y+t-1) dPhi/dy = 1 + Phi`, checked through
/// order `n - 1`.
pub fn verify_phi_pde(cache: &Cache, order: usize) -> CheckResult {
    if order < 2 {
        return fail("order must be at least 2");
    }
    let phi = phi_series(cache, order);
    let dx = phi.deriv_x();
    let y_minus_1 = BiPoly::new(vec![IntPoly::from_i64(&[-1]), IntPoly::one()]);
    let transport = BiPoly::new(vec![
        IntPoly::zero(),
        IntPoly::from_i64(&[-1, 1]), // t - 1
        IntPoly::one(),
    ]); // y^2 + (t-1) y
    let lhs = dx
        .sub(&dx.mul_x().mul_poly(&y_minus_1))
        .sub(&phi.deriv_y().mul_poly(&transport));
    let mut rhs = phi.clone();
    rhs.set_coeff(0, rhs.coeff(0) + &BiPoly::one());
    match lhs.first_mismatch(&rhs, order - 1) {
        None => Ok(()),
        Some(k) => fail(format!("PDE fails at the x^{k} coefficient")),
    }
}

/// Slice and slope identities for a single index:
/// `F_m(1, t) = P_{m+1}` and `dF_m/dy (1, t) = P_{m+1} + S_{m+2}`.
pub fn verify_slice_slope(cache: &Cache, m: u32) -> CheckResult {
    if m < 2 {
        return fail("slice/slope is considered from m = 2");
    }
    let f = cache.f(m);
    let one = BigInt::one();
    let slice = f.eval_y_int(&one);
    if slice != cache.p(m + 1) {
        return fail(format!("slice of F_{m} at y=1 is not P_{}", m + 1));
    }
    let slope = f.deriv_y().eval_y_int(&one);
    let expect = &cache.p(m + 1) + &cache.s(m + 2);
    if slope != expect {
        return fail(format!(
            "slope of F_{m} at y=1 is not P_{} + S_{}",
            m + 1,
            m + 2
        ));
    }
    Ok(())
}

/// Truncated series in one variable with coefficients in `Q[t]`, ordinary
/// convention: `coeffs[k]` multiplies `w^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct OgfSeries {
    coeffs: Vec<RatPoly>,
}

impl OgfSeries {
    pub fn zeros(order: usize) -> OgfSeries {
        OgfSeries {
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn identity(order: usize) -> OgfSeries {
        let mut s = OgfSeries::zeros(order);
        s.coeffs[1] = RatPoly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatPoly {
        &self.coeffs[k]
    }

    pub fn mul(&self, rhs: &OgfSeries) -> OgfSeries {
        let order = self.order().min(rhs.order());
        let mut out = OgfSeries::zeros(order);
        for k in 0..=order {
            let mut acc = RatPoly::zero();
            for j in 0..=k {
                let a = &self.coeffs[j];
                let b = &rhs.coeffs[k - j];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            out.coeffs[k] = acc;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> OgfSeries {
        OgfSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_scalar(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &RatPoly) -> OgfSeries {
        OgfSeries {
            coeffs: self.coeffs.iter().map(|a| a * p).collect(),
        }
    }

    pub fn add(&self, rhs: &OgfSeries) -> OgfSeries {
        let order = self.order().min(rhs.order());
        OgfSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &OgfSeries) -> OgfSeries {
        let order = self.order().min(rhs.order());
        OgfSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

/// `(1 + w)^t` expanded as `exp(t log(1 + w))`, with log and exp as formal
/// series over `Q[t]`. The w^k coefficient comes out as the degree-k
/// binomial polynomial `t (t-1) ... (t-k+1) / k!`.
pub fn power_series_one_plus_w_to_t(order: usize) -> OgfSeries {
    // log(1+w) = sum (-1)^(k+1) w^k / k
    let mut log = OgfSeries::zeros(order);
    for k in 1..=order {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        log.coeffs[k] = RatPoly::constant(crate::arith::rat(sign, k as i64));
    }
    let t_log = log.mul_poly(&RatPoly::var());
    // exp(s) = sum s^j / j!, where s has no constant term
    let mut result = OgfSeries::zeros(order);
    result.coeffs[0] = RatPoly::one();
    let mut power = OgfSeries::zeros(order);
    power.coeffs[0] = RatPoly::one(); // (t log(1+w))^0
    let mut factorial = BigInt::one();
    for j in 1..=order {
        power = power.mul(&t_log);
        factorial *= BigInt::from(j);
        let inv = Rat::new(BigInt::one(), factorial.clone());
        result = result.add(&power.scale(&inv));
    }
    result
}

/// Parametrization check for the slice generating function. The curve
/// `x = (t^2 (z-1) - z^t + 1) / (t (t-1))` is expanded in `w = z - 1`,
/// the series is inverted, and the result must be `x + U`, i.e. its
/// x^m coefficient times m! must be exactly `P_{m+1}`.
pub fn verify_getzler_param(cache: &Cache, order: usize) -> CheckResult {
    if order < 2 {
        return fail("order must be at least 2");
    }
    let z_to_t = power_series_one_plus_w_to_t(order);
    // numerator t^2 w - ((1+w)^t - 1)
    let t_sq = RatPoly::new(vec![Rat::zero(), Rat::zero(), Rat::one()]);
    let mut numer = OgfSeries::zeros(order);
    for k in 1..=order {
        numer.coeffs[k] = -z_to_t.coeff(k);
    }
    numer.coeffs[1] = &numer.coeffs[1] + &t_sq;
    // divide by t(t-1) = t^2 - t, exactly in Q[t]
    let denom = RatPoly::new(vec![Rat::zero(), -Rat::one(), Rat::one()]);
    let mut x_series = OgfSeries::zeros(order);
    for k in 1..=order {
        match numer.coeffs[k].exact_div(&denom) {
            Ok(q) => x_series.coeffs[k] = q,
            Err(_) => {
                return fail(format!(
                    "w^{k} coefficient of the parametrization is not divisible by t(t-1)"
                ))
            }
        }
    }
    if *x_series.coeff(1) != RatPoly::one() {
        return Err(crate::error::Error::NonInvertibleSeries.to_string());
    }
    let inverse = revert_series(&x_series)?;
    // the reverted series is phi = w as a function of x; demand phi = x + U
    let mut factorial = BigInt::from(2);
    for m in 2..=order {
        let scaled = inverse
            .coeff(m)
            .mul_scalar(&Rat::from_integer(factorial.clone()));
        let expect = RatPoly::from(&cache.p(m as u32 + 1));
        if scaled != expect {
            return fail(format!(
                "inverted series disagrees with P_{} at x^{m}",
                m + 1
            ));
        }
        factorial *= BigInt::from(m as u32 + 1);
    }
    Ok(())
}

/// Functional inverse of `x = w + a_2 w^2 + ...` as a series
/// `w = x + b_2 x^2 + ...`; errors unless the linear coefficient is 1.
pub fn revert_series(x_of_w: &OgfSeries) -> std::result::Result<OgfSeries, String> {
    let order = x_of_w.order();
    if *x_of_w.coeff(1) != RatPoly::one() || !x_of_w.coeff(0).is_zero() {
        return Err(crate::error::Error::NonInvertibleSeries.to_string());
    }
    let mut w = OgfSeries::identity(order);
    for _ in 0..order {
        // w <- x - sum_{k>=2} a_k w^k, gaining one exact order per pass
        let mut correction = OgfSeries::zeros(order);
        let mut power = w.mul(&w);
        for k in 2..=order {
            correction = correction.add(&power.mul_poly(x_of_w.coeff(k)));
            if k < order {
                power = power.mul(&w);
            }
        }
        let mut next = OgfSeries::identity(order);
        next = next.sub(&correction);
        if next == w {
            break;
        }
        w = next;
    }
    Ok(w)
}

/// Coefficients of `(1 + Phi)^(t+1) - 1`: the n-th one (exponential
/// convention) is the deformation of the Fulton-MacPherson Poincaré
/// polynomial. Computed over a common denominator of `order!` so all
/// arithmetic stays integral; a leftover remainder on the final division
/// is an integrality failure and is reported as an error.
pub fn psi_f_tilde(cache: &Cache, order: usize) -> std::result::Result<Vec<BiPoly>, String> {
    assert!(order >= 1);
    let phi = phi_series(cache, order);
    let mut big_f = BigInt::one();
    for k in 1..=order {
        big_f *= BigInt::from(k);
    }
    // falling products (t+1) t (t-1) ... (t-k+2), one new factor per k;
    // the integer weight order!/k! shrinks by an exact division each step
    let mut falling = IntPoly::from_i64(&[1, 1]);
    let mut weight = big_f.clone();
    let mut sum = EgfSeries::zeros(order);
    let mut phi_pow = phi.clone();
    for k in 1..=order {
        if k > 1 {
            let factor = IntPoly::new(vec![BigInt::from(2i64 - k as i64), BigInt::one()]);
            falling = &falling * &factor;
            phi_pow = phi_pow.mul(&phi);
        }
        weight /= BigInt::from(k);
        let term = phi_pow
            .mul_poly(&BiPoly::from_t_poly(falling.clone()))
            .mul_scalar(&weight);
        sum = sum.add(&term);
    }
    let mut out = Vec::with_capacity(order);
    for n in 1..=order {
        match sum.coeff(n).exact_div_scalar(&big_f) {
            Ok(f) => out.push(f),
            Err(_) => {
                return Err(format!(
                    "x^{n} coefficient of (1+Phi)^(t+1) is not an integer polynomial"
                ))
            }
        }
    }
    Ok(out)
}

/// Binomial-power identity for the Fulton-MacPherson deformation: the n-th
/// coefficient of `(1+Phi)^(t+1) - 1` slices to `Ptilde_n` at `y = 1`, and
/// is divisible by `(t+1)` with quotient `Fhat_n`.
pub fn verify_psi_power(cache: &Cache, order: usize) -> CheckResult {
    let tilde = psi_f_tilde(cache, order)?;
    let one_plus_t = IntPoly::from_i64(&[1, 1]);
    for (i, f_tilde) in tilde.iter().enumerate() {
        let n = i as u32 + 1;
        let slice = f_tilde.eval_y_int(&BigInt::one());
        if slice != cache.ptilde(n) {
            return fail(format!("slice of the {n}-th coefficient is not Ptilde_{n}"));
        }
        let quotient = match f_tilde.exact_div_t_poly(&one_plus_t) {
            Ok(q) => q,
            Err(_) => return fail(format!("(t+1) does not divide the {n}-th coefficient")),
        };
        if quotient != cache.fhat(n) {
            return fail(format!("residual of the {n}-th coefficient is not Fhat_{n}"));
        }
    }
    Ok(())
}

/// Which deformation family a weight identity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightFamily {
    F,
    Fhat,
}

/// Exponent pair of the positive weight used in the root-location
/// induction, written over the common denominator `a = 1 - t`: the weight
/// is `y^(alpha) (a - y)^(beta)` with `alpha = alpha_numerator / a` and
/// `beta = beta_numerator / a`, and `recurrence_factor` is the linear
/// factor of the family recurrence the exponents must reproduce.
#[derive(Debug, Clone)]
pub struct WeightSpec {
    pub family: WeightFamily,
    pub index: u32,
    pub alpha_numerator: IntPoly,
    pub beta_numerator: IntPoly,
    pub recurrence_factor: BiPoly,
}

impl WeightSpec {
    pub fn new(family: WeightFamily, index: u32) -> WeightSpec {
        let m = index as i64;
        let (alpha_numerator, beta_numerator, recurrence_factor) = match family {
            WeightFamily::F => {
                // alpha = (m-1)/a, beta = (1 - m t)/a, factor my - m + 1
                let alpha = IntPoly::constant_i64(m - 1);
                let beta = IntPoly::new(vec![BigInt::one(), BigInt::from(-m)]);
                let linear = BiPoly::new(vec![
                    IntPoly::constant_i64(1 - m),
                    IntPoly::constant_i64(m),
                ]);
                (alpha, beta, linear)
            }
            WeightFamily::Fhat => {
                // alpha = (n + a - 2)/a = (n - 1 - t)/a,
                // beta = ((n-1) a - n + 2)/a = (1 - (n-1) t)/a,
                // factor ny - n + 2 - a = ny - n + 1 + t
                let alpha = IntPoly::new(vec![BigInt::from(m - 1), BigInt::from(-1)]);
                let beta = IntPoly::new(vec![BigInt::one(), BigInt::from(1 - m)]);
                let linear = BiPoly::new(vec![
                    IntPoly::new(vec![BigInt::from(1 - m), BigInt::one()]),
                    IntPoly::constant_i64(m),
                ]);
                (alpha, beta, linear)
            }
        };
        WeightSpec {
            family,
            index,
            alpha_numerator,
            beta_numerator,
            recurrence_factor,
        }
    }
}

/// The derivative-of-weighted-polynomial identity behind the root-location
/// induction, reduced to its equivalent polynomial form. With `a = 1 - t`
/// kept symbolic, the exponent pair `(alpha, beta)` of the weight must
/// satisfy `alpha (a - y) - beta y = -(linear factor of the recurrence)`
/// after clearing `a`; on top of that, one recurrence step must reproduce
/// the next family member.
pub fn verify_weight_identity(cache: &Cache, family: WeightFamily, index: u32) -> CheckResult {
    if index < 1 {
        return fail("index must be at least 1");
    }
    let a = IntPoly::from_i64(&[1, -1]); // a = 1 - t
    let spec = WeightSpec::new(family, index);
    // alpha_num (a - y) - beta_num y == -a * factor, in Z[y, t]
    let lhs = BiPoly::new(vec![
        &spec.alpha_numerator * &a,
        -&(&spec.alpha_numerator + &spec.beta_numerator),
    ]);
    let rhs = -&spec.recurrence_factor.mul_t_poly(&a);
    if lhs != rhs {
        return fail("weight exponents do not reproduce the recurrence factor");
    }
    // the recurrence itself must advance the family by one index
    match family {
        WeightFamily::F => {
            let stepped = deform_step_f(&cache.f(index), index);
            if stepped != cache.f(index + 1) {
                return fail(format!("recurrence step does not reproduce F_{}", index + 1));
            }
        }
        WeightFamily::Fhat => {
            let stepped = deform_step_fhat(&cache.fhat(index), index);
            if stepped != cache.fhat(index + 1) {
                return fail(format!(
                    "recurrence step does not reproduce Fhat_{}",
                    index + 1
                ));
            }
        }
    }
    Ok(())
}

/// Weighted-derivative identity for the scaled limit family, fully
/// polynomial: `x (1+x) [(1+x)^m G_m]' = (1+x)^m G_{m+1}` in `Z[x]`.
pub fn verify_g_limit_identity(cache: &Cache, m: u32) -> CheckResult {
    if m < 1 {
        return fail("index must be at least 1");
    }
    let g_m = cache.g(m);
    let g_next = cache.g(m + 1);
    let one_plus_x = IntPoly::from_i64(&[1, 1]);
    let v = one_plus_x.pow(m);
    let product = &v * &g_m;
    let lhs = &IntPoly::from_i64(&[0, 1, 1]) * &product.derivative();
    let rhs = &v * &g_next;
    if lhs != rhs {
        return fail(format!("weighted derivative identity fails at m = {m}"));
    }
    Ok(())
}

/// Slices every coefficient of a bivariate series at `y = 1`.
pub fn slice_series_at_y1(series: &EgfSeries) -> Vec<IntPoly> {
    series
        .coeffs
        .iter()
        .map(|c| c.eval_y_int(&BigInt::one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn u_series_printed_coefficients() {
        let c = Cache::new();
        let u = u_series(&c, 4);
        assert!(u.coeff(0).is_zero());
        assert!(u.coeff(1).is_zero());
        assert_eq!(*u.coeff(2), BiPoly::one());
        assert_eq!(*u.coeff(3), BiPoly::from_t_poly(IntPoly::from_i64(&[1, 1])));
        assert_eq!(
            *u.coeff(4),
            BiPoly::from_t_poly(IntPoly::from_i64(&[1, 5, 1]))
        );
    }

    #[test]
    fn u_ode_holds() {
        let c = Cache::new();
        assert!(verify_u_ode(&c, 3).is_ok());
        assert!(verify_u_ode(&c, 4).is_ok());
        assert!(verify_u_ode(&c, 6).is_ok());
        assert!(verify_u_ode(&c, 15).is_ok());
    }

    #[test]
    fn u_du_product_encodes_s() {
        // the x^k/k! coefficient of U dU/dx must be S_{k+2}
        let c = Cache::new();
        let order = 13;
        let u = u_series(&c, order);
        let product = u.mul(&u.deriv_x());
        for k in 2..=order - 1 {
            let expect = BiPoly::from_t_poly(c.s(k as u32 + 2));
            assert_eq!(*product.coeff(k), expect, "k = {k}");
        }
    }

    #[test]
    fn phi_pde_holds() {
        let c = Cache::new();
        assert!(verify_phi_pde(&c, 2).is_ok());
        assert!(verify_phi_pde(&c, 3).is_ok());
        assert!(verify_phi_pde(&c, 5).is_ok());
        assert!(verify_phi_pde(&c, 15).is_ok());
    }

    #[test]
    fn slice_slope_examples() {
        let c = Cache::new();
        for m in 2..=15u32 {
            assert!(verify_slice_slope(&c, m).is_ok(), "m = {m}");
        }
    }

    #[test]
    fn phi_slope_series_identity() {
        // dPhi/dy at y=1 equals U + U dU/dx as truncated series
        let c = Cache::new();
        let order = 12;
        let phi = phi_series(&c, order);
        let u = u_series(&c, order);
        let lhs = slice_series_at_y1(&phi.deriv_y());
        let rhs_series = u.add(&u.mul(&u.deriv_x()));
        for (k, lhs_k) in lhs.iter().enumerate().take(order) {
            let rhs = rhs_series.coeff(k).eval_y_int(&BigInt::one());
            assert_eq!(*lhs_k, rhs, "k = {k}");
        }
    }

    #[test]
    fn binomial_power_series_matches_product_formula() {
        // w^k coefficient of (1+w)^t must be t(t-1)...(t-k+1)/k!
        let series = power_series_one_plus_w_to_t(6);
        let mut expect = RatPoly::one();
        let mut factorial = Rat::one();
        for k in 1..=6usize {
            let linear = RatPoly::new(vec![rat(-(k as i64 - 1), 1), Rat::one()]);
            expect = &expect * &linear;
            factorial *= rat(k as i64, 1);
            let inv = Rat::one() / factorial.clone();
            assert_eq!(
                *series.coeff(k),
                expect.mul_scalar(&inv),
                "binomial coefficient at k = {k}"
            );
        }
    }

    #[test]
    fn getzler_lowest_orders() {
        let c = Cache::new();
        assert!(verify_getzler_param(&c, 2).is_ok());
        assert!(verify_getzler_param(&c, 4).is_ok());
        assert!(verify_getzler_param(&c, 6).is_ok());
    }

    #[test]
    fn psi_power_small_orders() {
        let c = Cache::new();
        let tilde = psi_f_tilde(&c, 3).unwrap();
        // F~_1 = t + 1 as a constant in y
        assert_eq!(tilde[0], BiPoly::from_t_poly(IntPoly::from_i64(&[1, 1])));
        // F~_2 = (t+1)(y+t)
        let expect = BiPoly::new(vec![
            IntPoly::from_i64(&[0, 1, 1]), // t + t^2
            IntPoly::from_i64(&[1, 1]),    // (t+1) y
        ]);
        assert_eq!(tilde[1], expect);
        assert!(verify_psi_power(&c, 3).is_ok());
    }

    #[test]
    fn weight_identities() {
        let c = Cache::new();
        for m in 1..=8u32 {
            assert!(verify_weight_identity(&c, WeightFamily::F, m).is_ok());
            assert!(verify_weight_identity(&c, WeightFamily::Fhat, m).is_ok());
        }
    }

    #[test]
    fn g_limit_identities() {
        let c = Cache::new();
        for m in 1..=8u32 {
            assert!(verify_g_limit_identity(&c, m).is_ok(), "m = {m}");
        }
    }

    #[test]
    fn series_prefixes_are_stable_under_order_extension() {
        let c = Cache::new();
        let small = u_series(&c, 6);
        let large = u_series(&c, 12);
        for k in 0..=6 {
            assert_eq!(small.coeff(k), large.coeff(k));
        }
        let tilde_small = psi_f_tilde(&c, 5).unwrap();
        let tilde_large = psi_f_tilde(&c, 9).unwrap();
        for k in 0..5 {
            assert_eq!(tilde_small[k], tilde_large[k], "k = {k}");
        }
    }
}
