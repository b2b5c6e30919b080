//! The polynomial families. Every family is produced by its defining
//! recurrence from integer seeds; nothing is computed from closed forms.
//!
//! Univariate families (all in `Z[t]`, or `Z[x]` for the scaled limits):
//! - `P_n`: Poincaré polynomial of the moduli space of n-pointed stable
//!   rational curves, from `P_1 = P_2 = P_3 = 1` and
//!   `P_n = (1+t) P_{n-1} + t S_n`.
//! - `S_n`: the binomial convolution
//!   `sum_{j=3}^{n-2} C(n-2, j-1) P_j P_{n+1-j}` (empty sum is zero).
//! - `Ptilde_n`: Poincaré polynomial of the Fulton-MacPherson space of n
//!   labelled points on the projective line.
//! - `Phat_n = Ptilde_n / (1+t)`: the residual factor.
//! - `G_m`: scaled limit of the deformation `F_m` as `t -> -infinity`.
//! - `K_n`: same limit for the residual deformation.
//!
//! Bivariate deformations (in `y` over `Z[t]`):
//! - `F_m`: from `F_1 = 1` and
//!   `F_{m+1} = (my - m + 1) F_m + y (y + t - 1) d/dy F_m`; its slice at
//!   `y = 1` is `P_{m+1}`.
//! - `Fhat_n`: from `Fhat_1 = 1` and
//!   `Fhat_{n+1} = (ny - n + t + 1) Fhat_n + y (y + t - 1) d/dy Fhat_n`;
//!   its slice at `y = 1` is `Phat_n`.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{BiPoly, IntPoly};
use crate::error::{Error, Result};

/// Univariate polynomial families, indexed as in the recurrences above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniFamily {
    P,
    S,
    Ptilde,
    Phat,
    G,
    K,
}

impl UniFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            UniFamily::P => "P",
            UniFamily::S => "S",
            UniFamily::Ptilde => "Ptilde",
            UniFamily::Phat => "Phat",
            UniFamily::G => "G",
            UniFamily::K => "K",
        }
    }

    /// Variable name used when printing members of this family.
    pub fn var(&self) -> &'static str {
        match self {
            UniFamily::G | UniFamily::K => "x",
            _ => "t",
        }
    }

    pub fn min_index(&self) -> u32 {
        match self {
            UniFamily::S => 4,
            _ => 1,
        }
    }
}

/// Bivariate deformation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeformFamily {
    F,
    Fhat,
}

impl DeformFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            DeformFamily::F => "F",
            DeformFamily::Fhat => "Fhat",
        }
    }

    /// Number of positive y-roots of the degree-`index` member at any
    /// fixed negative t.
    pub fn positive_root_count(&self, index: u32) -> usize {
        match self {
            DeformFamily::F => (index as usize).saturating_sub(2),
            DeformFamily::Fhat => (index as usize).saturating_sub(1),
        }
    }
}

impl FromStr for UniFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(UniFamily::P),
            "S" => Ok(UniFamily::S),
            "Ptilde" => Ok(UniFamily::Ptilde),
            "Phat" => Ok(UniFamily::Phat),
            "G" => Ok(UniFamily::G),
            "K" => Ok(UniFamily::K),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }
}

impl FromStr for DeformFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" => Ok(DeformFamily::F),
            "Fhat" => Ok(DeformFamily::Fhat),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for UniFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl fmt::Display for DeformFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Exact binomial coefficient by the Pascal recurrence; no factorials.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row[k].clone()
}

/// Odd double factorial `(2m-3)!!` for m >= 2 (so 1, 3, 15, 105, ...).
pub fn double_factorial_2m_minus_3(m: u32) -> BigInt {
    assert!(m >= 2);
    let mut acc = BigInt::one();
    let mut k = 1i64;
    while k <= 2 * i64::from(m) - 3 {
        acc *= BigInt::from(k);
        k += 2;
    }
    acc
}

/// Lazily filled family tables. Every entry with an index below the filled
/// frontier is final, so filling in increasing index order reads only
/// finished entries.
#[derive(Default)]
struct Tables {
    /// p[i] = P_{i+1}
    p: Vec<IntPoly>,
    /// s[i] = S_{i+1} (zero below index 5)
    s: Vec<IntPoly>,
    /// ptilde[i] = Ptilde_{i+1}
    ptilde: Vec<IntPoly>,
    /// g[i] = G_{i+1}
    g: Vec<IntPoly>,
    /// k[i] = K_{i+1}
    k: Vec<IntPoly>,
    /// f[i] = F_{i+1}
    f: Vec<BiPoly>,
    /// fhat[i] = Fhat_{i+1}
    fhat: Vec<BiPoly>,
}

impl Tables {
    fn ensure_p(&mut self, n: usize) {
        while self.p.len() < n {
            let idx = self.p.len() + 1; // the index being produced
            if idx <= 3 {
                self.p.push(IntPoly::one());
                self.s.push(IntPoly::zero());
                continue;
            }
            // S_idx = sum_{j=3}^{idx-2} C(idx-2, j-1) P_j P_{idx+1-j}
            let mut s = IntPoly::zero();
            for j in 3..=idx.saturating_sub(2) {
                let c = binomial(idx - 2, j - 1);
                let term = (&self.p[j - 1] * &self.p[idx - j]).mul_scalar(&c);
                s = &s + &term;
            }
            // P_idx = (1+t) P_{idx-1} + t S_idx
            let one_plus_t = IntPoly::from_i64(&[1, 1]);
            let t = IntPoly::var();
            let p = &(&one_plus_t * &self.p[idx - 2]) + &(&t * &s);
            self.p.push(p);
            self.s.push(s);
        }
    }

    fn ensure_s(&mut self, n: usize) {
        self.ensure_p(n);
    }

    fn ensure_ptilde(&mut self, n: usize) {
        self.ensure_p(n + 1);
        while self.ptilde.len() < n {
            let idx = self.ptilde.len() + 1;
            // Ptilde_idx = sum_{j=0}^{idx} C(idx, j) t^min(idx-j, 2) P_{j+1} P_{idx+1-j}
            let mut acc = IntPoly::zero();
            for j in 0..=idx {
                let c = binomial(idx, j);
                let tpow = (idx - j).min(2);
                let term = (&self.p[j] * &self.p[idx - j]).mul_scalar(&c);
                let term = &term * &IntPoly::monomial(tpow, BigInt::one());
                acc = &acc + &term;
            }
            self.ptilde.push(acc);
        }
    }

    fn ensure_g(&mut self, m: usize) {
        if self.g.is_empty() && m >= 1 {
            self.g.push(IntPoly::one());
        }
        while self.g.len() < m {
            let idx = self.g.len(); // producing G_{idx+1} from G_idx
            let prev = &self.g[idx - 1];
            let x = IntPoly::var();
            let x_xp1 = IntPoly::from_i64(&[0, 1, 1]); // x(x+1) = x + x^2
            let next = &(&prev.mul_scalar(&BigInt::from(idx)) * &x)
                + &(&x_xp1 * &prev.derivative());
            self.g.push(next);
        }
    }

    fn ensure_k(&mut self, n: usize) {
        if self.k.is_empty() && n >= 1 {
            self.k.push(IntPoly::one());
        }
        while self.k.len() < n {
            let idx = self.k.len(); // producing K_{idx+1} from K_idx
            let prev = &self.k[idx - 1];
            // (idx*x + 1)
            let lin = IntPoly::new(vec![BigInt::one(), BigInt::from(idx)]);
            let x_xp1 = IntPoly::from_i64(&[0, 1, 1]);
            let next = &(&lin * prev) + &(&x_xp1 * &prev.derivative());
            self.k.push(next);
        }
    }

    fn ensure_f(&mut self, m: usize) {
        if self.f.is_empty() && m >= 1 {
            self.f.push(BiPoly::one());
        }
        while self.f.len() < m {
            let idx = self.f.len(); // producing F_{idx+1} from F_idx
            let next = deform_step_f(&self.f[idx - 1], idx as u32);
            self.f.push(next);
        }
    }

    fn ensure_fhat(&mut self, n: usize) {
        if self.fhat.is_empty() && n >= 1 {
            self.fhat.push(BiPoly::one());
        }
        while self.fhat.len() < n {
            let idx = self.fhat.len();
            let next = deform_step_fhat(&self.fhat[idx - 1], idx as u32);
            self.fhat.push(next);
        }
    }
}

/// One step of the deformation recurrence:
/// `F_{m+1} = (my - m + 1) F_m + y (y + t - 1) d/dy F_m`.
pub fn deform_step_f(f_m: &BiPoly, m: u32) -> BiPoly {
    let m_int = BigInt::from(m);
    // (my - m + 1)
    let lin = BiPoly::new(vec![
        IntPoly::constant(BigInt::one() - &m_int),
        IntPoly::constant(m_int),
    ]);
    let next = &lin * f_m;
    &next + &(&y_y_plus_t_minus_1() * &f_m.deriv_y())
}

/// One step of the residual deformation recurrence:
/// `Fhat_{n+1} = (ny - n + t + 1) Fhat_n + y (y + t - 1) d/dy Fhat_n`.
pub fn deform_step_fhat(f_n: &BiPoly, n: u32) -> BiPoly {
    let n_int = BigInt::from(n);
    // (ny - n + t + 1): constant-in-y part is t + 1 - n
    let const_part = IntPoly::new(vec![BigInt::one() - &n_int, BigInt::one()]);
    let lin = BiPoly::new(vec![const_part, IntPoly::constant(n_int)]);
    let next = &lin * f_n;
    &next + &(&y_y_plus_t_minus_1() * &f_n.deriv_y())
}

/// The transport coefficient `y (y + t - 1) = y^2 + (t - 1) y`.
fn y_y_plus_t_minus_1() -> BiPoly {
    BiPoly::new(vec![
        IntPoly::zero(),
        IntPoly::from_i64(&[-1, 1]), // t - 1
        IntPoly::one(),
    ])
}

/// Shared memo cache keyed by (family, index). Published entries never
/// change, so reads take a shared lock and only table extension takes the
/// exclusive one.
#[derive(Default)]
pub struct Cache {
    tables: RwLock<Tables>,
}

macro_rules! cached_family {
    ($self:ident, $table:ident, $ensure:ident, $n:ident) => {{
        let want = $n as usize;
        {
            let t = $self.tables.read().unwrap();
            if t.$table.len() >= want {
                return t.$table[want - 1].clone();
            }
        }
        let mut t = $self.tables.write().unwrap();
        t.$ensure(want);
        t.$table[want - 1].clone()
    }};
}

impl Cache {
    pub fn new() -> Self {
        Cache::default()
    }

    /// `P_n` for n >= 1.
    pub fn p(&self, n: u32) -> IntPoly {
        assert!(n >= 1, "P is indexed from 1");
        cached_family!(self, p, ensure_p, n)
    }

    /// `S_n` for n >= 4 (an empty convolution gives zero).
    pub fn s(&self, n: u32) -> IntPoly {
        assert!(n >= 4, "S is defined for n >= 4");
        cached_family!(self, s, ensure_s, n)
    }

    /// `Ptilde_n` for n >= 1.
    pub fn ptilde(&self, n: u32) -> IntPoly {
        assert!(n >= 1, "Ptilde is indexed from 1");
        cached_family!(self, ptilde, ensure_ptilde, n)
    }

    /// `Phat_n = Ptilde_n / (1+t)`; errors if the division is inexact,
    /// which would falsify the divisibility claim.
    pub fn phat(&self, n: u32) -> Result<IntPoly> {
        let pt = self.ptilde(n);
        pt.exact_div(&IntPoly::from_i64(&[1, 1]))
    }

    /// `G_m` for m >= 1.
    pub fn g(&self, m: u32) -> IntPoly {
        assert!(m >= 1, "G is indexed from 1");
        cached_family!(self, g, ensure_g, m)
    }

    /// `K_n` for n >= 1.
    pub fn k(&self, n: u32) -> IntPoly {
        assert!(n >= 1, "K is indexed from 1");
        cached_family!(self, k, ensure_k, n)
    }

    /// `F_m` for m >= 1.
    pub fn f(&self, m: u32) -> BiPoly {
        assert!(m >= 1, "F is indexed from 1");
        cached_family!(self, f, ensure_f, m)
    }

    /// `Fhat_n` for n >= 1.
    pub fn fhat(&self, n: u32) -> BiPoly {
        assert!(n >= 1, "Fhat is indexed from 1");
        cached_family!(self, fhat, ensure_fhat, n)
    }

    pub fn uni(&self, family: UniFamily, index: u32) -> Result<IntPoly> {
        if index < family.min_index() {
            return Err(Error::InvalidInput(format!(
                "{} is defined from index {}",
                family.tag(),
                family.min_index()
            )));
        }
        Ok(match family {
            UniFamily::P => self.p(index),
            UniFamily::S => self.s(index),
            UniFamily::Ptilde => self.ptilde(index),
            UniFamily::Phat => self.phat(index)?,
            UniFamily::G => self.g(index),
            UniFamily::K => self.k(index),
        })
    }

    pub fn deform(&self, family: DeformFamily, index: u32) -> BiPoly {
        match family {
            DeformFamily::F => self.f(index),
            DeformFamily::Fhat => self.fhat(index),
        }
    }

    /// Validates externally stored family values: every structural
    /// invariant must hold and every member must agree with the recurrence
    /// before cached data is trusted.
    pub fn verify_cached_uni(&self, family: UniFamily, values: &[IntPoly]) -> Result<()> {
        for (i, poly) in values.iter().enumerate() {
            let idx = i as u32 + 1;
            validate_uni(family, idx, poly)?;
            let fresh = if idx < family.min_index() {
                IntPoly::zero()
            } else {
                self.uni(family, idx)?
            };
            if fresh != *poly {
                return Err(Error::BadCache(format!(
                    "cached {}_{idx} disagrees with the recurrence",
                    family.tag()
                )));
            }
        }
        Ok(())
    }

    /// Family values from index 1 through `max`, for serialization.
    pub fn uni_prefix(&self, family: UniFamily, max: u32) -> Result<Vec<IntPoly>> {
        (1..=max)
            .map(|idx| {
                if idx < family.min_index() {
                    Ok(IntPoly::zero())
                } else {
                    self.uni(family, idx)
                }
            })
            .collect()
    }
}

/// Non-memoized single-value computations; each call rebuilds the needed
/// prefix from the seeds. Used to confirm the memo cache is transparent.
pub fn compute_p(n: u32) -> IntPoly {
    let mut t = Tables::default();
    t.ensure_p(n as usize);
    t.p[n as usize - 1].clone()
}

pub fn compute_s(n: u32) -> IntPoly {
    assert!(n >= 4);
    let mut t = Tables::default();
    t.ensure_s(n as usize);
    t.s[n as usize - 1].clone()
}

pub fn compute_ptilde(n: u32) -> IntPoly {
    let mut t = Tables::default();
    t.ensure_ptilde(n as usize);
    t.ptilde[n as usize - 1].clone()
}

pub fn compute_phat(n: u32) -> Result<IntPoly> {
    compute_ptilde(n).exact_div(&IntPoly::from_i64(&[1, 1]))
}

pub fn compute_g(m: u32) -> IntPoly {
    let mut t = Tables::default();
    t.ensure_g(m as usize);
    t.g[m as usize - 1].clone()
}

pub fn compute_k(n: u32) -> IntPoly {
    let mut t = Tables::default();
    t.ensure_k(n as usize);
    t.k[n as usize - 1].clone()
}

pub fn compute_f(m: u32) -> BiPoly {
    let mut t = Tables::default();
    t.ensure_f(m as usize);
    t.f[m as usize - 1].clone()
}

pub fn compute_fhat(n: u32) -> BiPoly {
    let mut t = Tables::default();
    t.ensure_fhat(n as usize);
    t.fhat[n as usize - 1].clone()
}

/// The scaled deformation `H_m` written over the formal symbol `e = 1/t`:
/// a polynomial in `x` whose coefficients are polynomials in `e`, built by
/// `H_{m+1} = (mx - (m-1)e) H_m + x (x + 1 - e) H_m'`. Setting `e = 0`
/// (the `t -> -infinity` limit) recovers `G_m` exactly.
pub fn h_scaled(m: u32) -> BiPoly {
    assert!(m >= 1);
    // reuse BiPoly with x in the role of y and e in the role of t
    let mut h = BiPoly::one();
    for idx in 1..m {
        let idx_int = BigInt::from(idx);
        // (idx * x - (idx-1) e)
        let lin = BiPoly::new(vec![
            IntPoly::new(vec![BigInt::zero(), BigInt::one() - &idx_int]), // -(idx-1) e
            IntPoly::constant(idx_int),
        ]);
        // x (x + 1 - e) = x^2 + (1 - e) x
        let transport = BiPoly::new(vec![
            IntPoly::zero(),
            IntPoly::from_i64(&[1, -1]), // 1 - e
            IntPoly::one(),
        ]);
        h = &(&lin * &h) + &(&transport * &h.deriv_y());
    }
    h
}

/// Evaluates the scaled deformation at `1/t = 0`, i.e. takes the
/// coefficientwise limit.
pub fn h_scaled_at_limit(m: u32) -> IntPoly {
    h_scaled(m).eval_t_int(&BigInt::zero())
}

fn check(cond: bool, family: UniFamily, index: u32, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadCache(format!(
            "{}_{} fails invariant: {}",
            family.tag(),
            index,
            what
        )))
    }
}

/// Validates the structural invariants a cached family member must satisfy
/// before it is trusted.
pub fn validate_uni(family: UniFamily, index: u32, poly: &IntPoly) -> Result<()> {
    let n = index as usize;
    match family {
        UniFamily::P => {
            if n <= 3 {
                return check(poly == &IntPoly::one(), family, index, "seed value 1");
            }
            check(poly.degree() == Some(n - 3), family, index, "degree n-3")?;
            check(poly.is_monic(), family, index, "monic")?;
            check(
                poly.constant_term() == BigInt::one(),
                family,
                index,
                "constant term 1",
            )?;
            check(
                poly.coeffs().iter().all(|c| c.is_positive()),
                family,
                index,
                "positive coefficients",
            )?;
            check(poly == &poly.reversed(), family, index, "palindromic")?;
            check(is_unimodal(poly), family, index, "unimodal")
        }
        UniFamily::S => {
            if n <= 4 {
                return check(poly.is_zero(), family, index, "empty sum is zero");
            }
            check(poly.degree() == Some(n - 5), family, index, "degree n-5")?;
            check(
                poly.coeffs().iter().all(|c| c.is_positive()),
                family,
                index,
                "positive coefficients",
            )?;
            check(poly == &poly.reversed(), family, index, "palindromic")
        }
        UniFamily::Ptilde => {
            check(poly.degree() == Some(n), family, index, "degree n")?;
            check(poly.is_monic(), family, index, "monic")?;
            check(
                poly.constant_term() == BigInt::one(),
                family,
                index,
                "constant term 1",
            )?;
            check(
                poly.coeffs().iter().all(|c| c.is_positive()),
                family,
                index,
                "positive coefficients",
            )?;
            check(poly == &poly.reversed(), family, index, "palindromic")?;
            check(is_unimodal(poly), family, index, "unimodal")
        }
        UniFamily::Phat => {
            if n == 1 {
                return check(poly == &IntPoly::one(), family, index, "Phat_1 = 1");
            }
            check(poly.degree() == Some(n - 1), family, index, "degree n-1")?;
            check(poly.is_monic(), family, index, "monic")?;
            check(
                poly.constant_term() == BigInt::one(),
                family,
                index,
                "constant term 1",
            )
        }
        UniFamily::G => {
            if n == 1 {
                return check(poly == &IntPoly::one(), family, index, "G_1 = 1");
            }
            check(poly.degree() == Some(n - 1), family, index, "degree m-1")?;
            check(
                *poly.leading().unwrap() == double_factorial_2m_minus_3(index),
                family,
                index,
                "leading coefficient (2m-3)!!",
            )?;
            check(
                poly.constant_term().is_zero(),
                family,
                index,
                "root at zero",
            )
        }
        UniFamily::K => {
            if n == 1 {
                return check(poly == &IntPoly::one(), family, index, "K_1 = 1");
            }
            check(poly.degree() == Some(n - 1), family, index, "degree n-1")?;
            check(
                *poly.leading().unwrap() == double_factorial_2m_minus_3(index),
                family,
                index,
                "leading coefficient (2n-3)!!",
            )?;
            check(
                poly.constant_term() == BigInt::one(),
                family,
                index,
                "constant term 1",
            )
        }
    }
}

/// Weak unimodality of the coefficient sequence: rises, then falls.
pub fn is_unimodal(poly: &IntPoly) -> bool {
    let cs = poly.coeffs();
    let mut i = 1;
    while i < cs.len() && cs[i] >= cs[i - 1] {
        i += 1;
    }
    while i < cs.len() && cs[i] <= cs[i - 1] {
        i += 1;
    }
    i == cs.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn p_seed_and_printed_values() {
        let c = Cache::new();
        assert_eq!(c.p(1), IntPoly::one());
        assert_eq!(c.p(2), IntPoly::one());
        assert_eq!(c.p(3), IntPoly::one());
        assert_eq!(c.p(4), IntPoly::from_i64(&[1, 1]));
        assert_eq!(c.p(5), IntPoly::from_i64(&[1, 5, 1]));
        assert_eq!(c.p(6), IntPoly::from_i64(&[1, 16, 16, 1]));
    }

    #[test]
    fn p7_from_independent_expansion() {
        // S_7 = 15 P_5 + 10 P_4^2, then P_7 = (1+t) P_6 + t S_7, expanded
        // by hand: 1 + 42t + 127t^2 + 42t^3 + t^4.
        let c = Cache::new();
        assert_eq!(c.p(7), IntPoly::from_i64(&[1, 42, 127, 42, 1]));
    }

    #[test]
    fn s_values() {
        let c = Cache::new();
        assert_eq!(c.s(4), IntPoly::zero());
        assert_eq!(c.s(5), IntPoly::from_i64(&[3]));
        assert_eq!(c.s(6), IntPoly::from_i64(&[10, 10]));
        assert_eq!(c.s(7), IntPoly::from_i64(&[25, 95, 25]));
    }

    #[test]
    fn f_printed_values() {
        let c = Cache::new();
        assert_eq!(c.f(1), BiPoly::one());
        assert_eq!(c.f(2), BiPoly::y());
        // F_3 = 3y^2 + (t-2)y
        let f3 = BiPoly::new(vec![
            IntPoly::zero(),
            IntPoly::from_i64(&[-2, 1]),
            IntPoly::from_i64(&[3]),
        ]);
        assert_eq!(c.f(3), f3);
        // F_4 = 15y^3 + 10(t-2)y^2 + (t-2)(t-3)y
        let f4 = BiPoly::new(vec![
            IntPoly::zero(),
            IntPoly::from_i64(&[6, -5, 1]),
            IntPoly::from_i64(&[-20, 10]),
            IntPoly::from_i64(&[15]),
        ]);
        assert_eq!(c.f(4), f4);
    }

    #[test]
    fn f4_matches_factored_form() {
        // y (t^2 + 10ty - 5t + 15y^2 - 20y + 6)
        let inner = BiPoly::new(vec![
            IntPoly::from_i64(&[6, -5, 1]),
            IntPoly::from_i64(&[-20, 10]),
            IntPoly::from_i64(&[15]),
        ]);
        let c = Cache::new();
        assert_eq!(c.f(4), &BiPoly::y() * &inner);
    }

    #[test]
    fn g_and_k_small_values() {
        let c = Cache::new();
        assert_eq!(c.g(1), IntPoly::one());
        assert_eq!(c.g(2), IntPoly::var());
        assert_eq!(c.g(3), IntPoly::from_i64(&[0, 1, 3]));
        assert_eq!(c.k(1), IntPoly::one());
        assert_eq!(c.k(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(c.k(3), IntPoly::from_i64(&[1, 4, 3]));
    }

    #[test]
    fn ptilde_and_phat() {
        let c = Cache::new();
        assert_eq!(c.ptilde(1), IntPoly::from_i64(&[1, 1]));
        assert_eq!(c.ptilde(2), IntPoly::from_i64(&[1, 2, 1]));
        // Ptilde_3 divisible by (1+t)
        assert!(c.phat(3).is_ok());
        assert_eq!(c.phat(2).unwrap(), IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn fhat_small_values() {
        let c = Cache::new();
        assert_eq!(c.fhat(1), BiPoly::one());
        // Fhat_2 = y + t
        let expect = BiPoly::new(vec![IntPoly::var(), IntPoly::one()]);
        assert_eq!(c.fhat(2), expect);
        // slice at y = 1 is 1 + t = Ptilde_2 / (1+t)
        let slice = c.fhat(2).eval_y_int(&BigInt::one());
        assert_eq!(slice, IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn h_scaled_values() {
        assert_eq!(h_scaled(2), BiPoly::y()); // x, no 1/t dependence
        assert_eq!(h_scaled_at_limit(3), compute_g(3));
        assert_eq!(h_scaled_at_limit(4), compute_g(4));
    }

    #[test]
    fn slice_recovers_p() {
        let c = Cache::new();
        for m in 1..=10u32 {
            let slice = c.f(m).eval_y_int(&BigInt::one());
            assert_eq!(slice, c.p(m + 1), "slice of F_{m} at y=1");
        }
    }

    #[test]
    fn slope_recovers_p_plus_s() {
        let c = Cache::new();
        for m in 2..=10u32 {
            let slope = c.f(m).deriv_y().eval_y_int(&BigInt::one());
            let expect = &c.p(m + 1) + &c.s(m + 2);
            assert_eq!(slope, expect, "slope of F_{m} at y=1");
        }
    }

    #[test]
    fn f_degree_leading_and_linear_coefficient() {
        let c = Cache::new();
        for m in 2..=12u32 {
            let f = c.f(m);
            assert_eq!(f.deg_y(), Some(m as usize - 1));
            assert_eq!(
                *f.leading_y().unwrap(),
                IntPoly::constant(double_factorial_2m_minus_3(m))
            );
            // coefficient of y^1 is prod_{k=2}^{m-1} (t - k)
            let mut prod = IntPoly::one();
            for k in 2..m {
                prod = &prod * &IntPoly::new(vec![BigInt::from(-(k as i64)), BigInt::one()]);
            }
            assert_eq!(f.y_coeff(1), prod);
            // no constant-in-y term for m >= 2
            assert!(f.y_coeff(0).is_zero());
        }
    }

    #[test]
    fn fhat_degree_and_leading() {
        let c = Cache::new();
        for n in 2..=12u32 {
            let f = c.fhat(n);
            assert_eq!(f.deg_y(), Some(n as usize - 1));
            assert_eq!(
                *f.leading_y().unwrap(),
                IntPoly::constant(double_factorial_2m_minus_3(n))
            );
        }
    }

    #[test]
    fn ptilde_divisibility_and_fhat_slice() {
        let c = Cache::new();
        let one_plus_t = IntPoly::from_i64(&[1, 1]);
        for n in 1..=15u32 {
            let phat = c.phat(n).expect("Ptilde divisible by 1+t");
            let slice = c.fhat(n).eval_y_int(&BigInt::one());
            assert_eq!(slice, phat);
            assert_eq!(&slice * &one_plus_t, c.ptilde(n));
        }
    }

    #[test]
    fn family_invariants_hold() {
        let c = Cache::new();
        for n in 1..=25u32 {
            validate_uni(UniFamily::P, n, &c.p(n)).unwrap();
            validate_uni(UniFamily::Ptilde, n, &c.ptilde(n)).unwrap();
            validate_uni(UniFamily::Phat, n, &c.phat(n).unwrap()).unwrap();
            if n >= 4 {
                validate_uni(UniFamily::S, n, &c.s(n)).unwrap();
            }
            if n <= 12 {
                validate_uni(UniFamily::G, n, &c.g(n)).unwrap();
                validate_uni(UniFamily::K, n, &c.k(n)).unwrap();
            }
        }
    }

    #[test]
    fn h_limit_matches_g_up_to_12() {
        for m in 1..=12u32 {
            assert_eq!(h_scaled_at_limit(m), compute_g(m), "H_{m} limit");
        }
    }

    #[test]
    fn memoized_and_fresh_agree() {
        let c = Cache::new();
        for n in (1..=12u32).rev() {
            assert_eq!(c.p(n), compute_p(n));
            assert_eq!(c.ptilde(n), compute_ptilde(n));
            assert_eq!(c.g(n), compute_g(n));
            assert_eq!(c.k(n), compute_k(n));
            assert_eq!(c.f(n), compute_f(n));
            assert_eq!(c.fhat(n), compute_fhat(n));
            if n >= 4 {
                assert_eq!(c.s(n), compute_s(n));
            }
        }
    }

    #[test]
    fn eval_examples() {
        let c = Cache::new();
        assert_eq!(c.p(5).eval(&rat_int(0)), rat_int(1));
        assert_eq!(c.p(4).eval(&rat_int(-1)), rat_int(0));
        // direct substitution: 1 - 16 + 16 - 1 = 0, i.e. -1 is a root of P_6
        assert_eq!(c.p(6).eval(&rat_int(-1)), rat_int(0));
    }
}
