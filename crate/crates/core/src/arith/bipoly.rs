use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{IntPoly, Rat, RatPoly};
use crate::error::Result;

/// Polynomial in `y` whose coefficients are integer polynomials in `t`.
/// `y_coeffs[j]` is the coefficient of `y^j`; the highest-index entry is a
/// nonzero polynomial unless the whole thing is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    y_coeffs: Vec<IntPoly>,
}

impl BiPoly {
    pub fn new(mut y_coeffs: Vec<IntPoly>) -> Self {
        while y_coeffs.last().is_some_and(|c| c.is_zero()) {
            y_coeffs.pop();
        }
        BiPoly { y_coeffs }
    }

    pub fn zero() -> Self {
        BiPoly {
            y_coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::from_t_poly(IntPoly::one())
    }

    /// Embeds a polynomial in `t` as the y-degree-zero coefficient.
    pub fn from_t_poly(p: IntPoly) -> Self {
        BiPoly::new(vec![p])
    }

    /// The monomial `y`.
    pub fn y() -> Self {
        BiPoly::new(vec![IntPoly::zero(), IntPoly::one()])
    }

    /// `p(t) * y^j`.
    pub fn t_poly_times_y_pow(p: IntPoly, j: usize) -> Self {
        if p.is_zero() {
            return BiPoly::zero();
        }
        let mut y_coeffs = vec![IntPoly::zero(); j + 1];
        y_coeffs[j] = p;
        BiPoly { y_coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.y_coeffs.len().checked_sub(1)
    }

    pub fn y_coeffs(&self) -> &[IntPoly] {
        &self.y_coeffs
    }

    pub fn y_coeff(&self, j: usize) -> IntPoly {
        self.y_coeffs.get(j).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn leading_y(&self) -> Option<&IntPoly> {
        self.y_coeffs.last()
    }

    /// Formal partial derivative in `y`.
    pub fn deriv_y(&self) -> BiPoly {
        if self.y_coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.y_coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.mul_scalar(&BigInt::from(j)))
                .collect(),
        )
    }

    /// Exact partial evaluation at `y = y0`; the result is a polynomial in `t`.
    pub fn eval_y(&self, y0: &Rat) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.y_coeffs.iter().rev() {
            acc = &acc.mul_scalar(y0) + &RatPoly::from(c);
        }
        acc
    }

    /// Partial evaluation at an integer `y0`, staying in `Z[t]`.
    pub fn eval_y_int(&self, y0: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.y_coeffs.iter().rev() {
            acc = &acc.mul_scalar(y0) + c;
        }
        acc
    }

    /// Exact partial evaluation at `t = t0`; the result is a polynomial in `y`.
    pub fn eval_t(&self, t0: &Rat) -> RatPoly {
        RatPoly::new(self.y_coeffs.iter().map(|c| c.eval(t0)).collect())
    }

    pub fn eval_t_int(&self, t0: &BigInt) -> IntPoly {
        IntPoly::new(self.y_coeffs.iter().map(|c| c.eval_int(t0)).collect())
    }

    /// Full evaluation at a rational point pair.
    pub fn eval_yt(&self, y0: &Rat, t0: &Rat) -> Rat {
        self.eval_t(t0).eval(y0)
    }

    /// Multiplies every y-coefficient by a polynomial in `t`.
    pub fn mul_t_poly(&self, p: &IntPoly) -> BiPoly {
        if p.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            y_coeffs: self.y_coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            y_coeffs: self.y_coeffs.iter().map(|a| a.mul_scalar(c)).collect(),
        }
    }

    pub fn exact_div_scalar(&self, c: &BigInt) -> Result<BiPoly> {
        let mut out = Vec::with_capacity(self.y_coeffs.len());
        for a in &self.y_coeffs {
            out.push(a.exact_div_scalar(c)?);
        }
        Ok(BiPoly { y_coeffs: out })
    }

    /// Divides every y-coefficient exactly by a polynomial in `t`, e.g. to
    /// strip a common `(t + 1)` factor.
    pub fn exact_div_t_poly(&self, d: &IntPoly) -> Result<BiPoly> {
        let mut out = Vec::with_capacity(self.y_coeffs.len());
        for a in &self.y_coeffs {
            out.push(a.exact_div(d)?);
        }
        Ok(BiPoly { y_coeffs: out })
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.y_coeffs.iter().map(|c| c.to_strings()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<BiPoly> {
        let mut y_coeffs = Vec::with_capacity(rows.len());
        for row in rows {
            y_coeffs.push(IntPoly::from_strings(row)?);
        }
        Ok(BiPoly::new(y_coeffs))
    }

    /// Renders lowest y-power first with coefficients in `t`, e.g.
    /// `(t^2 - 5t + 6)y + (10t - 20)y^2 + 15y^3`.
    pub fn display_with(&self, y_var: &str, t_var: &str) -> String {
        use num_traits::Signed;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (j, c) in self.y_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // constant-in-t coefficients carry their sign into the joiner;
            // genuine t-polynomials are parenthesized whole.
            let (negative, body) = if c.degree() == Some(0) {
                let v = c.constant_term();
                let mag = v.abs();
                let s = if mag == BigInt::one() && j > 0 {
                    String::new()
                } else {
                    mag.to_string()
                };
                (v.is_negative(), s)
            } else {
                (false, format!("({})", c.display_with(t_var)))
            };
            if first {
                if negative {
                    out.push('-');
                }
                first = false;
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
            match j {
                0 => {}
                1 => out.push_str(y_var),
                _ => {
                    out.push_str(y_var);
                    out.push('^');
                    out.push_str(&j.to_string());
                }
            }
        }
        out
    }
}

impl From<IntPoly> for BiPoly {
    fn from(p: IntPoly) -> Self {
        BiPoly::from_t_poly(p)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("y", "t"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.display_with("y", "t"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.y_coeffs.len().max(rhs.y_coeffs.len());
        let mut out = Vec::with_capacity(len);
        for j in 0..len {
            out.push(&self.y_coeff(j) + &rhs.y_coeff(j));
        }
        BiPoly::new(out)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let len = self.y_coeffs.len().max(rhs.y_coeffs.len());
        let mut out = Vec::with_capacity(len);
        for j in 0..len {
            out.push(&self.y_coeff(j) - &rhs.y_coeff(j));
        }
        BiPoly::new(out)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.y_coeffs.len() + rhs.y_coeffs.len() - 1];
        for (i, a) in self.y_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.y_coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            y_coeffs: self.y_coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        BiPoly::from_strings(&rows).map_err(|e| D::Error::custom(e.to_string()))
    }
}
