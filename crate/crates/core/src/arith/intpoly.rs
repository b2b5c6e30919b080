use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{sign_of, Rat};
use crate::error::{Error, Result};

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. `coeffs[i]` is the coefficient of the i-th power; the
/// highest-index entry is nonzero, and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn constant_i64(c: i64) -> Self {
        IntPoly::constant(BigInt::from(c))
    }

    /// The monomial `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        IntPoly::monomial(1, BigInt::one())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of the i-th power (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value by Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at a rational point. Evaluates the homogenization
    /// sum a_i num^i den^(d-i) by integer Horner, which has the same sign
    /// as the value but needs no rational normalization.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let num = x.numer();
        let den = x.denom();
        if den.is_one() {
            return sign_of(&self.eval_int(num));
        }
        let d = self.coeffs.len() - 1;
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        sign_of(&acc)
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, failing if any division is inexact.
    pub fn exact_div_scalar(&self, c: &BigInt) -> Result<IntPoly> {
        if c.is_zero() {
            return Err(Error::NotDivisible);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.push(q);
        }
        Ok(IntPoly { coeffs: out })
    }

    /// Exact polynomial division; errors if `d` does not divide `self`
    /// over the integers.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly> {
        if d.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::NotDivisible);
        }
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &q;
                rem[k + i] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient reversal: x^deg * p(1/x). A polynomial is palindromic
    /// iff it equals its reversal.
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// Sign of the polynomial at -infinity / +infinity, from the leading
    /// coefficient and the degree parity.
    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_of(self.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    pub fn sign_at_pos_inf(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some(c) => sign_of(c),
        }
    }

    /// Cauchy root bound: every real root has absolute value strictly less
    /// than 1 + max|a_i| / |a_d|.
    pub fn cauchy_root_bound(&self) -> Rat {
        let d = self.degree().expect("root bound of the zero polynomial");
        let lead = self.coeffs[d].abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs[..d] {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        Rat::one() + Rat::new(max, lead)
    }

    /// Pseudo-remainder of `self` by `div`, normalized so the result is a
    /// positive-scalar multiple of the true polynomial remainder, then made
    /// primitive. Used by the subresultant-style remainder chains.
    pub fn pseudo_rem_signed(&self, div: &IntPoly) -> IntPoly {
        assert!(!div.is_zero(), "pseudo-remainder by zero");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap();
        let mut rem = self.clone();
        let mut scale_sign = 1i8;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            // rem <- lead * rem - top * x^(rd-dd) * div
            let top = rem.leading().unwrap().clone();
            let mut next = rem.mul_scalar(lead);
            let shifted = div.shift_mul(rd - dd, &top);
            next = &next - &shifted;
            scale_sign *= sign_of(lead);
            debug_assert!(next.degree().is_none_or(|d2| d2 < rd));
            rem = next;
        }
        let mut out = rem.primitive();
        if scale_sign < 0 {
            out = -&out;
        }
        out
    }

    /// `c * x^k * self`.
    fn shift_mul(&self, k: usize, c: &BigInt) -> IntPoly {
        if self.is_zero() || c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[k + i] = a * c;
        }
        IntPoly { coeffs }
    }

    /// Primitive gcd with positive leading coefficient, via the primitive
    /// pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b.abs_leading();
        }
        while !b.is_zero() {
            let r = if a.degree() >= b.degree() {
                a.pseudo_rem_signed(&b)
            } else {
                a.clone()
            };
            a = std::mem::replace(&mut b, r);
            // after the swap: a = old b, b = remainder of old (a, b)
        }
        a.abs_leading()
    }

    fn abs_leading(&self) -> IntPoly {
        match self.leading() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// self / gcd(self, self'): same distinct roots, all simple.
    pub fn square_free_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.exact_div(&g)
                .expect("gcd divides the primitive part")
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(strings: &[String]) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            coeffs.push(
                s.parse::<BigInt>()
                    .map_err(|_| Error::InvalidInput(format!("bad integer literal {s:?}")))?,
            );
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Renders with an explicit variable name, lowest degree first,
    /// e.g. `1 + 16t + 16t^2 + t^3`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            out.push_str(&coeff_part);
            if i == 1 {
                out.push_str(var);
            } else if i > 1 {
                out.push_str(var);
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.display_with("t"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        IntPoly::from_strings(&strings).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn addition_examples() {
        let p = IntPoly::from_i64(&[1, 1]);
        assert_eq!(&p + &-&p, IntPoly::zero());
        assert_eq!(
            &IntPoly::from_i64(&[1, 5, 1]) + &IntPoly::from_i64(&[3]),
            IntPoly::from_i64(&[4, 5, 1])
        );
        let q = IntPoly::from_i64(&[1, 16, 16, 1]);
        assert_eq!(&IntPoly::zero() + &q, q);
    }

    #[test]
    fn multiplication_examples() {
        let p = IntPoly::from_i64(&[1, 1]);
        assert_eq!(&p * &p, IntPoly::from_i64(&[1, 2, 1]));
        assert_eq!(&p * &IntPoly::zero(), IntPoly::zero());
        assert_eq!(
            &IntPoly::from_i64(&[1, 5, 1]) * &p,
            IntPoly::from_i64(&[1, 6, 6, 1])
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            IntPoly::from_i64(&[1, 5, 1]).derivative(),
            IntPoly::from_i64(&[5, 2])
        );
        assert_eq!(IntPoly::from_i64(&[7]).derivative(), IntPoly::zero());
        assert_eq!(
            IntPoly::monomial(3, BigInt::one()).derivative(),
            IntPoly::from_i64(&[0, 0, 3])
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(IntPoly::from_i64(&[1, 5, 1]).eval(&rat_int(0)), rat_int(1));
        assert_eq!(IntPoly::from_i64(&[1, 1]).eval(&rat_int(-1)), rat_int(0));
        assert_eq!(
            IntPoly::from_i64(&[2, -3, 1]).eval(&rat(1, 2)),
            rat(3, 4)
        );
    }

    #[test]
    fn exact_div_examples() {
        let one_plus_t = IntPoly::from_i64(&[1, 1]);
        assert_eq!(
            IntPoly::from_i64(&[1, 2, 1]).exact_div(&one_plus_t).unwrap(),
            one_plus_t
        );
        assert_eq!(
            one_plus_t.exact_div(&IntPoly::one()).unwrap(),
            one_plus_t
        );
        // long division of 1 + 5t + t^2 by 1 + t leaves remainder -3
        assert!(matches!(
            IntPoly::from_i64(&[1, 5, 1]).exact_div(&one_plus_t),
            Err(Error::NotDivisible)
        ));
    }

    #[test]
    fn gcd_and_square_free_part() {
        let p = IntPoly::from_i64(&[1, 2, 1]); // (1+t)^2
        let g = p.gcd(&p.derivative());
        assert_eq!(g, IntPoly::from_i64(&[1, 1]));
        assert_eq!(p.square_free_part(), IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn sign_helpers() {
        let p = IntPoly::from_i64(&[1, 0, -1]); // (1-t)(1+t)
        assert_eq!(p.sign_at(&rat(1, 2)), 1);
        assert_eq!(p.sign_at(&rat_int(1)), 0);
        assert_eq!(p.sign_at(&rat_int(2)), -1);
        assert_eq!(p.sign_at_pos_inf(), -1);
        assert_eq!(p.sign_at_neg_inf(), -1);
        let q = IntPoly::from_i64(&[0, 1]); // t
        assert_eq!(q.sign_at_neg_inf(), -1);
        assert_eq!(q.sign_at_pos_inf(), 1);
    }
}
