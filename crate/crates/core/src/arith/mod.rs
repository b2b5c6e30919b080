//! Exact arithmetic foundation: arbitrary-precision rationals, dense
//! univariate polynomials over the integers and rationals, and bivariate
//! polynomials in `y` whose coefficients live in `Z[t]`.

mod bipoly;
mod intpoly;
mod ratpoly;

pub use bipoly::BiPoly;
pub use intpoly::IntPoly;
pub use ratpoly::RatPoly;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sign of a big integer as -1 / 0 / +1.
pub fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn sign_of_rat(x: &Rat) -> i8 {
    sign_of(x.numer())
}

/// Parses an exact rational from `p/q`, a plain integer, a decimal string
/// such as `-4.79128785`, or scientific notation like `1e-8` (which is
/// exact: mantissa times a power of ten).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidInput("empty rational literal".into()));
    }
    if let Some(pos) = s.find(['e', 'E']) {
        let mantissa = parse_rat(&s[..pos])?;
        let exp: i32 = s[pos + 1..]
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad exponent in {s:?}")))?;
        let ten = BigInt::from(10u32);
        let scale = if exp >= 0 {
            Rat::from_integer(ten.pow(exp as u32))
        } else {
            Rat::new(BigInt::one(), ten.pow(exp.unsigned_abs()))
        };
        return Ok(mantissa * scale);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let digits = frac_part.trim();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidInput(format!("bad decimal literal {s:?}")));
        }
        let negative = int_part.trim_start().starts_with('-');
        let int_str = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            format!("{int_part}0")
        } else {
            int_part.to_string()
        };
        let whole: BigInt = int_str
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad decimal literal {s:?}")))?;
        let frac: BigInt = digits
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad decimal literal {s:?}")))?;
        let scale = BigInt::from(10u32).pow(digits.len() as u32);
        let mut numer = whole.abs() * &scale + frac;
        if negative {
            numer = -numer;
        }
        return Ok(Rat::new(numer, scale));
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad rational literal {s:?}")))?;
    Ok(Rat::from_integer(n))
}

/// Renders a rational as `p/q` (or just `p` when the denominator is 1).
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Fixed-point decimal rendering with `digits` fractional digits,
/// rounding half away from zero.
pub fn rat_to_decimal(x: &Rat, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * Rat::from_integer(scale.clone());
    // round half away from zero
    let two = BigInt::from(2);
    let num = scaled.numer();
    let den = scaled.denom();
    let (q, r) = num_integer::Integer::div_rem(num, den);
    let rounded = if (&r.abs() * &two) >= *den {
        if num.is_negative() {
            q - BigInt::one()
        } else {
            q + BigInt::one()
        }
    } else {
        q
    };
    let negative = rounded.is_negative();
    let mag = rounded.abs();
    let (whole, frac) = num_integer::Integer::div_rem(&mag, &scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        out.push('.');
        let frac_str = frac.to_string();
        for _ in frac_str.len()..digits {
            out.push('0');
        }
        out.push_str(&frac_str);
    }
    out
}

/// Smallest power of two that is >= `x` (x must be positive). Used to pick
/// dyadic root bounds.
pub fn pow2_at_least(x: &Rat) -> Rat {
    assert!(x.is_positive(), "pow2_at_least needs a positive input");
    let two = rat_int(2);
    let mut p = Rat::one();
    if p < *x {
        while p < *x {
            p *= &two;
        }
    } else {
        loop {
            let half = &p / &two;
            if half >= *x {
                p = half;
            } else {
                break;
            }
        }
    }
    p
}
