//! Certified real-root counting and isolation for exact-coefficient
//! univariate polynomials, via Sturm sequences with fraction-free
//! pseudo-remainders and content removal.

mod interlace;
mod isolate;

pub use interlace::check_interlacing;
pub use isolate::{isolate_roots, refine, IsolationList, RootInterval};

use crate::arith::{IntPoly, Rat};
use crate::error::{Error, Result};

/// Interval over the reals with optionally infinite, optionally closed
/// endpoints. Closedness of an infinite endpoint is meaningless and
/// ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct Domain {
    pub lo: Bound,
    pub hi: Bound,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl Domain {
    pub fn open(lo: Rat, hi: Rat) -> Domain {
        Domain {
            lo: Bound::Finite(lo),
            hi: Bound::Finite(hi),
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn closed(lo: Rat, hi: Rat) -> Domain {
        Domain {
            lo: Bound::Finite(lo),
            hi: Bound::Finite(hi),
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// Half-open `[lo, hi)`.
    pub fn closed_open(lo: Rat, hi: Rat) -> Domain {
        Domain {
            lo: Bound::Finite(lo),
            hi: Bound::Finite(hi),
            lo_closed: true,
            hi_closed: false,
        }
    }

    /// Half-open `(lo, hi]`.
    pub fn open_closed(lo: Rat, hi: Rat) -> Domain {
        Domain {
            lo: Bound::Finite(lo),
            hi: Bound::Finite(hi),
            lo_closed: false,
            hi_closed: true,
        }
    }

    /// `(-inf, hi)` or `(-inf, hi]`.
    pub fn below(hi: Rat, hi_closed: bool) -> Domain {
        Domain {
            lo: Bound::NegInf,
            hi: Bound::Finite(hi),
            lo_closed: false,
            hi_closed,
        }
    }

    /// `(lo, +inf)` or `[lo, +inf)`.
    pub fn above(lo: Rat, lo_closed: bool) -> Domain {
        Domain {
            lo: Bound::Finite(lo),
            hi: Bound::PosInf,
            lo_closed,
            hi_closed: false,
        }
    }

    pub fn real_line() -> Domain {
        Domain {
            lo: Bound::NegInf,
            hi: Bound::PosInf,
            lo_closed: false,
            hi_closed: false,
        }
    }

    fn validate(&self) -> Result<()> {
        match (&self.lo, &self.hi) {
            (Bound::PosInf, _) | (_, Bound::NegInf) => Err(Error::InvalidInput(
                "interval bounds are reversed".into(),
            )),
            (Bound::Finite(a), Bound::Finite(b)) if a >= b => Err(Error::InvalidInput(
                "interval needs lo < hi".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Signed remainder chain of `p` and its derivative: `chain[0] = p`,
/// `chain[1] = p'`, and `chain[k+1]` is the negated remainder of the two
/// previous members, up to a positive scalar (pseudo-division plus content
/// removal, so coefficients stay integral and only signs survive).
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive()];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(SturmChain { chain });
        }
        chain.push(d.primitive());
        loop {
            let n = chain.len();
            if chain[n - 1].degree().is_none() {
                break;
            }
            let r = chain[n - 2].pseudo_rem_signed(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        Ok(SturmChain { chain })
    }

    pub fn members(&self) -> &[IntPoly] {
        &self.chain
    }

    /// True iff the chain bottomed out at a nonzero constant, i.e. the
    /// input polynomial was square-free.
    pub fn input_square_free(&self) -> bool {
        self.chain
            .last()
            .is_some_and(|p| p.degree() == Some(0) || self.chain.len() == 1)
    }

    /// Number of sign variations at the point, skipping exact zeros.
    pub fn variations_at(&self, x: &Rat) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_neg_inf(&self) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at_neg_inf()))
    }

    pub fn variations_pos_inf(&self) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at_pos_inf()))
    }

    fn variations_bound(&self, b: &Bound) -> usize {
        match b {
            Bound::NegInf => self.variations_neg_inf(),
            Bound::Finite(x) => self.variations_at(x),
            Bound::PosInf => self.variations_pos_inf(),
        }
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut variations = 0;
    let mut last: i8 = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// True iff gcd(p, p') is constant, i.e. no repeated roots.
pub fn is_square_free(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(true);
    }
    Ok(p.gcd(&p.derivative()).degree() == Some(0))
}

/// Exact number of distinct real roots of `p` in the domain. Multiple
/// roots count once: the query runs on the square-free part, for which
/// the variation difference `V(a) - V(b)` counts roots in `(a, b]`.
pub fn count_roots_in(p: &IntPoly, dom: &Domain) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    dom.validate()?;
    let q = p.square_free_part();
    if q.degree() == Some(0) {
        return Ok(0);
    }
    let chain = SturmChain::new(&q)?;
    let v_lo = chain.variations_bound(&dom.lo);
    let v_hi = chain.variations_bound(&dom.hi);
    // v_lo - v_hi counts roots in (lo, hi]
    let mut count = v_lo
        .checked_sub(v_hi)
        .expect("sign variations must not increase left to right");
    if let Bound::Finite(b) = &dom.hi {
        if q.sign_at(b) == 0 && !dom.hi_closed {
            count = count
                .checked_sub(1)
                .expect("a root at the upper endpoint is inside (lo, hi]");
        }
    }
    if let Bound::Finite(a) = &dom.lo {
        if q.sign_at(a) == 0 && dom.lo_closed {
            count += 1;
        }
    }
    Ok(count)
}

/// Root count over the whole real line.
pub fn count_real_roots(p: &IntPoly) -> Result<usize> {
    count_roots_in(p, &Domain::real_line())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn square_free_detection() {
        assert!(is_square_free(&IntPoly::from_i64(&[1, 5, 1])).unwrap());
        assert!(!is_square_free(&IntPoly::from_i64(&[1, 2, 1])).unwrap());
        assert!(is_square_free(&IntPoly::one()).unwrap());
        assert!(is_square_free(&IntPoly::from_i64(&[7])).unwrap());
        assert!(matches!(
            is_square_free(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn count_examples() {
        // roots of 1 + 5t + t^2 are (-5 +- sqrt(21))/2, both negative
        let p5 = IntPoly::from_i64(&[1, 5, 1]);
        assert_eq!(count_roots_in(&p5, &Domain::below(rat_int(0), false)).unwrap(), 2);
        assert_eq!(count_roots_in(&p5, &Domain::above(rat_int(0), true)).unwrap(), 0);
        let p4 = IntPoly::from_i64(&[1, 1]);
        assert_eq!(
            count_roots_in(&p4, &Domain::open(rat_int(-2), rat_int(0))).unwrap(),
            1
        );
    }

    #[test]
    fn endpoint_closures() {
        let p = IntPoly::from_i64(&[1, 1]); // root at -1
        assert_eq!(count_roots_in(&p, &Domain::open(rat_int(-2), rat_int(-1))).unwrap(), 0);
        assert_eq!(
            count_roots_in(&p, &Domain::open_closed(rat_int(-2), rat_int(-1))).unwrap(),
            1
        );
        assert_eq!(
            count_roots_in(&p, &Domain::closed_open(rat_int(-1), rat_int(0))).unwrap(),
            1
        );
        assert_eq!(count_roots_in(&p, &Domain::open(rat_int(-1), rat_int(0))).unwrap(), 0);
        assert_eq!(count_roots_in(&p, &Domain::below(rat_int(-1), true)).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &Domain::below(rat_int(-1), false)).unwrap(), 0);
        assert_eq!(count_roots_in(&p, &Domain::above(rat_int(-1), true)).unwrap(), 1);
    }

    #[test]
    fn deformation_slice_branch_count() {
        // the degree-4 deformation at t = -1 is y (15y^2 - 30y + 12): two
        // positive branches inside (0, 2)
        let slice = IntPoly::from_i64(&[0, 12, -30, 15]);
        assert_eq!(
            count_roots_in(&slice, &Domain::open(rat_int(0), rat_int(2))).unwrap(),
            2
        );
        assert_eq!(
            count_roots_in(&slice, &Domain::above(rat_int(2), true)).unwrap(),
            0
        );
    }

    #[test]
    fn multiple_roots_count_once() {
        // (1+t)^2 (2+t): distinct roots -1, -2
        let p = &IntPoly::from_i64(&[1, 2, 1]) * &IntPoly::from_i64(&[2, 1]);
        assert_eq!(count_real_roots(&p).unwrap(), 2);
        assert_eq!(
            count_roots_in(&p, &Domain::closed(rat_int(-1), rat_int(0))).unwrap(),
            1
        );
    }

    #[test]
    fn partition_additivity() {
        // roots of a product of distinct linear factors
        let mut p = IntPoly::one();
        for r in [-7i64, -3, -1, 2, 5] {
            p = &p * &IntPoly::from_i64(&[-r, 1]);
        }
        let whole = count_roots_in(&p, &Domain::open(rat_int(-10), rat_int(10))).unwrap();
        let left = count_roots_in(&p, &Domain::open_closed(rat_int(-10), rat(3, 2))).unwrap();
        let right = count_roots_in(&p, &Domain::open(rat(3, 2), rat_int(10))).unwrap();
        assert_eq!(whole, left + right);
        assert_eq!(whole, 5);
    }

    #[test]
    fn chain_shape() {
        let p = IntPoly::from_i64(&[1, 5, 1]);
        let chain = SturmChain::new(&p).unwrap();
        assert!(chain.input_square_free());
        assert!(chain.members().len() <= p.degree().unwrap() + 2);
        let sq = IntPoly::from_i64(&[1, 2, 1]);
        let chain = SturmChain::new(&sq).unwrap();
        assert!(!chain.input_square_free());
    }
}
