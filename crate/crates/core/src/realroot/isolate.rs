use num_traits::Zero;
use serde::Serialize;

use super::{is_square_free, Bound, Domain, SturmChain};
use crate::arith::{pow2_at_least, rat_to_decimal, rat_to_string, IntPoly, Rat};
use crate::error::{Error, Result};

/// Interval certified to contain exactly one simple real root of the
/// target polynomial. `lo == hi` means the root is the rational endpoint
/// itself.
#[derive(Debug, Clone, PartialEq)]
pub struct RootInterval {
    lo: Rat,
    hi: Rat,
}

impl RootInterval {
    pub fn new(lo: Rat, hi: Rat) -> RootInterval {
        assert!(lo <= hi, "interval endpoints out of order");
        RootInterval { lo, hi }
    }

    pub fn exact(r: Rat) -> RootInterval {
        RootInterval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / crate::arith::rat_int(2)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Strictly to the left of the other interval (no shared points).
    pub fn strictly_before(&self, other: &RootInterval) -> bool {
        self.hi < other.lo
    }
}

/// JSON shape for a root interval: exact rational endpoints plus a decimal
/// midpoint for human consumption.
#[derive(Serialize)]
pub struct RootIntervalJson {
    pub lo: String,
    pub hi: String,
    pub mid: String,
}

/// Ordered list of pairwise-disjoint isolating intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolationList {
    intervals: Vec<RootInterval>,
}

impl IsolationList {
    pub fn new(intervals: Vec<RootInterval>) -> Result<IsolationList> {
        for pair in intervals.windows(2) {
            if !pair[0].strictly_before(&pair[1]) {
                return Err(Error::InvalidInput(
                    "isolation intervals must be strictly ordered and disjoint".into(),
                ));
            }
        }
        Ok(IsolationList { intervals })
    }

    pub fn empty() -> IsolationList {
        IsolationList {
            intervals: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, i: usize) -> &RootInterval {
        &self.intervals[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &RootInterval> {
        self.intervals.iter()
    }

    pub fn as_slice(&self) -> &[RootInterval] {
        &self.intervals
    }

    pub fn into_vec(self) -> Vec<RootInterval> {
        self.intervals
    }

    pub fn to_json(&self, decimal_digits: usize) -> Vec<RootIntervalJson> {
        self.intervals
            .iter()
            .map(|iv| RootIntervalJson {
                lo: rat_to_string(iv.lo()),
                hi: rat_to_string(iv.hi()),
                mid: rat_to_decimal(&iv.midpoint(), decimal_digits),
            })
            .collect()
    }
}

const JUMP_BUDGET: usize = 256;
const DISJOIN_BUDGET: usize = 256;

/// Isolates all distinct real roots of a square-free polynomial inside the
/// domain: disjoint intervals of width at most `precision`, each holding
/// exactly one simple root, ordered increasingly. Rational roots come back
/// as exact point intervals.
pub fn isolate_roots(p: &IntPoly, dom: &Domain, precision: &Rat) -> Result<IsolationList> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    assert!(precision > &Rat::zero(), "precision must be positive");
    dom.validate()?;
    if !is_square_free(p)? {
        return Err(Error::NotSquareFree);
    }
    if p.degree() == Some(0) {
        return Ok(IsolationList::empty());
    }
    let chain = SturmChain::new(p)?;
    let bound = pow2_at_least(&p.cauchy_root_bound());

    let mut found: Vec<RootInterval> = Vec::new();

    // Rational roots sitting exactly on closed, finite domain endpoints.
    if let Bound::Finite(a) = &dom.lo {
        if dom.lo_closed && p.sign_at(a) == 0 {
            found.push(RootInterval::exact(a.clone()));
        }
    }
    if let Bound::Finite(b) = &dom.hi {
        if dom.hi_closed && p.sign_at(b) == 0 {
            found.push(RootInterval::exact(b.clone()));
        }
    }

    // Interior roots live in the open window clipped to the root bound.
    let wlo = match &dom.lo {
        Bound::NegInf => -bound.clone(),
        Bound::Finite(a) => {
            if *a < -&bound {
                -bound.clone()
            } else {
                a.clone()
            }
        }
        Bound::PosInf => unreachable!("validated"),
    };
    let whi = match &dom.hi {
        Bound::PosInf => bound.clone(),
        Bound::Finite(b) => {
            if *b > bound {
                bound.clone()
            } else {
                b.clone()
            }
        }
        Bound::NegInf => unreachable!("validated"),
    };

    if wlo < whi {
        // Move off endpoints that are themselves roots so the bisection
        // always works between non-root points.
        let span = &whi - &wlo;
        let a_start = if p.sign_at(&wlo) != 0 {
            wlo.clone()
        } else {
            jump_right(p, &chain, &wlo, &span)?
        };
        let b_start = if p.sign_at(&whi) != 0 {
            whi.clone()
        } else {
            jump_left(p, &chain, &whi, &span)?
        };
        if a_start < b_start {
            let va = chain.variations_at(&a_start);
            let vb = chain.variations_at(&b_start);
            let mut stack = vec![(a_start, b_start, va, vb)];
            while let Some((a, b, va, vb)) = stack.pop() {
                let count = va - vb;
                if count == 0 {
                    continue;
                }
                if count == 1 {
                    found.push(refine_bracket(p, a, b, precision));
                    continue;
                }
                let mid = (&a + &b) / crate::arith::rat_int(2);
                if p.sign_at(&mid) != 0 {
                    let vm = chain.variations_at(&mid);
                    stack.push((a, mid.clone(), va, vm));
                    stack.push((mid, b, vm, vb));
                } else {
                    // the midpoint is a rational root: record it exactly and
                    // continue on both sides of a certified root-free collar
                    found.push(RootInterval::exact(mid.clone()));
                    let span = &b - &a;
                    let left_stop = jump_left(p, &chain, &mid, &span)?;
                    let right_stop = jump_right(p, &chain, &mid, &span)?;
                    let vl = chain.variations_at(&left_stop);
                    let vr = chain.variations_at(&right_stop);
                    stack.push((a, left_stop, va, vl));
                    stack.push((right_stop, b, vr, vb));
                }
            }
        }
    }

    found.sort_by(|x, y| x.lo.cmp(&y.lo));
    enforce_disjoint(p, &mut found, precision)?;
    IsolationList::new(found)
}

/// Finds `x + eta` with `p(x + eta) != 0` and no roots in `(x, x + eta]`.
fn jump_right(p: &IntPoly, chain: &SturmChain, x: &Rat, span: &Rat) -> Result<Rat> {
    let two = crate::arith::rat_int(2);
    let mut eta = span / &crate::arith::rat_int(4);
    let vx = chain.variations_at(x);
    for _ in 0..JUMP_BUDGET {
        let candidate = x + &eta;
        if p.sign_at(&candidate) != 0 && vx - chain.variations_at(&candidate) == 0 {
            return Ok(candidate);
        }
        eta = &eta / &two;
    }
    Err(Error::RefinementBudgetExceeded)
}

/// Finds `x - eta` with `p(x - eta) != 0` and no roots in `[x - eta, x)`.
fn jump_left(p: &IntPoly, chain: &SturmChain, x: &Rat, span: &Rat) -> Result<Rat> {
    let two = crate::arith::rat_int(2);
    let mut eta = span / &crate::arith::rat_int(4);
    let vx = chain.variations_at(x);
    let root_here = if p.sign_at(x) == 0 { 1 } else { 0 };
    for _ in 0..JUMP_BUDGET {
        let candidate = x - &eta;
        if p.sign_at(&candidate) != 0
            && chain.variations_at(&candidate) - vx == root_here
        {
            return Ok(candidate);
        }
        eta = &eta / &two;
    }
    Err(Error::RefinementBudgetExceeded)
}

/// Shrinks a bracket with nonzero, opposite endpoint signs down to the
/// requested width by bisection, detecting exact rational roots.
fn refine_bracket(p: &IntPoly, mut lo: Rat, mut hi: Rat, precision: &Rat) -> RootInterval {
    let two = crate::arith::rat_int(2);
    let mut s_lo = p.sign_at(&lo);
    debug_assert!(s_lo != 0 && p.sign_at(&hi) != 0);
    debug_assert!(s_lo != p.sign_at(&hi), "bracket must straddle the root");
    while &hi - &lo > *precision {
        let mid = (&lo + &hi) / &two;
        let s_mid = p.sign_at(&mid);
        if s_mid == 0 {
            return RootInterval::exact(mid);
        }
        if s_mid == s_lo {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
        }
    }
    // bisection only lands on roots reachable from its own dyadic grid;
    // probing the simplest rational inside the bracket recovers rational
    // roots (like y = 1 on a crossing) exactly
    let candidate = simplest_rational_between(&lo, &hi);
    if p.sign_at(&candidate) == 0 {
        return RootInterval::exact(candidate);
    }
    RootInterval::new(lo, hi)
}

/// The rational with the smallest denominator in the closed interval,
/// found by walking the continued-fraction expansion of the endpoints.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    use num_traits::Signed;
    assert!(lo <= hi);
    if lo == hi {
        return lo.clone();
    }
    let zero = Rat::zero();
    if *lo <= zero && zero <= *hi {
        return zero;
    }
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else {
        -simplest_positive(&-hi, &-lo)
    }
}

// assumes 0 < lo < hi
fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    use num_traits::One;
    let ceil_lo = lo.ceil();
    if ceil_lo <= *hi {
        return ceil_lo;
    }
    let whole = lo.floor();
    let inv = simplest_positive(&(Rat::one() / (hi - &whole)), &(Rat::one() / (lo - &whole)));
    whole + Rat::one() / inv
}

/// Adjacent brackets produced by splitting can share an endpoint; bisect
/// them further until every pair is strictly disjoint.
fn enforce_disjoint(p: &IntPoly, list: &mut [RootInterval], precision: &Rat) -> Result<()> {
    for _ in 0..DISJOIN_BUDGET {
        let mut touched = false;
        for i in 1..list.len() {
            if !list[i - 1].strictly_before(&list[i]) {
                let tighter = precision / &crate::arith::rat_int(2);
                list[i - 1] = refine(p, &list[i - 1], &tighter);
                list[i] = refine(p, &list[i], &tighter);
                touched = true;
            }
        }
        if !touched {
            return Ok(());
        }
    }
    Err(Error::RefinementBudgetExceeded)
}

/// Refines an isolating interval to width at most `precision`. The
/// interval must isolate one simple root of `p`; exact intervals pass
/// through unchanged.
pub fn refine(p: &IntPoly, iv: &RootInterval, precision: &Rat) -> RootInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let s_lo = p.sign_at(iv.lo());
    if s_lo == 0 {
        return RootInterval::exact(iv.lo().clone());
    }
    let s_hi = p.sign_at(iv.hi());
    if s_hi == 0 {
        return RootInterval::exact(iv.hi().clone());
    }
    assert!(
        s_lo != s_hi,
        "interval does not isolate a single simple root"
    );
    let candidate = simplest_rational_between(iv.lo(), iv.hi());
    if p.sign_at(&candidate) == 0 {
        return RootInterval::exact(candidate);
    }
    if iv.width() <= *precision {
        // already narrow enough, but halve once if the caller is trying to
        // split away from a shared endpoint
        let mid = iv.midpoint();
        let s_mid = p.sign_at(&mid);
        if s_mid == 0 {
            return RootInterval::exact(mid);
        }
        return if s_mid == s_lo {
            RootInterval::new(mid, iv.hi().clone())
        } else {
            RootInterval::new(iv.lo().clone(), mid)
        };
    }
    refine_bracket(p, iv.lo().clone(), iv.hi().clone(), precision)
}
