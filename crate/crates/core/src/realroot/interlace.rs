use super::{count_real_roots, is_square_free, isolate_roots, refine, Domain, RootInterval};
use crate::arith::{rat, IntPoly};
use crate::error::{Error, Result};

const INTERLACE_BUDGET: usize = 512;

/// Decides strict interlacing: the roots of `q` (one degree higher) must
/// alternate strictly with the roots of `p`. Requires both square-free;
/// a shared root is settled exactly through gcd(p, q) and reported as a
/// plain `false`, never as a refinement failure.
pub fn check_interlacing(p: &IntPoly, q: &IntPoly) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dq != dp + 1 {
        return Err(Error::DegreeMismatch {
            expected: dp + 1,
            found: dq,
        });
    }
    if !is_square_free(p)? || !is_square_free(q)? {
        return Err(Error::NotSquareFree);
    }
    // all roots must be real for interlacing to make sense
    if count_real_roots(p)? != dp || count_real_roots(q)? != dq {
        return Ok(false);
    }
    if dp == 0 {
        // a constant has no roots; the single root of q interlaces vacuously
        return Ok(true);
    }
    // a common root makes the alternation non-strict
    if p.gcd(q).degree() != Some(0) {
        return Ok(false);
    }

    let start = rat(1, 4);
    let mut p_roots = isolate_roots(p, &Domain::real_line(), &start)?.into_vec();
    let mut q_roots = isolate_roots(q, &Domain::real_line(), &start)?.into_vec();

    // refine until the two lists are pairwise disjoint across each other
    let mut width = start;
    let mut rounds = 0;
    loop {
        let clash = cross_overlap(&p_roots, &q_roots);
        match clash {
            None => break,
            Some((i, j)) => {
                width /= rat(2, 1);
                p_roots[i] = refine(p, &p_roots[i], &width);
                q_roots[j] = refine(q, &q_roots[j], &width);
            }
        }
        rounds += 1;
        if rounds > INTERLACE_BUDGET {
            return Err(Error::RefinementBudgetExceeded);
        }
    }

    // merge by position and demand the pattern q p q p ... p q
    let mut merged: Vec<(&RootInterval, bool)> = Vec::with_capacity(p_roots.len() + q_roots.len());
    merged.extend(p_roots.iter().map(|iv| (iv, false)));
    merged.extend(q_roots.iter().map(|iv| (iv, true)));
    merged.sort_by(|a, b| a.0.lo().cmp(b.0.lo()));
    if merged.len() != 2 * dp + 1 {
        return Ok(false);
    }
    Ok(merged
        .iter()
        .enumerate()
        .all(|(pos, (_, is_q))| (pos % 2 == 0) == *is_q))
}

fn cross_overlap(a: &[RootInterval], b: &[RootInterval]) -> Option<(usize, usize)> {
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !(x.strictly_before(y) || y.strictly_before(x)) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_p5_interlace() {
        // root -1 of 1+t sits between the roots of 1+5t+t^2
        let p4 = IntPoly::from_i64(&[1, 1]);
        let p5 = IntPoly::from_i64(&[1, 5, 1]);
        assert!(check_interlacing(&p4, &p5).unwrap());
    }

    #[test]
    fn p5_p6_interlace() {
        let p5 = IntPoly::from_i64(&[1, 5, 1]);
        let p6 = IntPoly::from_i64(&[1, 16, 16, 1]);
        assert!(check_interlacing(&p5, &p6).unwrap());
    }

    #[test]
    fn shared_root_is_not_strict() {
        // p = 1+t, q = (1+t)(2+t): square-free pair sharing the root -1
        let p = IntPoly::from_i64(&[1, 1]);
        let q = &p * &IntPoly::from_i64(&[2, 1]);
        assert!(!check_interlacing(&p, &q).unwrap());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let p = IntPoly::from_i64(&[1, 1]);
        let q = IntPoly::from_i64(&[1, 0, 0, 1]);
        assert!(matches!(
            check_interlacing(&p, &q),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn non_real_rooted_is_false() {
        // q = t^2 + 1 has no real roots
        let p = IntPoly::from_i64(&[1, 1]);
        let q = IntPoly::from_i64(&[1, 0, 1]);
        assert!(!check_interlacing(&p, &q).unwrap());
    }

    #[test]
    fn constant_base_is_vacuous() {
        let p = IntPoly::one();
        let q = IntPoly::from_i64(&[1, 1]);
        assert!(check_interlacing(&p, &q).unwrap());
    }

    #[test]
    fn failing_alternation_detected() {
        // p has roots -3, -1; q has roots -4, -3.5, -2: two q-roots in a row
        // left of the first p-root.
        let p = &IntPoly::from_i64(&[3, 1]) * &IntPoly::from_i64(&[1, 1]);
        let q = &(&IntPoly::from_i64(&[4, 1]) * &IntPoly::from_i64(&[7, 2]))
            * &IntPoly::from_i64(&[2, 1]);
        assert!(!check_interlacing(&p, &q).unwrap());
    }
}
