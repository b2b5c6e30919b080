//! Tracking of the ordered positive y-root branches of the deformations
//! over grids of negative rational t, certification of where each branch
//! crosses the slice `y = 1`, and reproduction of the published branch
//! coordinate table for the degree-4 deformation.
//!
//! Branch identity across grid points is assigned purely by order: roots
//! never collide at a fixed negative t, so the i-th smallest root is the
//! i-th branch. No continuation or predictor step is used, and no
//! monotonicity of branches is assumed anywhere: crossings come from the
//! exact slice polynomial, and the grid only certifies which branch owns
//! each crossing.

use num_traits::{One, Signed, Zero};

use crate::arith::{parse_rat, rat, rat_int, rat_to_decimal, rat_to_string, IntPoly, Rat};
use crate::error::{Error, Result};
use crate::realroot::{count_roots_in, isolate_roots, refine, Domain, IsolationList, RootInterval};
use crate::recurrences::{Cache, DeformFamily};
use crate::verify::{slice_at_t, CheckResult};

/// Isolated positive roots of one deformation member at one grid point.
#[derive(Debug, Clone)]
pub struct BranchPoint {
    pub t: Rat,
    pub roots: IsolationList,
}

/// Sampled positive root branches over a decreasing grid of negative t.
#[derive(Debug, Clone)]
pub struct BranchTrace {
    pub family: DeformFamily,
    pub index: u32,
    pub points: Vec<BranchPoint>,
}

/// One certified crossing of the slice `y = 1`: the branch that crosses,
/// the isolating interval of the crossing time, and the two rational
/// sample times bracketing it at which the branch provably sits above
/// (left) and below (right) the slice.
#[derive(Debug, Clone)]
pub struct CrossingRecord {
    pub branch: usize,
    pub tau: RootInterval,
    pub bracket: (Rat, Rat),
}

/// Slice polynomial whose roots are the crossing times of the family.
pub fn crossing_polynomial(cache: &Cache, family: DeformFamily, index: u32) -> Result<IntPoly> {
    match family {
        DeformFamily::F => Ok(cache.p(index + 1)),
        DeformFamily::Fhat => cache.phat(index),
    }
}

/// Isolates the positive roots in `(0, 1 - t)` at every grid point, to the
/// requested width, and checks the count the root-location theory fixes.
pub fn track_branches(
    cache: &Cache,
    family: DeformFamily,
    index: u32,
    grid: &[Rat],
    width: &Rat,
) -> Result<BranchTrace> {
    let expected = family.positive_root_count(index);
    let deform = cache.deform(family, index);
    let mut points = Vec::with_capacity(grid.len());
    for t0 in grid {
        if !t0.is_negative() {
            return Err(Error::InvalidInput(format!(
                "grid point {} is not negative",
                rat_to_string(t0)
            )));
        }
        let q = slice_at_t(&deform, t0);
        let upper = Rat::one() - t0;
        let roots = isolate_roots(&q, &Domain::open(Rat::zero(), upper), width)?;
        if roots.len() != expected {
            return Err(Error::CountMismatch {
                expected,
                found: roots.len(),
                at: format!("t = {}", rat_to_string(t0)),
            });
        }
        points.push(BranchPoint {
            t: t0.clone(),
            roots,
        });
    }
    Ok(BranchTrace {
        family,
        index,
        points,
    })
}

const CROSSING_WIDTH_HALVINGS: usize = 256;

/// Finds every crossing of `y = 1`: isolates the roots of the exact slice
/// polynomial, then certifies branch ownership by Sturm counts on the
/// deformation at rational times just left and right of each root
/// interval.
pub fn find_crossings(
    cache: &Cache,
    family: DeformFamily,
    index: u32,
    width: &Rat,
) -> Result<Vec<CrossingRecord>> {
    let d = family.positive_root_count(index);
    if d == 0 {
        return Ok(Vec::new());
    }
    let slice = crossing_polynomial(cache, family, index)?;
    let deg = slice.degree().ok_or(Error::ZeroPolynomial)?;
    if deg != d {
        return Err(Error::CountMismatch {
            expected: d,
            found: deg,
            at: "degree of the crossing polynomial".into(),
        });
    }
    if count_roots_in(&slice, &Domain::above(Rat::zero(), true))? != 0 {
        return Err(Error::CountMismatch {
            expected: 0,
            found: 1,
            at: "nonnegative roots of the crossing polynomial".into(),
        });
    }
    let mut taus = isolate_roots(&slice, &Domain::below(Rat::zero(), false), width)?.into_vec();
    if taus.len() != d {
        return Err(Error::CountMismatch {
            expected: d,
            found: taus.len(),
            at: "crossing count".into(),
        });
    }
    // the rightmost interval must end strictly below zero to leave room
    // for a negative sample time
    let mut halvings = 0;
    while !taus[d - 1].hi().is_negative() {
        let tighter = taus[d - 1].width() / rat_int(4);
        taus[d - 1] = refine(&slice, &taus[d - 1], &tighter);
        halvings += 1;
        if halvings > CROSSING_WIDTH_HALVINGS {
            return Err(Error::RefinementBudgetExceeded);
        }
    }

    let deform = cache.deform(family, index);
    // sample times in the gaps: one left of all crossings, one between
    // each adjacent pair, one between the last crossing and zero
    let mut samples = Vec::with_capacity(d + 1);
    samples.push(taus[0].lo() - Rat::one());
    for i in 1..d {
        samples.push((taus[i - 1].hi() + taus[i].lo()) / rat_int(2));
    }
    samples.push(taus[d - 1].hi() / rat_int(2));

    // at the j-th sample (j crossings passed), j branches are below the
    // slice and d - j are above
    for (j, t0) in samples.iter().enumerate() {
        certify_split(&deform, t0, j, d)?;
    }

    let mut records = Vec::with_capacity(d);
    for (i, tau) in taus.into_iter().enumerate() {
        records.push(CrossingRecord {
            branch: i + 1,
            bracket: (samples[i].clone(), samples[i + 1].clone()),
            tau,
        });
    }
    Ok(records)
}

/// Sturm-counts the slice at a fixed time and demands `below` branches in
/// `(0, 1)` and the rest in `(1, 1 - t)`, with `y = 1` not a root.
fn certify_split(deform: &crate::arith::BiPoly, t0: &Rat, below: usize, total: usize) -> Result<()> {
    let q = slice_at_t(deform, t0);
    let one = Rat::one();
    if q.sign_at(&one) == 0 {
        return Err(Error::CountMismatch {
            expected: 0,
            found: 1,
            at: format!("root at y = 1 for t = {}", rat_to_string(t0)),
        });
    }
    let low = count_roots_in(&q, &Domain::open(Rat::zero(), one.clone()))?;
    if low != below {
        return Err(Error::CountMismatch {
            expected: below,
            found: low,
            at: format!("branches below the slice at t = {}", rat_to_string(t0)),
        });
    }
    let upper = Rat::one() - t0;
    let high = count_roots_in(&q, &Domain::open(one, upper))?;
    if high != total - below {
        return Err(Error::CountMismatch {
            expected: total - below,
            found: high,
            at: format!("branches above the slice at t = {}", rat_to_string(t0)),
        });
    }
    Ok(())
}

/// Sentinel checks for the endpoint behavior of the branches: all below
/// the slice at `t = -1/1024`, all above at `t = -2^20`. These are finite
/// witnesses of the two limit statements, not proofs of the limits.
pub fn check_endpoint_behavior(cache: &Cache, family: DeformFamily, index: u32) -> CheckResult {
    let d = family.positive_root_count(index);
    if d == 0 {
        return Ok(());
    }
    let deform = cache.deform(family, index);
    let near = rat(-1, 1024);
    let q = slice_at_t(&deform, &near);
    let upper = Rat::one() - &near;
    let at_or_above = count_roots_in(&q, &Domain::closed_open(Rat::one(), upper))
        .map_err(|e| e.to_string())?;
    if at_or_above != 0 {
        return Err(format!(
            "{at_or_above} branches at or above the slice at t = -1/1024"
        ));
    }
    let below = count_roots_in(&q, &Domain::open(Rat::zero(), Rat::one()))
        .map_err(|e| e.to_string())?;
    if below != d {
        return Err(format!(
            "expected {d} branches below the slice at t = -1/1024, found {below}"
        ));
    }

    let far = rat_int(-(1 << 20));
    let q = slice_at_t(&deform, &far);
    let upper = Rat::one() - &far;
    let at_or_below = count_roots_in(&q, &Domain::open_closed(Rat::zero(), Rat::one()))
        .map_err(|e| e.to_string())?;
    if at_or_below != 0 {
        return Err(format!(
            "{at_or_below} branches at or below the slice at t = -2^20"
        ));
    }
    let above = count_roots_in(&q, &Domain::open(Rat::one(), upper)).map_err(|e| e.to_string())?;
    if above != d {
        return Err(format!(
            "expected {d} branches above the slice at t = -2^20, found {above}"
        ));
    }
    Ok(())
}

/// Far-field scaling witness: at a very negative `t_big`, the scaled
/// branch values `r_i(t)/t` match the nonzero roots of the limit family
/// `G_m` within `tol`, in matching order.
pub fn check_scaled_limit(cache: &Cache, m: u32, t_big: &Rat, tol: &Rat) -> CheckResult {
    if !t_big.is_negative() {
        return Err("t_big must be negative".into());
    }
    let d = DeformFamily::F.positive_root_count(m);
    if d == 0 {
        return Ok(());
    }
    let branch_width = -(t_big * tol) / rat_int(8);
    let trace = track_branches(cache, DeformFamily::F, m, std::slice::from_ref(t_big), &branch_width)
        .map_err(|e| e.to_string())?;
    let mut scaled: Vec<Rat> = trace.points[0]
        .roots
        .iter()
        .map(|iv| iv.midpoint() / t_big)
        .collect();
    scaled.sort();

    let g = cache.g(m);
    let g_width = tol / rat_int(8);
    let alphas = isolate_roots(&g, &Domain::open(-Rat::one(), Rat::zero()), &g_width)
        .map_err(|e| e.to_string())?;
    if alphas.len() != d {
        return Err(format!(
            "expected {d} nonzero roots of G_{m}, found {}",
            alphas.len()
        ));
    }
    for (i, (s, alpha)) in scaled.iter().zip(alphas.iter()).enumerate() {
        let gap = (s - alpha.midpoint()).abs();
        if gap > *tol {
            return Err(format!(
                "scaled branch {} is {} away from the matching root of G_{m}",
                i + 1,
                rat_to_decimal(&gap, 9)
            ));
        }
    }
    Ok(())
}

/// Dyadic geometric ladder from `-1/1024` down to `-1024` (multiplicative
/// step 2), densified by bisection until no gap holds two roots of the
/// slice polynomial. Returned in decreasing order.
pub fn default_grid(slice: &IntPoly) -> Result<Vec<Rat>> {
    let mut ascending: Vec<Rat> = (-10..=10).rev().map(|k| -pow2(k)).collect();
    // split any gap containing more than one crossing
    let mut i = 0;
    while i + 1 < ascending.len() {
        let count = count_roots_in(
            slice,
            &Domain::open(ascending[i].clone(), ascending[i + 1].clone()),
        )?;
        if count >= 2 {
            let mid = (&ascending[i] + &ascending[i + 1]) / rat_int(2);
            ascending.insert(i + 1, mid);
        } else {
            i += 1;
        }
    }
    ascending.reverse();
    Ok(ascending)
}

fn pow2(k: i32) -> Rat {
    if k >= 0 {
        rat_int(1i64 << k)
    } else {
        rat(1, 1i64 << (-k))
    }
}

/// The 29 published grid times for the degree-4 deformation figure, with
/// the printed coordinates of its two positive branches.
pub const FIGURE_TABLE: [(&str, &str, &str); 29] = [
    ("-5.10000000", "1.03733935", "3.69599398"),
    ("-4.90000000", "1.01314336", "3.58685664"),
    ("-4.79128785", "1.00000000", "3.52752523"),
    ("-4.60000000", "0.97688921", "3.42311079"),
    ("-4.30000000", "0.94068986", "3.25931014"),
    ("-4.00000000", "0.90455488", "3.09544512"),
    ("-3.70000000", "0.86849624", "2.93150376"),
    ("-3.40000000", "0.83252907", "2.76747093"),
    ("-3.10000000", "0.79667282", "2.60332718"),
    ("-2.80000000", "0.76095292", "2.43904708"),
    ("-2.50000000", "0.72540333", "2.27459667"),
    ("-2.20000000", "0.69007043", "2.10992957"),
    ("-1.90000000", "0.65501938", "1.94498062"),
    ("-1.60000000", "0.62034493", "1.77965507"),
    ("-1.30000000", "0.58619070", "1.61380930"),
    ("-1.00000000", "0.55278640", "1.44721360"),
    ("-0.75000000", "0.52579869", "1.30753465"),
    ("-0.55000000", "0.50503623", "1.19496377"),
    ("-0.40000000", "0.49016133", "1.10983867"),
    ("-0.30000000", "0.48069853", "1.05263481"),
    ("-0.25000000", "0.47613872", "1.02386128"),
    ("-0.22000000", "0.47346670", "1.00653330"),
    ("-0.20871215", "0.47247477", "1.00000000"),
    ("-0.20000000", "0.47171444", "0.99495222"),
    ("-0.15000000", "0.46744566", "0.96588768"),
    ("-0.10000000", "0.46335681", "0.93664319"),
    ("-0.05000000", "0.45947822", "0.90718845"),
    ("-0.02000000", "0.45726750", "0.88939917"),
    ("-0.01000000", "0.45655211", "0.88344789"),
];

/// The published crossing times of the two branches with the slice.
pub const FIGURE_CROSSINGS: [&str; 2] = ["-4.79128785", "-0.20871215"];

/// The figure's t-grid as exact rationals, in the printed (decreasing)
/// order.
pub fn figure_grid() -> Vec<Rat> {
    FIGURE_TABLE
        .iter()
        .map(|(t, _, _)| parse_rat(t).expect("embedded figure time"))
        .collect()
}

/// Reproduction check for the published coordinate table: branch
/// midpoints within `5e-7` of every printed value, and the two crossing
/// intervals within `5e-7` of the printed crossing times.
pub fn check_figure_reproduction(cache: &Cache) -> CheckResult {
    let tol = rat(5, 10_000_000);
    let width = rat(1, 100_000_000);
    let grid = figure_grid();
    let trace = track_branches(cache, DeformFamily::F, 4, &grid, &width)
        .map_err(|e| e.to_string())?;
    for (point, (t_str, low_str, high_str)) in trace.points.iter().zip(FIGURE_TABLE.iter()) {
        let expect_low = parse_rat(low_str).unwrap();
        let expect_high = parse_rat(high_str).unwrap();
        let got_low = point.roots.get(0).midpoint();
        let got_high = point.roots.get(1).midpoint();
        if (&got_low - &expect_low).abs() > tol {
            return Err(format!(
                "lower branch at t = {t_str}: got {}, printed {low_str}",
                rat_to_decimal(&got_low, 8)
            ));
        }
        if (&got_high - &expect_high).abs() > tol {
            return Err(format!(
                "upper branch at t = {t_str}: got {}, printed {high_str}",
                rat_to_decimal(&got_high, 8)
            ));
        }
    }
    let crossings =
        find_crossings(cache, DeformFamily::F, 4, &width).map_err(|e| e.to_string())?;
    if crossings.len() != 2 {
        return Err(format!("expected 2 crossings, found {}", crossings.len()));
    }
    for (record, printed) in crossings.iter().zip(FIGURE_CROSSINGS.iter()) {
        let expect = parse_rat(printed).unwrap();
        let mid = record.tau.midpoint();
        if (&mid - &expect).abs() > tol {
            return Err(format!(
                "crossing {} at {}, printed {printed}",
                record.branch,
                rat_to_decimal(&mid, 8)
            ));
        }
    }
    Ok(())
}

/// Finite-grid shadow of the one-crossing-per-branch count: along the
/// default grid each branch's sign of (midpoint - 1) changes exactly once,
/// the change bracket holds exactly one certified root of the slice
/// polynomial, and the total crossing count matches the degree.
pub fn check_crossing_shadow(cache: &Cache, n: u32, width: &Rat) -> CheckResult {
    if n < 5 {
        return Err("the shadow check needs n >= 5".into());
    }
    let m = n - 1;
    let d = n as usize - 3;
    let slice = cache.p(n);
    let crossings =
        find_crossings(cache, DeformFamily::F, m, width).map_err(|e| e.to_string())?;
    if crossings.len() != d {
        return Err(format!(
            "expected {d} crossings, found {}",
            crossings.len()
        ));
    }
    let grid = default_grid(&slice).map_err(|e| e.to_string())?;
    let trace =
        track_branches(cache, DeformFamily::F, m, &grid, width).map_err(|e| e.to_string())?;
    for branch in 0..d {
        let signs: Vec<i8> = trace
            .points
            .iter()
            .map(|pt| {
                let mid = pt.roots.get(branch).midpoint();
                crate::arith::sign_of_rat(&(&mid - &Rat::one()))
            })
            .collect();
        // walking from t near zero downward the branch starts below the
        // slice and ends above it
        let mut changes = Vec::new();
        let mut last_nonzero: Option<(usize, i8)> = None;
        for (j, s) in signs.iter().enumerate() {
            if *s == 0 {
                // the branch meets the slice exactly at this grid time
                changes.push((j, j));
                continue;
            }
            if let Some((jp, sp)) = last_nonzero {
                if sp != *s {
                    // skip the pair already accounted for by an exact hit
                    let already = changes.last().is_some_and(|&(a, b)| a == b && b > jp);
                    if !already {
                        changes.push((jp, j));
                    }
                }
            }
            last_nonzero = Some((j, *s));
        }
        if changes.len() != 1 {
            return Err(format!(
                "branch {} changes side {} times along the grid",
                branch + 1,
                changes.len()
            ));
        }
        let (ja, jb) = changes[0];
        if ja == jb {
            // exact hit at a grid time: the crossing is that rational time
            let t_exact = &trace.points[ja].t;
            if !slice.eval(t_exact).is_zero() {
                return Err(format!(
                    "branch {} meets the slice at t = {} but the slice polynomial is nonzero",
                    branch + 1,
                    rat_to_string(t_exact)
                ));
            }
        } else {
            let hi = &trace.points[ja].t; // larger t (closer to zero)
            let lo = &trace.points[jb].t;
            let inside = count_roots_in(&slice, &Domain::open(lo.clone(), hi.clone()))
                .map_err(|e| e.to_string())?;
            if inside != 1 {
                return Err(format!(
                    "bracket ({}, {}) for branch {} holds {} roots",
                    rat_to_string(lo),
                    rat_to_string(hi),
                    branch + 1,
                    inside
                ));
            }
        }
    }
    Ok(())
}

/// CSV rendering of a branch trace: decimal columns at the requested
/// precision plus exact rational companions, one row per (time, branch).
pub fn branches_csv(trace: &BranchTrace, digits: usize) -> String {
    let mut out = String::from("t,branch,mid,lo,hi,t_exact,lo_exact,hi_exact\n");
    for point in &trace.points {
        for (i, iv) in point.roots.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                rat_to_decimal(&point.t, digits),
                i + 1,
                rat_to_decimal(&iv.midpoint(), digits),
                rat_to_decimal(iv.lo(), digits),
                rat_to_decimal(iv.hi(), digits),
                rat_to_string(&point.t),
                rat_to_string(iv.lo()),
                rat_to_string(iv.hi()),
            ));
        }
    }
    out
}

/// JSON shape for the crossing report.
pub fn crossings_json(records: &[CrossingRecord]) -> serde_json::Value {
    serde_json::Value::Array(
        records
            .iter()
            .map(|r| {
                serde_json::json!({
                    "branch": r.branch,
                    "tau_lo": rat_to_string(r.tau.lo()),
                    "tau_hi": rat_to_string(r.tau.hi()),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_width() -> Rat {
        rat(1, 1_000_000)
    }

    #[test]
    fn linear_branch_of_f3() {
        // the single branch of the degree-3 member is y = (2 - t)/3
        let c = Cache::new();
        for t0 in [rat_int(-1), rat(-1, 2), rat_int(-7)] {
            let trace =
                track_branches(&c, DeformFamily::F, 3, std::slice::from_ref(&t0), &small_width()).unwrap();
            let expect = (rat_int(2) - &t0) / rat_int(3);
            let iv = trace.points[0].roots.get(0);
            assert!(iv.contains(&expect), "t = {t0}");
        }
    }

    #[test]
    fn figure_values_at_selected_times() {
        let c = Cache::new();
        let grid = vec![rat_int(-1), rat(-5, 2)];
        let trace = track_branches(&c, DeformFamily::F, 4, &grid, &rat(1, 100_000_000)).unwrap();
        let tol = rat(5, 10_000_000);
        let expect = [
            ("0.55278640", "1.44721360"),
            ("0.72540333", "2.27459667"),
        ];
        for (point, (lo, hi)) in trace.points.iter().zip(expect.iter()) {
            assert!((point.roots.get(0).midpoint() - parse_rat(lo).unwrap()).abs() <= tol);
            assert!((point.roots.get(1).midpoint() - parse_rat(hi).unwrap()).abs() <= tol);
        }
    }

    #[test]
    fn f3_crossing_is_exactly_minus_one() {
        let c = Cache::new();
        let records = find_crossings(&c, DeformFamily::F, 3, &small_width()).unwrap();
        assert_eq!(records.len(), 1);
        assert!(records[0].tau.contains(&rat_int(-1)));
    }

    #[test]
    fn fhat2_crossing_is_exactly_minus_one() {
        let c = Cache::new();
        let records = find_crossings(&c, DeformFamily::Fhat, 2, &small_width()).unwrap();
        assert_eq!(records.len(), 1);
        assert!(records[0].tau.contains(&rat_int(-1)));
    }

    #[test]
    fn f4_crossings_match_figure() {
        let c = Cache::new();
        let records = find_crossings(&c, DeformFamily::F, 4, &rat(1, 100_000_000)).unwrap();
        assert_eq!(records.len(), 2);
        let tol = rat(5, 10_000_000);
        let left = parse_rat("-4.79128785").unwrap();
        let right = parse_rat("-0.20871215").unwrap();
        assert!((records[0].tau.midpoint() - left).abs() <= tol);
        assert!((records[1].tau.midpoint() - right).abs() <= tol);
        assert_eq!(records[0].branch, 1);
        assert_eq!(records[1].branch, 2);
    }

    #[test]
    fn endpoint_behavior_examples() {
        let c = Cache::new();
        assert!(check_endpoint_behavior(&c, DeformFamily::F, 4).is_ok());
        assert!(check_endpoint_behavior(&c, DeformFamily::F, 8).is_ok());
        assert!(check_endpoint_behavior(&c, DeformFamily::Fhat, 5).is_ok());
    }

    #[test]
    fn scaled_limit_examples() {
        let c = Cache::new();
        let t_big = rat_int(-1_000_000);
        let tol = rat(1, 1000);
        assert!(check_scaled_limit(&c, 3, &t_big, &tol).is_ok());
        assert!(check_scaled_limit(&c, 4, &t_big, &tol).is_ok());
        assert!(check_scaled_limit(&c, 2, &t_big, &tol).is_ok()); // vacuous
    }

    #[test]
    fn default_grid_is_decreasing_and_separating() {
        let c = Cache::new();
        let slice = c.p(8);
        let grid = default_grid(&slice).unwrap();
        for pair in grid.windows(2) {
            assert!(pair[0] > pair[1]);
        }
        for pair in grid.windows(2) {
            let inside =
                count_roots_in(&slice, &Domain::open(pair[1].clone(), pair[0].clone())).unwrap();
            assert!(inside <= 1);
        }
    }

    #[test]
    fn adjacent_branches_are_disjoint() {
        let c = Cache::new();
        let grid = default_grid(&c.p(7)).unwrap();
        let trace = track_branches(&c, DeformFamily::F, 6, &grid, &small_width()).unwrap();
        for point in &trace.points {
            for pair in point.roots.as_slice().windows(2) {
                assert!(pair[0].strictly_before(&pair[1]));
            }
        }
    }

    #[test]
    fn crossing_shadow_small() {
        let c = Cache::new();
        assert!(check_crossing_shadow(&c, 5, &small_width()).is_ok());
        assert!(check_crossing_shadow(&c, 6, &small_width()).is_ok());
    }

    #[test]
    fn csv_shape() {
        let c = Cache::new();
        let trace =
            track_branches(&c, DeformFamily::F, 3, &[rat_int(-1)], &small_width()).unwrap();
        let csv = branches_csv(&trace, 8);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "t,branch,mid,lo,hi,t_exact,lo_exact,hi_exact"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("-1.00000000,1,1.00000000,"));
    }

    #[test]
    fn crossings_interlace_consistently() {
        // crossing times of consecutive deformation members alternate the
        // same way the interlacing verdict says their slice roots do
        let c = Cache::new();
        let width = rat(1, 1 << 20);
        for m in 4..=7u32 {
            let a = find_crossings(&c, DeformFamily::F, m, &width).unwrap();
            let b = find_crossings(&c, DeformFamily::F, m + 1, &width).unwrap();
            let mut merged: Vec<(Rat, bool)> = a
                .iter()
                .map(|r| (r.tau.midpoint(), false))
                .chain(b.iter().map(|r| (r.tau.midpoint(), true)))
                .collect();
            merged.sort_by(|x, y| x.0.cmp(&y.0));
            // pattern must be b a b a ... a b
            for (pos, (_, is_b)) in merged.iter().enumerate() {
                assert_eq!(*is_b, pos % 2 == 0, "m = {m}, position {pos}");
            }
            assert!(crate::verify::check_interlacing_step(&c, m + 1).is_ok());
        }
    }
}
