//! Suite registry: maps suite names to verdict jobs and fans them out
//! across workers. Verdicts come back in registration order regardless of
//! the execution schedule.

use std::time::Instant;

use clap::Args;
use serde::Serialize;

use betti_core::arith::{parse_rat, rat_to_string, Rat};
use betti_core::branches::{
    check_crossing_shadow, check_endpoint_behavior, check_figure_reproduction,
    check_scaled_limit,
};
use betti_core::identities::{
    verify_g_limit_identity, verify_getzler_param, verify_phi_pde, verify_psi_power,
    verify_slice_slope, verify_u_ode, verify_weight_identity, WeightFamily,
};
use betti_core::recurrences::{Cache, DeformFamily};
use betti_core::verify::{
    check_fhat_root_location, check_fm_real_rooted, check_interlacing_step,
    check_g_root_structure, check_k_root_structure, check_palindrome_unimodal,
    check_real_rooted, check_root_location, check_rulc, check_sign_alternation,
    coeff_sequence, verdict, CheckResult, Verdict,
};

/// Index bounds shared by the verification suites.
#[derive(Args, Clone)]
pub struct SuiteBounds {
    /// Largest index for real-rootedness and ULC checks
    #[arg(long, default_value_t = 25)]
    pub max_n: u32,

    /// Largest index for the interlacing checks
    #[arg(long, default_value_t = 20)]
    pub max_interlace: u32,

    /// Largest deformation index for the root-location checks
    #[arg(long, default_value_t = 12)]
    pub max_location: u32,

    /// Largest weight/limit identity index
    #[arg(long, default_value_t = 12)]
    pub max_index: u32,

    /// Largest slice index for the crossing shadow
    #[arg(long, default_value_t = 10)]
    pub max_crossing: u32,

    /// Rational sample times for the fixed-t root locations
    #[arg(long, value_delimiter = ',', default_value = "-1/2,-1,-3,-10")]
    pub samples: Vec<String>,
}

type Job = (
    String,
    i64,
    Box<dyn Fn(&Cache) -> CheckResult + Send + Sync>,
);

fn job(
    claim: impl Into<String>,
    index: i64,
    run: impl Fn(&Cache) -> CheckResult + Send + Sync + 'static,
) -> Job {
    (claim.into(), index, Box::new(run))
}

fn realroot_jobs(bounds: &SuiteBounds) -> Vec<Job> {
    (4..=bounds.max_n)
        .map(|n| {
            job("realroot.P", n as i64, move |c| {
                check_real_rooted(&c.p(n), n as usize - 3)
            })
        })
        .collect()
}

fn fm_jobs(bounds: &SuiteBounds) -> Vec<Job> {
    (1..=bounds.max_n.min(20))
        .map(|n| job("realroot.FM", n as i64, move |c| check_fm_real_rooted(c, n)))
        .collect()
}

fn interlace_jobs(bounds: &SuiteBounds) -> Vec<Job> {
    // --max-n acts as a global ceiling, --max-interlace as the
    // suite-specific one
    let top = bounds.max_interlace.min(bounds.max_n);
    let mut jobs: Vec<Job> = (4..=top)
        .map(|n| job("interlace", n as i64, move |c| check_interlacing_step(c, n)))
        .collect();
    jobs.extend(
        (4..=top).map(|n| job("alternation", n as i64, move |c| check_sign_alternation(c, n))),
    );
    jobs
}

fn ulc_jobs(bounds: &SuiteBounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 3..=bounds.max_n {
        jobs.push(job("ulc1.P", n as i64, move |c| {
            check_rulc("P", &coeff_sequence(&c.p(n)), 1)
        }));
        jobs.push(job("palindrome.P", n as i64, move |c| {
            check_palindrome_unimodal(&coeff_sequence(&c.p(n)))
        }));
    }
    for n in 1..=bounds.max_n {
        jobs.push(job("ulc1.Ptilde", n as i64, move |c| {
            check_rulc("Ptilde", &coeff_sequence(&c.ptilde(n)), 1)
        }));
        jobs.push(job("palindrome.Ptilde", n as i64, move |c| {
            check_palindrome_unimodal(&coeff_sequence(&c.ptilde(n)))
        }));
    }
    for n in 4..=bounds.max_n.min(15) {
        jobs.push(job("ulc2.P", n as i64, move |c| {
            check_rulc("P", &coeff_sequence(&c.p(n)), 2)
        }));
    }
    jobs
}

fn identities_jobs(bounds: &SuiteBounds, order: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    jobs.push(job("identity.ode", order as i64, move |c| {
        verify_u_ode(c, order)
    }));
    jobs.push(job("identity.pde", order as i64, move |c| {
        verify_phi_pde(c, order)
    }));
    for m in 2..=(order.max(2) as u32) {
        jobs.push(job("identity.slice-slope", m as i64, move |c| {
            verify_slice_slope(c, m)
        }));
    }
    jobs.push(job("identity.parametrization", order as i64, move |c| {
        verify_getzler_param(c, order)
    }));
    jobs.push(job("identity.binomial-power", order as i64, move |c| {
        verify_psi_power(c, order)
    }));
    for i in 1..=bounds.max_index {
        jobs.push(job("identity.weight.F", i as i64, move |c| {
            verify_weight_identity(c, WeightFamily::F, i)
        }));
        jobs.push(job("identity.weight.Fhat", i as i64, move |c| {
            verify_weight_identity(c, WeightFamily::Fhat, i)
        }));
        jobs.push(job("identity.limit-weight.G", i as i64, move |c| {
            verify_g_limit_identity(c, i)
        }));
    }
    jobs
}

fn location_jobs(bounds: &SuiteBounds) -> anyhow::Result<Vec<Job>> {
    let samples: Vec<Rat> = bounds
        .samples
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<_, _>>()?;
    let mut jobs = Vec::new();
    for m in 2..=bounds.max_location {
        for t0 in &samples {
            let t = t0.clone();
            let label = format!("location.F(t={})", rat_to_string(&t));
            jobs.push(job(label, m as i64, move |c| check_root_location(c, m, &t)));
            let t = t0.clone();
            let label = format!("location.Fhat(t={})", rat_to_string(&t));
            jobs.push(job(label, m as i64, move |c| {
                check_fhat_root_location(c, m, &t)
            }));
        }
        jobs.push(job("location.G", m as i64, move |c| {
            check_g_root_structure(c, m)
        }));
        jobs.push(job("location.K", m as i64, move |c| {
            check_k_root_structure(c, m)
        }));
    }
    Ok(jobs)
}

fn crossings_jobs(bounds: &SuiteBounds, width: &Rat) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 5..=bounds.max_crossing {
        let w = width.clone();
        jobs.push(job("crossings.shadow", n as i64, move |c| {
            check_crossing_shadow(c, n, &w)
        }));
    }
    jobs.push(job("crossings.figure", 4, check_figure_reproduction));
    for m in 3..=bounds.max_crossing.min(8) {
        jobs.push(job("crossings.endpoints.F", m as i64, move |c| {
            check_endpoint_behavior(c, DeformFamily::F, m)
        }));
        jobs.push(job("crossings.endpoints.Fhat", m as i64, move |c| {
            check_endpoint_behavior(c, DeformFamily::Fhat, m)
        }));
    }
    let t_big = betti_core::arith::rat_int(-1_000_000);
    let tol = betti_core::arith::rat(1, 1000);
    for m in 3..=8u32 {
        let t_big = t_big.clone();
        let tol = tol.clone();
        jobs.push(job("crossings.scaled-limit", m as i64, move |c| {
            check_scaled_limit(c, m, &t_big, &tol)
        }));
    }
    jobs
}

pub fn suite_jobs(
    suite: &str,
    bounds: &SuiteBounds,
    order: usize,
    width: &Rat,
) -> anyhow::Result<Vec<Job>> {
    Ok(match suite {
        "realroot" => realroot_jobs(bounds),
        "fm" => fm_jobs(bounds),
        "interlace" => interlace_jobs(bounds),
        "ulc" => ulc_jobs(bounds),
        "identities" => identities_jobs(bounds, order),
        "location" => location_jobs(bounds)?,
        "crossings" => crossings_jobs(bounds, width),
        "all" => {
            let mut jobs = realroot_jobs(bounds);
            jobs.extend(fm_jobs(bounds));
            jobs.extend(interlace_jobs(bounds));
            jobs.extend(ulc_jobs(bounds));
            jobs.extend(identities_jobs(bounds, order));
            jobs.extend(location_jobs(bounds)?);
            jobs.extend(crossings_jobs(bounds, width));
            jobs
        }
        other => anyhow::bail!(
            "unknown suite {other:?}: expected all, realroot, fm, interlace, ulc, \
             identities, location or crossings"
        ),
    })
}

/// Runs a suite, fanning verdicts across the worker pool; the result order
/// matches the registration order.
pub fn run_suite(
    cache: &Cache,
    suite: &str,
    bounds: &SuiteBounds,
    order: usize,
    width: &Rat,
    jobs_cap: Option<usize>,
) -> anyhow::Result<Vec<Verdict>> {
    let jobs = suite_jobs(suite, bounds, order, width)?;
    Ok(execute(cache, jobs, jobs_cap))
}

fn execute(cache: &Cache, jobs: Vec<Job>, jobs_cap: Option<usize>) -> Vec<Verdict> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs_cap.unwrap_or(0))
        .build()
        .expect("worker pool");
    pool.install(|| {
        jobs.par_iter()
            .map(|(claim, index, run)| verdict(claim.clone(), *index, || run(cache)))
            .collect()
    })
}

#[derive(Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Serialize)]
pub struct ConfigEcho {
    pub max_n: u32,
    pub max_interlace: u32,
    pub max_location: u32,
    pub max_index: u32,
    pub max_crossing: u32,
    pub order: usize,
    pub width: String,
    pub samples: Vec<String>,
}

/// Exact higher ultra-log-concavity status per index, reported without
/// being asserted anywhere.
#[derive(Serialize)]
pub struct UlcStatus {
    pub index: u32,
    pub ulc2: bool,
    pub ulc3: bool,
    pub ulc4: bool,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub config: ConfigEcho,
    pub verdicts: Vec<Verdict>,
    pub ulc_status: Vec<UlcStatus>,
    pub summary: Summary,
    pub wall_millis: u128,
}

pub fn run_report(
    cache: &Cache,
    bounds: &SuiteBounds,
    order: usize,
    width: &Rat,
    jobs_cap: Option<usize>,
) -> anyhow::Result<SuiteReport> {
    use betti_core::verify::ulc_report;
    let start = Instant::now();
    let verdicts = run_suite(cache, "all", bounds, order, width, jobs_cap)?;
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    let ulc_status = (4..=bounds.max_n)
        .map(|n| {
            let coeffs = coeff_sequence(&cache.p(n));
            UlcStatus {
                index: n,
                ulc2: ulc_report("P", &coeffs, 2).passes(),
                ulc3: ulc_report("P", &coeffs, 3).passes(),
                ulc4: ulc_report("P", &coeffs, 4).passes(),
            }
        })
        .collect();
    Ok(SuiteReport {
        config: ConfigEcho {
            max_n: bounds.max_n,
            max_interlace: bounds.max_interlace,
            max_location: bounds.max_location,
            max_index: bounds.max_index,
            max_crossing: bounds.max_crossing,
            order,
            width: rat_to_string(width),
            samples: bounds.samples.clone(),
        },
        summary: Summary {
            total: verdicts.len(),
            passed: verdicts.len() - failed,
            failed,
        },
        verdicts,
        ulc_status,
        wall_millis: start.elapsed().as_millis(),
    })
}
