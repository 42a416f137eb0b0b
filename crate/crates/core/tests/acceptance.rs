//! Acceptance criteria, one PASS/FAIL line each.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use mublab_core::certifier::{
    antiunitary_check, certify, fiducial_search, fiducial_search_ops, sign_sum_infeasibility, Branch, CertifyOptions,
    SearchScope, SignSum, Verdict, FIDUCIAL_FLOOR_Q4,
};
use mublab_core::covariance::{commutant_dim_of, qubit_order6_witness, sharp_covariance_check, Tolerances};
use mublab_core::gf::FieldSpec;
use mublab_core::groups::{agl_construct, frobenius_kernel, is_prime, sylow_count, sylow_subgroup, FiniteGroup};
use mublab_core::linalg::CMatrix;
use mublab_core::mub::{construct_mub, ic_rank, verify_unbiased};
use mublab_core::repr::{cyclic_permutation_check, kernel_eigenstructure, standard_rep, IntMatrix, Representation};

/// Minimum acceptable fiducial objective at q = 4.
const FIDUCIAL_THRESHOLD: f64 = 0.01;

fn agl_rep(n: u32) -> (Arc<FiniteGroup>, Representation) {
    let spec = Arc::new(FieldSpec::with_default_modulus(2, n).unwrap());
    let g = Arc::new(agl_construct(spec));
    let rep = standard_rep(g.clone()).unwrap();
    (g, rep)
}

fn exact_algebra_suite() -> Result<String, String> {
    let mut notes = Vec::new();
    for n in [2u32, 3] {
        let q = 1usize << n;
        let p = (q - 1) as u64;
        let (g, rep) = agl_rep(n);
        let sylow = sylow_count(&g, p).map_err(|e| e.to_string())?;
        if sylow != q {
            return Err(format!("q={q}: {sylow} Sylow subgroups"));
        }
        let h = sylow_subgroup(&g, p).map_err(|e| e.to_string())?;
        let k = frobenius_kernel(&g, &h).map_err(|e| e.to_string())?;
        if Some(&k) != g.translation_subgroup().as_ref() || !g.is_elementary_abelian(&k) || k.order() != q {
            return Err(format!("q={q}: kernel is not the translation group"));
        }
        let irr = rep.irreducibility_sum();
        if irr.sum != g.order() as i64 {
            return Err(format!("q={q}: character norm {} != {}", irr.sum, g.order()));
        }
        let eig = kernel_eigenstructure(&rep, &k).map_err(|e| e.to_string())?;
        if eig.multiplicities.iter().any(|&m| m != (q / 2 - 1, q / 2)) {
            return Err(format!("q={q}: multiplicities {:?}", eig.multiplicities));
        }
        let cyc = cyclic_permutation_check(&rep, &eig, g.singer_element().unwrap()).map_err(|e| e.to_string())?;
        if cyc.cycle.len() != q - 1 {
            return Err(format!("q={q}: cycle of length {}", cyc.cycle.len()));
        }
        if rep.kstar_sum(&k) != IntMatrix::identity(q - 1).scale(-1) {
            return Err(format!("q={q}: K* sum is not -I"));
        }
        notes.push(format!("q={q} ok"));
    }
    Ok(notes.join(", "))
}

fn infeasibility_sweep() -> Result<String, String> {
    for n in 2..=33 {
        match sign_sum_infeasibility(n) {
            Ok(SignSum::Infeasible { .. }) => {}
            other => return Err(format!("n={n}: {other:?}")),
        }
    }
    match sign_sum_infeasibility(1) {
        Ok(SignSum::Feasible { m: -1 }) => Ok("n in [2,33] infeasible, n=1 feasible with m=-1".into()),
        other => Err(format!("n=1: {other:?}")),
    }
}

fn certification() -> Result<String, String> {
    let mut slowest = (0, Duration::ZERO);
    for p in (3..=127u64).filter(|&p| is_prime(p)) {
        let start = Instant::now();
        let r = certify(p, &CertifyOptions::default()).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        if took > slowest.1 {
            slowest = (p, took);
        }
        let want = if [3, 7, 31, 127].contains(&p) { Branch::Mersenne } else { Branch::NotMersenne };
        if r.verdict != Verdict::Nonexistent || r.branch != want {
            let failed: Vec<&str> = r.checks.iter().filter(|c| c.outcome != mublab_core::certifier::Outcome::Pass).map(|c| c.name.as_str()).collect();
            return Err(format!("p={p}: {:?} via {:?}, failed {failed:?}", r.verdict, r.branch));
        }
        if p == 3 && r.check("order-12-scan").is_none() {
            return Err("p=3 report lacks the order-12 scan".into());
        }
        if p == 127 && took > Duration::from_secs(60) {
            return Err(format!("p=127 took {took:?}"));
        }
    }
    Ok(format!("all odd primes <= 127 NONEXISTENT; slowest p={} in {:.2?}", slowest.0, slowest.1))
}

fn mub_suite() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for d in [2, 3, 5, 7, 11, 13] {
        let mub = construct_mub(d).map_err(|e| e.to_string())?;
        let r = verify_unbiased(&mub, 1e-9);
        if !r.pass {
            return Err(format!("d={d}: {r:?}"));
        }
        worst = worst.max(r.overlap_defect).max(r.orthonormality_defect);
        let rank = ic_rank(&mub);
        if rank != d * d {
            return Err(format!("d={d}: IC rank {rank}"));
        }
    }
    Ok(format!("max defect {worst:.2e}, IC rank d^2 throughout"))
}

fn positive_control() -> Result<String, String> {
    let mub = construct_mub(2).map_err(|e| e.to_string())?;
    let group = qubit_order6_witness();
    let v = sharp_covariance_check(&mub, &group, Tolerances::default()).map_err(|e| e.to_string())?;
    if v.pass && v.group_order == 6 {
        Ok(format!("order {} group, fiducial {:?}", v.group_order, v.fiducial))
    } else {
        Err(format!("{:?}", v.reasons))
    }
}

fn numerical_corroboration() -> Result<String, String> {
    let (_, rep) = agl_rep(2);
    let r = fiducial_search(&rep, SearchScope::FullGroup, 10_000, 0);
    let planted = fiducial_search_ops(&[], 3, 1.0 / 3.0, 10, 0);
    if planted.best_objective != 0.0 {
        return Err(format!("planted trivial group gave {}", planted.best_objective));
    }
    if r.best_objective <= FIDUCIAL_THRESHOLD || r.best_objective < FIDUCIAL_FLOOR_Q4 {
        return Err(format!("best objective {}", r.best_objective));
    }
    Ok(format!(
        "best objective {:.6} over {} restarts (floor {FIDUCIAL_FLOOR_Q4}); trivial group gives 0",
        r.best_objective, r.restarts
    ))
}

fn irreducibility_bridge() -> Result<String, String> {
    for n in [2u32, 3] {
        let q = 1usize << n;
        let (g, rep) = agl_rep(n);
        let all: Vec<CMatrix> = g.elements().map(|x| rep.unitary_model(x)).collect();
        let full = commutant_dim_of(&all.iter().collect::<Vec<_>>());
        let k = g.translation_subgroup().unwrap();
        let kernel: Vec<CMatrix> = k.iter().map(|x| rep.unitary_model(x)).collect();
        let diag = commutant_dim_of(&kernel.iter().collect::<Vec<_>>());
        if full != 1 || diag != q - 1 {
            return Err(format!("q={q}: commutant {full}, kernel commutant {diag}"));
        }
    }
    Ok("commutant 1 for G, q-1 for K at q=4,8".into())
}

fn antiunitary_arithmetic() -> Result<String, String> {
    let primes: Vec<u64> = (3..1000).filter(|&p| is_prime(p)).collect();
    for &p in &primes {
        let w = antiunitary_check(p).map_err(|e| e.to_string())?;
        if !w.pass {
            return Err(format!("p={p}: {w:?}"));
        }
    }
    Ok(format!("{} odd primes below 1000", primes.len()))
}

type Criterion = (&'static str, Duration, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("exact algebra suite", Duration::from_secs(10), exact_algebra_suite),
        ("infeasibility sweep", Duration::from_secs(1), infeasibility_sweep),
        ("certification", Duration::from_secs(600), certification),
        ("MUB suite", Duration::from_secs(5), mub_suite),
        ("positive control", Duration::from_secs(1), positive_control),
        ("numerical corroboration", Duration::from_secs(120), numerical_corroboration),
        ("irreducibility bridge", Duration::from_secs(5), irreducibility_bridge),
        ("antiunitary arithmetic", Duration::from_secs(1), antiunitary_arithmetic),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let outcome = match result {
            Ok(detail) if took <= *limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; exceeded {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({took:.2?}): {detail}", i + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL criterion {}: {name} ({took:.2?}): {e}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
