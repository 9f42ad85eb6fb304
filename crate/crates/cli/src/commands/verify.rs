use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use quotatope::oracle::{enumerate_complex, ExplicitComplex};
use quotatope::quota::{complex_to_quota, Realization};
use quotatope::series::{self, WeightMultiset};
use quotatope::{primes, zeta, Face, ScalarQuotaSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{usage, CliError, CliResult};
use crate::{Suite, VerifyArgs};

type Outcome = Result<String, String>;
type Check = fn(usize, u64) -> Outcome;

const MAX_TRIALS: usize = 1_000_000;

pub fn run(args: &VerifyArgs) -> CliResult {
    if args.trials == 0 {
        return Err(usage("--trials must be positive"));
    }
    if args.trials > MAX_TRIALS {
        return Err(CliError::Capacity(format!("more than {MAX_TRIALS} trials")));
    }
    let suites: &[(Suite, &str, Check)] = &[
        (Suite::ShellTheorem, "shell-theorem", shell_theorem),
        (Suite::Realization, "realization", realization),
        (Suite::EulerMobius, "euler-mobius", euler_mobius),
        (Suite::Mertens, "mertens", mertens),
        (Suite::GeneratingFunction, "generating-function", generating_function),
    ];
    let mut failed = 0;
    for (suite, name, check) in suites {
        if args.suite != Suite::All && args.suite != *suite {
            continue;
        }
        let start = Instant::now();
        let outcome = check(args.trials, args.seed);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {why}");
            }
        }
    }
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} suite(s) failed")));
    }
    Ok(())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shell_theorem(trials: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..trials {
        let n = rng.random_range(1..=12);
        let weights: Vec<u64> = (0..n).map(|_| rng.random_range(1..=40)).collect();
        let quota = rng.random_range(1..=weights.iter().sum::<u64>() + 1);
        let sys = ScalarQuotaSystem::new(weights, quota).map_err(|e| e.to_string())?;
        let cx = enumerate_complex(&sys).map_err(|e| e.to_string())?;
        let ty = sys.homotopy_type();
        if cx.is_empty() {
            check(ty.is_empty(), || format!("case {case}: {sys:?} is empty but got {ty:?}"))?;
            continue;
        }
        let betti = cx.betti_numbers().map_err(|e| e.to_string())?;
        check(betti.matches_type(&ty), || format!("case {case}: {sys:?} gives {ty:?}, homology {betti:?}"))?;
    }
    Ok(format!("{trials} random systems, bouquet equals homology"))
}

fn realization(trials: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..trials {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(1..=6);
        let mut sets: Vec<Vec<usize>> = (0..k)
            .map(|_| {
                let s: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
                if s.is_empty() { vec![rng.random_range(0..n)] } else { s }
            })
            .collect();
        sets.sort();
        sets.dedup();
        let faces: Vec<Face> = sets.into_iter().map(|s| Face::new(s).expect("sorted")).collect();
        let facets: Vec<Face> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subface_of(g)))
            .cloned()
            .collect();
        let want = ExplicitComplex::from_facets(n, &facets).map_err(|e| e.to_string())?;
        let sys = complex_to_quota(&facets, n, Realization::Plain).map_err(|e| e.to_string())?;
        let got: BTreeSet<Face> = sys.faces().into_iter().collect();
        check(&got == want.faces(), || format!("case {case}: facets {facets:?}"))?;
    }
    Ok(format!("{trials} random complexes rebuilt exactly"))
}

fn euler_mobius(trials: usize, _seed: u64) -> Outcome {
    let q_max = (trials as u64).clamp(3, 2000);
    let sieve = zeta::mobius_sieve(10_000).map_err(|e| e.to_string())?;
    let from_series = series::chi_from_product(&WeightMultiset::primes(q_max), q_max as usize)
        .map_err(|e| e.to_string())?;
    for q in 3..=q_max {
        let z = zeta::chi_prime(q);
        check(z == from_series[q as usize], || format!("q={q}: {z} vs {}", from_series[q as usize]))?;
        if q <= 100 {
            let core = ScalarQuotaSystem::new(primes::primes_below(q), q)
                .map_err(|e| e.to_string())?
                .euler_characteristic();
            let m = zeta::chi_prime_mobius(q, &sieve);
            check(z == core && m == core, || format!("q={q}: {z}, {m}, core {core}"))?;
        }
    }
    Ok(format!("chi(Prime(q)) agrees for 3 <= q <= {q_max}"))
}

fn mertens(trials: usize, _seed: u64) -> Outcome {
    let n_max = trials.max(10);
    let sieve = zeta::mobius_sieve(n_max).map_err(|e| e.to_string())?;
    let m = sieve.mertens_series();
    for (n, mn) in m.iter().enumerate().take(n_max + 1).skip(1) {
        let chi = zeta::chi_logprime(((n + 1) as f64).ln(), &sieve).map_err(|e| e.to_string())?;
        check(chi == 1 - mn, || format!("N={n}: {chi} vs {}", 1 - mn))?;
    }
    Ok(format!("chi(LogPrime(ln(N+1))) = 1 - M(N) for N <= {n_max}"))
}

fn generating_function(trials: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = 48usize;
    for case in 0..trials.min(500) {
        let k = rng.random_range(1..=12);
        let nu: Vec<u64> = (0..k).map(|_| rng.random_range(1..=d as u64)).collect();
        let ms = WeightMultiset::new(nu.clone(), d as u64).map_err(|e| e.to_string())?;
        let product = series::product_series(&ms, d).map_err(|e| e.to_string())?;
        let mut chi = vec![BigInt::zero(); d + 2];
        for (q, c) in chi.iter_mut().enumerate().skip(1) {
            *c = ScalarQuotaSystem::new(nu.clone(), q as u64)
                .map_err(|e| e.to_string())?
                .euler_characteristic();
        }
        let rebuilt = series::product_from_chi(&chi).map_err(|e| e.to_string())?;
        check(rebuilt == product, || format!("case {case}: identity fails for {nu:?}"))?;
        let back = series::recover_weights(&chi).map_err(|e| e.to_string())?;
        check(back.nu() == ms.nu(), || format!("case {case}: recovered {:?}", back.nu()))?;
    }
    Ok(format!("{} multisets to degree {d}", trials.min(500)))
}
