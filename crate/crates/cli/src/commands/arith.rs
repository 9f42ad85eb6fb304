use quotatope::series::{self, WeightMultiset};
use quotatope::{divisor, zeta};
use rayon::prelude::*;

use super::write;
use crate::error::{usage, CliError, CliResult};
use crate::table::{Cell, Table};
use crate::{DivisorArgs, EulerArgs, LogprimeArgs};

const MAX_EULER_Q: u64 = 100_000;
const MAX_SIEVE: u64 = 2_000_000_000;

pub fn euler(args: &EulerArgs) -> CliResult {
    if args.q_max < 3 {
        return Err(usage("--qmax must be at least 3"));
    }
    if args.q_max > MAX_EULER_Q {
        return Err(CliError::Capacity(format!("--qmax above {MAX_EULER_Q} is not supported")));
    }
    let from_series = series::chi_from_product(&WeightMultiset::primes(args.q_max), args.q_max as usize)?;
    let mut table = Table::new(["q", "chi"]);
    for q in 3..=args.q_max {
        let chi = zeta::chi_prime(q);
        if chi != from_series[q as usize] {
            return Err(CliError::Failed(format!(
                "chi(Prime({q})): subset sum gives {chi}, product series gives {}",
                from_series[q as usize]
            )));
        }
        table.push(vec![Cell::int(q), Cell::int(chi)]);
    }
    write(&table, &args.output, "chi(Prime(q))", "q", &["chi"])
}

pub fn logprime(args: &LogprimeArgs) -> CliResult {
    if args.n_max < 2 {
        return Err(usage("--nmax must be at least 2"));
    }
    if args.n_max > MAX_SIEVE {
        return Err(CliError::Capacity(format!("--nmax above {MAX_SIEVE} is not supported")));
    }
    let q_hi = args.q_hi.unwrap_or(((args.n_max + 1) as f64).ln());
    if !(args.q_lo.is_finite() && q_hi.is_finite() && 0.0 < args.q_lo && args.q_lo < q_hi) {
        return Err(usage(format!("need 0 < qlo < qhi, got qlo = {} and qhi = {q_hi}", args.q_lo)));
    }
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let top = zeta::logprime_cutoff(q_hi)?;
    if top > args.n_max {
        return Err(usage(format!("qhi = {q_hi} needs --nmax of at least {top}")));
    }
    let sieve = zeta::mobius_sieve(args.n_max as usize)?;
    let d = zeta::rh_diagnostic(&sieve, args.q_lo, q_hi, args.samples)?;
    let mut table = Table::new(["q", "n", "chi", "ln_abs_chi", "envelope"]);
    for s in &d.samples {
        table.push(vec![
            Cell::Real(s.q),
            Cell::int(s.n),
            Cell::int(s.chi),
            Cell::Real(s.ln_abs_chi),
            Cell::Real(zeta::RH_SLOPE * (s.n as f64).ln() + d.fitted_c),
        ]);
    }
    eprintln!(
        "{} samples on [{}, {}], {} with chi = 0; fitted c = {:.6}; {:.2}% under {} ln N + c",
        args.samples,
        args.q_lo,
        q_hi,
        d.zero_count,
        d.fitted_c,
        100.0 * d.fraction_within_envelope,
        zeta::RH_SLOPE
    );
    write(&table, &args.output, "ln|chi(LogPrime(q))|", "q", &["ln_abs_chi", "envelope"])
}

pub fn divisor(args: &DivisorArgs) -> CliResult {
    if args.n_min < 2 {
        return Err(usage("--nmin must be at least 2"));
    }
    if args.n_max <= args.n_min {
        return Err(usage("--nmax must exceed --nmin"));
    }
    if args.n_max > MAX_SIEVE {
        return Err(CliError::Capacity(format!("--nmax above {MAX_SIEVE} is not supported")));
    }
    if args.list {
        let ns = divisor::non_contractible(args.n_min, args.n_max, args.odd)?;
        let mut table = Table::new(["n"]);
        for n in ns {
            table.push(vec![Cell::int(n)]);
        }
        return write(&table, &args.output, "non-contractible Div(n)", "n", &["n"]);
    }
    let ns: Vec<u64> = if args.noncontractible {
        divisor::non_contractible(args.n_min, args.n_max, args.odd)?
    } else {
        (args.n_min..args.n_max).filter(|n| !args.odd || n % 2 == 1).collect()
    };
    let profiles = ns
        .par_iter()
        .map(|&n| divisor::divisor_profile(n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new([
        "n",
        "tau",
        "sigma_proper",
        "class",
        "contractible",
        "top_dim",
        "spheres",
        "perfect_gap",
        "signature",
    ]);
    for p in &profiles {
        table.push(vec![
            Cell::int(p.n),
            Cell::int(p.tau),
            Cell::int(p.sigma_proper),
            Cell::Text(p.classification.name().into()),
            Cell::Bool(p.is_contractible()),
            Cell::opt_int(p.top_dim()),
            Cell::int(p.signature.total_spheres()),
            Cell::opt_int(p.perfect_gap()),
            Cell::Text(p.signature.to_json()),
        ]);
    }
    write(&table, &args.output, "top sphere dimension of Div(n)", "n", &["top_dim", "tau"])
}
