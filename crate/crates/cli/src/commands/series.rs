use num_traits::Zero;
use quotatope::series::{self, WeightMultiset};

use super::write;
use crate::error::{usage, CliError, CliResult};
use crate::table::{Cell, Table};
use crate::{SeriesArgs, SeriesExample};

const MAX_DEGREE: usize = 100_000;

pub fn run(args: &SeriesArgs) -> CliResult {
    let d = args.degree;
    if d == 0 {
        return Err(usage("--degree must be positive"));
    }
    if d > MAX_DEGREE {
        return Err(CliError::Capacity(format!("--degree above {MAX_DEGREE} is not supported")));
    }
    let (table, y) = match args.example {
        SeriesExample::Counting => (chi_table(&WeightMultiset::counting(1, d as u64), d)?, "chi"),
        SeriesExample::Primes => (chi_table(&WeightMultiset::primes(d as u64), d)?, "chi"),
        SeriesExample::Tau => {
            let tau = series::ramanujan_tau(d)?;
            let mut t = Table::new(["n", "tau"]);
            for (k, v) in tau.iter().enumerate() {
                t.push(vec![Cell::int(k + 1), Cell::int(v)]);
            }
            (t, "tau")
        }
        SeriesExample::Lehmer => {
            let report = series::lehmer_check(d)?;
            let mut t = Table::new(["n", "tau"]);
            for (k, v) in report.tau.iter().enumerate().filter(|(_, v)| v.is_zero()) {
                t.push(vec![Cell::int(k + 1), Cell::int(v)]);
            }
            eprintln!(
                "tau(n) = 0 for {} of n <= {d}; chi(q) = chi(q+1) at {} quotas",
                t.rows.len(),
                report.equal_pairs.len()
            );
            (t, "tau")
        }
        SeriesExample::Partitions => {
            let p = series::partition_numbers(d)?;
            let mut t = Table::new(["n", "p"]);
            for (n, v) in p.iter().enumerate() {
                t.push(vec![Cell::int(n), Cell::int(v)]);
            }
            (t, "p")
        }
    };
    write(&table, &args.output, "series coefficients", table.header[0].as_str(), &[y])
}

fn chi_table(nu: &WeightMultiset, d: usize) -> CliResult<Table> {
    let chi = series::chi_from_product(nu, d)?;
    let mut t = Table::new(["q", "chi"]);
    for (q, c) in chi.iter().enumerate().skip(1) {
        t.push(vec![Cell::int(q), Cell::int(c)]);
    }
    Ok(t)
}
