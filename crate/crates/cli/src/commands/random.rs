use std::fs;

use quotatope::random::{self, RandomQuotaSpec};

use super::write;
use crate::error::{usage, CliError, CliResult};
use crate::table::{Cell, Table};
use crate::RandomArgs;

const DEFAULT_GRID: usize = 21;
const MAX_TRIALS: u64 = 100_000_000;

pub fn run(args: &RandomArgs) -> CliResult {
    let text = fs::read_to_string(&args.spec)
        .map_err(|e| usage(format!("cannot read {}: {e}", args.spec.display())))?;
    let spec = RandomQuotaSpec::from_json(&text)?;
    let trials = args.trials.unwrap_or(spec.trials);
    let seed = args.seed.unwrap_or(spec.seed);
    let step = args.step.unwrap_or(spec.default_step());
    if trials == 0 {
        return Err(usage("trials must be positive"));
    }
    if trials > MAX_TRIALS {
        return Err(CliError::Capacity(format!("more than {MAX_TRIALS} trials")));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(usage("--step must be positive"));
    }
    let q_grid = if spec.q_grid.is_empty() { default_grid(&spec) } else { spec.q_grid.clone() };

    let curves = random::expected_homology_all(&spec, step)?;
    let euler = random::expected_euler(&spec, step)?;
    let mc = random::monte_carlo(&spec, &q_grid, trials, seed)?;

    let mut header = vec!["q".to_string()];
    for j in 0..spec.len() {
        header.extend([format!("exact_h{j}"), format!("mc_h{j}"), format!("se_h{j}")]);
    }
    header.extend(["exact_chi", "mc_chi", "se_chi", "max_dim"].map(String::from));
    let mut table = Table::new(header);
    for (k, &q) in q_grid.iter().enumerate() {
        let mut row = vec![Cell::Real(q)];
        for (j, curve) in curves.iter().enumerate() {
            let est = mc.homology[j][k];
            row.extend([Cell::Real(curve.eval(q)), Cell::Real(est.mean), Cell::Real(est.stderr)]);
        }
        let est = mc.euler[k];
        row.extend([
            Cell::Real(1.0 - euler.eval(q)),
            Cell::Real(est.mean),
            Cell::Real(est.stderr),
            Cell::opt_int(mc.max_dimension[k]),
        ]);
        table.push(row);
    }
    write(&table, &args.output, "expected homology", "q", &["exact_h0", "mc_h0", "exact_chi", "mc_chi"])
}

/// Evenly spaced quotas from `m` to `m` plus the largest possible weight sum.
fn default_grid(spec: &RandomQuotaSpec) -> Vec<f64> {
    let top = spec.m() + spec.densities().iter().map(|d| d.support().1).sum::<f64>();
    (0..DEFAULT_GRID)
        .map(|k| spec.m() + (top - spec.m()) * k as f64 / (DEFAULT_GRID - 1) as f64)
        .collect()
}
