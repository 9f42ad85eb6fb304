use super::{convolve, DensityGrid, RandomQuotaSpec};
use crate::error::{Error, Result};
use crate::primes;
use crate::zeta::{self, MobiusSieve};

/// Largest `N` for the explicit walk over all `2^N` index sets.
pub const MAX_SUBSET_WALK: usize = 20;

/// `q -> c [q - m <= 0 < q] + integral_{q-m}^{q} g`, a sum of terms
/// `(f_J * I_m)(q)` where `c` collects the empty index set.
#[derive(Debug, Clone)]
pub struct ExpectationCurve {
    m: f64,
    delta: f64,
    measure: DensityGrid,
}

impl ExpectationCurve {
    pub fn eval(&self, q: f64) -> f64 {
        let point = if q - self.m <= 0.0 && 0.0 < q { self.delta } else { 0.0 };
        point + self.measure.mass_between(q - self.m, q)
    }

    pub fn measure(&self) -> &DensityGrid {
        &self.measure
    }

    /// Quotas outside `[lo, hi]` give zero.
    pub fn support(&self) -> (f64, f64) {
        let lo = if self.delta != 0.0 { 0.0 } else { self.measure.origin() };
        (lo, self.measure.end() + self.m)
    }
}

fn grids(spec: &RandomQuotaSpec, step: f64) -> Result<Vec<DensityGrid>> {
    spec.densities()
        .iter()
        .map(|d| DensityGrid::discretize(d, step))
        .collect()
}

fn empty(step: f64) -> DensityGrid {
    DensityGrid::new(step, 0, Vec::new()).expect("positive step")
}

fn check_j(spec: &RandomQuotaSpec, j: usize) -> Result<()> {
    if j == 0 || j > spec.len() {
        return Err(Error::input(format!(
            "j = {j} must lie in 1..={}",
            spec.len()
        )));
    }
    Ok(())
}

/// Expected `dim H_{j-1}` as a function of `q`, via the elementary symmetric
/// recursion `e_j <- e_j + e_{j-1} * f_i`.
pub fn expected_homology(spec: &RandomQuotaSpec, j: usize, step: f64) -> Result<ExpectationCurve> {
    check_j(spec, j)?;
    let mut all = expected_homology_all(spec, step)?;
    Ok(all.swap_remove(j - 1))
}

/// Curves for every `j` in `1..=N`.
pub fn expected_homology_all(spec: &RandomQuotaSpec, step: f64) -> Result<Vec<ExpectationCurve>> {
    let fs = grids(spec, step)?;
    let n = fs.len();
    let mut e: Vec<DensityGrid> = vec![empty(step); n + 1];
    for f in &fs {
        for j in (2..=n).rev() {
            if !e[j - 1].values().is_empty() {
                let term = convolve(&e[j - 1], f)?;
                e[j] = e[j].add(&term)?;
            }
        }
        e[1] = e[1].add(f)?;
    }
    Ok(e.into_iter()
        .skip(1)
        .map(|measure| ExpectationCurve { m: spec.m(), delta: 0.0, measure })
        .collect())
}

/// Same as [`expected_homology`], summing `f_J` over each index set.
pub fn expected_homology_by_subsets(spec: &RandomQuotaSpec, j: usize, step: f64) -> Result<ExpectationCurve> {
    check_j(spec, j)?;
    if spec.len() > MAX_SUBSET_WALK {
        return Err(Error::capacity(format!(
            "{} variables exceed the subset walk limit {MAX_SUBSET_WALK}",
            spec.len()
        )));
    }
    let fs = grids(spec, step)?;
    let mut total = empty(step);
    walk(&fs, 0, None, 0, &mut |size, g| {
        if size == j {
            total = total.add(g)?;
        }
        Ok(size < j)
    })?;
    Ok(ExpectationCurve { m: spec.m(), delta: 0.0, measure: total })
}

/// Depth-first walk over index sets, passing `(|J|, f_J)` for each nonempty
/// `J`. The visitor returns whether to extend `J`.
fn walk(
    fs: &[DensityGrid],
    from: usize,
    acc: Option<&DensityGrid>,
    size: usize,
    visit: &mut dyn FnMut(usize, &DensityGrid) -> Result<bool>,
) -> Result<()> {
    for i in from..fs.len() {
        let g = match acc {
            None => fs[i].clone(),
            Some(a) => convolve(a, &fs[i])?,
        };
        if visit(size + 1, &g)? {
            walk(fs, i + 1, Some(&g), size + 1, visit)?;
        }
    }
    Ok(())
}

/// `1 - E[chi]` as a function of `q`, by the product recursion
/// `g <- g - g * f_i` starting from the unit mass at 0.
pub fn expected_euler(spec: &RandomQuotaSpec, step: f64) -> Result<ExpectationCurve> {
    let fs = grids(spec, step)?;
    let mut measure = empty(step);
    for f in &fs {
        let mut next = measure.add(&f.scaled(-1.0))?;
        if !measure.values().is_empty() {
            next = next.add(&convolve(&measure, f)?.scaled(-1.0))?;
        }
        measure = next;
    }
    Ok(ExpectationCurve { m: spec.m(), delta: 1.0, measure })
}

/// `1 - E[chi]` by the explicit alternating sum over all index sets.
pub fn expected_euler_by_subsets(spec: &RandomQuotaSpec, step: f64) -> Result<ExpectationCurve> {
    if spec.len() > MAX_SUBSET_WALK {
        return Err(Error::capacity(format!(
            "{} variables exceed the subset walk limit {MAX_SUBSET_WALK}; use the product recursion",
            spec.len()
        )));
    }
    let fs = grids(spec, step)?;
    let mut total = empty(step);
    walk(&fs, 0, None, 0, &mut |size, g| {
        let sign = if size % 2 == 0 { 1.0 } else { -1.0 };
        total = total.add(&g.scaled(sign))?;
        Ok(true)
    })?;
    Ok(ExpectationCurve { m: spec.m(), delta: 1.0, measure: total })
}

/// `sum_{1 <= n < e^q} mu(n)` against `1 - chi(LogPrime(q))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogPrimeIdentity {
    /// Largest integer below `e^q`.
    pub n: u64,
    /// Möbius sum over square-free products of primes, built directly.
    pub mobius_sum: i64,
    pub one_minus_chi: i64,
}

impl LogPrimeIdentity {
    pub fn holds(&self) -> bool {
        self.mobius_sum == self.one_minus_chi
    }
}

pub fn logprime_mertens_identity(q: f64, sieve: &MobiusSieve) -> Result<LogPrimeIdentity> {
    let n = zeta::logprime_cutoff(q)?;
    let one_minus_chi = 1 - zeta::chi_logprime(q, sieve)?;
    let ps = primes::primes_below(n + 1);
    let mut sum = if n >= 1 { 1i64 } else { 0 };
    let mut stack: Vec<(usize, u64, i64)> = vec![(0, 1, 1)];
    while let Some((from, product, sign)) = stack.pop() {
        for (i, &p) in ps.iter().enumerate().skip(from) {
            let Some(next) = product.checked_mul(p).filter(|&v| v <= n) else {
                break;
            };
            sum -= sign;
            stack.push((i + 1, next, -sign));
        }
    }
    Ok(LogPrimeIdentity { n, mobius_sum: sum, one_minus_chi })
}

#[cfg(test)]
mod tests {
    use super::super::Density;
    use super::*;

    fn spec(ds: Vec<Density>) -> RandomQuotaSpec {
        RandomQuotaSpec::new(1.0, ds).unwrap()
    }

    #[test]
    fn single_uniform() {
        let s = spec(vec![Density::uniform(1.0, 2.0).unwrap()]);
        let h = expected_homology(&s, 1, s.default_step()).unwrap();
        assert!((h.eval(2.5) - 0.5).abs() < 1e-9);
        assert_eq!(h.eval(0.9), 0.0);
        assert_eq!(h.eval(3.5), 0.0);
        let e = expected_euler(&s, s.default_step()).unwrap();
        assert!((e.eval(2.5) + 0.5).abs() < 1e-9);
        assert!(e.eval(1.0 + 1e-9).abs() < 1e-6);
        assert_eq!(e.eval(0.5), 1.0);
        assert!(expected_homology(&s, 2, 0.01).is_err());
    }

    #[test]
    fn recursions_match_subset_walks() {
        let s = spec(vec![
            Density::uniform(1.0, 2.0).unwrap(),
            Density::triangular(1.0, 1.5, 3.0).unwrap(),
            Density::uniform(1.2, 1.6).unwrap(),
            Density::piecewise_linear(vec![1.0, 2.0, 3.0], vec![0.5, 0.75, 0.0]).unwrap(),
        ]);
        let step = 0.01;
        let e = expected_euler(&s, step).unwrap();
        let eb = expected_euler_by_subsets(&s, step).unwrap();
        let hs = expected_homology_all(&s, step).unwrap();
        for k in 0..120 {
            let q = 0.5 + k as f64 * 0.07;
            assert!((e.eval(q) - eb.eval(q)).abs() < 1e-9, "q={q}");
            for j in 1..=4 {
                let hb = expected_homology_by_subsets(&s, j, step).unwrap();
                assert!((hs[j - 1].eval(q) - hb.eval(q)).abs() < 1e-9);
            }
            if q > 1.0 {
                let alt: f64 = hs
                    .iter()
                    .enumerate()
                    .map(|(i, h)| if i % 2 == 0 { -h.eval(q) } else { h.eval(q) })
                    .sum();
                assert!((e.eval(q) - alt).abs() < 1e-9, "q={q}");
            }
        }
    }

    #[test]
    fn compact_support() {
        let s = spec(vec![Density::uniform(1.0, 2.0).unwrap(), Density::uniform(1.5, 2.5).unwrap()]);
        let h2 = expected_homology(&s, 2, 0.01).unwrap();
        let (lo, hi) = h2.support();
        assert!(lo >= 2.0 - 0.02 && hi <= 2.0 * 2.5 + 1.0 + 0.02);
        assert_eq!(h2.eval(lo - 0.01), 0.0);
        assert!(h2.eval(hi + 0.01).abs() < 1e-12);
    }

    #[test]
    fn mertens_identity() {
        let sieve = zeta::mobius_sieve(10_000).unwrap();
        let r = logprime_mertens_identity(6f64.ln(), &sieve).unwrap();
        assert_eq!((r.n, r.mobius_sum), (5, -2));
        assert!(r.holds());
        assert_eq!(logprime_mertens_identity(2f64.ln(), &sieve).unwrap().mobius_sum, 1);
        for k in 0..100 {
            let q = 0.5 + k as f64 * 0.087;
            assert!(logprime_mertens_identity(q, &sieve).unwrap().holds(), "q={q}");
        }
    }
}
