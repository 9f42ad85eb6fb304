//! Small prime and integer-power helpers shared by the arithmetic modules.

/// All primes strictly below `bound`, by the sieve of Eratosthenes.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound <= 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut bound = 16u64;
    loop {
        let p = primes_below(bound);
        if p.len() >= count {
            return p[..count].to_vec();
        }
        bound *= 2;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Positive `k`-th powers strictly below `bound`, starting at `1`.
pub fn powers_below(k: u32, bound: u64) -> Vec<u64> {
    (1u64..)
        .map(|b| b.checked_pow(k).unwrap_or(u64::MAX))
        .take_while(|&v| v < bound)
        .collect()
}

/// `floor(n^(1/k))`, exact.
pub fn integer_root(n: u64, k: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 0 && r.checked_pow(k).map_or(true, |v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}
