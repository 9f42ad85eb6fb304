mod common;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use quotatope::divisor::{self, Classification};
use quotatope::oracle::enumerate_complex;
use quotatope::seq::{count_table, homology_table, SequenceKind, SequenceSpec};
use quotatope::series::{self, IntPowerSeries, WeightMultiset};
use quotatope::{primes, zeta, ScalarQuotaSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KINDS: [SequenceKind; 3] = [SequenceKind::Primes, SequenceKind::Squares, SequenceKind::Cubes];

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn face_counts_match_brute_force() {
    for kind in KINDS {
        let spec = SequenceSpec::below(kind, 61).unwrap();
        let t = count_table(&spec, 60, 5).unwrap();
        let others = &spec.elements()[1..];
        for q in 0..=60u64 {
            for i in 0..=5 {
                let want = common::brute_subsets_below(others, i + 1, q);
                assert_eq!(t.s(i, q as i64), BigUint::from(want), "{kind:?} i={i} q={q}");
            }
        }
    }
}

#[test]
fn homology_matches_core_bouquets() {
    for kind in KINDS {
        let spec = SequenceSpec::below(kind, 121).unwrap();
        let t = count_table(&spec, 120, 12).unwrap();
        let h = homology_table(&t, spec.v1()).unwrap();
        for q in spec.v1() + 1..=120 {
            let weights: Vec<u64> = spec.elements().iter().copied().filter(|&v| v < q).collect();
            let sys = ScalarQuotaSystem::new(weights, q).unwrap();
            let sig = sys.homotopy_type().signature().cloned().unwrap();
            for i in 0..=12 {
                assert_eq!(h.h(i, q).unwrap(), &sig.count(i), "{kind:?} i={i} q={q}");
            }
        }
    }
}

#[test]
fn monotone_and_sandwiched() {
    for kind in KINDS {
        let spec = SequenceSpec::below(kind, 401).unwrap();
        let t = count_table(&spec, 400, 6).unwrap();
        let h = homology_table(&t, spec.v1()).unwrap();
        for i in 0..=6usize {
            for q in 1..=400u64 {
                assert!(t.s(i, q as i64 - 1) <= t.s(i, q as i64));
                let _ = h.h(i, q).unwrap();
                let s = t.s(i, q as i64);
                if s.is_zero() {
                    continue;
                }
                let lo_q = q.div_ceil(i as u64 + 1) as i64;
                let s0_lo = t.s(0, lo_q).to_u64().unwrap();
                let s0 = t.s(0, q as i64).to_u64().unwrap();
                assert!(binomial(s0_lo, i as u64 + 1) <= s, "{kind:?} i={i} q={q}");
                assert!(s <= binomial(s0, i as u64 + 1), "{kind:?} i={i} q={q}");
            }
        }
    }
}

/// Ways to write `target` as a sum of `k` distinct odd primes.
fn representations(target: u64, k: usize) -> u64 {
    let odd: Vec<u64> = primes::primes_below(target + 1).into_iter().skip(1).collect();
    fn go(el: &[u64], k: usize, rest: u64) -> u64 {
        if k == 0 {
            return (rest == 0) as u64;
        }
        el.iter()
            .enumerate()
            .filter(|(_, &v)| v <= rest)
            .map(|(i, &v)| go(&el[i + 1..], k - 1, rest - v))
            .sum()
    }
    go(&odd, k, target)
}

#[test]
fn prime_homology_counts_representations() {
    let spec = SequenceSpec::below(SequenceKind::Primes, 121).unwrap();
    let t = count_table(&spec, 120, 6).unwrap();
    let h = homology_table(&t, 2).unwrap();
    for q in (4..=120u64).step_by(2) {
        for i in 0..=6usize {
            // a sum of i+1 odd numbers has the parity of i+1
            let target = if (q - 1) % 2 == (i as u64 + 1) % 2 { q - 1 } else { q - 2 };
            let want = representations(target, i + 1);
            assert_eq!(h.h(i, q).unwrap(), &BigUint::from(want), "i={i} q={q}");
        }
    }
}

#[test]
fn chi_prime_three_ways() {
    let sieve = zeta::mobius_sieve(100_000).unwrap();
    let via_series = series::chi_from_product(&WeightMultiset::primes(150), 150).unwrap();
    for q in 3..=150u64 {
        let core = ScalarQuotaSystem::new(primes::primes_below(q), q).unwrap().euler_characteristic();
        assert_eq!(zeta::chi_prime(q), core, "q={q}");
        assert_eq!(zeta::chi_prime_mobius(q, &sieve), core, "q={q}");
        assert_eq!(via_series[q as usize], core, "q={q}");
    }
}

#[test]
fn mertens_partial_steps() {
    let s = zeta::mobius_sieve(10_000).unwrap();
    let m = s.mertens_series();
    assert_eq!(m[1], 1);
    assert!(m.windows(2).all(|w| (w[1] - w[0]).abs() <= 1));
    for n in 1..=10_000u64 {
        let q = ((n + 1) as f64).ln();
        assert_eq!(zeta::chi_logprime(q, &s).unwrap(), 1 - m[n as usize], "n={n}");
    }
}

#[test]
fn divisor_profiles_match_oracle() {
    let sums = divisor::proper_divisor_sums(3000);
    for n in 2..=3000u64 {
        let p = divisor::divisor_profile(n).unwrap();
        assert_eq!(p.sigma_proper, sums[n as usize]);
        assert_eq!(p.classification, Classification::of(n, sums[n as usize]));
        if p.classification == Classification::Deficient {
            assert!(p.is_contractible());
        }
        let perfect_shape = p.signature.iter().count() == 1
            && p.signature.count_u64(p.tau as usize - 3) == 1;
        assert_eq!(p.classification == Classification::Perfect, perfect_shape, "n={n}");
        if p.tau - 1 <= 14 {
            let sys = divisor::divisor_system(n).unwrap();
            let betti = enumerate_complex(&sys).unwrap().betti_numbers().unwrap();
            assert!(betti.matches(&p.signature), "n={n}");
        }
    }
}

#[test]
fn even_perfect_numbers_are_mersenne() {
    let scan = divisor::perfect_scan(2, 12_384).unwrap();
    let perfect: Vec<u64> = scan
        .iter()
        .filter(|p| p.perfect_gap() == Some(0))
        .map(|p| p.n)
        .collect();
    let mersenne: Vec<u64> = (2..14u32)
        .filter(|&p| primes::is_prime((1 << p) - 1))
        .map(|p| (1u64 << (p - 1)) * ((1 << p) - 1))
        .filter(|&n| n < 12_384)
        .collect();
    assert_eq!(perfect, mersenne);
}

fn random_multiset(rng: &mut impl Rng, bound: u64) -> WeightMultiset {
    let k = rng.random_range(1..=12);
    let nu = (0..k).map(|_| rng.random_range(1..=bound)).collect();
    WeightMultiset::new(nu, bound).unwrap()
}

#[test]
fn weight_recovery() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let d = rng.random_range(4..=32u64);
        let nu = random_multiset(&mut rng, d);
        let chi = series::chi_from_product(&nu, d as usize + 1).unwrap();
        let back = series::recover_weights(&chi).unwrap();
        assert_eq!(back.nu(), nu.nu());
    }
}

#[test]
fn series_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut random_series = |d: usize| {
        let coeffs = (0..=d).map(|_| BigInt::from(rng.random_range(-9i64..=9))).collect();
        IntPowerSeries::from_coeffs(coeffs, d)
    };
    for _ in 0..20 {
        let (a, b, c) = (random_series(24), random_series(24), random_series(24));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        let mut unit = random_series(24).coeffs().to_vec();
        unit[0] = BigInt::from(-1);
        let u = IntPowerSeries::from_coeffs(unit, 24);
        assert_eq!(u.mul(&u.reciprocal().unwrap()), IntPowerSeries::one(24));
    }
}
