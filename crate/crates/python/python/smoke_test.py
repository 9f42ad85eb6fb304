"""Smoke test for the quotatope extension module."""

from fractions import Fraction
import json
import math

import quotatope as qt


def main():
    sys = qt.ScalarQuotaSystem([1, 2, 3, 4], 6)
    assert sys.bouquet_signature() == {1: 1}
    assert sys.betti_numbers() == {1: 1}
    assert sys.euler_characteristic() == 0
    assert sys.is_face([0, 3]) and not sys.is_face([1, 3])
    assert qt.ScalarQuotaSystem([1], 1).bouquet_signature() is None

    half = qt.ScalarQuotaSystem([Fraction(1, 2), "3/2", 1], 2)
    assert half.quota == "2"
    assert half.bouquet_signature() == half.betti_numbers()
    assert qt.ScalarQuotaSystem.from_json(half.to_json()).weights == half.weights

    assert [qt.chi_prime(q) for q in range(3, 8)] == [1, 2, 2, 2, 2]
    chi = qt.chi_from_product([2, 3, 5, 7, 11], 12)
    assert chi[3:8] == [1, 2, 2, 2, 2]
    assert qt.recover_weights(qt.chi_from_product([1, 1, 4, 9], 20)) == [1, 1, 4, 9]

    m = qt.mertens(100)
    assert m[10] == -1
    assert qt.chi_logprime(math.log(11)) == 1 - m[10]

    tau = qt.ramanujan_tau(10)
    assert tau[:3] == [1, -24, 252]
    assert qt.partition_numbers(30)[30] == 5604

    p = qt.divisor_profile(28)
    assert p["classification"] == "perfect" and p["perfect_gap"] == 0
    assert qt.divisor_profile(12285)["perfect_gap"] == 2
    assert qt.non_contractible(2, 1000, odd_only=True) == [945]

    s, h = qt.sequence_tables("primes", 30, 3)
    assert s[0][10] == 3 and h[0][10] == 0 and h[0][9] == 1
    slope, _ = qt.slope_fit("primes", 550, 1)
    assert abs(slope - 0.632374) < 0.02

    weights, quota = qt.complex_to_quota_system([[0, 1], [1, 2], [0, 2]], 3)
    assert len(weights) == 3 and len(quota) >= 1

    spec = json.dumps({"m": 1, "densities": [{"kind": "uniform", "params": [1, 2]}]})
    assert abs(qt.expected_homology(spec, 1, [2.5])[0] - 0.5) < 1e-9
    (mean, se), = qt.monte_carlo(spec, [2.5], 20000, 3)[0]
    assert abs(mean - 0.5) < 4 * se + 1e-3

    try:
        qt.ScalarQuotaSystem([-1], 1)
    except ValueError:
        pass
    else:
        raise AssertionError("negative weight accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
