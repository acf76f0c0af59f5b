"""Integer primitives against brute-force oracles."""

from math import isqrt

import pytest

from spnum.arith import (
    DETERMINISTIC_PRIME_BOUND,
    Factorization,
    factorize,
    ikroot,
    is_prime,
    squarefree_decompose,
)


def _sieve(limit: int) -> bytearray:
    mask = bytearray([1]) * (limit + 1)
    mask[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = b"\x00" * len(mask[p * p :: p])
    return mask


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(27)
    assert is_prime(211)
    assert not is_prime(0) and not is_prime(1) and not is_prime(-7)


def test_is_prime_matches_sieve_to_1e6():
    limit = 10**6
    mask = _sieve(limit)
    for n in range(limit + 1):
        assert is_prime(n) == bool(mask[n]), n


def test_is_prime_deterministic_bound_documented():
    assert DETERMINISTIC_PRIME_BOUND > 2**64


def test_is_prime_large_inputs():
    m89 = 2**89 - 1  # Mersenne prime, above the deterministic tier bound
    assert m89 > DETERMINISTIC_PRIME_BOUND
    assert is_prime(m89)
    assert not is_prime(m89 + 2)  # divisible by 3
    assert not is_prime((2**31 - 1) * (2**61 - 1))


def test_factorize_examples():
    assert factorize(75).as_dict() == {3: 1, 5: 2}
    assert factorize(12).as_dict() == {2: 2, 3: 1}
    assert factorize(1025).as_dict() == {5: 2, 41: 1}


def test_factorize_domain():
    for bad in (1, 0, -4):
        with pytest.raises(ValueError):
            factorize(bad)


def test_factorize_recombines_and_primes_verified():
    for n in range(2, 10**5 + 1):
        f = factorize(n)
        assert f.value == n
        assert f.recombine() == n
        primes = [p for p, _ in f.factors]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)
        assert all(is_prime(p) for p in primes)
        assert all(e >= 1 for _, e in f.factors)


def test_factorize_large_semiprime_via_rho():
    p, q = 10**9 + 7, 10**9 + 9
    assert factorize(p * q).as_dict() == {p: 1, q: 1}
    assert factorize(p * p).as_dict() == {p: 2}


def test_factorization_record():
    f = Factorization(12, ((2, 2), (3, 1)))
    assert f.as_dict() == {2: 2, 3: 1}
    assert f.recombine() == 12


def test_ikroot_examples():
    assert ikroot(16, 2) == 4
    assert ikroot(17, 2) == 4
    assert ikroot(3375, 3) == 15


def test_ikroot_floor_property():
    for n in range(10**4 + 1):
        for k in range(2, 6):
            r = ikroot(n, k)
            assert r**k <= n < (r + 1) ** k, (n, k, r)


def test_ikroot_large_and_edges():
    assert ikroot(0, 5) == 0
    assert ikroot(1, 7) == 1
    assert ikroot(10**30, 1) == 10**30
    big = (10**15 + 3) ** 3
    assert ikroot(big, 3) == 10**15 + 3
    assert ikroot(big - 1, 3) == 10**15 + 2
    with pytest.raises(ValueError):
        ikroot(10, 0)
    with pytest.raises(ValueError):
        ikroot(-1, 2)


def test_squarefree_decompose_examples():
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(9) == (3, 1)
    assert squarefree_decompose(30) == (1, 30)
    assert squarefree_decompose(1) == (1, 1)
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_squarefree_decompose_brute():
    for x in range(1, 2001):
        t, s = squarefree_decompose(x)
        assert t * t * s == x
        # t maximal: found by brute force over square divisors
        best = max(d for d in range(1, isqrt(x) + 1) if x % (d * d) == 0)
        assert t == best, x
        if s > 1:
            assert all(e == 1 for _, e in factorize(s).factors)
