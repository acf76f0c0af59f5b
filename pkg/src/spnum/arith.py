"""Exact integer primitives: primality, factorization, integer roots.

Everything here works on arbitrary-precision Python ints and never goes
through floating point, so floor/exactness guarantees hold at any size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

__all__ = [
    "Factorization",
    "is_prime",
    "factorize",
    "ikroot",
    "squarefree_decompose",
]


def _small_prime_list(limit: int) -> list[int]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i in range(limit) if sieve[i]]


_TRIAL_PRIMES = _small_prime_list(1000)

# Deterministic Miller-Rabin witness tiers.  Each entry (bound, bases) is a
# published exhaustively-verified result: testing against `bases` is exact for
# all n < bound.  The last tier covers everything below ~3.3e24, far past 2^64.
_MR_TIERS: list[tuple[int, tuple[int, ...]]] = [
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
]
DETERMINISTIC_PRIME_BOUND = _MR_TIERS[-1][0]

# Rounds of random-base Miller-Rabin above the deterministic bound.  Each
# round has error probability < 1/4, so 64 rounds keep the per-call error
# below 4^-64 = 2^-128.
_MR_RANDOM_ROUNDS = 64


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a witnesses compositeness of n = d*2^s + 1, d odd."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test, exact for all n below ``DETERMINISTIC_PRIME_BOUND``.

    Below the bound (~3.3e24 > 2^64) this is a deterministic strong
    pseudoprime test with published witness sets.  Above it, 64 rounds of
    random-base Miller-Rabin give error probability below 2^-128 per call.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, bases in _MR_TIERS:
        if n < bound:
            return not any(_mr_witness(n, a, d, s) for a in bases)
    rng = random.Random(n)
    for _ in range(_MR_RANDOM_ROUNDS):
        a = rng.randrange(2, n - 1)
        if _mr_witness(n, a, d, s):
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization: strictly increasing primes with exponents."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def recombine(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _rho_split(n: int) -> int:
    """A nontrivial factor of odd composite n, by Brent's cycle method."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _rho_split(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> Factorization:
    """Full prime factorization of n >= 2.

    Trial division by sieved small primes, then Brent-rho on what is left.
    Suited to smooth or moderate inputs, not cryptographic sizes.
    """
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    value = n
    found: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1:
        # leftover cofactor: prime, or a product of primes > the trial cutoff
        _factor_into(n, found)
    return Factorization(value, tuple(sorted(found.items())))


def ikroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) by pure integer arithmetic.

    Newton iteration seeded from the bit length, with a final exact
    correction step, so r**k <= n < (r+1)**k always holds.
    """
    if k < 1:
        raise ValueError(f"ikroot requires k >= 1, got {k}")
    if n < 0:
        raise ValueError("ikroot requires n >= 0")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return isqrt(n)
    if n.bit_length() <= k:
        return 1
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def squarefree_decompose(x: int) -> tuple[int, int]:
    """Write x = t^2 * s with s square-free and t maximal; returns (t, s)."""
    if x < 1:
        raise ValueError(f"squarefree_decompose requires x >= 1, got {x}")
    if x == 1:
        return 1, 1
    t = 1
    s = 1
    for p, e in factorize(x).factors:
        t *= p ** (e // 2)
        if e % 2:
            s *= p
    return t, s
