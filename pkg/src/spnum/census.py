"""Exact counting and enumeration of p*a^k and p1*p2^2 numbers up to n.

Two independent routes are kept deliberately separate: pair enumeration
(`kp_enumerate`, merging per-base streams of p*a^k products) and the
prime-counting identity (`kp_count`, summing pi(n/a^k)).  They must agree
exactly, and the test suite holds them to that.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt, log
from typing import Iterable, Iterator

import numpy as np

from . import analytic
from .arith import ikroot
from .classify import KpWitness

__all__ = [
    "CensusRow",
    "DigitCensus",
    "prime_pi",
    "kp_enumerate",
    "kp_count",
    "psp_count",
    "digit_census",
    "census_table",
]

SEGMENT_SIZE = 1 << 20


@dataclass(frozen=True)
class CensusRow:
    n: int
    exact: int
    estimate: float
    ratio: float


@dataclass(frozen=True)
class DigitCensus:
    """Counts of SP numbers <= n, indexed by final decimal digit."""

    n: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain sieve, fits in memory)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def _prime_pi_many(xs: Iterable[int], segment_size: int = SEGMENT_SIZE) -> dict[int, int]:
    """pi(x) for every query in xs, in one segmented pass up to max(xs)."""
    queries = sorted({int(x) for x in xs})
    out = {x: 0 for x in queries if x < 2}
    queries = [x for x in queries if x >= 2]
    if not queries:
        return out
    top = queries[-1]
    base = sieve_primes(isqrt(top))
    count = 0
    qi = 0
    for lo in range(2, top + 1, segment_size):
        hi = min(lo + segment_size, top + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                seg[start - lo :: p] = False
        cum = np.cumsum(seg)
        while qi < len(queries) and queries[qi] < hi:
            out[queries[qi]] = count + int(cum[queries[qi] - lo])
            qi += 1
        count += int(cum[-1])
    return out


def prime_pi(x: int, segment_size: int = SEGMENT_SIZE) -> int:
    """Number of primes <= x, exact, by segmented sieve."""
    return _prime_pi_many([x], segment_size)[x]


def kp_enumerate(n: int, k: int = 2) -> Iterator[KpWitness]:
    """Every KP_k number <= n exactly once, ascending, with its witness.

    One stream per base a emits p*a^k over primes p <= n/a^k; the streams
    are heap-merged.  Decomposition uniqueness makes the union duplicate
    free, so no dedup pass is needed.
    """
    if k < 2:
        raise ValueError(f"kp_enumerate requires k >= 2, got {k}")
    a_max = ikroot(n // 2, k) if n >= 2 else 0
    if a_max < 2:
        return
    primes = sieve_primes(n // 2**k).tolist()

    def stream(a: int) -> Iterator[tuple[int, int, int]]:
        m = a**k
        for p in primes[: bisect_right(primes, n // m)]:
            yield (p * m, p, a)

    for value, p, a in heapq.merge(*(stream(a) for a in range(2, a_max + 1))):
        yield KpWitness(value, k, p, a)


def kp_count(n: int, k: int = 2) -> int:
    """Count of KP_k numbers <= n via the identity sum over a of pi(n/a^k)."""
    if k < 2:
        raise ValueError(f"kp_count requires k >= 2, got {k}")
    a_max = ikroot(n // 2, k) if n >= 2 else 0
    if a_max < 2:
        return 0
    quotients = [n // a**k for a in range(2, a_max + 1)]
    pi = _prime_pi_many(quotients)
    return sum(pi[q] for q in quotients)


def psp_count(n: int) -> int:
    """Count of p1*p2^2 numbers <= n via the sum over p2 of pi(n/p2^2).

    The inner pi runs over all primes, so p1 = p2 cases (8 = 2*2^2) are
    counted, matching `psp_decompose`.
    """
    if n < 8:
        return 0
    ps = sieve_primes(isqrt(n // 2)).tolist()
    if not ps:
        return 0
    quotients = [n // (p * p) for p in ps]
    pi = _prime_pi_many(quotients)
    return sum(pi[q] for q in quotients)


def digit_census(n: int) -> DigitCensus:
    """Tallies of SP numbers <= n by final decimal digit."""
    counts = [0] * 10
    for w in kp_enumerate(n, 2):
        counts[w.n % 10] += 1
    return DigitCensus(n, tuple(counts))


def census_table(
    checkpoints: list[int], k: int = 2, family: str = "kp"
) -> list[CensusRow]:
    """One CensusRow per checkpoint: exact count, analytic estimate, ratio.

    family "kp" counts p*a^k against the (zeta(k)-1)*n/ln n estimate;
    family "psp" (k = 2 only) counts p1*p2^2 against P(2)*n/ln n.
    """
    fam = family.lower()
    if fam not in ("kp", "psp"):
        raise ValueError(f"family must be 'kp' or 'psp', got {family!r}")
    if fam == "psp" and k != 2:
        raise ValueError("psp census is defined for k = 2 only")
    if any(b < 2 for b in checkpoints):
        raise ValueError("checkpoints must be >= 2")
    if list(checkpoints) != sorted(checkpoints):
        raise ValueError("checkpoints must be ascending")
    rows = []
    for n in checkpoints:
        if fam == "kp":
            exact = kp_count(n, k)
            if n >= 3:
                estimate = analytic.kp_estimate(n, k)
            else:
                # below the estimator's n >= 3 contract; same formula
                estimate = (analytic.zeta(k).value - 1.0) * n / log(n)
        else:
            exact = psp_count(n)
            if n >= 3:
                estimate = analytic.psp_estimate(n)
            else:
                estimate = analytic.prime_zeta(2).value * n / log(n)
        rows.append(CensusRow(n, exact, estimate, exact * log(n) / n))
    return rows
