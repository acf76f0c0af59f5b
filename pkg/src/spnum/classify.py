"""Recognition and unique decomposition of p*a^2, p*a^k, and p1*p2^2 numbers.

An SP number is p*a^2 with p prime and a >= 2; KP_k generalizes the square
to a k-th power; PSP restricts the square's base to a prime.  Each
decomposition, when it exists, is unique, so the witness types below carry
the full certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, ikroot, is_prime

__all__ = [
    "SpWitness",
    "KpWitness",
    "PspWitness",
    "sp_decompose",
    "kp_decompose",
    "psp_decompose",
    "verify_sp_witness",
]


@dataclass(frozen=True)
class SpWitness:
    """Certificate n = p * a^2 with p prime, a >= 2."""

    n: int
    p: int
    a: int


@dataclass(frozen=True)
class KpWitness:
    """Certificate n = p * a^k with p prime, a >= 2, k >= 2."""

    n: int
    k: int
    p: int
    a: int


@dataclass(frozen=True)
class PspWitness:
    """Certificate n = p1 * p2^2 with both factors prime."""

    n: int
    p1: int
    p2: int


def kp_decompose(n: int, k: int) -> KpWitness | None:
    """The unique (p, a) with n = p*a^k, p prime, a >= 2, if it exists.

    Criterion, read off the factorization: exactly one prime has exponent
    not divisible by k, that exponent is 1 mod k, and n is not p itself.
    The stray prime is forced to be p and a is then the exact k-th root of
    n/p, which makes the decomposition unique.
    """
    if k < 2:
        raise ValueError(f"kp_decompose requires k >= 2, got {k}")
    if n < 4:
        return None
    stray = [(p, e) for p, e in factorize(n).factors if e % k != 0]
    if len(stray) != 1 or stray[0][1] % k != 1:
        return None
    p = stray[0][0]
    if n == p:
        return None
    a = ikroot(n // p, k)
    return KpWitness(n, k, p, a)


def sp_decompose(n: int) -> SpWitness | None:
    """The unique (p, a) with n = p * a^2, a >= 2, if n is an SP number."""
    if n < 1:
        return None
    w = kp_decompose(n, 2)
    if w is None:
        return None
    return SpWitness(w.n, w.p, w.a)


def verify_sp_witness(w: SpWitness) -> bool:
    """True iff w is a valid SP certificate: p prime, a >= 2, n = p*a^2.

    By uniqueness of the decomposition this is equivalent to
    sp_decompose(w.n) == w, but it never factors w.n, so it stays cheap
    for witnesses with hundred-digit square bases (Pell-built gap pairs).
    """
    return w.a >= 2 and w.n == w.p * w.a**2 and is_prime(w.p)


def psp_decompose(n: int) -> PspWitness | None:
    """The (p1, p2) with n = p1 * p2^2, both prime, if n has that form.

    p1 = p2 is allowed (the smallest case is 8 = 2 * 2^2), matching the
    defining form and the census identity that counts these numbers.
    """
    w = sp_decompose(n)
    if w is None or not is_prime(w.a):
        return None
    return PspWitness(n, w.p, w.a)
