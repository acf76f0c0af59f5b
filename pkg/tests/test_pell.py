"""Pell equation solver against brute-force minimal solutions."""

from math import isqrt

import pytest

from spnum.pell import (
    PellSolution,
    cf_fundamental,
    compose,
    fundamental_solution,
    negative_fundamental,
    solution_stream,
)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _brute_fundamental(d: int, norm: int, y_cap: int) -> PellSolution | None:
    for y in range(1, y_cap + 1):
        t = d * y * y + norm
        if _is_square(t):
            return PellSolution(d, isqrt(t), y, norm)
    return None


def test_examples():
    assert fundamental_solution(2) == PellSolution(2, 3, 2, 1)
    assert fundamental_solution(6) == PellSolution(6, 5, 2, 1)
    assert fundamental_solution(61) == PellSolution(61, 1766319049, 226153980, 1)


def test_negative_examples():
    assert negative_fundamental(2) == PellSolution(2, 1, 1, -1)
    assert negative_fundamental(5) == PellSolution(5, 2, 1, -1)
    assert negative_fundamental(3) is None
    assert negative_fundamental(61) is not None


def test_solutions_satisfy_equation():
    for d in range(2, 101):
        if _is_square(d):
            continue
        s = fundamental_solution(d)
        assert s.x * s.x - d * s.y * s.y == 1
        assert s.x >= 2 and s.y >= 1 and s.norm == 1
        neg = negative_fundamental(d)
        if neg is not None:
            assert neg.x * neg.x - d * neg.y * neg.y == -1


def test_minimality_brute_force():
    for d in range(2, 51):
        if _is_square(d):
            continue
        assert fundamental_solution(d) == _brute_fundamental(d, 1, 5000), d
        neg = negative_fundamental(d)
        assert neg == _brute_fundamental(d, -1, 5000), d


def test_chakravala_agrees_with_continued_fraction():
    for d in range(2, 101):
        if _is_square(d):
            continue
        assert fundamental_solution(d) == cf_fundamental(d), d


def test_domain_errors():
    for bad in (4, 9, 100, 1, 0, -2):
        with pytest.raises(ValueError):
            fundamental_solution(bad)
        with pytest.raises(ValueError):
            negative_fundamental(bad)


def test_compose():
    a = PellSolution(2, 7, 5, -1)
    b = PellSolution(2, 3, 2, 1)
    assert compose(a, b) == PellSolution(2, 41, 29, -1)
    assert compose(b, b) == PellSolution(2, 17, 12, 1)
    ident = PellSolution(2, 1, 0, 1)
    assert compose(a, ident) == a
    with pytest.raises(ValueError):
        compose(a, PellSolution(3, 2, 1, 1))


def test_compose_norm_law():
    for d in (2, 5, 13):
        fund = fundamental_solution(d)
        neg = negative_fundamental(d)
        cur = neg
        for _ in range(4):
            nxt = compose(cur, fund)
            assert nxt.x * nxt.x - d * nxt.y * nxt.y == nxt.norm == cur.norm
            cur = nxt
        twice = compose(neg, neg)
        assert twice.norm == 1
        assert twice.x * twice.x - d * twice.y * twice.y == 1


def test_solution_stream():
    assert [(s.x, s.y) for s in solution_stream(2, -1, 3)] == [
        (1, 1), (7, 5), (41, 29)]
    assert [(s.x, s.y) for s in solution_stream(2, 1, 2)] == [(3, 2), (17, 12)]
    assert [(s.x, s.y) for s in solution_stream(6, 1, 1)] == [(5, 2)]
    assert solution_stream(2, 1, 0) == []


def test_solution_stream_structure():
    for d, norm in ((3, 1), (61, 1), (5, -1), (13, -1)):
        sols = solution_stream(d, norm, 5)
        assert len(sols) == 5
        xs = [s.x for s in sols]
        assert xs == sorted(xs) and len(set(xs)) == 5
        for s in sols:
            assert s.x * s.x - d * s.y * s.y == norm
        fund = fundamental_solution(d)
        for prev, nxt in zip(sols, sols[1:]):
            assert compose(prev, fund) == nxt


def test_solution_stream_unsolvable():
    with pytest.raises(ValueError):
        solution_stream(3, -1, 2)
    with pytest.raises(ValueError):
        solution_stream(2, 5, 1)
