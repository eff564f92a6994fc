#!/usr/bin/env python3
"""
Tests for the factoring driver: schedule, root finding and full factoring
"""

import random
import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from berlekamp import berlekamp_basis
from config import MIN_ATTEMPTS, RECIPE_TABLE_SIZE
from driver import (AttemptRecord, CurveFactorizer, attempt_budget, curve_schedule, factor,
                    recipe_table, split_roots)
from errors import AttemptBudgetExhausted, NotPrimeError
from fp_poly import FpPoly
from query_ring import QuotientRing
from oracles import (isomorphic_fiber_pair, random_poly, random_split_poly,
                     trial_division_factor)


def P(p, *coeffs):
    return FpPoly(p, coeffs)


def test_recipe_table():
    table = recipe_table()
    assert len(table) == RECIPE_TABLE_SIZE
    assert [(r.a4_spec, r.a6_spec) for r in table[:6]] == [
        ((0, 1), (1, 0)), ((0, 1), (2, 0)), ((1, 0), (0, 1)),
        ((0, 1), (1, 1)), ((1, 1), (0, 1)), ((1, 2), (3, 0)),
    ]
    assert (table[6].a4_spec, table[6].a6_spec) == ((2, 1), (1, 2))
    assert str(table[0]) == "#0 (a4=t, a6=1)"
    assert [r.index for r in table] == list(range(RECIPE_TABLE_SIZE))


def test_recipe_in_ring():
    ring = QuotientRing(FpPoly.from_roots(11, [2, 7]))
    a4, a6 = recipe_table()[5].in_ring(ring)
    assert a4.rep == P(11, 1, 2)
    assert a6.rep == P(11, 3)


def test_curve_schedule():
    R = RECIPE_TABLE_SIZE
    assert curve_schedule(0) == (recipe_table()[0], 0)
    assert curve_schedule(R) == (recipe_table()[0], 1)
    assert curve_schedule(R + 3) == (recipe_table()[3], 1)
    seen = {(r.index, c) for r, c in (curve_schedule(k) for k in range(R * 101))}
    assert len(seen) == R * 101
    with pytest.raises(ValueError):
        curve_schedule(-1)


def test_attempt_budget():
    assert attempt_budget(5) == MIN_ATTEMPTS
    assert attempt_budget(101) == MIN_ATTEMPTS
    assert attempt_budget(1009) == 100
    assert attempt_budget(2**61 - 1) == 3721


def test_split_roots_small_cases():
    assert split_roots(101, P(101, 3, 1)) == [98]
    assert split_roots(1009, P(1009, 1008, 0, 1)) == [1, 1008]
    assert split_roots(11, FpPoly.from_roots(11, [9, 2, 5])) == [2, 5, 9]


def test_split_roots_by_curves_matches_scan():
    """Force the curve path below the scan threshold"""
    rng = random.Random(3)
    for p in (101, 211):
        engine = CurveFactorizer(p, small_p_threshold=0)
        for degree in (2, 3, 4):
            g, roots = random_split_poly(rng, p, degree)
            assert engine.split_roots(g) == roots
            assert all(g.evaluate(r) == 0 for r in roots)


def test_split_roots_moves_past_shared_traces():
    """Isomorphic fibers share a trace under (t, 1) and (t, 2); a later recipe separates them"""
    p = 211
    pair = isomorphic_fiber_pair(p, 5)
    g = FpPoly.from_roots(p, pair)
    engine = CurveFactorizer(p, small_p_threshold=0)
    assert engine.split_roots(g) == [5, 136]
    outcomes = [r.outcome for r in engine.trace_log]
    assert outcomes[0] == 'shared-trace'
    assert outcomes[-1] == 'split'
    assert 'fallback-scan' not in outcomes
    assert [r.attempt for r in engine.trace_log] == list(range(len(outcomes)))


def test_budget_fallback_and_exhaustion():
    p = 211
    pair = isomorphic_fiber_pair(p, 5)
    g = FpPoly.from_roots(p, pair)
    engine = CurveFactorizer(p, max_attempts=0, small_p_threshold=0)
    assert engine.split_roots(g) == sorted(pair)
    assert engine.trace_log[-1].outcome == 'fallback-scan'
    strict = CurveFactorizer(p, max_attempts=0, small_p_threshold=0, exhaustive_cap=0)
    with pytest.raises(AttemptBudgetExhausted) as info:
        strict.split_roots(g)
    assert isinstance(info.value.trace_log, list)


def test_factor_examples():
    result = factor(11, P(11, 1, 3, 1))
    assert result.factors == ((P(11, 5, 1), 1), (P(11, 9, 1), 1))
    assert result.unit == 1
    assert factor(5, P(5, 2, 0, 1)).factors == ((P(5, 2, 0, 1), 1),)
    f = FpPoly.from_roots(5, [4, 4, 3])
    assert factor(5, f).factors == ((P(5, 1, 1), 2), (P(5, 2, 1), 1))
    assert factor(5, P(5, 0, 0, 1)).factors == ((P(5, 0, 1), 2),)


def test_factor_keeps_unit_and_constants():
    result = factor(7, P(7, 6, 0, 3))
    assert result.unit == 3
    assert result.product() == P(7, 6, 0, 3)
    constant = factor(7, P(7, 4))
    assert constant.unit == 4 and constant.factors == ()
    with pytest.raises(ValueError):
        factor(7, FpPoly.zero(7))
    with pytest.raises(NotPrimeError):
        factor(9, P(9, 1, 1))


def _check_against_oracle(p, f, engine=None):
    result = (engine or CurveFactorizer(p)).factor(f)
    unit, expected = trial_division_factor(f)
    assert result.unit == unit
    assert list(result.factors) == expected, (p, f)
    assert result.product() == f
    for g, _ in result.factors:
        if g.degree >= 2:
            assert berlekamp_basis(g).dimension == 1
    return result


def test_factor_matches_trial_division():
    rng = random.Random(2024)
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    for _ in range(1000):
        p = rng.choice(primes)
        f = random_poly(rng, p, rng.randint(0, 4))
        if rng.random() < 0.3:
            f = f * random_poly(rng, p, rng.randint(1, 2), monic=True)
        _check_against_oracle(p, f)


def test_factor_curve_path_matches_trial_division():
    rng = random.Random(99)
    p = 101
    engine = CurveFactorizer(p, small_p_threshold=0)
    for _ in range(15):
        f = random_poly(rng, p, rng.randint(2, 5))
        _check_against_oracle(p, f, engine)


@pytest.mark.slow
@pytest.mark.parametrize("p", [1009, 10007])
def test_factor_split_polynomials_at_scale(p):
    rng = random.Random(p)
    for _ in range(200):
        f, roots = random_split_poly(rng, p, rng.randint(2, 5))
        result = factor(p, f)
        assert [g for g, _ in result.factors] == [P(p, (-r) % p, 1) for r in
                                                   sorted(roots, key=lambda r: (-r) % p)]
        assert result.product() == f


def test_factor_is_deterministic():
    p = 1009
    f = FpPoly.from_roots(p, [5, 17, 400]) * P(p, 3, 0, 1)
    first = factor(p, f)
    second = factor(p, f)
    assert first == second
    assert first.trace_log == second.trace_log
    assert all(isinstance(r, AttemptRecord) for r in first.trace_log)
