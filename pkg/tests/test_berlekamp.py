#!/usr/bin/env python3
"""
Tests for the Berlekamp reduction to split-completely root finding
"""

import random
import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from berlekamp import (berlekamp_basis, frobenius_matrix, minimal_polynomial,
                       nullspace_mod_p, split_by_element)
from errors import IncompleteRoots, NotFrobeniusFixed
from fp_poly import FpPoly, poly_gcd, powmod_poly, squarefree_decomposition
from query_ring import QuotientRing
from oracles import exhaustive_roots, random_poly, trial_division_factor


def P(p, *coeffs):
    return FpPoly(p, coeffs)


def test_frobenius_matrix_examples():
    assert frobenius_matrix(P(5, 4, 0, 1)).rows == ((1, 0), (0, 1))
    assert frobenius_matrix(P(5, 2, 0, 1)).rows == ((1, 0), (0, 4))
    assert frobenius_matrix(P(5, 3, 1)).rows == ((1,),)


def test_basis_examples():
    split = berlekamp_basis(P(5, 4, 0, 1))
    assert split.dimension == 2
    assert split.vectors[0] == (1, 0)
    irreducible = berlekamp_basis(P(5, 2, 0, 1))
    assert irreducible.dimension == 1
    assert irreducible.elements() == [FpPoly.one(5)]


def test_nullspace_is_deterministic():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = nullspace_mod_p(rows, 7)
    assert basis == [(5, 1, 0), (4, 0, 1)]
    for v in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) % 7 == 0


def test_minimal_polynomial_examples():
    ring = QuotientRing(P(5, 4, 0, 1))
    assert minimal_polynomial(ring.element(3), ring.f) == P(5, 2, 1)
    assert minimal_polynomial(ring.gen(), ring.f) == P(5, 4, 0, 1)


def test_minimal_polynomial_rejects_unfixed():
    ring = QuotientRing(P(5, 2, 0, 1))
    with pytest.raises(NotFrobeniusFixed):
        minimal_polynomial(ring.gen(), ring.f)


def test_split_by_element_examples():
    ring = QuotientRing(P(5, 4, 0, 1))
    assert split_by_element(ring.f, ring.gen(), [1, 4]) == [P(5, 4, 1), P(5, 1, 1)]
    assert split_by_element(ring.f, ring.element(2), [2]) == [ring.f]
    with pytest.raises(IncompleteRoots):
        split_by_element(ring.f, ring.gen(), [1])


def _squarefree_cases(count, seed):
    rng = random.Random(seed)
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    produced = 0
    while produced < count:
        p = rng.choice(primes)
        f = random_poly(rng, p, rng.randint(1, 6), monic=True)
        for part, _ in squarefree_decomposition(f):
            yield p, part
            produced += 1


def test_basis_dimension_counts_factors():
    """Kernel dimension equals the number of distinct irreducible factors"""
    for p, f in _squarefree_cases(1000, seed=11):
        basis = berlekamp_basis(f)
        _, factors = trial_division_factor(f)
        assert basis.dimension == len(factors), (p, f)
        assert basis.vectors[0] == (1,) + (0,) * (f.degree - 1)
        for beta in basis.elements():
            assert powmod_poly(beta, p, f) == beta % f


def test_minimal_polynomials_split_completely():
    ring_checks = 0
    for p, f in _squarefree_cases(300, seed=12):
        basis = berlekamp_basis(f)
        ring = QuotientRing(f)
        for beta in basis.elements():
            m = minimal_polynomial(ring.element(beta), f)
            assert poly_gcd(m, m.derivative()).is_one()
            assert powmod_poly(FpPoly.gen(p), p, m) == FpPoly.gen(p) % m
            roots = exhaustive_roots(m)
            assert len(roots) == m.degree
            pieces = split_by_element(f, ring.element(beta), roots)
            product = FpPoly.one(p)
            for i, g in enumerate(pieces):
                product = product * g
                for h in pieces[i + 1:]:
                    assert poly_gcd(g, h).is_one()
            assert product == f
            ring_checks += 1
    assert ring_checks >= 300
