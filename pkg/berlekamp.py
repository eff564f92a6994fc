#!/usr/bin/env python3
"""
Berlekamp reduction over F_p
Turns factoring a squarefree f into finding roots of polynomials that
split completely over F_p. This module never looks for roots itself.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import gmpy2

from errors import IncompleteRoots, NotFrobeniusFixed
from fp_poly import FpPoly, poly_gcd, powmod_poly
from query_ring import RingElem

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def nullspace_mod_p(rows: Sequence[Sequence[int]], p: int) -> List[Vector]:
    """Basis of {v : M v = 0} by Gauss-Jordan elimination.

    Pivots are taken in increasing column order, choosing the smallest row
    index with a nonzero entry, so the basis is reproducible. One basis
    vector per free column, with a 1 in that column.
    """
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(m)) if m[r][col] % p), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = int(gmpy2.invert(m[row][col], p))
        m[row] = [v * inv % p for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] % p:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[free] = 1
        for r, col in enumerate(pivots):
            v[col] = (-m[r][free]) % p
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class FrobeniusMatrix:
    """Row i is the coefficient vector of t^(i*p) mod f"""
    p: int
    f: FpPoly
    rows: Tuple[Vector, ...]


@dataclass(frozen=True)
class BerlekampBasis:
    """Basis of the Frobenius-fixed subalgebra {beta : beta^p = beta} of F_p[t]/(f)"""
    p: int
    f: FpPoly
    vectors: Tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def elements(self) -> List[FpPoly]:
        return [FpPoly(self.p, v) for v in self.vectors]


def _check_monic(f: FpPoly):
    if f.is_zero() or f.degree < 1 or not f.is_monic():
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {f}")


def frobenius_matrix(f: FpPoly) -> FrobeniusMatrix:
    _check_monic(f)
    p, d = f.p, f.degree
    step = powmod_poly(FpPoly.gen(p), p, f)
    current = FpPoly.one(p)
    rows = []
    for _ in range(d):
        rows.append(tuple(current[j] for j in range(d)))
        current = (current * step) % f
    return FrobeniusMatrix(p, f, tuple(rows))


def berlekamp_basis(f: FpPoly) -> BerlekampBasis:
    """Kernel of Q - I; its dimension counts the irreducible factors of f"""
    Q = frobenius_matrix(f)
    p, d = f.p, f.degree
    # beta^p = b*Q for the row vector b, so solve (Q - I)^T b = 0
    system = [[(Q.rows[i][j] - (1 if i == j else 0)) % p for i in range(d)] for j in range(d)]
    vectors = nullspace_mod_p(system, p)
    logger.debug(f"berlekamp basis of {f}: dimension {len(vectors)}")
    return BerlekampBasis(p, f, tuple(vectors))


def minimal_polynomial(beta: RingElem, f: FpPoly) -> FpPoly:
    """Monic minimal polynomial of a Frobenius-fixed beta in F_p[t]/(f)"""
    p = f.p
    rep = beta.rep % f
    if powmod_poly(rep, p, f) != rep:
        raise NotFrobeniusFixed(f"{rep} is not fixed by the p-th power map mod {f}")
    d = f.degree
    powers = [FpPoly.one(p) % f]
    while True:
        powers.append((powers[-1] * rep) % f)
        k = len(powers) - 1
        columns = [[pw[i] for pw in powers] for i in range(d)]
        kernel = nullspace_mod_p(columns, p)
        if kernel:
            relation = kernel[0]
            minimal = FpPoly(p, relation).monic()
            if minimal.degree == k:
                break
    s_p = powmod_poly(FpPoly.gen(p), p, minimal)
    assert s_p == FpPoly.gen(p) % minimal, "minimal polynomial does not divide s^p - s"
    assert poly_gcd(minimal, minimal.derivative()).is_one(), "minimal polynomial is not squarefree"
    return minimal


def split_by_element(f: FpPoly, beta: RingElem, roots: Sequence[int]) -> List[FpPoly]:
    """gcd(f, beta - r) for each root r, dropping trivial entries"""
    p = f.p
    pieces = []
    for r in roots:
        g = poly_gcd(f, beta.rep - r)
        if g.degree > 0:
            pieces.append(g)
    product = FpPoly.one(p)
    for g in pieces:
        product = product * g
    if product != f.monic():
        raise IncompleteRoots(f"roots {list(roots)} do not split {f}")
    return pieces

