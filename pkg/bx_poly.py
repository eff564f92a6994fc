#!/usr/bin/env python3
"""
Polynomials in x with coefficients in B = F_p[t]/(f)

A polynomial is a list of rows, row j holding the coefficient of x^j as a
length-d list of residues (d = deg f, lowest t-degree first). Products are
computed by packing both operands into single integers (Kronecker
substitution with t-stride 2d-1) so that one big-integer multiply does the
work of the whole bivariate convolution.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import gmpy2

from fp_poly import FpPoly, mul_coeffs, pack_slots, slot_width, unpack_slots
from query_ring import QuotientRing, RingElem, invert_or_split

logger = logging.getLogger(__name__)

Row = List[int]
BxPoly = List[Row]


class BxKernel:
    """Arithmetic on B[x] for one fixed quotient ring"""

    def __init__(self, ring: QuotientRing):
        self.ring = ring
        self.p = ring.p
        self.d = ring.degree
        self._f_low = list(ring.f.coeffs[:self.d])

    # ---------- rows (elements of B) ----------

    def row(self, value) -> Row:
        """Padded coefficient row for an int, FpPoly or RingElem"""
        if isinstance(value, RingElem):
            value = value.rep
        elif isinstance(value, int):
            value = FpPoly.constant(self.p, value)
        value = value % self.ring.f
        coeffs = list(value.coeffs)
        return coeffs + [0] * (self.d - len(coeffs))

    def elem(self, row: Row) -> RingElem:
        return RingElem(self.ring, FpPoly._reduced(self.p, list(row)))

    def zero_row(self) -> Row:
        return [0] * self.d

    def one_row(self) -> Row:
        return [1] + [0] * (self.d - 1)

    def fold(self, wide: Sequence[int]) -> Row:
        """Reduce a row of t-degree <= 2d-2 modulo f"""
        p, d = self.p, self.d
        row = [v % p for v in wide]
        for k in range(len(row) - 1, d - 1, -1):
            c = row[k] % p
            if c:
                base = k - d
                for i, fi in enumerate(self._f_low):
                    row[base + i] -= c * fi
        return [v % p for v in row[:d]]

    def mul_row(self, a: Row, b: Row) -> Row:
        if self.d == 1:
            return [a[0] * b[0] % self.p]
        return self.fold(mul_coeffs(a, b, self.p))

    def add_row(self, a: Row, b: Row) -> Row:
        p = self.p
        return [(x + y) % p for x, y in zip(a, b)]

    def sub_row(self, a: Row, b: Row) -> Row:
        p = self.p
        return [(x - y) % p for x, y in zip(a, b)]

    def invert_row(self, row: Row) -> Row:
        """Inverse of a B-unit through the query discipline (may raise SplitFound)"""
        if self.d == 1:
            return [int(gmpy2.invert(row[0], self.p))]
        inverse = invert_or_split(self.elem(row))
        if inverse is None:
            raise ZeroDivisionError("inverting zero in B")
        return self.row(inverse)

    # ---------- polynomials in x ----------

    def trim(self, a: BxPoly) -> BxPoly:
        """Drop leading rows that are zero in B"""
        n = len(a)
        while n and not any(a[n - 1]):
            n -= 1
        return a[:n]

    def const(self, value) -> BxPoly:
        return self.trim([self.row(value)])

    def x(self) -> BxPoly:
        return [self.zero_row(), self.one_row()]

    def add(self, a: BxPoly, b: BxPoly) -> BxPoly:
        if len(a) < len(b):
            a, b = b, a
        out = [list(r) for r in a]
        for j, r in enumerate(b):
            out[j] = self.add_row(out[j], r)
        return self.trim(out)

    def sub(self, a: BxPoly, b: BxPoly) -> BxPoly:
        return self.add(a, self.neg(b))

    def neg(self, a: BxPoly) -> BxPoly:
        p = self.p
        return [[(-v) % p for v in r] for r in a]

    def scale(self, a: BxPoly, c: Row) -> BxPoly:
        return self.trim([self.mul_row(r, c) for r in a])

    def scale_int(self, a: BxPoly, c: int) -> BxPoly:
        p = self.p
        c %= p
        return self.trim([[v * c % p for v in r] for r in a])

    def mul(self, a: BxPoly, b: BxPoly) -> BxPoly:
        """Full product in B[x], no reduction in x"""
        if not a or not b:
            return []
        p, d = self.p, self.d
        if d == 1:
            flat = mul_coeffs([r[0] for r in a], [r[0] for r in b], p)
            return self.trim([[c] for c in flat])
        stride = 2 * d - 1
        pad = [0] * (stride - d)
        width = slot_width(p, min(len(a), len(b)) * d)
        packed_a = pack_slots([v for r in a for v in r + pad], width)
        packed_b = pack_slots([v for r in b for v in r + pad], width)
        rows = len(a) + len(b) - 1
        slots = unpack_slots(packed_a * packed_b, rows * stride, width)
        return self.trim([self.fold(slots[j * stride:(j + 1) * stride]) for j in range(rows)])

    def leading_inverse(self, a: BxPoly) -> Tuple[BxPoly, Optional[Row]]:
        """Trim a and invert its leading coefficient; SplitFound if it is a zerodivisor"""
        a = self.trim(a)
        if not a:
            return a, None
        return a, self.invert_row(a[-1])

    def divmod_by(self, a: BxPoly, b: BxPoly, lead_inv: Row) -> Tuple[BxPoly, BxPoly]:
        """Long division by b whose leading coefficient has inverse lead_inv"""
        nb = len(b)
        r = [list(row) for row in a]
        if len(r) < nb:
            return [], self.trim(r)
        q = [self.zero_row() for _ in range(len(r) - nb + 1)]
        for k in range(len(r) - nb, -1, -1):
            c = self.mul_row(r[k + nb - 1], lead_inv)
            q[k] = c
            if any(c):
                for i in range(nb - 1):
                    r[k + i] = self.sub_row(r[k + i], self.mul_row(c, b[i]))
        return self.trim(q), self.trim(r[:nb - 1])

    def exact_quotient(self, a: BxPoly, monic_b: BxPoly) -> BxPoly:
        q, r = self.divmod_by(a, monic_b, self.one_row())
        if r:
            raise ArithmeticError("inexact division in B[x]")
        return q

    def degree(self, a: BxPoly) -> int:
        return len(self.trim(a)) - 1

    def to_fp_poly(self, a: BxPoly) -> FpPoly:
        """Field-mode view: the x-polynomial with its constant B-coefficients"""
        if self.d != 1:
            raise ValueError("only defined when B is the prime field")
        return FpPoly(self.p, [r[0] for r in a])


def monic_gcd_with(kernel: BxKernel, h: BxPoly, a: BxPoly) -> Tuple[BxPoly, BxPoly, Optional[Row]]:
    """Euclid on (h, a) for monic h, every leading coefficient inverted by query.

    Returns (g, s, u_inv): when the last nonzero remainder is a constant unit
    u, g is [one] and s * a = u (mod h) with u_inv its inverse; otherwise g
    is the monic gcd of degree >= 1 and s, u_inv are unused. Raises
    SplitFound whenever a leading coefficient is a zerodivisor of B.
    """
    r0, inv0 = h, kernel.one_row()
    r1, inv1 = kernel.leading_inverse(a)
    s0, s1 = [], [kernel.one_row()]
    if not r1:
        return kernel.trim([list(row) for row in h]), [], None
    while len(r1) > 1:
        q, r = kernel.divmod_by(r0, r1, inv1)
        r0, inv0 = r1, inv1
        s0, s1 = s1, kernel.sub(s0, kernel.mul(q, s1))
        r1, inv1 = kernel.leading_inverse(r)
        if not r1:
            return kernel.scale(r0, inv0), [], None
    return [kernel.one_row()], s1, inv1
