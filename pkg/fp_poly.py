#!/usr/bin/env python3
"""
Dense univariate polynomials over F_p
Coefficients are stored lowest degree first with no trailing zeros.
"""

import enum
import logging
from typing import List, Sequence, Tuple, Union

import gmpy2

from config import KRONECKER_CUTOFF
from errors import DivisionByZeroPoly, PolynomialParseError

logger = logging.getLogger(__name__)


class ZeroDegree(enum.Enum):
    """Degree of the zero polynomial; orders below every integer"""
    NEG_INFINITY = '-inf'

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


# ---------- multiplication kernels ----------

def pack_slots(values: Sequence[int], width: int) -> int:
    """Pack nonnegative integers into one big integer, `width` bytes per slot"""
    return int.from_bytes(b''.join(v.to_bytes(width, 'little') for v in values), 'little')


def unpack_slots(value: int, count: int, width: int) -> List[int]:
    data = value.to_bytes(count * width, 'little')
    return [int.from_bytes(data[k:k + width], 'little') for k in range(0, count * width, width)]


def slot_width(p: int, terms: int) -> int:
    """Bytes needed for a slot holding a sum of `terms` products of residues"""
    bits = 2 * (p - 1).bit_length() + terms.bit_length() + 1
    return (bits + 7) // 8


def mul_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Product of two coefficient lists, reduced mod p (not trimmed).

    Short inputs use the schoolbook loop; long ones go through Kronecker
    substitution so the work lands in CPython's big-integer multiply.
    """
    if not a or not b:
        return []
    if min(len(a), len(b)) < KRONECKER_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return [c % p for c in out]
    width = slot_width(p, min(len(a), len(b)))
    product = pack_slots(a, width) * pack_slots(b, width)
    return [c % p for c in unpack_slots(product, len(a) + len(b) - 1, width)]


def _trim(coeffs: List[int]) -> Tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class FpPoly:
    """Immutable polynomial over F_p"""

    __slots__ = ('p', 'coeffs')

    def __init__(self, p: int, coeffs: Sequence[int] = ()):
        self.p = p
        self.coeffs = _trim([int(c) % p for c in coeffs])

    @classmethod
    def _reduced(cls, p: int, coeffs: List[int]) -> 'FpPoly':
        """Build from coefficients already in [0, p)"""
        poly = cls.__new__(cls)
        poly.p = p
        poly.coeffs = _trim(coeffs)
        return poly

    # ---------- constructors ----------

    @classmethod
    def zero(cls, p: int) -> 'FpPoly':
        return cls(p)

    @classmethod
    def one(cls, p: int) -> 'FpPoly':
        return cls(p, (1,))

    @classmethod
    def constant(cls, p: int, c: int) -> 'FpPoly':
        return cls(p, (c,))

    @classmethod
    def monomial(cls, p: int, n: int, c: int = 1) -> 'FpPoly':
        return cls(p, [0] * n + [c])

    @classmethod
    def gen(cls, p: int) -> 'FpPoly':
        """The variable t"""
        return cls(p, (0, 1))

    @classmethod
    def from_roots(cls, p: int, roots: Sequence[int]) -> 'FpPoly':
        result = cls.one(p)
        for r in roots:
            result = result * cls(p, (-r, 1))
        return result

    @classmethod
    def from_text(cls, p: int, text: str) -> 'FpPoly':
        """Parse the canonical form, e.g. "1,3,1" for t^2+3t+1"""
        parts = [s.strip() for s in text.split(',')]
        if not parts or any(not (s.isascii() and s.isdecimal()) for s in parts):
            raise PolynomialParseError(f"malformed coefficient list: {text!r}")
        return cls(p, [int(s) for s in parts])

    def to_text(self) -> str:
        return ','.join(str(c) for c in self.coeffs) if self.coeffs else '0'

    # ---------- inspection ----------

    @property
    def degree(self) -> Union[int, ZeroDegree]:
        return len(self.coeffs) - 1 if self.coeffs else ZeroDegree.NEG_INFINITY

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self) -> Tuple:
        """(degree, coefficients) ordering used for reported factor lists"""
        return (len(self.coeffs), self.coeffs)

    # ---------- arithmetic ----------

    def _check(self, other: 'FpPoly'):
        if other.p != self.p:
            raise ValueError(f"moduli differ: {self.p} != {other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            other = FpPoly.constant(self.p, other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return FpPoly._reduced(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return FpPoly._reduced(self.p, [(-c) % self.p for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = FpPoly.constant(self.p, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.p
            return FpPoly._reduced(self.p, [x * c % self.p for x in self.coeffs])
        self._check(other)
        return FpPoly._reduced(self.p, mul_coeffs(self.coeffs, other.coeffs, self.p))

    __rmul__ = __mul__

    def __divmod__(self, other: 'FpPoly') -> Tuple['FpPoly', 'FpPoly']:
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        p = self.p
        n = len(other.coeffs)
        if len(self.coeffs) < n:
            return FpPoly.zero(p), self
        h = other.coeffs
        inv = int(gmpy2.invert(h[-1], p))
        r = list(self.coeffs)
        q = [0] * (len(r) - n + 1)
        for k in range(len(r) - n, -1, -1):
            c = r[k + n - 1] * inv % p
            q[k] = c
            if c:
                for i in range(n - 1):
                    r[k + i] = (r[k + i] - c * h[i]) % p
        return FpPoly._reduced(p, q), FpPoly._reduced(p, r[:n - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == FpPoly.constant(self.p, other).coeffs
        return isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly({self.p}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = 't' if i == 1 else f't^{i}'
                terms.append(mono if c == 1 else f'{c}*{mono}')
        return ' + '.join(terms)

    # ---------- derived operations ----------

    def monic(self) -> 'FpPoly':
        if not self.coeffs or self.leading == 1:
            return self
        return self * int(gmpy2.invert(self.leading, self.p))

    def evaluate(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def derivative(self) -> 'FpPoly':
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def pth_root(self) -> 'FpPoly':
        """h with h(t)^p = self, assuming self(t) = h(t^p); a^p = a on F_p"""
        p = self.p
        if any(c for i, c in enumerate(self.coeffs) if i % p):
            raise ValueError("polynomial is not a p-th power")
        return FpPoly._reduced(p, list(self.coeffs[::p]))

    def shift(self, c: int) -> 'FpPoly':
        return poly_shift(self, c)


def poly_arith(op: str, g: FpPoly, h: FpPoly):
    """Dispatch add/sub/mul/divmod by name"""
    if op == 'add':
        return g + h
    if op == 'sub':
        return g - h
    if op == 'mul':
        return g * h
    if op == 'divmod':
        return divmod(g, h)
    raise ValueError(f"unknown polynomial operation: {op}")


def poly_gcd(g: FpPoly, h: FpPoly) -> FpPoly:
    """Monic greatest common divisor"""
    while not h.is_zero():
        g, h = h, g % h
    return g.monic()


def poly_xgcd(g: FpPoly, h: FpPoly) -> Tuple[FpPoly, FpPoly, FpPoly]:
    """(d, s, u) with s*g + u*h = d and d the monic gcd"""
    p = g.p
    r0, r1 = g, h
    s0, s1 = FpPoly.one(p), FpPoly.zero(p)
    u0, u1 = FpPoly.zero(p), FpPoly.one(p)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if r0.is_zero():
        return r0, s0, u0
    inv = int(gmpy2.invert(r0.leading, p))
    return r0 * inv, s0 * inv, u0 * inv


def powmod_poly(base: FpPoly, e: int, modulus: FpPoly) -> FpPoly:
    """base^e mod modulus by left-to-right square and multiply"""
    result = FpPoly.one(base.p) % modulus
    base = base % modulus
    for bit in bin(e)[2:] if e else '':
        result = (result * result) % modulus
        if bit == '1':
            result = (result * base) % modulus
    return result


def poly_shift(g: FpPoly, c: int) -> FpPoly:
    """g(t + c) by Horner's rule"""
    c %= g.p
    if not c:
        return g
    step = FpPoly(g.p, (c, 1))
    result = FpPoly.zero(g.p)
    for coeff in reversed(g.coeffs):
        result = result * step + coeff
    return result


def squarefree_decomposition(g: FpPoly) -> List[Tuple[FpPoly, int]]:
    """Pairwise coprime squarefree factors with multiplicities, product = g.

    Yun-style gcd chain; the part left over once the derivative stops
    helping is a polynomial in t^p and is handled through its p-th root.
    Output is ordered by increasing multiplicity.
    """
    if g.is_zero():
        raise ValueError("squarefree decomposition of zero")
    g = g.monic()
    p = g.p
    result: List[Tuple[FpPoly, int]] = []
    c = poly_gcd(g, g.derivative())
    w = g // c
    i = 1
    while not w.is_one() and not w.is_zero():
        y = poly_gcd(w, c)
        z = w // y
        if z.degree != ZeroDegree.NEG_INFINITY and z.degree > 0:
            result.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree != ZeroDegree.NEG_INFINITY and c.degree > 0:
        for factor, mult in squarefree_decomposition(c.pth_root()):
            result.append((factor, mult * p))
    result.sort(key=lambda fm: (fm[1], fm[0].sort_key()))
    return result
