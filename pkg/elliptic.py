#!/usr/bin/env python3
"""
Short Weierstrass curves y^2 = x^3 + a4*x + a6 over a query ring

Naive point counting and group law over F_p (the test oracle), division
polynomials over B, and point arithmetic in the torsion algebra
R = B[x]/(h) with h a monic divisor of the l-th division polynomial.
Torsion points are kept affine as (X, Y*y) where y is the formal ordinate;
y^2 is rewritten as the cubic eagerly, so everything stays univariate in x.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import gmpy2

from bx_poly import BxKernel, BxPoly, monic_gcd_with
from config import NAIVE_COUNT_LIMIT
from errors import ModulusRefined, SmallCharacteristic, TooLarge
from query_ring import (QuotientRing, RingElem, Split, Zero,
                        is_zero_or_split, qr_invert)

logger = logging.getLogger(__name__)


class Curve:
    """Elliptic scheme y^2 = x^3 + a4*x + a6 over B with unit discriminant"""

    def __init__(self, ring: QuotientRing, a4: RingElem, a6: RingElem):
        self.ring = ring
        self.a4 = a4
        self.a6 = a6
        self.kernel = BxKernel(ring)
        self._psi: Dict[int, BxPoly] = {}
        self._cubic_sq: Optional[BxPoly] = None

    @property
    def p(self) -> int:
        return self.ring.p

    def cubic(self) -> BxPoly:
        """x^3 + a4*x + a6 as a polynomial in x over B"""
        K = self.kernel
        return K.trim([K.row(self.a6), K.row(self.a4), K.zero_row(), K.one_row()])

    def fiber(self, u: int) -> Tuple[int, int]:
        """(a4(u), a6(u)) for a root u of the ring modulus"""
        return self.a4.rep.evaluate(u), self.a6.rep.evaluate(u)

    def __repr__(self):
        return f"Curve(a4={self.a4.rep}, a6={self.a6.rep} over {self.ring})"


@dataclass(frozen=True)
class Degenerate:
    """The discriminant vanishes in every fiber"""
    discriminant: RingElem


def discriminant(a4: RingElem, a6: RingElem) -> RingElem:
    return (a4 * a4 * a4 * 4 + a6 * a6 * 27) * (-16)


def curve_new(ring: QuotientRing, a4: Union[int, RingElem],
              a6: Union[int, RingElem]) -> Union[Curve, Split, Degenerate]:
    """Curve when the discriminant is a unit, Split on a zerodivisor, Degenerate on zero"""
    if ring.p <= 3:
        raise SmallCharacteristic(f"short Weierstrass form needs p > 3, got {ring.p}")
    a4 = ring.element(a4) if isinstance(a4, int) else a4
    a6 = ring.element(a6) if isinstance(a6, int) else a6
    delta = discriminant(a4, a6)
    outcome = qr_invert(delta)
    if isinstance(outcome, Zero):
        return Degenerate(delta)
    if isinstance(outcome, Split):
        logger.info(f"discriminant {delta.rep} splits {ring.f}")
        return outcome
    return Curve(ring, a4, a6)


def curve_at(curve: Curve, u: int) -> Tuple[int, int]:
    """Coefficients of the fiber of curve over t = u, as a test helper"""
    a4, a6 = curve.fiber(u)
    return a4 % curve.p, a6 % curve.p


# ---------- naive arithmetic over F_p ----------

AffinePoint = Optional[Tuple[int, int]]


@lru_cache(maxsize=4)
def _square_flags(p: int) -> bytearray:
    flags = bytearray(p)
    for y in range(1, p // 2 + 1):
        flags[y * y % p] = 1
    return flags


def point_count_naive(p: int, a4: int, a6: int) -> int:
    """#E(F_p) by summing the quadratic character over every x"""
    if p <= 3:
        raise SmallCharacteristic(f"short Weierstrass form needs p > 3, got {p}")
    if p > NAIVE_COUNT_LIMIT:
        raise TooLarge(f"naive count refuses p = {p} > {NAIVE_COUNT_LIMIT}")
    squares = _square_flags(p)
    a4 %= p
    a6 %= p
    count = 1
    for x in range(p):
        v = ((x * x + a4) * x + a6) % p
        if v == 0:
            count += 1
        elif squares[v]:
            count += 2
    return count


def naive_points(p: int, a4: int, a6: int) -> List[AffinePoint]:
    """Every point of E(F_p), the identity (None) first"""
    points: List[AffinePoint] = [None]
    for x in range(p):
        v = (x * x * x + a4 * x + a6) % p
        for y in range(p):
            if y * y % p == v:
                points.append((x, y))
    return points


def naive_neg(p: int, P: AffinePoint) -> AffinePoint:
    return None if P is None else (P[0], (-P[1]) % p)


def naive_add(p: int, a4: int, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + a4) * int(gmpy2.invert(2 * y1, p)) % p
    else:
        lam = (y2 - y1) * int(gmpy2.invert((x2 - x1) % p, p)) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def naive_mul(p: int, a4: int, P: AffinePoint, n: int) -> AffinePoint:
    if n < 0:
        return naive_mul(p, a4, naive_neg(p, P), -n)
    result: AffinePoint = None
    for bit in bin(n)[2:] if n else '':
        result = naive_add(p, a4, result, result)
        if bit == '1':
            result = naive_add(p, a4, result, P)
    return result


# ---------- division polynomials ----------

@dataclass
class DivisionPolynomial:
    """psi_n = poly(x) for odd n and y * poly(x) for even n"""
    n: int
    poly: BxPoly
    has_y: bool
    kernel: BxKernel = field(repr=False)

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def to_fp_poly(self):
        return self.kernel.to_fp_poly(self.poly)


def _psi_rows(curve: Curve, n: int) -> BxPoly:
    cache = curve._psi
    if n in cache:
        return cache[n]
    K = curve.kernel
    mul, sub = K.mul, K.sub
    if not cache:
        a, b = K.row(curve.a4), K.row(curve.a6)
        a2 = K.mul_row(a, a)
        a3 = K.mul_row(a2, a)
        ab = K.mul_row(a, b)
        b2 = K.mul_row(b, b)
        z = K.zero_row()

        def scaled(row, c):
            return [c * v % K.p for v in row]

        cache[0] = []
        cache[1] = K.const(1)
        cache[2] = K.const(2)
        cache[3] = K.trim([scaled(a2, -1), scaled(b, 12), scaled(a, 6), z, K.row(3)])
        psi4 = [K.sub_row(scaled(a3, -1), scaled(b2, 8)), scaled(ab, -4), scaled(a2, -5),
                scaled(b, 20), scaled(a, 5), z, K.one_row()]
        cache[4] = K.scale_int(K.trim(psi4), 4)
        curve._cubic_sq = mul(curve.cubic(), curve.cubic())
        if n in cache:
            return cache[n]
    m = n // 2
    if n % 2:
        left = mul(_psi_rows(curve, m + 2), _cube(K, _psi_rows(curve, m)))
        right = mul(_psi_rows(curve, m - 1), _cube(K, _psi_rows(curve, m + 1)))
        if m % 2 == 0:
            left = mul(curve._cubic_sq, left)
        else:
            right = mul(curve._cubic_sq, right)
        result = sub(left, right)
    else:
        inner = sub(mul(_psi_rows(curve, m + 2), _square(K, _psi_rows(curve, m - 1))),
                    mul(_psi_rows(curve, m - 2), _square(K, _psi_rows(curve, m + 1))))
        result = K.scale_int(mul(_psi_rows(curve, m), inner), int(gmpy2.invert(2, K.p)))
    cache[n] = result
    return result


def _square(K: BxKernel, a: BxPoly) -> BxPoly:
    return K.mul(a, a)


def _cube(K: BxKernel, a: BxPoly) -> BxPoly:
    return K.mul(K.mul(a, a), a)


def division_polynomial(curve: Curve, n: int) -> DivisionPolynomial:
    """psi_n with y^2 eliminated; even n carry one formal factor of y"""
    if n < 0:
        raise ValueError("division polynomial index must be >= 0")
    return DivisionPolynomial(n, _psi_rows(curve, n), n % 2 == 0, curve.kernel)


# ---------- torsion algebra ----------

@dataclass(frozen=True)
class TorsionPoint:
    """(X, Y*y) with X, Y in the torsion algebra, or the identity when X is None"""
    X: Optional[BxPoly] = None
    Y: Optional[BxPoly] = None

    @property
    def is_identity(self) -> bool:
        return self.X is None


IDENTITY = TorsionPoint()


def _series_inverse(K: BxKernel, s: BxPoly, length: int) -> BxPoly:
    """Inverse of a power series in x with constant term 1, mod x^length"""
    g = [K.one_row()]
    prec = 1
    two = K.row(2)
    while prec < length:
        prec = min(2 * prec, length)
        e = K.neg(K.mul(s[:prec], g)[:prec]) or [K.zero_row()]
        e[0] = K.add_row(e[0], two)
        g = K.mul(g, e)[:prec]
    return g


class TorsionAlgebra:
    """R = B[x]/(h) for a monic h dividing psi_ell (the cubic when ell = 2)"""

    def __init__(self, curve: Curve, ell: int, modulus: Optional[BxPoly] = None):
        self.curve = curve
        self.ell = ell
        self.kernel = K = curve.kernel
        if modulus is None:
            modulus = curve.cubic() if ell == 2 else self._monic_psi(curve, ell)
        modulus = K.trim(modulus)
        if len(modulus) < 2 or modulus[-1] != K.one_row():
            raise ValueError("torsion modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.n = len(modulus) - 1
        self._inv_rev = _series_inverse(K, modulus[::-1], self.n)
        self.cubic = self.reduce(curve.cubic())
        self.a4 = K.const(curve.a4)
        self._frobenius_y: Optional[BxPoly] = None

    @staticmethod
    def _monic_psi(curve: Curve, ell: int) -> BxPoly:
        K = curve.kernel
        psi = division_polynomial(curve, ell).poly
        expected = K.row(ell)
        if psi[-1] != expected:
            raise ArithmeticError(f"psi_{ell} has leading coefficient {psi[-1]}, expected {ell}")
        return K.scale_int(psi, int(gmpy2.invert(ell, curve.p)))

    # ---------- ring operations ----------

    def reduce(self, a: BxPoly) -> BxPoly:
        K, n = self.kernel, self.n
        a = K.trim(a)
        if len(a) <= n:
            return a
        if len(a) > 2 * n:
            return K.divmod_by(a, self.modulus, K.one_row())[1]
        m = len(a) - n
        top = a[::-1][:m]
        q_rev = K.mul(top, self._inv_rev[:m])[:m]
        q_rev = q_rev + [K.zero_row()] * (m - len(q_rev))
        low = K.mul(q_rev[::-1], self.modulus)[:n]
        return K.sub(a[:n], low)

    def mul(self, a: BxPoly, b: BxPoly) -> BxPoly:
        return self.reduce(self.kernel.mul(a, b))

    def pow(self, a: BxPoly, e: int) -> BxPoly:
        result = self.one()
        a = self.reduce(a)
        for bit in bin(e)[2:] if e else '':
            result = self.mul(result, result)
            if bit == '1':
                result = self.mul(result, a)
        return result

    def one(self) -> BxPoly:
        return self.kernel.const(1)

    def x(self) -> BxPoly:
        return self.reduce(self.kernel.x())

    def is_zero(self, a: BxPoly) -> bool:
        """Zero in R; queries every nonzero B-coefficient (may raise SplitFound)"""
        K = self.kernel
        if K.d == 1:
            return not K.trim(a)
        for row in a:
            if any(row) and not is_zero_or_split(K.elem(row)):
                return False
        return True

    def inverse(self, a: BxPoly) -> BxPoly:
        """Inverse in R; ModulusRefined when a shares a factor with the modulus"""
        K = self.kernel
        g, s, unit_inv = monic_gcd_with(K, self.modulus, self.reduce(a))
        if unit_inv is None:
            if len(g) == len(self.modulus):
                raise ZeroDivisionError("inverting zero in the torsion algebra")
            cofactor = K.exact_quotient(self.modulus, g)
            logger.info(f"ell={self.ell}: modulus degree {self.n} refined to {len(cofactor) - 1}")
            raise ModulusRefined(cofactor)
        return self.reduce(K.scale(s, unit_inv))

    def modulus_gcd(self, a: BxPoly) -> BxPoly:
        """Monic gcd of a with the modulus ([1] when coprime)"""
        g, _, _ = monic_gcd_with(self.kernel, self.modulus, self.reduce(a))
        return g

    @property
    def frobenius_y(self) -> BxPoly:
        """cubic^((p-1)/2), so that y^p = y * frobenius_y in R"""
        if self._frobenius_y is None:
            self._frobenius_y = self.pow(self.cubic, (self.curve.p - 1) // 2)
        return self._frobenius_y

    def generic_point(self) -> TorsionPoint:
        return TorsionPoint(self.x(), self.one())


# ---------- torsion group law ----------

def torsion_neg(A: TorsionAlgebra, P: TorsionPoint) -> TorsionPoint:
    if P.is_identity:
        return P
    return TorsionPoint(P.X, A.kernel.neg(P.Y))


def _chord(A: TorsionAlgebra, lam: BxPoly, X1: BxPoly, X2: BxPoly, Y1: BxPoly) -> TorsionPoint:
    K = A.kernel
    X3 = K.sub(K.sub(A.mul(A.mul(lam, lam), A.cubic), X1), X2)
    Y3 = K.sub(A.mul(lam, K.sub(X1, X3)), Y1)
    return TorsionPoint(X3, Y3)


def torsion_double(A: TorsionAlgebra, P: TorsionPoint) -> TorsionPoint:
    if P.is_identity or A.is_zero(P.Y):
        return IDENTITY
    K = A.kernel
    num = K.add(K.scale_int(A.mul(P.X, P.X), 3), A.a4)
    den = K.scale_int(A.mul(P.Y, A.cubic), 2)
    lam = A.mul(num, A.inverse(den))
    return _chord(A, lam, P.X, P.X, P.Y)


def torsion_add(A: TorsionAlgebra, P: TorsionPoint, Q: TorsionPoint) -> TorsionPoint:
    """Chord-tangent sum; raises SplitFound or ModulusRefined on zerodivisors"""
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    K = A.kernel
    dx = K.sub(Q.X, P.X)
    dy = K.sub(Q.Y, P.Y)
    if A.is_zero(dx):
        if A.is_zero(dy):
            return torsion_double(A, P)
        if A.is_zero(K.add(Q.Y, P.Y)):
            return IDENTITY
        # Q = P at some torsion points and -P at the rest
        A.inverse(dy)
        raise ArithmeticError("torsion points agree in X but not up to sign")
    lam = A.mul(dy, A.inverse(dx))
    return _chord(A, lam, P.X, Q.X, P.Y)


def torsion_scalar_mul(A: TorsionAlgebra, P: TorsionPoint, n: int) -> TorsionPoint:
    """n*P by double-and-add"""
    if n < 0:
        return torsion_scalar_mul(A, torsion_neg(A, P), -n)
    result = IDENTITY
    for bit in bin(n)[2:] if n else '':
        result = torsion_double(A, result)
        if bit == '1':
            result = torsion_add(A, result, P)
    return result


def torsion_frobenius(A: TorsionAlgebra, P: TorsionPoint) -> TorsionPoint:
    """(X^p, Y^p * y^p) with y^p = y * cubic^((p-1)/2)"""
    if P.is_identity:
        return P
    p = A.curve.p
    return TorsionPoint(A.pow(P.X, p), A.mul(A.pow(P.Y, p), A.frobenius_y))


def points_equal(A: TorsionAlgebra, P: TorsionPoint, Q: TorsionPoint) -> bool:
    """Compare X first, then settle the sign through Y"""
    if P.is_identity or Q.is_identity:
        return P.is_identity and Q.is_identity
    K = A.kernel
    if not A.is_zero(K.sub(P.X, Q.X)):
        return False
    return A.is_zero(K.sub(P.Y, Q.Y))
