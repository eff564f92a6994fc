#!/usr/bin/env python3
"""
The quotient ring B = F_p[t]/(f) and its query discipline

Every zero test and inversion in B either resolves the same way in every
fiber t = r (r a root of f) or hands back a proper factor of f. Callers
above this module see only QueryOutcome values or the SplitFound signal;
they never take gcds with f themselves.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from errors import InvalidWitness, MixedRings, NotADivisor, SplitFound
from fp_poly import FpPoly, poly_gcd, poly_xgcd

logger = logging.getLogger(__name__)


class QuotientRing:
    """B = F_p[t]/(f) for monic f of degree >= 1"""

    def __init__(self, f: FpPoly):
        if f.is_zero() or f.degree < 1 or not f.is_monic():
            raise ValueError(f"ring modulus must be monic of degree >= 1, got {f}")
        self.p = f.p
        self.f = f
        self.degree = len(f.coeffs) - 1
        # B is F_p itself; queries can never split
        self.field_mode = self.degree == 1

    @classmethod
    def prime_field(cls, p: int) -> 'QuotientRing':
        """F_p presented as F_p[t]/(t)"""
        return cls(FpPoly.gen(p))

    def element(self, value: Union[int, FpPoly]) -> 'RingElem':
        if isinstance(value, int):
            value = FpPoly.constant(self.p, value)
        return RingElem(self, value % self.f)

    def zero(self) -> 'RingElem':
        return RingElem(self, FpPoly.zero(self.p))

    def one(self) -> 'RingElem':
        return self.element(1)

    def gen(self) -> 'RingElem':
        """The class of t"""
        return self.element(FpPoly.gen(self.p))

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"QuotientRing(p={self.p}, f={self.f})"


class RingElem:
    """Element of B held as its canonical remainder modulo f"""

    __slots__ = ('owner', 'rep')

    def __init__(self, owner: QuotientRing, rep: FpPoly):
        self.owner = owner
        self.rep = rep

    def _peer(self, other) -> 'RingElem':
        if isinstance(other, int):
            return self.owner.element(other)
        if other.owner is not self.owner and other.owner != self.owner:
            raise MixedRings(f"{self.owner} vs {other.owner}")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return RingElem(self.owner, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._peer(other)
        return RingElem(self.owner, self.rep - other.rep)

    def __rsub__(self, other):
        return self._peer(other) - self

    def __neg__(self):
        return RingElem(self.owner, -self.rep)

    def __mul__(self, other):
        other = self._peer(other)
        return RingElem(self.owner, (self.rep * other.rep) % self.owner.f)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self.owner.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        """Representation equality; algorithms must query with qr_is_zero instead"""
        if isinstance(other, int):
            other = self.owner.element(other)
        return isinstance(other, RingElem) and self.owner == other.owner and self.rep == other.rep

    def __hash__(self):
        return hash((self.owner, self.rep))

    def __repr__(self):
        return f"RingElem({self.rep} mod {self.owner.f})"


@dataclass(frozen=True)
class Witness:
    """A proper monic factor of the ring modulus f"""
    factor: FpPoly
    f: FpPoly

    def __post_init__(self):
        factor = self.factor.monic()
        object.__setattr__(self, 'factor', factor)
        if factor.is_zero() or not 0 < factor.degree < self.f.degree:
            raise InvalidWitness(f"{factor} is not a proper factor of {self.f}")
        if not (self.f % factor).is_zero():
            raise InvalidWitness(f"{factor} does not divide {self.f}")

    @property
    def cofactor(self) -> FpPoly:
        return (self.f // self.factor).monic()

    def parts(self) -> Tuple[FpPoly, FpPoly]:
        """(factor, cofactor) with the lexicographically smaller coefficient sequence first"""
        a, b = self.factor, self.cofactor
        return (a, b) if a.coeffs <= b.coeffs else (b, a)

    def __str__(self):
        return f"Witness({self.factor} | {self.f})"


# ---------- query outcomes ----------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class NonzeroUnit:
    inverse: RingElem


@dataclass(frozen=True)
class NonzeroEverywhere:
    pass


@dataclass(frozen=True)
class Split:
    witness: Witness


QueryOutcome = Union[Zero, NonzeroUnit, NonzeroEverywhere, Split]


def qr_arith(op: str, x: RingElem, y: RingElem) -> RingElem:
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if op == 'neg':
        x._peer(y)
        return -x
    raise ValueError(f"unknown ring operation: {op}")


def _split(ring: QuotientRing, g: FpPoly) -> Split:
    witness = Witness(g, ring.f)
    logger.info(f"query split {ring.f} with factor {witness.factor}")
    return Split(witness)


def qr_is_zero(x: RingElem) -> QueryOutcome:
    """Zero, nonzero in every fiber, or a split of f"""
    if x.rep.is_zero():
        return Zero()
    g = poly_gcd(x.rep, x.owner.f)
    if g.is_one():
        return NonzeroEverywhere()
    return _split(x.owner, g)


def qr_invert(x: RingElem) -> QueryOutcome:
    """Zero, the inverse of a unit, or a split of f"""
    ring = x.owner
    if x.rep.is_zero():
        return Zero()
    d, s, _ = poly_xgcd(x.rep, ring.f)
    if d.is_one():
        return NonzeroUnit(RingElem(ring, s % ring.f))
    return _split(ring, d)


def qr_rebase(x: RingElem, new_f: FpPoly) -> RingElem:
    """Image of x in F_p[t]/(new_f) for a divisor new_f of f"""
    new_f = new_f.monic()
    if new_f.is_zero() or not (x.owner.f % new_f).is_zero():
        raise NotADivisor(f"{new_f} does not divide {x.owner.f}")
    ring = x.owner if new_f == x.owner.f else QuotientRing(new_f)
    return ring.element(x.rep)


def invert_or_split(x: RingElem) -> Optional[RingElem]:
    """Inverse of x, None when x is zero; raises SplitFound on a zerodivisor"""
    outcome = qr_invert(x)
    if isinstance(outcome, Split):
        raise SplitFound(outcome.witness)
    if isinstance(outcome, Zero):
        return None
    return outcome.inverse


def is_zero_or_split(x: RingElem) -> bool:
    outcome = qr_is_zero(x)
    if isinstance(outcome, Split):
        raise SplitFound(outcome.witness)
    return isinstance(outcome, Zero)
