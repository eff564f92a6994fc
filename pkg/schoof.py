#!/usr/bin/env python3
"""
Schoof point counting over a query ring

Over F_p this counts points. Over B = F_p[t]/(f) the same control flow
either finishes with a trace shared by every fiber or stops at the first
query that tells two fibers apart, returning the factor of f it exposed.
"""

import logging
import time
from dataclasses import dataclass
from typing import Tuple, Union

from elliptic import (IDENTITY, Curve, Degenerate, TorsionAlgebra, curve_new,
                      points_equal, torsion_add, torsion_frobenius,
                      torsion_scalar_mul)
from errors import (DegenerateCurve, ModulusRefined, NoResidueFound,
                    SmallCharacteristic, SplitFound)
from numtheory import ResidueSystem, crt_signed, hasse_window, select_crt_primes
from query_ring import QuotientRing, Split, Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceResidue:
    ell: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ell:
            raise ValueError(f"residue {self.value} out of range mod {self.ell}")


@dataclass(frozen=True)
class SchoofResult:
    """Trace of Frobenius a and #E(F_p) = p + 1 - a"""
    p: int
    trace: int
    count: int
    residues: Tuple[TraceResidue, ...] = ()

    def __post_init__(self):
        if self.count != self.p + 1 - self.trace:
            raise ValueError("count and trace disagree")
        if abs(self.trace) > hasse_window(self.p):
            raise ValueError(f"trace {self.trace} violates the Hasse bound for p = {self.p}")

    @property
    def char_poly(self) -> Tuple[int, int, int]:
        """Coefficients (1, -a, p) of T^2 - a*T + p, highest degree first"""
        return (1, -self.trace, self.p)


@dataclass(frozen=True)
class SharedTrace:
    """Every fiber of the curve over B has this trace"""
    result: SchoofResult


@dataclass(frozen=True)
class SchoofSplit:
    """A query separated fibers while computing the trace modulo ell"""
    witness: Witness
    ell: int


# ---------- per-ell residues ----------

def _trace_mod_2(curve: Curve) -> TraceResidue:
    """a is even exactly when the cubic has a root: gcd(x^p - x, cubic) != 1"""
    A = TorsionAlgebra(curve, 2)
    K = A.kernel
    frob_x = K.sub(A.pow(A.x(), curve.p), A.x())
    if A.is_zero(frob_x):
        return TraceResidue(2, 0)
    g = A.modulus_gcd(frob_x)
    return TraceResidue(2, 0 if len(g) > 1 else 1)


def _frobenius_residue(A: TorsionAlgebra) -> int:
    """The a in [0, ell) with pi^2(P) + (p mod ell)*P = a*pi(P) on the generic point"""
    ell = A.ell
    P = A.generic_point()
    pi1 = torsion_frobenius(A, P)
    pi2 = torsion_frobenius(A, pi1)
    lhs = torsion_add(A, pi2, torsion_scalar_mul(A, P, A.curve.p % ell))
    rhs = IDENTITY
    for a in range(ell):
        if points_equal(A, lhs, rhs):
            return a
        rhs = torsion_add(A, rhs, pi1)
    raise NoResidueFound(f"no trace residue mod {ell} for {A.curve}")


def _trace_mod_ell(curve: Curve, ell: int) -> TraceResidue:
    modulus = None
    max_restarts = (ell * ell - 1) // 2
    for restart in range(max_restarts + 1):
        A = TorsionAlgebra(curve, ell, modulus)
        try:
            return TraceResidue(ell, _frobenius_residue(A))
        except ModulusRefined as refined:
            modulus = refined.modulus
            logger.info(f"ell={ell}: restart {restart + 1} with modulus degree {len(modulus) - 1}")
    raise NoResidueFound(f"ell={ell}: more than {max_restarts} modulus refinements")


def trace_mod_2(curve: Curve) -> Union[TraceResidue, Split]:
    try:
        return _trace_mod_2(curve)
    except SplitFound as split:
        return Split(split.witness)


def trace_mod_ell(curve: Curve, ell: int) -> Union[TraceResidue, Split]:
    if ell == 2:
        return trace_mod_2(curve)
    if ell == curve.p or ell % 2 == 0:
        raise ValueError(f"ell must be an odd prime different from p, got {ell}")
    try:
        return _trace_mod_ell(curve, ell)
    except SplitFound as split:
        return Split(split.witness)


def trace_mod(curve: Curve, ell: int) -> Union[TraceResidue, Split]:
    """a mod ell for any prime ell != p"""
    return trace_mod_2(curve) if ell == 2 else trace_mod_ell(curve, ell)


# ---------- full runs ----------

def _run(curve: Curve) -> Union[SharedTrace, SchoofSplit]:
    p = curve.p
    residues = []
    for ell in select_crt_primes(p):
        started = time.perf_counter()
        try:
            residue = _trace_mod_2(curve) if ell == 2 else _trace_mod_ell(curve, ell)
        except SplitFound as split:
            logger.info(f"ell={ell}: split {split.witness.factor} after {time.perf_counter() - started:.3f}s")
            return SchoofSplit(split.witness, ell)
        logger.info(f"ell={ell}: a mod {ell} = {residue.value} in {time.perf_counter() - started:.3f}s")
        residues.append(residue)
    rs = ResidueSystem.of((r.value, r.ell) for r in residues)
    trace = crt_signed(rs, hasse_window(p))
    return SharedTrace(SchoofResult(p, trace, p + 1 - trace, tuple(residues)))


def schoof_count(p: int, a4: int, a6: int) -> SchoofResult:
    """#E(F_p) for y^2 = x^3 + a4*x + a6"""
    if p <= 3:
        raise SmallCharacteristic(f"short Weierstrass form needs p > 3, got {p}")
    curve = curve_new(QuotientRing.prime_field(p), a4 % p, a6 % p)
    if isinstance(curve, Degenerate):
        raise DegenerateCurve(f"y^2 = x^3 + {a4 % p}x + {a6 % p} is singular over F_{p}")
    outcome = _run(curve)
    if not isinstance(outcome, SharedTrace):
        raise AssertionError("a query split over a prime field")
    return outcome.result


def schoof_over_B(curve: Curve) -> Union[SharedTrace, SchoofSplit]:
    """Run Schoof on a curve over B; SharedTrace only if no query separated fibers"""
    return _run(curve)
