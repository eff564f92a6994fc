#!/usr/bin/env python3
"""
Factoring driver
Squarefree reduction, Berlekamp reduction to root finding, and root finding
by running Schoof over F_p[t]/(g(t+c)) for a deterministic schedule of
curves and shifts until some query separates two roots.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from berlekamp import berlekamp_basis, minimal_polynomial, split_by_element
from config import (BASE_CURVE_RECIPES, EXHAUSTIVE_CAP, MIN_ATTEMPTS,
                    RECIPE_TABLE_SIZE, SMALL_P_THRESHOLD)
from elliptic import Degenerate, curve_new
from errors import AttemptBudgetExhausted
from fp_poly import FpPoly, poly_shift, squarefree_decomposition
from numtheory import require_prime
from query_ring import QuotientRing, RingElem, Split
from schoof import SchoofSplit, schoof_over_B

logger = logging.getLogger(__name__)

LinearSpec = Tuple[int, int]


@dataclass(frozen=True)
class CurveRecipe:
    """(a4, a6) as c0 + c1*t, read in whatever ring t lives in"""
    index: int
    a4_spec: LinearSpec
    a6_spec: LinearSpec

    def in_ring(self, ring: QuotientRing) -> Tuple[RingElem, RingElem]:
        return self._element(ring, self.a4_spec), self._element(ring, self.a6_spec)

    @staticmethod
    def _element(ring: QuotientRing, spec: LinearSpec) -> RingElem:
        c0, c1 = spec
        return ring.element(FpPoly(ring.p, (c0, c1)))

    def __str__(self):
        return f"#{self.index} (a4={_linear_text(self.a4_spec)}, a6={_linear_text(self.a6_spec)})"


def _linear_text(spec: LinearSpec) -> str:
    c0, c1 = spec
    if not c1:
        return str(c0)
    head = 't' if c1 == 1 else f'{c1}t'
    return f'{head}+{c0}' if c0 else head


def recipe_table() -> List[CurveRecipe]:
    """The fixed recipe order; entries past the base list follow (t+j+2, (j+2)t+1)"""
    specs = list(BASE_CURVE_RECIPES)
    j = 0
    while len(specs) < RECIPE_TABLE_SIZE:
        specs.append(((j + 2, 1), (1, j + 2)))
        j += 1
    return [CurveRecipe(i, a4, a6) for i, (a4, a6) in enumerate(specs[:RECIPE_TABLE_SIZE])]


_RECIPES = recipe_table()


def curve_schedule(attempt: int) -> Tuple[CurveRecipe, int]:
    """Attempt k uses recipe k mod R with shift k // R"""
    if attempt < 0:
        raise ValueError("attempt index must be >= 0")
    shift, recipe_index = divmod(attempt, len(_RECIPES))
    return _RECIPES[recipe_index], shift


def attempt_budget(p: int) -> int:
    """max(MIN_ATTEMPTS, ceil(log2(p)^2)) curve/shift attempts per root-finding call"""
    return max(MIN_ATTEMPTS, math.ceil(math.log2(p) ** 2))


@dataclass(frozen=True)
class AttemptRecord:
    """One scheduled curve/shift trial at a given recursion depth"""
    depth: int
    attempt: int
    recipe: int
    shift: int
    outcome: str
    ell: Optional[int] = None

    def to_text(self) -> str:
        ell = '-' if self.ell is None else str(self.ell)
        return (f"depth={self.depth} attempt={self.attempt} recipe={self.recipe} "
                f"shift={self.shift} outcome={self.outcome} ell={ell}")


@dataclass(frozen=True)
class FactorizationResult:
    """unit * prod(g^e for g, e in factors) equals the input polynomial"""
    p: int
    unit: int
    factors: Tuple[Tuple[FpPoly, int], ...]
    trace_log: Tuple[AttemptRecord, ...] = field(default=(), compare=False)

    def product(self) -> FpPoly:
        result = FpPoly.constant(self.p, self.unit)
        for g, e in self.factors:
            for _ in range(e):
                result = result * g
        return result


class CurveFactorizer:
    """Deterministic factoring over F_p driven by elliptic-curve queries"""

    def __init__(self, p: int, max_attempts: Optional[int] = None,
                 small_p_threshold: int = SMALL_P_THRESHOLD,
                 exhaustive_cap: int = EXHAUSTIVE_CAP):
        self.p = require_prime(p)
        self.max_attempts = max_attempts if max_attempts is not None else attempt_budget(p)
        self.small_p_threshold = small_p_threshold
        self.exhaustive_cap = exhaustive_cap
        self.trace_log: List[AttemptRecord] = []

    # ---------- root finding ----------

    def scan_roots(self, g: FpPoly) -> List[int]:
        """Every root of g by evaluation at each element of F_p"""
        roots = []
        for u in range(self.p):
            if g.evaluate(u) == 0:
                roots.append(u)
                if len(roots) == g.degree:
                    break
        return roots

    def split_roots(self, g: FpPoly, depth: int = 0) -> List[int]:
        """Sorted roots of a monic squarefree g that splits completely over F_p"""
        g = g.monic()
        if g.degree == 1:
            roots = [(-g[0]) % self.p]
        elif self.p < self.small_p_threshold or self.p <= 3:
            roots = self.scan_roots(g)
        else:
            roots = self._roots_by_curves(g, depth)
        roots.sort()
        bad = [r for r in roots if g.evaluate(r)]
        assert not bad and len(roots) == g.degree, f"root finding failed for {g}: {roots}"
        return roots

    def _record(self, depth, attempt, recipe, shift, outcome, ell=None):
        record = AttemptRecord(depth, attempt, recipe.index, shift, outcome, ell)
        self.trace_log.append(record)
        logger.debug(f"attempt {record.to_text()}")

    def _roots_by_curves(self, g: FpPoly, depth: int) -> List[int]:
        p = self.p
        for attempt in range(self.max_attempts):
            recipe, shift = curve_schedule(attempt)
            shifted = poly_shift(g, shift)
            ring = QuotientRing(shifted)
            a4, a6 = recipe.in_ring(ring)
            curve = curve_new(ring, a4, a6)
            if isinstance(curve, Degenerate):
                self._record(depth, attempt, recipe, shift, 'degenerate')
                continue
            if isinstance(curve, Split):
                # a proper gcd with the discriminant is already a factor
                witness, ell, outcome = curve.witness, None, 'discriminant-split'
            else:
                result = schoof_over_B(curve)
                if not isinstance(result, SchoofSplit):
                    self._record(depth, attempt, recipe, shift, 'shared-trace')
                    continue
                witness, ell, outcome = result.witness, result.ell, 'split'
            self._record(depth, attempt, recipe, shift, outcome, ell)
            logger.info(f"{g} split by curve {recipe} shift {shift}: {witness.factor}")
            roots = []
            for part in witness.parts():
                roots.extend((r + shift) % p for r in self.split_roots(part, depth + 1))
            return roots
        if p < self.exhaustive_cap:
            logger.warning(f"{self.max_attempts} attempts did not split {g}; scanning F_{p}")
            self.trace_log.append(AttemptRecord(depth, self.max_attempts, -1, 0, 'fallback-scan'))
            return self.scan_roots(g)
        raise AttemptBudgetExhausted(
            f"{self.max_attempts} curve/shift attempts did not split {g} over F_{p}",
            self.trace_log)

    # ---------- factoring ----------

    def _split_squarefree(self, f: FpPoly, depth: int) -> List[FpPoly]:
        if f.degree == 1:
            return [f]
        basis = berlekamp_basis(f)
        if basis.dimension == 1:
            return [f]
        ring = QuotientRing(f)
        beta = next(ring.element(b) for b in basis.elements() if not b.is_zero() and b.degree > 0)
        m = minimal_polynomial(beta, f)
        roots = self.split_roots(m, depth)
        pieces = split_by_element(f, beta, roots)
        logger.debug(f"{f} reduced to {len(pieces)} pieces through {m}")
        result = []
        for piece in pieces:
            result.extend(self._split_squarefree(piece, depth + 1))
        return result

    def factor(self, f: FpPoly) -> FactorizationResult:
        if f.p != self.p:
            raise ValueError(f"polynomial is over F_{f.p}, factorizer over F_{self.p}")
        if f.is_zero():
            raise ValueError("cannot factor the zero polynomial")
        self.trace_log = []
        unit = f.leading
        monic = f.monic()
        factors = []
        if monic.degree > 0:
            for part, multiplicity in squarefree_decomposition(monic):
                factors.extend((g, multiplicity) for g in self._split_squarefree(part, 0))
        factors.sort(key=lambda fm: (fm[0].sort_key(), fm[1]))
        result = FactorizationResult(self.p, unit, tuple(factors), tuple(self.trace_log))
        assert result.product() == f, f"factor product does not reconstruct {f}"
        return result


def factor(p: int, f: FpPoly, max_attempts: Optional[int] = None) -> FactorizationResult:
    return CurveFactorizer(p, max_attempts=max_attempts).factor(f)


def split_roots(p: int, g: FpPoly, max_attempts: Optional[int] = None) -> List[int]:
    return CurveFactorizer(p, max_attempts=max_attempts).split_roots(g)
