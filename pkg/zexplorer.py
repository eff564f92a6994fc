#!/usr/bin/env python3
"""
Fiber-trace explorer for one-parameter curve families
For y^2 = x^3 + a4(u)*x + a6(u) over F_p, computes the trace of Frobenius
at every u with nonvanishing discriminant and summarizes how often two
fibers share a trace, next to the count of available zeta functions.
"""

import csv
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from config import NAIVE_COUNT_LIMIT
from driver import CurveFactorizer
from elliptic import point_count_naive
from errors import SmallCharacteristic, TooLarge
from fp_poly import FpPoly, poly_gcd, powmod_poly
from numtheory import hasse_window, require_prime
from schoof import schoof_count

logger = logging.getLogger(__name__)

ENGINES = ('naive', 'schoof')
HEURISTIC_GENERA = (1, 2, 3, 4)


def family_discriminant(a4: FpPoly, a6: FpPoly) -> FpPoly:
    """-16(4 a4^3 + 27 a6^2) as a polynomial in u"""
    return (a4 * a4 * a4 * 4 + a6 * a6 * 27) * (-16)


def _discriminant_roots(delta: FpPoly) -> FrozenSet[int]:
    p = delta.p
    if delta.is_zero():
        return frozenset(range(p))
    if delta.degree == 0:
        return frozenset()
    u = FpPoly.gen(p)
    # roots in F_p are the roots of gcd(delta, u^p - u)
    rational = poly_gcd(delta, powmod_poly(u, p, delta) - u)
    if rational.degree == 0:
        return frozenset()
    return frozenset(CurveFactorizer(p).split_roots(rational))


@dataclass(frozen=True)
class FamilySpec:
    p: int
    a4_spec: FpPoly
    a6_spec: FpPoly
    excluded: FrozenSet[int] = field(init=False)

    def __post_init__(self):
        require_prime(self.p)
        if self.p <= 3:
            raise SmallCharacteristic(f"short Weierstrass form needs p > 3, got {self.p}")
        if self.a4_spec.p != self.p or self.a6_spec.p != self.p:
            raise ValueError("family coefficients must live over F_p")
        delta = family_discriminant(self.a4_spec, self.a6_spec)
        object.__setattr__(self, 'excluded', _discriminant_roots(delta))

    @property
    def label(self) -> str:
        return f"a4={self.a4_spec.to_text()} a6={self.a6_spec.to_text()}"

    def fibers(self) -> List[int]:
        return [u for u in range(self.p) if u not in self.excluded]

    def fiber(self, u: int) -> Tuple[int, int]:
        return self.a4_spec.evaluate(u), self.a6_spec.evaluate(u)


def fiber_trace(p: int, a4: int, a6: int, engine: str) -> int:
    if engine == 'naive':
        return p + 1 - point_count_naive(p, a4, a6)
    return schoof_count(p, a4, a6).trace


def _trace_batch(job: Tuple[int, str, List[Tuple[int, int, int]]]) -> List[Tuple[int, int]]:
    p, engine, fibers = job
    return [(u, fiber_trace(p, a4, a6, engine)) for u, a4, a6 in fibers]


def family_traces(spec: FamilySpec, engine: str = 'naive', workers: int = 1) -> Dict[int, int]:
    """Trace at every non-excluded u, in increasing u"""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    p = spec.p
    if engine == 'naive' and p > NAIVE_COUNT_LIMIT:
        raise TooLarge(f"naive engine refuses p = {p} > {NAIVE_COUNT_LIMIT}")
    fibers = [(u, *spec.fiber(u)) for u in spec.fibers()]
    if workers > 1 and len(fibers) > 1:
        size = math.ceil(len(fibers) / workers)
        jobs = [(p, engine, fibers[i:i + size]) for i in range(0, len(fibers), size)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = list(executor.map(_trace_batch, jobs))
    else:
        batches = [_trace_batch((p, engine, fibers))]
    traces = dict(sorted(pair for batch in batches for pair in batch))
    bound = hasse_window(p)
    for u, a in traces.items():
        assert abs(a) <= bound, f"trace {a} at u={u} outside the Hasse window"
    logger.info(f"{spec.label} over F_{p}: {len(traces)} fiber traces ({engine})")
    return traces


@dataclass(frozen=True)
class CollisionReport:
    p: int
    family: str
    total_fibers: int
    distinct_traces: int
    max_multiplicity: int
    equal_pairs: int
    heuristic_expected_pairs: float
    zeta_table: Tuple[Tuple[int, float, float], ...] = ()


def zeta_heuristics(p: int, genera: Iterable[int] = HEURISTIC_GENERA) -> Tuple[Tuple[int, float, float], ...]:
    """(g, p^(g(g+1)/4), p^(2 - g(g+1)/4)) for each genus g

    The middle column estimates how many zeta functions exist; the last is
    the expected number of equal pairs among about p of them.
    """
    rows = []
    for g in genera:
        exponent = g * (g + 1) / 4
        rows.append((g, float(p) ** exponent, float(p) ** (2 - exponent)))
    return tuple(rows)


def collision_report(traces: Dict[int, int], p: int, family: str = '') -> CollisionReport:
    if not traces:
        raise ValueError("collision report needs at least one fiber")
    counts = Counter(traces.values())
    n = len(traces)
    return CollisionReport(
        p=p,
        family=family,
        total_fibers=n,
        distinct_traces=len(counts),
        max_multiplicity=max(counts.values()),
        equal_pairs=sum(m * (m - 1) // 2 for m in counts.values()),
        heuristic_expected_pairs=math.comb(n, 2) / math.sqrt(p),
        zeta_table=zeta_heuristics(p),
    )


def format_report(report: CollisionReport) -> str:
    lines = [
        f"p={report.p}",
        f"family={report.family}",
        f"total_fibers={report.total_fibers}",
        f"distinct_traces={report.distinct_traces}",
        f"max_multiplicity={report.max_multiplicity}",
        f"equal_pairs={report.equal_pairs}",
        f"heuristic_expected_pairs={report.heuristic_expected_pairs:.6g}",
    ]
    for g, zeta_count, pairs in report.zeta_table:
        lines.append(f"zeta_count_g{g}={zeta_count:.6g}")
        lines.append(f"expected_pairs_g{g}={pairs:.6g}")
    return '\n'.join(lines)


def write_csv(traces: Dict[int, int], path: str):
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(['u', 'trace'])
        for u in sorted(traces):
            writer.writerow([u, traces[u]])
    logger.info(f"wrote {len(traces)} fiber traces to {path}")
