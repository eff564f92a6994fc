#!/usr/bin/env python3
"""
Integer helpers for point counting
Prime generation, the Hasse window and signed CRT reconstruction
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Sequence, Tuple

import gmpy2

from config import MILLER_RABIN_BASES
from errors import NoRepresentative, NotPrimeError

logger = logging.getLogger(__name__)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Strong-pseudoprime test to the fixed bases.

    Deterministic for n < 2^64 (the bases cover every n below 3.3e24). Above
    that it is a fixed-round screen and primality is an input assumption.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    return all(gmpy2.is_strong_prp(n, a) for a in MILLER_RABIN_BASES)


def require_prime(p: int) -> int:
    """Return p unchanged, raising NotPrimeError if the check fails"""
    if not is_probable_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p >= 2**64:
        logger.debug(f"{p} exceeds 2^64; primality is a strong-pseudoprime screen only")
    return p


def next_prime_after(n: int) -> int:
    return int(gmpy2.next_prime(n))


def primes_up_to(limit: int) -> List[int]:
    """All primes <= limit, increasing (sieve of Eratosthenes)"""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(gmpy2.isqrt(limit)) + 1):
        if sieve[q]:
            sieve[q * q::q] = bytes(len(range(q * q, limit + 1, q)))
    return [i for i, flag in enumerate(sieve) if flag]


def hasse_window(p: int) -> int:
    """floor(2*sqrt(p)), the largest |a| allowed by Hasse's bound"""
    return int(gmpy2.isqrt(4 * p))


def select_crt_primes(p: int) -> List[int]:
    """Shortest run of primes, skipping p, whose product exceeds 4*sqrt(p).

    The comparison is done squared, product^2 > 16p, in exact integers.
    """
    chosen = []
    product = 1
    ell = 2
    while product * product <= 16 * p:
        if ell != p:
            chosen.append(ell)
            product *= ell
        ell = next_prime_after(ell)
    return chosen


@dataclass(frozen=True)
class ResidueSystem:
    """Congruences a = residue (mod modulus) with pairwise coprime moduli"""
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(m)) for r, m in self.pairs)
        object.__setattr__(self, 'pairs', pairs)
        for r, m in pairs:
            if m < 1 or not 0 <= r < m:
                raise ValueError(f"residue {r} out of range for modulus {m}")
        for i, (_, m1) in enumerate(pairs):
            for _, m2 in pairs[i + 1:]:
                if gmpy2.gcd(m1, m2) != 1:
                    raise ValueError(f"moduli {m1} and {m2} are not coprime")

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> 'ResidueSystem':
        return cls(tuple(tuple(pair) for pair in pairs))

    @property
    def modulus(self) -> int:
        return reduce(lambda acc, pair: acc * pair[1], self.pairs, 1)


def crt_signed(rs: ResidueSystem, bound: int) -> int:
    """The unique a with |a| <= bound matching every congruence in rs"""
    M = rs.modulus
    x = 0
    for r, m in rs.pairs:
        cofactor = M // m
        x += r * cofactor * int(gmpy2.invert(cofactor % m, m)) if m > 1 else 0
    x %= M
    a = x if x <= bound else x - M
    if abs(a) > bound or any((a - r) % m for r, m in rs.pairs):
        raise NoRepresentative(f"no integer in [-{bound}, {bound}] matches {rs.pairs}")
    return a
