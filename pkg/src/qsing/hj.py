"""Hirzebruch-Jung (ceiling) continued fractions in exact integer arithmetic.

    p/q = e_1 - 1/(e_2 - 1/(... - 1/e_k)) = [e_1, ..., e_k],  e_i >= 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import ChainInvariantViolation
from .group import validate_cyclic


def evaluate(entries: Sequence[int]) -> Tuple[int, int]:
    """Return ``(numerator, denominator)`` of ``[e_1, ..., e_k]``.

    Evaluated from the innermost term outwards; the pair is already in lowest
    terms when every entry is an integer.
    """
    if not entries:
        raise ValueError("empty continued fraction")
    num, den = entries[-1], 1
    for e in reversed(entries[:-1]):
        num, den = e * num - den, num
    return num, den


def expand_entries(p: int, q: int) -> Tuple[int, ...]:
    """Raw ceiling-division loop, no validation."""
    out = []
    while q:
        e = -(-p // q)
        out.append(e)
        p, q = q, e * q - p
    return tuple(out)


@dataclass(frozen=True)
class HJExpansion:
    p: int
    q: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if not self.entries or min(self.entries) < 2:
            raise ChainInvariantViolation(f"entries must be >= 2: {self.entries}")
        num, den = evaluate(self.entries)
        if num * self.q != den * self.p:
            raise ChainInvariantViolation(
                f"{list(self.entries)} evaluates to {num}/{den}, not {self.p}/{self.q}"
            )

    @property
    def k(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def hj_expand(p: int, q: int) -> HJExpansion:
    """Expansion of p/q with every entry >= 2.

    >>> hj_expand(7, 3).entries
    (3, 2, 2)
    """
    validate_cyclic(p, q)
    return HJExpansion(p, q, expand_entries(p, q))


def dual_expand(p: int, q: int) -> HJExpansion:
    """Expansion of the dual fraction p/(p - q)."""
    validate_cyclic(p, q)
    return HJExpansion(p, p - q, expand_entries(p, p - q))


def embedding_dimension(p: int, q: int) -> int:
    """Number of generators of the invariant ring of ``1/p(1, q)``.

    Computed as ``3 + sum(e_i - 2)`` and cross-checked against the length of
    the dual expansion plus two.
    """
    ex = hj_expand(p, q)
    e = 3 + sum(x - 2 for x in ex)
    k_dual = len(expand_entries(p, p - q))
    if e != k_dual + 2:
        raise ChainInvariantViolation(f"embedding dimension {e} != k' + 2 = {k_dual + 2}")
    return e


@dataclass(frozen=True)
class RiemenschneiderReport:
    p: int
    q: int
    k: int
    sumE: int
    sumEprime: int
    kPrime: int
    e: int
    holds: bool


def riemenschneider_check(p: int, q: int) -> RiemenschneiderReport:
    """Evaluate the three Riemenschneider identities for ``1/p(1, q)``.

    Holds for every valid input:

        sum(e_i - 1) == sum(e'_i - 1)
        k' == e - 2
        sum(e_i - 1) == e + k - 3
    """
    ex = hj_expand(p, q)
    dual = dual_expand(p, q)
    return riemenschneider_from_entries(p, q, ex.entries, dual.entries)


def riemenschneider_from_entries(p, q, entries, dual_entries) -> RiemenschneiderReport:
    k = len(entries)
    sum_e = sum(x - 1 for x in entries)
    sum_dual = sum(x - 1 for x in dual_entries)
    k_dual = len(dual_entries)
    e = 3 + sum(x - 2 for x in entries)
    holds = sum_e == sum_dual and k_dual == e - 2 and sum_e == e + k - 3
    return RiemenschneiderReport(p, q, k, sum_e, sum_dual, k_dual, e, holds)
