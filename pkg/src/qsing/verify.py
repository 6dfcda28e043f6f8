"""Exhaustive identity sweeps over cyclic groups and Table 3 rows.

Every per-pair check receives the continued-fraction entries from an
``expand`` callable rather than calling :func:`qsing.hj.hj_expand`, so a
deliberately broken expansion (see :func:`faulty_expand`) flows through
all downstream constructions and must be caught.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .divisor import Star, bundled_divisors, counts, dihedral_embedding_dimension
from .errors import QsingError
from .hj import evaluate, expand_entries, riemenschneider_from_entries
from .moduli import table3_integrality
from .toric import (
    LatticeChain,
    chain_defects,
    charts_from_points,
    dual_basis_holds,
    lattice_points,
    monomial_chain,
    monomial_defects,
    transitions_from,
)

Expand = Callable[[int, int], Tuple[int, ...]]


def coprime_pairs(p_max: int, p_min: int = 2) -> Iterator[Tuple[int, int]]:
    for p in range(max(p_min, 2), p_max + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def faulty_expand(target: Tuple[int, int], index: int = 0, delta: int = 1) -> Expand:
    """An ``expand`` that perturbs one entry of one expansion. Test use only."""

    def expand(p, q):
        entries = expand_entries(p, q)
        if (p, q) == tuple(target) and index < len(entries):
            entries = list(entries)
            entries[index] += delta
            entries = tuple(entries)
        return entries

    return expand


# -- per-pair checks; each returns a list of defect strings -------------


def check_expansion(p, q, entries, dual) -> List[str]:
    bad = []
    if not entries or min(entries) < 2:
        bad.append(f"entries {list(entries)} not all >= 2")
    num, den = evaluate(entries)
    if Fraction(num, den) != Fraction(p, q):
        bad.append(f"{list(entries)} evaluates to {num}/{den}, not {p}/{q}")
    return bad


def check_duality(p, q, entries, dual, expand: Expand = expand_entries) -> List[str]:
    # dual of the dual pair (p, p-q) is the expansion of p/q again
    again = expand(p, p - (p - q))
    if tuple(again) != tuple(entries):
        return [f"dual of dual {list(again)} != {list(entries)}"]
    return []


def check_riemenschneider(p, q, entries, dual) -> List[str]:
    r = riemenschneider_from_entries(p, q, entries, dual)
    if r.holds:
        return []
    return [f"sumE={r.sumE} sumE'={r.sumEprime} k'={r.kPrime} e={r.e} k={r.k}"]


def check_determinant(p, q, entries, dual) -> List[str]:
    return chain_defects(p, q, lattice_points(p, q, entries))


def check_transitions(p, q, entries, dual) -> List[str]:
    pts = lattice_points(p, q, entries)
    bad = chain_defects(p, q, pts)
    if bad:
        return bad
    charts = charts_from_points(pts)
    try:
        report = transitions_from(p, q, entries, charts)
    except QsingError as exc:
        return [str(exc)]
    for c in report.perIndex:
        if not c.inverseHolds:
            bad.append(f"eta_{c.index} != 1/xi_{c.index + 1}")
        if not c.recursionHolds:
            bad.append(f"transition {c.index}: exponent {c.coefficient} != e_{c.index + 1}")
    if not dual_basis_holds(LatticeChain(p, q, pts), charts):
        bad.append("dual-basis pairing is not the 0/1 pattern")
    return bad


def check_monomials(p, q, entries, dual) -> List[str]:
    e = 3 + sum(x - 2 for x in entries)
    return monomial_defects(p, q, monomial_chain(p, q, dual), e)


def check_row3(p, q, entries, dual) -> List[str]:
    if q in (1, p - 1):
        return []
    k = len(entries)
    j = 2 * sum(x - 1 for x in entries)
    # embedding dimension counted as the number of invariant generators
    e = len(monomial_chain(p, q, dual))
    if j + k - 2 != 2 * e + 3 * k - 8:
        return [f"j+k-2 = {j + k - 2} != 2e+3k-8 = {2 * e + 3 * k - 8}"]
    return []


def check_h1(p, q, entries, dual) -> List[str]:
    e = len(dual) + 2
    h1 = sum(x - 1 for x in entries)
    if h1 != e + len(entries) - 3:
        return [f"h1 = {h1} != e + k - 3 = {e + len(entries) - 3}"]
    return []


PAIR_CHECKS = {
    "hj_soundness": check_expansion,
    "duality": check_duality,
    "riemenschneider": check_riemenschneider,
    "determinant": check_determinant,
    "transitions": check_transitions,
    "monomials": check_monomials,
    "row3_double_count": check_row3,
    "h1_count": check_h1,
}


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, label, defects):
        self.checked += 1
        if defects:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = f"{label}: {defects[0]}"


def sweep_pairs(name: str, p_max: int, expand: Expand = expand_entries,
                p_min: int = 2) -> SweepResult:
    check = PAIR_CHECKS[name]
    res = SweepResult(name)
    for p, q in coprime_pairs(p_max, p_min):
        entries = expand(p, q)
        dual = expand(p, p - q)
        try:
            if check is check_duality:
                defects = check(p, q, entries, dual, expand)
            else:
                defects = check(p, q, entries, dual)
        except (QsingError, ZeroDivisionError, ValueError) as exc:
            defects = [f"{type(exc).__name__}: {exc}"]
        res.record(f"cyclic:{p}/{q}", defects)
    return res


def sweep_dihedral(records=None) -> SweepResult:
    res = SweepResult("row4_double_count")
    for div in records if records is not None else bundled_divisors():
        if not isinstance(div.shape, Star):
            continue
        c = counts(div)
        e = dihedral_embedding_dimension(div)
        lhs, rhs = c.jGamma + c.kGamma - 1, 2 * e + 3 * c.kGamma - 7
        res.record(div.label or str(div.to_record()),
                   [] if lhs == rhs else [f"j+k-1 = {lhs} != 2e+3k-7 = {rhs}"])
    return res


def sweep_table3(l_max: int) -> SweepResult:
    res = SweepResult("table3_integrality")
    res.checked = 1
    bad = table3_integrality(l_max)
    if bad:
        res.failed = len(bad)
        res.counterexample = bad[0]
    return res


def run_all(p_max: int, l_max: int, expand: Expand = expand_entries,
            names: Optional[Sequence[str]] = None) -> List[SweepResult]:
    names = list(PAIR_CHECKS) if names is None else names
    out = [sweep_pairs(n, p_max, expand) for n in names]
    out.append(sweep_dihedral())
    out.append(sweep_table3(l_max))
    return out
