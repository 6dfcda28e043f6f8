"""Dimension of the local moduli space of scalar-flat Kahler ALE metrics.

The versal family has dimension ``d = j + k``; the moduli dimension ``m``
subtracts the dimension of a generic orbit of the holomorphic isometry
group:

==========================  =====  ====================
case                        orbit  m
==========================  =====  ====================
1/3(1,1)                    3      2
1/p(1,1), p >= 4            4      2p - 5
1/p(1,q), q != 1, p-1       2      j + k - 2
non-cyclic, not in SU(2)    1      j + k - 1
==========================  =====  ====================

Groups inside SU(2) are hyperkahler and handled separately: ``m = 1`` for
A_1 and ``3k - 3`` otherwise. Scaled metrics are counted as distinct.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from . import group as grp
from .divisor import (
    DivisorCounts,
    ExceptionalDivisor,
    counts,
    cyclic_divisor,
    data_path,
    dihedral_embedding_dimension,
    find_divisor,
)
from .errors import (
    DivisorDataRequired,
    HyperkahlerInput,
    IdentityViolation,
    NoEmbeddingRelation,
    ResidueClassInvalid,
    ShapeMismatch,
    TableThreeDisagreement,
)
from .hj import embedding_dimension

ROUTES = (
    "Table1Row1",
    "Table1Row2",
    "Table1Row3",
    "Table1Row4",
    "Table3Formula",
    "HyperkahlerA1",
    "HyperkahlerADE",
)


# -- Table 3 --------------------------------------------------------------


@dataclass(frozen=True)
class Table3Row:
    """``m = (l - offset) / divisor + constant`` for ``l = residue mod modulus``."""

    family: str
    modulus: int
    residue: int
    offset: int
    divisor: int
    constant: int
    # {"parameter": "b", "l": [slope, intercept], "e": [slope, intercept]}
    embedding_relation: Optional[dict] = None

    def matches(self, l: int) -> bool:
        return l % self.modulus == self.residue

    def value(self, l: int) -> int:
        if not self.matches(l):
            raise ResidueClassInvalid(
                f"l = {l} is not {self.residue} mod {self.modulus} ({self.family})"
            )
        num = l - self.offset
        if num % self.divisor:
            raise ResidueClassInvalid(f"(l - {self.offset}) not divisible by {self.divisor}")
        return num // self.divisor + self.constant

    def formula(self) -> str:
        return f"(1/{self.divisor})(l - {self.offset}) + {self.constant}"

    def condition(self) -> str:
        if self.family == "idx3tetra":
            return "(l,6) = 3"
        return f"l = {self.residue} mod {self.modulus}"

    def smallest_instance(self) -> int:
        """Smallest ``l > 1`` in this residue class satisfying the family's gcd condition."""
        l = self.residue if self.residue > 1 else self.residue + self.modulus
        while True:
            try:
                grp.validate(_toi_descriptor(self.family, l))
                return l
            except grp.TableTwoConditionViolated:
                l += self.modulus


def _toi_descriptor(family: str, l: int) -> grp.GroupDescriptor:
    if family == "idx3tetra":
        return grp.Index3Tetrahedral(l)
    return grp.PhiProduct(grp.Factor(family), l)


def load_table3(path=None) -> Tuple[Table3Row, ...]:
    path = path or data_path("table3.json")
    with open(path) as fh:
        data = json.load(fh)
    rows = data["rows"] if isinstance(data, dict) else data
    return tuple(Table3Row(**r) for r in rows)


@lru_cache(maxsize=None)
def _cached_table3(path: str) -> Tuple[Table3Row, ...]:
    return load_table3(path)


def table3_rows() -> Tuple[Table3Row, ...]:
    return _cached_table3(str(data_path("table3.json")))


def table3_row(family: str, l: int, rows: Optional[Sequence[Table3Row]] = None) -> Table3Row:
    rows = table3_rows() if rows is None else rows
    for row in rows:
        if row.family == family and row.matches(l):
            return row
    raise ResidueClassInvalid(f"no Table 3 row for {family} with l = {l}")


@dataclass(frozen=True)
class Table3Consistency:
    family: str
    residue: int
    slope: Fraction
    intercept: Fraction
    impliedK: Optional[Fraction]
    isConstantInteger: bool

    def k_at(self, b: int) -> Fraction:
        return self.slope * b + self.intercept


def table3_consistency(family: str, residue: int, relation: Optional[dict] = None,
                       rows: Optional[Sequence[Table3Row]] = None) -> Table3Consistency:
    """Solve ``2e + 3k - 7 = m(l)`` for ``k`` along an affine family ``l(b), e(b)``.

    ``k`` comes out affine in ``b``; the report says whether it is a
    positive integer independent of ``b``.
    """
    rows = table3_rows() if rows is None else rows
    row = next((r for r in rows if r.family == family and r.residue == residue), None)
    if row is None:
        raise ResidueClassInvalid(f"no Table 3 row {family} residue {residue}")
    relation = relation or row.embedding_relation
    if relation is None:
        raise NoEmbeddingRelation(f"no (l, e) relation for {family} residue {residue}")
    (la, lb), (ea, eb) = relation["l"], relation["e"]
    slope = (Fraction(la, row.divisor) - 2 * ea) / 3
    intercept = (Fraction(lb - row.offset, row.divisor) + row.constant - 2 * eb + 7) / 3
    constant = slope == 0
    implied = intercept if constant else None
    ok = constant and intercept.denominator == 1 and intercept > 0
    return Table3Consistency(family, residue, slope, intercept, implied, ok)


def table3_integrality(l_max: int, rows: Optional[Sequence[Table3Row]] = None) -> List[str]:
    """Rows whose formula is not a positive integer at some valid ``1 < l <= l_max``."""
    rows = table3_rows() if rows is None else rows
    bad = []
    for row in rows:
        for l in range(row.residue, l_max + 1, row.modulus):
            if l <= 1:
                continue
            try:
                grp.validate(_toi_descriptor(row.family, l))
            except grp.TableTwoConditionViolated:
                continue
            num = l - row.offset
            if num % row.divisor or num // row.divisor + row.constant <= 0:
                bad.append(f"{row.family} l={l}: {row.formula()} not a positive integer")
    return bad


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class ModuliReport:
    group: grp.GroupDescriptor
    counts: Optional[DivisorCounts]
    embeddingDim: Optional[int]
    orbitDim: int
    mGamma: int
    route: str
    table3: Optional[Table3Row] = None
    divisor: Optional[ExceptionalDivisor] = None

    @property
    def dGamma(self) -> Optional[int]:
        return self.counts.dGamma if self.counts else None


def _agree(a, b, what):
    if a != b:
        raise IdentityViolation(f"{what}: {a} != {b}")


def moduli_dimension_cyclic(p: int, q: int) -> ModuliReport:
    desc = grp.validate_cyclic(p, q)
    if q == p - 1:
        raise HyperkahlerInput(f"1/{p}(1,{q}) lies in SU(2); use the hyperkahler route")
    div = cyclic_divisor(p, q)
    c = counts(div)
    e = embedding_dimension(p, q)
    if q == 1 and p == 3:
        orbit, route = 3, "Table1Row1"
        _agree(c.dGamma, 5, "d for 1/3(1,1)")
    elif q == 1:
        orbit, route = 4, "Table1Row2"
        _agree(c.dGamma, 2 * p - 1, "d = 2p - 1")
    else:
        orbit, route = 2, "Table1Row3"
        _agree(c.jGamma + c.kGamma - 2, 2 * e + 3 * c.kGamma - 8, "j + k - 2 vs 2e + 3k - 8")
    m = c.dGamma - orbit
    if route == "Table1Row2":
        _agree(m, 2 * p - 5, "m = 2p - 5")
    return ModuliReport(desc, c, e, orbit, m, route, divisor=div)


def moduli_dimension_hyperkahler(k: int) -> int:
    """``1`` for A_1, ``3k - 3`` for ``k >= 2`` exceptional curves."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return 1 if k == 1 else 3 * k - 3


def _hyperkahler_report(desc, div: ExceptionalDivisor) -> ModuliReport:
    if not div.is_ade():
        raise ShapeMismatch("hyperkahler groups need a divisor of (-2)-curves")
    c = counts(div)
    m = moduli_dimension_hyperkahler(c.kGamma)
    route = "HyperkahlerA1" if c.kGamma == 1 else "HyperkahlerADE"
    e = embedding_dimension(desc.p, desc.q) if isinstance(desc, grp.Cyclic) else None
    return ModuliReport(desc, c, e, c.dGamma - m, m, route, divisor=div)


def moduli_dimension_noncyclic(desc: grp.GroupDescriptor,
                               div: Optional[ExceptionalDivisor] = None) -> ModuliReport:
    desc = grp.validate(desc)
    if isinstance(desc, grp.Cyclic):
        raise TypeError("cyclic descriptor passed to the non-cyclic route")
    if desc.l == 1:
        raise HyperkahlerInput(f"{grp.format_descriptor(desc)} lies in SU(2)")
    cls = grp.classify(desc)
    if cls.kind is grp.DispatchKind.DIHEDRAL_FAMILY:
        if div is None:
            raise DivisorDataRequired(
                f"{grp.format_descriptor(desc)} needs exceptional divisor data"
            )
        e = dihedral_embedding_dimension(div)
        c = counts(div)
        m = c.jGamma + c.kGamma - 1
        _agree(m, 2 * e + 3 * c.kGamma - 7, "j + k - 1 vs 2e + 3k - 7")
        return ModuliReport(desc, c, e, 1, m, "Table1Row4", divisor=div)

    row = table3_row(cls.family, desc.l)
    m = row.value(desc.l)
    c = None
    if div is not None:
        c = counts(div)
        if c.jGamma + c.kGamma - 1 != m:
            raise TableThreeDisagreement(
                f"divisor gives j + k - 1 = {c.jGamma + c.kGamma - 1}, table gives {m}"
            )
    return ModuliReport(desc, c, None, 1, m, "Table3Formula", table3=row, divisor=div)


def full_report(desc: grp.GroupDescriptor, div: Optional[ExceptionalDivisor] = None,
                records: Optional[Sequence[ExceptionalDivisor]] = None) -> ModuliReport:
    """Validate, classify and dispatch.

    Non-cyclic groups without an explicit divisor fall back to the bundled
    records (or ``records``), matched by descriptor string.
    """
    desc = grp.validate(desc)
    cls = grp.classify(desc)
    if isinstance(desc, grp.Cyclic):
        if cls.hyperkahler:
            return _hyperkahler_report(desc, cyclic_divisor(desc.p, desc.q))
        return moduli_dimension_cyclic(desc.p, desc.q)

    if div is None:
        div = find_divisor(grp.format_descriptor(desc), records)
    if cls.hyperkahler:
        if div is None:
            raise DivisorDataRequired(
                f"{grp.format_descriptor(desc)} needs divisor data to count curves"
            )
        return _hyperkahler_report(desc, div)
    return moduli_dimension_noncyclic(desc, div)
