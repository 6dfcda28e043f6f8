"""Finite subgroups of U(2) without complex reflections.

A group is described either as a cyclic action ``1/p(1, q)`` or as one of
the six non-cyclic families built from binary polyhedral groups:

=================  =================================  ========
descriptor         condition                          order
=================  =================================  ========
``dihedral:l,n``   gcd(l, 2n) = 1                     4ln
``tetra:l``        gcd(l, 6) = 1                      24l
``octa:l``         gcd(l, 6) = 1                      48l
``icosa:l``        gcd(l, 30) = 1                     120l
``idx2dihedral``   gcd(l, 2) = 2, gcd(l, n) = 1       4ln
``idx3tetra:l``    gcd(l, 6) = 3                      24l
=================  =================================  ========
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .errors import NotCoprime, ParseError, QOutOfRange, TableTwoConditionViolated


class Factor(enum.Enum):
    DIHEDRAL = "dihedral"
    TETRAHEDRAL = "tetra"
    OCTAHEDRAL = "octa"
    ICOSAHEDRAL = "icosa"


@dataclass(frozen=True)
class Cyclic:
    p: int
    q: int


@dataclass(frozen=True)
class PhiProduct:
    """phi(L(1, 2l) x G) for a binary polyhedral G; ``n`` only for dihedral."""

    factor: Factor
    l: int
    n: Optional[int] = None


@dataclass(frozen=True)
class Index2Dihedral:
    l: int
    n: int


@dataclass(frozen=True)
class Index3Tetrahedral:
    l: int


GroupDescriptor = Union[Cyclic, PhiProduct, Index2Dihedral, Index3Tetrahedral]

# (condition modulus, required gcd) per single-parameter family
_GCD_CONDITIONS = {
    Factor.TETRAHEDRAL: (6, 1),
    Factor.OCTAHEDRAL: (6, 1),
    Factor.ICOSAHEDRAL: (30, 1),
}

_BASE_ORDER = {
    Factor.DIHEDRAL: 4,
    Factor.TETRAHEDRAL: 24,
    Factor.OCTAHEDRAL: 48,
    Factor.ICOSAHEDRAL: 120,
}


def _positive(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise TableTwoConditionViolated(
            f"{name} must be a positive integer, got {value!r}", condition=f"{name} >= 1"
        )


def validate_cyclic(p: int, q: int) -> Cyclic:
    if p < 2 or not 1 <= q < p:
        raise QOutOfRange(f"need 1 <= q < p with p >= 2, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)} != 1")
    return Cyclic(p, q)


def validate(desc: GroupDescriptor) -> GroupDescriptor:
    """Check the defining conditions of ``desc`` and return it unchanged.

    For cyclic groups, ``gcd(p, q) = 1`` and ``1 <= q < p`` already rule out
    complex reflections, so no group elements are enumerated.
    """
    if isinstance(desc, Cyclic):
        return validate_cyclic(desc.p, desc.q)
    if isinstance(desc, PhiProduct):
        _positive("l", desc.l)
        if desc.factor is Factor.DIHEDRAL:
            if desc.n is None:
                raise TableTwoConditionViolated("dihedral family needs n", condition="n given")
            _positive("n", desc.n)
            if gcd(desc.l, 2 * desc.n) != 1:
                raise TableTwoConditionViolated(
                    f"gcd(l, 2n) = gcd({desc.l}, {2 * desc.n}) != 1", condition="(l,2n) = 1"
                )
            return desc
        if desc.n is not None:
            raise TableTwoConditionViolated(
                f"{desc.factor.value} family takes no n", condition="no n"
            )
        modulus, want = _GCD_CONDITIONS[desc.factor]
        if gcd(desc.l, modulus) != want:
            raise TableTwoConditionViolated(
                f"gcd(l, {modulus}) = {gcd(desc.l, modulus)} != {want}",
                condition=f"(l,{modulus}) = {want}",
            )
        return desc
    if isinstance(desc, Index2Dihedral):
        _positive("l", desc.l)
        _positive("n", desc.n)
        if gcd(desc.l, 2) != 2:
            raise TableTwoConditionViolated(f"l = {desc.l} is odd", condition="(l,2) = 2")
        if gcd(desc.l, desc.n) != 1:
            raise TableTwoConditionViolated(
                f"gcd(l, n) = gcd({desc.l}, {desc.n}) != 1", condition="(l,n) = 1"
            )
        return desc
    if isinstance(desc, Index3Tetrahedral):
        _positive("l", desc.l)
        if gcd(desc.l, 6) != 3:
            raise TableTwoConditionViolated(
                f"gcd(l, 6) = {gcd(desc.l, 6)} != 3", condition="(l,6) = 3"
            )
        return desc
    raise TypeError(f"not a group descriptor: {desc!r}")


def order(desc: GroupDescriptor) -> int:
    if isinstance(desc, Cyclic):
        return desc.p
    if isinstance(desc, PhiProduct):
        base = _BASE_ORDER[desc.factor] * desc.l
        return base * desc.n if desc.factor is Factor.DIHEDRAL else base
    if isinstance(desc, Index2Dihedral):
        return 4 * desc.l * desc.n
    if isinstance(desc, Index3Tetrahedral):
        return 24 * desc.l
    raise TypeError(f"not a group descriptor: {desc!r}")


def family_key(desc: GroupDescriptor) -> str:
    """Short family name, identical to the descriptor prefix."""
    if isinstance(desc, Cyclic):
        return "cyclic"
    if isinstance(desc, PhiProduct):
        return desc.factor.value
    if isinstance(desc, Index2Dihedral):
        return "idx2dihedral"
    return "idx3tetra"


def is_cyclic(desc: GroupDescriptor) -> bool:
    return isinstance(desc, Cyclic)


# -- dispatch -------------------------------------------------------------


class DispatchKind(enum.Enum):
    HYPERKAHLER_A1 = "HyperkahlerA1"
    HYPERKAHLER_ADE = "HyperkahlerADE"
    CYCLIC_Q1_P3 = "CyclicQ1P3"
    CYCLIC_Q1 = "CyclicQ1"
    CYCLIC_GENERIC = "CyclicGeneric"
    DIHEDRAL_FAMILY = "DihedralFamily"
    TOI_FAMILY = "TOIFamily"


@dataclass(frozen=True)
class DispatchClass:
    kind: DispatchKind
    k: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    family: Optional[str] = None
    # (modulus, residue) of l; only for TOI families
    residue: Optional[tuple] = None

    @property
    def hyperkahler(self) -> bool:
        return self.kind in (DispatchKind.HYPERKAHLER_A1, DispatchKind.HYPERKAHLER_ADE)


_TOI_MODULUS = {"tetra": 6, "octa": 12, "icosa": 30, "idx3tetra": 6}


def classify(desc: GroupDescriptor) -> DispatchClass:
    """Pick the moduli-dimension branch for a validated descriptor.

    ``q = p - 1`` is tested before ``q = 1`` so that ``1/3(1,2)`` lands in the
    hyperkahler A_2 branch. Non-cyclic groups with ``l = 1`` lie in SU(2);
    their curve count is only known once divisor data is attached.
    """
    if isinstance(desc, Cyclic):
        p, q = desc.p, desc.q
        if (p, q) == (2, 1):
            return DispatchClass(DispatchKind.HYPERKAHLER_A1, k=1, p=p, q=q)
        if q == p - 1:
            return DispatchClass(DispatchKind.HYPERKAHLER_ADE, k=p - 1, p=p, q=q)
        if q == 1:
            kind = DispatchKind.CYCLIC_Q1_P3 if p == 3 else DispatchKind.CYCLIC_Q1
            return DispatchClass(kind, p=p, q=q)
        return DispatchClass(DispatchKind.CYCLIC_GENERIC, p=p, q=q)

    fam = family_key(desc)
    if desc.l == 1:
        return DispatchClass(DispatchKind.HYPERKAHLER_ADE, family=fam)
    if fam in ("dihedral", "idx2dihedral"):
        return DispatchClass(DispatchKind.DIHEDRAL_FAMILY, family=fam)
    modulus = _TOI_MODULUS[fam]
    return DispatchClass(DispatchKind.TOI_FAMILY, family=fam, residue=(modulus, desc.l % modulus))


# -- descriptor strings ---------------------------------------------------

_NUM = r"(0|[1-9][0-9]*)"
_PATTERNS = {
    "cyclic": re.compile(rf"cyclic:{_NUM}/{_NUM}"),
    "dihedral": re.compile(rf"dihedral:{_NUM},{_NUM}"),
    "idx2dihedral": re.compile(rf"idx2dihedral:{_NUM},{_NUM}"),
    "tetra": re.compile(rf"tetra:{_NUM}"),
    "octa": re.compile(rf"octa:{_NUM}"),
    "icosa": re.compile(rf"icosa:{_NUM}"),
    "idx3tetra": re.compile(rf"idx3tetra:{_NUM}"),
}


def parse_descriptor(text: str) -> GroupDescriptor:
    """Parse strings such as ``cyclic:7/3`` or ``dihedral:3,5``.

    Syntax only; call :func:`validate` for the group conditions.
    """
    prefix = text.split(":", 1)[0]
    pattern = _PATTERNS.get(prefix)
    m = pattern.fullmatch(text) if pattern else None
    if m is None:
        raise ParseError(f"cannot parse group descriptor {text!r}")
    nums = [int(g) for g in m.groups()]
    if prefix == "cyclic":
        return Cyclic(*nums)
    if prefix == "dihedral":
        return PhiProduct(Factor.DIHEDRAL, nums[0], nums[1])
    if prefix == "idx2dihedral":
        return Index2Dihedral(*nums)
    if prefix == "idx3tetra":
        return Index3Tetrahedral(nums[0])
    return PhiProduct(Factor(prefix), nums[0])


def format_descriptor(desc: GroupDescriptor) -> str:
    if isinstance(desc, Cyclic):
        return f"cyclic:{desc.p}/{desc.q}"
    if isinstance(desc, PhiProduct):
        if desc.factor is Factor.DIHEDRAL:
            return f"dihedral:{desc.l},{desc.n}"
        return f"{desc.factor.value}:{desc.l}"
    if isinstance(desc, Index2Dihedral):
        return f"idx2dihedral:{desc.l},{desc.n}"
    if isinstance(desc, Index3Tetrahedral):
        return f"idx3tetra:{desc.l}"
    raise TypeError(f"not a group descriptor: {desc!r}")
