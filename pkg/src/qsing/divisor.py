"""Exceptional divisors of minimal resolutions and their curve counts.

Cyclic groups give a chain of curves; non-cyclic groups give a star: a
central curve with three chains attached. Self-intersection numbers are
stored as geometers write them (negative).

Divisor records are JSON objects, either ``{"chain": [-3, -2]}`` or
``{"central": -2, "arms": [[-2], [-2], [-2]]}``, with optional ``"label"``
and ``"group"`` strings. A file holds one record or a list of records.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .errors import ArmCountError, MinimalityViolation, ParseError, ShapeMismatch
from .hj import hj_expand


@dataclass(frozen=True)
class Chain:
    self_intersections: Tuple[int, ...]

    def curves(self) -> Tuple[int, ...]:
        return self.self_intersections


@dataclass(frozen=True)
class Star:
    central: int
    arms: Tuple[Tuple[int, ...], ...]

    def curves(self) -> Tuple[int, ...]:
        return (self.central,) + tuple(x for arm in self.arms for x in arm)

    @property
    def b(self) -> int:
        return -self.central


@dataclass(frozen=True)
class ExceptionalDivisor:
    shape: Union[Chain, Star]
    label: Optional[str] = None
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if isinstance(self.shape, Star) and len(self.shape.arms) != 3:
            raise ArmCountError(f"a star needs exactly 3 arms, got {len(self.shape.arms)}")
        curves = self.shape.curves()
        if not curves:
            raise ParseError("divisor has no curves")
        for x in curves:
            if x >= -1:
                raise MinimalityViolation(
                    f"self-intersection {x} > -2 (minimal resolutions have no -1 curves)"
                )

    @property
    def is_star(self) -> bool:
        return isinstance(self.shape, Star)

    def degrees(self) -> Tuple[int, ...]:
        """The ``e_i`` (negated self-intersections) of all curves."""
        return tuple(-x for x in self.shape.curves())

    def is_ade(self) -> bool:
        """All curves are (-2)-curves, i.e. the group lies in SU(2)."""
        return all(e == 2 for e in self.degrees())

    def to_record(self) -> dict:
        rec = {}
        if self.label is not None:
            rec["label"] = self.label
        if isinstance(self.shape, Chain):
            rec["chain"] = list(self.shape.self_intersections)
        else:
            rec["central"] = self.shape.central
            rec["arms"] = [list(a) for a in self.shape.arms]
        return rec


@dataclass(frozen=True)
class DivisorCounts:
    jGamma: int
    kGamma: int
    dGamma: int
    h1Theta: int


def cyclic_divisor(p: int, q: int) -> ExceptionalDivisor:
    entries = hj_expand(p, q).entries
    return ExceptionalDivisor(Chain(tuple(-e for e in entries)), label=f"cyclic:{p}/{q}")


def split_h1(div: ExceptionalDivisor) -> int:
    """``b - 1`` from the central curve plus the arm sums; chains use the flat sum."""
    shape = div.shape
    if isinstance(shape, Chain):
        return sum(-x - 1 for x in shape.self_intersections)
    return (shape.b - 1) + sum(-x - 1 for arm in shape.arms for x in arm)


def counts(div: ExceptionalDivisor) -> DivisorCounts:
    es = div.degrees()
    h1 = sum(e - 1 for e in es)
    j = 2 * h1
    k = len(es)
    return DivisorCounts(jGamma=j, kGamma=k, dGamma=j + k, h1Theta=h1)


def dihedral_embedding_dimension(div: ExceptionalDivisor) -> int:
    """``3 + sum(e_i - 2)`` over all curves of a star."""
    if not div.is_star:
        raise ShapeMismatch("dihedral embedding dimension needs a star divisor")
    return 3 + sum(e - 2 for e in div.degrees())


# -- records and files ----------------------------------------------------


def _int_list(value, what) -> Tuple[int, ...]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise ParseError(f"{what} must be a list of integers, got {value!r}")
    return tuple(value)


def load_divisor(record: Union[dict, str]) -> ExceptionalDivisor:
    """Build a validated divisor from a record (dict or JSON text)."""
    if isinstance(record, str):
        try:
            record = json.loads(record)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(record, dict):
        raise ParseError(f"divisor record must be an object, got {type(record).__name__}")
    label = record.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("label must be a string")
    meta = {k: v for k, v in record.items() if k not in ("label", "chain", "central", "arms")}
    if "chain" in record:
        if "central" in record or "arms" in record:
            raise ParseError("record mixes chain and star keys")
        shape = Chain(_int_list(record["chain"], "chain"))
    elif "central" in record and "arms" in record:
        central = record["central"]
        if not isinstance(central, int) or isinstance(central, bool):
            raise ParseError(f"central must be an integer, got {central!r}")
        arms = record["arms"]
        if not isinstance(arms, list):
            raise ParseError("arms must be a list")
        shape = Star(central, tuple(_int_list(a, "arm") for a in arms))
    else:
        raise ParseError("record needs 'chain' or both 'central' and 'arms'")
    return ExceptionalDivisor(shape, label=label, meta=meta)


def load_divisor_file(path) -> List[ExceptionalDivisor]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(data, dict) and "records" in data:
        data = data["records"]
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a record or a list of records")
    return [load_divisor(r) for r in data]


def data_path(name: str) -> Path:
    """Location of a bundled data file, honouring ``QSING_DATA_DIR``."""
    override = os.environ.get("QSING_DATA_DIR")
    if override:
        return Path(override) / name
    return Path(str(resources.files("qsing") / "data" / name))


def bundled_divisors() -> List[ExceptionalDivisor]:
    return load_divisor_file(data_path("divisors.json"))


def find_divisor(label: str, records=None) -> Optional[ExceptionalDivisor]:
    """First record whose ``label`` or ``group`` field equals ``label``."""
    if records is None:
        records = bundled_divisors()
    for div in records:
        if div.label == label or div.meta.get("group") == label:
            return div
    return None
