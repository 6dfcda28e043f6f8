"""Toric data for the minimal resolution of ``1/p(1, q)``.

Lattice points ``c_i = (s_i, t_i)`` run from ``c_0 = (0, 1)`` to
``c_{k+1} = (1, 0)``. They are stored scaled by ``p`` so that everything
here is integral; exact rationals appear only in the frame-change matrices
and the dual-basis pairing.

Monomials are exponent pairs ``(a, b)`` standing for ``x^a y^b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import ChainInvariantViolation, IndexOutOfRange, NoIntegerSolution
from .group import validate_cyclic
from .hj import dual_expand, hj_expand

Point = Tuple[int, int]


@dataclass(frozen=True)
class LaurentMonomial:
    """``x**x_exp * y**y_exp``; exponents may be negative."""

    x_exp: int
    y_exp: int

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(self.x_exp + other.x_exp, self.y_exp + other.y_exp)

    def __truediv__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(self.x_exp - other.x_exp, self.y_exp - other.y_exp)

    def __pow__(self, n: int) -> "LaurentMonomial":
        return LaurentMonomial(n * self.x_exp, n * self.y_exp)

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial(-self.x_exp, -self.y_exp)

    def weight(self, p: int, q: int) -> int:
        """Character of the generator of ``1/p(1, q)`` on this monomial."""
        return (self.x_exp + q * self.y_exp) % p

    def as_tuple(self) -> Point:
        return (self.x_exp, self.y_exp)

    def __str__(self):
        return f"x^{self.x_exp} y^{self.y_exp}"


# -- lattice chain --------------------------------------------------------


@dataclass(frozen=True)
class LatticeChain:
    p: int
    q: int
    points: Tuple[Point, ...]

    @property
    def k(self) -> int:
        return len(self.points) - 2

    def c(self, i: int) -> Tuple[Fraction, Fraction]:
        s, t = self.points[i]
        return Fraction(s, self.p), Fraction(t, self.p)


def lattice_points(p: int, q: int, entries: Sequence[int]) -> Tuple[Point, ...]:
    """``P_0 = (0, p)``, ``P_1 = (1, q)``, ``P_{i+1} = e_i P_i - P_{i-1}``."""
    pts = [(0, p), (1, q)]
    for e in entries:
        (s0, t0), (s1, t1) = pts[-2], pts[-1]
        pts.append((e * s1 - s0, e * t1 - t0))
    return tuple(pts)


def chain_defects(p: int, q: int, points: Sequence[Point]) -> List[str]:
    """Every violated chain invariant, as human-readable strings."""
    bad = []
    if points[0] != (0, p):
        bad.append(f"P_0 = {points[0]} != (0, {p})")
    if len(points) > 1 and points[1] != (1, q):
        bad.append(f"P_1 = {points[1]} != (1, {q})")
    if points[-1] != (p, 0):
        bad.append(f"P_last = {points[-1]} != ({p}, 0)")
    for i, ((s0, t0), (s1, t1)) in enumerate(zip(points, points[1:])):
        det = t0 * s1 - t1 * s0
        if det != p:
            bad.append(f"det(P_{i}, P_{i + 1}) = {det} != {p}")
        if not (s1 > s0 and t1 < t0):
            bad.append(f"P_{i} -> P_{i + 1} not monotone")
    if any(s < 0 or t < 0 for s, t in points):
        bad.append("negative component")
    return bad


def lattice_chain(p: int, q: int) -> LatticeChain:
    """Scaled lattice points ``p * c_i`` for ``i = 0..k+1``.

    >>> lattice_chain(7, 3).points
    ((0, 7), (1, 3), (3, 2), (5, 1), (7, 0))
    """
    pts = lattice_points(p, q, hj_expand(p, q).entries)
    bad = chain_defects(p, q, pts)
    if bad:
        raise ChainInvariantViolation(f"1/{p}(1,{q}): " + "; ".join(bad))
    return LatticeChain(p, q, pts)


# -- invariant monomials --------------------------------------------------


def monomial_chain(p: int, q: int, dual_entries: Sequence[int]) -> Tuple[LaurentMonomial, ...]:
    """``u_0 = x^p``, ``u_1 = x^(p-q) y``, ``u_{i+1} = u_i^(a_i) / u_{i-1}``."""
    us = [LaurentMonomial(p, 0), LaurentMonomial(p - q, 1)]
    for a in dual_entries:
        us.append(us[-1] ** a / us[-2])
    return tuple(us)


def invariant_monomials(p: int, q: int) -> Tuple[LaurentMonomial, ...]:
    """Minimal generators of the invariants of ``1/p(1, q)``, ending at ``y^p``."""
    validate_cyclic(p, q)
    return monomial_chain(p, q, dual_expand(p, q).entries)


def monomial_defects(p, q, monomials, embedding_dim) -> List[str]:
    bad = []
    if monomials[0].as_tuple() != (p, 0):
        bad.append(f"first monomial {monomials[0]} != x^{p}")
    if monomials[-1].as_tuple() != (0, p):
        bad.append(f"last monomial {monomials[-1]} != y^{p}")
    if len(monomials) != embedding_dim:
        bad.append(f"{len(monomials)} monomials, embedding dimension {embedding_dim}")
    for u in monomials:
        if u.x_exp < 0 or u.y_exp < 0:
            bad.append(f"negative exponent in {u}")
        if u.weight(p, q):
            bad.append(f"{u} has weight {u.weight(p, q)}")
    return bad


# -- charts ---------------------------------------------------------------


@dataclass(frozen=True)
class Chart:
    eta: LaurentMonomial
    xi: LaurentMonomial


@dataclass(frozen=True)
class ChartAtlas:
    p: int
    q: int
    charts: Tuple[Chart, ...]

    def __len__(self):
        return len(self.charts)

    def __getitem__(self, i):
        return self.charts[i]


def charts_from_points(points: Sequence[Point]) -> Tuple[Chart, ...]:
    """``eta_i = y^(p s_{i+1}) / x^(p t_{i+1})`` and ``xi_i = x^(p t_i) / y^(p s_i)``."""
    out = []
    for (s0, t0), (s1, t1) in zip(points, points[1:]):
        out.append(Chart(eta=LaurentMonomial(-t1, s1), xi=LaurentMonomial(t0, -s0)))
    return tuple(out)


def chart_atlas(p: int, q: int) -> ChartAtlas:
    chain = lattice_chain(p, q)
    charts = charts_from_points(chain.points)
    for i, ch in enumerate(charts):
        for name, m in (("eta", ch.eta), ("xi", ch.xi)):
            if m.weight(p, q):
                raise ChainInvariantViolation(f"{name}_{i} = {m} is not invariant")
    return ChartAtlas(p, q, charts)


@dataclass(frozen=True)
class TransitionCheck:
    index: int
    inverseHolds: bool
    recursionHolds: bool
    coefficient: int


@dataclass(frozen=True)
class TransitionReport:
    p: int
    q: int
    perIndex: Tuple[TransitionCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.inverseHolds and c.recursionHolds for c in self.perIndex)


def solve_multiple(target: LaurentMonomial, base: LaurentMonomial) -> int:
    """The unique integer ``m`` with ``target == base ** m``."""
    tx, ty = target.as_tuple()
    bx, by = base.as_tuple()
    if (bx, by) == (0, 0):
        raise NoIntegerSolution("base monomial is 1")
    num, den = (tx, bx) if bx else (ty, by)
    if num % den:
        raise NoIntegerSolution(f"{target} is not an integer power of {base}")
    m = num // den
    if base ** m != target:
        raise NoIntegerSolution(f"{target} is not an integer power of {base}")
    return m


def transitions_from(p: int, q: int, entries: Sequence[int], charts: Sequence[Chart]):
    checks = []
    for i in range(len(charts) - 1):
        cur, nxt = charts[i], charts[i + 1]
        inverse_ok = cur.eta == nxt.xi.inverse()
        m = solve_multiple(nxt.eta / cur.xi, cur.eta)
        checks.append(TransitionCheck(i, inverse_ok, m == entries[i], m))
    return TransitionReport(p, q, tuple(checks))


def verify_transitions(p: int, q: int) -> TransitionReport:
    """Check ``eta_i = 1/xi_{i+1}`` and ``eta_{i+1} = eta_i^m xi_i`` for each i.

    The exponent ``m`` is solved from the exponent vectors, not assumed, and
    ``recursionHolds`` records whether it equals the expansion entry
    ``e_{i+1}``.
    """
    entries = hj_expand(p, q).entries
    return transitions_from(p, q, entries, chart_atlas(p, q).charts)


def pairing(c: Tuple[Fraction, Fraction], m: LaurentMonomial) -> Fraction:
    return c[0] * m.x_exp + c[1] * m.y_exp


def dual_basis_holds(chain: LatticeChain, charts: Sequence[Chart]) -> bool:
    """``<c_i, eta_i> = 1``, ``<c_i, xi_i> = 0``, ``<c_{i+1}, eta_i> = 0``, ``<c_{i+1}, xi_i> = 1``."""
    # pairings against the scaled points p*c_i, so the target is (p, 0, 0, p)
    p = chain.p
    want = (p, 0, 0, p)
    for (s0, t0), (s1, t1), ch in zip(chain.points, chain.points[1:], charts):
        (ea, eb), (xa, xb) = ch.eta.as_tuple(), ch.xi.as_tuple()
        if (s0 * ea + t0 * eb, s0 * xa + t0 * xb, s1 * ea + t1 * eb, s1 * xa + t1 * xb) != want:
            return False
    return True


# -- derivations ----------------------------------------------------------

Matrix = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum((a[r][j] * b[j][c] for j in range(2)), Fraction(0)) for c in range(2))
        for r in range(2)
    )


IDENTITY: Matrix = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


@dataclass(frozen=True)
class FrameChange:
    """Coordinate vector fields on chart ``i`` versus ``x d/dx, y d/dy``.

    ``forward`` rows give ``eta_i d/deta_i`` and ``xi_i d/dxi_i`` in the
    frame ``(x d/dx, y d/dy)``, i.e. d/deta_i carries a ``1/eta_i``
    prefactor and d/dxi_i a ``1/xi_i`` prefactor. ``inverse`` rows give
    ``x d/dx`` and ``y d/dy`` in the frame
    ``(eta_i d/deta_i, xi_i d/dxi_i)``.
    """

    index: int
    forward: Matrix
    inverse: Matrix
    forward_prefactors: Tuple[str, str] = ("1/eta", "1/xi")
    inverse_prefactors: Tuple[str, str] = ("1/x", "1/y")


def derivation_change_of_frame(p: int, q: int, i: int) -> FrameChange:
    chain = lattice_chain(p, q)
    if not 0 <= i <= chain.k:
        raise IndexOutOfRange(f"chart index {i} outside 0..{chain.k}")
    s0, t0 = chain.c(i)
    s1, t1 = chain.c(i + 1)
    forward = ((s0, t0), (s1, t1))
    inverse = ((-p * t1, p * t0), (p * s1, -p * s0))
    if matmul(forward, inverse) != IDENTITY:
        raise ChainInvariantViolation(f"frame matrices at chart {i} are not inverse")
    return FrameChange(i, forward, inverse)
