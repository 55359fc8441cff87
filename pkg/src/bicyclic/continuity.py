"""Deciding continuity of shifts and of multiplication for the progression topologies.

A shift is one of the two translation maps by a fixed element s (left:
x -> s*x, right: x -> x*s).  Continuity of a shift at x against a target
index t asks for a source index k with

    image of (basic neighborhood of x at k)  inside  basic nbhd of shift(x) at t

and joint continuity at (x, y) asks the same for the elementwise product
of two basic neighborhoods against a neighborhood of x*y.  Because basic
neighborhoods only refine as the index grows (the base point never moves,
only the progression step changes), each question is monotone in k and
decidable by one exact subset test per candidate k.

Failure is certified structurally, not by giving up: every image of a
progression tail contains unavoidable tails whose line (the fixed
exponent) and value class do not depend on k.  If such a tail runs along
a different line than every target neighborhood, or sits in a congruence
class mod p^t disjoint from the target, no k can ever work, and the
verdict carries one concrete escaping element per small k.  A bounded
search that merely fails without such a certificate is reported honestly
as RefutedUpToBound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .element import BicyclicElement, multiply, solve_left
from .families import contains, enumerate_members
from .symset import (
    ColTail,
    RowTail,
    Single,
    SymSet,
    left_image,
    product,
    right_image,
    subset,
)
from .topology import TopologyDescriptor, WindowPAdic, basic_nbhd, carrier, is_isolated

__all__ = [
    "ShiftSide",
    "ContinuousAt",
    "DiscontinuousAt",
    "RefutedUpToBound",
    "Verdict",
    "apply_shift",
    "shift_image",
    "check_shift_at",
    "ShiftCell",
    "ShiftReport",
    "check_shift",
    "check_joint_at",
    "JointCell",
    "JointReport",
    "check_joint",
    "window_joint_report",
    "DiscontinuityWitness",
    "find_discontinuity",
    "EquationReplay",
    "equation_replay",
]

DEFAULT_K_MAX = 12
DEFAULT_WITNESS_BOUND = 4


class ShiftSide(enum.Enum):
    LEFT = "left"    # x -> s * x
    RIGHT = "right"  # x -> x * s


@dataclass(frozen=True)
class ContinuousAt:
    """Success: for each requested target index t, a working source index k."""

    modulus: tuple  # pairs (t, k)

    def modulus_for(self, t: int) -> int:
        return dict(self.modulus)[t]


@dataclass(frozen=True)
class DiscontinuousAt:
    """Certified failure at target index t, for every source index.

    structural_reason explains why no source index can work;
    counterexamples holds pairs (k, element) with the element in the
    image of the k-th source neighborhood but outside the target.
    """

    target_index: int
    counterexamples: tuple
    structural_reason: str


@dataclass(frozen=True)
class RefutedUpToBound:
    """No modulus found up to the probe bound and no structural certificate."""

    probe_bound: int


Verdict = object  # union of the three dataclasses above


def apply_shift(side: ShiftSide, s: BicyclicElement, x: BicyclicElement) -> BicyclicElement:
    return multiply(s, x) if side is ShiftSide.LEFT else multiply(x, s)


def shift_image(side: ShiftSide, s: BicyclicElement, sets: SymSet) -> SymSet:
    return left_image(s, sets) if side is ShiftSide.LEFT else right_image(sets, s)


# --- structural analysis ------------------------------------------------------


def _member_at(atom, t: int) -> BicyclicElement:
    if isinstance(atom, RowTail):
        return BicyclicElement(atom.row, atom.base + atom.step * t)
    return BicyclicElement(atom.base + atom.step * t, atom.col)


def _param_value(atom, m: BicyclicElement) -> int:
    return m.l if isinstance(atom, RowTail) else m.k


def _tail_probe(mapper: Callable, atom, hint: int):
    """Line and value class of the image of the atom's high end.

    Far enough up the tail the multiplication case is constant, so the
    image moves one coordinate with slope one and pins the other; both
    facts are asserted.  The returned class representative does not depend
    on the tail's step, so it holds for the neighborhood at every index.
    """
    t0 = hint + 32
    m1, m2 = _member_at(atom, t0), _member_at(atom, t0 + 1)
    u1, u2 = mapper(m1), mapper(m2)
    if u1.k == u2.k:
        line, v1, v2 = ("row", u1.k), u1.l, u2.l
    else:
        if u1.l != u2.l:
            raise RuntimeError("image probe moved both coordinates")
        line, v1, v2 = ("col", u1.l), u1.k, u2.k
    if v2 - v1 != atom.step:
        raise RuntimeError("image probe is not slope-one in the tail parameter")
    rep = atom.base + (v1 - _param_value(atom, m1))
    return line, rep


def _diagonal_probe(xatom, yatom, hint: int):
    """Line and value class of products with both tail parameters large."""
    t0 = hint + 32
    u1 = multiply(_member_at(xatom, t0), _member_at(yatom, t0))
    u2 = multiply(_member_at(xatom, t0 + 1), _member_at(yatom, t0 + 1))
    if u1.k == u2.k:
        line, v1, v2 = ("row", u1.k), u1.l, u2.l
    else:
        if u1.l != u2.l:
            raise RuntimeError("diagonal probe moved both coordinates")
        line, v1, v2 = ("col", u1.l), u1.k, u2.k
    if v2 - v1 != xatom.step + yatom.step:
        raise RuntimeError("diagonal probe is not slope-one in each tail parameter")
    rep = (
        xatom.base
        + yatom.base
        + (v1 - _param_value(xatom, _member_at(xatom, t0)) - _param_value(yatom, _member_at(yatom, t0)))
    )
    return line, rep


def _structural_reason(parts, target: SymSet, t: int, p: Optional[int]) -> Optional[str]:
    """A reason valid for every source index, or None."""
    if not parts:
        return None
    watom = target.atoms[0]
    if isinstance(watom, Single):
        return (
            "the shifted point is isolated but the image of every source "
            "neighborhood contains an infinite tail"
        )
    wline = ("row", watom.row) if isinstance(watom, RowTail) else ("col", watom.col)
    for line, rep in parts:
        if line != wline:
            return (
                f"the image always contains a tail along {line[0]} {line[1]}, "
                f"but target neighborhoods live along {wline[0]} {wline[1]}"
            )
        if (rep - watom.base) % (p**t) != 0:
            return (
                f"the image always contains a tail in the class {rep % p**t} "
                f"mod {p}^{t}, disjoint from the target class {watom.base % p**t}"
            )
    return None


def _witnesses(images: Callable, target: SymSet, witness_bound: int) -> tuple:
    out = []
    for k in range(1, witness_bound + 1):
        w = subset(images(k), target)
        if w.holds:
            # a structural reason guarantees this cannot happen
            raise RuntimeError("structural certificate contradicted by an exact subset check")
        out.append((k, w.counterexample))
    return tuple(out)


# --- shift continuity ----------------------------------------------------------


def check_shift_at(
    top: TopologyDescriptor,
    side: ShiftSide,
    s: BicyclicElement,
    x: BicyclicElement,
    t: int,
    k_max: int = DEFAULT_K_MAX,
    witness_bound: int = DEFAULT_WITNESS_BOUND,
):
    """Decide continuity of the shift by s at the point x for target index t."""
    if not contains(carrier(top), s):
        raise ValueError(f"shift element {s} is outside the carrier")
    y = apply_shift(side, s, x)
    target = basic_nbhd(top, y, t)  # also validates y
    source_shape = basic_nbhd(top, x, 1)  # also validates x
    atom = source_shape.atoms[0]
    parts = []
    if not isinstance(atom, Single):
        mapper = (
            (lambda m: multiply(s, m)) if side is ShiftSide.LEFT else (lambda m: multiply(m, s))
        )
        hint = s.k + s.l + x.k + x.l + y.k + y.l
        parts.append(_tail_probe(mapper, atom, hint))
    reason = _structural_reason(parts, target, t, getattr(top, "p", None))
    if reason is not None:
        images = lambda k: shift_image(side, s, basic_nbhd(top, x, k))
        return DiscontinuousAt(t, _witnesses(images, target, witness_bound), reason)
    for k in range(1, k_max + 1):
        if subset(shift_image(side, s, basic_nbhd(top, x, k)), target).holds:
            return ContinuousAt(((t, k),))
    return RefutedUpToBound(k_max)


@dataclass(frozen=True)
class ShiftCell:
    s: BicyclicElement
    x: BicyclicElement
    t: int
    verdict: object


@dataclass(frozen=True)
class ShiftReport:
    topology: TopologyDescriptor
    side: ShiftSide
    cells: tuple
    k_max: int

    @property
    def failures(self) -> tuple:
        return tuple(c for c in self.cells if not isinstance(c.verdict, ContinuousAt))

    @property
    def all_continuous(self) -> bool:
        return not self.failures


def check_shift(
    top: TopologyDescriptor,
    side: ShiftSide,
    bound: Optional[int] = None,
    t_max: int = 3,
    k_max: int = DEFAULT_K_MAX,
    pairs: Optional[list] = None,
) -> ShiftReport:
    """Sweep shift continuity over (s, x) pairs and t <= t_max.

    Either give a bound, meaning all carrier pairs with exponents <= bound,
    or an explicit list of (s, x) pairs.  Cells are pure and independent;
    they are evaluated and reported in a fixed order so reports are
    reproducible.
    """
    if (bound is None) == (pairs is None):
        raise ValueError("give exactly one of bound or pairs")
    if pairs is None:
        points = enumerate_members(carrier(top), bound)
        pairs = [(s, x) for s in points for x in points]
    cells = []
    for s, x in pairs:
        for t in range(1, t_max + 1):
            cells.append(ShiftCell(s, x, t, check_shift_at(top, side, s, x, t, k_max)))
    return ShiftReport(top, side, tuple(cells), k_max)


# --- joint continuity ------------------------------------------------------------


def check_joint_at(
    top: TopologyDescriptor,
    x: BicyclicElement,
    y: BicyclicElement,
    t: int,
    k_max: int = DEFAULT_K_MAX,
    witness_bound: int = DEFAULT_WITNESS_BOUND,
):
    """Decide joint continuity of multiplication at the pair (x, y)."""
    z = multiply(x, y)
    target = basic_nbhd(top, z, t)
    ax = basic_nbhd(top, x, 1).atoms[0]
    ay = basic_nbhd(top, y, 1).atoms[0]
    hint = x.k + x.l + y.k + y.l + z.k + z.l
    parts = []
    if not isinstance(ay, Single):
        parts.append(_tail_probe(lambda m: multiply(x, m), ay, hint))
    if not isinstance(ax, Single):
        parts.append(_tail_probe(lambda m: multiply(m, y), ax, hint))
    if not isinstance(ax, Single) and not isinstance(ay, Single):
        parts.append(_diagonal_probe(ax, ay, hint))
    reason = _structural_reason(parts, target, t, getattr(top, "p", None))
    if reason is not None:
        images = lambda k: product(basic_nbhd(top, x, k), basic_nbhd(top, y, k))
        return DiscontinuousAt(t, _witnesses(images, target, witness_bound), reason)
    for k in range(1, k_max + 1):
        if subset(product(basic_nbhd(top, x, k), basic_nbhd(top, y, k)), target).holds:
            return ContinuousAt(((t, k),))
    return RefutedUpToBound(k_max)


def _isolation_case(top, x, y) -> str:
    xi, yi = is_isolated(top, x), is_isolated(top, y)
    if xi and yi:
        return "both-isolated"
    if xi:
        return "left-isolated-only"
    if yi:
        return "right-isolated-only"
    return "neither-isolated"


@dataclass(frozen=True)
class JointCell:
    x: BicyclicElement
    y: BicyclicElement
    t: int
    case: str
    verdict: object
    equality: Optional[bool]  # at the found modulus, did image = target exactly?


@dataclass(frozen=True)
class JointReport:
    topology: TopologyDescriptor
    cells: tuple
    k_max: int

    @property
    def failures(self) -> tuple:
        return tuple(c for c in self.cells if not isinstance(c.verdict, ContinuousAt))

    @property
    def all_continuous(self) -> bool:
        return not self.failures

    def cases(self) -> dict:
        out = {}
        for c in self.cells:
            out.setdefault(c.case, []).append(c)
        return out


def check_joint(
    top: TopologyDescriptor,
    bound: int,
    t_max: int = 3,
    k_max: int = DEFAULT_K_MAX,
) -> JointReport:
    """Sweep multiplication continuity over all carrier pairs with exponents <= bound.

    Each cell is tagged by which of the two points are isolated, and a
    successful cell records whether the product of the two source
    neighborhoods at the found modulus equals the target exactly or sits
    strictly inside it.
    """
    points = enumerate_members(carrier(top), bound)
    cells = []
    for x in points:
        for y in points:
            for t in range(1, t_max + 1):
                verdict = check_joint_at(top, x, y, t, k_max)
                equality = None
                if isinstance(verdict, ContinuousAt):
                    k = verdict.modulus_for(t)
                    img = product(basic_nbhd(top, x, k), basic_nbhd(top, y, k))
                    equality = subset(basic_nbhd(top, multiply(x, y), t), img).holds
                cells.append(JointCell(x, y, t, _isolation_case(top, x, y), verdict, equality))
    return JointReport(top, tuple(cells), k_max)


def window_joint_report(
    p: int, m: int, n: int, bound: int, t_max: int = 3, k_max: int = DEFAULT_K_MAX
) -> JointReport:
    """Joint continuity sweep for the row-window topology with those parameters."""
    return check_joint(WindowPAdic(p, m, n), bound, t_max=t_max, k_max=k_max)


# --- witness scan ------------------------------------------------------------------


@dataclass(frozen=True)
class DiscontinuityWitness:
    s: BicyclicElement
    x: BicyclicElement
    t: int
    verdict: DiscontinuousAt


def find_discontinuity(
    top: TopologyDescriptor,
    side: ShiftSide,
    bound: int,
    t_max: Optional[int] = None,
    k_max: int = DEFAULT_K_MAX,
) -> Optional[DiscontinuityWitness]:
    """First structurally certified shift discontinuity within the bound.

    Scans pairs by total exponent size, then lexicographically, with the
    target index innermost, and only accepts verdicts carrying a structural
    reason, so a returned witness is a genuine discontinuity rather than a
    search timeout.
    """
    t_top = t_max if t_max is not None else bound
    points = enumerate_members(carrier(top), bound)
    pairs = sorted(
        ((s, x) for s in points for x in points),
        key=lambda sx: (sx[0].k + sx[0].l + sx[1].k + sx[1].l, sx[0], sx[1]),
    )
    for s, x in pairs:
        for t in range(1, t_top + 1):
            verdict = check_shift_at(top, side, s, x, t, k_max)
            if isinstance(verdict, DiscontinuousAt):
                return DiscontinuityWitness(s, x, t, verdict)
    return None


# --- solution-set replay --------------------------------------------------------------


@dataclass(frozen=True)
class EquationReplay:
    """A verified instance of left division with a finite solution set.

    left_factor * distinguished = target holds by construction, and
    solutions is exactly { X : left_factor * X = target }, which always
    contains the distinguished point.
    """

    left_factor: BicyclicElement
    distinguished: BicyclicElement
    target: BicyclicElement
    solutions: frozenset


def equation_replay(x0: int, y0: int, i0: int, j0: int) -> EquationReplay:
    """Replay the division instance parameterized by (x0, y0, i0, j0).

    Requires y0 - j0 > x0 >= 0 and 0 <= i0 <= j0.  Under those constraints
    b^x0 a^(y0+i0-j0) * b^i0 a^j0 = b^x0 a^y0, and the full solution set of
    the corresponding equation is finite with cardinality
    1 + (y0 + i0 - j0).
    """
    for name, v in (("x0", x0), ("y0", y0), ("i0", i0), ("j0", j0)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
    if not y0 - j0 > x0:
        raise ValueError(f"need y0 - j0 > x0, got y0={y0}, j0={j0}, x0={x0}")
    if not i0 <= j0:
        raise ValueError(f"need i0 <= j0, got i0={i0}, j0={j0}")
    a = BicyclicElement(x0, y0 + i0 - j0)
    point = BicyclicElement(i0, j0)
    c = BicyclicElement(x0, y0)
    if multiply(a, point) != c:
        raise RuntimeError("division identity failed, which the preconditions forbid")
    solutions = solve_left(a, c)
    if point not in solutions:
        raise RuntimeError("distinguished point missing from its own solution set")
    return EquationReplay(a, point, c, solutions)
