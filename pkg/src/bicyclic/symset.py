"""Symbolic sets of monoid elements: finite unions of points and progression tails.

Three atom shapes cover everything the neighborhood calculus needs:

    Single(e)               the one-point set {e}
    RowTail(r, b, d)        { b^r a^(b + d*t) : t = 0, 1, 2, ... }
    ColTail(c, b, d)        { b^(b + d*t) a^c : t = 0, 1, 2, ... }

A SymSet denotes the union of its atoms.  All operations are exact: subset
tests return a certificate (a periodic covering bound, or a counterexample
element), and translation/product images are computed by case analysis on
the multiplication law, flattening sums of two progressions through the
numerical semigroup they generate.

One product orientation is inherently out of reach: ColTail * RowTail puts
the left factor's free exponent in the first coordinate and the right
factor's in the second, giving a genuinely two-dimensional set that no
finite union of these atoms can express.  That pairing raises
UnrepresentableProductError; nothing in the neighborhood calculus needs it,
since every topology hands out same-orientation tails.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Union

from .element import BicyclicElement, invert, multiply, solve_left, solve_right

__all__ = [
    "Single",
    "RowTail",
    "ColTail",
    "Atom",
    "SymSet",
    "EMPTY",
    "symset",
    "UnrepresentableProductError",
    "SubsetWitness",
    "atom_member",
    "atom_members",
    "member",
    "members",
    "transpose",
    "canonicalize",
    "union",
    "subset",
    "atom_disjoint",
    "intersection_empty",
    "left_image",
    "right_image",
    "product",
    "parse_symset",
    "format_symset",
    "symset_to_records",
    "symset_from_records",
]


class UnrepresentableProductError(ValueError):
    """Raised when a product would need a two-dimensional progression."""


def _check_uint(value, name):
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class Single:
    element: BicyclicElement


@dataclass(frozen=True)
class RowTail:
    """Fixed first exponent, second exponent running up an arithmetic progression."""

    row: int
    base: int
    step: int

    def __post_init__(self):
        _check_uint(self.row, "row")
        _check_uint(self.base, "base")
        if not isinstance(self.step, int) or self.step < 1:
            raise ValueError(f"step must be a positive integer, got {self.step!r}")


@dataclass(frozen=True)
class ColTail:
    """Fixed second exponent, first exponent running up an arithmetic progression."""

    col: int
    base: int
    step: int

    def __post_init__(self):
        _check_uint(self.col, "col")
        _check_uint(self.base, "base")
        if not isinstance(self.step, int) or self.step < 1:
            raise ValueError(f"step must be a positive integer, got {self.step!r}")


Atom = Union[Single, RowTail, ColTail]


@dataclass(frozen=True)
class SymSet:
    atoms: tuple

    def __iter__(self):
        return iter(self.atoms)

    def __bool__(self):
        return bool(self.atoms)


EMPTY = SymSet(())


def symset(*atoms: Atom) -> SymSet:
    return canonicalize(SymSet(tuple(atoms)))


# --- membership and sampling -------------------------------------------------


def atom_member(atom: Atom, x: BicyclicElement) -> bool:
    if isinstance(atom, Single):
        return atom.element == x
    if isinstance(atom, RowTail):
        return x.k == atom.row and x.l >= atom.base and (x.l - atom.base) % atom.step == 0
    return x.l == atom.col and x.k >= atom.base and (x.k - atom.base) % atom.step == 0


def member(s: SymSet, x: BicyclicElement) -> bool:
    return any(atom_member(a, x) for a in s.atoms)


def atom_members(atom: Atom, count: int) -> list:
    """The first `count` members in increasing progression order."""
    if isinstance(atom, Single):
        return [atom.element]
    if isinstance(atom, RowTail):
        return [BicyclicElement(atom.row, atom.base + atom.step * t) for t in range(count)]
    return [BicyclicElement(atom.base + atom.step * t, atom.col) for t in range(count)]


def members(s: SymSet, count_per_atom: int) -> list:
    out = []
    for a in s.atoms:
        out.extend(atom_members(a, count_per_atom))
    return out


# --- structural helpers -------------------------------------------------------


def _transpose_atom(atom: Atom) -> Atom:
    # elementwise inversion (k, l) -> (l, k); swaps the two tail orientations
    if isinstance(atom, Single):
        return Single(invert(atom.element))
    if isinstance(atom, RowTail):
        return ColTail(atom.row, atom.base, atom.step)
    return RowTail(atom.col, atom.base, atom.step)


def transpose(s: SymSet) -> SymSet:
    """Elementwise inversion of the whole set."""
    return SymSet(tuple(_transpose_atom(a) for a in s.atoms))


def _atom_key(atom: Atom):
    if isinstance(atom, Single):
        return (0, atom.element.k, atom.element.l, 0)
    if isinstance(atom, RowTail):
        return (1, atom.row, atom.base, atom.step)
    return (2, atom.col, atom.base, atom.step)


def _atom_contains(outer: Atom, inner: Atom) -> bool:
    """Whole-atom containment inner <= outer."""
    if isinstance(inner, Single):
        return atom_member(outer, inner.element)
    if isinstance(inner, RowTail) and isinstance(outer, RowTail):
        return (
            inner.row == outer.row
            and inner.base >= outer.base
            and (inner.base - outer.base) % outer.step == 0
            and inner.step % outer.step == 0
        )
    if isinstance(inner, ColTail) and isinstance(outer, ColTail):
        return (
            inner.col == outer.col
            and inner.base >= outer.base
            and (inner.base - outer.base) % outer.step == 0
            and inner.step % outer.step == 0
        )
    return False  # an infinite tail never fits a Single or the other orientation


def canonicalize(s: SymSet) -> SymSet:
    """Deterministic normal form: dedupe, drop atoms absorbed by another, sort."""
    atoms = sorted(set(s.atoms), key=_atom_key)
    # distinct atoms never contain each other mutually, so dropping every
    # absorbed atom cannot empty an equivalence class
    kept = [
        a
        for i, a in enumerate(atoms)
        if not any(j != i and _atom_contains(b, a) for j, b in enumerate(atoms))
    ]
    return SymSet(tuple(kept))


def union(*sets: SymSet) -> SymSet:
    atoms = []
    for s in sets:
        atoms.extend(s.atoms)
    return canonicalize(SymSet(tuple(atoms)))


# --- subset with certificate --------------------------------------------------


@dataclass(frozen=True)
class SubsetWitness:
    """Outcome of an exact subset test.

    holds=True comes with the covering bound that was exhaustively checked
    (beyond it membership is periodic); holds=False carries a concrete
    element of the left set missing from the right one.
    """

    holds: bool
    counterexample: Optional[BicyclicElement] = None
    covering_bound: Optional[int] = None


def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def _rowtail_subset(tail: RowTail, target: SymSet) -> SubsetWitness:
    # Only same-row tails of the target matter past a finite prefix; their
    # step lcm is the period of membership along the tail.
    steps = []
    consts = [tail.base]
    for atom in target.atoms:
        if isinstance(atom, RowTail) and atom.row == tail.row:
            steps.append(atom.step)
            consts.append(atom.base)
        elif isinstance(atom, Single) and atom.element.k == tail.row:
            consts.append(atom.element.l)
        elif isinstance(atom, ColTail):
            # contributes at most the one element (tail.row, atom.col)
            if tail.row >= atom.base and (tail.row - atom.base) % atom.step == 0:
                consts.append(atom.col)
    period = _lcm(steps) if steps else 1
    bound = max(consts) + period * tail.step
    value = tail.base
    while value <= bound:
        candidate = BicyclicElement(tail.row, value)
        if not member(target, candidate):
            return SubsetWitness(False, counterexample=candidate)
        value += tail.step
    return SubsetWitness(True, covering_bound=bound)


def subset(a: SymSet, b: SymSet) -> SubsetWitness:
    """Exact test a <= b with a checkable certificate either way."""
    worst_bound = 0
    for atom in a.atoms:
        if isinstance(atom, Single):
            if not member(b, atom.element):
                return SubsetWitness(False, counterexample=atom.element)
            continue
        if isinstance(atom, RowTail):
            w = _rowtail_subset(atom, b)
        else:
            w = _rowtail_subset(_transpose_atom(atom), transpose(b))
            if not w.holds:
                w = SubsetWitness(False, counterexample=invert(w.counterexample))
        if not w.holds:
            return w
        worst_bound = max(worst_bound, w.covering_bound)
    return SubsetWitness(True, covering_bound=worst_bound)


# --- disjointness --------------------------------------------------------------


def atom_disjoint(a: Atom, b: Atom) -> bool:
    if isinstance(a, Single):
        return not atom_member(b, a.element)
    if isinstance(b, Single):
        return not atom_member(a, b.element)
    if isinstance(a, RowTail) and isinstance(b, RowTail):
        if a.row != b.row:
            return True
        return (a.base - b.base) % gcd(a.step, b.step) != 0
    if isinstance(a, ColTail) and isinstance(b, ColTail):
        if a.col != b.col:
            return True
        return (a.base - b.base) % gcd(a.step, b.step) != 0
    row_tail, col_tail = (a, b) if isinstance(a, RowTail) else (b, a)
    # the only possible common element is (row, col)
    meet = BicyclicElement(row_tail.row, col_tail.col)
    return not (atom_member(row_tail, meet) and atom_member(col_tail, meet))


def intersection_empty(a: SymSet, b: SymSet) -> bool:
    return all(atom_disjoint(x, y) for x in a.atoms for y in b.atoms)


# --- translation images ---------------------------------------------------------


def _first_value_above(base: int, step: int, threshold: int) -> int:
    """Least base + step*t strictly greater than threshold."""
    if base > threshold:
        return base
    return base + step * ((threshold - base) // step + 1)


def _left_image_atom(s: BicyclicElement, atom: Atom) -> list:
    if isinstance(atom, Single):
        return [Single(multiply(s, atom.element))]
    if isinstance(atom, RowTail):
        # the comparison s.l vs row is the same for every member
        if s.l < atom.row:
            return [RowTail(s.k - s.l + atom.row, atom.base, atom.step)]
        if s.l == atom.row:
            return [RowTail(s.k, atom.base, atom.step)]
        return [RowTail(s.k, s.l - atom.row + atom.base, atom.step)]
    # ColTail: the comparison s.l vs the running first exponent splits the tail
    out = []
    value = atom.base
    while value < s.l:  # finitely many members below s.l collapse to points
        out.append(Single(BicyclicElement(s.k, s.l - value + atom.col)))
        value += atom.step
    if value == s.l:
        out.append(Single(BicyclicElement(s.k, atom.col)))
    high = _first_value_above(atom.base, atom.step, s.l)
    out.append(ColTail(atom.col, s.k - s.l + high, atom.step))
    return out


def left_image(s: BicyclicElement, sets: SymSet) -> SymSet:
    """The exact set { s * x : x in sets }."""
    atoms = []
    for atom in sets.atoms:
        atoms.extend(_left_image_atom(s, atom))
    return canonicalize(SymSet(tuple(atoms)))


def right_image(sets: SymSet, s: BicyclicElement) -> SymSet:
    """The exact set { x * s : x in sets }, via the inversion anti-isomorphism."""
    return canonicalize(transpose(left_image(invert(s), transpose(sets))))


# --- products --------------------------------------------------------------------


def _semigroup_atoms(row: int, base: int, d1: int, d2: int) -> list:
    """Atoms for { b^row a^(base + v) : v in the semigroup generated by d1, d2 }.

    With g = gcd, the set g*<d1/g, d2/g> has a finite exceptional part below
    g * conductor and then every multiple of g; conductor is the coprime
    Frobenius bound (a-1)(b-1).
    """
    g = gcd(d1, d2)
    a, b = d1 // g, d2 // g
    conductor = (a - 1) * (b - 1)
    atoms = []
    reachable = {
        a * u + b * v
        for u in range(conductor // a + 1)
        for v in range((conductor - a * u) // b + 1 if conductor >= a * u else 0)
    }
    for s in sorted(v for v in reachable if v < conductor):
        atoms.append(Single(BicyclicElement(row, base + g * s)))
    atoms.append(RowTail(row, base + g * conductor, g))
    return atoms


def _product_row_row(x: RowTail, y: RowTail) -> list:
    atoms = []
    value = x.base
    while value < y.row:  # low members of x act by shifting into y's row copy
        atoms.append(RowTail(x.row - value + y.row, y.base, y.step))
        value += x.step
    if value == y.row:
        atoms.append(RowTail(x.row, y.base, y.step))
    high = _first_value_above(x.base, x.step, y.row)
    atoms.extend(_semigroup_atoms(x.row, high - y.row + y.base, x.step, y.step))
    return atoms


def _product_row_col(x: RowTail, y: ColTail) -> list:
    # free exponents face each other; the difference sweeps a full residue
    # class of gcd(steps), one tail on each side of zero
    g = gcd(x.step, y.step)
    atoms = []
    forward = (y.base - x.base) % g
    atoms.append(ColTail(y.col, x.row + (forward if forward else g), g))
    if (y.base - x.base) % g == 0:
        atoms.append(Single(BicyclicElement(x.row, y.col)))
    backward = (x.base - y.base) % g
    atoms.append(RowTail(x.row, y.col + (backward if backward else g), g))
    return atoms


def product(a: SymSet, b: SymSet) -> SymSet:
    """The exact elementwise product { x * y : x in a, y in b }.

    Raises UnrepresentableProductError when a ColTail meets a RowTail in
    that order; see the module docstring.
    """
    atoms = []
    for x in a.atoms:
        for y in b.atoms:
            if isinstance(x, Single):
                atoms.extend(_left_image_atom(x.element, y))
            elif isinstance(y, Single):
                atoms.extend(
                    _transpose_atom(z)
                    for z in _left_image_atom(invert(y.element), _transpose_atom(x))
                )
            elif isinstance(x, RowTail) and isinstance(y, RowTail):
                atoms.extend(_product_row_row(x, y))
            elif isinstance(x, RowTail) and isinstance(y, ColTail):
                atoms.extend(_product_row_col(x, y))
            elif isinstance(x, ColTail) and isinstance(y, ColTail):
                atoms.extend(
                    _transpose_atom(z)
                    for z in _product_row_row(_transpose_atom(y), _transpose_atom(x))
                )
            else:
                raise UnrepresentableProductError(
                    "ColTail * RowTail is a two-dimensional set and has no "
                    "finite representation in this atom vocabulary"
                )
    return canonicalize(SymSet(tuple(atoms)))


def pointwise_witness(a: SymSet, b: SymSet, z: BicyclicElement, scan: int = 80):
    """A pair (x, y) with x in a, y in b and x*y = z, or None within the scan.

    Used by verification code to confirm that every claimed product member
    is a genuine product; solve_left makes the check exact once x is fixed.
    """
    for atom in a.atoms:
        for x in atom_members(atom, scan):
            for y in solve_left(x, z):
                if member(b, y):
                    return (x, y)
    return None


# --- text and record forms --------------------------------------------------------

_SINGLE_RE = re.compile(r"^\{\s*b\^(\d+)\s*a\^(\d+)\s*\}$")
_ROWTAIL_RE = re.compile(r"^\{\s*b\^(\d+)\s*a\^\(\s*(\d+)\s*\+\s*(\d+)\s*t\s*\)\s*\}$")
_COLTAIL_RE = re.compile(r"^\{\s*b\^\(\s*(\d+)\s*\+\s*(\d+)\s*t\s*\)\s*a\^(\d+)\s*\}$")


def _format_atom(atom: Atom) -> str:
    if isinstance(atom, Single):
        return f"{{b^{atom.element.k} a^{atom.element.l}}}"
    if isinstance(atom, RowTail):
        return f"{{b^{atom.row} a^({atom.base}+{atom.step}t)}}"
    return f"{{b^({atom.base}+{atom.step}t) a^{atom.col}}}"


def format_symset(s: SymSet) -> str:
    if not s.atoms:
        return "∅"
    return " ∪ ".join(_format_atom(a) for a in s.atoms)


def _parse_atom(text: str) -> Atom:
    text = text.strip()
    m = _SINGLE_RE.match(text)
    if m:
        return Single(BicyclicElement(int(m.group(1)), int(m.group(2))))
    m = _ROWTAIL_RE.match(text)
    if m:
        return RowTail(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    m = _COLTAIL_RE.match(text)
    if m:
        return ColTail(int(m.group(3)), int(m.group(1)), int(m.group(2)))
    raise ValueError(f"cannot parse atom {text!r}")


def parse_symset(text: str) -> SymSet:
    """Parse the printed form; '∅' or '{}' denote the empty set, '∪' or '|' join atoms."""
    body = text.strip()
    if body in ("∅", "{}", ""):
        return EMPTY
    parts = re.split(r"[∪|]", body)
    return canonicalize(SymSet(tuple(_parse_atom(p) for p in parts)))


def symset_to_records(s: SymSet) -> list:
    records = []
    for atom in s.atoms:
        if isinstance(atom, Single):
            records.append({"type": "single", "k": atom.element.k, "l": atom.element.l})
        elif isinstance(atom, RowTail):
            records.append({"type": "row_tail", "row": atom.row, "base": atom.base, "step": atom.step})
        else:
            records.append({"type": "col_tail", "col": atom.col, "base": atom.base, "step": atom.step})
    return records


def symset_from_records(records: list) -> SymSet:
    atoms = []
    for rec in records:
        kind = rec.get("type")
        if kind == "single":
            atoms.append(Single(BicyclicElement(rec["k"], rec["l"])))
        elif kind == "row_tail":
            atoms.append(RowTail(rec["row"], rec["base"], rec["step"]))
        elif kind == "col_tail":
            atoms.append(ColTail(rec["col"], rec["base"], rec["step"]))
        else:
            raise ValueError(f"unknown atom record type {kind!r}")
    return canonicalize(SymSet(tuple(atoms)))
