"""Gauss diagrams and signed Gauss codes.

A Gauss diagram is a circle with n signed, directed chords (arrows).
Each arrow records one classical crossing of a virtual knot diagram;
the arrow points from the over passage (tail, written O in the code) to
the under passage (head, written U), and carries the crossing sign.
Endpoint positions are the integers 0..2n-1 in circle traversal order
from an arbitrary base point; base-point independence is a property of
the invariants built on top, not of the data structure.

The text format is the signed Gauss code: 2n tokens ``[OU]<label>[+-]``,
e.g. ``O1+O2+U1+U2+``.  The empty string encodes the zero-crossing
unknot diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CodeSyntaxError, DiagramError, LabelError, SignMismatch

__all__ = [
    "Arrow",
    "GaussDiagram",
    "parse_gauss_code",
    "serialize_gauss_code",
    "arrows_cross",
    "crossing_pairs",
    "rotate",
]

_TOKEN = re.compile(r"([OU])(\d+)([+-])")


@dataclass(frozen=True)
class Arrow:
    """One chord: tail = over passage, head = under passage, sign = +-1."""

    tail: int
    head: int
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    """An immutable Gauss diagram with arrows sorted by tail position."""

    n: int
    arrows: tuple

    def __post_init__(self):
        if self.n != len(self.arrows):
            raise DiagramError("arrow count does not match n")
        seen = set()
        for a in self.arrows:
            if a.tail == a.head:
                raise DiagramError("arrow tail and head coincide")
            if a.sign not in (1, -1):
                raise DiagramError(f"bad sign {a.sign!r}")
            seen.add(a.tail)
            seen.add(a.head)
        if seen != set(range(2 * self.n)):
            raise DiagramError("endpoint positions are not exactly 0..2n-1")

    @property
    def segments(self):
        """Number of circle segments receiving a color (1 when n == 0)."""
        return 2 * self.n if self.n else 1


def make_diagram(arrows):
    """Build a GaussDiagram from (tail, head, sign) triples, sorting arrows."""
    arrows = tuple(sorted((Arrow(t, h, s) for (t, h, s) in arrows),
                          key=lambda a: a.tail))
    return GaussDiagram(len(arrows), arrows)


def parse_gauss_code(text):
    """Parse a signed Gauss code into a GaussDiagram.

    Whitespace is ignored.  Each crossing label must appear exactly once
    as O and once as U, with equal signs.  The token at reading position
    p contributes p as the tail (O) or head (U) of its arrow.
    """
    stripped = "".join(text.split())
    pos = 0
    tokens = []
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            raise CodeSyntaxError(f"bad token at character {pos}: {stripped[pos:pos + 8]!r}")
        tokens.append((m.group(1), m.group(2), 1 if m.group(3) == "+" else -1))
        pos = m.end()

    occurrences = {}
    for p, (ou, label, sign) in enumerate(tokens):
        occurrences.setdefault(label, []).append((p, ou, sign))

    arrows = []
    for label, occ in occurrences.items():
        if len(occ) != 2 or {occ[0][1], occ[1][1]} != {"O", "U"}:
            raise LabelError(
                f"label {label} must appear exactly once as O and once as U")
        if occ[0][2] != occ[1][2]:
            raise SignMismatch(f"label {label} has inconsistent signs")
        tail = occ[0][0] if occ[0][1] == "O" else occ[1][0]
        head = occ[0][0] if occ[0][1] == "U" else occ[1][0]
        arrows.append((tail, head, occ[0][2]))

    return make_diagram(arrows)


def serialize_gauss_code(d):
    """Serialize to canonical form: labels 1..n by first occurrence, no separators."""
    at = {}
    for a in d.arrows:
        at[a.tail] = ("O", a)
        at[a.head] = ("U", a)
    labels = {}
    out = []
    for p in range(2 * d.n):
        ou, a = at[p]
        if a not in labels:
            labels[a] = len(labels) + 1
        out.append(f"{ou}{labels[a]}{'+' if a.sign == 1 else '-'}")
    return "".join(out)


def arrows_cross(d, i, j):
    """True iff arrows i and j interleave as chords of the circle.

    Equivalently: exactly one endpoint of arrow j lies strictly inside
    the cyclic interval from arrow i's tail to its head.
    """
    if i == j:
        raise IndexError("arrows_cross needs two distinct arrows")
    a, b = d.arrows[i], d.arrows[j]

    def inside(p):
        # strictly between a.tail and a.head going forward around the circle
        if a.tail < a.head:
            return a.tail < p < a.head
        return p > a.tail or p < a.head

    return inside(b.tail) != inside(b.head)


def crossing_pairs(d):
    """All unordered crossing pairs (i, j) with i < j."""
    return [(i, j)
            for i in range(d.n)
            for j in range(i + 1, d.n)
            if arrows_cross(d, i, j)]


def rotate(d, k):
    """Move the base point: position p becomes (p - k) mod 2n."""
    if d.n == 0:
        return d
    m = 2 * d.n
    return make_diagram(((a.tail - k) % m, (a.head - k) % m, a.sign)
                        for a in d.arrows)
