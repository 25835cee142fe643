"""Generalized Reidemeister moves on Gauss diagrams.

The engine implements the generating set: four RI variants (sign x
direction), four RII variants (crossed/nested pattern x direction,
always one positive and one negative chord pointing the same way), and
the single all-positive RIII move.

Arc addressing for insertions: arc k is the gap before endpoint
position k (equivalently, after position k-1); arc 0 precedes position
0.  The zero-crossing unknot has the single arc 0.  Every move returns
a fresh diagram with endpoint positions renumbered to 0..2n'-1.

The RIII pattern: three positive arrows P, Q, R whose six endpoints
form three cyclically-adjacent position pairs

    (tail P, tail Q)   (head P, tail R)   (head Q, head R)

in those within-pair orders (or all three reversed, which is the other
side of the same move); applying the move swaps the two positions
inside each pair.  This is the Gauss-diagram shadow of sliding a strand
across a positive crossing of the other two; the concrete pattern is
pinned by the requirement that homset cardinality and weight sums be
preserved on fuzz corpora (see the move-invariance tests).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import PreconditionError
from .gauss import GaussDiagram, make_diagram

__all__ = [
    "MoveSpec",
    "apply_move",
    "applicable_moves",
    "random_move_walk",
    "RI_INSERT", "RI_REMOVE", "RII_INSERT", "RII_REMOVE", "RIII",
]

RI_INSERT = "RI_insert"
RI_REMOVE = "RI_remove"
RII_INSERT = "RII_insert"
RII_REMOVE = "RII_remove"
RIII = "RIII"

KINDS = (RI_INSERT, RI_REMOVE, RII_INSERT, RII_REMOVE, RIII)


@dataclass(frozen=True)
class MoveSpec:
    """One move application.

    params per kind:
      RI_insert:  arc, sign (+-1), tail_first (bool)
      RI_remove:  arrow (index)
      RII_insert: arc_tails, arc_heads, crossed (bool)
      RII_remove: arrows (pair of indices)
      RIII:       arrows (triple of indices)
    """

    kind: str
    params: dict = field(default_factory=dict)


def _check_arc(d, arc):
    arcs = 2 * d.n if d.n else 1
    if not 0 <= arc < arcs:
        raise PreconditionError(f"arc {arc} outside 0..{arcs - 1}")


def _adjacent(p, q, m):
    """q immediately follows p on a circle of m positions."""
    return (p + 1) % m == q


def _ri_insert(d, arc, sign, tail_first):
    _check_arc(d, arc)
    if sign not in (1, -1):
        raise PreconditionError(f"bad sign {sign!r}")
    arrows = [(a.tail + 2 * (a.tail >= arc), a.head + 2 * (a.head >= arc), a.sign)
              for a in d.arrows]
    if tail_first:
        arrows.append((arc, arc + 1, sign))
    else:
        arrows.append((arc + 1, arc, sign))
    return make_diagram(arrows)


def _ri_remove(d, i):
    if not 0 <= i < d.n:
        raise PreconditionError(f"no arrow {i}")
    a = d.arrows[i]
    m = 2 * d.n
    if not (_adjacent(a.tail, a.head, m) or _adjacent(a.head, a.tail, m)):
        raise PreconditionError("arrow endpoints are not cyclically adjacent")
    gone = {a.tail, a.head}
    arrows = [(b.tail - sum(g < b.tail for g in gone),
               b.head - sum(g < b.head for g in gone),
               b.sign)
              for j, b in enumerate(d.arrows) if j != i]
    return make_diagram(arrows)


def _rii_insert(d, arc_tails, arc_heads, crossed):
    _check_arc(d, arc_tails)
    _check_arc(d, arc_heads)
    a, b = arc_tails, arc_heads

    def shift(p):
        return p + 2 * (p >= a) + 2 * (p >= b)

    arrows = [(shift(x.tail), shift(x.head), x.sign) for x in d.arrows]
    if a == b:
        t1, t2, h1, h2 = a, a + 1, a + 2, a + 3
    else:
        t1 = a + 2 * (b < a)
        t2 = t1 + 1
        h1 = b + 2 * (a <= b)
        h2 = h1 + 1
    if crossed:
        arrows.append((t1, h1, 1))
        arrows.append((t2, h2, -1))
    else:
        arrows.append((t1, h2, 1))
        arrows.append((t2, h1, -1))
    return make_diagram(arrows)


def _rii_pair_matches(d, i, j):
    """True iff arrows i, j form a removable RII pair."""
    a, b = d.arrows[i], d.arrows[j]
    m = 2 * d.n
    if a.sign == b.sign:
        return False
    tails_adj = _adjacent(a.tail, b.tail, m) or _adjacent(b.tail, a.tail, m)
    heads_adj = _adjacent(a.head, b.head, m) or _adjacent(b.head, a.head, m)
    return tails_adj and heads_adj


def _rii_remove(d, pair):
    i, j = pair
    if i == j or not (0 <= i < d.n and 0 <= j < d.n):
        raise PreconditionError(f"bad arrow pair {pair!r}")
    if not _rii_pair_matches(d, i, j):
        raise PreconditionError(
            "arrows do not form an opposite-sign parallel pair with "
            "adjacent tails and adjacent heads")
    a, b = d.arrows[i], d.arrows[j]
    gone = sorted((a.tail, a.head, b.tail, b.head))
    arrows = [(x.tail - sum(g < x.tail for g in gone),
               x.head - sum(g < x.head for g in gone),
               x.sign)
              for k, x in enumerate(d.arrows) if k not in (i, j)]
    return make_diagram(arrows)


def _riii_match(d, triple):
    """Match the RIII pattern on an arrow triple.

    Returns the three position pairs to swap, or None.  Both sides of
    the move are recognized: the within-pair orders are either
    (tP,tQ), (hP,tR), (hQ,hR) or all three reversed.
    """
    m = 2 * d.n
    arrows = [d.arrows[i] for i in triple]
    if any(a.sign != 1 for a in arrows):
        return None
    ends = {}
    for a in arrows:
        ends[a.tail] = (a, "t")
        ends[a.head] = (a, "h")
    # find the three adjacent position pairs among the six endpoints
    positions = sorted(ends)
    pairs = []
    used = set()
    for p in positions:
        if p in used:
            continue
        q = (p + 1) % m
        if q in ends and q not in used:
            pairs.append((p, q))
            used.add(p)
            used.add(q)
    if len(pairs) != 3:
        return None
    by_type = {}
    for p, q in pairs:
        (a1, k1), (a2, k2) = ends[p], ends[q]
        if a1 is a2:
            return None
        by_type.setdefault(k1 + k2, []).append((p, q))
    for first, mixed in (("tt", "ht"), ("tt", "th")):
        if first in by_type and mixed in by_type and len(by_type[first]) == 1 \
                and len(by_type[mixed]) == 1 and "hh" in by_type:
            (p1, q1), = by_type[first]
            (p2, q2), = by_type[mixed]
            (p3, q3), = by_type["hh"]
            if mixed == "ht":
                # side L: (tP, tQ), (hP, tR), (hQ, hR)
                P, Q = ends[p1][0], ends[q1][0]
                ok = (ends[p2][0] is P and ends[p3][0] is Q
                      and ends[q2][0] is ends[q3][0])
            else:
                # side R: (tQ, tP), (tR, hP), (hR, hQ)
                Q, P = ends[p1][0], ends[q1][0]
                ok = (ends[q2][0] is P and ends[q3][0] is Q
                      and ends[p2][0] is ends[p3][0])
            if ok:
                return ((p1, q1), (p2, q2), (p3, q3))
    return None


def _riii(d, triple):
    if len(set(triple)) != 3 or not all(0 <= i < d.n for i in triple):
        raise PreconditionError(f"bad arrow triple {triple!r}")
    swap_pairs = _riii_match(d, triple)
    if swap_pairs is None:
        raise PreconditionError(
            "arrows do not form the all-positive RIII configuration")
    perm = {}
    for p, q in swap_pairs:
        perm[p] = q
        perm[q] = p
    arrows = [(perm.get(a.tail, a.tail), perm.get(a.head, a.head), a.sign)
              for a in d.arrows]
    return make_diagram(arrows)


def apply_move(d, move):
    """Apply a MoveSpec, returning the moved diagram.

    Raises PreconditionError naming the failed geometric condition.
    """
    kind, p = move.kind, move.params
    if kind == RI_INSERT:
        return _ri_insert(d, p["arc"], p["sign"], p["tail_first"])
    if kind == RI_REMOVE:
        return _ri_remove(d, p["arrow"])
    if kind == RII_INSERT:
        return _rii_insert(d, p["arc_tails"], p["arc_heads"], p["crossed"])
    if kind == RII_REMOVE:
        return _rii_remove(d, tuple(p["arrows"]))
    if kind == RIII:
        return _riii(d, tuple(p["arrows"]))
    raise PreconditionError(f"unknown move kind {kind!r}")


def applicable_moves(d, kind):
    """All MoveSpecs of the given kind applicable to d, in a fixed order."""
    arcs = range(2 * d.n if d.n else 1)
    out = []
    if kind == RI_INSERT:
        for arc in arcs:
            for sign in (1, -1):
                for tail_first in (True, False):
                    out.append(MoveSpec(RI_INSERT, {
                        "arc": arc, "sign": sign, "tail_first": tail_first}))
    elif kind == RI_REMOVE:
        m = 2 * d.n
        for i, a in enumerate(d.arrows):
            if _adjacent(a.tail, a.head, m) or _adjacent(a.head, a.tail, m):
                out.append(MoveSpec(RI_REMOVE, {"arrow": i}))
    elif kind == RII_INSERT:
        for a in arcs:
            for b in arcs:
                for crossed in (True, False):
                    out.append(MoveSpec(RII_INSERT, {
                        "arc_tails": a, "arc_heads": b, "crossed": crossed}))
    elif kind == RII_REMOVE:
        for i in range(d.n):
            for j in range(i + 1, d.n):
                if _rii_pair_matches(d, i, j):
                    out.append(MoveSpec(RII_REMOVE, {"arrows": (i, j)}))
    elif kind == RIII:
        for i in range(d.n):
            for j in range(i + 1, d.n):
                for k in range(j + 1, d.n):
                    if _riii_match(d, (i, j, k)) is not None:
                        out.append(MoveSpec(RIII, {"arrows": (i, j, k)}))
    else:
        raise PreconditionError(f"unknown move kind {kind!r}")
    return out


def random_move_walk(d, steps, seed):
    """Apply ``steps`` uniformly chosen applicable moves, seeded.

    Each step draws a move kind uniformly; kinds with no applicable
    parameterization are redrawn (insertions are always applicable, so
    this terminates).  Deterministic for a fixed seed.
    """
    if steps < 0:
        raise PreconditionError("steps must be >= 0")
    rng = random.Random(seed)
    for _ in range(steps):
        while True:
            kind = rng.choice(KINDS)
            candidates = applicable_moves(d, kind)
            if candidates:
                break
        d = apply_move(d, rng.choice(candidates))
    return d
