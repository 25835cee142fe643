"""Biquandle colorings of Gauss diagrams (the homset, concretely).

A coloring assigns a biquandle element to each of the 2n circle
segments; segment ``s[j]`` spans the arc between endpoint positions j
and j+1 (mod 2n).  At every arrow the two constraint equations hold
(indices mod 2n):

  positive arrow, tail t, head h:
      s[t] == s[t-1] over s[h-1]      (over passage)
      s[h] == s[h-1] under s[t-1]     (under passage)
  negative arrow:
      s[t-1] == s[t] over s[h]
      s[h-1] == s[h] under s[t]

so a positive arrow carries the ordered color pair
(x, y) = (s[h-1], s[t-1]) -- under-incoming first -- and a negative
arrow the pair (s[h], s[t]).  For n == 0 a coloring is a single color
for the whole circle.

Enumeration backtracks over segments in circular order, forcing a
segment's color through the table or an inverse lookup as soon as an
arrow constraint determines it; colorings come out in lexicographic
order of their segment colors.  The naive |X|^(2n) filter is retained
(:func:`enumerate_colorings_brute`) as the independent test oracle.
"""

from __future__ import annotations

from itertools import product

from .errors import InvalidColoring, SizeError
from .kernels import enumerate_colorings_kernel

__all__ = [
    "check_coloring",
    "enumerate_colorings",
    "enumerate_colorings_brute",
    "extract_pairs",
]


def _constraints(d):
    """Yield (xs, ys, zs, op) meaning s[xs] == op(s[ys], s[zs]); op 0=under, 1=over."""
    M = 2 * d.n
    for a in d.arrows:
        t, h = a.tail, a.head
        if a.sign > 0:
            yield (t, (t - 1) % M, (h - 1) % M, 1)
            yield (h, (h - 1) % M, (t - 1) % M, 0)
        else:
            yield ((t - 1) % M, t, h, 1)
            yield ((h - 1) % M, h, t, 0)


def check_coloring(d, b, c):
    """True iff c satisfies every arrow constraint of d over b."""
    c = tuple(c)
    if len(c) != d.segments:
        raise SizeError(f"expected {d.segments} segment colors, got {len(c)}")
    if d.n == 0:
        return True
    tables = (b.under_table, b.over_table)
    return all(c[xs] == tables[op][c[ys]][c[zs]]
               for xs, ys, zs, op in _constraints(d))


def _build_plan(d):
    """Flatten the constraint schedule for the kernels.

    Equations are grouped by the largest segment index they mention, so
    the backtracker can evaluate each as soon as all its segments are
    assigned.
    """
    nseg = 2 * d.n
    sched = [[] for _ in range(nseg)]
    for xs, ys, zs, op in _constraints(d):
        p = max(xs, ys, zs)
        if xs == p and ys != p and zs != p:
            kind = 0  # forces s[p] directly
        elif ys == p and xs != p and zs != p:
            kind = 1  # forces s[p] through an inverse lookup
        else:
            kind = 2  # check only
        sched[p].append((kind, xs, ys, zs, op))

    offsets, kinds, xss, yss, zss, opss = [0], [], [], [], [], []
    for eqs in sched:
        for kind, xs, ys, zs, op in eqs:
            kinds.append(kind)
            xss.append(xs)
            yss.append(ys)
            zss.append(zs)
            opss.append(op)
        offsets.append(len(kinds))
    return offsets, kinds, xss, yss, zss, opss


def _flat(table):
    return [v for row in table for v in row]


def enumerate_colorings(d, b):
    """Every valid coloring of d by b, exactly once, lexicographically.

    The length of the result is the biquandle counting invariant.
    """
    if d.n == 0:
        return [(x,) for x in b.elements]
    offsets, kinds, xss, yss, zss, opss = _build_plan(d)
    return enumerate_colorings_kernel(
        b.n, 2 * d.n, offsets, kinds, xss, yss, zss, opss,
        _flat(b.under_table), _flat(b.over_table),
        _flat(b._inv_under), _flat(b._inv_over))


def enumerate_colorings_brute(d, b):
    """Oracle: filter all |X|^(2n) assignments through check_coloring."""
    return [c for c in product(b.elements, repeat=d.segments)
            if check_coloring(d, b, c)]


def extract_pairs(d, b, c):
    """Per-arrow (x, y, sign) triples of a valid coloring.

    Positive arrow: (x, y) = (s[h-1], s[t-1]); negative: (s[h], s[t]).
    """
    c = tuple(c)
    if not check_coloring(d, b, c):
        raise InvalidColoring("coloring violates an arrow constraint")
    M = 2 * d.n
    out = []
    for a in d.arrows:
        if a.sign > 0:
            out.append((c[(a.head - 1) % M], c[(a.tail - 1) % M], 1))
        else:
            out.append((c[a.head], c[a.tail], -1))
    return out
