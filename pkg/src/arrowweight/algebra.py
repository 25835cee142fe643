"""Finite biquandles: validation, operations, inverse lookups, JSON I/O.

A biquandle here is a finite set {0..n-1} with two binary operations,
written ``x under y`` (the under-strand output) and ``x over y`` (the
over-strand output), subject to three axioms:

  (i)   x under x == x over x for every x;
  (ii)  for each x the maps y -> y over x and y -> y under x are
        permutations, and (x, y) -> (y over x, x under y) is a bijection
        of pairs;
  (iii) the three exchange laws hold for every triple (x, y, z):
          (x under y) under (z under y) == (x under z) under (y over z)
          (x under y) over  (z under y) == (x over z)  under (y over z)
          (x over y)  over  (z over y)  == (x over z)  over  (y under z)

Elements are stored 0-indexed; all I/O (JSON files, rendered tables,
error witnesses) is 1-indexed so that published operation tables can be
transcribed verbatim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import AxiomViolation, RangeError

__all__ = [
    "Biquandle",
    "validate_biquandle",
    "biquandle_from_json",
    "biquandle_to_json",
]


@dataclass(frozen=True)
class Biquandle:
    """A validated finite biquandle.

    ``under_table[x][y]`` is x under y and ``over_table[x][y]`` is
    x over y, 0-indexed.  Instances are immutable and safe to share
    across threads; construct them through :func:`validate_biquandle`.
    """

    n: int
    under_table: tuple
    over_table: tuple
    # inverse lookups precomputed at validation time: inv_under[y][x] is
    # the unique z with z under x == y, and likewise for inv_over.
    _inv_under: tuple = field(repr=False, default=())
    _inv_over: tuple = field(repr=False, default=())

    def op_under(self, x, y):
        """Table lookup x under y."""
        return self.under_table[x][y]

    def op_over(self, x, y):
        """Table lookup x over y."""
        return self.over_table[x][y]

    def inv_under(self, y, x):
        """The unique z with z under x == y (exists by axiom ii)."""
        return self._inv_under[y][x]

    def inv_over(self, y, x):
        """The unique z with z over x == y (exists by axiom ii)."""
        return self._inv_over[y][x]

    @property
    def elements(self):
        return range(self.n)


def _check_tables_shape(under, over):
    n = len(under)
    if n == 0 or len(over) != n:
        raise RangeError("tables must be square, non-empty and equal-sized")
    for table in (under, over):
        for row in table:
            if len(row) != n:
                raise RangeError("tables must be square")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise RangeError(
                        f"table entry {v!r} outside 0..{n - 1}")
    return n


def validate_biquandle(under, over):
    """Validate two n x n operation tables and return a Biquandle.

    Tables are 0-indexed sequences of rows (row = left operand).  The
    first violated axiom is reported deterministically: axiom (i), then
    (ii), then (iii), with lexicographically smallest witness; witnesses
    are rendered 1-indexed.

    Raises RangeError for malformed tables and AxiomViolation with the
    axiom tag and witness otherwise.
    """
    n = _check_tables_shape(under, over)

    # axiom (i): the diagonal maps agree
    for x in range(n):
        if under[x][x] != over[x][x]:
            raise AxiomViolation(
                "i", (x + 1,),
                f"{x + 1} under {x + 1} = {under[x][x] + 1} but "
                f"{x + 1} over {x + 1} = {over[x][x] + 1}")

    # axiom (ii), columns: y -> y over x and y -> y under x permute X
    for x in range(n):
        for table, name in ((over, "over"), (under, "under")):
            seen = [False] * n
            for y in range(n):
                seen[table[y][x]] = True
            if not all(seen):
                raise AxiomViolation(
                    "ii", (x + 1,),
                    f"column {x + 1} of the {name} table is not a permutation")

    # axiom (ii), pair map: S(x, y) = (y over x, x under y) injective
    seen_pairs = {}
    for x in range(n):
        for y in range(n):
            image = (over[y][x], under[x][y])
            if image in seen_pairs:
                raise AxiomViolation(
                    "ii", (x + 1, y + 1),
                    f"pair map collides with {tuple(v + 1 for v in seen_pairs[image])}")
            seen_pairs[image] = (x, y)

    # axiom (iii): exchange laws, exhaustively
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if under[under[x][y]][under[z][y]] != under[under[x][z]][over[y][z]]:
                    raise AxiomViolation("iii", (x + 1, y + 1, z + 1),
                                         "first exchange law")
                if over[under[x][y]][under[z][y]] != under[over[x][z]][over[y][z]]:
                    raise AxiomViolation("iii", (x + 1, y + 1, z + 1),
                                         "second exchange law")
                if over[over[x][y]][over[z][y]] != over[over[x][z]][under[y][z]]:
                    raise AxiomViolation("iii", (x + 1, y + 1, z + 1),
                                         "third exchange law")

    inv_under = [[0] * n for _ in range(n)]
    inv_over = [[0] * n for _ in range(n)]
    for x in range(n):
        for z in range(n):
            inv_under[under[z][x]][x] = z
            inv_over[over[z][x]][x] = z

    freeze = lambda t: tuple(tuple(row) for row in t)
    return Biquandle(n, freeze(under), freeze(over),
                     freeze(inv_under), freeze(inv_over))


def biquandle_from_json(text):
    """Parse the JSON biquandle format.

    Format: ``{"n": 2, "under": [[2,2],[1,1]], "over": [[2,2],[1,1]]}``
    with 1-indexed entries, row = left operand, column = right operand.
    """
    data = json.loads(text)
    try:
        n = data["n"]
        under = data["under"]
        over = data["over"]
    except (KeyError, TypeError) as exc:
        raise RangeError(f"missing biquandle field: {exc}") from exc
    if not isinstance(n, int) or len(under) != n or len(over) != n:
        raise RangeError("declared size does not match the tables")

    def shift(table):
        out = []
        for row in table:
            new = []
            for v in row:
                if not isinstance(v, int):
                    raise RangeError(f"non-integer table entry {v!r}")
                new.append(v - 1)
            out.append(new)
        return out

    return validate_biquandle(shift(under), shift(over))


def biquandle_to_json(b):
    """Serialize a Biquandle to the 1-indexed JSON format."""
    lift = lambda t: [[v + 1 for v in row] for row in t]
    return json.dumps(
        {"n": b.n, "under": lift(b.under_table), "over": lift(b.over_table)},
        sort_keys=True)
