"""Arrow weights: 4-tensors over Z_m and their solution spaces.

An arrow weight on a biquandle X assigns a residue phi((x,y),(u,v)) to
every ordered pair of colored-arrow pairs, subject to four axioms that
make the signed sum over arrow crossings a knot invariant:

  (i)   phi((x,y),(u,v)) == phi((u,v),(x,y))
  (ii)  phi((x,y),(x,y)) == 0
  (iii) phi((x,y),(y,z)) == phi((x,z),(y over x, z over x))
                            + phi((x,z),(x under z, y under z))
  (iv)  phi((x under z, y under z),(y over x, z over x))
            == phi((x,y),(x under y, z over y))
               + phi((y,z),(x under y, z over y))

The tensor layout follows the matrix-of-matrices convention:
phi((i,j),(k,l)) is the row-k column-l entry of the matrix in row i
column j, and the JSON form nests in the same i, j, k, l order with
1-indexed semantics.

Since every axiom is Z-linear in phi, the set of arrow weights for a
fixed biquandle and modulus is a module over Z_m; solve_weight_space
computes it exactly by diagonalizing the integer constraint matrix.
Coefficients are restricted to cyclic groups Z_m.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import (DimensionError, ModulusError, TooManySolutions,
                     WeightAxiomViolation)
from .kernels import verify_weight_kernel
from .snf import diagonalize

__all__ = [
    "ArrowWeight",
    "WeightSpace",
    "verify_weight",
    "solve_weight_space",
    "enumerate_weights",
    "weight_from_json",
    "weight_to_json",
]


@dataclass(frozen=True)
class ArrowWeight:
    """A 4-tensor of residues mod m on an n-element biquandle.

    ``tensor`` is flat, indexed ((x*n + y)*n + k)*n + l with 0-indexed
    elements; entries are reduced to 0..m-1.
    """

    n: int
    m: int
    tensor: tuple

    def lookup(self, pair1, pair2):
        """phi(pair1, pair2) for 0-indexed pairs."""
        x, y = pair1
        u, v = pair2
        n = self.n
        for e in (x, y, u, v):
            if not 0 <= e < n:
                raise IndexError(f"element {e} outside 0..{n - 1}")
        return self.tensor[((x * n + y) * n + u) * n + v]


def make_weight(n, m, flat):
    if m < 1:
        raise ModulusError(f"modulus must be >= 1, got {m}")
    flat = tuple(v % m for v in flat)
    if len(flat) != n ** 4:
        raise DimensionError(
            f"tensor has {len(flat)} entries, expected {n ** 4}")
    return ArrowWeight(n, m, flat)


def verify_weight(b, w, raise_on_failure=False):
    """Check axioms (i)-(iv) of w over the biquandle b.

    Returns True, or the first violation as a WeightAxiomViolation
    value (raised instead when raise_on_failure is set).  The scan
    order is fixed -- axiom (i) then (ii), (iii), (iv), lexicographic
    witnesses -- so failures are reproducible.
    """
    if w.n != b.n:
        raise DimensionError(
            f"tensor is over {w.n} elements, biquandle has {b.n}")
    if w.m < 1:
        raise ModulusError(f"modulus must be >= 1, got {w.m}")
    flat_under = [v for row in b.under_table for v in row]
    flat_over = [v for row in b.over_table for v in row]
    failure = verify_weight_kernel(b.n, w.m, flat_under, flat_over,
                                   list(w.tensor))
    if failure is None:
        return True
    axiom, witness = failure
    violation = WeightAxiomViolation(axiom, tuple(v + 1 for v in witness))
    if raise_on_failure:
        raise violation
    return violation


def axiom_instance_count(n):
    """Number of axiom instances verify_weight evaluates: n^4 + n^2 + 2n^3."""
    return n ** 4 + n ** 2 + 2 * n ** 3


def _constraint_rows(b):
    """One integer row per axiom instance, in verify_weight's scan order.

    Redundant instances (axiom (i) listed both ways, coincidences) are
    kept; the solver tolerates them.
    """
    n = b.n
    under, over = b.under_table, b.over_table
    N = n ** 4

    def idx(x, y, k, l):
        return ((x * n + y) * n + k) * n + l

    rows = []

    def row(*terms):
        r = [0] * N
        for coeff, i in terms:
            r[i] += coeff
        rows.append(r)

    for x, y, u, v in product(range(n), repeat=4):
        row((1, idx(x, y, u, v)), (-1, idx(u, v, x, y)))
    for x, y in product(range(n), repeat=2):
        row((1, idx(x, y, x, y)))
    for x, y, z in product(range(n), repeat=3):
        row((1, idx(x, y, y, z)),
            (-1, idx(x, z, over[y][x], over[z][x])),
            (-1, idx(x, z, under[x][z], under[y][z])))
    for x, y, z in product(range(n), repeat=3):
        row((1, idx(under[x][z], under[y][z], over[y][x], over[z][x])),
            (-1, idx(x, y, under[x][y], over[z][y])),
            (-1, idx(y, z, under[x][y], over[z][y])))
    return rows


@dataclass(frozen=True)
class WeightSpace:
    """The full solution module of the axiom system over Z_m.

    ``generators`` is a tuple of ArrowWeight values and ``orders`` the
    matching additive orders; every solution is a unique Z-linear
    combination sum(c_i * g_i) with 0 <= c_i < orders[i], so ``count``
    equals the product of the orders.  ``diag`` and ``rinv`` retain the
    diagonalization for membership tests.
    """

    n: int
    m: int
    generators: tuple
    orders: tuple
    diag: tuple
    rinv: tuple

    @property
    def count(self):
        c = 1
        for o in self.orders:
            c *= o
        return c

    def contains(self, w):
        """Membership via the linear solve (not via axiom re-verification)."""
        if w.n != self.n or w.m != self.m:
            return False
        N = self.n ** 4
        for i in range(N):
            s = 0
            ri = self.rinv[i]
            for j in range(N):
                s += ri[j] * w.tensor[j]
            if (self.diag[i] * s) % self.m:
                return False
        return True


def solve_weight_space(b, m):
    """All arrow weights over Z_m for biquandle b, as a WeightSpace.

    Builds one linear constraint per axiom instance and diagonalizes
    the integer matrix; the enumerated span is exactly the solution
    set.  Requires m >= 2 (m = 1 leaves no room for coefficients).
    """
    if m < 2:
        raise ModulusError(f"modulus must be >= 2, got {m}")
    n = b.n
    N = n ** 4
    diag, R, Rinv = diagonalize(_constraint_rows(b), N)

    generators = []
    orders = []
    from math import gcd
    for i in range(N):
        g = gcd(diag[i], m)  # gcd(0, m) == m: unconstrained direction
        if g == 1:
            continue
        scale = m // g
        column = tuple((scale * R[r][i]) % m for r in range(N))
        generators.append(make_weight(n, m, column))
        orders.append(g)

    return WeightSpace(n, m, tuple(generators), tuple(orders),
                       tuple(diag), tuple(tuple(r) for r in Rinv))


def enumerate_weights(ws, limit=None, truncate=False):
    """Distinct solutions of ws in deterministic order.

    Coefficient tuples run in itertools.product order over the
    generator orders.  When the solution count exceeds ``limit``,
    raises TooManySolutions unless ``truncate`` is set.
    """
    if limit is not None and ws.count > limit and not truncate:
        raise TooManySolutions(
            f"weight space holds {ws.count} solutions, limit is {limit}")
    N = ws.n ** 4
    gens = [g.tensor for g in ws.generators]
    out = []
    for coeffs in product(*(range(o) for o in ws.orders)):
        flat = [0] * N
        for c, g in zip(coeffs, gens):
            if c:
                for j in range(N):
                    flat[j] += c * g[j]
        out.append(make_weight(ws.n, ws.m, flat))
        if limit is not None and len(out) >= limit:
            break
    return out


def weight_from_json(text):
    """Parse the JSON weight format (nested i, j, k, l; modulus m)."""
    data = json.loads(text)
    try:
        m = data["m"]
        tensor = data["tensor"]
    except (KeyError, TypeError) as exc:
        raise DimensionError(f"missing weight field: {exc}") from exc
    n = len(tensor)
    flat = []
    try:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        flat.append(int(tensor[i][j][k][l]))
    except (IndexError, TypeError) as exc:
        raise DimensionError("tensor is not a regular n x n x n x n nest") from exc
    return make_weight(n, m, flat)


def weight_to_json(w):
    """Serialize to the nested JSON layout."""
    n = w.n
    nest = [[[[w.lookup((i, j), (k, l)) for l in range(n)]
              for k in range(n)] for j in range(n)] for i in range(n)]
    return json.dumps({"m": w.m, "tensor": nest}, sort_keys=True)
