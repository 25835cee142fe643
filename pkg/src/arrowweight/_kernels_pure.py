"""Pure-Python reference kernels.

These are the hot inner loops of the package: the segment-coloring
backtracker and the arrow-weight axiom verifier.  A compiled Cython
twin (``_kernels_c``) implements exactly the same contract; the
dispatcher in :mod:`arrowweight.kernels` picks one at import time.
Both must produce identical results in identical order, which the test
suite checks.

Data layout shared by both implementations:

* operation tables are flat lists of length K*K, indexed ``x * K + y``;
* a coloring plan is a per-position schedule of constraint equations
  ``s[xs] == op(s[ys], s[zs])`` encoded as five flat int arrays (kind,
  xs, ys, zs, op) plus an offsets array; ``kind`` is 0 when the equation
  determines s[p] directly (xs == p), 1 when it determines it through an
  inverse lookup (ys == p), else 2 (pure check); ``op`` is 0 for under,
  1 for over;
* a weight tensor is a flat list of length n**4, indexed
  ``((x * n + y) * n + k) * n + l``.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def enumerate_colorings_kernel(K, nseg, offsets, kinds, xs, ys, zs, ops,
                               under, over, inv_under, inv_over):
    """All segment colorings satisfying the plan, lexicographically.

    Returns a list of nseg-tuples of ints in 0..K-1.
    """
    tables = (under, over)
    inverses = (inv_under, inv_over)
    colors = [0] * nseg
    out = []

    # candidate buffer per depth: values still to try, as (list, index)
    cand_lists = [None] * nseg
    cand_idx = [0] * nseg

    def candidates_at(p):
        forced = -1
        for e in range(offsets[p], offsets[p + 1]):
            kind = kinds[e]
            if kind == 0:
                v = tables[ops[e]][colors[ys[e]] * K + colors[zs[e]]]
            elif kind == 1:
                v = inverses[ops[e]][colors[xs[e]] * K + colors[zs[e]]]
            else:
                continue
            if forced == -1:
                forced = v
            elif forced != v:
                return ()
        if forced >= 0:
            return (forced,)
        return range(K)

    def checks_pass(p):
        for e in range(offsets[p], offsets[p + 1]):
            if colors[xs[e]] != tables[ops[e]][colors[ys[e]] * K + colors[zs[e]]]:
                return False
        return True

    depth = 0
    cand_lists[0] = candidates_at(0)
    cand_idx[0] = 0
    while depth >= 0:
        cl = cand_lists[depth]
        i = cand_idx[depth]
        if i >= len(cl):
            depth -= 1
            continue
        cand_idx[depth] = i + 1
        colors[depth] = cl[i]
        if not checks_pass(depth):
            continue
        if depth == nseg - 1:
            out.append(tuple(colors))
            continue
        depth += 1
        cand_lists[depth] = candidates_at(depth)
        cand_idx[depth] = 0
    return out


def verify_weight_kernel(n, m, under, over, tensor):
    """First violated arrow-weight axiom, or None.

    Scan order is deterministic: axiom (i) over all (x, y, u, v), then
    (ii) over (x, y), then (iii) and (iv) over (x, y, z), each
    lexicographic.  Returns (axiom_tag, witness) with a 0-indexed
    witness tuple.
    """
    n2 = n * n
    n3 = n2 * n

    def t(x, y, k, l):
        return tensor[((x * n + y) * n + k) * n + l]

    for x in range(n):
        for y in range(n):
            for u in range(n):
                for v in range(n):
                    if t(x, y, u, v) != t(u, v, x, y):
                        return ("i", (x, y, u, v))
    for x in range(n):
        for y in range(n):
            if t(x, y, x, y) % m != 0:
                return ("ii", (x, y))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = t(x, y, y, z)
                rhs = (t(x, z, over[y * n + x], over[z * n + x])
                       + t(x, z, under[x * n + z], under[y * n + z]))
                if (lhs - rhs) % m != 0:
                    return ("iii", (x, y, z))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = t(under[x * n + z], under[y * n + z],
                        over[y * n + x], over[z * n + x])
                rhs = (t(x, y, under[x * n + y], over[z * n + y])
                       + t(y, z, under[x * n + y], over[z * n + y]))
                if (lhs - rhs) % m != 0:
                    return ("iv", (x, y, z))
    return None
