"""Integer matrix diagonalization with column-transform tracking.

Brings an integer matrix A to diagonal form D = L A R by unimodular row
and column operations, keeping R and its inverse.  The row transform L
is never needed here: for a homogeneous system A x = 0 (mod m) the
substitution y = R^{-1} x turns the system into D y = 0 (mod m), which
solves coordinate-wise; x = R y maps solutions back.

Arithmetic is exact (Python ints), so intermediate entry growth is
harmless at the sizes this package meets (at most a few hundred rows,
n**4 columns).
"""

from __future__ import annotations

__all__ = ["diagonalize"]


def diagonalize(rows, ncols):
    """Diagonalize the integer matrix given as a list of row lists.

    Returns (diag, R, Rinv) where diag is the length-``ncols`` list of
    diagonal entries of D (zeros beyond the rank, sign-normalized to be
    nonnegative) and R, Rinv are ncols x ncols unimodular integer
    matrices with D = L A R for some unimodular L and Rinv = R^{-1}.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    R = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    Rinv = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_cols(i, j):
        if i == j:
            return
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]
        Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    def addmul_col(j, i, q):
        # col_j -= q * col_i ; Rinv row_i += q * row_j
        if q == 0:
            return
        for row in A:
            row[j] -= q * row[i]
        for row in R:
            row[j] -= q * row[i]
        ri, rj = Rinv[i], Rinv[j]
        for c in range(ncols):
            ri[c] += q * rj[c]

    def negate_col(i):
        for row in A:
            row[i] = -row[i]
        for row in R:
            row[i] = -row[i]
        Rinv[i] = [-v for v in Rinv[i]]

    k = 0
    limit = min(nrows, ncols)
    while k < limit:
        # locate a minimal nonzero pivot in the remaining submatrix
        best = None
        for i in range(k, nrows):
            row = A[i]
            for j in range(k, ncols):
                v = row[j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
                    if abs(v) == 1:
                        break
            if best is not None and abs(best[2]) == 1:
                break
        if best is None:
            break
        i, j, _ = best
        A[k], A[i] = A[i], A[k]
        swap_cols(k, j)
        if A[k][k] < 0:
            negate_col(k)

        dirty = False
        for i in range(k + 1, nrows):
            if A[i][k]:
                q = A[i][k] // A[k][k]
                if q:
                    row_k = A[k]
                    row_i = A[i]
                    for c in range(k, ncols):
                        row_i[c] -= q * row_k[c]
                if A[i][k]:
                    dirty = True  # remainder left, pivot will shrink next pass
        for j in range(k + 1, ncols):
            if A[k][j]:
                q = A[k][j] // A[k][k]
                addmul_col(j, k, q)
                if A[k][j]:
                    dirty = True
        if dirty:
            continue  # re-run pivot selection at the same k
        k += 1

    diag = [A[i][i] if i < nrows else 0 for i in range(ncols)]
    return diag, R, Rinv
