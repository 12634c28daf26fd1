"""Integer row echelon (Hermite) and Smith normal forms with transforms.

Matrices are lists of row lists of Python ints. Nothing here knows about
groups; :mod:`macvogan.exact_groups` builds on it.
"""

from __future__ import annotations


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _axpy(dst, src, f):
    # dst -= f * src, in place
    for j, s in enumerate(src):
        if s:
            dst[j] -= f * s


def hermite_rows(A, ncols=None):
    """Row-style Hermite normal form.

    Returns ``(H, U, pivots)`` with ``U @ A == H``, ``U`` unimodular, the
    first ``len(pivots)`` rows of ``H`` in echelon form with positive pivots
    and entries above each pivot reduced into ``[0, pivot)``; remaining rows
    are zero.  The nonzero part of ``H`` is unique for the row lattice of A.
    """
    H = [list(row) for row in A]
    m = len(H)
    n = ncols if ncols is not None else (len(H[0]) if H else 0)
    U = identity(m)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            if p != r:
                H[p], H[r] = H[r], H[p]
                U[p], U[r] = U[r], U[p]
            clean = True
            for i in range(r + 1, m):
                if H[i][c]:
                    f = H[i][c] // H[r][c]
                    _axpy(H[i], H[r], f)
                    _axpy(U[i], U[r], f)
                    if H[i][c]:
                        clean = False
            if clean:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            f = H[i][c] // H[r][c]
            if f:
                _axpy(H[i], H[r], f)
                _axpy(U[i], U[r], f)
        pivots.append(c)
        r += 1
    return H, U, pivots


def solve_rows(H, pivots, x):
    """Solve ``z @ H[:rank] == x`` for integer ``z``; None if impossible."""
    x = list(x)
    z = []
    for row, c in zip(H, pivots):
        f, rem = divmod(x[c], row[c])
        if rem:
            return None
        z.append(f)
        if f:
            _axpy(x, row, f)
    if any(x):
        return None
    return z


def left_kernel(A, ncols=None):
    """Rows spanning ``{c : c @ A == 0}`` over the integers."""
    H, U, pivots = hermite_rows(A, ncols)
    return [U[i] for i in range(len(pivots), len(H))]


def smith(B, ncols):
    """Smith normal form of an integer matrix with ``ncols`` columns.

    Returns ``(diag, Q, Qinv)`` where ``P @ B @ Q`` is diagonal with entries
    ``diag`` (length ``ncols``, each dividing the next, zeros last) for some
    unimodular ``P`` that is not tracked.
    """
    M = [list(row) for row in B]
    m = len(M)
    n = ncols
    Q = identity(n)
    Qinv = identity(n)

    def col_axpy(dst, src, f):
        # column dst -= f * column src
        for row in M:
            row[dst] -= f * row[src]
        for row in Q:
            row[dst] -= f * row[src]
        # inverse transform acts on rows: row src += f * row dst
        _axpy(Qinv[src], Qinv[dst], -f)

    def col_swap(a, b):
        for row in M:
            row[a], row[b] = row[b], row[a]
        for row in Q:
            row[a], row[b] = row[b], row[a]
        Qinv[a], Qinv[b] = Qinv[b], Qinv[a]

    def col_neg(a):
        for row in M:
            row[a] = -row[a]
        for row in Q:
            row[a] = -row[a]
        Qinv[a] = [-x for x in Qinv[a]]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
            if not nz:
                break
            _, i0, j0 = min(nz)
            if i0 != t:
                M[i0], M[t] = M[t], M[i0]
            if j0 != t:
                col_swap(j0, t)
            piv = M[t][t]
            done = True
            for i in range(t + 1, m):
                if M[i][t]:
                    _axpy(M[i], M[t], M[i][t] // piv)
                    if M[i][t]:
                        done = False
            for j in range(t + 1, n):
                if M[t][j]:
                    col_axpy(j, t, M[t][j] // piv)
                    if M[t][j]:
                        done = False
            if not done:
                continue
            # divisibility: fold an offending row into row t and retry
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % piv),
                None,
            )
            if bad is None:
                break
            _axpy(M[t], M[bad], -1)
        if t < m and M[t][t] < 0:
            col_neg(t)
    diag = [M[i][i] if i < m else 0 for i in range(n)]
    return diag, Q, Qinv
