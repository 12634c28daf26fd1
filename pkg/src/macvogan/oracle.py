"""Brute-force ground truth: GL_N(F_q) and SL_N(F_q) as explicit matrix sets.

Class numbers are computed by partitioning the enumerated element set into
conjugation orbits.  Conjugating by a generating set is enough to get the
orbits, so the work is ``|G| * |generators|`` matrix products.  The
generating set is checked by closing it under multiplication and comparing
with the enumerated group.  Nothing here depends on the rest of the package.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from sympy import factorint

from .exceptions import CapacityError, DomainError

DEFAULT_BUDGET = 10**7


def element_budget() -> int:
    raw = os.environ.get("MACVOGAN_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"MACVOGAN_BUDGET must be an integer, got {raw!r}") from None


def _poly_mulmod(a, b, modpoly, p):
    # coefficient lists, low degree first; modpoly monic of degree r
    r = len(modpoly) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for k in range(len(out) - 1, r - 1, -1):
        c = out[k]
        if c:
            for j in range(r + 1):
                out[k - r + j] = (out[k - r + j] - c * modpoly[j]) % p
    return (out + [0] * r)[:r]


def _to_coeffs(x, p, r):
    return [(x // p**i) % p for i in range(r)]


def _from_coeffs(cs, p):
    return sum(c * p**i for i, c in enumerate(cs))


@dataclass(frozen=True)
class FiniteField:
    """Tables for F_q = F_p[x]/(f).  Elements are ints ``0..q-1`` whose base-p
    digits are polynomial coefficients (lowest first)."""

    q: int
    p: int
    r: int
    modulus_poly: tuple
    add: tuple = field(repr=False)
    mul: tuple = field(repr=False)
    neg: tuple = field(repr=False)
    inv: tuple = field(repr=False)
    generator: int = 0

    def describe_poly(self) -> str:
        terms = []
        for i in range(len(self.modulus_poly) - 1, -1, -1):
            c = self.modulus_poly[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else f"{c}*{mono}" if i else str(c))
        return " + ".join(terms)


def _is_primitive(poly, p, r):
    # x has multiplicative order q - 1 mod poly; this implies irreducibility
    q = p**r
    x = [0, 1] + [0] * (r - 2)
    one = [1] + [0] * (r - 1)
    acc = one
    for k in range(1, q):
        acc = _poly_mulmod(acc, x, list(poly), p)
        if acc == one:
            return k == q - 1
        if not any(acc):
            return False
    return False


@lru_cache(maxsize=None)
def field_arithmetic(q: int) -> FiniteField:
    """Finite field tables.  For ``q = p**r``, ``r > 1``, the defining
    polynomial is the lexicographically first monic primitive polynomial of
    degree ``r`` (coefficients read from the constant term upward)."""
    fac = factorint(q)
    if q < 2 or len(fac) != 1:
        raise DomainError(f"q={q} is not a prime power")
    (p, r), = fac.items()
    if r == 1:
        poly = (0, 1)
        add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        poly = None
        for tail in itertools.product(range(p), repeat=r):
            cand = tuple(tail) + (1,)
            if cand[0] and _is_primitive(cand, p, r):
                poly = cand
                break
        assert poly is not None
        coeffs = [_to_coeffs(x, p, r) for x in range(q)]
        add = tuple(
            tuple(_from_coeffs([(u + v) % p for u, v in zip(coeffs[a], coeffs[b])], p) for b in range(q))
            for a in range(q)
        )
        mul = tuple(
            tuple(_from_coeffs(_poly_mulmod(coeffs[a], coeffs[b], list(poly), p), p) for b in range(q))
            for a in range(q)
        )
    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = tuple([0] + [next(b for b in range(1, q) if mul[a][b] == 1) for a in range(1, q)])
    gen = next(g for g in range(1, q) if _mult_order(mul, g) == q - 1)
    return FiniteField(q, p, r, poly, add, mul, neg, inv, gen)


def _mult_order(mul, g):
    x, k = g, 1
    while x != 1:
        x = mul[x][g]
        k += 1
    return k


@dataclass(frozen=True)
class MatrixGroupSpec:
    kind: str
    N: int
    q: int

    def __post_init__(self):
        if self.kind not in ("GL", "SL"):
            raise DomainError(f"kind must be GL or SL, got {self.kind!r}")
        if self.N < 1:
            raise DomainError("N must be >= 1")
        field_arithmetic(self.q)

    def closed_form_order(self) -> int:
        q, N = self.q, self.N
        gl = prod(q**N - q**i for i in range(N))
        return gl if self.kind == "GL" else gl // (q - 1)


class _MatrixOps:
    def __init__(self, F: FiniteField, N: int):
        self.F, self.N = F, N

    def mul(self, A, B):
        N, add, mul = self.N, self.F.add, self.F.mul
        out = []
        for i in range(N):
            row = A[i * N:(i + 1) * N]
            for j in range(N):
                s = 0
                for k in range(N):
                    s = add[s][mul[row[k]][B[k * N + j]]]
                out.append(s)
        return tuple(out)

    def det(self, A):
        N, F = self.N, self.F
        M = [list(A[i * N:(i + 1) * N]) for i in range(N)]
        d = 1
        for c in range(N):
            piv = next((i for i in range(c, N) if M[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                M[piv], M[c] = M[c], M[piv]
                d = F.neg[d]
            d = F.mul[d][M[c][c]]
            inv = F.inv[M[c][c]]
            for i in range(c + 1, N):
                if M[i][c]:
                    f = F.mul[M[i][c]][inv]
                    M[i] = [F.add[x][F.neg[F.mul[f][y]]] for x, y in zip(M[i], M[c])]
        return d

    def identity(self):
        return tuple(int(i == j) for i in range(self.N) for j in range(self.N))

    def inverse(self, A):
        N, F = self.N, self.F
        M = [list(A[i * N:(i + 1) * N]) + [int(i == j) for j in range(N)] for i in range(N)]
        for c in range(N):
            piv = next(i for i in range(c, N) if M[i][c])
            M[piv], M[c] = M[c], M[piv]
            inv = F.inv[M[c][c]]
            M[c] = [F.mul[inv][x] for x in M[c]]
            for i in range(N):
                if i != c and M[i][c]:
                    f = M[i][c]
                    M[i] = [F.add[x][F.neg[F.mul[f][y]]] for x, y in zip(M[i], M[c])]
        return tuple(x for row in M for x in row[N:])


def _generators(spec: MatrixGroupSpec, ops: _MatrixOps):
    F, N = ops.F, ops.N
    gens = []
    for i in range(N):
        for j in range(N):
            if i != j:
                for c in range(1, F.q):
                    m = list(ops.identity())
                    m[i * N + j] = c
                    gens.append(tuple(m))
    if spec.kind == "GL" and F.q > 2:
        m = list(ops.identity())
        m[0] = F.generator
        gens.append(tuple(m))
    return gens


def enumerate_group(spec: MatrixGroupSpec) -> list:
    """All elements of the group, by filtering every ``N x N`` matrix on its determinant."""
    budget = element_budget()
    total = spec.q ** (spec.N * spec.N)
    if total > budget:
        raise CapacityError(
            f"{spec.kind}_{spec.N}(F_{spec.q}) needs {total} matrices, budget is {budget}"
        )
    F = field_arithmetic(spec.q)
    ops = _MatrixOps(F, spec.N)
    keep = (lambda d: d != 0) if spec.kind == "GL" else (lambda d: d == 1)
    return [A for A in itertools.product(range(F.q), repeat=spec.N * spec.N) if keep(ops.det(A))]


def conjugacy_classes(spec: MatrixGroupSpec) -> list:
    """Conjugacy classes as lists of matrices (flattened row-major tuples)."""
    elements = enumerate_group(spec)
    F = field_arithmetic(spec.q)
    ops = _MatrixOps(F, spec.N)
    index = {A: i for i, A in enumerate(elements)}
    gens = _generators(spec, ops)
    if spec.N == 1:
        # abelian; any element set is a union of singleton classes
        gens = []
    else:
        _check_generates(gens, index, ops)
    pairs = [(g, ops.inverse(g)) for g in gens]

    parent = list(range(len(elements)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, A in enumerate(elements):
        for g, ginv in pairs:
            j = index[ops.mul(ops.mul(g, A), ginv)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    classes = {}
    for i, A in enumerate(elements):
        classes.setdefault(find(i), []).append(A)
    return list(classes.values())


def _check_generates(gens, index, ops):
    start = ops.identity()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = ops.mul(A, g)
                if B not in seen:
                    seen.add(B)
                    nxt.append(B)
        frontier = nxt
    if len(seen) != len(index):
        raise AssertionError(f"generators reach {len(seen)} of {len(index)} elements")


@lru_cache(maxsize=None)
def conj_class_count(spec: MatrixGroupSpec) -> int:
    return len(conjugacy_classes(spec))


def group_order(spec: MatrixGroupSpec) -> int:
    return len(enumerate_group(spec))
