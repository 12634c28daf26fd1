"""Finite abelian groups presented inside a product of cyclic groups.

A :class:`FinAbGroup` is a subgroup of ``Z/m_1 x ... x Z/m_k``.  Its
canonical basis comes from the Smith normal form of the relation lattice,
computed from the (unique) Hermite form of the subgroup, so two equal
subgroups always carry the same canonical generators.

>>> G = snf_reduce([(1, 0), (0, 1)], (4, 6))
>>> G.invariant_factors, G.order
((2, 12), 24)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Optional, Sequence

from ._intmat import hermite_rows, left_kernel, smith, solve_rows
from .exceptions import DomainError

Element = tuple


@dataclass(frozen=True, order=True)
class Residue:
    """An integer modulo ``modulus``; the value is reduced on construction."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other):
        if not isinstance(other, Residue):
            return Residue(self.value + other, self.modulus)
        if other.modulus != self.modulus:
            raise DomainError("residues with different moduli")
        return Residue(self.value + other.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __int__(self):
        return self.value


@total_ordering
@dataclass(frozen=True, eq=True)
class Phase:
    """An element of Q/Z, stored as a reduced fraction in ``[0, 1)``."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        n, d = self.numerator, self.denominator
        if d < 1:
            raise DomainError("phase denominator must be positive")
        n %= d
        g = gcd(n, d)
        object.__setattr__(self, "numerator", n // g)
        object.__setattr__(self, "denominator", d // g)

    @classmethod
    def of(cls, value) -> "Phase":
        if isinstance(value, Phase):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, int):
            return cls(value, 1)
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> "Phase":
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return cls(int(num), int(den))
        return cls(int(text), 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other):
        other = Phase.of(other)
        d1, d2 = self.denominator, other.denominator
        return Phase(self.numerator * d2 + other.numerator * d1, d1 * d2)

    def __sub__(self, other):
        return self + (-Phase.of(other))

    def __neg__(self):
        return Phase(-self.numerator, self.denominator)

    def __mul__(self, k: int):
        return Phase(self.numerator * int(k), self.denominator)

    __rmul__ = __mul__

    def __lt__(self, other):
        return self.as_fraction() < Phase.of(other).as_fraction()

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"Phase({self.numerator}/{self.denominator})"


def _as_ints(x) -> tuple:
    return tuple(int(c) for c in x)


class FinAbGroup:
    """Subgroup of ``Z/ambient[0] x ... x Z/ambient[-1]`` in canonical form.

    Use :func:`snf_reduce` (or :meth:`generated_by`) to build one.  The
    canonical generators have orders ``invariant_factors``, each dividing
    the next, and trivial factors are dropped.
    """

    __slots__ = ("ambient", "generators", "invariant_factors", "_hnf", "_pivots", "_coord")

    def __init__(self, ambient, generators, invariant_factors, hnf, pivots):
        self.ambient = tuple(ambient)
        self.generators = tuple(tuple(g) for g in generators)
        self.invariant_factors = tuple(invariant_factors)
        # nonzero Hermite rows of [canonical generators; diag(ambient)]
        self._hnf = hnf
        self._pivots = pivots
        self._coord = None

    @classmethod
    def generated_by(cls, generators: Iterable, ambient: Sequence[int]) -> "FinAbGroup":
        return snf_reduce(generators, ambient)

    @classmethod
    def cyclic_product(cls, orders: Sequence[int]) -> "FinAbGroup":
        """The full group ``Z/o_1 x ... x Z/o_k``."""
        k = len(orders)
        gens = [tuple(int(i == j) for j in range(k)) for i in range(k)]
        return snf_reduce(gens, orders)

    @classmethod
    def trivial(cls, ambient=()) -> "FinAbGroup":
        return snf_reduce([], ambient)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def identity(self) -> Element:
        return (0,) * len(self.ambient)

    def reduce(self, x) -> Element:
        x = _as_ints(x)
        if len(x) != len(self.ambient):
            raise DomainError(f"element {x} does not fit ambient {self.ambient}")
        return tuple(c % m for c, m in zip(x, self.ambient))

    def add(self, x, y) -> Element:
        return self.reduce(a + b for a, b in zip(x, y))

    def neg(self, x) -> Element:
        return self.reduce(-a for a in x)

    def scale(self, k: int, x) -> Element:
        return self.reduce(k * a for a in x)

    def _solve(self, x):
        return solve_rows(self._hnf, self._pivots, self.reduce(x))

    def __contains__(self, x) -> bool:
        try:
            return self._solve(x) is not None
        except DomainError:
            return False

    def coordinates(self, x) -> tuple:
        """Coordinates of ``x`` on the canonical generators, reduced mod orders."""
        x = self.reduce(x)
        if self._coord is None:
            mat = [list(g) for g in self.generators] + [
                [m if i == j else 0 for j in range(len(self.ambient))]
                for i, m in enumerate(self.ambient)
            ]
            self._coord = hermite_rows(mat, len(self.ambient))
        H, U, pivots = self._coord
        z = solve_rows(H, pivots, x)
        if z is None:
            raise DomainError(f"{x} is not an element of the group")
        c = [sum(z[r] * U[r][i] for r in range(len(z))) for i in range(self.rank)]
        return tuple(ci % d for ci, d in zip(c, self.invariant_factors))

    def element(self, coords) -> Element:
        """Inverse of :meth:`coordinates`."""
        acc = [0] * len(self.ambient)
        for c, g in zip(coords, self.generators):
            for j, gj in enumerate(g):
                acc[j] += c * gj
        return self.reduce(acc)

    def elements(self) -> Iterator[Element]:
        for coords in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield self.element(coords)

    def element_order(self, x) -> int:
        coords = self.coordinates(x)
        return lcm(1, *(d // gcd(c, d) for c, d in zip(coords, self.invariant_factors)))

    def is_subgroup_of(self, other: "FinAbGroup") -> bool:
        return self.ambient == other.ambient and all(g in other for g in self.generators)

    def _key(self):
        return (self.ambient, tuple(tuple(r) for r in self._hnf))

    def __eq__(self, other):
        if not isinstance(other, FinAbGroup):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def isomorphic(self, other: "FinAbGroup") -> bool:
        return self.invariant_factors == other.invariant_factors

    def __len__(self):
        return self.order

    def __repr__(self):
        inv = " x ".join(f"Z/{d}" for d in self.invariant_factors) or "1"
        return f"FinAbGroup({inv} in {self.ambient})"


def snf_reduce(generators: Iterable, ambient: Sequence[int]) -> FinAbGroup:
    """Subgroup of ``prod Z/ambient`` generated by ``generators``, in canonical form.

    Generators may be tuples of ints or of :class:`Residue`; residues must
    carry the matching modulus.
    """
    ambient = tuple(int(m) for m in ambient)
    if any(m < 1 for m in ambient):
        raise DomainError(f"ambient moduli must be >= 1: {ambient}")
    k = len(ambient)
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != k:
            raise DomainError(f"generator {g} does not fit ambient {ambient}")
        row = []
        for c, m in zip(g, ambient):
            if isinstance(c, Residue):
                if c.modulus != m:
                    raise DomainError(f"modulus mismatch: {c} in Z/{m}")
                c = c.value
            row.append(int(c) % m)
        gens.append(row)
    diag_rows = [[m if i == j else 0 for j in range(k)] for i, m in enumerate(ambient)]

    # Hermite form of the subgroup lattice; unique, so it seeds a
    # generator list that depends on the subgroup alone.
    H, _, pivots = hermite_rows(gens + diag_rows, k)
    seeds = [[c % m for c, m in zip(H[i], ambient)] for i in range(len(pivots))]
    seeds = [s for s in seeds if any(s)]

    r = len(seeds)
    if r == 0:
        canon, factors = [], []
    else:
        # relations among the seeds: c with c @ seeds == 0 mod ambient
        kern = left_kernel(seeds + diag_rows, k)
        relations = [row[:r] for row in kern]
        diag, _, Qinv = smith(relations, r)
        canon, factors = [], []
        for i, d in enumerate(diag):
            if d == 1:
                continue
            if d == 0:
                raise AssertionError("relation lattice of a finite group lost rank")
            h = [0] * k
            for s, coeff in zip(seeds, Qinv[i]):
                for j in range(k):
                    h[j] += coeff * s[j]
            canon.append(tuple(h[j] % ambient[j] for j in range(k)))
            factors.append(d)

    Hc, _, pc = hermite_rows([list(g) for g in canon] + diag_rows, k)
    hnf = [Hc[i] for i in range(len(pc))]
    return FinAbGroup(ambient, canon, factors, hnf, pc)


class DualGroup(FinAbGroup):
    """Character group ``Hom(base, Q/Z)`` of a :class:`FinAbGroup`.

    Its ambient is ``base.invariant_factors``; the element ``k`` sends the
    base element with canonical coordinates ``c`` to ``sum(k_i c_i / d_i)``.
    """

    __slots__ = ("base",)

    def pair(self, chi, x) -> Phase:
        chi = self.reduce(chi)
        coords = self.base.coordinates(x)
        return Phase.of(
            sum(Fraction(k * c, d) for k, c, d in zip(chi, coords, self.base.invariant_factors))
        )

    def from_values(self, values: Sequence[Phase]) -> Element:
        """The character taking ``values[i]`` on the i-th canonical generator of base."""
        out = []
        for v, d in zip(values, self.base.invariant_factors):
            f = Phase.of(v).as_fraction() * d
            if f.denominator != 1:
                raise DomainError(f"value {v} is not a {d}-torsion phase")
            out.append(int(f) % d)
        return tuple(out)


def dual_group(G: FinAbGroup) -> DualGroup:
    """Character group of ``G`` with the evaluation pairing fixed by the canonical basis."""
    full = FinAbGroup.cyclic_product(G.invariant_factors)
    dual = DualGroup(full.ambient, full.generators, full.invariant_factors, full._hnf, full._pivots)
    dual.base = G
    return dual


class GroupHom:
    """Homomorphism given by images of the source's canonical generators."""

    def __init__(self, source: FinAbGroup, target: FinAbGroup, images: Sequence):
        self.source = source
        self.target = target
        self.images = tuple(target.reduce(y) for y in images)
        if len(self.images) != source.rank:
            raise DomainError("one image per canonical source generator is required")
        for y, d in zip(self.images, source.invariant_factors):
            if y not in target:
                raise DomainError(f"image {y} is not in the target group")
            if any(target.scale(d, y)):
                raise DomainError(f"image {y} has order not dividing {d}")

    @classmethod
    def from_function(cls, source, target, fn) -> "GroupHom":
        return cls(source, target, [fn(g) for g in source.generators])

    def __call__(self, x) -> Element:
        coords = self.source.coordinates(x)
        acc = self.target.identity()
        for c, y in zip(coords, self.images):
            acc = self.target.add(acc, self.target.scale(c, y))
        return acc

    def _relation_rows(self):
        k = len(self.target.ambient)
        return [list(y) for y in self.images] + [
            [m if i == j else 0 for j in range(k)] for i, m in enumerate(self.target.ambient)
        ]

    def kernel(self) -> FinAbGroup:
        s = self.source.rank
        rows = left_kernel(self._relation_rows(), len(self.target.ambient))
        gens = [self.source.element(row[:s]) for row in rows]
        return snf_reduce(gens, self.source.ambient)

    def image(self) -> FinAbGroup:
        return snf_reduce(self.images, self.target.ambient)

    def is_injective(self) -> bool:
        return self.kernel().order == 1

    def is_surjective(self) -> bool:
        return self.image() == self.target

    def dual(self) -> "GroupHom":
        """The transpose ``chi -> chi o self`` between character groups."""
        src = dual_group(self.target)
        tgt = dual_group(self.source)
        images = []
        for chi in src.generators:
            values = [src.pair(chi, y) for y in self.images]
            images.append(tgt.from_values(values))
        return GroupHom(src, tgt, images)

    def __repr__(self):
        return f"GroupHom({self.source!r} -> {self.target!r})"


def hom_kernel_image(f: GroupHom) -> tuple:
    return f.kernel(), f.image()


@dataclass(frozen=True)
class Coset:
    representative: Element
    subgroup: FinAbGroup

    def elements(self) -> Iterator[Element]:
        for k in self.subgroup.elements():
            yield self.subgroup.add(self.representative, k)

    def __len__(self):
        return self.subgroup.order

    def __contains__(self, x) -> bool:
        diff = self.subgroup.add(x, self.subgroup.neg(self.representative))
        return diff in self.subgroup


def hom_preimage_coset(f: GroupHom, y) -> Optional[Coset]:
    """``f^{-1}(y)`` as representative plus kernel, or None if ``y`` is not hit."""
    y = f.target.reduce(y)
    rows = f._relation_rows()
    H, U, pivots = hermite_rows(rows, len(f.target.ambient))
    z = solve_rows(H, pivots, y)
    if z is None:
        return None
    s = f.source.rank
    c = [sum(z[r] * U[r][i] for r in range(len(z))) for i in range(s)]
    rep = f.source.element(c)
    return Coset(rep, f.kernel())


def enumerate_subgroup_brute(generators: Iterable, ambient: Sequence[int]) -> set:
    """Closure of ``generators`` by repeated addition; an oracle for small groups."""
    ambient = tuple(ambient)
    zero = (0,) * len(ambient)
    gens = [tuple(int(c) % m for c, m in zip(g, ambient)) for g in generators]
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % m for a, b, m in zip(x, g, ambient))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
