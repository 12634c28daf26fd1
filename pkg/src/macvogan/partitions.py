"""Partitions and partition-valued functions on cuspidal data.

A :class:`PartitionFn` assigns a partition to finitely many cuspidal data.
Of degree ``N`` it labels an irreducible representation of GL_N(F_q) and,
equally, an inertial class of tame parameters.

Order conventions
-----------------
Two orders on partition-valued functions are exposed:

* :func:`dominance_leq` is the order used for parahoric restriction:
  ``L1 <= L2`` iff the sizes agree everywhere and ``L2(tau)`` is dominated
  by ``L1(tau)`` at every ``tau``.  This is the *reverse* of pointwise
  dominance.
* :func:`pointwise_dominated` is plain pointwise dominance
  (``L1(tau) <=_dom L2(tau)`` everywhere).

So ``dominance_leq(L1, L2) == pointwise_dominated(L2, L1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from itertools import accumulate
from typing import Iterable, Mapping

from sympy.utilities.iterables import partitions as _sympy_partitions

from .cuspidal import CuspidalDatum, FieldParams, ResidueCharacter, _field, enumerate_cuspidals, twist_cuspidal
from .exact_groups import FinAbGroup, snf_reduce
from .exceptions import DomainError


@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted((int(x) for x in parts), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def dominated_by(self, other: "Partition") -> bool:
        """Standard dominance ``self <=_dom other`` (equal sizes required)."""
        if self.size != other.size:
            return False
        a = list(accumulate(self.parts))
        b = list(accumulate(other.parts))
        n = max(len(a), len(b))
        a += [self.size] * (n - len(a))
        b += [other.size] * (n - len(b))
        return all(x <= y for x, y in zip(a, b))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_of(n: int) -> list:
    """All partitions of ``n``, reverse-lexicographic (``(n)`` first)."""
    if n == 0:
        return [Partition()]
    out = []
    for p in _sympy_partitions(n):
        out.append(Partition.of(k for k, m in p.items() for _ in range(m)))
    return sorted(out, reverse=True)


def dominance_down_set(lam: Partition) -> list:
    return [mu for mu in partitions_of(lam.size) if mu.dominated_by(lam)]


def dominance_up_set(lam: Partition) -> list:
    return [mu for mu in partitions_of(lam.size) if lam.dominated_by(mu)]


@total_ordering
class PartitionFn:
    """Finitely supported map ``CuspidalDatum -> Partition`` over one field.

    Empty partitions are never stored.  Instances are immutable, hashable,
    and totally ordered by :meth:`sort_key`.
    """

    __slots__ = ("q", "entries", "_degree")

    def __init__(self, q, entries: Mapping | Iterable = ()):
        self.q = _field(q).q
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc = {}
        for tau, lam in items:
            if not isinstance(tau, CuspidalDatum):
                raise DomainError(f"expected a CuspidalDatum, got {tau!r}")
            if tau.q != self.q:
                raise DomainError(f"cuspidal {tau} is over F_{tau.q}, not F_{self.q}")
            lam = lam if isinstance(lam, Partition) else Partition.of(lam)
            if tau in acc:
                raise DomainError(f"duplicate cuspidal {tau}")
            if lam:
                acc[tau] = lam
        self.entries = tuple(sorted(acc.items()))
        self._degree = sum(t.d * lam.size for t, lam in self.entries)

    @property
    def field(self) -> FieldParams:
        return FieldParams(self.q)

    @property
    def degree(self) -> int:
        return self._degree

    def support(self) -> tuple:
        return tuple(t for t, _ in self.entries)

    def __call__(self, tau: CuspidalDatum) -> Partition:
        for t, lam in self.entries:
            if t == tau:
                return lam
        return Partition()

    def as_dict(self) -> dict:
        return dict(self.entries)

    def sort_key(self):
        return (
            tuple((t.d, t.orbit) for t, _ in self.entries),
            tuple(lam.parts for _, lam in self.entries),
        )

    def __eq__(self, other):
        if not isinstance(other, PartitionFn):
            return NotImplemented
        return self.q == other.q and self.entries == other.entries

    def __hash__(self):
        return hash((self.q, self.entries))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        body = ", ".join(f"{t}->{lam}" for t, lam in self.entries)
        return f"PartitionFn(q={self.q}: {{{body}}})"

    def to_json_obj(self) -> dict:
        return {
            "q": self.q,
            "entries": [
                {"d": t.d, "orbit": t.orbit, "partition": list(lam.parts)}
                for t, lam in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PartitionFn":
        q = int(obj["q"])
        items = [
            (CuspidalDatum.from_index(int(e["orbit"]), q, int(e["d"])), Partition.of(e["partition"]))
            for e in obj["entries"]
        ]
        return cls(q, items)

    @classmethod
    def from_json(cls, text: str) -> "PartitionFn":
        return cls.from_json_obj(json.loads(text))


def degree(M: PartitionFn) -> int:
    return M.degree


def _same_sizes(L1: PartitionFn, L2: PartitionFn) -> bool:
    if L1.q != L2.q:
        raise DomainError("partition functions over different fields")
    support = set(L1.support()) | set(L2.support())
    return all(L1(t).size == L2(t).size for t in support)


def dominance_leq(L1: PartitionFn, L2: PartitionFn) -> bool:
    """``L1 <= L2`` in the parahoric-restriction order (reverse dominance).

    True iff ``|L1(t)| == |L2(t)|`` and ``L2(t) <=_dom L1(t)`` for all ``t``.
    """
    if not _same_sizes(L1, L2):
        return False
    return all(L2(t).dominated_by(L1(t)) for t in set(L1.support()) | set(L2.support()))


def pointwise_dominated(L1: PartitionFn, L2: PartitionFn) -> bool:
    """Plain pointwise dominance ``L1(t) <=_dom L2(t)`` with equal sizes."""
    return dominance_leq(L2, L1)


def twist_fn(M: PartitionFn, chi) -> PartitionFn:
    """``(chi M)(tau) = M(tau (x) chi^{-1} o det)``: the support moves by ``chi``."""
    b = chi.b if isinstance(chi, ResidueCharacter) else int(chi)
    b %= M.q - 1
    if b == 0:
        return M
    return PartitionFn(M.q, [(twist_cuspidal(t, b), lam) for t, lam in M.entries])


def twist_orbit(M: PartitionFn) -> list:
    """``[twist_fn(M, b) for b in Z/(q-1)]``, indexed by ``b``."""
    return [twist_fn(M, b) for b in range(M.q - 1)]


def stabilizer(M: PartitionFn) -> FinAbGroup:
    """``{b in Z/(q-1) : twist_fn(M, b) == M}`` by exhaustive sweep."""
    fixing = [(b,) for b, N in enumerate(twist_orbit(M)) if N == M]
    return snf_reduce(fixing, (M.q - 1,))


def canonical_representative(M: PartitionFn) -> PartitionFn:
    return min(twist_orbit(M))


def enumerate_degree(F, N: int) -> list:
    """Every partition-valued function of degree ``N`` over ``F``, sorted."""
    F = _field(F)
    if N < 0:
        raise DomainError("degree must be non-negative")
    cusps = [t for d in range(1, N + 1) for t in enumerate_cuspidals(F, d)]
    parts_by_size = {n: partitions_of(n) for n in range(1, N + 1)}
    out = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            out.append(PartitionFn(F.q, chosen))
            return
        for j in range(start, len(cusps)):
            t = cusps[j]
            if t.d > remaining:
                continue
            for n in range(1, remaining // t.d + 1):
                for lam in parts_by_size[n]:
                    chosen.append((t, lam))
                    rec(j + 1, remaining - t.d * n, chosen)
                    chosen.pop()

    rec(0, N, [])
    return sorted(out)


def orbits_and_stabilizers(F, N: int) -> list:
    """One ``(representative, stabilizer)`` per twist orbit of degree-``N`` functions."""
    F = _field(F)
    seen = set()
    out = []
    for M in enumerate_degree(F, N):
        if M in seen:
            continue
        orbit = set(twist_orbit(M))
        seen |= orbit
        rep = min(orbit)
        stab = stabilizer(rep)
        if len(orbit) * stab.order != F.q - 1:
            raise AssertionError(f"orbit-stabilizer fails for {rep}")
        out.append((rep, stab))
    return sorted(out, key=lambda pair: pair[0].sort_key())
