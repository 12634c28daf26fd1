"""Depth-zero representations of GL_N(F) through their multisegments.

A segment is stored as ``(cuspidal, length)`` where the cuspidal datum is
the unramified-twist class of the cuspidal support.  That is all the label
of the head of parahoric restriction depends on.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from .cuspidal import CuspidalDatum, ResidueCharacter, _field, random_cuspidal, necklace_count, twist_cuspidal
from .exceptions import DomainError
from .partitions import Partition, PartitionFn, dominance_down_set, dominance_up_set


@dataclass(frozen=True, order=True)
class Segment:
    cuspidal: CuspidalDatum
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise DomainError(f"segment length must be >= 1, got {self.length}")

    @property
    def degree(self) -> int:
        return self.cuspidal.d * self.length


class Multisegment:
    """Multiset of segments over one residue field, stored sorted."""

    __slots__ = ("q", "segments")

    def __init__(self, q, segments=()):
        self.q = _field(q).q
        segs = []
        for s in segments:
            if not isinstance(s, Segment):
                s = Segment(*s)
            if s.cuspidal.q != self.q:
                raise DomainError(f"segment {s} is not over F_{self.q}")
            segs.append(s)
        self.segments = tuple(sorted(segs))

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.segments)

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.q == other.q and self.segments == other.segments

    def __hash__(self):
        return hash((self.q, self.segments))

    def __repr__(self):
        body = ", ".join(f"({s.cuspidal},{s.length})" for s in self.segments)
        return f"Multisegment(q={self.q}: {body})"

    def to_json_obj(self) -> dict:
        return {
            "q": self.q,
            "segments": [
                {"d": s.cuspidal.d, "orbit": s.cuspidal.orbit, "length": s.length}
                for s in self.segments
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Multisegment":
        q = int(obj["q"])
        return cls(
            q,
            [
                Segment(CuspidalDatum.from_index(int(s["orbit"]), q, int(s["d"])), int(s["length"]))
                for s in obj["segments"]
            ],
        )


def lambda_of(ms: Multisegment) -> PartitionFn:
    """Partition-valued function collecting segment lengths per cuspidal."""
    lengths = {}
    for s in ms.segments:
        lengths.setdefault(s.cuspidal, []).append(s.length)
    return PartitionFn(ms.q, {t: Partition.of(ls) for t, ls in lengths.items()})


def hp_gl(ms: Multisegment) -> PartitionFn:
    """Label of the head of parahoric restriction.

    In this encoding the label is the partition function of the
    multisegment itself; the separate name keeps the two maps apart at
    call sites.
    """
    return lambda_of(ms)


def _lower_set(lam_pi: PartitionFn, per_class) -> list:
    support = lam_pi.support()
    choices = [per_class(lam_pi(t)) for t in support]
    return sorted(
        PartitionFn(lam_pi.q, zip(support, combo)) for combo in itertools.product(*choices)
    )


def constituent_lower_set(lam_pi: PartitionFn) -> list:
    """All ``L`` with ``L <= lam_pi`` in the parahoric-restriction order.

    These label a superset of the constituents of the parahoric restriction;
    it is exact when the representation is tempered.  Since the order is
    reverse dominance, the members are the functions that pointwise
    *dominate* ``lam_pi``: for ``lam_pi = {triv: (1,1)}`` the set is
    ``{(1,1)}, {(2)}``, while ``{triv: (2)}`` yields only itself.
    """
    return _lower_set(lam_pi, dominance_up_set)


def pointwise_dominance_down_set(lam_pi: PartitionFn) -> list:
    """All ``L`` pointwise dominated by ``lam_pi`` (the standard-order lower set)."""
    return _lower_set(lam_pi, dominance_down_set)


def twist_multisegment(ms: Multisegment, chi) -> Multisegment:
    b = chi.b if isinstance(chi, ResidueCharacter) else int(chi)
    return Multisegment(ms.q, [Segment(twist_cuspidal(s.cuspidal, b), s.length) for s in ms.segments])


def random_multisegment(F, N: int, rng: random.Random) -> Multisegment:
    """Random multisegment of degree ``N``; cuspidal degrees and lengths vary."""
    F = _field(F)
    segs = []
    remaining = N
    while remaining:
        options = [
            (d, l)
            for d in range(1, remaining + 1)
            for l in range(1, remaining // d + 1)
            if necklace_count(F.q, d) > 0
        ]
        d, l = rng.choice(options)
        # reuse a cuspidal half the time so partitions get more than one part
        used = [s.cuspidal for s in segs if s.cuspidal.d == d]
        tau = rng.choice(used) if used and rng.random() < 0.5 else random_cuspidal(F, d, rng)
        segs.append(Segment(tau, l))
        remaining -= d * l
    return Multisegment(F.q, segs)
