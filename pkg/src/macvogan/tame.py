"""Tame Langlands parameters for GL_N and their twists, stabilizers and component groups.

A parameter is a multiset of blocks ``(cuspidal, u, length)``:

* ``cuspidal`` is the Frobenius orbit of inertial characters (dimension ``d``),
* ``u`` in Q/Z is the phase of the eigenvalue of ``Fr^d`` on the block,
* ``length`` is the size of the Jordan block of the nilpotent.

A tame character ``(b, v)`` of ``W_F`` twists a block to
``(twist_cuspidal(cuspidal, b), u + d*v, length)``.

Component groups are computed through their stabilizer models: the
L-packet group of a parameter is the group of tame characters fixing it,
and the inertial group is the group of residue characters fixing its
inertial class.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cuspidal import (
    CuspidalDatum,
    FieldParams,
    ResidueCharacter,
    _field,
    necklace_count,
    random_cuspidal,
    twist_cuspidal,
)
from .exact_groups import FinAbGroup, GroupHom, Phase, snf_reduce
from .exceptions import DomainError
from .partitions import Partition, PartitionFn, stabilizer
from .zelevinsky import Multisegment, Segment


@dataclass(frozen=True)
class TameCharacter:
    """Tame character of ``F^*``: inertial part ``b`` mod ``q-1`` and unramified phase ``u``."""

    b: int
    u: Phase
    q: int

    def __post_init__(self):
        object.__setattr__(self, "b", self.b % (self.q - 1))
        object.__setattr__(self, "u", Phase.of(self.u))

    @property
    def residue(self) -> ResidueCharacter:
        return ResidueCharacter(self.b, self.q)


@dataclass(frozen=True, order=True)
class TameSegmentParam:
    cuspidal: CuspidalDatum
    u: Phase
    length: int

    def __post_init__(self):
        object.__setattr__(self, "u", Phase.of(self.u))
        if self.length < 1:
            raise DomainError(f"Jordan length must be >= 1, got {self.length}")

    @property
    def dimension(self) -> int:
        return self.cuspidal.d * self.length


class TameParameter:
    """Multiset of :class:`TameSegmentParam` blocks, canonically sorted."""

    __slots__ = ("q", "blocks")

    def __init__(self, q, blocks=()):
        self.q = _field(q).q
        bl = []
        for blk in blocks:
            if not isinstance(blk, TameSegmentParam):
                blk = TameSegmentParam(*blk)
            if blk.cuspidal.q != self.q:
                raise DomainError(f"block {blk} is not over F_{self.q}")
            bl.append(blk)
        self.blocks = tuple(sorted(bl))

    @property
    def N(self) -> int:
        return sum(b.dimension for b in self.blocks)

    def sort_key(self):
        return tuple(
            (b.cuspidal.d, b.cuspidal.orbit, b.u.as_fraction(), b.length) for b in self.blocks
        )

    def __eq__(self, other):
        if not isinstance(other, TameParameter):
            return NotImplemented
        return self.q == other.q and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.q, self.blocks))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        body = ", ".join(f"({b.cuspidal},{b.u},{b.length})" for b in self.blocks)
        return f"TameParameter(q={self.q}, N={self.N}: {body})"

    def phase_lcm(self) -> int:
        return lcm(1, *(b.u.denominator for b in self.blocks))

    def to_json_obj(self) -> dict:
        return {
            "q": self.q,
            "N": self.N,
            "blocks": [
                {"d": b.cuspidal.d, "orbit": b.cuspidal.orbit, "u": str(b.u), "length": b.length}
                for b in self.blocks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TameParameter":
        q = int(obj["q"])
        P = cls(
            q,
            [
                TameSegmentParam(
                    CuspidalDatum.from_index(int(b["orbit"]), q, int(b["d"])),
                    Phase.parse(str(b["u"])),
                    int(b["length"]),
                )
                for b in obj["blocks"]
            ],
        )
        if "N" in obj and int(obj["N"]) != P.N:
            raise DomainError(f"declared N={obj['N']} but blocks have total dimension {P.N}")
        return P

    @classmethod
    def from_json(cls, text: str) -> "TameParameter":
        return cls.from_json_obj(json.loads(text))


def _character(chi, q) -> TameCharacter:
    if isinstance(chi, TameCharacter):
        if chi.q != q:
            raise DomainError("character and parameter live over different fields")
        return chi
    b, u = chi
    return TameCharacter(b, u, q)


def twist_parameter(P: TameParameter, chi) -> TameParameter:
    """Twist by a tame character, given as :class:`TameCharacter` or ``(b, u)``."""
    chi = _character(chi, P.q)
    if chi.b == 0 and chi.u == Phase(0):
        return P
    return TameParameter(
        P.q,
        [
            TameSegmentParam(twist_cuspidal(blk.cuspidal, chi.b), blk.u + chi.u * blk.cuspidal.d, blk.length)
            for blk in P.blocks
        ],
    )


def stab_ambient(P: TameParameter) -> tuple:
    """``(q - 1, L)`` with ``L = N * lcm(phase denominators)``; ``(b, k)`` means ``v = k/L``."""
    return (P.q - 1, max(P.N, 1) * P.phase_lcm())


@lru_cache(maxsize=8192)
def stab_full(P: TameParameter) -> FinAbGroup:
    """Group of tame characters fixing ``P``, inside ``Z/(q-1) x Z/L``.

    A fixing character permutes the blocks of each ``(d, length)`` type, so
    summing phases over a type with ``m`` blocks gives ``m*d*v = 0``.  The
    gcd of the ``m*d`` divides ``N``, hence ``v`` lies in ``(1/N)Z/Z`` and
    the sweep over ``b`` and ``v = j/N`` is complete.
    """
    ambient = stab_ambient(P)
    N = max(P.N, 1)
    L = ambient[1]
    fixing = []
    for b in range(P.q - 1):
        for j in range(N):
            if twist_parameter(P, (b, Phase(j, N))) == P:
                fixing.append((b, j * (L // N)))
    return snf_reduce(fixing, ambient)


def stab_full_exhaustive(P: TameParameter) -> FinAbGroup:
    """Same group as :func:`stab_full`, sweeping all of ``Z/(q-1) x Z/L``."""
    ambient = stab_ambient(P)
    fixing = [
        (b, k)
        for b in range(ambient[0])
        for k in range(ambient[1])
        if twist_parameter(P, (b, Fraction(k, ambient[1]))) == P
    ]
    return snf_reduce(fixing, ambient)


def element_to_character(x, ambient, q) -> TameCharacter:
    return TameCharacter(x[0], Fraction(x[1], ambient[1]), q)


def inertial_class(P: TameParameter) -> PartitionFn:
    """Forget Frobenius phases; collect Jordan lengths per inertial orbit."""
    lengths = {}
    for blk in P.blocks:
        lengths.setdefault(blk.cuspidal, []).append(blk.length)
    return PartitionFn(P.q, {t: Partition.of(ls) for t, ls in lengths.items()})


def drop_phases(P: TameParameter) -> Multisegment:
    return Multisegment(P.q, [Segment(blk.cuspidal, blk.length) for blk in P.blocks])


@dataclass(frozen=True)
class ComponentGroup:
    """A component group together with the stabilizer it is identified with."""

    group: FinAbGroup
    kind: str
    witness: FinAbGroup

    L_PACKET = "L-packet"
    INERTIAL = "inertial"

    @property
    def order(self) -> int:
        return self.group.order

    @classmethod
    def from_witness(cls, witness: FinAbGroup, kind: str) -> "ComponentGroup":
        return cls(FinAbGroup.cyclic_product(witness.invariant_factors), kind, witness)


def component_group_L(P: TameParameter) -> ComponentGroup:
    return ComponentGroup.from_witness(stab_full(P), ComponentGroup.L_PACKET)


def component_group_inertial(P: TameParameter) -> ComponentGroup:
    return ComponentGroup.from_witness(stabilizer(inertial_class(P)), ComponentGroup.INERTIAL)


def iota(P: TameParameter) -> GroupHom:
    """Restriction ``(b, v) -> b`` from the full stabilizer to the inertial one.

    Raises :class:`DomainError` if some fixing character does not fix the
    inertial class, i.e. if the map is not well defined.
    """
    source = stab_full(P)
    target = stabilizer(inertial_class(P))
    return GroupHom(source, target, [(g[0],) for g in source.generators])


@lru_cache(maxsize=8192)
def iota_hat(P: TameParameter) -> GroupHom:
    """Dual of :func:`iota`: inertial characters restricted along ``iota``."""
    return iota(P).dual()


def make_example1(F, N: int) -> TameParameter:
    """Trivial inertia, Frobenius ``diag(1, z, ..., z^(N-1))`` for a primitive N-th root ``z``."""
    F = _field(F)
    if N < 2:
        raise DomainError("the surjectivity example needs N >= 2")
    triv = CuspidalDatum.trivial(F.q)
    return TameParameter(F.q, [TameSegmentParam(triv, Phase(j, N), 1) for j in range(N)])


def make_example2(F, N: int, e: int, phase_denominator: int | None = None) -> TameParameter:
    """Inertia generated by ``diag(1_{N/e}, z 1_{N/e}, ..., z^(e-1) 1_{N/e})``, regular Frobenius.

    Block ``k`` (``0 <= k < N``) carries inertial character
    ``(k // (N/e)) * (q-1)/e`` and phase ``k / phase_denominator``.  The
    default denominator ``N + 1`` makes the phases generic: no nonzero
    shift by a multiple of ``1/N`` preserves them, which is what a regular
    Frobenius with connected centralizer requires.  Passing ``N`` gives
    equally spaced phases; those are fixed by a nontrivial twist.
    """
    F = _field(F)
    if e <= 1 or (F.q - 1) % e or N % e:
        raise DomainError(f"need e > 1 dividing gcd(q-1, N) = {gcd(F.q - 1, N)}, got e={e}")
    M = N + 1 if phase_denominator is None else phase_denominator
    if M < N:
        raise DomainError("phase denominator must be >= N so that phases are distinct")
    step = N // e
    blocks = []
    for k in range(N):
        a = (k // step) * ((F.q - 1) // e)
        blocks.append(TameSegmentParam(CuspidalDatum.from_index(a, F.q, 1), Phase(k, M), 1))
    return TameParameter(F.q, blocks)


def _random_blocks(F: FieldParams, N: int, rng: random.Random, max_den: int) -> list:
    blocks = []
    remaining = N
    while remaining:
        options = [
            (d, l)
            for d in range(1, remaining + 1)
            for l in range(1, remaining // d + 1)
            if necklace_count(F.q, d) > 0
        ]
        d, l = rng.choice(options)
        used = [b.cuspidal for b in blocks if b.cuspidal.d == d]
        tau = rng.choice(used) if used and rng.random() < 0.5 else random_cuspidal(F, d, rng)
        den = rng.randint(1, max_den)
        blocks.append(TameSegmentParam(tau, Phase(rng.randrange(den), den), l))
        remaining -= d * l
    return blocks


def random_parameter(F, N: int, rng: random.Random) -> TameParameter:
    """Random parameter of dimension ``N``.

    About a third of the draws are unions of the twists of a smaller
    parameter by a character of order ``k | N``, so that nontrivial
    stabilizers show up regularly.
    """
    F = _field(F)
    ks = [k for k in range(2, N + 1) if N % k == 0]
    if ks and rng.random() < 1 / 3:
        k = rng.choice(ks)
        base = TameParameter(F.q, _random_blocks(F, N // k, rng, 2 * N))
        g = gcd(k, F.q - 1)
        b = rng.randrange(g) * ((F.q - 1) // g)
        v = Fraction(rng.randrange(k), k)
        blocks = []
        for i in range(k):
            blocks.extend(twist_parameter(base, (b * i, v * i)).blocks)
        return TameParameter(F.q, blocks)
    return TameParameter(F.q, _random_blocks(F, N, rng, 2 * N))
