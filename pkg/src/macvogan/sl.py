"""SL_N: Macdonald-Vogan classes, their fibers, L-packets and the head of
parahoric restriction for packet members.

Fibers and packets are torsors.  Labels are coordinates relative to a base
point, taken to be the canonical representative (index = trivial
character).  That base point is a convention of this package: any other
choice relabels every fiber by a fixed translation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cuspidal import _field
from .exact_groups import FinAbGroup, Phase, dual_group, hom_preimage_coset
from .partitions import (
    PartitionFn,
    canonical_representative,
    orbits_and_stabilizers,
    stabilizer,
)
from .tame import TameParameter, drop_phases, inertial_class, iota_hat, stab_full, twist_parameter
from .zelevinsky import hp_gl


@dataclass(frozen=True)
class MVClass:
    """Twist orbit of a partition-valued function, with its stabilizer."""

    representative: PartitionFn
    stab: FinAbGroup

    @property
    def fiber_size(self) -> int:
        return self.stab.order


@dataclass(frozen=True)
class SLIrrepLabel:
    mv_class: MVClass
    torsor_index: tuple


@dataclass(frozen=True)
class SLParameterClass:
    """Twist orbit of a tame GL_N parameter, i.e. a parameter for SL_N."""

    canonical: TameParameter


@dataclass(frozen=True)
class LPacketLabel:
    sl_param: SLParameterClass
    packet_index: tuple


def mv_class_of(M: PartitionFn) -> MVClass:
    rep = canonical_representative(M)
    return MVClass(rep, stabilizer(rep))


def mv_fiber(c: MVClass) -> list:
    """One label per character of the stabilizer."""
    return [SLIrrepLabel(c, chi) for chi in dual_group(c.stab).elements()]


def mv_classes(F, N: int) -> list:
    return [MVClass(rep, stab) for rep, stab in orbits_and_stabilizers(F, N)]


def sl_census(F, N: int) -> int:
    """Number of irreducible representations of SL_N(F_q): sum of fiber sizes."""
    return sum(c.fiber_size for c in mv_classes(F, N))


def _zero_phase_candidates(P: TameParameter):
    # every orbit element with at least one zero-phase block
    for b in range(P.q - 1):
        for blk in P.blocks:
            d = blk.cuspidal.d
            n, m = blk.u.numerator, blk.u.denominator
            for j in range(d):
                # v = (j - u)/d, so the block's phase becomes u + d*v = 0
                yield twist_parameter(P, (b, Phase(j * m - n, d * m)))


def sl_canonicalize(P: TameParameter) -> SLParameterClass:
    """Canonical representative of the twist orbit of ``P``.

    The orbit is infinite in the unramified direction, but its members
    having some block of phase zero form a finite, orbit-intrinsic set;
    the minimum of that set is the representative.
    """
    if not P.blocks:
        return SLParameterClass(P)
    return SLParameterClass(min(_zero_phase_candidates(P)))


def l_packet(c: SLParameterClass) -> list:
    return [LPacketLabel(c, psi) for psi in dual_group(stab_full(c.canonical)).elements()]


def hp_sl_packet(c: SLParameterClass) -> MVClass:
    """MV class heading the parahoric restriction of the whole packet."""
    return mv_class_of(inertial_class(c.canonical))


def check_compatibility_packet(P: TameParameter) -> bool:
    """Inertial extraction commutes with passing to SL.

    Going GL parameter -> multisegment -> head label -> MV class must land
    where GL parameter -> SL class -> inertial class -> MV class does.
    """
    left = mv_class_of(hp_gl(drop_phases(P)))
    right = hp_sl_packet(sl_canonicalize(P))
    return left == right


def hp_sl_member(c: SLParameterClass, psi) -> frozenset:
    """Fiber labels in the head of parahoric restriction of packet member ``psi``.

    These are the characters of the inertial stabilizer that restrict to
    ``psi``; the set is empty when ``psi`` is outside the image.
    """
    ih = iota_hat(c.canonical)
    mv = hp_sl_packet(c)
    coset = hom_preimage_coset(ih, psi)
    if coset is None:
        return frozenset()
    return frozenset(SLIrrepLabel(mv, chi) for chi in coset.elements())


def check_finalcomp(c: SLParameterClass) -> bool:
    """Packet members' heads are disjoint, of equal size when nonempty, and cover the fiber."""
    ih = iota_hat(c.canonical)
    fiber = set(mv_fiber(hp_sl_packet(c)))
    kernel_order = ih.kernel().order
    covered = set()
    for psi in ih.target.elements():
        members = hp_sl_member(c, psi)
        if members & covered:
            return False
        if members and len(members) != kernel_order:
            return False
        if bool(members) != (psi in ih.image()):
            return False
        covered |= members
    return covered == fiber


def census_record(F, N: int) -> dict:
    """JSON-ready census of MV classes of degree ``N``."""
    F = _field(F)
    classes = mv_classes(F, N)
    return {
        "q": F.q,
        "N": N,
        "total": sum(c.fiber_size for c in classes),
        "classes": [class_record(c) for c in classes],
    }


def class_record(c: MVClass) -> dict:
    return {
        "representative": c.representative.to_json_obj(),
        "stab_order": c.stab.order,
        "fiber": [list(label.torsor_index) for label in mv_fiber(c)],
    }
