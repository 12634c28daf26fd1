"""Exact Macdonald-Vogan correspondence for SL_N(F_q) and its comparison
with tame Langlands parameters, at the level of labels."""

from .cuspidal import (
    CuspidalDatum,
    FieldParams,
    ResidueCharacter,
    cuspidal_count,
    enumerate_cuspidals,
    twist_cuspidal,
)
from .exact_groups import (
    Coset,
    FinAbGroup,
    GroupHom,
    Phase,
    Residue,
    dual_group,
    hom_kernel_image,
    hom_preimage_coset,
    snf_reduce,
)
from .exceptions import CapacityError, DomainError, MacVoganError
from .partitions import (
    Partition,
    PartitionFn,
    degree,
    dominance_leq,
    enumerate_degree,
    orbits_and_stabilizers,
    pointwise_dominated,
    stabilizer,
    twist_fn,
)
from .sl import (
    LPacketLabel,
    MVClass,
    SLIrrepLabel,
    SLParameterClass,
    check_compatibility_packet,
    check_finalcomp,
    hp_sl_member,
    hp_sl_packet,
    l_packet,
    mv_class_of,
    mv_fiber,
    sl_canonicalize,
    sl_census,
)
from .tame import (
    ComponentGroup,
    TameCharacter,
    TameParameter,
    TameSegmentParam,
    component_group_inertial,
    component_group_L,
    drop_phases,
    inertial_class,
    iota,
    iota_hat,
    make_example1,
    make_example2,
    stab_full,
    twist_parameter,
)
from .zelevinsky import (
    Multisegment,
    Segment,
    constituent_lower_set,
    hp_gl,
    lambda_of,
    twist_multisegment,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ComponentGroup",
    "Coset",
    "CuspidalDatum",
    "DomainError",
    "FieldParams",
    "FinAbGroup",
    "GroupHom",
    "LPacketLabel",
    "MVClass",
    "MacVoganError",
    "Multisegment",
    "Partition",
    "PartitionFn",
    "Phase",
    "Residue",
    "ResidueCharacter",
    "SLIrrepLabel",
    "SLParameterClass",
    "Segment",
    "TameCharacter",
    "TameParameter",
    "TameSegmentParam",
    "check_compatibility_packet",
    "check_finalcomp",
    "component_group_L",
    "component_group_inertial",
    "constituent_lower_set",
    "cuspidal_count",
    "degree",
    "dominance_leq",
    "drop_phases",
    "dual_group",
    "enumerate_cuspidals",
    "enumerate_degree",
    "hom_kernel_image",
    "hom_preimage_coset",
    "hp_gl",
    "hp_sl_member",
    "hp_sl_packet",
    "inertial_class",
    "iota",
    "iota_hat",
    "l_packet",
    "lambda_of",
    "make_example1",
    "make_example2",
    "mv_class_of",
    "mv_fiber",
    "orbits_and_stabilizers",
    "pointwise_dominated",
    "sl_canonicalize",
    "sl_census",
    "snf_reduce",
    "stab_full",
    "stabilizer",
    "twist_cuspidal",
    "twist_fn",
    "twist_multisegment",
    "twist_parameter",
]
