"""Quantum error correction on projective representations of finite groups.

The package builds finite groups as explicit multiplication tables, puts
projective representations (and their 2-cocycles, kept as exact rationals)
on top, and studies the codes an error model carves out of its ambient
space: weak stabilizer codes from joint eigenspaces, stabilizer codes from
normal subgroups, and Clifford codes from induced representations.  The
classification machinery computes the logical group, the stabilizer group
and the detectable set of any subspace, and the channel layer runs the
Knill-Laflamme test and synthesizes recovery maps.
"""

from .channels import (
    ChannelError,
    KLResult,
    KrausChannel,
    build_recovery,
    channel_from_model,
    kl_correctable,
    kl_detectable,
    verify_recovery,
)
from .cocycles import (
    Cocycle,
    Phase,
    PhaseFunction,
    coboundary,
    find_trivializing_phase,
)
from .codes import (
    CodeError,
    CodeReport,
    CodeSpace,
    classify,
    clifford_code,
    code_dimension_formula,
    detectable_set,
    existence_phase,
    is_partitioning,
    logical_group,
    product_code,
    stabilizer_code,
    stabilizer_group,
    stabilizer_to_clifford,
    weak_stabilizer_code,
)
from .groups import (
    FiniteGroup,
    GroupValidationError,
    Subgroup,
    cyclic,
    dihedral,
    direct_product,
    group_from_mul_table,
    inversion_semidirect,
    max_group_order,
    permutation_semidirect,
    symmetric,
)
from .models import (
    ErrorModel,
    ModelError,
    ProjectiveErrorModel,
    d4_character_table,
    d4_expected_table,
    dihedral_xp_model,
    em_from_pem,
    family_c2_x_d2n,
    family_odd,
    gen_pauli_model,
    max_ambient_dim,
    pem_from_em,
    perm_product_model,
    product_model,
)
from .projreps import (
    ProjectiveRep,
    conjugate_rep,
    frobenius_dims,
    hom_space,
    induce,
    inertia_group,
    mackey_character_defect,
    make_rep,
    rep_from_phase_function,
)
from .search import SearchError, enumerate_weak_stabilizer_codes, q3_probe

__version__ = "0.1.0"

__all__ = [
    "ChannelError",
    "Cocycle",
    "CodeError",
    "CodeReport",
    "CodeSpace",
    "ErrorModel",
    "FiniteGroup",
    "GroupValidationError",
    "KLResult",
    "KrausChannel",
    "ModelError",
    "Phase",
    "PhaseFunction",
    "ProjectiveErrorModel",
    "ProjectiveRep",
    "SearchError",
    "Subgroup",
    "build_recovery",
    "channel_from_model",
    "classify",
    "clifford_code",
    "coboundary",
    "code_dimension_formula",
    "conjugate_rep",
    "cyclic",
    "d4_character_table",
    "d4_expected_table",
    "detectable_set",
    "dihedral",
    "dihedral_xp_model",
    "direct_product",
    "em_from_pem",
    "enumerate_weak_stabilizer_codes",
    "existence_phase",
    "family_c2_x_d2n",
    "family_odd",
    "find_trivializing_phase",
    "frobenius_dims",
    "gen_pauli_model",
    "group_from_mul_table",
    "hom_space",
    "induce",
    "inertia_group",
    "is_partitioning",
    "kl_correctable",
    "kl_detectable",
    "logical_group",
    "mackey_character_defect",
    "make_rep",
    "max_ambient_dim",
    "max_group_order",
    "pem_from_em",
    "perm_product_model",
    "permutation_semidirect",
    "product_code",
    "product_model",
    "q3_probe",
    "rep_from_phase_function",
    "stabilizer_code",
    "stabilizer_group",
    "stabilizer_to_clifford",
    "symmetric",
    "verify_recovery",
    "weak_stabilizer_code",
]
