"""pivotfun: executable categorical quantum algebra at desk scale.

Verifies and constructs unitary pseudonatural transformations between fibre
functors, their daggers and duals, pair-of-pants Frobenius monoids, dagger
bimodules with relative tensor products, and the Morita-theoretic
classification pipeline, all over finite-dimensional Hilbert spaces and
finite groups.
"""

from .matkernel import DEFAULT_SEED, Tolerance
from .groups import FiniteGroup, cyclic, direct_product, klein_four, verify_group
from .cdagcat import (
    CMor,
    CatObject,
    DualityWitness,
    conjugate_mor,
    dim_obj,
    fhilb,
    ghilb,
    standard_duality,
    tensor_mor,
    tensor_obj,
    trace_mor,
    transpose_mor,
    verify_duality,
)
from .frobenius import (
    FrobeniusMonoid,
    center_basis,
    check_star_morphism,
    normalize_special,
    pair_of_pants,
    pointwise_monoid,
    trivial_monoid,
    verify_frobenius,
)
from .bimodule import (
    DaggerBimodule,
    bimodule_morphism_space,
    column_bimodule,
    find_unitary_bimodule_iso,
    morita_decide_fhilb,
    regular_bimodule,
    relative_tensor,
    row_bimodule,
    verify_bimodule,
    verify_morita_witness,
)
from .repg import (
    Cocycle,
    FibreFunctor,
    ObjectList,
    UnitaryRep,
    canonical_fibre_functor,
    character_list,
    characters,
    intertwiner_basis,
    klein_pauli_cocycle,
    twisted_fibre_functor,
    verify_cocycle,
    verify_fibre_functor,
    verify_rep,
)
from .upt import (
    UPT,
    Modification,
    dual_certificate,
    equivalence_from_star_iso,
    find_unitary_modification,
    frobenius_from_upt,
    graded_upt,
    identity_upt,
    pauli_upt,
    star_iso_from_equivalence,
    twist_upt,
    upt_compose,
    upt_dagger,
    upt_dual,
    upt_dual_left,
    verify_modification,
    verify_upt,
)
from .classify import classify_graded_upts

__version__ = "0.1.0"
