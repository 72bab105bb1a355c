from monofock.fock.basis import (
    VACUUM,
    BasisVector,
    IndexSet,
    TruncationSpec,
    annihilate,
    create,
    enumerate_basis,
    enumerate_subspace,
    right_annihilate,
    right_create,
    validate_basis_vector,
)
from monofock.fock.operators import (
    SparseOperator,
    build_annihilator,
    build_creator,
    build_position,
    build_right_annihilator,
    build_right_creator,
    build_right_position,
    build_sum,
    commutator_on_safe_vectors,
    invariant_subspace_matrix,
    restrict,
)

__all__ = [
    "VACUUM",
    "BasisVector",
    "IndexSet",
    "TruncationSpec",
    "annihilate",
    "create",
    "enumerate_basis",
    "enumerate_subspace",
    "right_annihilate",
    "right_create",
    "validate_basis_vector",
    "SparseOperator",
    "build_annihilator",
    "build_creator",
    "build_position",
    "build_right_annihilator",
    "build_right_creator",
    "build_right_position",
    "build_sum",
    "commutator_on_safe_vectors",
    "invariant_subspace_matrix",
    "restrict",
]
