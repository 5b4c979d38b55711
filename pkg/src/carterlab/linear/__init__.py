"""Finite fields, classical matrix groups, and permutation realizations."""

from .gf import FiniteField, field_make
from .matrix import Matrix
from .classical import (
    ClassicalGroupSpec,
    classical_group,
    form_matrix,
    lie_order,
    long_root_element,
    matrix_group_order,
    preserves_form,
    scalar_count,
)
from .projective import (
    DomainCapExceeded,
    ProjectiveAction,
    coset_exponent,
    extend_by_autos,
    frobenius_perm,
    graph_auto_perm,
    linear_rep,
    projective_points,
    projective_rep,
)
from .groupspec import GroupSpecError, RealizedGroup, realize, realize_group

__all__ = [
    "FiniteField", "field_make", "Matrix", "ClassicalGroupSpec",
    "classical_group", "form_matrix", "lie_order", "long_root_element",
    "matrix_group_order", "preserves_form", "scalar_count",
    "DomainCapExceeded", "ProjectiveAction", "coset_exponent",
    "extend_by_autos", "frobenius_perm", "graph_auto_perm", "linear_rep",
    "projective_points", "projective_rep", "GroupSpecError", "RealizedGroup",
    "realize", "realize_group",
]
