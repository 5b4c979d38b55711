"""Permutation-group engine: stabilizer chains, searches, Carter tools."""

from .perm import Perm, parse_perm
from .group import PermGroup, group_from_generators, DegreeMismatchError
from .search import (
    are_conjugate_elements,
    are_conjugate_subgroups,
    canonical_of_cycle_type,
    centralizer_in_sym,
    conjugacy_classes,
    element_centralizer,
    subgroup_centralizer,
    subgroup_normalizer,
    SearchCapExceeded,
)
from .sylow import (
    is_nilpotent,
    lower_central_series,
    normal_closure,
    p_part,
    prime_factors,
    sylow_subgroup,
)
from .quotient import quotient_group, is_normal, NotNormalError, QuotientProjection
from .carter import (
    SubgroupClassSet,
    SearchCapError,
    carter_class_containing_sylow2,
    carter_subgroups,
    check_syl2_criterion,
    is_carter_witness,
)
from .io import group_from_json, group_to_json, load_group, save_group

__all__ = [
    "Perm", "parse_perm", "PermGroup", "group_from_generators",
    "DegreeMismatchError", "are_conjugate_elements", "are_conjugate_subgroups",
    "canonical_of_cycle_type", "centralizer_in_sym", "conjugacy_classes",
    "element_centralizer", "subgroup_centralizer", "subgroup_normalizer",
    "SearchCapExceeded", "is_nilpotent", "lower_central_series",
    "normal_closure", "p_part", "prime_factors", "sylow_subgroup",
    "quotient_group", "is_normal", "NotNormalError", "QuotientProjection",
    "SubgroupClassSet", "SearchCapError", "carter_class_containing_sylow2",
    "carter_subgroups", "check_syl2_criterion", "is_carter_witness",
    "group_from_json", "group_to_json", "load_group", "save_group",
]
