"""carter-lab: desk-scale verification of Carter-subgroup criteria.

Searches for nilpotent self-normalizing subgroups in explicitly
constructed finite groups, checks Sylow-2 normalizer criteria, and
reproduces the supporting root-system and Weyl-group computations.
"""

from . import linear, permgrp, rootsys, verify
from .permgrp import Perm, PermGroup, carter_subgroups, is_carter_witness
from .linear import realize_group

__version__ = "0.1.0"

__all__ = ["linear", "permgrp", "rootsys", "verify", "Perm", "PermGroup",
           "carter_subgroups", "is_carter_witness", "realize_group",
           "__version__"]
