"""Permutation-group toolkit for solvable radicals, Fitting heights and
conjugate-generation criteria."""

from .errors import GroupError, TheoremViolationSuspected
from .group import (
    PermGroup,
    SubgroupHandle,
    conjugacy_classes,
    group_from_generators,
    normal_closure,
)
from .perm import Permutation, format_permutation, parse_permutation
from .series import fitting_subgroup, is_nilpotent, is_solvable, solvable_radical

__version__ = "0.1.0"

__all__ = [
    "GroupError",
    "TheoremViolationSuspected",
    "PermGroup",
    "SubgroupHandle",
    "Permutation",
    "group_from_generators",
    "conjugacy_classes",
    "normal_closure",
    "parse_permutation",
    "format_permutation",
    "is_solvable",
    "is_nilpotent",
    "solvable_radical",
    "fitting_subgroup",
]
