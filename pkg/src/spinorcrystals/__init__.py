"""Spinor-model crystals of classical types B, C, D: tensor-product and
branching multiplicities through generalized Littlewood-Richardson sets,
stable-range bijections, and characters of unitarizable modules."""

from .alphabets import NATURAL, GradedAlphabet
from .groups import GroupSpec, Weight, family_for, group_weight, in_group_range
from .partitions import conjugate, is_type_partition, normalize
from .tableaux import (Shape, Tableau, column_insert, crystal_e, crystal_f,
                       eps, highest_tableau, insert_word, lr_coef, lr_tableaux,
                       phi, rectify)
from .columns import SpinorColumn, is_admissible, residue, split_lr, split_star
from .spinor import SpinorTableau, enumerate_spinor, factor_profile, highest_spinor

__all__ = [
    "NATURAL",
    "GradedAlphabet",
    "GroupSpec",
    "Weight",
    "Shape",
    "Tableau",
    "SpinorColumn",
    "SpinorTableau",
    "column_insert",
    "conjugate",
    "crystal_e",
    "crystal_f",
    "enumerate_spinor",
    "eps",
    "factor_profile",
    "family_for",
    "group_weight",
    "highest_spinor",
    "highest_tableau",
    "in_group_range",
    "insert_word",
    "is_admissible",
    "is_type_partition",
    "lr_coef",
    "lr_tableaux",
    "normalize",
    "phi",
    "rectify",
    "residue",
    "split_lr",
    "split_star",
]
