"""Exact character tables of GL(2, O_r) at even level r."""
from .abelian import AbelianGroupTable, BudgetExceeded, abelian_table
from .chars import AddChar, MultChar, SGroup, all_characters, standard_psi, theta_characters
from .context import GL2Context, LevelError, get_context
from .cyclo import CycloValue
from .group import ConjClassLabel, brute_force_classes, class_count, class_reps, class_sizes, group_order
from .irreps import (
    Cuspidal,
    NonPrincipalSplit,
    PrincipalSplit,
    char_value,
    character_table,
    dimension,
    enumerate_irreps,
    frobenius_char_value,
    inner_products,
    level_one_characters,
)
from .ring import EQUAL, MIXED, QuadExt, Ring, RingError, make_ring, quad_ext

__all__ = [
    "AbelianGroupTable", "AddChar", "BudgetExceeded", "ConjClassLabel", "Cuspidal", "CycloValue",
    "EQUAL", "GL2Context", "LevelError", "MIXED", "MultChar", "NonPrincipalSplit", "PrincipalSplit",
    "QuadExt", "Ring", "RingError", "SGroup", "abelian_table", "all_characters", "brute_force_classes",
    "char_value", "character_table", "class_count", "class_reps", "class_sizes", "dimension",
    "enumerate_irreps", "frobenius_char_value", "get_context", "group_order", "inner_products",
    "level_one_characters", "make_ring", "quad_ext", "standard_psi", "theta_characters",
]
__version__ = "0.1.0"
