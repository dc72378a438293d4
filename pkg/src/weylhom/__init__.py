"""Exact mod-p homomorphism spaces between Weyl modules with two-row targets."""

from .carterpayne import dim2_conditions, dim2_family, verify_dim2, verify_raising
from .homspace import constraint_matrix, hom_space, sum_hom_conditions, verify_sum_hom
from .tableaux import Tableau, dominates, hom_basis_tableaux, standard_tableaux, transpose
from .weyl2 import straighten, to_standard_basis, weight_space_dimension

__version__ = "0.1.0"

__all__ = [
    "Tableau",
    "constraint_matrix",
    "dim2_conditions",
    "dim2_family",
    "dominates",
    "hom_basis_tableaux",
    "hom_space",
    "standard_tableaux",
    "straighten",
    "sum_hom_conditions",
    "to_standard_basis",
    "transpose",
    "verify_dim2",
    "verify_raising",
    "verify_sum_hom",
    "weight_space_dimension",
    "__version__",
]
