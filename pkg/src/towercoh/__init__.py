"""Exact equivariant sheaf cohomology on towers of Grassmann and projective bundles."""

from .weights import BottResult, bott_regularize, dual_weight, rho
from .schur import (Character, IrrepSum, decompose, dual_sum, lr_product,
                    lr_product_tableau, plethysm, schur_character, weyl_dim)
from .tower import (LayeredForm, TowerSpace, build_space, normalize,
                    parse_expr, restrict_to_fiber)
from .cohomology import (CohomologyTable, check_collection, cohomology,
                         euler_char, ext_table, pushforward_once,
                         serre_dual_pair_check, serre_duality_holds)
from .lescheck import (ExactSequenceSpec, Undetermined, euler_consistency,
                       les_force)

__all__ = [
    "BottResult", "bott_regularize", "dual_weight", "rho",
    "Character", "IrrepSum", "decompose", "dual_sum", "lr_product",
    "lr_product_tableau", "plethysm", "schur_character", "weyl_dim",
    "LayeredForm", "TowerSpace", "build_space", "normalize", "parse_expr",
    "restrict_to_fiber",
    "CohomologyTable", "check_collection", "cohomology", "euler_char",
    "ext_table", "pushforward_once", "serre_dual_pair_check",
    "serre_duality_holds",
    "ExactSequenceSpec", "Undetermined", "euler_consistency", "les_force",
]
