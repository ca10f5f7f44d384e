"""The 3d R operator on F^(x)3: elements, action, symmetries and identities."""

from __future__ import annotations

from .aq import aq_fundamental_action, check_aq_intertwiner, fundamental_action, tensor_action
from .checks import (check_boundary_eigen, check_involution, check_symmetries,
                     check_tetrahedron, tetrahedron_sides)
from .element import (BoundaryVector, RIndex, boundary_coefficient, boundary_vector, r_apply,
                      r_apply_sequence, r_column, r_element, r_element_extended, r_row, r_value)
from .identities import (LEMMAS, LINEAR_LEMMAS, QUADRATIC_LEMMAS, RECURSIONS,
                         check_lemma_identities, check_recursion, relation_residual, sweep)

__all__ = [
    "RIndex", "BoundaryVector", "r_element", "r_element_extended", "r_value", "r_column", "r_row",
    "r_apply", "r_apply_sequence", "boundary_coefficient", "boundary_vector",
    "check_involution", "check_symmetries", "check_tetrahedron", "tetrahedron_sides",
    "check_boundary_eigen", "RECURSIONS", "LINEAR_LEMMAS", "QUADRATIC_LEMMAS", "LEMMAS",
    "check_recursion", "check_lemma_identities", "relation_residual", "sweep",
    "fundamental_action", "tensor_action", "aq_fundamental_action", "check_aq_intertwiner",
]
