"""Coalgebras, bialgebras, the APN Yang-Baxter equation and factorizable structures."""

from .coalgebra import (Cobracket, InternalConsistencyError, b2_as_printed,
                        bialgebra_matched_pair, check_apn_bialgebra, check_apn_coalgebra,
                        check_bialgebra_via_matched_pair, cobracket_from_dual,
                        dualize_cobracket, zero_cobracket)
from .factorizable import (Double, canonical_s, check_phi_iso, check_quadratic_rb,
                           check_symmetric_rb_qf, double_algebra, double_bialgebra,
                           factorizable_to_rb, factorize, phi_iso, rb_to_factorizable,
                           semidirect_rb_quadratic)
from .ybe import (PLACEMENTS, T_from_s, check_factorizable, check_invariant,
                  check_quasi_triangular, check_s_relations, check_triangular,
                  coboundary_delta, dual_products_from_s, is_solution, placement_product,
                  s_from_T, semidirect_ybe_solution, theorem_ya1_equivalences,
                  ybe_residual)

__all__ = [
    "Cobracket", "InternalConsistencyError", "b2_as_printed", "bialgebra_matched_pair",
    "check_apn_bialgebra", "check_apn_coalgebra", "check_bialgebra_via_matched_pair",
    "cobracket_from_dual", "dualize_cobracket", "zero_cobracket",
    "Double", "canonical_s", "check_phi_iso", "check_quadratic_rb", "check_symmetric_rb_qf",
    "double_algebra", "double_bialgebra", "factorizable_to_rb", "factorize", "phi_iso",
    "rb_to_factorizable", "semidirect_rb_quadratic",
    "PLACEMENTS", "T_from_s", "check_factorizable", "check_invariant",
    "check_quasi_triangular", "check_s_relations", "check_triangular", "coboundary_delta",
    "dual_products_from_s", "is_solution", "placement_product", "s_from_T",
    "semidirect_ybe_solution", "theorem_ya1_equivalences", "ybe_residual",
]
