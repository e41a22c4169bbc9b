from eo_curves.hurwitz.numbers import hurwitz_number, labeled_hurwitz, branch_points, automorphisms
from eo_curves.hurwitz.free_energy import xi_polynomial, elsv_coefficients, free_energy_H, fh_recursion_residual, fh03_recursion_residual, \
    XiPolynomial, ELSVTable, FreeEnergyH, assemble_free_energy, xi_conversion_check, one_point_check
from eo_curves.hurwitz.scoeff import s_coeff_H, s_coeff_H_assembled, s_coeff_H_recursive, heat_residual_H, \
    s0_identity_residual, lambert_inversion_check, SHurwitz
from eo_curves.hurwitz.zhou import QHbarExpr, zhou_series, zhou_term, zhou_series_checks, pq_commutator_check
