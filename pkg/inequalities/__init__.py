from inequalities.bernstein import (
    C_CURVES, C_RELATIONS, branch_curve_c, critical_parameters, gradient_norm_squared,
    markov_constant, markov_oracle, markov_profile, markov_profile_max, phi, phi_oracle, phi_squared,
    phi_witness,
)
from inequalities.polarization import (
    D_CURVES, D_RELATIONS, bilinear_sup_norm, branch_curve_d, differential_norm,
    polarization_constant, psi, psi_max, psi_oracle, psi_p_family, psi_q_family, psi_witness,
)
from inequalities.unconditional import (
    max_sign_pattern_ratio, modulus_norm_ratio, p_profile, q_profile, sign_patterns,
    unconditional_constant,
)
from inequalities.figures import FIGURES, figure_frame

__all__ = [
    'C_CURVES', 'C_RELATIONS', 'branch_curve_c', 'critical_parameters', 'gradient_norm_squared',
    'markov_constant', 'markov_oracle', 'markov_profile', 'markov_profile_max', 'phi', 'phi_oracle',
    'phi_squared', 'phi_witness',
    'D_CURVES', 'D_RELATIONS', 'bilinear_sup_norm', 'branch_curve_d', 'differential_norm',
    'polarization_constant', 'psi', 'psi_max', 'psi_oracle', 'psi_p_family', 'psi_q_family',
    'psi_witness',
    'max_sign_pattern_ratio', 'modulus_norm_ratio', 'p_profile', 'q_profile', 'sign_patterns',
    'unconditional_constant',
    'FIGURES', 'figure_frame',
]
