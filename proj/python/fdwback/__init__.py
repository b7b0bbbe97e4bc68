"""Backward problem for the time-fractional diffusion-wave equation (1 < alpha < 2).

Thin Python facade over the C++ core: Mittag-Leffler evaluation, psi zeros,
the Lemma-2 style bound on the largest zero, the spectral forward/backward
solver, and the non-uniqueness witnesses at exceptional final times.
"""

from ._core import (
    AccuracyError,
    BackwardDiagnostics,
    BracketError,
    ConvergenceError,
    DegenerateModeError,
    IllPosedError,
    MlValue,
    ModeMatrix,
    PoleError,
    Spectrum,
    ZeroBracket,
    ZeroSet,
    backward,
    dirichlet_laplacian_1d,
    eta_upper_bound,
    exceptional_set,
    find_zeros,
    forward,
    gamma,
    kappa_constants,
    ml,
    ml_asymptotic,
    mode_matrix,
    norm_h2,
    norm_l2,
    nu_integrals,
    null_mode,
    ode_backward,
    ode_forward,
    psi,
    psi_leading_constant,
    safe_time_threshold,
    user_spectrum,
)

__all__ = [
    "AccuracyError",
    "BackwardDiagnostics",
    "BracketError",
    "ConvergenceError",
    "DegenerateModeError",
    "IllPosedError",
    "MlValue",
    "ModeMatrix",
    "PoleError",
    "Spectrum",
    "ZeroBracket",
    "ZeroSet",
    "backward",
    "dirichlet_laplacian_1d",
    "eta_upper_bound",
    "exceptional_set",
    "find_zeros",
    "forward",
    "gamma",
    "kappa_constants",
    "ml",
    "ml_asymptotic",
    "mode_matrix",
    "norm_h2",
    "norm_l2",
    "nu_integrals",
    "null_mode",
    "ode_backward",
    "ode_forward",
    "psi",
    "psi_leading_constant",
    "safe_time_threshold",
    "user_spectrum",
]

__version__ = "0.1.0"
