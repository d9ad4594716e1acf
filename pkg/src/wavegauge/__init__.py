"""wavegauge: travelling-wave stability certificates for bistable reaction-diffusion.

Builds the front profile, evaluates the explicit stability-constant pipeline,
verifies the underlying functional inequalities numerically, and validates the
deterministic decay envelope and the stochastic exit-probability bound by
simulation.
"""

__version__ = "0.1.0"

from .errors import ConfigError, NumericsError, WavegaugeError
from .grid import Field, GridSpec, apply_laplacian, inner, norms, trapz
from .reaction import (
    ReactionSpec,
    linearization_remainder,
    make_cubic,
    make_nagumo,
    shifted_increment,
    validate_assumptions,
)
from .wave import (
    WaveIntegrals,
    WaveParams,
    WaveProfile,
    find_landmarks,
    gamma_limits,
    make_shifter,
    nagumo_profile,
    profile_residual,
    solve_profile,
    verify_profile_bounds,
    weighted_integrals,
)
