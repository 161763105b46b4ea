"""Super quantum discord of two-qubit X states under weak measurements.

The discord is reduced to the minimum of a one-variable function ``F`` on
``[0, 1]``; :func:`super_quantum_discord` returns the full report.  An
operator-level brute-force search in :mod:`superdiscord.oracle` provides an
independent check, and :mod:`superdiscord.channel` covers phase damping.
"""
__version__ = "0.1.0"

from .channel import (
    DampingParams,
    damping_sweep,
    kraus_apply,
    phase_damp_bloch,
    werner_discord_loss,
    werner_sqd_damped,
)
from .entropy import entropic_E, entropy4, mutual_information
from .errors import (
    CorollaryViolation,
    DegenerateBranch,
    DegenerateState,
    DomainError,
    InvalidRegion,
    NewtonDiverged,
    NotHermitian,
    NotPositive,
    NotXShaped,
    SingularDerivative,
    SQDError,
    StateError,
    TraceNotOne,
)
from .optimizer import Case, classify_case, minimize_F, newton_refine
from .oracle import SU2Element, brute_force_min_conditional_entropy, conditional_state_direct
from .sqd import SqdReport, bell_diagonal_sqd, classical_correlation, super_quantum_discord
from .weakmeas import FContext, F_prime, F_second, F_value
from .xstate import (
    BlochX,
    SpectrumX,
    XDensityMatrix,
    bell_diagonal,
    bloch_from_density,
    density_from_bloch,
    example2,
    example3,
    maximally_mixed,
    random_xstate,
    spectrum,
    state_from_json,
    state_to_json,
    validate_density,
    werner,
)
