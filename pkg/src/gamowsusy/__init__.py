"""Resonances and complex Darboux deformations of the radial square well."""

__version__ = "0.1.0"

from .darboux import (
    CLASSES,
    DarbouxPotential,
    argand_export,
    classify_asymptotics,
    darboux_potential,
    darboux_values,
    superpotential,
    tail_coefficients,
    transform_solution,
)
from .errors import (
    ApproximationDomainError,
    ApproximationWarning,
    ClassificationError,
    ConvergenceError,
    DomainError,
    NodeError,
    ParityError,
    PoleError,
    PreconditionError,
    RangeError,
)
from .radial import RadialFunction
from .resonance import (
    MATCHED,
    PURE,
    GamowFunction,
    ResonanceRecord,
    allowed_m,
    analytic_resonance,
    gamow_function,
    newton_step,
    outgoing_residual,
    real_q_levels,
    refine_pole,
    refine_record,
    resonance_indices,
    seed_wavenumber,
)
from .scattering import (
    BoundState,
    ComplexPoint,
    PotentialSpec,
    ScatteringData,
    bound_states,
    interaction_parameter,
    phase_shift,
    pole_function,
    s_matrix,
    wavefunction,
)
from .specfun import exterior_basis, interior_basis, sph_bessel, sph_bessel_deriv, wronskian
