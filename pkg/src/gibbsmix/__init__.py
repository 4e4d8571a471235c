"""Ergotropy, mixing ergotropy and distinguishability for finite-dimensional
quantum states, with brute-force oracles and a scenario runner."""

from gibbsmix.ergotropy import (
    ErgotropyReport,
    RestrictedErgotropyReport,
    ergotropy,
    is_passive,
    optimal_unitary,
    passive_state,
    restricted_ergotropy,
)
from gibbsmix.errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    DomainError,
    GibbsMixError,
    InvalidStateError,
    NoConvergenceError,
    NotHermitianError,
    PreconditionError,
    PressureMismatchError,
    WeightError,
)
from gibbsmix.majorization import (
    MonotonicityDiagnosis,
    gadi_first_order_check,
    gadi_margin,
    majorizes,
    quantum_monotonicity_violation,
    quasiclassical_mixing_monotone,
)
from gibbsmix.mixing import (
    MixingReport,
    bloch_mixing_ergotropy,
    bloch_mixing_ergotropy_radial_derivative,
    bloch_restricted_mixing_ergotropy,
    instrument_gap,
    instrument_gap_lower_bound,
    mixing_ergotropy,
    mixing_ergotropy_pure_overlap,
    symmetric_gap_configuration,
    two_level_hamiltonian,
    two_state_configuration,
)
from gibbsmix.spectral import SpectralDecomposition, decompose, matrix_sqrt, trace_product
from gibbsmix.states import (
    BlochState,
    ClassicalGasSpec,
    MixtureSpec,
    binary_entropy,
    bloch_distinguishability,
    bloch_to_density,
    classical_entropy,
    classical_mixing_entropy,
    density_to_bloch,
    distinguishability,
    gibbs_state,
    mix,
    pure_state,
    quantum_mixing_entropy,
    tolman_entropy,
    von_neumann_entropy,
)

__version__ = "0.1.0"
