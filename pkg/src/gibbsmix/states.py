"""Quantum and classical states, entropies and distinguishability.

All entropies are in nats. The classical gas entropy ``N ln(V/N)`` leaves out
the temperature-dependent ``N f(T)`` term; it cancels in every entropy
difference computed here.
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

import numpy as np

from gibbsmix.errors import (
    DimensionMismatchError,
    DomainError,
    InvalidStateError,
    PressureMismatchError,
    WeightError,
)
from gibbsmix.spectral import (
    as_density_matrix,
    as_hermitian,
    check_same_dim,
    decompose,
    density_decomposition,
    matrix_sqrt,
    SQRT_CUTOFF,
    trace_product,
)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

BLOCH_TOL = 1e-12
WEIGHT_TOL = 1e-12
DENSITY_RATIO_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class BlochState:
    """Spin-1/2 state ``(1 + n.sigma)/2`` given by its Bloch vector ``n``.

    Vectors whose length exceeds one by at most ``BLOCH_TOL`` are rescaled
    onto the sphere; anything longer is rejected.
    """

    vector: np.ndarray

    def __post_init__(self):
        n = np.array(self.vector, dtype=float).reshape(-1)
        if n.shape != (3,) or not np.all(np.isfinite(n)):
            raise InvalidStateError(f"Bloch vector must be 3 finite reals, got {self.vector!r}")
        r = float(np.linalg.norm(n))
        if r > 1.0 + BLOCH_TOL:
            raise InvalidStateError(f"Bloch vector length {r!r} exceeds 1")
        if r > 1.0:
            n = n / r
        n.setflags(write=False)
        object.__setattr__(self, "vector", n)

    @classmethod
    def from_polar(cls, radius: float, theta: float, azimuth: float = 0.0) -> "BlochState":
        """Bloch vector of length ``radius`` at polar angle ``theta`` from the z axis."""
        return cls(radius * np.array([np.sin(theta) * np.cos(azimuth),
                                      np.sin(theta) * np.sin(azimuth),
                                      np.cos(theta)]))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def density_matrix(self) -> np.ndarray:
        return bloch_to_density(self)

    def __repr__(self):
        x, y, z = self.vector
        return f"BlochState(({x!r}, {y!r}, {z!r}))"


@dataclass(frozen=True, eq=False)
class MixtureSpec:
    """Component states together with their particle numbers.

    ``weights`` are the particle fractions ``N_alpha / sum(N)``.
    """

    components: tuple
    counts: np.ndarray
    weights: np.ndarray = field(init=False)

    def __post_init__(self):
        comps = tuple(as_density_matrix(c) for c in self.components)
        counts = np.array(self.counts, dtype=float).reshape(-1)
        if not comps:
            raise WeightError("a mixture needs at least one component")
        if len(counts) != len(comps):
            raise WeightError(f"{len(comps)} components but {len(counts)} counts")
        if not np.all(np.isfinite(counts)) or np.any(counts <= 0):
            raise WeightError(f"particle counts must be positive, got {counts.tolist()}")
        check_same_dim(*comps)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "weights", counts / counts.sum())

    @classmethod
    def from_weights(cls, components: Sequence, weights: Sequence[float], total: float = 1.0) -> "MixtureSpec":
        w = np.asarray(weights, dtype=float)
        if abs(w.sum() - 1.0) > WEIGHT_TOL:
            raise WeightError(f"weights sum to {w.sum()!r}, expected 1")
        return cls(tuple(components), w * total)

    @property
    def dim(self) -> int:
        return self.components[0].shape[0]

    @property
    def total_count(self) -> float:
        return float(self.counts.sum())


@dataclass(frozen=True)
class ClassicalGasSpec:
    """Ideal gas of ``N`` particles in volume ``V``."""

    N: float
    V: float

    def __post_init__(self):
        if not (self.N > 0 and self.V > 0):
            raise DomainError(f"N and V must be positive, got N={self.N!r}, V={self.V!r}")


def pure_state(vector) -> np.ndarray:
    """Projector onto the normalised ``vector``."""
    psi = np.asarray(vector, dtype=complex).reshape(-1)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise InvalidStateError("zero vector has no associated state")
    psi = psi / norm
    return np.outer(psi, psi.conj())


def gibbs_state(h, temperature: float) -> np.ndarray:
    """Equilibrium state ``exp(-H/T)/Z`` at temperature ``T > 0``."""
    if not temperature > 0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")
    dec = decompose(h, "ascending")
    boltzmann = np.exp(-(dec.eigenvalues - dec.eigenvalues[0]) / temperature)
    p = boltzmann / boltzmann.sum()
    v = dec.eigenvectors
    rho = (v * p) @ v.conj().T
    return 0.5 * (rho + rho.conj().T)


def maximally_mixed(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex) / dim


def tensor_product(*operators) -> np.ndarray:
    return reduce(np.kron, [np.asarray(op, dtype=complex) for op in operators])


def mix(spec: MixtureSpec) -> np.ndarray:
    """Mixed state ``sum_alpha lambda_alpha rho_alpha``."""
    rho = sum(w * c for w, c in zip(spec.weights, spec.components))
    return as_density_matrix(0.5 * (rho + rho.conj().T))


def shannon_entropy(probabilities) -> float:
    p = np.asarray(probabilities, dtype=float)
    p = p[p > 0]
    return float(0.0 - np.sum(p * np.log(p)))


def von_neumann_entropy(rho) -> float:
    """``-tr(rho ln rho)`` in nats."""
    return shannon_entropy(density_decomposition(rho).eigenvalues)


def binary_entropy(x: float) -> float:
    """``h(x) = -x ln x - (1 - x) ln(1 - x)``, with ``h(0) = h(1) = 0``."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"binary entropy needs 0 <= x <= 1, got {x!r}")
    return shannon_entropy([x, 1.0 - x])


def energy_populations(rho, h) -> np.ndarray:
    """Diagonal of ``rho`` in the eigenbasis of ``h`` (levels ascending)."""
    check_same_dim(rho, h)
    rho = as_density_matrix(rho)
    basis = decompose(h, "ascending").eigenvectors
    return np.einsum("ik,ij,jk->k", basis.conj(), rho, basis).real


def tolman_entropy(rho, h) -> float:
    """Shannon entropy of the energy-level occupations of ``rho``.

    For a degenerate ``h`` the value depends on which eigenbasis is picked
    inside each degenerate level.
    """
    pi = np.clip(energy_populations(rho, h), 0.0, None)
    return shannon_entropy(pi / pi.sum())


def distinguishability(rho1, rho2) -> float:
    """Uhlmann fidelity ``[tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2``, in [0, 1]."""
    n = check_same_dim(rho1, rho2)
    # tr sqrt(sqrt(rho1) rho2 sqrt(rho1)) is the sum of singular values of
    # sqrt(rho1) sqrt(rho2); reading them off the Hermitian dilation avoids
    # squaring small singular values below the rounding floor
    a = matrix_sqrt(rho1) @ matrix_sqrt(rho2)
    dilation = np.zeros((2 * n, 2 * n), dtype=complex)
    dilation[:n, n:] = a
    dilation[n:, :n] = a.conj().T
    overlap = 0.5 * np.sum(np.abs(decompose(dilation).eigenvalues))
    return float(np.clip(overlap**2, 0.0, 1.0))


def _purity_gap(state: BlochState) -> float:
    """``sqrt(1 - |n|^2)``, i.e. twice the geometric mean of the eigenvalues.

    A small eigenvalue below ``SQRT_CUTOFF`` times the large one counts as
    zero, matching :func:`~gibbsmix.spectral.psd_sqrt`.
    """
    r = state.norm
    small, large = 0.5 * (1.0 - r), 0.5 * (1.0 + r)
    if small <= SQRT_CUTOFF * large:
        return 0.0
    return float(np.sqrt(1.0 - r) * np.sqrt(1.0 + r))


def bloch_distinguishability(a: BlochState, b: BlochState) -> float:
    """Closed form of :func:`distinguishability` for two qubit states."""
    mixedness = _purity_gap(a) * _purity_gap(b)
    return float(np.clip(0.5 * (1.0 + a.vector @ b.vector + mixedness), 0.0, 1.0))


def bloch_distinguishability_radial_derivative(r1: float, r2: float, phi: float) -> float:
    """d(distinguishability)/d|n1| at fixed |n2| and fixed angle ``phi`` between them.

    Diverges as ``|n1| -> 1``; only defined for ``0 <= r1 < 1``.
    """
    if not (0.0 <= r1 < 1.0 and 0.0 <= r2 <= 1.0):
        raise DomainError(f"need 0 <= |n1| < 1 and 0 <= |n2| <= 1, got {r1!r}, {r2!r}")
    s1 = np.sqrt(1.0 - r1 * r1)
    s2 = np.sqrt(1.0 - r2 * r2)
    return float((np.cos(phi) * r2 * s1 - r1 * s2) / (2.0 * s1))


def hilbert_schmidt_distance(rho1, rho2) -> float:
    """``tr[(rho1 - rho2)^2]``."""
    check_same_dim(rho1, rho2)
    diff = as_hermitian(rho1) - as_hermitian(rho2)
    return trace_product(diff, diff)


def bloch_to_density(a: BlochState) -> np.ndarray:
    n = a.vector
    return 0.5 * (np.eye(2, dtype=complex) + n[0] * PAULI[0] + n[1] * PAULI[1] + n[2] * PAULI[2])


def density_to_bloch(rho) -> BlochState:
    rho = as_density_matrix(rho)
    if rho.shape != (2, 2):
        raise DimensionMismatchError(f"Bloch vectors exist for qubits only, got shape {rho.shape}")
    return BlochState([trace_product(rho, s) for s in PAULI])


def classical_entropy(gas: ClassicalGasSpec) -> float:
    """``N ln(V/N)``."""
    return gas.N * np.log(gas.V / gas.N)


def classical_mixing_entropy(gases: Sequence[ClassicalGasSpec], identical: bool = False) -> float:
    """Entropy gained when the partitions between ideal gases are removed.

    All gases must share pressure and temperature, i.e. the same density
    ``N/V``. Distinct gases each expand into the total volume, giving
    ``sum_alpha N_alpha ln(V_total / V_alpha)``. With ``identical=True`` the
    result is a single gas of ``sum N`` particles in ``sum V`` and the entropy
    does not change.

    Raises:
        PressureMismatchError: if the densities differ by more than
            ``DENSITY_RATIO_TOL`` (relative).
    """
    if not gases:
        raise DomainError("need at least one gas")
    densities = np.array([g.N / g.V for g in gases])
    if np.max(np.abs(densities / densities[0] - 1.0)) > DENSITY_RATIO_TOL:
        raise PressureMismatchError(f"gases have different densities N/V: {densities.tolist()}")
    total_n = sum(g.N for g in gases)
    total_v = sum(g.V for g in gases)
    # final minus initial, with the N ln N terms cancelled analytically
    expansion = sum(g.N * np.log(total_v / g.V) for g in gases)
    if not identical:
        return float(expansion)
    return float(expansion - sum(g.N * np.log(total_n / g.N) for g in gases))


def quantum_mixing_entropy(spec: MixtureSpec) -> float:
    """Mixing entropy per particle, ``S(sum lambda rho) - sum lambda S(rho)``.

    Multiply by ``spec.total_count`` for the total.
    """
    mixed = von_neumann_entropy(mix(spec))
    return float(mixed - sum(w * von_neumann_entropy(c) for w, c in zip(spec.weights, spec.components)))
