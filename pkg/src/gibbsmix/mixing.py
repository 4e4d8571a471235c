"""Mixing ergotropy: the work lost when separated gases are allowed to mix.

Before mixing, each gas alpha can be driven by its own work source, so the
extractable work per particle is ``sum_alpha lambda_alpha W(rho_alpha)``.
After mixing only ``W(sum_alpha lambda_alpha rho_alpha)`` is left. The
difference is never negative and vanishes continuously as the component
states approach each other.

Qubit closed forms assume ``H = epsilon (1 + sigma_3) / 2``; they depend on
the level splitting ``epsilon`` only.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from gibbsmix.ergotropy import ergotropy, restricted_ergotropy
from gibbsmix.errors import DimensionMismatchError, DomainError, WeightError
from gibbsmix.spectral import decompose, density_decomposition
from gibbsmix.states import PAULI, BlochState, MixtureSpec, mix

WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class MixingReport:
    """Ergotropy before and after mixing, per particle and in total.

    ``eigenvalue_form`` is the per-particle mixing ergotropy evaluated from
    sorted spectra alone, ``sum_k e_k (p_k - sum_alpha lambda_alpha p_k,alpha)``;
    it must agree with ``per_particle``.
    """

    n_total: float
    initial: float
    final: float
    per_particle: float
    eigenvalue_form: float
    restricted_initial: float
    restricted_final: float
    restricted_per_particle: float

    @property
    def total(self) -> float:
        return self.n_total * self.per_particle

    @property
    def restricted_total(self) -> float:
        return self.n_total * self.restricted_per_particle


def two_level_hamiltonian(epsilon: float = 1.0) -> np.ndarray:
    """``epsilon (1 + sigma_3) / 2``: excited level along +z."""
    return 0.5 * epsilon * (np.eye(2, dtype=complex) + PAULI[2])


def mixing_ergotropy(spec: MixtureSpec, h) -> MixingReport:
    h = np.asarray(h, dtype=complex)
    if spec.dim != h.shape[0]:
        raise DimensionMismatchError(f"mixture has dim {spec.dim}, Hamiltonian {h.shape[0]}")
    rho = mix(spec)
    lam = spec.weights
    initial = float(sum(w * ergotropy(c, h).ergotropy for w, c in zip(lam, spec.components)))
    final = ergotropy(rho, h).ergotropy

    energies = decompose(h, "ascending").eigenvalues
    mean_sorted = sum(w * density_decomposition(c).eigenvalues for w, c in zip(lam, spec.components))
    eig_form = float(energies @ (density_decomposition(rho).eigenvalues - mean_sorted))

    r_initial = float(sum(w * restricted_ergotropy(c, h).restricted_ergotropy
                          for w, c in zip(lam, spec.components)))
    r_final = restricted_ergotropy(rho, h).restricted_ergotropy
    return MixingReport(
        n_total=spec.total_count,
        initial=initial,
        final=final,
        per_particle=initial - final,
        eigenvalue_form=eig_form,
        restricted_initial=r_initial,
        restricted_final=r_final,
        restricted_per_particle=r_initial - r_final,
    )


def mixing_ergotropy_pure_overlap(overlap: float, epsilon: float = 1.0, n_total: float = 1.0) -> float:
    """Total mixing ergotropy of two equally populated pure gases on a two-level system.

    ``overlap`` is ``|<a1|a2>|``.
    """
    if not 0.0 <= overlap <= 1.0:
        raise DomainError(f"overlap must lie in [0, 1], got {overlap!r}")
    return 0.5 * n_total * epsilon * (1.0 - overlap)


def _check_weights(count: int, weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float).reshape(-1)
    if len(w) != count or count == 0:
        raise WeightError(f"{count} states but {len(w)} weights")
    if np.any(w <= 0) or abs(w.sum() - 1.0) > WEIGHT_TOL:
        raise WeightError(f"weights must be positive and sum to 1, got {w.tolist()}")
    return w


def bloch_mixing_ergotropy(states: Sequence[BlochState], weights, epsilon: float = 1.0) -> float:
    """Per-particle mixing ergotropy of qubit gases,
    ``(eps/2)(sum lambda |n| - |sum lambda n|)``."""
    w = _check_weights(len(states), weights)
    vectors = np.array([s.vector for s in states])
    return 0.5 * epsilon * _norm_defect(w, vectors)


def _norm_defect(w: np.ndarray, vectors: np.ndarray) -> float:
    """``sum w |v| - |sum w v|`` without cancellation for nearly parallel vectors.

    Uses ``(sum w|v|)^2 - |sum w v|^2 = sum_ab w_a w_b (|v_a||v_b| - v_a.v_b)``
    and ``|a||b| - a.b = |a x b|^2 / (|a||b| + a.b)``.
    """
    norms = np.linalg.norm(vectors, axis=1)
    spread = float(w @ norms)
    resultant = float(np.linalg.norm(w @ vectors))
    if spread + resultant == 0.0:
        return 0.0
    excess = 0.0
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            dot = float(vectors[a] @ vectors[b])
            length = norms[a] * norms[b]
            if dot > 0:
                cross = np.cross(vectors[a], vectors[b])
                term = float(cross @ cross) / (length + dot)
            else:
                term = length - dot
            excess += 2.0 * w[a] * w[b] * term
    return excess / (spread + resultant)


def bloch_restricted_mixing_ergotropy(states: Sequence[BlochState], weights, epsilon: float = 1.0) -> float:
    """Per-particle mixing ergotropy when only population swaps are available.

    Only the z components of the Bloch vectors matter.
    """
    w = _check_weights(len(states), weights)
    wz = w * np.array([s.vector[2] for s in states])
    # sum |x| - |sum x| is twice the smaller of the positive and negative parts
    return epsilon * float(min(wz[wz > 0].sum(), -wz[wz < 0].sum()))


def instrument_gap(states: Sequence[BlochState], weights, epsilon: float = 1.0) -> float:
    """Restricted minus unrestricted mixing ergotropy, per particle.

    Positive values mean the coarser instruments lose more work to mixing.
    """
    return (bloch_restricted_mixing_ergotropy(states, weights, epsilon)
            - bloch_mixing_ergotropy(states, weights, epsilon))


def symmetric_gap_configuration(a: float, b: float, m: int) -> tuple[list[BlochState], np.ndarray]:
    """Equal-weight qubit gases with ``lambda n_x = lambda n_y = b`` and
    ``lambda n_z = +a`` for the first half, ``-a`` for the second.

    The z components cancel in the mixture. ``m`` must be even.
    """
    if m < 2 or m % 2:
        raise DomainError(f"number of gases must be even and >= 2, got {m!r}")
    if not a > 0:
        raise DomainError(f"a must be positive, got {a!r}")
    signs = [1.0] * (m // 2) + [-1.0] * (m // 2)
    states = [BlochState([b * m, b * m, sgn * a * m]) for sgn in signs]
    return states, np.full(m, 1.0 / m)


def instrument_gap_lower_bound(a: float, b: float, m: int, epsilon: float = 1.0) -> float:
    """Per-particle lower bound on :func:`instrument_gap` for
    :func:`symmetric_gap_configuration` inputs.

    Follows from ``sqrt(x) - sqrt(x + y) >= -y / (2 sqrt(x))`` applied to each
    component; the result is ``(eps/2) sqrt(2) m |b| (1 - |b| / (a sqrt(2)))``.
    """
    if not a > 0:
        raise DomainError(f"a must be positive, got {a!r}")
    b = abs(b)
    return 0.5 * epsilon * np.sqrt(2.0) * m * b * (1.0 - b / (a * np.sqrt(2.0)))


def bloch_mixing_ergotropy_radial_derivative(r1: float, r2: float, phi: float,
                                             weights=(0.5, 0.5), epsilon: float = 1.0) -> float:
    """d(mixing ergotropy per particle)/d|n1| at fixed |n2| and angle ``phi``.

    Non-negative by the triangle inequality.
    """
    l1, l2 = _check_weights(2, weights)
    resultant = np.sqrt(max(0.0, (l1 * r1) ** 2 + (l2 * r2) ** 2 + 2 * l1 * l2 * r1 * r2 * np.cos(phi)))
    if resultant == 0.0:
        raise DomainError("derivative undefined where the mixed Bloch vector vanishes")
    return float(0.5 * epsilon * l1 * (resultant - l1 * r1 - l2 * r2 * np.cos(phi)) / resultant)


def two_state_configuration(r1: float, r2: float, phi: float) -> tuple[BlochState, BlochState]:
    """Bloch vectors of lengths ``r1`` (along z) and ``r2``, separated by ``phi``."""
    return BlochState.from_polar(r1, 0.0), BlochState.from_polar(r2, phi)

