"""Maximal work extractable by cyclic unitary driving.

The ergotropy of ``rho`` with respect to ``H`` is its energy minus the energy
of its passive state, the state where the largest population sits in the
ground level, the next largest in the first excited level, and so on.

The restricted variant only allows permutations of the populations
``<e_k|rho|e_k>`` in the energy basis; coherences cannot be used.
"""

from dataclasses import dataclass

import numpy as np

from gibbsmix.spectral import check_same_dim, decompose, density_decomposition, trace_product
from gibbsmix.states import energy_populations


@dataclass(frozen=True)
class ErgotropyReport:
    """Work bookkeeping for one state.

    ``optimal_permutation[k]`` is the energy level (ascending index) paired
    with the k-th largest eigenvector of rho; the optimal unitary moves that
    population down to level ``k``. Pairs are assigned greedily by largest
    overlap ``|<e_j|p_k>|^2`` so the map is always a permutation. For states
    diagonal in the energy basis it is exactly the level permutation applied.
    """

    initial_energy: float
    passive_energy: float
    ergotropy: float
    populations: np.ndarray
    energies: np.ndarray
    optimal_permutation: tuple


@dataclass(frozen=True)
class RestrictedErgotropyReport:
    """``diagonal[k]`` is the population of level ``k``; ``permutation[k]``
    is the level whose population is moved to level ``k``."""

    diagonal: np.ndarray
    sorted_diagonal: np.ndarray
    energies: np.ndarray
    restricted_ergotropy: float
    permutation: tuple


def _spectra(rho, h):
    check_same_dim(rho, h)
    return density_decomposition(rho), decompose(h, "ascending")


def _greedy_pairing(overlaps: np.ndarray) -> tuple:
    """Column-to-row bijection taking the largest remaining overlap first."""
    n = overlaps.shape[0]
    order = np.argsort(-overlaps, axis=None, kind="stable")
    level_of = [-1] * n
    taken = set()
    for flat in order:
        j, k = divmod(int(flat), n)
        if level_of[k] < 0 and j not in taken:
            level_of[k] = j
            taken.add(j)
    return tuple(level_of)


def ergotropy(rho, h) -> ErgotropyReport:
    """Ergotropy ``tr(rho H) - sum_k p_k e_k`` with ``p`` sorted down, ``e`` up."""
    rho_dec, h_dec = _spectra(rho, h)
    energies = h_dec.eigenvalues
    initial = trace_product(rho, h)
    passive = float(rho_dec.eigenvalues @ energies)
    overlaps = np.abs(h_dec.eigenvectors.conj().T @ rho_dec.eigenvectors) ** 2
    perm = _greedy_pairing(overlaps)
    return ErgotropyReport(
        initial_energy=initial,
        passive_energy=passive,
        ergotropy=initial - passive,
        populations=rho_dec.eigenvalues,
        energies=energies,
        optimal_permutation=perm,
    )


def passive_state(rho, h) -> np.ndarray:
    rho_dec, h_dec = _spectra(rho, h)
    v = h_dec.eigenvectors
    out = (v * rho_dec.eigenvalues) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def is_passive(rho, h, tol: float = 1e-10) -> bool:
    return ergotropy(rho, h).ergotropy <= tol


def optimal_unitary(rho, h) -> np.ndarray:
    """Unitary sending the k-th largest eigenvector of rho to the k-th lowest level."""
    rho_dec, h_dec = _spectra(rho, h)
    return h_dec.eigenvectors @ rho_dec.eigenvectors.conj().T


def restricted_ergotropy(rho, h) -> RestrictedErgotropyReport:
    """Work available from permuting energy-level populations only.

    Sorting the populations down onto ascending levels is optimal by the
    rearrangement inequality.
    """
    pi = energy_populations(rho, h)
    energies = decompose(h, "ascending").eigenvalues
    order = np.argsort(-pi, kind="stable")
    sorted_pi = pi[order]
    value = float(energies @ (pi - sorted_pi))
    return RestrictedErgotropyReport(
        diagonal=pi,
        sorted_diagonal=sorted_pi,
        energies=energies,
        restricted_ergotropy=value,
        permutation=tuple(int(j) for j in order),
    )
