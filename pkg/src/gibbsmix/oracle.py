"""Brute-force and sampling cross-checks.

Nothing here is used by the analytic code paths; these functions exist so that
tests can confront every closed form with an independent computation.
"""

from itertools import permutations
from typing import Callable

import numpy as np

from gibbsmix.errors import DimensionTooLargeError, DomainError
from gibbsmix.spectral import as_density_matrix, check_same_dim, trace_product

MAX_ENUMERATION_DIM = 8


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.uint64(seed)))


def haar_unitaries(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` Haar-distributed unitaries, shape ``(count, dim, dim)``.

    QR of a complex Ginibre matrix with the phases of ``R``'s diagonal moved
    into ``Q`` so that the triangular factor has a positive real diagonal.
    """
    if dim < 1:
        raise DomainError(f"dimension must be positive, got {dim!r}")
    z = (rng.standard_normal((count, dim, dim)) + 1j * rng.standard_normal((count, dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    return q * (d / np.abs(d))[:, None, :]


def sample_haar_unitary(dim: int, seed: int) -> np.ndarray:
    return haar_unitaries(dim, 1, rng_from_seed(seed))[0]


def random_density_matrix(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Density matrix ``G G^dagger / tr`` from a complex Gaussian ``dim x rank`` matrix."""
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    x = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * scale * (x + x.conj().T)


def extracted_work(rho, h, unitaries: np.ndarray) -> np.ndarray:
    """``tr(rho H) - tr(U rho U^dagger H)`` for each unitary in a stack."""
    rho = np.asarray(rho, dtype=complex)
    h = np.asarray(h, dtype=complex)
    rotated = unitaries @ rho @ np.conj(np.swapaxes(unitaries, 1, 2))
    final = np.einsum("kij,ji->k", rotated, h).real
    return trace_product(rho, h) - final


def ergotropy_by_sampling(rho, h, samples: int = 2000, seed: int = 0, extra_unitaries=None) -> float:
    """Best work found over ``samples`` Haar-random unitaries.

    A lower bound on the ergotropy. Unitaries in ``extra_unitaries`` are
    tried as well, which lets a test add a known optimum.
    """
    if samples < 1:
        raise DomainError(f"need at least one sample, got {samples!r}")
    dim = check_same_dim(rho, h)
    as_density_matrix(rho)
    unitaries = haar_unitaries(dim, samples, rng_from_seed(seed))
    if extra_unitaries is not None:
        unitaries = np.concatenate([unitaries, np.reshape(extra_unitaries, (-1, dim, dim))])
    return float(np.max(extracted_work(rho, h, unitaries)))


def restricted_ergotropy_by_enumeration(rho, h) -> float:
    """Best work over all ``n!`` rearrangements of the energy populations.

    The energy basis comes from LAPACK rather than the package eigensolver.
    """
    dim = check_same_dim(rho, h)
    if dim > MAX_ENUMERATION_DIM:
        raise DimensionTooLargeError(f"enumeration limited to dim <= {MAX_ENUMERATION_DIM}, got {dim}")
    rho = as_density_matrix(rho)
    energies, basis = np.linalg.eigh(np.asarray(h, dtype=complex))
    pi = np.einsum("ik,ij,jk->k", basis.conj(), rho, basis).real
    initial = trace_product(rho, h)
    return max(initial - sum(e * pi[s] for e, s in zip(energies, perm)) for perm in permutations(range(dim)))


def finite_difference(fn: Callable[[float], float], x: float, step: float = 1e-5,
                      domain: tuple[float, float] | None = None, agreement: float = 1e-7) -> float:
    """Central difference of ``fn`` at ``x``.

    When the estimates at ``step`` and ``step / 2`` disagree by more than
    ``agreement``, their Richardson combination is returned instead.

    Raises:
        DomainError: if ``x +- step`` leaves ``domain``.
    """
    if domain is not None and not (domain[0] <= x - step and x + step <= domain[1]):
        raise DomainError(f"x +- step = [{x - step!r}, {x + step!r}] leaves {domain!r}")

    def central(h):
        return (fn(x + h) - fn(x - h)) / (2.0 * h)

    coarse = central(step)
    fine = central(0.5 * step)
    if abs(coarse - fine) > agreement:
        return (4.0 * fine - coarse) / 3.0
    return coarse
