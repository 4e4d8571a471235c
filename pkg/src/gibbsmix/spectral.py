"""Dense Hermitian linear algebra for small quantum systems.

The eigensolver is a cyclic complex Jacobi method. It is slow compared with
LAPACK but exact enough, deterministic, and the matrices handled here are tiny
(qubits, qutrits, a handful of levels).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from gibbsmix.errors import (
    DimensionMismatchError,
    InvalidStateError,
    NoConvergenceError,
    NotHermitianError,
)

Ordering = Literal["ascending", "non-increasing"]

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
NEGATIVITY_TOL = 1e-10
OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100

# eigenvalues of a PSD matrix below this fraction of the largest one are
# rounding noise; sqrt would inflate them to ~1e-8
SQRT_CUTOFF = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues with their orthonormal eigenvectors.

    Column ``k`` of ``eigenvectors`` belongs to ``eigenvalues[k]``. The
    eigenvalues are sorted according to ``ordering``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    ordering: Ordering

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatchError(f"expected a non-empty square matrix, got shape {a.shape}")
    return a


def as_hermitian(matrix) -> np.ndarray:
    """Validate that ``matrix`` is Hermitian and return it as a complex array.

    Raises:
        DimensionMismatchError: if the input is not a square matrix.
        NotHermitianError: if any entry differs from the conjugate of its
            transpose partner by more than ``HERMITICITY_TOL``.
    """
    a = _square(matrix)
    deviation = np.max(np.abs(a - a.conj().T))
    if deviation > HERMITICITY_TOL:
        raise NotHermitianError(f"matrix is not Hermitian (max |A - A^dagger| = {deviation:.3e})")
    return a


def jacobi_eigh(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Unsorted eigenvalues and eigenvectors of a Hermitian matrix.

    Cyclic sweeps over all pivots (p, q); each step removes the phase of the
    pivot and applies a real symmetric Schur rotation. Stops once the
    off-diagonal Frobenius norm drops below ``OFFDIAG_TOL`` (relative to the
    Frobenius norm of the input when that exceeds one).
    """
    a = as_hermitian(matrix).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = OFFDIAG_TOL * max(1.0, np.linalg.norm(a))
    off_diagonal = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.linalg.norm(a[off_diagonal]))

    residual = off_norm()
    for _ in range(MAX_SWEEPS):
        if residual <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = abs(a[p, q])
                if g == 0.0:
                    continue
                phase = a[p, q] / g
                tau = (a[q, q].real - a[p, p].real) / (2.0 * g)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # columns times [[c, s], [-s conj(phase), c conj(phase)]], rows by its adjoint
                sp, cp = s * phase.conjugate(), c * phase.conjugate()
                for m in (a, v):
                    col_p = m[:, p].copy()
                    m[:, p] = c * col_p - sp * m[:, q]
                    m[:, q] = s * col_p + cp * m[:, q]
                row_p = a[p, :].copy()
                a[p, :] = c * row_p - sp.conjugate() * a[q, :]
                a[q, :] = s * row_p + cp.conjugate() * a[q, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        residual = off_norm()
    else:
        if residual > threshold:
            raise NoConvergenceError(
                f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps", residual
            )
    return np.diag(a).real.copy(), v


def decompose(op, ordering: Ordering = "ascending") -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian operator.

    ``"ascending"`` orders eigenvalues from the lowest up (energy levels);
    ``"non-increasing"`` from the largest down (populations). Ties keep the
    order in which the solver produced them, so repeated calls on the same
    input give bit-identical output.
    """
    if ordering not in ("ascending", "non-increasing"):
        raise ValueError(f"unknown ordering {ordering!r}")
    a = as_hermitian(op)
    return _cached_decompose(a.tobytes(), a.shape[0], ordering)


# Hamiltonians are decomposed over and over in mixtures and sweeps; results
# are returned read-only so sharing them is safe
@lru_cache(maxsize=512)
def _cached_decompose(data: bytes, n: int, ordering: Ordering) -> SpectralDecomposition:
    values, vectors = jacobi_eigh(np.frombuffer(data, dtype=complex).reshape(n, n))
    key = values if ordering == "ascending" else -values
    order = np.argsort(key, kind="stable")
    values, vectors = values[order], vectors[:, order]
    values.setflags(write=False)
    vectors.setflags(write=False)
    return SpectralDecomposition(values, vectors, ordering)


def density_decomposition(rho) -> SpectralDecomposition:
    """Validated, clipped spectrum of a density matrix in non-increasing order.

    Eigenvalues in ``[-NEGATIVITY_TOL, 0)`` are set to zero and the spectrum
    renormalised to unit sum.

    Raises:
        InvalidStateError: trace off by more than ``TRACE_TOL`` or an eigenvalue
            below ``-NEGATIVITY_TOL``.
    """
    a = as_hermitian(rho)
    trace = np.trace(a).real
    if abs(trace - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"density matrix trace is {trace!r}, expected 1")
    dec = decompose(a, "non-increasing")
    p = dec.eigenvalues
    if p[-1] < -NEGATIVITY_TOL:
        raise InvalidStateError(f"density matrix has eigenvalue {p[-1]!r} < 0")
    p = np.clip(p, 0.0, None)
    p = p / p.sum()
    return SpectralDecomposition(p, dec.eigenvectors, "non-increasing")


def as_density_matrix(rho) -> np.ndarray:
    """Validate ``rho`` as a density matrix and return it as a complex array."""
    density_decomposition(rho)
    return np.asarray(rho, dtype=complex)


def psd_sqrt(matrix) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix.

    Negative and noise-level eigenvalues are treated as zero.
    """
    dec = decompose(matrix, "ascending")
    w = dec.eigenvalues
    cutoff = SQRT_CUTOFF * max(abs(w[0]), abs(w[-1]))
    w = np.where(w > cutoff, w, 0.0)
    v = dec.eigenvectors
    root = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def matrix_sqrt(rho) -> np.ndarray:
    """Square root of a density matrix, computed from its spectrum."""
    as_density_matrix(rho)
    return psd_sqrt(rho)


def trace_product(a, b) -> float:
    """``tr(a @ b)`` for Hermitian ``a`` and ``b``, returned as a real number."""
    a = _square(a)
    b = _square(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes {a.shape} and {b.shape} differ")
    value = np.sum(a * b.T)
    scale = max(1.0, float(np.linalg.norm(a) * np.linalg.norm(b)))
    if abs(value.imag) > HERMITICITY_TOL * scale:
        raise NotHermitianError(f"tr(ab) has imaginary part {value.imag:.3e}")
    return float(value.real)


def commutator_norm(a, b) -> float:
    """Frobenius norm of ``[a, b]``."""
    a = _square(a)
    b = _square(b)
    return float(np.linalg.norm(a @ b - b @ a))


def check_same_dim(*matrices) -> int:
    dims = {np.shape(m)[0] for m in matrices}
    if len(dims) != 1:
        raise DimensionMismatchError(f"operators have different dimensions {sorted(dims)}")
    return dims.pop()
