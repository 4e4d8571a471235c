"""Majorization of weight vectors and the degree-of-mixing question.

A weight vector ``lam`` majorizes ``mu`` when every prefix sum of ``lam``
sorted downwards dominates the matching prefix sum of ``mu``: ``lam`` is the
less mixed of the two. For orthonormal pure components less mixing always
means less mixing ergotropy. For non-orthogonal qubit states this can fail,
which :func:`quantum_monotonicity_violation` detects.
"""

from dataclasses import dataclass

import numpy as np

from gibbsmix.errors import DimensionMismatchError, DomainError, PreconditionError, WeightError
from gibbsmix.mixing import bloch_mixing_ergotropy, mixing_ergotropy
from gibbsmix.spectral import decompose
from gibbsmix.states import BlochState, MixtureSpec, pure_state

WEIGHT_TOL = 1e-12
MONOTONICITY_TOL = 1e-10
# relative; the qubit closed form keeps full relative precision even at tiny
# angles where both mixing ergotropies are O(phi^2)
DETECTOR_RTOL = 1e-12


def as_weight_vector(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float).reshape(-1)
    if len(w) == 0 or np.any(w < 0) or not np.all(np.isfinite(w)):
        raise WeightError(f"weights must be non-negative, got {w.tolist()}")
    if abs(w.sum() - 1.0) > WEIGHT_TOL:
        raise WeightError(f"weights sum to {w.sum()!r}, expected 1")
    return w


def _padded(lam, mu) -> tuple[np.ndarray, np.ndarray]:
    lam = as_weight_vector(lam)
    mu = as_weight_vector(mu)
    m = max(len(lam), len(mu))
    lam = np.pad(lam, (0, m - len(lam)))
    mu = np.pad(mu, (0, m - len(mu)))
    return lam, mu


def majorizes(lam, mu, tol: float = WEIGHT_TOL) -> bool:
    """True if ``lam`` majorizes ``mu``. Vectors of unequal length are
    zero-padded."""
    lam, mu = _padded(lam, mu)
    lam_prefix = np.cumsum(np.sort(lam)[::-1])
    mu_prefix = np.cumsum(np.sort(mu)[::-1])
    return bool(np.all(lam_prefix >= mu_prefix - tol))


def quasiclassical_mixing_monotone(lam, mu, h, components=None) -> tuple[float, float]:
    """Per-particle mixing ergotropies ``(dW(mu), dW(lam))`` for orthonormal
    pure components.

    ``components`` are M orthonormal state vectors (columns); by default the
    M lowest eigenvectors of ``h``. Components with zero weight are dropped.

    Raises:
        PreconditionError: if ``lam`` does not majorize ``mu``.
    """
    lam, mu = _padded(lam, mu)
    if not majorizes(lam, mu):
        raise PreconditionError(f"{lam.tolist()} does not majorize {mu.tolist()}")
    h = np.asarray(h, dtype=complex)
    m = len(lam)
    if h.shape[0] < m:
        raise DimensionMismatchError(f"need dim >= {m} for {m} orthonormal components, got {h.shape[0]}")
    if components is None:
        components = decompose(h, "ascending").eigenvectors[:, :m]
    components = np.asarray(components, dtype=complex)
    projectors = [pure_state(components[:, k]) for k in range(m)]

    def work(weights):
        keep = weights > 0
        spec = MixtureSpec([p for p, k in zip(projectors, keep) if k], weights[keep])
        return mixing_ergotropy(spec, h).per_particle

    return work(mu), work(lam)


@dataclass(frozen=True)
class MonotonicityDiagnosis:
    holds: bool
    delta_w_lambda: float
    delta_w_mu: float
    first_order_margin: float


def _check_two_weights(lam, mu) -> tuple[np.ndarray, np.ndarray]:
    lam = as_weight_vector(lam)
    mu = as_weight_vector(mu)
    if len(lam) != 2 or len(mu) != 2:
        raise PreconditionError("the quantum monotonicity check handles two gases only")
    tol = WEIGHT_TOL
    if lam[0] < lam[1] - tol or mu[0] < mu[1] - tol or lam[0] < mu[0] - tol:
        raise PreconditionError(
            f"need lam1 >= lam2, mu1 >= mu2, lam1 >= mu1; got lam={lam.tolist()}, mu={mu.tolist()}"
        )
    return lam, mu


def quantum_monotonicity_violation(lam, mu, n1: BlochState, n2: BlochState,
                                   epsilon: float = 1.0) -> MonotonicityDiagnosis:
    """Compare the mixing ergotropy of two qubit gases under weights ``lam``
    (less mixed) and ``mu`` (more mixed).

    ``holds`` is False when the more mixed weights give strictly less mixing
    ergotropy. ``first_order_margin`` is :func:`gadi_margin` for the same
    inputs, or NaN when ``|n1| > |n2|`` or ``n2`` is the zero vector.
    """
    lam, mu = _check_two_weights(lam, mu)
    states = [n1, n2]
    dw_lam = bloch_mixing_ergotropy(states, lam, epsilon)
    dw_mu = bloch_mixing_ergotropy(states, mu, epsilon)
    r1, r2 = n1.norm, n2.norm
    margin = gadi_margin(lam[0], mu[0], r1 / r2) if 0 < r2 and r1 <= r2 else float("nan")
    return MonotonicityDiagnosis(
        holds=dw_mu >= dw_lam - DETECTOR_RTOL * max(dw_mu, dw_lam),
        delta_w_lambda=dw_lam,
        delta_w_mu=dw_mu,
        first_order_margin=margin,
    )


def gadi_margin(lambda1: float, mu1: float, ratio: float) -> float:
    """``lambda1 + mu1 - 1 - lambda1 mu1 (1 - ratio)``.

    ``ratio`` is ``|n1| / |n2|``. To first order in the angle between the
    Bloch vectors, monotonicity holds exactly when this is non-negative.
    """
    for name, value in (("lambda1", lambda1), ("mu1", mu1), ("ratio", ratio)):
        if not 0.0 <= value <= 1.0:
            raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return lambda1 + mu1 - 1.0 - lambda1 * mu1 * (1.0 - ratio)


def gadi_first_order_check(lambda1: float, mu1: float, ratio: float) -> bool:
    """Small-angle prediction that monotonicity holds."""
    return gadi_margin(lambda1, mu1, ratio) >= -WEIGHT_TOL
