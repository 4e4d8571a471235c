import numpy as np
import pytest

from gibbsmix.oracle import random_density_matrix, random_hermitian, rng_from_seed


@pytest.fixture
def rng():
    return rng_from_seed(20240611)


def random_pair(rng, dim):
    """Random density matrix and Hamiltonian of the same dimension."""
    return random_density_matrix(dim, rng), random_hermitian(dim, rng)


def commuting_pair(rng, dim):
    """Density matrix diagonal in the eigenbasis of a random Hamiltonian."""
    h = random_hermitian(dim, rng)
    _, basis = np.linalg.eigh(h)
    p = rng.dirichlet(np.ones(dim))
    return (basis * p) @ basis.conj().T, h
