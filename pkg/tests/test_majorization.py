import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gibbsmix.errors import DomainError, PreconditionError, WeightError
from gibbsmix.majorization import (
    as_weight_vector,
    gadi_first_order_check,
    gadi_margin,
    majorizes,
    quantum_monotonicity_violation,
    quasiclassical_mixing_monotone,
)
from gibbsmix.mixing import two_level_hamiltonian, two_state_configuration
from gibbsmix.oracle import haar_unitaries, random_hermitian, rng_from_seed
from gibbsmix.states import BlochState, binary_entropy

BAND = 5e-3


def random_weights(rng, m):
    w = rng.dirichlet(np.full(m, rng.uniform(0.2, 3.0)))
    w[rng.uniform(size=m) < 0.15] = 0.0
    if w.sum() == 0:
        w[0] = 1.0
    return w / w.sum()


def majorizing_pair(rng, m):
    """``lam`` built from ``mu`` by Robin Hood transfers in reverse."""
    mu = np.sort(random_weights(rng, m))[::-1]
    lam = mu.copy()
    for _ in range(int(rng.integers(0, 4))):
        i, j = sorted(rng.choice(m, 2, replace=False))
        shift = rng.uniform() * lam[j]
        lam[i] += shift
        lam[j] -= shift
    return rng.permutation(lam), rng.permutation(mu)


class TestMajorizes:
    def test_examples(self):
        for mu in ([0.5, 0.5], [0.9, 0.1], [0.3, 0.7]):
            assert majorizes([1, 0], mu)
            assert majorizes(mu, [0.5, 0.5])
        assert not majorizes([0.6, 0.2, 0.2], [0.5, 0.45, 0.05])
        assert not majorizes([0.5, 0.45, 0.05], [0.6, 0.2, 0.2])

    def test_zero_padding(self):
        assert majorizes([0.7, 0.3], [0.4, 0.3, 0.3])
        assert not majorizes([0.4, 0.3, 0.3], [0.7, 0.3])

    def test_rejects_invalid_weights(self):
        with pytest.raises(WeightError):
            as_weight_vector([0.5, 0.6])
        with pytest.raises(WeightError):
            as_weight_vector([1.2, -0.2])

    def test_preorder_properties(self):
        rng = rng_from_seed(31)
        triples = 0
        while triples < 1000:
            m = int(rng.integers(2, 6))
            a, b, c = (random_weights(rng, m) for _ in range(3))
            assert majorizes(a, a)
            if majorizes(a, b) and majorizes(b, a):
                np.testing.assert_allclose(np.sort(a), np.sort(b), atol=1e-9)
            if majorizes(a, b) and majorizes(b, c):
                assert majorizes(a, c)
                triples += 1
            # random triples rarely chain; build one that does
            x, y = majorizing_pair(rng, m)
            y2, z = majorizing_pair(rng, m)
            if majorizes(x, y) and majorizes(y, z):
                assert majorizes(x, z)

    def test_entropy_order_for_two_weights(self, rng):
        for _ in range(1000):
            lam1, mu1 = rng.uniform(size=2)
            lam, mu = [lam1, 1 - lam1], [mu1, 1 - mu1]
            if majorizes(lam, mu):
                assert binary_entropy(lam1) <= binary_entropy(mu1) + 1e-12


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6), st.integers(0, 2**32 - 1))
def test_uniform_is_majorized_by_everything(raw, seed):
    w = np.array(raw) / sum(raw)
    w = w / w.sum()
    assert majorizes(w, np.full(len(w), 1 / len(w)))
    assert majorizes(np.eye(len(w))[0], w)


class TestQuasiclassical:
    def test_examples(self):
        h = np.diag([0.0, 1.0])
        dw_mu, dw_lam = quasiclassical_mixing_monotone([199 / 200, 1 / 200], [0.5, 0.5], h)
        assert dw_mu == pytest.approx(0.5, abs=1e-14)
        assert dw_lam == pytest.approx(0.005, abs=1e-14)
        dw_mu, dw_lam = quasiclassical_mixing_monotone([1, 0], [0.6, 0.4], h)
        assert dw_lam == 0.0
        assert dw_mu > 0
        a, b = quasiclassical_mixing_monotone([0.3, 0.7], [0.7, 0.3], h)
        assert a == pytest.approx(b, abs=1e-15)

    def test_theorem_on_random_instances(self):
        rng = rng_from_seed(37)
        for trial in range(1000):
            m = 2 + trial % 4
            dim = m + int(rng.integers(0, 2))
            lam, mu = majorizing_pair(rng, m)
            h = random_hermitian(dim, rng)
            dw_mu, dw_lam = quasiclassical_mixing_monotone(lam, mu, h)
            assert dw_mu >= dw_lam - 1e-10

    def test_other_eigenbasis_assignments(self, rng):
        h = np.diag([0.0, 0.4, 1.1, 2.0])
        lam, mu = [0.6, 0.3, 0.1], [0.4, 0.35, 0.25]
        reference = quasiclassical_mixing_monotone(lam, mu, h)
        for order in ([1, 0, 2], [3, 1, 0], [2, 3, 1]):
            comps = np.eye(4)[:, order]
            np.testing.assert_allclose(quasiclassical_mixing_monotone(lam, mu, h, comps), reference, atol=1e-12)

    def test_arbitrary_orthonormal_components(self, rng):
        u = haar_unitaries(3, 1, rng)[0]
        dw_mu, dw_lam = quasiclassical_mixing_monotone([0.7, 0.2, 0.1], [0.5, 0.3, 0.2], np.diag([0, 1, 3]), u)
        assert dw_mu >= dw_lam - 1e-10

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            quasiclassical_mixing_monotone([0.5, 0.5], [0.9, 0.1], np.diag([0.0, 1.0]))


class TestQuantumMonotonicity:
    def test_violation_instance(self):
        n1, n2 = two_state_configuration(0.05, 1.0, 0.2)
        diag = quantum_monotonicity_violation([0.8, 0.2], [0.7, 0.3], n1, n2)
        assert not diag.holds
        assert diag.delta_w_mu < diag.delta_w_lambda
        assert diag.first_order_margin == pytest.approx(0.8 + 0.7 - 1 - 0.56 * 0.95)
        assert not gadi_first_order_check(0.8, 0.7, 0.05)

    def test_equal_weights_hold(self, rng):
        n1, n2 = two_state_configuration(0.3, 0.9, 1.0)
        diag = quantum_monotonicity_violation([0.6, 0.4], [0.6, 0.4], n1, n2)
        assert diag.holds
        assert diag.delta_w_mu == diag.delta_w_lambda

    def test_pure_states_never_violate(self):
        rng = rng_from_seed(41)
        for _ in range(3000):
            l1 = rng.uniform(0.5, 1.0)
            m1 = rng.uniform(0.5, l1)
            n1, n2 = two_state_configuration(1.0, 1.0, rng.uniform(0, np.pi))
            assert quantum_monotonicity_violation([l1, 1 - l1], [m1, 1 - m1], n1, n2).holds

    def test_first_order_predictor_at_small_angles(self):
        rng = rng_from_seed(43)
        checked = 0
        for _ in range(5000):
            l1 = rng.uniform(0.5, 1.0)
            m1 = rng.uniform(0.5, l1)
            r1, r2 = np.sort(rng.uniform(size=2))
            phi = rng.uniform(1e-6, 0.05)
            n1, n2 = two_state_configuration(r1, r2, phi)
            diag = quantum_monotonicity_violation([l1, 1 - l1], [m1, 1 - m1], n1, n2)
            if abs(diag.first_order_margin) < BAND:
                continue
            checked += 1
            assert diag.holds == gadi_first_order_check(l1, m1, r1 / r2)
        assert checked > 4000

    def test_margin_is_nan_when_first_vector_longer(self):
        n1, n2 = two_state_configuration(0.9, 0.2, 0.1)
        assert np.isnan(quantum_monotonicity_violation([0.8, 0.2], [0.6, 0.4], n1, n2).first_order_margin)

    def test_preconditions(self):
        n1, n2 = two_state_configuration(0.5, 0.5, 0.3)
        with pytest.raises(PreconditionError):
            quantum_monotonicity_violation([0.6, 0.4], [0.7, 0.3], n1, n2)
        with pytest.raises(PreconditionError):
            quantum_monotonicity_violation([0.3, 0.7], [0.3, 0.7], n1, n2)
        with pytest.raises(PreconditionError):
            quantum_monotonicity_violation([0.6, 0.3, 0.1], [0.5, 0.3, 0.2], n1, n2)


class TestGadi:
    def test_examples(self):
        assert gadi_first_order_check(0.9, 0.6, 1.0)
        assert gadi_margin(0.9, 0.6, 1.0) == pytest.approx(0.5)
        assert gadi_margin(0.8, 0.7, 0.05) == pytest.approx(-0.032)
        assert gadi_first_order_check(0.5, 0.5, 1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            gadi_margin(0.8, 0.7, 1.5)
        with pytest.raises(DomainError):
            gadi_first_order_check(-0.1, 0.7, 0.5)


def test_two_level_hamiltonian_gap():
    np.testing.assert_allclose(np.linalg.eigvalsh(two_level_hamiltonian(2.5)), [0.0, 2.5])
    assert BlochState([0, 0, 1]).density_matrix()[0, 0] == 1.0
