"""Acceptance checks, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with the measured numbers
and then asserts. Run ``pytest tests/test_acceptance.py -v`` or execute this
file directly for the summary alone.
"""

import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from conftest import commuting_pair, random_pair
from gibbsmix.ergotropy import ergotropy, optimal_unitary, restricted_ergotropy
from gibbsmix.majorization import gadi_first_order_check, quantum_monotonicity_violation, quasiclassical_mixing_monotone
from gibbsmix.mixing import (
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
from gibbsmix.oracle import (
    ergotropy_by_sampling,
    extracted_work,
    finite_difference,
    haar_unitaries,
    random_density_matrix,
    random_hermitian,
    restricted_ergotropy_by_enumeration,
    rng_from_seed,
)
from gibbsmix.scenarios import search_instrument_gap, search_monotonicity_violation
from gibbsmix.states import (
    BlochState,
    ClassicalGasSpec,
    MixtureSpec,
    binary_entropy,
    bloch_distinguishability,
    bloch_distinguishability_radial_derivative,
    classical_mixing_entropy,
    distinguishability,
    gibbs_state,
    hilbert_schmidt_distance,
    pure_state,
    quantum_mixing_entropy,
    tensor_product,
)

ROOT = Path(__file__).resolve().parents[1]
_PRINT = print


@pytest.fixture(autouse=True)
def _visible_output(capsys):
    global _PRINT

    def emit(*args):
        with capsys.disabled():
            print(*args)

    _PRINT = emit
    yield
    _PRINT = print


def verdict(number: int, title: str, checks: dict[str, bool], detail: str = "") -> None:
    failed = [name for name, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"\n[{status}] criterion {number}: {title}"
    if detail:
        line += f" | {detail}"
    if failed:
        line += f" | failed: {', '.join(failed)}"
    _PRINT(line)
    assert not failed, line


def random_bloch(rng):
    v = rng.standard_normal(3)
    return BlochState(v / np.linalg.norm(v) * rng.uniform() ** (1 / 3))


def test_criterion_01_classical_mixing_entropy():
    exact_two_gases = []
    identical_zero = []
    for n, v in [(1.0, 1.0), (2.0, 3.0), (1e3, 0.5), (6.02214076e23, 0.0224)]:
        gases = [ClassicalGasSpec(n, v), ClassicalGasSpec(n, v)]
        exact_two_gases.append(classical_mixing_entropy(gases) == 2 * n * np.log(2))
        identical_zero.append(classical_mixing_entropy(gases, identical=True) == 0.0)
    verdict(1, "classical mixing entropy", {
        "distinct gases give 2N ln 2 exactly": all(exact_two_gases),
        "identical gases give 0 exactly": all(identical_zero),
    }, f"{len(exact_two_gases)} (N, V) cases")


def test_criterion_02_quantum_mixing_entropy_curve():
    start = time.perf_counter()
    worst = 0.0
    values = []
    for overlap in np.linspace(0.0, 1.0, 101):
        second = pure_state([overlap, np.sqrt(1 - overlap**2)])
        s = quantum_mixing_entropy(MixtureSpec([pure_state([1, 0]), second], [1, 1]))
        values.append(s)
        worst = max(worst, abs(s - binary_entropy((1 - overlap) / 2)))
    elapsed = time.perf_counter() - start
    verdict(2, "quantum mixing entropy vs h((1 - overlap)/2)", {
        "sweep within 1e-10": worst < 1e-10,
        "endpoint ln 2": abs(values[0] - np.log(2)) < 1e-10,
        "endpoint 0": abs(values[-1]) < 1e-10,
        "runtime < 1 s": elapsed < 1.0,
    }, f"max error {worst:.2e}, {elapsed:.2f} s")


def test_criterion_03_ergotropy_against_haar_sampling():
    start = time.perf_counter()
    rng = rng_from_seed(2024)
    worst_excess = -np.inf
    worst_attained = 0.0
    instances = 1000
    for trial in range(instances):
        dim = 2 + trial % 5
        rho, h = random_pair(rng, dim)
        w = ergotropy(rho, h).ergotropy
        sampled = ergotropy_by_sampling(rho, h, samples=2000, seed=trial)
        worst_excess = max(worst_excess, sampled - w)
        attained = extracted_work(rho, h, optimal_unitary(rho, h)[None])[0]
        worst_attained = max(worst_attained, abs(attained - w))
    worst_gibbs = 0.0
    for trial in range(100):
        h = random_hermitian(2 + trial % 5, rng)
        worst_gibbs = max(worst_gibbs, abs(ergotropy(gibbs_state(h, 10 ** rng.uniform(-1, 1)), h).ergotropy))
    elapsed = time.perf_counter() - start
    verdict(3, "ergotropy dominates Haar sampling and is attained", {
        "sampling <= W + 1e-9": worst_excess <= 1e-9,
        "optimal unitary attains W within 1e-10": worst_attained <= 1e-10,
        "Gibbs states have W = 0 within 1e-10": worst_gibbs <= 1e-10,
        "runtime < 60 s": elapsed < 60,
    }, f"{instances} instances x 2000 unitaries, max(sampled - W) = {worst_excess:.2e}, "
       f"attainment error {worst_attained:.2e}, {elapsed:.1f} s")


def test_criterion_04_restricted_ergotropy():
    start = time.perf_counter()
    rng = rng_from_seed(4)
    worst_enum = worst_order = worst_commuting = 0.0
    count = 0
    for dim in range(2, 7):
        for _ in range(60):
            rho, h = random_pair(rng, dim)
            w_restricted = restricted_ergotropy(rho, h).restricted_ergotropy
            worst_enum = max(worst_enum, abs(restricted_ergotropy_by_enumeration(rho, h) - w_restricted))
            worst_order = max(worst_order, w_restricted - ergotropy(rho, h).ergotropy)
            rho_c, h_c = commuting_pair(rng, dim)
            worst_commuting = max(worst_commuting, abs(
                restricted_ergotropy(rho_c, h_c).restricted_ergotropy - ergotropy(rho_c, h_c).ergotropy))
            count += 1
    elapsed = time.perf_counter() - start
    verdict(4, "restricted ergotropy", {
        "equals enumeration within 1e-12": worst_enum <= 1e-12,
        "W' <= W": worst_order <= 1e-12,
        "W' = W when [rho, H] = 0": worst_commuting <= 1e-10,
        "runtime < 30 s": elapsed < 30,
    }, f"{count} instances dims 2-6, enumeration error {worst_enum:.2e}, {elapsed:.1f} s")


def test_criterion_05_mixing_ergotropy():
    start = time.perf_counter()
    rng = rng_from_seed(5)
    most_negative = np.inf
    for trial in range(1000):
        dim, m = 2 + trial % 4, 2 + trial % 3
        comps = [random_density_matrix(dim, rng, rank=int(rng.integers(1, dim + 1))) for _ in range(m)]
        rep = mixing_ergotropy(MixtureSpec(comps, rng.uniform(0.1, 3.0, m)), random_hermitian(dim, rng))
        most_negative = min(most_negative, rep.per_particle)
    worst_identical = worst_gibbs = 0.0
    for trial in range(50):
        dim = 2 + trial % 4
        rho, h = random_density_matrix(dim, rng), random_hermitian(dim, rng)
        worst_identical = max(worst_identical, abs(mixing_ergotropy(MixtureSpec([rho, rho], [1, 3]), h).per_particle))
        t1, t2 = 10 ** rng.uniform(-1, 1, 2)
        spec = MixtureSpec([gibbs_state(h, t1), gibbs_state(h, t2)], [1, 1])
        worst_gibbs = max(worst_gibbs, abs(mixing_ergotropy(spec, h).per_particle))
    worst_closed = 0.0
    curve = []
    for overlap in np.linspace(0, 1, 101):
        pair = [pure_state([1, 0]), pure_state([overlap, np.sqrt(1 - overlap**2)])]
        total = mixing_ergotropy(MixtureSpec(pair, [1, 1]), two_level_hamiltonian(1.0)).total
        worst_closed = max(worst_closed, abs(total - mixing_ergotropy_pure_overlap(overlap, 1.0, 2.0)))
        curve.append(total)
    elapsed = time.perf_counter() - start
    verdict(5, "mixing ergotropy", {
        "dW >= 0 on 1000 mixtures": most_negative >= -1e-10,
        "identical components give 0": worst_identical <= 1e-10,
        "Gibbs components give 0": worst_gibbs <= 1e-10,
        "closed form matches within 1e-10": worst_closed <= 1e-10,
        "monotone in the overlap": bool(np.all(np.diff(curve) <= 1e-12)),
        "reaches 0 at overlap 1": abs(curve[-1]) <= 1e-10,
        "runtime < 30 s": elapsed < 30,
    }, f"min dW {most_negative:.2e}, closed-form error {worst_closed:.2e}, {elapsed:.1f} s")


def test_criterion_06_instrument_dependence():
    start = time.perf_counter()
    states = [BlochState([0.2, 0.2, 0.8]), BlochState([0.2, 0.2, -0.8])]
    dw = bloch_mixing_ergotropy(states, [0.5, 0.5], 1.0)
    dw_restricted = bloch_restricted_mixing_ergotropy(states, [0.5, 0.5], 1.0)
    search = search_instrument_gap(seed=0, trials=10_000)
    bound_ok = True
    configurations = 0
    for m in (2, 4, 6, 8):
        for a in np.linspace(0.01, 1.0 / m, 15):
            for b in np.linspace(0.0, 1.0 / m, 15):
                if 2 * b * b + a * a > 1.0 / m**2:
                    continue
                cfg_states, weights = symmetric_gap_configuration(a, b, m)
                configurations += 1
                if instrument_gap(cfg_states, weights, 1.0) < instrument_gap_lower_bound(a, b, m, 1.0) - 1e-9:
                    bound_ok = False
    elapsed = time.perf_counter() - start
    verdict(6, "instrument-dependence counterexample", {
        "dW' = 0.4": abs(dw_restricted - 0.4) <= 1e-9,
        "dW = 0.282843": abs(dw - 0.282843) <= 1e-6 and abs(dw - 0.2 * np.sqrt(2)) <= 1e-9,
        "dW' > dW": dw_restricted > dw,
        "search finds a positive gap in 1e4 trials": search["found"],
        "gap lower bound holds": bound_ok,
        "runtime < 10 s": elapsed < 10,
    }, f"dW' = {dw_restricted:.9f}, dW = {dw:.9f}, search hits {search['hits']}/{search['valid_trials']}, "
       f"bound checked on {configurations} configurations, {elapsed:.1f} s")


def test_criterion_07_majorization_monotonicity():
    start = time.perf_counter()
    rng = rng_from_seed(7)
    worst = np.inf
    pairs = 0
    while pairs < 1000:
        m = int(rng.integers(2, 6))
        mu = np.sort(rng.dirichlet(np.ones(m)))[::-1]
        lam = mu.copy()
        for _ in range(int(rng.integers(1, 4))):
            i, j = sorted(rng.choice(m, 2, replace=False))
            shift = rng.uniform() * lam[j]
            lam[i] += shift
            lam[j] -= shift
        h = random_hermitian(m + int(rng.integers(0, 2)), rng)
        dw_mu, dw_lam = quasiclassical_mixing_monotone(lam, mu, h)
        worst = min(worst, dw_mu - dw_lam)
        pairs += 1
    pure = search_monotonicity_violation(seed=7, trials=10_000, pure_only=True)
    n1, n2 = two_state_configuration(0.05, 1.0, 0.2)
    diag = quantum_monotonicity_violation([0.8, 0.2], [0.7, 0.3], n1, n2)
    predicted_violation = not gadi_first_order_check(0.8, 0.7, 0.05)
    elapsed = time.perf_counter() - start
    verdict(7, "majorization monotonicity", {
        "quasi-classical theorem on 1000 pairs": worst >= -1e-10,
        "no pure-pure violations in 1e4 trials": pure["hits"] == 0,
        "lambda1=0.8, mu1=0.7 instance flagged violated": not diag.holds,
        "first-order criterion predicts the violation": predicted_violation,
        "runtime < 30 s": elapsed < 30,
    }, f"min dW(mu) - dW(lam) = {worst:.2e}, instance excess {diag.delta_w_lambda - diag.delta_w_mu:.3e}, "
       f"margin {diag.first_order_margin:.4f}, {elapsed:.1f} s")


def test_criterion_08_distinguishability():
    rng = rng_from_seed(8)
    worst_bloch = 0.0
    for trial in range(1000):
        a, b = random_bloch(rng), random_bloch(rng)
        if trial % 10 == 0:
            b = BlochState(b.vector / np.linalg.norm(b.vector))
        worst_bloch = max(worst_bloch, abs(distinguishability(a.density_matrix(), b.density_matrix())
                                           - bloch_distinguishability(a, b)))
    equal_is_one = unequal_below_one = True
    worst_invariance = worst_product = 0.0
    for trial in range(100):
        dim = 2 + trial % 4
        r, s = random_density_matrix(dim, rng), random_density_matrix(dim, rng)
        equal_is_one &= abs(distinguishability(r, r) - 1) <= 1e-9
        unequal_below_one &= distinguishability(r, s) < 1 - 1e-9
        u = haar_unitaries(dim, 1, rng)[0]
        worst_invariance = max(worst_invariance, abs(
            distinguishability(u @ r @ u.conj().T, u @ s @ u.conj().T) - distinguishability(r, s)))
        r1, s1, r2, s2 = (random_density_matrix(2, rng) for _ in range(4))
        worst_product = max(worst_product, abs(
            distinguishability(tensor_product(r1, r2), tensor_product(s1, s2))
            - distinguishability(r1, s1) * distinguishability(r2, s2)))
    verdict(8, "distinguishability", {
        "Bloch form matches Uhlmann within 1e-9": worst_bloch <= 1e-9,
        "d = 1 for equal states": bool(equal_is_one),
        "d < 1 for distinct states": bool(unequal_below_one),
        "unitary invariance within 1e-8": worst_invariance <= 1e-8,
        "2x2 multiplicativity within 1e-8": worst_product <= 1e-8,
    }, f"1000 Bloch pairs, max error {worst_bloch:.2e}, invariance {worst_invariance:.2e}, "
       f"product {worst_product:.2e}")


def test_criterion_09_closer_states_more_work():
    start = time.perf_counter()
    r1, r2, phi = 0.05, 0.95, 0.3

    def pair(r):
        return two_state_configuration(r, r2, phi)

    dw = finite_difference(lambda r: bloch_mixing_ergotropy(list(pair(r)), (0.5, 0.5)), r1)
    dd = finite_difference(lambda r: bloch_distinguishability(*pair(r)), r1)
    dhs = finite_difference(lambda r: hilbert_schmidt_distance(*(s.density_matrix() for s in pair(r))), r1)
    dw_analytic = bloch_mixing_ergotropy_radial_derivative(r1, r2, phi)
    dd_analytic = bloch_distinguishability_radial_derivative(r1, r2, phi)
    elapsed = time.perf_counter() - start
    verdict(9, "closer states, more mixing work", {
        "dW/d|n1| > 0": dw > 0,
        "dd/d|n1| > 0": dd > 0,
        "Hilbert-Schmidt distance decreases": dhs < 0,
        "analytic dW/d|n1| agrees": abs(dw - dw_analytic) < 1e-6,
        "analytic dd/d|n1| agrees": abs(dd - dd_analytic) < 1e-6,
        "runtime < 5 s": elapsed < 5,
    }, f"dW/d|n1| = {dw:.6f}, dd/d|n1| = {dd:.6f}, dHS/d|n1| = {dhs:.6f}")


def test_criterion_10_cli_determinism(tmp_path):
    commands = [["run", str(p), "--seed", "123"] for p in sorted((ROOT / "demos" / "configs").glob("*.yaml"))]
    commands += [["run", str(p), "--seed", "123", "--format", "json"]
                 for p in sorted((ROOT / "demos" / "configs").glob("*.yaml"))]
    commands += [["search", "gap", "--seed", "9", "--trials", "2000"],
                 ["search", "violation", "--seed", "9", "--trials", "2000"],
                 ["search", "violation", "--seed", "9", "--trials", "2000", "--pure"],
                 ["fidelity", "--bloch", "0.1", "0.2", "0.3", "--bloch", "0", "0.5", "-0.5"],
                 ["ergotropy", "--bloch", "0.3", "0", "0.6", "--epsilon", "2"]]
    identical = []
    for i, command in enumerate(commands):
        outputs = []
        for run in range(2):
            out_file = tmp_path / f"{i}_{run}.out"
            proc = subprocess.run([sys.executable, "-m", "gibbsmix", *command, "--out", str(out_file)],
                                  capture_output=True, check=False)
            outputs.append((proc.returncode, out_file.read_bytes() if out_file.exists() else b""))
        identical.append(outputs[0] == outputs[1] and outputs[0][0] == 0 and outputs[0][1])
    verdict(10, "CLI determinism", {
        "every scenario replays byte-identically": all(identical),
    }, f"{len(commands)} commands, each run twice in fresh processes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
