"""Scenario configs, parameter sweeps and randomized counterexample searches.

A scenario is a YAML mapping with a ``kind`` key. Matrices are written as
nested lists of ``[re, im]`` pairs (a bare real number is also accepted),
qubit states as ``{bloch: [x, y, z]}``. See ``demos/configs`` for one config
of every kind.
"""

from dataclasses import dataclass, field
from typing import Any

import numpy as np
import yaml

from gibbsmix.ergotropy import ergotropy, is_passive, restricted_ergotropy
from gibbsmix.errors import DomainError, GibbsMixError, NoConvergenceError
from gibbsmix.majorization import gadi_margin, quantum_monotonicity_violation
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
from gibbsmix.oracle import rng_from_seed
from gibbsmix.spectral import as_hermitian
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
    maximally_mixed,
    pure_state,
    quantum_mixing_entropy,
    tolman_entropy,
    von_neumann_entropy,
)

KINDS = (
    "ergotropy",
    "mixing",
    "overlap-sweep",
    "instrument-gap",
    "majorization-scan",
    "distinguishability-sweep",
    "entropy-report",
)
SWEEP_KINDS = ("overlap-sweep", "majorization-scan", "distinguishability-sweep")
SWI_TOL = 1e-9
ENTROPY_FIELDS = ("S_vN", "S_T", "delta_S", "delta_S_per_particle", "classical_delta_S",
                  "delta_S_over_2N", "h_of_overlap", "entropy_lambda")


class ConfigError(GibbsMixError, ValueError):
    """Invalid scenario config. ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass
class ScenarioResult:
    """Either a sweep table (``columns``/``rows``) or a single ``report``."""

    kind: str
    columns: list[str] = field(default_factory=list)
    rows: list[list[float]] = field(default_factory=list)
    report: dict[str, Any] = field(default_factory=dict)
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def is_sweep(self) -> bool:
        return bool(self.columns)

    def to_json(self) -> dict:
        if self.is_sweep:
            return {"kind": self.kind, "parameters": self.parameters,
                    "columns": self.columns, "rows": self.rows}
        return {"kind": self.kind, "parameters": self.parameters, "result": self.report}


def load_config(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            config = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ConfigError("<file>", f"not valid YAML: {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigError("<file>", "top level must be a mapping")
    return config


def _require(config: dict, key: str, prefix: str = ""):
    if key not in config:
        raise ConfigError(prefix + key, "missing")
    return config[key]


def _number(value, name: str, positive: bool = False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(name, f"expected a number, got {value!r}")
    value = float(value)
    if not np.isfinite(value) or (positive and value <= 0):
        raise ConfigError(name, f"expected a {'positive ' if positive else ''}finite number, got {value!r}")
    return value


def _complex(entry, name: str) -> complex:
    if isinstance(entry, (list, tuple)):
        if len(entry) != 2:
            raise ConfigError(name, f"complex entries are [re, im] pairs, got {entry!r}")
        return complex(_number(entry[0], name), _number(entry[1], name))
    return complex(_number(entry, name))


def parse_matrix(value, name: str) -> np.ndarray:
    if not isinstance(value, list) or not value or not all(isinstance(r, list) for r in value):
        raise ConfigError(name, "matrix must be a non-empty list of rows")
    n = len(value)
    if any(len(row) != n for row in value):
        raise ConfigError(name, "matrix must be square")
    return np.array([[_complex(x, name) for x in row] for row in value])


def parse_bloch(value, name: str) -> BlochState:
    if not isinstance(value, list) or len(value) != 3:
        raise ConfigError(name, f"Bloch vector must be [x, y, z], got {value!r}")
    try:
        return BlochState([_number(x, name) for x in value])
    except GibbsMixError as exc:
        raise ConfigError(name, str(exc)) from exc


def parse_hamiltonian(value, name: str = "hamiltonian") -> np.ndarray:
    if value is None:
        return two_level_hamiltonian(1.0)
    if isinstance(value, dict):
        if "epsilon" in value:
            return two_level_hamiltonian(_number(value["epsilon"], name + ".epsilon"))
        if "diagonal" in value:
            diag = value["diagonal"]
            if not isinstance(diag, list) or not diag:
                raise ConfigError(name + ".diagonal", "expected a list of energies")
            return np.diag([_number(x, name + ".diagonal") for x in diag]).astype(complex)
        if "matrix" in value:
            try:
                return as_hermitian(parse_matrix(value["matrix"], name + ".matrix"))
            except (ConfigError, NoConvergenceError):
                raise
            except GibbsMixError as exc:
                raise ConfigError(name + ".matrix", str(exc)) from exc
    raise ConfigError(name, "expected {epsilon: e}, {diagonal: [...]} or {matrix: [...]}")


def parse_state(value, name: str, h: np.ndarray | None = None) -> np.ndarray:
    if not isinstance(value, dict) or len(value) != 1:
        raise ConfigError(name, "state must be a mapping with exactly one of bloch, pure, matrix, gibbs, mixed")
    (form, payload), = value.items()
    try:
        if form == "bloch":
            return parse_bloch(payload, name + ".bloch").density_matrix()
        if form == "pure":
            if not isinstance(payload, list) or not payload:
                raise ConfigError(name + ".pure", "expected a list of amplitudes")
            return pure_state([_complex(x, name + ".pure") for x in payload])
        if form == "matrix":
            m = parse_matrix(payload, name + ".matrix")
            MixtureSpec([m], [1.0])  # validates
            return m
        if form == "gibbs":
            if h is None:
                raise ConfigError(name + ".gibbs", "a Gibbs state needs a hamiltonian")
            temperature = payload.get("temperature") if isinstance(payload, dict) else payload
            return gibbs_state(h, _number(temperature, name + ".gibbs.temperature", positive=True))
        if form == "mixed":
            dim = payload.get("dim") if isinstance(payload, dict) else payload
            if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
                raise ConfigError(name + ".mixed", f"expected a positive integer dimension, got {dim!r}")
            return maximally_mixed(dim)
    except (ConfigError, NoConvergenceError):
        raise
    except GibbsMixError as exc:
        raise ConfigError(name, str(exc)) from exc
    raise ConfigError(name, f"unknown state form {form!r}")


def parse_grid(config: dict, default: tuple[str, float, float, int], allowed: tuple[str, ...]):
    grid = config.get("grid")
    if grid is None:
        parameter, start, stop, points = default
    else:
        if not isinstance(grid, dict):
            raise ConfigError("grid", "expected a mapping with parameter, start, stop, points")
        parameter = grid.get("parameter", default[0])
        start = _number(grid.get("start", default[1]), "grid.start")
        stop = _number(grid.get("stop", default[2]), "grid.stop")
        points = grid.get("points", default[3])
    if parameter not in allowed:
        raise ConfigError("grid.parameter", f"must be one of {list(allowed)}, got {parameter!r}")
    if isinstance(points, bool) or not isinstance(points, int) or points < 2:
        raise ConfigError("grid.points", f"need an integer >= 2, got {points!r}")
    if not start < stop:
        raise ConfigError("grid.start", f"start ({start!r}) must be below stop ({stop!r})")
    return parameter, np.linspace(start, stop, points)


def _weights(config: dict, count: int, prefix: str = "") -> tuple[np.ndarray, float]:
    """Particle counts or weights; returns (weights, total particle number)."""
    if "counts" in config:
        counts = config["counts"]
        if not isinstance(counts, list) or len(counts) != count:
            raise ConfigError(prefix + "counts", f"expected {count} particle numbers")
        counts = np.array([_number(c, prefix + "counts", positive=True) for c in counts])
        return counts / counts.sum(), float(counts.sum())
    weights = config.get("weights")
    if weights is None:
        weights = [1.0 / count] * count
    if not isinstance(weights, list) or len(weights) != count:
        raise ConfigError(prefix + "weights", f"expected {count} weights")
    w = np.array([_number(x, prefix + "weights", positive=True) for x in weights])
    if abs(w.sum() - 1.0) > 1e-12:
        raise ConfigError(prefix + "weights", f"weights sum to {w.sum()!r}, expected 1")
    return w, _number(config.get("n_total", 1.0), prefix + "n_total", positive=True)


def _states(config: dict, h: np.ndarray | None = None) -> list[np.ndarray]:
    states = _require(config, "states")
    if not isinstance(states, list) or not states:
        raise ConfigError("states", "expected a non-empty list of states")
    return [parse_state(s, f"states[{i}]", h) for i, s in enumerate(states)]


def _bloch_states(config: dict) -> list[BlochState]:
    states = _require(config, "states")
    if not isinstance(states, list) or not states:
        raise ConfigError("states", "expected a non-empty list of Bloch states")
    out = []
    for i, s in enumerate(states):
        if not isinstance(s, dict) or "bloch" not in s:
            raise ConfigError(f"states[{i}]", "this scenario needs {bloch: [x, y, z]} states")
        out.append(parse_bloch(s["bloch"], f"states[{i}].bloch"))
    return out


def _epsilon(config: dict) -> float:
    return _number(config.get("epsilon", 1.0), "epsilon")


# --- scenario kinds ---------------------------------------------------------


def _run_ergotropy(config: dict) -> ScenarioResult:
    h = parse_hamiltonian(config.get("hamiltonian"))
    rho = parse_state(_require(config, "state"), "state", h)
    if rho.shape != h.shape:
        raise ConfigError("state", f"dimension {rho.shape[0]} does not match hamiltonian {h.shape[0]}")
    rep = ergotropy(rho, h)
    return ScenarioResult("ergotropy", report={
        "initial_energy": rep.initial_energy,
        "passive_energy": rep.passive_energy,
        "W": rep.ergotropy,
        "W_restricted": restricted_ergotropy(rho, h).restricted_ergotropy,
        "S_vN": von_neumann_entropy(rho),
        "S_T": tolman_entropy(rho, h),
        "passive": is_passive(rho, h),
        "optimal_permutation": list(rep.optimal_permutation),
    })


def _run_mixing(config: dict) -> ScenarioResult:
    h = parse_hamiltonian(config.get("hamiltonian"))
    states = _states(config, h)
    weights, n_total = _weights(config, len(states))
    for i, s in enumerate(states):
        if s.shape != h.shape:
            raise ConfigError(f"states[{i}]", "dimension does not match hamiltonian")
    spec = MixtureSpec(states, weights * n_total)
    rep = mixing_ergotropy(spec, h)
    s_mix = quantum_mixing_entropy(spec)
    return ScenarioResult("mixing", parameters={"lambda": weights.tolist(), "N_total": n_total}, report={
        "W_i_per_particle": rep.initial,
        "W_f_per_particle": rep.final,
        "delta_W_per_particle": rep.per_particle,
        "delta_W": rep.total,
        "delta_W_eigenvalue_form": rep.eigenvalue_form,
        "delta_W_restricted_per_particle": rep.restricted_per_particle,
        "delta_W_restricted": rep.restricted_total,
        "delta_S_per_particle": s_mix,
        "delta_S": s_mix * n_total,
    })


def _run_overlap_sweep(config: dict) -> ScenarioResult:
    eps = _epsilon(config)
    n_total = _number(config.get("n_total", 1.0), "n_total", positive=True)
    _, grid = parse_grid(config, ("overlap", 0.0, 1.0, 101), ("overlap",))
    if grid[0] < 0 or grid[-1] > 1:
        raise ConfigError("grid", "overlap must stay within [0, 1]")
    h = two_level_hamiltonian(eps)
    first = pure_state([1.0, 0.0])
    rows = []
    for overlap in grid:
        second = pure_state([overlap, np.sqrt(max(0.0, 1.0 - overlap * overlap))])
        spec = MixtureSpec([first, second], [0.5 * n_total, 0.5 * n_total])
        rows.append([
            float(overlap),
            mixing_ergotropy(spec, h).total,
            mixing_ergotropy_pure_overlap(float(overlap), eps, n_total),
            quantum_mixing_entropy(spec),
            binary_entropy(0.5 * (1.0 - float(overlap))),
        ])
    return ScenarioResult(
        "overlap-sweep",
        columns=["overlap", "delta_W", "delta_W_closed_form", "delta_S_over_2N", "h_of_overlap"],
        rows=rows,
        parameters={"epsilon": eps, "N_total": n_total},
    )


def _run_instrument_gap(config: dict) -> ScenarioResult:
    eps = _epsilon(config)
    bound = None
    if "symmetric" in config:
        sym = config["symmetric"]
        if not isinstance(sym, dict):
            raise ConfigError("symmetric", "expected a mapping with a, b, m")
        a = _number(_require(sym, "a", "symmetric."), "symmetric.a", positive=True)
        b = _number(_require(sym, "b", "symmetric."), "symmetric.b")
        m = _require(sym, "m", "symmetric.")
        if isinstance(m, bool) or not isinstance(m, int) or m < 2 or m % 2:
            raise ConfigError("symmetric.m", f"need an even integer >= 2, got {m!r}")
        try:
            states, weights = symmetric_gap_configuration(a, b, m)
        except GibbsMixError as exc:
            raise ConfigError("symmetric", str(exc)) from exc
        bound = instrument_gap_lower_bound(a, b, m, eps)
    else:
        states = _bloch_states(config)
        weights, _ = _weights(config, len(states))
    h = two_level_hamiltonian(eps)
    matrix_rep = mixing_ergotropy(MixtureSpec([s.density_matrix() for s in states], weights), h)
    report = {
        "delta_W": bloch_mixing_ergotropy(states, weights, eps),
        "delta_W_restricted": bloch_restricted_mixing_ergotropy(states, weights, eps),
        "gap": instrument_gap(states, weights, eps),
        "delta_W_matrix_path": matrix_rep.per_particle,
        "delta_W_restricted_matrix_path": matrix_rep.restricted_per_particle,
        "z_balance": float(weights @ np.array([s.vector[2] for s in states])),
        "gap_lower_bound": bound,
    }
    return ScenarioResult("instrument-gap", report=report, parameters={
        "epsilon": eps, "lambda": weights.tolist(), "n": [s.vector.tolist() for s in states]})


def _run_majorization_scan(config: dict) -> ScenarioResult:
    eps = _epsilon(config)
    states = _bloch_states(config)
    if len(states) != 2:
        raise ConfigError("states", "majorization-scan takes exactly two Bloch states")
    _, grid = parse_grid(config, ("lambda_1", 0.5, 1.0, 51), ("lambda_1",))
    if grid[0] < 0.5 or grid[-1] > 1.0:
        raise ConfigError("grid", "lambda_1 must stay within [0.5, 1]")
    reference = _number(config.get("mu_1", 0.5), "mu_1")
    if not 0.5 <= reference < 1.0:
        raise ConfigError("mu_1", "must lie in [0.5, 1)")
    r1, r2 = states[0].norm, states[1].norm
    rows = []
    for l1 in grid:
        l1 = float(l1)
        # endpoint weights of exactly zero are not a mixture; nudge inside
        w = np.array([min(l1, 1.0 - 1e-15), 1.0 - min(l1, 1.0 - 1e-15)])
        dw = bloch_mixing_ergotropy(states, w, eps)
        row = [l1, binary_entropy(l1), dw, bloch_restricted_mixing_ergotropy(states, w, eps)]
        if l1 >= reference:
            diag = quantum_monotonicity_violation(w, [reference, 1.0 - reference], *states, epsilon=eps)
            row += [diag.delta_w_mu - diag.delta_w_lambda,
                    gadi_margin(l1, reference, r1 / r2) if 0 < r2 and r1 <= r2 else None]
        else:
            row += [None, None]
        rows.append(row)
    return ScenarioResult(
        "majorization-scan",
        columns=["lambda_1", "entropy_lambda", "delta_W", "delta_W_restricted",
                 "delta_W_mu_minus_delta_W_lambda", "first_order_margin"],
        rows=rows,
        parameters={"epsilon": eps, "mu_1": reference, "n": [s.vector.tolist() for s in states]},
    )


def _run_distinguishability_sweep(config: dict) -> ScenarioResult:
    eps = _epsilon(config)
    fixed = {
        "n1_norm": _number(config.get("n1_norm", 0.05), "n1_norm"),
        "n2_norm": _number(config.get("n2_norm", 0.95), "n2_norm"),
        "phi": _number(config.get("phi", 0.3), "phi"),
    }
    for key in ("n1_norm", "n2_norm"):
        if not 0.0 <= fixed[key] <= 1.0:
            raise ConfigError(key, "Bloch vector length must lie in [0, 1]")
    weights, _ = _weights(config, 2)
    parameter, grid = parse_grid(config, ("n1_norm", 0.0, 0.9, 91), ("n1_norm", "phi"))
    if parameter == "n1_norm" and (grid[0] < 0 or grid[-1] > 1):
        raise ConfigError("grid", "n1_norm must stay within [0, 1]")
    rows = []
    for x in grid:
        values = dict(fixed, **{parameter: float(x)})
        r1, r2, phi = values["n1_norm"], values["n2_norm"], values["phi"]
        a, b = two_state_configuration(r1, r2, phi)
        dd = bloch_distinguishability_radial_derivative(r1, r2, phi) if r1 < 1 else None
        try:
            dw = bloch_mixing_ergotropy_radial_derivative(r1, r2, phi, weights, eps)
        except DomainError:
            dw = None
        rows.append([
            float(x),
            bloch_distinguishability(a, b),
            distinguishability(a.density_matrix(), b.density_matrix()),
            hilbert_schmidt_distance(a.density_matrix(), b.density_matrix()),
            bloch_mixing_ergotropy([a, b], weights, eps),
            dd,
            dw,
        ])
    return ScenarioResult(
        "distinguishability-sweep",
        columns=[parameter, "d", "d_matrix_path", "hs_distance", "delta_W", "dd_dn1", "ddelta_W_dn1"],
        rows=rows,
        parameters={"epsilon": eps, "lambda": weights.tolist(), **{k: v for k, v in fixed.items() if k != parameter}},
    )


def _run_entropy_report(config: dict) -> ScenarioResult:
    h = parse_hamiltonian(config["hamiltonian"]) if "hamiltonian" in config else None
    report: dict[str, Any] = {}
    if "states" in config:
        states = _states(config, h)
        report["S_vN"] = [von_neumann_entropy(s) for s in states]
        if h is not None:
            report["S_T"] = [tolman_entropy(s, h) for s in states]
        weights, n_total = _weights(config, len(states))
        spec = MixtureSpec(states, weights * n_total)
        report["delta_S_per_particle"] = quantum_mixing_entropy(spec)
        report["delta_S"] = report["delta_S_per_particle"] * n_total
    if "gases" in config:
        gases = config["gases"]
        if not isinstance(gases, list) or not gases:
            raise ConfigError("gases", "expected a list of {N, V} mappings")
        try:
            specs = [ClassicalGasSpec(_number(_require(g, "N", f"gases[{i}]."), f"gases[{i}].N"),
                                      _number(_require(g, "V", f"gases[{i}]."), f"gases[{i}].V"))
                     for i, g in enumerate(gases)]
            identical = bool(config.get("identical", False))
            report["classical_delta_S"] = classical_mixing_entropy(specs, identical=identical)
        except ConfigError:
            raise
        except (GibbsMixError, TypeError) as exc:
            raise ConfigError("gases", str(exc)) from exc
    if not report:
        raise ConfigError("states", "entropy-report needs states and/or gases")
    return ScenarioResult("entropy-report", report=report)


_RUNNERS = {
    "ergotropy": _run_ergotropy,
    "mixing": _run_mixing,
    "overlap-sweep": _run_overlap_sweep,
    "instrument-gap": _run_instrument_gap,
    "majorization-scan": _run_majorization_scan,
    "distinguishability-sweep": _run_distinguishability_sweep,
    "entropy-report": _run_entropy_report,
}


def run_scenario(config: dict) -> ScenarioResult:
    """Evaluate one scenario config. Raises ConfigError for bad input."""
    kind = _require(config, "kind")
    if kind not in _RUNNERS:
        raise ConfigError("kind", f"must be one of {list(KINDS)}, got {kind!r}")
    units = config.get("entropy_units", "nats")
    if units not in ("nats", "bits"):
        raise ConfigError("entropy_units", f"must be nats or bits, got {units!r}")
    result = _RUNNERS[kind](config)
    if units == "bits":
        _to_bits(result)
    if "seed" in config:
        result.parameters["seed"] = config["seed"]
    return result


def _to_bits(result: ScenarioResult) -> None:
    """Rescale entropy-valued fields from nats to bits in place."""
    def scale(v):
        if v is None:
            return None
        if isinstance(v, list):
            return [scale(x) for x in v]
        return float(v) / np.log(2.0)

    for key in ENTROPY_FIELDS:
        if key in result.report:
            result.report[key] = scale(result.report[key])
    for j, col in enumerate(result.columns):
        if col in ENTROPY_FIELDS:
            for row in result.rows:
                row[j] = scale(row[j])
    result.parameters["entropy_units"] = "bits"


# --- randomized searches ----------------------------------------------------


def _ball(rng: np.random.Generator, count: int) -> np.ndarray:
    direction = rng.standard_normal((count, 3))
    direction /= np.linalg.norm(direction, axis=1)[:, None]
    return direction * rng.uniform(size=(count, 1)) ** (1.0 / 3.0)


def search_instrument_gap(seed: int = 0, trials: int = 10_000, epsilon: float = 1.0) -> dict:
    """Random search for qubit mixtures where population swaps lose more
    work to mixing than arbitrary unitaries do.

    Each trial draws 2-4 weights and Bloch vectors, then shifts the z
    components so that the weighted z component of the mixture vanishes;
    trials leaving the Bloch ball are discarded.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = rng_from_seed(seed)
    best = None
    valid = positive = 0
    for trial in range(trials):
        m = int(rng.integers(2, 5))
        weights = rng.dirichlet(np.ones(m))
        vectors = _ball(rng, m)
        vectors[:, 2] -= weights @ vectors[:, 2]
        if np.any(np.linalg.norm(vectors, axis=1) > 1.0):
            continue
        balance = float(weights @ vectors[:, 2])
        if abs(balance) > SWI_TOL:
            continue
        valid += 1
        states = [BlochState(v) for v in vectors]
        gap = instrument_gap(states, weights, epsilon)
        if gap > 0:
            positive += 1
            if best is None or gap > best["gap"]:
                best = {
                    "trial": trial,
                    "lambda": weights.tolist(),
                    "n": vectors.tolist(),
                    "delta_W": bloch_mixing_ergotropy(states, weights, epsilon),
                    "delta_W_restricted": bloch_restricted_mixing_ergotropy(states, weights, epsilon),
                    "gap": gap,
                    "z_balance": balance,
                }
    return {"search": "instrument-gap", "seed": seed, "trials": trials, "epsilon": epsilon,
            "valid_trials": valid, "hits": positive, "found": best is not None, "best": best}


def search_monotonicity_violation(seed: int = 0, trials: int = 10_000, pure_only: bool = False,
                                  epsilon: float = 1.0) -> dict:
    """Random search for two-gas qubit mixtures where the more evenly mixed
    weights give less mixing ergotropy.

    Draws ``lambda1 >= mu1 >= 1/2``, Bloch lengths and the angle between the
    two vectors. With ``pure_only`` both states are pure, where no violation
    can exist.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = rng_from_seed(seed)
    best = None
    hits = 0
    for trial in range(trials):
        l1 = rng.uniform(0.5, 1.0)
        m1 = rng.uniform(0.5, l1)
        r1, r2 = (1.0, 1.0) if pure_only else tuple(rng.uniform(size=2))
        phi = rng.uniform(0.0, np.pi)
        a, b = two_state_configuration(r1, r2, phi)
        diag = quantum_monotonicity_violation([l1, 1.0 - l1], [m1, 1.0 - m1], a, b, epsilon)
        if diag.holds:
            continue
        hits += 1
        excess = diag.delta_w_lambda - diag.delta_w_mu
        if best is None or excess > best["excess"]:
            margin = diag.first_order_margin
            best = {
                "trial": trial,
                "lambda_1": l1,
                "mu_1": m1,
                "n1_norm": r1,
                "n2_norm": r2,
                "phi": phi,
                "delta_W_lambda": diag.delta_w_lambda,
                "delta_W_mu": diag.delta_w_mu,
                "excess": excess,
                "first_order_margin": None if np.isnan(margin) else margin,
            }
    return {"search": "monotonicity-violation", "seed": seed, "trials": trials, "pure_only": pure_only,
            "epsilon": epsilon, "hits": hits, "found": best is not None, "best": best}
