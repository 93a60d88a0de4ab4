"""Experiment runner: ``jcsusy {evolve,sweep,wigner,validate} --config run.ini``.

Configs are INI files.  Every key is optional; defaults reproduce the
even-cat runs (lambda = 0.1, phi = pi/4, vartheta = 0, N = 250, alpha = 4).
Numeric values accept arithmetic on ``pi``, e.g. ``phi = pi/4``.  ``omega_a``
is always the JC-side atomic frequency; the AJC partner runs at
``omega_a - 2 omega_c``.  See README.md for the full key list.

Exit codes: 0 success, 2 config error, 3 degenerate/singlet input,
4 truncation guard, 5 validation failure.
"""

from __future__ import annotations

import argparse
import ast
import configparser
import math
import operator
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .dynamics import (
    DensePropagator,
    JointState,
    ModelParams,
    analytic_jc_propagate,
    bloch_amplitudes,
    build_jc_hamiltonian,
    fg_table,
)
from .errors import DegenerateStateError, TruncationError
from .fock_space import FieldState, make_cat_state, make_coherent_state, make_fock_state
from .observables import (
    InitialSpec,
    _fano_from_moments,
    ajc_ak,
    ajc_dense_states,
    ajc_nk,
    ajc_sigma_plus,
    ajc_sigma_z,
    fock_fano_factor,
    state_expectations,
)
from .susy_map import (
    apply_intertwiner,
    intertwining_residual,
    symmetry_commutator_residual,
    symmetry_spectrum,
)
from .wigner import PREFACTORS, PhaseSpaceGrid, reduced_field_density, wigner_grid

EXIT_OK, EXIT_CONFIG, EXIT_DEGENERATE, EXIT_TRUNCATION, EXIT_VALIDATION = 0, 2, 3, 4, 5


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------- config parsing

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv, ast.Pow: operator.pow}
_UNOPS = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def _eval_number(text: str) -> complex:
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
            return node.value
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
            return _UNOPS[type(node.op)](ev(node.operand))
        raise ConfigError(f"unsupported expression {text!r}")

    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse number {text!r}: {exc}") from None


def _real(text: str) -> float:
    val = _eval_number(text)
    if isinstance(val, complex):
        raise ConfigError(f"expected a real number, got {text!r}")
    return float(val)


def _int(text: str) -> int:
    val = _real(text)
    if val != int(val):
        raise ConfigError(f"expected an integer, got {text!r}")
    return int(val)


def _list(text: str, conv) -> list:
    return [conv(tok) for tok in text.replace(";", ",").split(",") if tok.strip()]


@dataclass
class WignerConfig:
    times: list
    re_min: float = -7.0
    re_max: float = 7.0
    im_min: float = -7.0
    im_max: float = 7.0
    points: int = 57

    @property
    def grid(self) -> PhaseSpaceGrid:
        return PhaseSpaceGrid(self.re_min, self.re_max, self.im_min, self.im_max, self.points)


@dataclass
class RunConfig:
    model: str = "ajc"
    path: str = "analytic"
    omega_a: float = 2.0
    lam: float = 0.1
    omega_c: float = 1.0
    field_kind: str = "cat"
    alpha: complex = 4.0
    vartheta: float = 0.0
    m: int = 1
    n_trunc: int = 250
    theta: float = 0.0
    phi: float = math.pi / 4
    t_max: float = 300.0
    n_steps: int = 600
    moments_k: list = field(default_factory=lambda: [2])
    amplitude_k: list = field(default_factory=lambda: [2])
    sweep_theta: int | None = None
    spot_checks: int = 20
    spot_seed: int = 0
    wigner: WignerConfig | None = None
    partner_shift: bool = True
    validate_samples: int = 20
    output_path: str = "."

    @property
    def params(self) -> ModelParams:
        return ModelParams(self.omega_a, self.lam, self.omega_c)

    @property
    def times(self) -> np.ndarray:
        if self.t_max == 0:
            return np.zeros(1)
        return np.linspace(0.0, self.t_max, self.n_steps)

    def field_state(self) -> FieldState:
        if self.field_kind == "fock":
            if self.m > self.n_trunc:
                raise ConfigError(f"fock level m={self.m} exceeds n_trunc={self.n_trunc}")
            return make_fock_state(self.m, self.n_trunc)
        if self.field_kind == "coherent":
            return make_coherent_state(self.alpha, self.n_trunc)
        return make_cat_state(self.alpha, self.vartheta, self.n_trunc)

    def initial(self, theta: float | None = None) -> InitialSpec:
        th = self.theta if theta is None else theta
        return InitialSpec.bloch(th, self.phi, self.field_state(), self.params)


def load_config(path: str | Path | None) -> RunConfig:
    """Parse and validate an INI run configuration."""
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                cp.read_file(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        except configparser.Error as exc:
            raise ConfigError(f"malformed config {path}: {exc}") from None

    known = {
        "model": {"kind", "path", "omega_a", "lambda", "omega_c"},
        "qubit": {"theta", "phi"},
        "field": {"kind", "alpha", "vartheta", "m", "n_trunc"},
        "time": {"t_max", "n_steps"},
        "observables": {"moments", "amplitude_orders"},
        "sweep": {"theta_points", "spot_checks", "seed"},
        "wigner": {"times", "re_min", "re_max", "im_min", "im_max", "points"},
        "validate": {"partner_shift", "samples"},
        "output": {"path"},
    }
    for sec in cp.sections():
        if sec not in known:
            raise ConfigError(f"unknown section [{sec}]")
        extra = set(cp[sec]) - known[sec]
        if extra:
            raise ConfigError(f"unknown keys in [{sec}]: {', '.join(sorted(extra))}")

    def get(sec, key, conv, default):
        if cp.has_option(sec, key):
            return conv(cp.get(sec, key))
        return default

    cfg = RunConfig()
    cfg.model = get("model", "kind", str.strip, cfg.model).lower()
    cfg.path = get("model", "path", str.strip, cfg.path).lower()
    cfg.omega_a = get("model", "omega_a", _real, cfg.omega_a)
    cfg.lam = get("model", "lambda", _real, cfg.lam)
    cfg.omega_c = get("model", "omega_c", _real, cfg.omega_c)
    cfg.theta = get("qubit", "theta", _real, cfg.theta)
    cfg.phi = get("qubit", "phi", _real, cfg.phi)
    cfg.field_kind = get("field", "kind", str.strip, cfg.field_kind).lower()
    cfg.alpha = get("field", "alpha", _eval_number, cfg.alpha)
    cfg.vartheta = get("field", "vartheta", _real, cfg.vartheta)
    cfg.m = get("field", "m", _int, cfg.m)
    cfg.n_trunc = get("field", "n_trunc", _int, cfg.n_trunc)
    cfg.t_max = get("time", "t_max", _real, cfg.t_max)
    cfg.n_steps = get("time", "n_steps", _int, cfg.n_steps)
    cfg.moments_k = get("observables", "moments", lambda s: _list(s, _int), cfg.moments_k)
    cfg.amplitude_k = get("observables", "amplitude_orders", lambda s: _list(s, _int), cfg.amplitude_k)
    cfg.sweep_theta = get("sweep", "theta_points", _int, None)
    cfg.spot_checks = get("sweep", "spot_checks", _int, cfg.spot_checks)
    cfg.spot_seed = get("sweep", "seed", _int, cfg.spot_seed)
    if cp.has_section("wigner"):
        w = WignerConfig(times=get("wigner", "times", lambda s: _list(s, _real), []))
        w.re_min = get("wigner", "re_min", _real, w.re_min)
        w.re_max = get("wigner", "re_max", _real, w.re_max)
        w.im_min = get("wigner", "im_min", _real, w.im_min)
        w.im_max = get("wigner", "im_max", _real, w.im_max)
        w.points = get("wigner", "points", _int, w.points)
        cfg.wigner = w
    if cp.has_option("validate", "partner_shift"):
        try:
            cfg.partner_shift = cp.getboolean("validate", "partner_shift")
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    cfg.validate_samples = get("validate", "samples", _int, cfg.validate_samples)
    cfg.output_path = get("output", "path", str.strip, cfg.output_path)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    checks = [
        (cfg.model in ("jc", "ajc"), "model.kind must be jc or ajc"),
        (cfg.path in ("analytic", "dense", "both"), "model.path must be analytic, dense or both"),
        (cfg.field_kind in ("fock", "coherent", "cat"), "field.kind must be fock, coherent or cat"),
        (cfg.omega_c > 0, "model.omega_c must be positive"),
        (cfg.lam >= 0, "model.lambda must be non-negative"),
        (cfg.n_trunc >= 1, "field.n_trunc must be >= 1"),
        (0 <= cfg.m, "field.m must be non-negative"),
        (cfg.t_max >= 0, "time.t_max must be non-negative"),
        (cfg.n_steps >= 1, "time.n_steps must be >= 1"),
        (all(0 <= k <= 8 for k in cfg.moments_k), "observables.moments must lie in 0..8"),
        (all(k >= 1 for k in cfg.amplitude_k), "observables.amplitude_orders must be >= 1"),
        (cfg.sweep_theta is None or cfg.sweep_theta >= 1, "sweep.theta_points must be >= 1"),
        (cfg.spot_checks >= 0, "sweep.spot_checks must be >= 0"),
        (cfg.validate_samples >= 1, "validate.samples must be >= 1"),
    ]
    for ok, msg in checks:
        if not ok:
            raise ConfigError(msg)
    if cfg.wigner is not None:
        try:
            cfg.wigner.grid
        except ValueError as exc:
            raise ConfigError(f"wigner grid: {exc}") from None
        if any(t < 0 for t in cfg.wigner.times):
            raise ConfigError("wigner.times must be non-negative")


# ---------------------------------------------------------------- computation


def _fmt(x) -> str:
    return f"{float(x):.15g}"


def observable_names(cfg: RunConfig) -> list[str]:
    names = ["sigma_z", "re_sigma_plus", "im_sigma_plus", "mean_n"]
    names += [f"n_{k}" for k in cfg.moments_k]
    names += ["fano"]
    for k in cfg.amplitude_k:
        names += [f"re_a_{k}", f"im_a_{k}"]
    return names + ["norm_residual"]


def _pack(cfg, sz, sp, moments, amps, norm_res, fano_fill=None) -> dict:
    mean, second = moments[1], moments[2]
    fano = _fano_from_moments(mean, second)
    if fano_fill is not None:
        fano = np.where(np.isnan(fano), fano_fill, fano)
    out = {"sigma_z": sz, "re_sigma_plus": np.real(sp), "im_sigma_plus": np.imag(sp), "mean_n": mean}
    for k in cfg.moments_k:
        out[f"n_{k}"] = moments[k]
    out["fano"] = fano
    for k in cfg.amplitude_k:
        out[f"re_a_{k}"] = np.real(amps[k])
        out[f"im_a_{k}"] = np.imag(amps[k])
    out["norm_residual"] = norm_res
    return out


def _moment_orders(cfg) -> list[int]:
    return sorted(set(cfg.moments_k) | {1, 2})


def _fock_fano_fallback(cfg, init: InitialSpec, times):
    """Closed-form fill for the resonant ground-state Fock case where <n> -> 0."""
    if cfg.model == "ajc" and cfg.field_kind == "fock" and init.beta_e == 0 and init.params.delta == 0 and cfg.m >= 1:
        return fock_fano_factor(cfg.m, times, init.params)
    return None


def analytic_series(cfg: RunConfig, init: InitialSpec, times) -> dict:
    if cfg.model == "ajc":
        moments = {k: np.atleast_1d(ajc_nk(init, times, k)) for k in _moment_orders(cfg)}
        amps = {k: np.atleast_1d(ajc_ak(init, times, k)) for k in cfg.amplitude_k}
        norm_res = np.abs(np.atleast_1d(ajc_nk(init, times, 0)) - 1.0)
        return _pack(
            cfg,
            np.atleast_1d(ajc_sigma_z(init, times)),
            np.atleast_1d(ajc_sigma_plus(init, times)),
            moments,
            amps,
            norm_res,
            _fock_fano_fallback(cfg, init, times),
        )
    psi0 = init.joint_state()
    vecs = np.array([analytic_jc_propagate(psi0, t, init.params).vector for t in times])
    return _from_states(cfg, vecs)


def dense_series(cfg: RunConfig, init: InitialSpec, times, propagator: DensePropagator | None = None) -> dict:
    if cfg.model == "ajc":
        if propagator is None:
            vecs = ajc_dense_states(init, times)
        else:
            mapped = apply_intertwiner(init.joint_state()).normalized()
            vecs = propagator.evolve_many(mapped, times)
        return _from_states(cfg, vecs, _fock_fano_fallback(cfg, init, times))
    if propagator is None:
        propagator = DensePropagator(build_jc_hamiltonian(init.params, init.n_trunc))
    return _from_states(cfg, propagator.evolve_many(init.joint_state(), times))


def _from_states(cfg, vecs, fano_fill=None) -> dict:
    ex = state_expectations(vecs, ks=_moment_orders(cfg), a_ks=cfg.amplitude_k)
    moments = {k: ex[("n", k)] for k in _moment_orders(cfg)}
    amps = {k: ex[("a", k)] for k in cfg.amplitude_k}
    norm_res = np.abs(np.sum(np.abs(vecs) ** 2, axis=-1) - 1.0)
    return _pack(cfg, ex["sigma_z"], ex["sigma_plus"], moments, amps, norm_res, fano_fill)


def _max_dev(a: dict, b: dict, names) -> float:
    worst = 0.0
    for name in names:
        if name == "norm_residual":
            continue
        diff = np.abs(np.asarray(a[name]) - np.asarray(b[name]))
        diff = diff[~np.isnan(diff)]
        if diff.size:
            worst = max(worst, float(np.max(diff)))
    return worst


def _partner_propagator(cfg: RunConfig) -> DensePropagator:
    from .dynamics import build_ajc_hamiltonian

    p = cfg.params
    if cfg.model == "ajc":
        return DensePropagator(build_ajc_hamiltonian(p.partner(), cfg.n_trunc))
    return DensePropagator(build_jc_hamiltonian(p, cfg.n_trunc))


# ---------------------------------------------------------------- subcommands


def run_evolve(cfg: RunConfig, out_dir: Path) -> Path:
    """Time series CSV, one row per time step."""
    init = cfg.initial()
    times = cfg.times
    names = observable_names(cfg)
    if cfg.path == "dense":
        primary = dense_series(cfg, init, times)
    else:
        primary = analytic_series(cfg, init, times)
    header = ["t"] + names
    dense = None
    if cfg.path == "both":
        dense = dense_series(cfg, init, times)
        header += [f"{n}_dense" for n in names]

    out_dir.mkdir(parents=True, exist_ok=True)
    target = out_dir / "evolve.csv"
    lines = [",".join(header)]
    for i, t in enumerate(times):
        row = [_fmt(t)] + [_fmt(primary[n][i]) for n in names]
        if dense is not None:
            row += [_fmt(dense[n][i]) for n in names]
        lines.append(",".join(row))
    if dense is not None:
        lines.append(f"# max_deviation={_fmt(_max_dev(primary, dense, names))}")
    target.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return target


def sweep_observables(cfg: RunConfig) -> list[str]:
    names = observable_names(cfg)
    names.remove("norm_residual")
    if cfg.field_kind != "fock" and abs(cfg.alpha) > 0:
        names += [f"n_{k}_over_alpha{2 * k}" for k in cfg.moments_k]
        names += [f"abs_a_{k}_over_alpha{k}" for k in cfg.amplitude_k]
    return names


def _with_scaled(cfg: RunConfig, series: dict) -> dict:
    if cfg.field_kind != "fock" and abs(cfg.alpha) > 0:
        r = abs(cfg.alpha)
        for k in cfg.moments_k:
            series[f"n_{k}_over_alpha{2 * k}"] = np.asarray(series[f"n_{k}"]) / r ** (2 * k)
        for k in cfg.amplitude_k:
            series[f"abs_a_{k}_over_alpha{k}"] = np.hypot(series[f"re_a_{k}"], series[f"im_a_{k}"]) / r**k
    return series


def sweep_thetas(cfg: RunConfig) -> np.ndarray:
    return np.linspace(0.0, math.pi, cfg.sweep_theta) if cfg.sweep_theta > 1 else np.zeros(1)


def compute_sweep(cfg: RunConfig, threads: int = 1) -> tuple[np.ndarray, np.ndarray, list[dict], float | None]:
    """Evaluate the theta x t landscape.

    Returns ``(thetas, times, per-theta series, max spot-check deviation)``;
    the deviation is ``None`` unless ``path == "both"``.
    """
    if cfg.sweep_theta is None:
        raise ConfigError("sweep requires [sweep] theta_points")
    thetas, times = sweep_thetas(cfg), cfg.times
    field_state = cfg.field_state()
    params = cfg.params
    prop = _partner_propagator(cfg) if cfg.path in ("dense", "both") else None

    def cell(theta):
        be, bg = bloch_amplitudes(theta, cfg.phi)
        init = InitialSpec(be, bg, field_state, params)
        if cfg.path == "dense":
            return _with_scaled(cfg, dense_series(cfg, init, times, prop))
        return _with_scaled(cfg, analytic_series(cfg, init, times))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(cell, thetas))
    else:
        results = [cell(th) for th in thetas]

    deviation = None
    if cfg.path == "both" and cfg.spot_checks > 0:
        rng = np.random.default_rng(cfg.spot_seed)
        n_cells = thetas.size * times.size
        picks = rng.choice(n_cells, size=min(cfg.spot_checks, n_cells), replace=False)
        names = sweep_observables(cfg)
        deviation = 0.0
        for flat in np.sort(picks):
            i, j = divmod(int(flat), times.size)
            be, bg = bloch_amplitudes(thetas[i], cfg.phi)
            init = InitialSpec(be, bg, field_state, params)
            ref = _with_scaled(cfg, dense_series(cfg, init, times[j : j + 1], prop))
            got = {n: np.asarray(results[i][n])[j : j + 1] for n in names}
            deviation = max(deviation, _max_dev(got, ref, names))
    return thetas, times, results, deviation


def run_sweep(cfg: RunConfig, out_dir: Path, threads: int = 1) -> Path:
    """Long-format landscape CSV ``theta,t,observable,value`` in theta-major order."""
    thetas, times, results, deviation = compute_sweep(cfg, threads)
    names = sweep_observables(cfg)
    out_dir.mkdir(parents=True, exist_ok=True)
    target = out_dir / "sweep.csv"
    with open(target, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("theta,t,observable,value\n")
        for theta, series in zip(thetas, results):
            cols = [np.asarray(series[n]) for n in names]
            th = _fmt(theta)
            for j, t in enumerate(times):
                ts = _fmt(t)
                for name, col in zip(names, cols):
                    fh.write(f"{th},{ts},{name},{_fmt(col[j])}\n")
        if deviation is not None:
            fh.write(f"# spot_check_max_deviation={_fmt(deviation)}\n")
    return target


def snapshot_state(cfg: RunConfig, init: InitialSpec, t: float) -> JointState:
    psi0 = init.joint_state()
    if cfg.model == "jc":
        return analytic_jc_propagate(psi0, t, init.params)
    if cfg.path == "dense":
        mapped = apply_intertwiner(psi0).normalized()
        return _partner_propagator(cfg).evolve(mapped, t)
    return apply_intertwiner(analytic_jc_propagate(psi0, t, init.params)).normalized()


def run_wigner(cfg: RunConfig, out_dir: Path, convention: str = "paper", threads: int = 1) -> tuple[Path, bool]:
    """One grid CSV per snapshot plus ``wigner_manifest.txt``.

    Returns the manifest path and whether every snapshot succeeded.
    """
    if cfg.wigner is None:
        raise ConfigError("wigner requires a [wigner] section")
    init = cfg.initial()
    if cfg.model == "ajc" and init.image_norm_sq < 1e-14:
        from .errors import SingletError

        raise SingletError("initial state lies in the SUSY singlet")
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = cfg.wigner.grid
    expected = 0.5 if convention == "paper" else 1.0
    manifest = [
        f"convention={convention}",
        f"expected_integral={_fmt(expected)}",
        f"grid.re_min={_fmt(grid.re_min)}",
        f"grid.re_max={_fmt(grid.re_max)}",
        f"grid.im_min={_fmt(grid.im_min)}",
        f"grid.im_max={_fmt(grid.im_max)}",
        f"grid.points_per_axis={grid.points_per_axis}",
        f"snapshots={len(cfg.wigner.times)}",
    ]
    ok = True
    for i, t in enumerate(cfg.wigner.times):
        key = f"snapshot.{i}"
        manifest.append(f"{key}.time={_fmt(t)}")
        rho = reduced_field_density(snapshot_state(cfg, init, t))
        try:
            wg = wigner_grid(rho, grid, convention, threads)
        except TruncationError as exc:
            ok = False
            manifest.append(f"{key}.error={exc}")
            continue
        name = f"wigner_{i:03d}.csv"
        lines = ["re_alpha,im_alpha,w"]
        for r, y in enumerate(wg.im):
            for c, x in enumerate(wg.re):
                lines.append(f"{_fmt(x)},{_fmt(y)},{_fmt(wg.values[r, c])}")
        (out_dir / name).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
        r, c = np.unravel_index(np.argmax(wg.values), wg.values.shape)
        manifest += [
            f"{key}.file={name}",
            f"{key}.integral={_fmt(wg.integral)}",
            f"{key}.cell_area={_fmt(wg.cell_area)}",
            f"{key}.min={_fmt(wg.values.min())}",
            f"{key}.max={_fmt(wg.values.max())}",
            f"{key}.argmax_re={_fmt(wg.re[c])}",
            f"{key}.argmax_im={_fmt(wg.im[r])}",
            f"{key}.purity={_fmt(np.real(np.trace(rho @ rho)))}",
        ]
    target = out_dir / "wigner_manifest.txt"
    target.write_text("\n".join(manifest) + "\n", encoding="utf-8", newline="\n")
    return target, ok


@dataclass
class Check:
    key: str
    value: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.value) and self.value < self.threshold)


def validation_checks(cfg: RunConfig) -> list[Check]:
    """Property checks behind ``jcsusy validate``."""
    p, N = cfg.params, cfg.n_trunc
    init = cfg.initial()
    rng = np.random.default_rng(cfg.spot_seed)
    horizon = cfg.t_max if cfg.t_max > 0 else 1.0
    times = np.sort(rng.uniform(0.0, horizon, cfg.validate_samples))
    checks = [
        Check("intertwining_residual", intertwining_residual(p, N, shift=cfg.partner_shift), 1e-12),
        Check("intertwining_residual_reverse", intertwining_residual(p, N, shift=cfg.partner_shift, reverse=True), 1e-12),
    ]

    # red path (evolve JC, then map) against blue path (map, then evolve AJC)
    from .dynamics import build_ajc_hamiltonian

    psi0 = init.joint_state()
    ajc_params = p.partner() if cfg.partner_shift else p
    blue_prop = DensePropagator(build_ajc_hamiltonian(ajc_params, N))
    mapped0 = apply_intertwiner(psi0)
    if mapped0.norm() ** 2 < 1e-14:
        from .errors import SingletError

        raise SingletError("initial state lies in the SUSY singlet")
    blue = blue_prop.evolve_many(mapped0.normalized(), times)
    diagram = 0.0
    for t, b in zip(times, blue):
        red = apply_intertwiner(analytic_jc_propagate(psi0, t, p)).normalized().vector
        diagram = max(diagram, float(np.max(np.abs(red - b))))
    checks.append(Check("commutative_diagram_max_deviation", diagram, 1e-8))

    F, G = fg_table(N, times, p)
    m = np.arange(N + 1)
    checks.append(Check("block_unitarity_max_residual", float(np.max(np.abs(np.abs(F) ** 2 + m * np.abs(G) ** 2 - 1))), 1e-12))

    integrality = 0.0
    for which in ("AdagA", "AAdag"):
        spaces = symmetry_spectrum(min(N, 60), which)
        for sp in spaces:
            integrality = max(integrality, abs(sp.value - round(sp.value)))
            expected = 1 if round(sp.value) == 0 else 2
            if sp.multiplicity != expected:
                integrality = math.inf
    checks.append(Check("symmetry_spectrum_integrality", integrality, 1e-10))
    checks.append(Check("symmetry_commutator_residual", max(symmetry_commutator_residual(p, min(N, 60))), 1e-12))

    if cfg.model == "ajc":
        ana = analytic_series(cfg, init, times)
        ref = _from_states(cfg, blue)
        names = [n for n in observable_names(cfg) if n != "norm_residual"]
        checks.append(Check("oracle_equivalence_max_deviation", _max_dev(ana, ref, names), 1e-7))
    return checks


def run_validate(cfg: RunConfig, out_dir: Path) -> tuple[Path, bool]:
    checks = validation_checks(cfg)
    lines = ["key,value,threshold,pass"]
    lines += [f"{c.key},{_fmt(c.value)},{_fmt(c.threshold)},{str(c.passed).lower()}" for c in checks]
    out_dir.mkdir(parents=True, exist_ok=True)
    target = out_dir / "validate_report.csv"
    text = "\n".join(lines) + "\n"
    target.write_text(text, encoding="utf-8", newline="\n")
    sys.stdout.write(text)
    return target, all(c.passed for c in checks)


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jcsusy", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("evolve", "time series of AJC (or JC) observables"),
        ("sweep", "theta x t landscape of observables"),
        ("wigner", "Wigner-function snapshots of the field"),
        ("validate", "run the property checks and emit a report"),
    ]:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--config", required=True, help="INI run configuration")
        sp.add_argument("--output", help="output directory (overrides [output] path)")
        sp.add_argument("--threads", type=int, default=1, help="worker threads for sweeps and grids")
        sp.add_argument("--convention", choices=sorted(PREFACTORS), default="paper", help="Wigner prefactor convention")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.threads < 1:
            raise ConfigError("--threads must be >= 1")
        out_dir = Path(args.output or cfg.output_path)
        if args.command == "evolve":
            run_evolve(cfg, out_dir)
        elif args.command == "sweep":
            run_sweep(cfg, out_dir, args.threads)
        elif args.command == "wigner":
            _, ok = run_wigner(cfg, out_dir, args.convention, args.threads)
            if not ok:
                return EXIT_TRUNCATION
        else:
            _, ok = run_validate(cfg, out_dir)
            if not ok:
                return EXIT_VALIDATION
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateStateError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except TruncationError as exc:
        print(f"truncation guard: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
