"""Closed-form AJC expectation values obtained through the SUSY map.

Every series here is evaluated on the JC solution and mapped with
``<O>_AJC = <psi_JC| A^dag O A |psi_JC> / |N|^2`` where
``|N|^2 = <n0> |beta_g|^2 + (1 + <n0>) |beta_e|^2``.  Series accept a scalar
time or an array of times and broadcast accordingly.

``frame="lab"`` (the default) gives Schrodinger-picture values, directly
comparable with a brute-force propagation.  ``frame="rotating"`` drops the
free ``exp(-i k omega_c t)`` rotation of the off-diagonal observables
(``sigma_+`` and ``a^k``); diagonal observables are identical in both frames.

Terminology: ``<n^k>`` and ``<a^k>`` are raw moments, even though they are
customarily called "cumulants" in the full-counting-statistics literature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np
from scipy.special import gammaln

from .dynamics import (
    DensePropagator,
    JointState,
    ModelParams,
    bloch_amplitudes,
    build_ajc_hamiltonian,
    f_coeff,
    fg_table,
    g_coeff,
    make_initial_state,
)
from .errors import SingletError, UndefinedFanoError
from .fock_space import FieldState, mean_photon_number
from .susy_map import ZERO_IMAGE_TOLERANCE, susy_map_state

QUBIT_NORM_TOLERANCE = 1e-12
MAX_MOMENT_ORDER = 8
FANO_MEAN_FLOOR = 1e-12


@dataclass(frozen=True)
class InitialSpec:
    """Product initial state of the JC model plus the JC-side parameters.

    The AJC dynamics described by this spec runs at the partner atomic
    frequency ``params.omega_a - 2 omega_c``.
    """

    beta_e: complex
    beta_g: complex
    field: FieldState
    params: ModelParams

    def __post_init__(self):
        total = abs(self.beta_e) ** 2 + abs(self.beta_g) ** 2
        if abs(total - 1.0) > QUBIT_NORM_TOLERANCE:
            raise ValueError(f"|beta_e|^2 + |beta_g|^2 = {total!r}, expected 1")

    @classmethod
    def bloch(cls, theta: float, phi: float, field: FieldState, params: ModelParams) -> "InitialSpec":
        """Qubit ``cos(theta)|g> + exp(i phi) sin(theta)|e>``."""
        beta_e, beta_g = bloch_amplitudes(theta, phi)
        return cls(beta_e, beta_g, field, params)

    @property
    def n_trunc(self) -> int:
        return self.field.n_trunc

    @property
    def mean_n0(self) -> float:
        return mean_photon_number(self.field)

    @property
    def image_norm_sq(self) -> float:
        """``|N|^2``, the squared norm of the intertwiner image."""
        n0 = self.mean_n0
        return n0 * abs(self.beta_g) ** 2 + (1.0 + n0) * abs(self.beta_e) ** 2

    def joint_state(self) -> JointState:
        return make_initial_state(self.beta_e, self.beta_g, self.field)


def _check_image(init: InitialSpec) -> float:
    nsq = init.image_norm_sq
    if nsq < ZERO_IMAGE_TOLERANCE:
        raise SingletError("initial state lies in the SUSY singlet; its AJC image vanishes")
    return nsq


def _padded(c: np.ndarray, extra: int) -> np.ndarray:
    return np.concatenate([c, np.zeros(extra, dtype=complex)])


def _sum_n(terms: np.ndarray, compensated: bool = False) -> np.ndarray:
    """Sum over the Fock axis (last) in ascending n."""
    if not compensated:
        return terms.sum(axis=-1)
    flat = terms.reshape(-1, terms.shape[-1])
    if np.iscomplexobj(flat):
        out = np.array([complex(math.fsum(r.real), math.fsum(r.imag)) for r in flat])
    else:
        out = np.array([math.fsum(r) for r in flat])
    return out.reshape(terms.shape[:-1])


def _shape_like(values: np.ndarray, t):
    if np.ndim(t) == 0:
        return values.reshape(()).item()
    return values.reshape(np.shape(t))


def _frame_phase(t, k: int, p: ModelParams, frame: str):
    if frame == "rotating":
        return 1.0
    if frame == "lab":
        return np.exp(-1j * k * p.omega_c * np.ravel(np.asarray(t, dtype=float)))
    raise ValueError(f"frame must be 'lab' or 'rotating', got {frame!r}")


def transition_T(n, t, p: ModelParams):
    """``T_n = n (|F_n|^2 - n |G_n|^2)``."""
    n = np.asarray(n)
    return n * (np.abs(f_coeff(n, t, p)) ** 2 - n * np.abs(g_coeff(n, t, p)) ** 2)


def transition_pair(m, m_tilde, t, p: ModelParams):
    """The three field-amplitude transition amplitudes for the pair ``(m, m~)``.

    Returns ``(T, T_tilde, T_bar)`` with::

        T       = m (F_m~ F_m* + m~ G_m~ G_m*)
        T_tilde = m~ F_m G_m~ - m F_m~ G_m
        T_bar   = F_m* G_m~ - F_m~* G_m
    """
    m, mt = np.asarray(m), np.asarray(m_tilde)
    Fm, Gm = f_coeff(m, t, p), g_coeff(m, t, p)
    Ft, Gt = f_coeff(mt, t, p), g_coeff(mt, t, p)
    T = m * (Ft * np.conj(Fm) + mt * Gt * np.conj(Gm))
    T_tilde = mt * Fm * Gt - m * Ft * Gm
    T_bar = np.conj(Fm) * Gt - np.conj(Ft) * Gm
    return T, T_tilde, T_bar


def _cross_term(init: InitialSpec, C, F, G, n):
    """``beta_g beta_e* C_{n+1} C_n* G_{n+1} F_{n+1}`` over n = 0..N."""
    return (
        init.beta_g
        * np.conj(init.beta_e)
        * C[n + 1]
        * np.conj(C[n])
        * G[:, n + 1]
        * F[:, n + 1]
    )


def ajc_sigma_z(init: InitialSpec, t):
    """Atomic inversion ``<sigma_z>`` of the AJC partner."""
    nsq = _check_image(init)
    N, p = init.n_trunc, init.params
    n = np.arange(N + 1)
    C = _padded(init.field.amplitudes, 2)
    F, G = fg_table(N + 1, t, p)
    absF2, absG2 = np.abs(F) ** 2, np.abs(G) ** 2
    m = np.arange(N + 2)
    T = m * (absF2 - m * absG2)
    P = np.abs(C[n]) ** 2
    terms = P * (abs(init.beta_e) ** 2 * T[:, n + 1] - abs(init.beta_g) ** 2 * T[:, n])
    terms = terms + 4.0 * (n + 1.0) ** 1.5 * np.real(_cross_term(init, C, F, G, n))
    return _shape_like(_sum_n(terms) / nsq, t)


def ajc_sigma_plus(init: InitialSpec, t, frame: str = "lab"):
    """``<sigma_+>`` of the AJC partner; ``<sigma_->`` is its conjugate."""
    nsq = _check_image(init)
    N, p = init.n_trunc, init.params
    be, bg = init.beta_e, init.beta_g
    n = np.arange(N + 1)
    C = _padded(init.field.amplitudes, 3)
    F, G = fg_table(N + 2, t, p)
    Cn = np.conj(C[n])
    terms = (
        np.sqrt(n + 1.0)
        * Cn
        * C[n + 1]
        * F[:, n + 1]
        * ((n + 2) * G[:, n + 2] * abs(be) ** 2 - n * G[:, n] * abs(bg) ** 2)
        + np.sqrt((n + 1.0) * (n + 2.0)) * Cn * C[n + 2] * F[:, n + 1] * F[:, n + 2] * bg * np.conj(be)
        - n * (n + 1.0) * np.abs(C[n]) ** 2 * G[:, n] * G[:, n + 1] * np.conj(bg) * be
    )
    vals = _sum_n(terms) / nsq * _frame_phase(t, 1, p, frame)
    return _shape_like(vals, t)


def ajc_sigma_minus(init: InitialSpec, t, frame: str = "lab"):
    return np.conj(ajc_sigma_plus(init, t, frame))


def ajc_nk(init: InitialSpec, t, k: int):
    """Photon-number moment ``<n^k>`` of the AJC partner, ``0 <= k <= 8``.

    These are raw moments, sometimes loosely called cumulants.

    ``k = 0`` evaluates the full series and returns 1 up to roundoff, which
    makes it a normalization probe.
    """
    if int(k) != k or k < 0 or k > MAX_MOMENT_ORDER:
        raise ValueError(f"moment order k must be an integer in 0..{MAX_MOMENT_ORDER}, got {k}")
    k = int(k)
    nsq = _check_image(init)
    N, p = init.n_trunc, init.params
    n = np.arange(N + 1, dtype=float)
    ni = np.arange(N + 1)
    C = _padded(init.field.amplitudes, 2)
    F, G = fg_table(N + 1, t, p)
    absF2, absG2 = np.abs(F) ** 2, np.abs(G) ** 2
    P = np.abs(C[ni]) ** 2
    excited = (1 + n) ** (k + 1) * absF2[:, ni + 1] + (1 + n) ** 2 * n**k * absG2[:, ni + 1]
    ground = n * (n - 1) ** k * absF2[:, ni] + n ** (k + 2) * absG2[:, ni]
    terms = P * (abs(init.beta_e) ** 2 * excited + abs(init.beta_g) ** 2 * ground)
    terms = terms - 2.0 * (n + 1) ** 1.5 * (n**k - (1 + n) ** k) * np.real(_cross_term(init, C, F, G, ni))
    return _shape_like(_sum_n(terms, compensated=k >= 4) / nsq, t)


def ajc_ak(init: InitialSpec, t, k: int, frame: str = "lab"):
    """Field-amplitude moment ``<a^k>`` of the AJC partner, ``k >= 1``.

    ``<(a^dag)^k>`` is the complex conjugate.
    """
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    k = int(k)
    nsq = _check_image(init)
    N, p = init.n_trunc, init.params
    be, bg = init.beta_e, init.beta_g
    ni = np.arange(N + 1)
    n = ni.astype(float)
    C = _padded(init.field.amplitudes, k + 2)
    Cm1 = np.concatenate([[0.0], C])  # Cm1[j] = C[j-1], C[-1] = 0
    tt = np.ravel(np.asarray(t, dtype=float))[:, None]

    T_e, _, _ = transition_pair(ni + k + 1, ni + 1, tt, p)
    T_g, _, T_bar = transition_pair(ni, ni + k, tt, p)
    _, T_tilde, _ = transition_pair(ni + 1, ni + k + 1, tt, p)

    weight = np.exp(0.5 * (gammaln(n + k + 1) - gammaln(n + 1)))
    inner = (
        C[ni + k] * (abs(be) ** 2 * T_e + abs(bg) ** 2 * T_g)
        + bg * np.conj(be) * np.sqrt(n + k + 1) * C[ni + k + 1] * T_tilde
        + np.conj(bg) * be * n * np.sqrt(n + k) * Cm1[ni + k] * T_bar
    )
    terms = weight * np.conj(C[ni]) * inner
    vals = _sum_n(terms, compensated=k >= 4) / nsq * _frame_phase(t, k, p, frame)
    return _shape_like(vals, t)


def ajc_adag_k(init: InitialSpec, t, k: int, frame: str = "lab"):
    return np.conj(ajc_ak(init, t, k, frame))


def _fano_from_moments(mean, second):
    mean = np.asarray(mean, dtype=float)
    second = np.asarray(second, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        ff = (second - mean**2) / mean
    return np.where(mean > FANO_MEAN_FLOOR, ff, np.nan)


def fano_factor(init: InitialSpec, t):
    """``FF = Var(n) / <n>`` of the AJC partner field.

    Raises
    ------
    UndefinedFanoError
        If ``<n>`` falls below ``1e-12`` at any requested time.
    """
    mean = np.atleast_1d(ajc_nk(init, t, 1))
    second = np.atleast_1d(ajc_nk(init, t, 2))
    if np.any(mean <= FANO_MEAN_FLOOR):
        raise UndefinedFanoError("mean photon number vanishes; Fano factor undefined")
    return _shape_like(_fano_from_moments(mean, second), t)


def fock_fano_factor(m: int, t, p: ModelParams):
    """Closed-form AJC Fano factor for ``|g> (x) |m>`` at JC resonance.

    ``sin^2(2 lam sqrt(m) t) / (2 (2m - cos(2 lam sqrt(m) t) - 1))``; the
    ``m = 1`` case is written as ``cos^2(lam t)`` so ``t = 0`` is finite.
    """
    if m < 1:
        raise ValueError("Fock Fano factor needs m >= 1")
    x = p.lam * np.sqrt(m) * np.asarray(t, dtype=float)
    if m == 1:
        return np.cos(x) ** 2
    return np.sin(2 * x) ** 2 / (2.0 * (2.0 * m - np.cos(2 * x) - 1.0))


@dataclass
class ResonantExpectations:
    sigma_plus: np.ndarray
    sigma_z: np.ndarray
    n_k: dict = dc_field(default_factory=dict)
    a_k: dict = dc_field(default_factory=dict)


def resonant_expectations(init: InitialSpec, t, ks=(1, 2), frame: str = "lab") -> ResonantExpectations:
    """Reduced AJC series for a ground-state qubit and a resonant JC partner.

    Only the field amplitudes enter, ``|N|^2 = <n0>``.

    Raises
    ------
    ValueError
        Unless ``beta_e == 0`` and ``Delta == 0``.
    """
    p = init.params
    if init.beta_e != 0 or p.delta != 0:
        raise ValueError("resonant reduction requires beta_e = 0 and omega_a = omega_c")
    n0 = _check_image(init)
    N = init.n_trunc
    tt = np.ravel(np.asarray(t, dtype=float))[:, None]
    kmax = max(ks) if ks else 0
    C = _padded(init.field.amplitudes, kmax + 2)
    ni = np.arange(N + 1)
    n = ni.astype(float)
    P = np.abs(C[ni]) ** 2
    lam = p.lam

    sp = (
        1j
        * np.sqrt(n * (n + 1))
        * np.cos(lam * np.sqrt(n + 1) * tt)
        * np.sin(lam * np.sqrt(n) * tt)
        * np.conj(C[ni])
        * C[ni + 1]
    )
    sz = -n * np.cos(2 * lam * np.sqrt(n) * tt) * P
    out = ResonantExpectations(
        sigma_plus=_shape_like(_sum_n(sp) / n0 * _frame_phase(t, 1, p, frame), t),
        sigma_z=_shape_like(_sum_n(sz) / n0, t),
    )
    for k in ks:
        cos2 = np.cos(lam * np.sqrt(n) * tt) ** 2
        nk = P * (n * (n - 1) ** k * cos2 + n ** (k + 1) * (1 - cos2))
        out.n_k[k] = _shape_like(_sum_n(nk, compensated=k >= 4) / n0, t)
        weight = np.exp(0.5 * (gammaln(n + k + 1) - gammaln(n + 1)))
        a = (
            weight
            * np.conj(C[ni])
            * C[ni + k]
            * (
                n * np.cos(lam * np.sqrt(n + k) * tt) * np.cos(lam * np.sqrt(n) * tt)
                + np.sqrt(n * (n + k)) * np.sin(lam * np.sqrt(n + k) * tt) * np.sin(lam * np.sqrt(n) * tt)
            )
        )
        out.a_k[k] = _shape_like(_sum_n(a, compensated=k >= 4) / n0 * _frame_phase(t, k, p, frame), t)
    return out


def expectation_via_state(state: JointState, O: np.ndarray) -> complex:
    """``<state| O |state>`` for a joint-space matrix ``O``."""
    v = state.vector
    return complex(np.vdot(v, np.asarray(O) @ v))


def ajc_dense_states(init: InitialSpec, times) -> np.ndarray:
    """Map first, then propagate with the dense AJC partner propagator.

    Returns state vectors of shape ``(T, 2(N+1))``.
    """
    mapped = susy_map_state(init.joint_state()).mapped_state
    H = build_ajc_hamiltonian(init.params.partner(), init.n_trunc)
    return DensePropagator(H).evolve_many(mapped, times)


def state_expectations(vectors: np.ndarray, ks=(1, 2), a_ks=(2,)) -> dict:
    """Qubit and field expectations straight from joint state vectors.

    ``vectors`` has shape ``(..., 2(N+1))``.  Returns a dict with keys
    ``sigma_z``, ``sigma_plus``, ``("n", k)`` and ``("a", k)``.
    """
    vectors = np.asarray(vectors)
    half = vectors.shape[-1] // 2
    e, g = vectors[..., :half], vectors[..., half:]
    n = np.arange(half, dtype=float)
    pe, pg = np.abs(e) ** 2, np.abs(g) ** 2
    out = {
        "sigma_z": np.sum(pe - pg, axis=-1),
        "sigma_plus": np.sum(np.conj(e) * g, axis=-1),
    }
    for k in ks:
        out[("n", k)] = np.sum(n**k * (pe + pg), axis=-1)
    for k in a_ks:
        m = n[: half - k]
        w = np.exp(0.5 * (gammaln(m + k + 1) - gammaln(m + 1)))
        out[("a", k)] = np.sum(
            w * (np.conj(e[..., : half - k]) * e[..., k:] + np.conj(g[..., : half - k]) * g[..., k:]), axis=-1
        )
    return out
