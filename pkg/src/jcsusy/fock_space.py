"""Truncated single-mode Fock space: ladder operators and field-state constructors.

The basis is ``|0>, ..., |N>`` with a hard cutoff, ``a^dag |N> = 0``.  Every
constructor renormalizes over the truncated basis so that downstream series
can assume ``sum |C_n|^2 = 1`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammainc, gammaln

from .errors import DegenerateStateError, TruncationError

TAIL_TOLERANCE = 1e-10
NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class FieldState:
    """Photon-field wavefunction over the truncated Fock basis.

    Attributes
    ----------
    amplitudes : ndarray of complex, shape (N + 1,)
        Probability amplitudes ``C_n``.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size < 2:
            raise ValueError("amplitudes must be a 1-D sequence with at least two levels")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_trunc(self) -> int:
        return self.amplitudes.size - 1

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.probabilities)))

    def normalized(self) -> "FieldState":
        return FieldState(self.amplitudes / self.norm())


def _check_n_trunc(n_trunc: int) -> None:
    if int(n_trunc) != n_trunc or n_trunc < 1:
        raise ValueError(f"n_trunc must be an integer >= 1, got {n_trunc!r}")


def coherent_tail_mass(alpha: complex, n_trunc: int) -> float:
    """Poisson weight of a coherent state above level ``n_trunc``.

    Evaluated as the regularized lower incomplete gamma function, which avoids
    the cancellation in ``1 - sum_{n<=N} P(n)``.
    """
    mu = abs(alpha) ** 2
    if mu == 0.0:
        return 0.0
    return float(gammainc(n_trunc + 1, mu))


def _coherent_amplitudes(alpha: complex, n_trunc: int) -> np.ndarray:
    n = np.arange(n_trunc + 1)
    r = abs(alpha)
    if r == 0.0:
        amps = np.zeros(n_trunc + 1, dtype=complex)
        amps[0] = 1.0
        return amps
    # log-magnitudes keep large |alpha| from overflowing alpha^n / sqrt(n!)
    log_mag = -0.5 * r**2 + n * np.log(r) - 0.5 * gammaln(n + 1)
    phase = np.exp(1j * n * np.angle(alpha))
    return np.exp(log_mag) * phase


def make_fock_state(m: int, n_trunc: int) -> FieldState:
    """Number state ``|m>``."""
    _check_n_trunc(n_trunc)
    if m < 0 or m > n_trunc:
        raise ValueError(f"Fock level m={m} outside 0..{n_trunc}")
    amps = np.zeros(n_trunc + 1, dtype=complex)
    amps[m] = 1.0
    return FieldState(amps)


def make_coherent_state(alpha: complex, n_trunc: int) -> FieldState:
    """Glauber coherent state ``|alpha>`` renormalized on the truncated basis.

    Raises
    ------
    TruncationError
        If the analytic weight above ``n_trunc`` exceeds ``TAIL_TOLERANCE``.
    """
    _check_n_trunc(n_trunc)
    tail = coherent_tail_mass(alpha, n_trunc)
    if tail > TAIL_TOLERANCE:
        raise TruncationError(
            f"coherent state alpha={alpha} leaks {tail:.3e} above N={n_trunc}; increase n_trunc"
        )
    amps = _coherent_amplitudes(complex(alpha), n_trunc)
    return FieldState(amps / np.linalg.norm(amps))


def cat_norm_squared(alpha: complex, vartheta: float) -> float:
    """Analytic ``N_vartheta^2 = 2 (1 + exp(-2|alpha|^2) cos vartheta)``."""
    return 2.0 * (1.0 + np.exp(-2.0 * abs(alpha) ** 2) * np.cos(vartheta))


def make_cat_state(alpha: complex, vartheta: float, n_trunc: int) -> FieldState:
    """Cat state ``(|alpha> + exp(i vartheta) |-alpha>) / N_vartheta``.

    ``vartheta = 0`` gives the even cat, ``pi`` the odd cat and ``pi/2`` the
    Yurke-Stoler state.  Parity-forbidden amplitudes are exact zeros.
    """
    _check_n_trunc(n_trunc)
    if cat_norm_squared(alpha, vartheta) <= 1e-14:
        raise DegenerateStateError("degenerate cat normalization (odd cat with alpha -> 0)")
    tail = coherent_tail_mass(alpha, n_trunc)
    if tail > TAIL_TOLERANCE:
        raise TruncationError(
            f"cat state alpha={alpha} leaks {tail:.3e} above N={n_trunc}; increase n_trunc"
        )
    base = _coherent_amplitudes(complex(alpha), n_trunc)
    rel = np.exp(1j * vartheta)
    # <n|-alpha> = (-1)^n <n|alpha>, so each parity class carries one weight
    w_even, w_odd = 1.0 + rel, 1.0 - rel
    eps = 8 * np.finfo(float).eps
    w_even = 0.0 if abs(w_even) < eps else w_even
    w_odd = 0.0 if abs(w_odd) < eps else w_odd
    weights = np.where(np.arange(n_trunc + 1) % 2 == 0, w_even, w_odd)
    amps = base * weights
    norm = np.linalg.norm(amps)
    if norm**2 <= 1e-14:
        raise DegenerateStateError("cat state vanishes on the truncated basis")
    return FieldState(amps / norm)


def ladder_matrices(n_trunc: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Annihilation, creation and number matrices of size ``(N+1, N+1)``."""
    _check_n_trunc(n_trunc)
    a = np.diag(np.sqrt(np.arange(1, n_trunc + 1, dtype=float)), k=1).astype(complex)
    a_dag = a.conj().T
    n = np.diag(np.arange(n_trunc + 1, dtype=float)).astype(complex)
    return a, a_dag, n


def mean_photon_number(state: FieldState) -> float:
    """``<n> = sum_n n |C_n|^2``."""
    n = np.arange(state.n_trunc + 1)
    return float(np.sum(n * state.probabilities))
