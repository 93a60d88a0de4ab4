"""Reduced field density matrices and displaced-parity Wigner functions.

``W(alpha) = c * sum_k (-1)^k <k| D^dag(alpha) rho D(alpha) |k>`` with
``D(alpha) = exp(alpha a^dag - alpha* a)``.  The default ``"paper"``
convention uses ``c = 1/pi``, under which W integrates to 1/2 over the plane;
``"standard"`` uses ``c = 2/pi`` and integrates to 1.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from .dynamics import JointState
from .errors import TruncationError
from .fock_space import ladder_matrices

PREFACTORS = {"paper": 1.0 / np.pi, "standard": 2.0 / np.pi}


@dataclass(frozen=True)
class PhaseSpaceGrid:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    points_per_axis: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("grid bounds must be ordered (min < max)")
        if self.points_per_axis < 2:
            raise ValueError("points_per_axis must be >= 2")

    @property
    def re_axis(self) -> np.ndarray:
        return np.linspace(self.re_min, self.re_max, self.points_per_axis)

    @property
    def im_axis(self) -> np.ndarray:
        return np.linspace(self.im_min, self.im_max, self.points_per_axis)

    @property
    def max_abs_alpha(self) -> float:
        return float(np.hypot(max(abs(self.re_min), abs(self.re_max)), max(abs(self.im_min), abs(self.im_max))))


@dataclass(frozen=True)
class WignerGrid:
    """Wigner values on a grid; ``values[i, j]`` sits at ``re[j] + 1j * im[i]``."""

    re: np.ndarray
    im: np.ndarray
    values: np.ndarray
    integral: float
    cell_area: float
    convention: str


def reduced_field_density(state: JointState) -> np.ndarray:
    """Partial trace over the qubit: ``|e-block><e-block| + |g-block><g-block|``."""
    e, g = state.excited, state.ground
    return np.outer(e, e.conj()) + np.outer(g, g.conj())


def support_guard(alpha: complex, n_trunc: int) -> None:
    r = abs(alpha)
    if r**2 + 6 * r + 9 >= n_trunc:
        raise TruncationError(
            f"|alpha|={r:.3g} too close to the truncation N={n_trunc} for a faithful displacement"
        )


class WignerEvaluator:
    """Wigner function of a fixed density matrix at arbitrary phase-space points.

    ``D(r e^{i theta}) = R(theta) exp(r (a^dag - a)) R(theta)^dag`` with
    ``R(theta) = exp(i theta n)``, so a single Hermitian eigendecomposition of
    ``i (a^dag - a)`` serves every point.
    """

    def __init__(self, rho: np.ndarray, convention: str = "paper"):
        if convention not in PREFACTORS:
            raise ValueError(f"convention must be one of {sorted(PREFACTORS)}, got {convention!r}")
        self.rho = np.asarray(rho, dtype=complex)
        self.n_trunc = self.rho.shape[0] - 1
        self.convention = convention
        self.prefactor = PREFACTORS[convention]
        a, a_dag, _ = ladder_matrices(self.n_trunc)
        self._lam, self._vec = np.linalg.eigh(1j * (a_dag - a))
        self._levels = np.arange(self.n_trunc + 1)
        self._parity = (-1.0) ** self._levels

    def displacement(self, alpha: complex) -> np.ndarray:
        r, theta = abs(alpha), np.angle(alpha)
        rot = np.exp(1j * theta * self._levels)
        core = (self._vec * np.exp(-1j * r * self._lam)) @ self._vec.conj().T
        return rot[:, None] * core * rot.conj()[None, :]

    def parity_expectation(self, alpha: complex) -> complex:
        """``sum_k (-1)^k <k| D^dag rho D |k>`` (complex, for residue checks)."""
        support_guard(alpha, self.n_trunc)
        D = self.displacement(alpha)
        diag = np.sum(D.conj() * (self.rho @ D), axis=0)
        return complex(np.dot(self._parity, diag))

    def __call__(self, alpha: complex) -> float:
        return self.prefactor * self.parity_expectation(alpha).real


def wigner_at(rho: np.ndarray, alpha: complex, convention: str = "paper") -> float:
    return WignerEvaluator(rho, convention)(alpha)


def wigner_grid(rho: np.ndarray, grid: PhaseSpaceGrid, convention: str = "paper", threads: int = 1) -> WignerGrid:
    """Evaluate W on every grid point and integrate it with the trapezoid rule.

    Raises ``TruncationError`` before any work if a corner violates the
    support guard.
    """
    support_guard(grid.max_abs_alpha, rho.shape[0] - 1)
    ev = WignerEvaluator(rho, convention)
    re, im = grid.re_axis, grid.im_axis

    def row(y):
        return [ev(complex(x, y)) for x in re]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, im))
    else:
        rows = [row(y) for y in im]
    values = np.array(rows)
    integral = float(trapezoid(trapezoid(values, re, axis=1), im))
    return WignerGrid(re, im, values, integral, float((re[1] - re[0]) * (im[1] - im[0])), convention)
