"""JC/AJC Hamiltonians and their exact time evolution.

Joint states live in the basis ``{|e,0>, ..., |e,N>, |g,0>, ..., |g,N>}`` so
that every operator has the 2x2 block layout ``[[ee, eg], [ge, gg]]``.
Units: hbar = 1 and all frequencies are in units of ``omega_c``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock_space import FieldState, ladder_matrices

HERMITIAN_TOLERANCE = 1e-12
_SINC_SWITCH = 1e-6

SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)  # |e><g|
SIGMA_MINUS = SIGMA_PLUS.T.copy()


@dataclass(frozen=True)
class ModelParams:
    """Frequencies and coupling of a JC or AJC Hamiltonian.

    ``omega_a`` is the atomic frequency of the Hamiltonian these parameters
    are used to build; ``partner()`` gives the parameters of the SUSY partner
    AJC model of a JC model.
    """

    omega_a: float
    lam: float = 0.1
    omega_c: float = 1.0

    def __post_init__(self):
        if not self.omega_c > 0:
            raise ValueError(f"omega_c must be positive, got {self.omega_c}")
        if not self.lam >= 0:
            raise ValueError(f"coupling must be non-negative, got {self.lam}")

    @property
    def delta(self) -> float:
        return self.omega_a - self.omega_c

    def partner(self) -> "ModelParams":
        """Parameters of the AJC partner: atomic frequency shifted by ``-2 omega_c``."""
        return ModelParams(self.omega_a - 2.0 * self.omega_c, self.lam, self.omega_c)


@dataclass(frozen=True)
class JointState:
    """Qubit-field wavefunction split into its excited and ground blocks."""

    excited: np.ndarray
    ground: np.ndarray

    def __post_init__(self):
        e = np.array(self.excited, dtype=complex)
        g = np.array(self.ground, dtype=complex)
        if e.shape != g.shape or e.ndim != 1:
            raise ValueError("excited and ground blocks must be 1-D with equal length")
        e.setflags(write=False)
        g.setflags(write=False)
        object.__setattr__(self, "excited", e)
        object.__setattr__(self, "ground", g)

    @classmethod
    def from_vector(cls, vec) -> "JointState":
        vec = np.asarray(vec, dtype=complex)
        half = vec.size // 2
        return cls(vec[:half], vec[half:])

    @property
    def n_trunc(self) -> int:
        return self.excited.size - 1

    @property
    def vector(self) -> np.ndarray:
        return np.concatenate([self.excited, self.ground])

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def normalized(self) -> "JointState":
        nrm = self.norm()
        return JointState(self.excited / nrm, self.ground / nrm)


def make_initial_state(beta_e: complex, beta_g: complex, field: FieldState) -> JointState:
    """Product state ``(beta_e|e> + beta_g|g>) / N0 (x) field``."""
    n0 = np.sqrt(abs(beta_e) ** 2 + abs(beta_g) ** 2)
    if n0 == 0:
        raise ValueError("qubit amplitudes beta_e and beta_g are both zero")
    c = field.amplitudes
    return JointState(beta_e / n0 * c, beta_g / n0 * c)


def bloch_amplitudes(theta: float, phi: float) -> tuple[complex, complex]:
    """``(beta_e, beta_g)`` of ``cos(theta)|g> + exp(i phi) sin(theta)|e>``."""
    return np.exp(1j * phi) * np.sin(theta), complex(np.cos(theta))


def embed_qubit(op: np.ndarray, n_trunc: int) -> np.ndarray:
    """Lift a 2x2 qubit operator (basis e, g) to the joint space."""
    return np.kron(np.asarray(op, dtype=complex), np.eye(n_trunc + 1))


def embed_field(op: np.ndarray) -> np.ndarray:
    """Lift a field operator to the joint space."""
    return np.kron(np.eye(2), np.asarray(op, dtype=complex))


def _blocks(ee, eg, ge, gg) -> np.ndarray:
    return np.block([[ee, eg], [ge, gg]])


def build_jc_hamiltonian(p: ModelParams, n_trunc: int) -> np.ndarray:
    """``omega_a/2 sigma_z + omega_c a^dag a + lam (a sigma_+ + a^dag sigma_-)``."""
    a, a_dag, n = ladder_matrices(n_trunc)
    eye = np.eye(n_trunc + 1)
    return _blocks(
        p.omega_c * n + 0.5 * p.omega_a * eye,
        p.lam * a,
        p.lam * a_dag,
        p.omega_c * n - 0.5 * p.omega_a * eye,
    )


def build_ajc_hamiltonian(p: ModelParams, n_trunc: int) -> np.ndarray:
    """``omega_a/2 sigma_z + omega_c a^dag a + lam (a^dag sigma_+ + a sigma_-)``.

    ``p.omega_a`` is used as is.  To build the SUSY partner of a JC model
    pass ``p.partner()``.
    """
    a, a_dag, n = ladder_matrices(n_trunc)
    eye = np.eye(n_trunc + 1)
    return _blocks(
        p.omega_c * n + 0.5 * p.omega_a * eye,
        p.lam * a_dag,
        p.lam * a,
        p.omega_c * n - 0.5 * p.omega_a * eye,
    )


def rabi_frequency(m, p: ModelParams):
    """``Omega_m = sqrt((Delta/2)^2 + lam^2 m)``; broadcasts over ``m``."""
    m = np.asarray(m)
    if np.any(m < 0):
        raise ValueError("photon index must be non-negative")
    return np.sqrt((0.5 * p.delta) ** 2 + p.lam**2 * m)


def _sin_over(omega, t):
    """``sin(omega t) / omega`` with the removable singularity at ``omega t = 0``."""
    omega, t = np.broadcast_arrays(np.asarray(omega, float), np.asarray(t, float))
    x = omega * t
    small = np.abs(x) < _SINC_SWITCH
    safe = np.where(small, 1.0, omega)
    return np.where(small, t * (1.0 - x**2 / 6.0), np.sin(x) / safe)


def f_coeff(m, t, p: ModelParams):
    """``F_m(t) = cos(Omega_m t) + i (Delta/2) sin(Omega_m t) / Omega_m``."""
    om = rabi_frequency(m, p)
    return np.cos(om * t) + 0.5j * p.delta * _sin_over(om, t)


def g_coeff(m, t, p: ModelParams):
    """``G_m(t) = -i lam sin(Omega_m t) / Omega_m`` (purely imaginary)."""
    om = rabi_frequency(m, p)
    return -1j * p.lam * _sin_over(om, t)


def fg_table(m_max: int, times, p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """``F_m(t)``, ``G_m(t)`` for ``m = 0..m_max`` as arrays of shape ``(T, m_max+1)``."""
    t = np.ravel(np.asarray(times, dtype=float))[:, None]
    m = np.arange(m_max + 1)[None, :]
    return f_coeff(m, t, p), g_coeff(m, t, p)


def excitation_phase(n_trunc: int, t: float, omega_c: float) -> tuple[np.ndarray, np.ndarray]:
    """Phases ``exp(-i omega_c t (N_exc - 1/2))`` on the excited and ground blocks.

    ``N_exc = a^dag a + |e><e|`` commutes with the JC Hamiltonian; the F/G
    blocks only carry the evolution generated by the remainder.
    """
    n = np.arange(n_trunc + 1)
    return np.exp(-1j * omega_c * t * (n + 0.5)), np.exp(-1j * omega_c * t * (n - 0.5))


def analytic_jc_propagate(state0: JointState, t: float, p: ModelParams) -> JointState:
    """Apply the closed-form JC evolution operator to ``state0``.

    Each doublet ``{|e,n>, |g,n+1>}`` rotates by
    ``[[conj(F_{n+1}), sqrt(n+1) G_{n+1}], [sqrt(n+1) G_{n+1}, F_{n+1}]]`` and
    ``|g,0>`` picks up ``F_0``.  The top level ``|e,N>`` has no partner under
    the hard cutoff and only acquires its energy phase.
    """
    N = state0.n_trunc
    e, g = state0.excited, state0.ground
    m = np.arange(N + 2)
    F = f_coeff(m, t, p)
    G = g_coeff(m, t, p)
    root = np.sqrt(np.arange(1, N + 1))

    new_e = np.empty(N + 1, dtype=complex)
    new_g = np.empty(N + 1, dtype=complex)
    new_e[:N] = np.conj(F[1 : N + 1]) * e[:N] + root * G[1 : N + 1] * g[1:]
    new_e[N] = np.exp(-0.5j * p.delta * t) * e[N]
    new_g[0] = F[0] * g[0]
    new_g[1:] = F[1 : N + 1] * g[1:] + root * G[1 : N + 1] * e[:N]

    ph_e, ph_g = excitation_phase(N, t, p.omega_c)
    return JointState(ph_e * new_e, ph_g * new_g)


def hermitian_residual(H: np.ndarray) -> float:
    return float(np.max(np.abs(H - H.conj().T)))


class DensePropagator:
    """``exp(-i t H)`` from one Hermitian eigendecomposition, reusable across times."""

    def __init__(self, H: np.ndarray):
        H = np.asarray(H, dtype=complex)
        res = hermitian_residual(H)
        if res > HERMITIAN_TOLERANCE:
            raise ValueError(f"Hamiltonian is not Hermitian (residual {res:.2e})")
        self.energies, self.vectors = np.linalg.eigh(H)

    def evolve_vector(self, vec: np.ndarray, t: float) -> np.ndarray:
        coeffs = self.vectors.conj().T @ vec
        return self.vectors @ (np.exp(-1j * self.energies * t) * coeffs)

    def evolve(self, state: JointState, t: float) -> JointState:
        return JointState.from_vector(self.evolve_vector(state.vector, t))

    def evolve_many(self, state: JointState, times) -> np.ndarray:
        """State vectors at each time, shape ``(T, 2(N+1))``."""
        coeffs = self.vectors.conj().T @ state.vector
        t = np.ravel(np.asarray(times, dtype=float))
        phases = np.exp(-1j * np.outer(t, self.energies))
        return (phases * coeffs) @ self.vectors.T


def dense_propagate(H: np.ndarray, state0: JointState, t: float) -> JointState:
    """Brute-force ``exp(-i t H) state0`` via Hermitian eigendecomposition."""
    return DensePropagator(H).evolve(state0, t)
