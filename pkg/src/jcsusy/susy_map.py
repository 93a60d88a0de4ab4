"""The intertwiner ``A = diag(a^dag, a)`` between the JC model and its AJC partner.

``A H_JC(omega_a) = H_AJC(omega_a - 2 omega_c) A``, so ``A`` carries JC
solutions onto AJC solutions.  ``A`` is not unitary; mapped states are
renormalized and the squared norm of the raw image is kept alongside.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import JointState, ModelParams, build_ajc_hamiltonian, build_jc_hamiltonian
from .errors import SingletError
from .fock_space import ladder_matrices

ZERO_IMAGE_TOLERANCE = 1e-14


@dataclass(frozen=True)
class SusyMapResult:
    mapped_state: JointState
    norm_sq: float


def intertwiner(n_trunc: int) -> np.ndarray:
    a, a_dag, _ = ladder_matrices(n_trunc)
    zero = np.zeros_like(a)
    return np.block([[a_dag, zero], [zero, a]])


def apply_intertwiner(state: JointState) -> JointState:
    """Unnormalized ``A psi`` without forming the matrix."""
    N = state.n_trunc
    root = np.sqrt(np.arange(1, N + 1))
    e = np.zeros(N + 1, dtype=complex)
    g = np.zeros(N + 1, dtype=complex)
    e[1:] = root * state.excited[:N]  # a^dag, hard cutoff drops |e,N>
    g[:N] = root * state.ground[1:]
    return JointState(e, g)


def susy_map_state(psi: JointState) -> SusyMapResult:
    """Map a JC state to the normalized AJC state ``A psi / ||A psi||``.

    Raises
    ------
    SingletError
        If ``||A psi||^2`` is below ``ZERO_IMAGE_TOLERANCE`` (e.g. ``|g,0>``).
    """
    image = apply_intertwiner(psi)
    norm_sq = float(np.sum(np.abs(image.vector) ** 2))
    if norm_sq < ZERO_IMAGE_TOLERANCE:
        raise SingletError("state is annihilated by the intertwiner (SUSY singlet |g,0>)")
    return SusyMapResult(image.normalized(), norm_sq)


def transform_observable(O: np.ndarray) -> np.ndarray:
    """``A^dag O A`` for a joint-space operator ``O``."""
    O = np.asarray(O, dtype=complex)
    A = intertwiner(O.shape[0] // 2 - 1)
    return A.conj().T @ O @ A


def interior_indices(n_trunc: int, margin: int = 2) -> np.ndarray:
    """Joint-space indices with Fock label ``<= N - margin`` in both qubit blocks."""
    keep = np.arange(n_trunc - margin + 1)
    return np.concatenate([keep, keep + n_trunc + 1])


def _interior_max(M: np.ndarray, n_trunc: int) -> float:
    idx = interior_indices(n_trunc)
    return float(np.max(np.abs(M[np.ix_(idx, idx)])))


def intertwining_residual(p: ModelParams, n_trunc: int, shift: bool = True, reverse: bool = False) -> float:
    """Interior max-element residual of the JC/AJC intertwining relation.

    ``shift=False`` builds the AJC side with the unshifted ``omega_a``, which
    breaks the relation (useful as a negative control).  ``reverse=True``
    checks ``H_JC A^dag = A^dag H_AJC`` instead.
    """
    A = intertwiner(n_trunc)
    H_jc = build_jc_hamiltonian(p, n_trunc)
    H_ajc = build_ajc_hamiltonian(p.partner() if shift else p, n_trunc)
    if reverse:
        Ad = A.conj().T
        diff = H_jc @ Ad - Ad @ H_ajc
    else:
        diff = A @ H_jc - H_ajc @ A
    return _interior_max(diff, n_trunc)


@dataclass(frozen=True)
class Eigenspace:
    value: float
    multiplicity: int
    vectors: np.ndarray  # columns span the eigenspace, joint-space length


def symmetry_operator(n_trunc: int, which: str = "AdagA") -> np.ndarray:
    """``A^dag A`` (symmetry of H_JC) or ``A A^dag`` (symmetry of H_AJC)."""
    A = intertwiner(n_trunc)
    if which == "AdagA":
        return A.conj().T @ A
    if which == "AAdag":
        return A @ A.conj().T
    raise ValueError(f"which must be 'AdagA' or 'AAdag', got {which!r}")


def symmetry_spectrum(n_trunc: int, which: str = "AdagA", tol: float = 1e-10) -> list[Eigenspace]:
    """Eigenspaces of the SUSY symmetry restricted to the interior.

    The restricted operator is diagonalized and eigenvalues are grouped within
    ``tol``.  The largest eigenvalue is dropped because the interior cut
    removes one member of its doublet.
    """
    idx = interior_indices(n_trunc)
    S = symmetry_operator(n_trunc, which)[np.ix_(idx, idx)]
    vals, vecs = np.linalg.eigh(S)
    full = np.zeros((2 * (n_trunc + 1), idx.size), dtype=complex)
    full[idx, :] = vecs

    spaces: list[Eigenspace] = []
    start = 0
    for i in range(1, vals.size + 1):
        if i == vals.size or vals[i] - vals[start] > tol:
            spaces.append(Eigenspace(float(np.mean(vals[start:i])), i - start, full[:, start:i]))
            start = i
    return spaces[:-1]


def symmetry_commutator_residual(p: ModelParams, n_trunc: int) -> tuple[float, float]:
    """Interior residuals of ``[A^dag A, H_JC]`` and ``[A A^dag, H_AJC]``."""
    H_jc = build_jc_hamiltonian(p, n_trunc)
    H_ajc = build_ajc_hamiltonian(p.partner(), n_trunc)
    S1 = symmetry_operator(n_trunc, "AdagA")
    S2 = symmetry_operator(n_trunc, "AAdag")
    return (
        _interior_max(S1 @ H_jc - H_jc @ S1, n_trunc),
        _interior_max(S2 @ H_ajc - H_ajc @ S2, n_trunc),
    )
