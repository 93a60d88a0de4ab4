import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jcsusy import (
    SIGMA_Z,
    JointState,
    ModelParams,
    SingletError,
    apply_intertwiner,
    embed_field,
    embed_qubit,
    interior_indices,
    intertwiner,
    intertwining_residual,
    ladder_matrices,
    make_cat_state,
    make_coherent_state,
    make_fock_state,
    make_initial_state,
    susy_map_state,
    symmetry_commutator_residual,
    symmetry_operator,
    symmetry_spectrum,
    transform_observable,
)

params_st = st.builds(
    ModelParams,
    omega_a=st.floats(-2.0, 3.0),
    lam=st.floats(0.0, 0.5),
    omega_c=st.floats(0.5, 2.0),
)


def basis(N, block, n):
    v = np.zeros(2 * (N + 1), dtype=complex)
    v[(0 if block == "e" else N + 1) + n] = 1
    return v


def test_ladder_action_on_basis():
    N = 6
    A = intertwiner(N)
    np.testing.assert_array_equal(A @ basis(N, "g", 0), 0)
    for n in range(1, N + 1):
        np.testing.assert_allclose(A @ basis(N, "e", n - 1), np.sqrt(n) * basis(N, "e", n))
        np.testing.assert_allclose(A @ basis(N, "g", n), np.sqrt(n) * basis(N, "g", n - 1))


def test_apply_matches_matrix():
    rng = np.random.default_rng(3)
    v = rng.normal(size=18) + 1j * rng.normal(size=18)
    s = JointState.from_vector(v)
    np.testing.assert_allclose(apply_intertwiner(s).vector, intertwiner(8) @ v, atol=1e-14)


def test_adag_a_diagonal_integers():
    M = symmetry_operator(7, "AdagA")
    assert np.count_nonzero(M - np.diag(np.diag(M))) == 0
    d = np.diag(M).real
    np.testing.assert_allclose(d, np.round(d), atol=1e-13)


def test_singlet_raises():
    with pytest.raises(SingletError):
        susy_map_state(make_initial_state(0, 1, make_fock_state(0, 5)))


def test_coherent_invariant():
    s = make_initial_state(0, 1, make_coherent_state(4, 250))
    out = susy_map_state(s)
    assert abs(np.vdot(s.vector, out.mapped_state.vector)) > 1 - 1e-10
    assert out.norm_sq == pytest.approx(16, abs=1e-8)


def test_fock_lowered():
    out = susy_map_state(make_initial_state(0, 1, make_fock_state(3, 6)))
    np.testing.assert_allclose(out.mapped_state.vector, make_initial_state(0, 1, make_fock_state(2, 6)).vector)
    assert out.norm_sq == pytest.approx(3)


def test_even_cat_maps_to_odd_cat():
    even = make_initial_state(0, 1, make_cat_state(2, 0, 40))
    odd = make_initial_state(0, 1, make_cat_state(2, np.pi, 40))
    overlap = np.vdot(odd.vector, susy_map_state(even).mapped_state.vector)
    assert abs(overlap) > 1 - 1e-12


def test_transform_identity_and_sigma_z():
    N = 8
    _, _, n = ladder_matrices(N)
    I = np.eye(N + 1)
    res = transform_observable(np.eye(2 * (N + 1)))
    idx = interior_indices(N, margin=1)
    np.testing.assert_allclose(res[np.ix_(idx, idx)], np.block([[I + n, 0 * I], [0 * I, n]])[np.ix_(idx, idx)])
    res = transform_observable(embed_qubit(SIGMA_Z, N))
    np.testing.assert_allclose(res[np.ix_(idx, idx)], np.block([[I + n, 0 * I], [0 * I, -n]])[np.ix_(idx, idx)])


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_transform_number_power(k):
    # a n^k a^dag = (1+n)^(k+1) and a^dag n^k a = n (n-1)^k
    N = 10
    _, _, n = ladder_matrices(N)
    nk = np.linalg.matrix_power(n, k)
    res = transform_observable(embed_field(nk))
    d = np.arange(N + 1.0)
    idx = interior_indices(N, margin=1)
    expected = np.concatenate([(1 + d) ** (k + 1), d * (d - 1) ** k])
    np.testing.assert_allclose(np.diag(res)[idx].real, expected[idx])


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_transform_preserves_hermiticity(seed):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(14, 14)) + 1j * rng.normal(size=(14, 14))
    O = X + X.conj().T
    T = transform_observable(O)
    assert np.max(np.abs(T - T.conj().T)) < 1e-12


@settings(max_examples=20, deadline=None)
@given(params_st)
def test_intertwining_random(p):
    assert intertwining_residual(p, 40) < 1e-12
    assert intertwining_residual(p, 40, reverse=True) < 1e-12


def test_intertwining_decoupled_exact():
    assert intertwining_residual(ModelParams(1.3, 0.0), 12) == 0.0


def test_intertwining_needs_shift():
    assert intertwining_residual(ModelParams(2.0), 20, shift=False) > 1.0


def test_symmetry_spectrum_n10():
    for which, singlet in (("AdagA", basis(10, "g", 0)), ("AAdag", basis(10, "e", 0))):
        spaces = symmetry_spectrum(10, which)
        assert [round(s.value) for s in spaces] == list(range(len(spaces)))
        assert len(spaces) >= 8
        assert spaces[0].multiplicity == 1
        assert all(s.multiplicity == 2 for s in spaces[1:])
        assert abs(np.vdot(singlet, spaces[0].vectors[:, 0])) > 1 - 1e-10
    with pytest.raises(ValueError):
        symmetry_operator(4, "bogus")


@settings(max_examples=10, deadline=None)
@given(params_st)
def test_symmetry_commutes(p):
    r_jc, r_ajc = symmetry_commutator_residual(p, 30)
    assert r_jc < 1e-12 and r_ajc < 1e-12
