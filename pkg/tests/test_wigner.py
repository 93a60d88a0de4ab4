import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jcsusy import (
    JointState,
    ModelParams,
    PhaseSpaceGrid,
    TruncationError,
    WignerEvaluator,
    analytic_jc_propagate,
    make_coherent_state,
    make_fock_state,
    make_initial_state,
    reduced_field_density,
    support_guard,
    wigner_at,
    wigner_grid,
)

N = 60
points = st.builds(complex, st.floats(-2.5, 2.5), st.floats(-2.5, 2.5))


def pure(amps):
    return np.outer(amps, np.conj(amps))


VAC = pure(make_fock_state(0, N).amplitudes)


def test_reduced_density_product_and_bell():
    phi = make_coherent_state(1.1, 20)
    rho = reduced_field_density(make_initial_state(0, 1, phi))
    np.testing.assert_allclose(rho, pure(phi.amplitudes), atol=1e-15)
    v = np.zeros(8)
    v[0] = v[5] = 1 / np.sqrt(2)  # (|e,0> + |g,1>)/sqrt 2 with N = 3
    rho = reduced_field_density(JointState.from_vector(v))
    np.testing.assert_allclose(rho, np.diag([0.5, 0.5, 0, 0]), atol=1e-15)


def test_reduced_density_mixed_after_collapse():
    s0 = make_initial_state(0, 1, make_coherent_state(3, 80))
    rho = reduced_field_density(analytic_jc_propagate(s0, 40.0, ModelParams(1.0)))
    assert np.real(np.trace(rho @ rho)) < 0.9
    assert np.trace(rho).real == pytest.approx(1)


@settings(max_examples=25, deadline=None)
@given(points)
def test_vacuum_closed_form(alpha):
    assert wigner_at(VAC, alpha) == pytest.approx(np.exp(-2 * abs(alpha) ** 2) / np.pi, abs=1e-12)
    assert wigner_at(VAC, alpha, "standard") == pytest.approx(2 * np.exp(-2 * abs(alpha) ** 2) / np.pi, abs=1e-12)


def test_coherent_peak_and_fock_dip():
    beta = 1.2 - 0.7j
    assert wigner_at(pure(make_coherent_state(beta, N).amplitudes), beta) == pytest.approx(1 / np.pi, abs=1e-10)
    assert wigner_at(pure(make_fock_state(1, N).amplitudes), 0) == pytest.approx(-1 / np.pi, abs=1e-12)


def test_vacuum_grid_integral():
    wg = wigner_grid(VAC, PhaseSpaceGrid(-3, 3, -3, 3, 61))
    assert wg.integral == pytest.approx(0.5, abs=1e-3)
    assert wg.cell_area == pytest.approx(0.01)
    wg2 = wigner_grid(VAC, PhaseSpaceGrid(-3, 3, -3, 3, 21), convention="standard", threads=3)
    assert wg2.integral == pytest.approx(1.0, abs=2e-3)


def test_grid_orientation():
    rho = pure(make_coherent_state(1.0 + 2.0j, N).amplitudes)
    wg = wigner_grid(rho, PhaseSpaceGrid(-1, 3, -1, 3, 9))
    r, c = np.unravel_index(np.argmax(wg.values), wg.values.shape)
    assert (wg.re[c], wg.im[r]) == (1.0, 2.0)


def test_threads_deterministic():
    rho = pure(make_coherent_state(0.8, N).amplitudes)
    g = PhaseSpaceGrid(-2, 2, -2, 2, 11)
    np.testing.assert_array_equal(wigner_grid(rho, g).values, wigner_grid(rho, g, threads=4).values)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32 - 1), points)
def test_reality_and_bound(seed, alpha):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(N + 1, 6)) + 1j * rng.normal(size=(N + 1, 6))
    X[12:] = 0  # keep support well inside the truncation
    rho = X @ X.conj().T
    rho /= np.trace(rho)
    ev = WignerEvaluator(rho)
    val = ev.parity_expectation(alpha)
    assert abs(val.imag) < 1e-12
    assert abs(ev(alpha)) <= 1 / np.pi + 1e-10


@settings(max_examples=15, deadline=None)
@given(points, st.builds(complex, st.floats(-1, 1), st.floats(-1, 1)))
def test_displacement_covariance(alpha, beta):
    rho = pure(make_fock_state(2, N).amplitudes)
    ev = WignerEvaluator(rho)
    D = ev.displacement(beta)
    moved = D @ rho @ D.conj().T
    assert wigner_at(moved, alpha) == pytest.approx(ev(alpha - beta), abs=1e-8)


def test_conjugation_mirrors():
    rho = pure(make_coherent_state(0.9 + 0.4j, N).amplitudes)
    alpha = 0.3 + 0.8j
    assert wigner_at(rho.conj(), alpha) == pytest.approx(wigner_at(rho, np.conj(alpha)), abs=1e-12)


def test_support_guard():
    support_guard(2.0, 30)
    with pytest.raises(TruncationError):
        support_guard(4.0, 40)
    with pytest.raises(TruncationError):
        wigner_grid(VAC, PhaseSpaceGrid(-5, 5, -5, 5, 3))


def test_grid_validation():
    with pytest.raises(ValueError):
        PhaseSpaceGrid(1, -1, 0, 1, 5)
    with pytest.raises(ValueError):
        PhaseSpaceGrid(-1, 1, -1, 1, 1)
    with pytest.raises(ValueError):
        WignerEvaluator(VAC, "bogus")
