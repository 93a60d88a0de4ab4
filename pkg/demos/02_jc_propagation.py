# %% [markdown]
# # Exact Jaynes-Cummings evolution
#
# The JC Hamiltonian conserves the excitation number, so the evolution splits
# into 2x2 doublets {|e,n>, |g,n+1>} rotated by closed-form coefficients F and
# G.  Here the closed form is checked against brute-force diagonalization and
# used to show collapse and revival of the atomic inversion.

# %%
import numpy as np

from jcsusy import (
    DensePropagator,
    ModelParams,
    analytic_jc_propagate,
    build_jc_hamiltonian,
    fg_table,
    make_coherent_state,
    make_initial_state,
)

p = ModelParams(omega_a=1.0, lam=0.1)  # resonant, weak coupling
N = 120
psi0 = make_initial_state(1.0, 0.0, make_coherent_state(4.0, N))  # |e> (x) |alpha=4>

# %% Closed form against dense diagonalization
dense = DensePropagator(build_jc_hamiltonian(p, N))
times = np.linspace(0, 300, 13)
worst = max(np.abs(analytic_jc_propagate(psi0, t, p).vector - dense.evolve(psi0, t).vector).max() for t in times)
print(f"max |analytic - dense| over {times.size} times: {worst:.2e}")

# %% Block unitarity of the doublet coefficients
F, G = fg_table(N, times, p)
m = np.arange(N + 1)
print("max | |F|^2 + m|G|^2 - 1 |:", np.abs(np.abs(F) ** 2 + m * np.abs(G) ** 2 - 1).max())

# %% Collapse and revival of <sigma_z>
for t in np.linspace(0, 300, 16):
    s = analytic_jc_propagate(psi0, t, p)
    inversion = np.sum(np.abs(s.excited) ** 2 - np.abs(s.ground) ** 2)
    bar = "#" * int(round(20 * (inversion + 1)))
    print(f"t = {t:6.1f}  <sigma_z> = {inversion:+.3f}  {bar}")
