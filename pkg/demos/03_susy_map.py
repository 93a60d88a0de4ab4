# %% [markdown]
# # The SUSY map between JC and AJC
#
# The intertwiner A = diag(a^dag, a) satisfies A H_JC(omega_a) = H_AJC(omega_a - 2 omega_c) A.
# So evolving with JC and then mapping (red path) gives the same state as
# mapping and then evolving with the AJC partner (blue path).

# %%
import numpy as np

from jcsusy import (
    DensePropagator,
    ModelParams,
    analytic_jc_propagate,
    apply_intertwiner,
    bloch_amplitudes,
    build_ajc_hamiltonian,
    intertwining_residual,
    make_cat_state,
    make_initial_state,
    susy_map_state,
    symmetry_spectrum,
)

p = ModelParams(omega_a=2.0, lam=0.1)

# %% The relation holds only with the shifted partner frequency
print("residual with shift   :", intertwining_residual(p, 40))
print("residual without shift:", intertwining_residual(p, 40, shift=False))

# %% Red path versus blue path
be, bg = bloch_amplitudes(np.pi / 3, np.pi / 4)
psi0 = make_initial_state(be, bg, make_cat_state(2.0, 0.0, 60))
blue = DensePropagator(build_ajc_hamiltonian(p.partner(), 60))
mapped0 = apply_intertwiner(psi0).normalized()
for t in (0.0, 50.0, 200.0):
    red = susy_map_state(analytic_jc_propagate(psi0, t, p)).mapped_state.vector
    print(f"t = {t:5.1f}  ||red - blue|| = {np.linalg.norm(red - blue.evolve(mapped0, t).vector):.2e}")

# %% Spectrum of A^dag A: a singlet at 0 and doublets at every positive integer
for space in symmetry_spectrum(10, "AdagA"):
    print(f"eigenvalue {space.value:6.3f}  multiplicity {space.multiplicity}")
