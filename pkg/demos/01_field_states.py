# %% [markdown]
# # Field states on a truncated Fock space
#
# Number, coherent and cat states all live on levels 0..N with a hard cutoff.
# Constructors renormalize on the truncated basis and refuse states whose
# weight leaks past the cutoff.

# %%
import numpy as np

from jcsusy import (
    TruncationError,
    ladder_matrices,
    make_cat_state,
    make_coherent_state,
    make_fock_state,
    mean_photon_number,
)

N = 250
alpha = 4.0

# %% Mean photon numbers of the three cat families
for name, vartheta, closed in [
    ("even", 0.0, alpha**2 * np.tanh(alpha**2)),
    ("odd", np.pi, alpha**2 / np.tanh(alpha**2)),
    ("Yurke-Stoler", np.pi / 2, alpha**2),
]:
    cat = make_cat_state(alpha, vartheta, N)
    print(f"{name:>12} cat: <n> = {mean_photon_number(cat):.12f}  closed form {closed:.12f}")

# %% Parity: the even cat has no odd-n weight
even = make_cat_state(alpha, 0.0, N)
print("largest odd-n amplitude of the even cat:", np.abs(even.amplitudes[1::2]).max())

# %% A coherent state is an eigenvector of a (away from the cutoff)
a, a_dag, n = ladder_matrices(N)
coh = make_coherent_state(alpha, N).amplitudes
print("|a|alpha> - alpha|alpha>| =", np.linalg.norm((a @ coh - alpha * coh)[: N - 1]))

# %% Too small a truncation is rejected
try:
    make_coherent_state(alpha, 20)
except TruncationError as exc:
    print("rejected:", exc)

# %% Fock states
print("<n> of |3> =", mean_photon_number(make_fock_state(3, 5)))
