"""Jaynes-Cummings and anti-Jaynes-Cummings dynamics linked by a SUSY intertwiner."""

__version__ = "0.1.0"

from .dynamics import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_Z,
    DensePropagator,
    JointState,
    ModelParams,
    analytic_jc_propagate,
    bloch_amplitudes,
    build_ajc_hamiltonian,
    build_jc_hamiltonian,
    dense_propagate,
    embed_field,
    embed_qubit,
    f_coeff,
    fg_table,
    g_coeff,
    hermitian_residual,
    make_initial_state,
    rabi_frequency,
)
from .errors import DegenerateStateError, SingletError, TruncationError, UndefinedFanoError
from .fock_space import (
    FieldState,
    cat_norm_squared,
    coherent_tail_mass,
    ladder_matrices,
    make_cat_state,
    make_coherent_state,
    make_fock_state,
    mean_photon_number,
)
from .observables import (
    InitialSpec,
    ResonantExpectations,
    ajc_adag_k,
    ajc_ak,
    ajc_dense_states,
    ajc_nk,
    ajc_sigma_minus,
    ajc_sigma_plus,
    ajc_sigma_z,
    expectation_via_state,
    fano_factor,
    fock_fano_factor,
    resonant_expectations,
    state_expectations,
    transition_pair,
    transition_T,
)
from .susy_map import (
    Eigenspace,
    SusyMapResult,
    apply_intertwiner,
    interior_indices,
    intertwiner,
    intertwining_residual,
    susy_map_state,
    symmetry_commutator_residual,
    symmetry_operator,
    symmetry_spectrum,
    transform_observable,
)
from .wigner import (
    PhaseSpaceGrid,
    WignerEvaluator,
    WignerGrid,
    reduced_field_density,
    support_guard,
    wigner_at,
    wigner_grid,
)
