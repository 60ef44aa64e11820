"""Dephasing of an idling superconducting charge qubit.

The package models a charge qubit parked at its degeneracy point while an
Ohmic electromagnetic environment couples to the island charge.  It
provides the closed-form reduced dynamics over one idle gate, the
decoherence measures built on it, brute-force composite-system oracles
for validation, and a small command line front end.
"""

__version__ = "0.1.0"

from .bath import (
    BathSpec,
    DiscreteBath,
    QuadratureError,
    coth,
    dephasing_exponent,
    dephasing_exponent_modes,
    dephasing_exponent_zero_t,
    discretize_bath,
    influence_exponent,
    phase_shift,
    phase_shift_modes,
    spectral_density,
    suggested_fock_levels,
)
from .evolution import (
    COMPUTATIONAL,
    EIGENBASIS,
    DecoherenceCurve,
    DeviationOperator,
    NoCrossingError,
    QubitState,
    bloch_supremum_scan,
    deviation,
    deviation_norm,
    deviation_norm_closed_form,
    evolve_ideal,
    evolve_real,
    evolve_real_influence_sum,
    low_decoherence_time,
    max_decoherence,
    pure_state,
)
from .model import (
    ChargeHamiltonianWindow,
    ChargeQubitCircuit,
    TwoLevelParams,
    basis_change,
    charge_hamiltonian,
    charging_energy,
    dimensionless_gate_charge,
    eta_from_circuit,
    gate_unitary,
    josephson_energy,
    two_level_fields,
)
from .oracle import (
    BathTruncationWarning,
    CompositeSystem,
    DimensionCapError,
    ErrorScalingResult,
    SplitComparison,
    TruncatedBathMode,
    error_scaling,
    evolve_exact,
    evolve_split,
    split_vs_closed_form,
    thermal_bath_state,
)
from .units import (
    HBAR_UEV_S,
    KB_UEV_PER_K,
    TIME_UNIT_S,
    UnitSystem,
    gate_time,
    temperature_to_beta,
    time_units_to_seconds,
)

import types as _types

__all__ = sorted(
    name
    for name, obj in globals().items()
    if not name.startswith("_") and not isinstance(obj, _types.ModuleType)
)
