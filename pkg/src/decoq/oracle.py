"""Brute-force reference dynamics for a qubit coupled to truncated bath modes.

The composite Hilbert space is the qubit tensored with a handful of
oscillator modes, each truncated to n_fock levels.  Everything here is
plain dense linear algebra: build the Hamiltonians, exponentiate by
eigendecomposition, partial-trace the bath out.  The point is to have an
independent check of the reduced closed-form map and of the accuracy
order of the symmetric propagator splitting, so this module deliberately
shares no formulas with the closed-form path beyond the Hamiltonian
itself.

Conventions match the rest of the package: the qubit part of the
Hamiltonian is -E_J/2 sigma_x in the charge basis, the bath couples
through sigma_z, and energies are in ueV with time in units of
hbar/ueV.
"""

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .bath import DiscreteBath, dephasing_exponent_modes, phase_shift_modes
from .evolution import COMPUTATIONAL, EIGENBASIS, QubitState, evolve_real
from .model import basis_change, gate_unitary, pauli_x, pauli_z

# relative thermal weight of the highest retained Fock level above which
# the truncated thermal state is considered unreliable
TRUNCATION_WEIGHT_TOL = 1e-13

# measured split-vs-exact errors at or below this are dominated by float
# round-off and carry no information about the step size
ERROR_FLOOR = 1e-13


class DimensionCapError(ValueError):
    """Composite Hilbert space would exceed the configured cap."""


class BathTruncationWarning(UserWarning):
    """Fock truncation leaves non-negligible thermal weight out."""


@dataclass(frozen=True)
class TruncatedBathMode:
    """One oscillator mode: frequency omega (ueV), coupling g (ueV), n_fock levels."""

    omega: float
    g: float
    n_fock: int

    def __post_init__(self):
        if not math.isfinite(self.omega) or self.omega <= 0.0:
            raise ValueError(f"mode frequency must be positive, got {self.omega}")
        if not math.isfinite(self.g):
            raise ValueError(f"mode coupling must be finite, got {self.g}")
        if self.n_fock < 2:
            raise ValueError(f"need at least two Fock levels, got {self.n_fock}")


@dataclass(frozen=True)
class CompositeSystem:
    """Qubit plus a finite list of truncated bath modes."""

    e_j: float
    modes: tuple[TruncatedBathMode, ...]
    max_dim: int = 4096

    def __post_init__(self):
        if not math.isfinite(self.e_j) or self.e_j < 0.0:
            raise ValueError(f"Josephson energy must be >= 0, got {self.e_j}")
        if not self.modes:
            raise ValueError("at least one bath mode is required")
        if not all(isinstance(m, TruncatedBathMode) for m in self.modes):
            raise TypeError("modes must be TruncatedBathMode instances")
        if self.dim > self.max_dim:
            raise DimensionCapError(
                f"composite dimension {self.dim} exceeds the cap {self.max_dim}; "
                "reduce n_fock or the number of modes"
            )

    @property
    def bath_dim(self) -> int:
        return math.prod(m.n_fock for m in self.modes)

    @property
    def dim(self) -> int:
        return 2 * self.bath_dim


def _lowering(n: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, n)), 1)


def _embed(modes, k: int, op: np.ndarray) -> np.ndarray:
    """Place op on mode k, identity on the others (bath space only)."""
    out = np.eye(1)
    for i, m in enumerate(modes):
        out = np.kron(out, op if i == k else np.eye(m.n_fock))
    return out


def build_hamiltonians(system: CompositeSystem) -> tuple[np.ndarray, np.ndarray]:
    """Return (H_sys, H_int_plus_bath) on the full composite space.

    H_sys = -E_J/2 sigma_x x 1, and the second piece is
    sigma_z x sum_k g_k (a_k + a_k^dag) + 1 x sum_k omega_k n_k.
    """
    nb = system.bath_dim
    coupling = np.zeros((nb, nb))
    bath_energy = np.zeros((nb, nb))
    for k, m in enumerate(system.modes):
        a = _lowering(m.n_fock)
        coupling += m.g * _embed(system.modes, k, a + a.T)
        bath_energy += m.omega * _embed(system.modes, k, a.T @ a)
    h_sys = np.kron(-0.5 * system.e_j * pauli_x.real, np.eye(nb))
    h_ib = np.kron(pauli_z.real, coupling) + np.kron(np.eye(2), bath_energy)
    return h_sys, h_ib


@functools.lru_cache(maxsize=8)
def _eigensystem(system: CompositeSystem):
    """Cached eigendecompositions of H_total and of the bath-coupling part."""
    h_sys, h_ib = build_hamiltonians(system)
    evals, evecs = np.linalg.eigh(h_sys + h_ib)
    evals_ib, evecs_ib = np.linalg.eigh(h_ib)
    for arr in (h_sys, h_ib, evals, evecs, evals_ib, evecs_ib):
        arr.flags.writeable = False
    return h_sys, h_ib, evals, evecs, evals_ib, evecs_ib


def _propagator(evals: np.ndarray, evecs: np.ndarray, t: float) -> np.ndarray:
    return (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T


def thermal_bath_state(modes, beta: float) -> np.ndarray:
    """Truncated thermal state of the bath, diagonal in the Fock basis.

    beta = inf puts every mode in its ground state.  Warns when the
    highest retained level still carries relative weight above
    TRUNCATION_WEIGHT_TOL.
    """
    if math.isnan(beta) or beta <= 0.0:
        raise ValueError(f"inverse temperature must be positive, got {beta}")
    out = np.eye(1)
    for m in modes:
        if math.isinf(beta):
            probs = np.zeros(m.n_fock)
            probs[0] = 1.0
        else:
            top_weight = math.exp(-beta * m.omega * (m.n_fock - 1))
            if top_weight > TRUNCATION_WEIGHT_TOL:
                warnings.warn(
                    f"mode at omega={m.omega} keeps relative weight "
                    f"{top_weight:.2e} in its highest Fock level; "
                    "increase n_fock for a faithful thermal state",
                    BathTruncationWarning,
                    stacklevel=2,
                )
            probs = np.exp(-beta * m.omega * np.arange(m.n_fock))
            probs /= probs.sum()
        out = np.kron(out, np.diag(probs))
    return out


def _to_computational(state: QubitState) -> tuple[QubitState, bool]:
    if state.basis == COMPUTATIONAL:
        return state, False
    return basis_change(state), True


def _reduce(rho_full: np.ndarray, bath_dim: int, back_to_eigen: bool) -> QubitState:
    reduced = np.einsum("aibi->ab", rho_full.reshape(2, bath_dim, 2, bath_dim))
    reduced = 0.5 * (reduced + reduced.conj().T)
    out = QubitState(reduced, COMPUTATIONAL)
    return basis_change(out) if back_to_eigen else out


def evolve_exact(system: CompositeSystem, state: QubitState, beta: float, t: float) -> QubitState:
    """Numerically exact reduced state at time t from a product initial state.

    The qubit state may be given in either basis; the result comes back in
    the same basis it arrived in.
    """
    comp, was_eigen = _to_computational(state)
    _, _, evals, evecs, _, _ = _eigensystem(system)
    rho0 = np.kron(comp.rho, thermal_bath_state(system.modes, beta))
    u = _propagator(evals, evecs, t)
    return _reduce(u @ rho0 @ u.conj().T, system.bath_dim, was_eigen)


def evolve_split(system: CompositeSystem, state: QubitState, beta: float, t: float) -> QubitState:
    """Reduced state under the symmetric splitting A(t/2) B(t) A(t/2).

    A is the bare-qubit propagator, B covers the coupling plus the bath
    energy for the full step.
    """
    comp, was_eigen = _to_computational(state)
    _, _, _, _, evals_ib, evecs_ib = _eigensystem(system)
    a_half = np.kron(gate_unitary(system.e_j, 0.5 * t), np.eye(system.bath_dim))
    u = a_half @ _propagator(evals_ib, evecs_ib, t) @ a_half
    rho0 = np.kron(comp.rho, thermal_bath_state(system.modes, beta))
    return _reduce(u @ rho0 @ u.conj().T, system.bath_dim, was_eigen)


@dataclass(frozen=True)
class ErrorScalingResult:
    """Log-log fit of the split-vs-exact error against step size."""

    times: np.ndarray
    errors: np.ndarray
    slope: float
    intercept: float


def error_scaling(
    system: CompositeSystem, state: QubitState, beta: float, times
) -> ErrorScalingResult:
    """Fit the order of the splitting error over a ladder of step sizes.

    Evolves the same initial state by one exact step and one split step
    for each t, takes the Frobenius distance of the reduced states and
    fits log(error) against log(t).  A third-order-accurate splitting
    gives a slope near 3.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size < 4:
        raise ValueError("need at least four step sizes for a credible fit")
    if not np.all(np.isfinite(times)) or np.any(times <= 0.0):
        raise ValueError("step sizes must be positive and finite")
    if np.any(np.diff(times) <= 0.0):
        raise ValueError("step sizes must be strictly increasing")

    h_sys, h_ib, evals, _, _, _ = _eigensystem(system)
    comm = h_sys @ h_ib - h_ib @ h_sys
    scale = np.linalg.norm(h_sys) * np.linalg.norm(h_ib)
    if scale == 0.0 or np.linalg.norm(comm) <= 1e-14 * scale:
        raise RuntimeError(
            "the two propagator factors commute, so the splitting is exact "
            "and there is no error to fit"
        )
    if times[-1] * np.max(np.abs(evals)) > 1.5:
        warnings.warn(
            "largest step is not small against the total Hamiltonian norm; "
            "the fitted slope may be contaminated by higher orders",
            stacklevel=2,
        )

    errors = np.empty_like(times)
    for i, t in enumerate(times):
        exact = evolve_exact(system, state, beta, t)
        split = evolve_split(system, state, beta, t)
        errors[i] = np.linalg.norm(exact.rho - split.rho)

    keep = errors > ERROR_FLOOR
    if not np.all(keep):
        warnings.warn(
            f"{np.count_nonzero(~keep)} step size(s) gave errors at the "
            "round-off floor and were excluded from the fit",
            stacklevel=2,
        )
    if np.count_nonzero(keep) < 3:
        raise RuntimeError(
            "fewer than three points survived the round-off floor; "
            "use larger step sizes"
        )
    slope, intercept = np.polyfit(np.log(times[keep]), np.log(errors[keep]), 1)
    return ErrorScalingResult(
        times=times[keep], errors=errors[keep], slope=float(slope), intercept=float(intercept)
    )


def discrete_bath_from_modes(modes) -> DiscreteBath:
    """Collect (omega, g^2) pairs into a DiscreteBath, merging equal frequencies."""
    merged: dict[float, float] = {}
    for m in modes:
        merged[m.omega] = merged.get(m.omega, 0.0) + m.g * m.g
    omegas = np.array(sorted(merged))
    return DiscreteBath(omegas=omegas, g_sq=np.array([merged[w] for w in omegas]))


@dataclass(frozen=True)
class SplitComparison:
    """Side-by-side of the split-propagator oracle and the closed-form map."""

    rho_split: np.ndarray
    rho_closed: np.ndarray
    b_squared: float
    shift: float
    max_abs_diff: float


def split_vs_closed_form(
    system: CompositeSystem, state: QubitState, beta: float, t: float
) -> SplitComparison:
    """Compare one split step against the closed-form reduced map.

    The two should agree to the Fock-truncation error: the closed form is
    the exact partial trace of the split propagator over a thermal bath.
    """
    work = state if state.basis == EIGENBASIS else basis_change(state)
    bath = discrete_bath_from_modes(system.modes)
    b2 = dephasing_exponent_modes(t, bath, beta)
    shift = phase_shift_modes(t, bath)
    closed = evolve_real(work, b2, t, system.e_j).rho
    split = evolve_split(system, work, beta, t).rho
    return SplitComparison(
        rho_split=split,
        rho_closed=closed,
        b_squared=b2,
        shift=shift,
        max_abs_diff=float(np.max(np.abs(split - closed))),
    )
