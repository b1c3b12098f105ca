"""Quantum Otto cycle on the ring, in two flavours.

Both cycles exchange heat with a hot bath at the high electric field and a
cold bath at the low field; the adiabatic strokes only change the field.

* thermodynamic-adiabatic: each isochore connects the two bath temperatures
  at its own field, Q_in = sum_n E_n(p_high) [P_n(T_hot) - P_n(T_cold)] and
  the same at p_low for Q_out.
* quantum-adiabatic: level populations are frozen along the adiabats and
  transported between fields with the adiabatic LevelMap, so the isochores
  start from the carried-over populations.

Efficiency is (Q_in - Q_out)/Q_in; rows with Q_in <= 0 or negative work are
flagged as non-engine regimes rather than silently reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .correlations import density_matrix, one_tangle, two_tangle
from .model import ChainParams
from .spectra import LevelMap, Spectrum, continue_levels, diagonalize_params
from .thermal import gibbs


class CycleMode(enum.Enum):
    QUANTUM = "quantum"
    THERMO = "thermo"


@dataclass(frozen=True)
class CycleSpec:
    """One Otto cycle: bath temperatures, the two field values, and which
    kind of adiabatic stroke to use.  The e_field inside params is ignored.
    """

    params: ChainParams
    t_hot: float
    t_cold: float
    p_high: float
    p_low: float
    mode: CycleMode = CycleMode.THERMO

    def __post_init__(self):
        if not self.t_hot > self.t_cold > 0:
            raise ValueError(
                f"need t_hot > t_cold > 0, got ({self.t_hot}, {self.t_cold})")
        if self.p_high < 0 or self.p_low < 0:
            raise ValueError("field amplitudes must be >= 0")


@dataclass(frozen=True)
class CycleResult:
    q_in: float
    q_out: float
    work: float
    efficiency: float
    carnot: float
    is_engine: bool


def _result(q_in: float, q_out: float, t_hot: float, t_cold: float) -> CycleResult:
    work = q_in - q_out
    eff = work / q_in if q_in != 0.0 else float("nan")
    return CycleResult(q_in, q_out, work, eff, 1.0 - t_cold / t_hot,
                       is_engine=(q_in > 0.0 and work >= 0.0))


def _heat_between_baths(spec_field: Spectrum, t_hot: float, t_cold: float) -> float:
    p_hot = gibbs(spec_field, t_hot).populations
    p_cold = gibbs(spec_field, t_cold).populations
    return float(spec_field.energies @ (p_hot - p_cold))


def run_cycle(spec: CycleSpec, level_map: LevelMap | None = None) -> CycleResult:
    """Evaluate one cycle.  A precomputed LevelMap from p_low to p_high may
    be passed to quantum-mode calls that share the continuation."""
    hi = diagonalize_params(spec.params.replace(e_field=spec.p_high))
    lo = diagonalize_params(spec.params.replace(e_field=spec.p_low))

    if spec.mode is CycleMode.THERMO:
        q_in = _heat_between_baths(hi, spec.t_hot, spec.t_cold)
        q_out = _heat_between_baths(lo, spec.t_hot, spec.t_cold)
        return _result(q_in, q_out, spec.t_hot, spec.t_cold)

    if level_map is None:
        level_map = continue_levels(spec.params, spec.p_low, spec.p_high)
    perm = level_map.permutation
    pop_cold_lo = gibbs(lo, spec.t_cold).populations
    pop_hot_hi = gibbs(hi, spec.t_hot).populations
    carried_up = np.empty_like(pop_cold_lo)
    carried_up[perm] = pop_cold_lo          # cold populations on the high-field levels
    carried_down = pop_hot_hi[perm]         # hot populations back on the low-field levels
    q_in = float(hi.energies @ (pop_hot_hi - carried_up))
    q_out = float(lo.energies @ (carried_down - pop_cold_lo))
    return _result(q_in, q_out, spec.t_hot, spec.t_cold)


@dataclass(frozen=True)
class SweepRow:
    p_high: float
    ratio: float
    eta_quantum: float
    eta_thermo: float
    tau2_hot: float
    tau1_hot: float
    quantum_is_engine: bool
    thermo_is_engine: bool
    carnot: float


def efficiency_sweep(spec: CycleSpec, p_grid) -> list[SweepRow]:
    """One row per swept high field: both cycle efficiencies plus the
    tangles of the hot-bath equilibrium state at that field.

    Level maps are continued incrementally along the grid, so the whole
    sweep costs one traversal of the field range.
    """
    p_grid = [float(p) for p in p_grid]
    if not p_grid or any(p <= 0 for p in p_grid):
        raise ValueError("field grid must be nonempty and positive")

    rows = []
    order = np.argsort(p_grid)
    maps: dict[int, LevelMap] = {}
    current = None
    anchor = spec.p_low
    for k in order:
        p = p_grid[k]
        seg = continue_levels(spec.params, anchor, p)
        current = seg if current is None else current.compose(seg)
        maps[k] = current
        anchor = p

    for k, p in enumerate(p_grid):
        thermo = run_cycle(CycleSpec(spec.params, spec.t_hot, spec.t_cold,
                                     p, spec.p_low, CycleMode.THERMO))
        quantum = run_cycle(CycleSpec(spec.params, spec.t_hot, spec.t_cold,
                                      p, spec.p_low, CycleMode.QUANTUM),
                            level_map=maps[k])
        hot_state = density_matrix(
            gibbs(diagonalize_params(spec.params.replace(e_field=p)), spec.t_hot))
        rows.append(SweepRow(
            p_high=p,
            ratio=p / spec.p_low if spec.p_low != 0 else float("inf"),
            eta_quantum=quantum.efficiency,
            eta_thermo=thermo.efficiency,
            tau2_hot=two_tangle(hot_state, spec.params.n),
            tau1_hot=one_tangle(hot_state),
            quantum_is_engine=quantum.is_engine,
            thermo_is_engine=thermo.is_engine,
            carnot=thermo.carnot,
        ))
    return rows


def size_scaling(spec: CycleSpec, n_list) -> list[tuple[int, float]]:
    """Cycle efficiency versus ring size at fixed fields and temperatures."""
    out = []
    for n in n_list:
        if not 2 <= int(n) <= 10:
            raise ValueError(f"size scaling supports n in [2, 10], got {n}")
        params = spec.params.replace(n=int(n))
        res = run_cycle(CycleSpec(params, spec.t_hot, spec.t_cold,
                                  spec.p_high, spec.p_low, spec.mode))
        out.append((int(n), res.efficiency))
    return out
