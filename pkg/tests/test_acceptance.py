"""Acceptance suite: every exit criterion at its stated tolerance, one
printed pass/fail line per criterion clause.

Clauses that are currently red are asserted exactly as stated; the
corresponding analysis lives outside the package in the reviewer notes.
"""

import time

import numpy as np
import pytest

from ottochain import validation
from ottochain.analytic4 import chi_e4
from ottochain.cli import main as cli_main
from ottochain.correlations import (density_matrix, one_tangle,
                                    threshold_temperature, two_tangle)
from ottochain.model import ChainParams
from ottochain.otto import CycleMode, CycleSpec, efficiency_sweep, size_scaling
from ottochain.response import FieldTag, susceptibility
from ottochain.semiclassical import (ScConfig, efficiency_sc, entropy_sc,
                                     free_energy_sc)
from ottochain.spectra import diagonalize_params
from ottochain.thermal import free_energy, gibbs

RING = ChainParams(4, 1.0, -1.0, 1.0, 0.0)


def report(clause: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {clause}: {'PASS' if ok else 'FAIL'} ({detail})")


# --- criterion 1: oracle equivalence over the parameter grid, < 10 s ----

def test_criterion_1_oracle_equivalence():
    start = time.perf_counter()
    results = {
        "spectrum": validation.check_spectrum_oracle(),
        "partition": validation.check_partition_oracle(),
        "reduced": validation.check_reduced_coefficients(),
        "tangles": validation.check_entanglement_oracle(),
        "susceptibility": validation.check_susceptibility_oracle(),
    }
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results.values()) and elapsed < 10.0
    detail = ", ".join(f"{k} {r.max_deviation:.1e}" for k, r in results.items())
    report("1 oracle equivalence", ok, f"{detail}; {elapsed:.1f}s")
    for r in results.values():
        assert r.passed, r
    assert elapsed < 10.0


# --- criterion 2: threshold temperatures, +-2%, < 5 s -------------------

@pytest.mark.parametrize("d,t_ref", [(1.0, 7.37), (10.0, 22.31), (20.0, 44.45)])
def test_criterion_2_threshold(d, t_ref):
    tc = threshold_temperature(RING.replace(e_field=d), 2.0, 80.0)
    ok = abs(tc - t_ref) <= 0.02 * t_ref
    report(f"2 threshold p={d:g}", ok, f"T_c = {tc:.4f} vs {t_ref} +-2%")
    assert ok


def test_criterion_2_runtime():
    start = time.perf_counter()
    for d in (1.0, 10.0, 20.0):
        threshold_temperature(RING.replace(e_field=d), 2.0, 80.0)
    elapsed = time.perf_counter() - start
    report("2 runtime", elapsed < 5.0, f"{elapsed:.2f}s")
    assert elapsed < 5.0


# --- criterion 3: Otto efficiency on the swept field grid, < 10 s -------

@pytest.fixture(scope="module")
def fig12_sweep():
    spec = CycleSpec(RING, 30.0, 10.0, 35.0, 3.5, CycleMode.THERMO)
    grid = np.linspace(3.5, 35.0, 40)
    start = time.perf_counter()
    rows = efficiency_sweep(spec, grid)
    elapsed = time.perf_counter() - start
    return grid, rows, elapsed


def test_criterion_3_runtime(fig12_sweep):
    _, _, elapsed = fig12_sweep
    report("3 runtime", elapsed < 10.0, f"{elapsed:.2f}s")
    assert elapsed < 10.0


def test_criterion_3_max_efficiency_window(fig12_sweep):
    _, rows, _ = fig12_sweep
    eta = max(r.eta_thermo for r in rows if r.thermo_is_engine)
    ok = 0.70 <= eta <= 0.80
    report("3 max efficiency in [0.70, 0.80]", ok, f"max eta = {eta:.4f}")
    assert ok


def test_criterion_3_exceeds_carnot(fig12_sweep):
    _, rows, _ = fig12_sweep
    eta = max(r.eta_thermo for r in rows if r.thermo_is_engine)
    ok = eta > 2.0 / 3.0
    report("3 exceeds Carnot 2/3", ok, f"max eta = {eta:.4f}")
    assert ok


def test_criterion_3_saturation_plateau(fig12_sweep):
    grid, rows, _ = fig12_sweep
    eta = np.array([r.eta_thermo for r in rows])
    eta30 = float(np.interp(30.0, grid, eta))
    eta35 = float(np.interp(35.0, grid, eta))
    ok = abs(eta35 - eta30) < 0.01
    report("3 saturation plateau", ok, f"|eta(35)-eta(30)| = {abs(eta35-eta30):.4f}")
    assert ok


def test_criterion_3_quantum_below_thermo(fig12_sweep):
    _, rows, _ = fig12_sweep
    comparable = [r for r in rows if r.thermo_is_engine and r.quantum_is_engine]
    ok = all(r.eta_quantum <= r.eta_thermo + 1e-12 for r in comparable)
    report("3 quantum <= thermo pointwise", ok,
           f"{len(comparable)} engine-valid rows")
    assert comparable
    assert ok


# --- criterion 4: high-temperature one-tangle ---------------------------

def test_criterion_4_one_tangle():
    rho = density_matrix(gibbs(
        diagonalize_params(RING.replace(e_field=1.0)), 1e4))
    tau1 = one_tangle(rho)
    ok = abs(tau1 - 1.0) <= 1e-3
    report("4 one-tangle saturation", ok, f"tau1 = {tau1:.6f}")
    assert ok


# --- criterion 5: size scaling, < 2 min ---------------------------------

@pytest.fixture(scope="module")
def size_tables():
    start = time.perf_counter()
    tables = {}
    for p in (4.0, 5.0, 10.0):
        spec = CycleSpec(RING, 30.0, 10.0, p, 3.5, CycleMode.THERMO)
        tables[p] = dict(size_scaling(spec, range(3, 9)))
    elapsed = time.perf_counter() - start
    return tables, elapsed


def test_criterion_5_small_ring_jump(size_tables):
    tables, _ = size_tables
    ok = all(tables[p][3] > tables[p][4] for p in (4.0, 5.0, 10.0))
    detail = ", ".join(f"p={p:g}: {tables[p][3]:.3f}>{tables[p][4]:.3f}"
                       for p in (4.0, 5.0, 10.0))
    report("5 eta(3) > eta(4)", ok, detail)
    assert ok


def test_criterion_5_saturation_with_size(size_tables):
    tables, _ = size_tables
    t10 = tables[10.0]
    dev = max(abs(t10[n] - t10[8]) for n in (5, 6, 7))
    ok = dev < 0.05
    report("5 size saturation", ok, f"max |eta(n)-eta(8)| = {dev:.4f}")
    assert ok


def test_criterion_5_runtime(size_tables):
    _, elapsed = size_tables
    report("5 runtime", elapsed < 120.0, f"{elapsed:.1f}s")
    assert elapsed < 120.0


# --- criterion 6: tangle-ratio size trend -------------------------------

def test_criterion_6_tangle_ratio_trend():
    t = 7.37
    worst = None
    ok = True
    for d in np.linspace(5.0, 20.0, 6):
        ratios = {}
        for n in (4, 8):
            params = ChainParams(n, 1.0, -1.0, 1.0, float(d))
            rho = density_matrix(gibbs(diagonalize_params(params), t))
            ratios[n] = two_tangle(rho, n) / one_tangle(rho)
        ok &= ratios[8] < ratios[4]
        worst = (float(d), ratios[4], ratios[8])
    report("6 tangle ratio n=8 < n=4", ok,
           f"last point p={worst[0]:g}: {worst[2]:.4f} < {worst[1]:.4f}")
    assert ok


# --- criterion 7: susceptibility peaks ----------------------------------

@pytest.fixture(scope="module")
def temperature_grid():
    return np.linspace(2.0, 80.0, 118)


def test_criterion_7_magnetic_peak_shift(temperature_grid):
    peaks = []
    for d in (1.0, 10.0, 20.0):
        params = RING.replace(e_field=d)
        vals = [susceptibility(params, FieldTag.MAGNETIC, float(t))
                for t in temperature_grid]
        peaks.append(float(temperature_grid[int(np.argmax(vals))]))
    ok = peaks[0] < peaks[1] < peaks[2]
    report("7 chi(B) peak shift", ok, f"peak T = {peaks}")
    assert ok


def test_criterion_7_electric_peak_near_threshold(temperature_grid):
    ok = True
    details = []
    for d, tc in ((10.0, 22.31), (20.0, 44.45)):
        vals = [chi_e4(1.0, 1.0, d, float(t)) for t in temperature_grid]
        peak = float(temperature_grid[int(np.argmax(vals))])
        details.append(f"p={d:g}: peak {peak:.1f} vs T_c {tc}")
        ok &= abs(peak - tc) <= 0.15 * tc
    report("7 chi(E) peak near threshold", ok, "; ".join(details))
    assert ok


def test_criterion_7_electric_peak_grows_with_size(temperature_grid):
    heights = {}
    for n in (4, 8):
        params = ChainParams(n, 1.0, -1.0, 1.0, 10.0)
        heights[n] = max(susceptibility(params, FieldTag.ELECTRIC, float(t))
                         for t in temperature_grid)
    ok = heights[8] > heights[4]
    report("7 chi(E) n=8 > n=4", ok,
           f"{heights[8]:.4f} > {heights[4]:.4f}")
    assert ok


# --- criterion 8: semiclassical consistency ------------------------------

def test_criterion_8_quartic_residual():
    cfg = ScConfig(1.0, 1.0)
    t = 20.0
    errs = {}
    for p in (0.1, 0.05):
        exact = free_energy(diagonalize_params(RING.replace(e_field=p)), t)
        errs[p] = abs(free_energy_sc(t, p, cfg) - exact)
    ratio = errs[0.1] / errs[0.05]
    ok = 12.0 <= ratio <= 20.0
    report("8 residual ratio 16 +- 4", ok, f"ratio = {ratio:.2f}")
    assert ok


def test_criterion_8_entropy_quadratic_in_field():
    cfg = ScConfig(1.0, 1.0)
    t = 40.0
    base = entropy_sc(t, 0.0, cfg)
    ratios = [(entropy_sc(t, p, cfg) - base) / p ** 2 for p in (0.1, 0.2)]
    ok = abs(ratios[0] - ratios[1]) <= 0.01 * abs(ratios[0])
    report("8 entropy quadratic in field", ok,
           f"ratios {ratios[0]:.6f} vs {ratios[1]:.6f}")
    assert ok


def test_criterion_8_idle_cycle():
    eta = efficiency_sc(10.0, 30.0, 2.0, 2.0, ScConfig(1.0, 1.0))
    ok = eta == 0.0
    report("8 eta_sc(p=p1) = 0", ok, f"eta_sc = {eta}")
    assert ok


# --- criterion 9: full structural suite under the validate command ------

def test_criterion_9_validate_command(tmp_path):
    out = tmp_path / "validate.csv"
    start = time.perf_counter()
    code = cli_main(["validate", "--out", str(out)])
    elapsed = time.perf_counter() - start
    ok = code == 0 and elapsed < 30.0
    report("9 validate exit 0", ok, f"exit {code}, {elapsed:.1f}s")
    assert code == 0
    assert elapsed < 30.0
