"""High-temperature perturbation theory in the electric coupling.

Second order in the field gives closed-form free energy and entropy; the
entropy correction is exactly quadratic in the field, and the perturbative
cycle efficiency tracks the exact one in the high-temperature corner.
"""


from ottochain import (ChainParams, CycleMode, CycleSpec, ScConfig,
                       efficiency_sc, entropy_sc, free_energy_sc,
                       perturbation_valid, run_cycle)

cfg = ScConfig(j=1.0, b=1.0)

print("Perturbative entropy S(T, p); negative values flag the breakdown")
ps = (0.0, 0.5, 1.0, 2.0, 4.0)
print(f"{'T':>6}" + "".join(f"  p={p:<6g}" for p in ps))
for t in (2.0, 5.0, 20.0, 100.0):
    row = f"{t:>6g}"
    for p in ps:
        s = entropy_sc(t, p, cfg)
        mark = "" if s >= 0 and perturbation_valid(t, p, cfg) else "*"
        row += f"  {s:>7.3f}{mark:<1}"
    print(row)
print("(* outside the perturbative window)")

print("\nFree-energy correction is strictly negative and O(p^2):")
for p in (0.1, 0.2, 0.4):
    df = free_energy_sc(20.0, p, cfg) - free_energy_sc(20.0, 0.0, cfg)
    print(f"  p = {p}: dF = {df:+.6f}  (dF/p^2 = {df / p**2:+.4f})")

print("\nPerturbative versus exact cycle efficiency at T = 100..120:")
print(f"{'p':>5} {'eta_sc':>9} {'eta_exact':>10}")
for p in (0.6, 1.0, 1.5, 2.0):
    eta_sc = efficiency_sc(100.0, 120.0, p, 0.5, cfg)
    exact = run_cycle(CycleSpec(ChainParams(4, 1.0, -1.0, 1.0, 0.0),
                                120.0, 100.0, p, 0.5, CycleMode.THERMO))
    print(f"{p:>5g} {eta_sc:>9.5f} {exact.efficiency:>10.5f}")
print("the efficiency responds far more to the field than to the bath gap")
