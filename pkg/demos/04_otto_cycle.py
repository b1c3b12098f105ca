"""Quantum Otto cycles on the ring: field-driven efficiency and size scaling.

Heat is exchanged at fixed field (hot bath at the driving field, cold bath
at the low field); work comes from ramping the field along the adiabats.
The two adiabat flavours differ in what they freeze: level populations
(quantum) or nothing beyond heat exchange (the literal two-temperature
bookkeeping used throughout).
"""

import numpy as np

from ottochain import ChainParams, CycleMode, CycleSpec, efficiency_sweep, size_scaling

ring = ChainParams(4, 1.0, -1.0, 1.0, 0.0)
spec = CycleSpec(ring, t_hot=30.0, t_cold=10.0, p_high=35.0, p_low=3.5,
                 mode=CycleMode.THERMO)

print("Efficiency sweep (n=4, b=1, T = 30/10, low field 3.5)")
print(f"{'d':>6} {'ratio':>6} {'eta_thermo':>11} {'eta_quantum':>12} "
      f"{'tau2(T_H)':>10} {'engine':>7}")
rows = efficiency_sweep(spec, np.linspace(3.5, 14.0, 8))
for r in rows:
    flag = "yes" if (r.thermo_is_engine and r.quantum_is_engine) else "no"
    print(f"{r.p_high:>6.1f} {r.ratio:>6.2f} {r.eta_thermo:>11.4f} "
          f"{r.eta_quantum:>12.4f} {r.tau2_hot:>10.5f} {flag:>7}")
print(f"Carnot reference: {rows[0].carnot:.4f}; beyond d ~ 12 the carried "
      "populations arrive hotter than the hot bath and the engine stalls")

print("\nEfficiency versus ring size (d: 3.5 -> 10, T = 30/10):")
table = size_scaling(CycleSpec(ring, 30.0, 10.0, 10.0, 3.5, CycleMode.THERMO),
                     range(2, 9))
print("  " + "  ".join(f"n={n}: {eta:.3f}" for n, eta in table))
print("the three-site ring stands out: its frustrated exchange cancels "
      "exactly, so the field dominates the whole spectrum")
