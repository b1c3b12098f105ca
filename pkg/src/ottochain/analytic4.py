"""Closed-form solution of the four-site ring with j1 = -j2 = j: the sixteen
energy levels, the thermal coefficient functions behind the reduced density
matrices, tangles, chirality, and the field susceptibilities.

This module never diagonalizes anything; every quantity is an explicit
exponential sum, which makes it an oracle fully independent of the generic
numeric path.  All Boltzmann sums share a single ground-state energy shift
per evaluation, so the stored coefficients carry a common factor
exp(e_ref/T) relative to their absolute normalization; every exposed
observable is a ratio in which that factor cancels.

Two corrections relative to common transcriptions of these formulas, both
pinned down by differential tests against direct numeric partial traces:
the distance-2 off-diagonal coefficient d2 has weight 1/6 (not 1/3) on the
alternating two-magnon level and +1/4 (not -1/4) on the uniform
three-magnon level, and the magnetic susceptibility includes the cross term
between the two fully polarized levels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

D_SINGULAR = 1e-12


def discriminant(j: float, d: float) -> float:
    """sqrt((5 j)^2 + 8 d^2), the hybridization gap scale of the two-magnon
    chiral pair (j1 = j, j2 = -j)."""
    return float(np.sqrt(25.0 * j * j + 8.0 * d * d))


def spectrum4(j: float, b: float, d: float) -> np.ndarray:
    """The sixteen closed-form energies, in the canonical level order
    (index 0 is level 1)."""
    j1, j2 = j, -j
    root = discriminant(j, d)
    return np.array([
        -4 * j1 - 4 * j2 - 4 * b,
        4 * j2 - 2 * b - 4 * d,
        4 * j2 - 2 * b + 4 * d,
        4 * j1 - 4 * j2 - 2 * b,
        -4 * j1 - 4 * j2 - 2 * b,
        2 * j1 + 4 * j2 + 2 * root,
        2 * j1 + 4 * j2 - 2 * root,
        -4 * j1 - 4 * j2,
        8 * j1 - 4 * j2,
        4 * j2,
        4 * j2,
        4 * j2 + 2 * b + 4 * d,
        4 * j2 + 2 * b - 4 * d,
        -4 * j1 - 4 * j2 + 2 * b,
        4 * j1 - 4 * j2 + 2 * b,
        -4 * j1 - 4 * j2 + 4 * b,
    ])


def sz_sectors4() -> np.ndarray:
    """Total-s^z eigenvalue of each closed-form level."""
    return np.array([4, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2, -4])


def _mixing(j: float, d: float):
    """(alpha^2, alpha^2 mu, alpha^2 mu^2, gamma^2, gamma^2 lam, gamma^2 lam^2,
    mu, lam) with the analytic d -> 0 limits on the singular branch."""
    root = discriminant(j, d)
    if abs(d) < D_SINGULAR:
        if j == 0:
            raise ValueError("mixing limit is undefined at j = d = 0")
        if j > 0:
            # mu ~ -5j/d diverges: the upper level collapses onto the
            # alternating pair; lam ~ 2d/(5j) -> 0.
            return 0.0, 0.0, 0.5, 0.25, 0.0, 0.0, -np.inf, 0.0
        return 0.25, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, np.inf
    mu = (-5.0 * j - root) / (2.0 * d)
    lam = (-5.0 * j + root) / (2.0 * d)
    a2 = 1.0 / (4.0 + 2.0 * mu * mu)
    g2 = 1.0 / (4.0 + 2.0 * lam * lam)
    return a2, a2 * mu, a2 * mu * mu, g2, g2 * lam, g2 * lam * lam, mu, lam


@dataclass(frozen=True)
class Analytic4Derived:
    """Coefficient bundle at one (j, b, d, t) point.

    The a/b/c/d coefficients are the two-site reduced-density-matrix
    entries times Z (distance 1: a1, b1, c1, d1; distance 2: a2, b2, c2,
    d2); q is the one-tangle product; all carry the shared shift factor.
    """

    j: float
    b: float
    d: float
    t: float
    energies: np.ndarray
    e_ref: float
    z: float
    alpha: float
    gamma: float
    mu: float
    lam: float
    a1: float
    b1: float
    c1: complex
    d1: float
    a2: float
    b2: float
    c2: float
    d2: float
    q: float
    chirality: float


def coeffs4(j: float, b: float, d: float, t: float,
            energies: np.ndarray | None = None) -> Analytic4Derived:
    """Evaluate every coefficient function at one parameter point.

    The magnetic field enters only through the Boltzmann weights, never the
    structure constants; `energies` overrides the level energies so that
    property can be asserted directly.
    """
    if not t > 0:
        raise ValueError(f"temperature must be > 0, got {t}")
    e = spectrum4(j, b, d) if energies is None else np.asarray(energies, dtype=float)
    e_ref = float(e.min())
    w = np.exp(-(e - e_ref) / t)
    z = float(w.sum())
    a2m, a2mu, a2mu2, g2m, g2lam, g2lam2, mu, lam = _mixing(j, d)
    (w1, w2, w3, w4, w5, w6, w7, w8, w9, w10,
     w11, w12, w13, w14, w15, w16) = w

    one_magnon = w2 + w3 + w4 + w5
    three_magnon = w12 + w13 + w14 + w15

    a1 = (w1 + 0.5 * one_magnon + a2m * w6 + g2m * w7
          + w8 / 6 + w9 / 12 + 0.5 * w10)
    b1 = (0.25 * one_magnon + (a2m + a2mu2) * w6 + (g2m + g2lam2) * w7
          + w8 / 3 + 5 * w9 / 12 + 0.5 * w11 + 0.25 * three_magnon)
    c1 = (0.25j * (w2 - w3) - 0.25 * (w4 - w5)
          + 2j * a2mu * w6 + 2j * g2lam * w7 + (w8 - w9) / 3
          - 0.25j * (w12 - w13) + 0.25 * (w14 - w15))
    d1 = (a2m * w6 + g2m * w7 + w8 / 6 + w9 / 12 + 0.5 * w10
          + 0.5 * three_magnon + w16)

    a2 = w1 + 0.5 * one_magnon + a2mu2 * w6 + g2lam2 * w7 + w8 / 6 + w9 / 3
    b2 = a2mu2 * w6 + g2lam2 * w7 + w8 / 6 + w9 / 3 + 0.5 * three_magnon + w16
    c2 = (0.25 * one_magnon + 2 * a2m * w6 + 2 * g2m * w7 + w8 / 3 + w9 / 6
          + 0.5 * w10 + 0.5 * w11 + 0.25 * three_magnon)
    d2 = (-0.25 * (w2 + w3) + 0.25 * (w4 + w5) - 2 * a2m * w6 - 2 * g2m * w7
          + w8 / 3 + w9 / 6 - 0.25 * (w12 + w13) + 0.25 * (w14 + w15))

    pair_up = (2 * a2m + a2mu2) * w6 + (2 * g2m + g2lam2) * w7
    mid = 0.5 * (w8 + w9 + w10 + w11)
    q_up = w1 + 0.75 * one_magnon + pair_up + mid + 0.25 * three_magnon
    q_dn = 0.25 * one_magnon + pair_up + mid + 0.75 * three_magnon + w16

    chirality = (4.0 / z) * (w2 - w3 + 8 * a2mu * w6 + 8 * g2lam * w7
                             - w12 + w13)

    return Analytic4Derived(
        j=j, b=b, d=d, t=t, energies=e, e_ref=e_ref, z=z,
        alpha=float(np.sqrt(a2m)), gamma=float(np.sqrt(g2m)), mu=mu, lam=lam,
        a1=float(a1), b1=float(b1), c1=complex(c1), d1=float(d1),
        a2=float(a2), b2=float(b2), c2=float(c2), d2=float(d2),
        q=float(q_up * q_dn), chirality=float(chirality))


def concurrences4(der: Analytic4Derived) -> tuple[float, float]:
    """(C at distance 1, C at distance 2):
    C12 = (2/Z) max(|c1| - sqrt(a1 d1), 0), C13 = (2/Z) max(|d2| - sqrt(a2 b2), 0)."""
    c12 = 2.0 / der.z * max(abs(der.c1) - np.sqrt(max(der.a1 * der.d1, 0.0)), 0.0)
    c13 = 2.0 / der.z * max(abs(der.d2) - np.sqrt(max(der.a2 * der.b2, 0.0)), 0.0)
    return float(c12), float(c13)


def two_tangle4(der: Analytic4Derived) -> float:
    """tau_2 = 2 C12^2 + C13^2 (the branch structure collapses into the
    clipped concurrences)."""
    c12, c13 = concurrences4(der)
    return 2.0 * c12 * c12 + c13 * c13


def one_tangle4(der: Analytic4Derived) -> float:
    """tau_1 = 4 Q / Z^2."""
    return 4.0 * der.q / (der.z * der.z)


def chirality4(der: Analytic4Derived) -> float:
    """Thermal chirality, the six-term exponential sum (equal to tr(rho K))."""
    return der.chirality


def _susceptibility_from_slopes(energies: np.ndarray, slopes: np.ndarray,
                                curvatures: np.ndarray, t: float) -> float:
    """chi = beta Var(dE/dzeta) - <d^2E/dzeta^2> over the Gibbs weights;
    this is the general closed form the grouped expansions unfold into."""
    w = np.exp(-(energies - energies.min()) / t)
    z = w.sum()
    mean = (w @ slopes) / z
    var = (w @ (slopes * slopes)) / z - mean * mean
    return float(var / t - (w @ curvatures) / z)


def chi_b4(j: float, b: float, d: float, t: float) -> float:
    """Magnetic susceptibility -d^2F/dB^2 of the four-site ring."""
    if not t > 0:
        raise ValueError(f"temperature must be > 0, got {t}")
    e = spectrum4(j, b, d)
    slopes = -np.asarray(sz_sectors4(), dtype=float)
    return _susceptibility_from_slopes(e, slopes, np.zeros(16), t)


def chi_e4(j: float, b: float, d: float, t: float) -> float:
    """Electric susceptibility -d^2F/dp^2 of the four-site ring."""
    if not t > 0:
        raise ValueError(f"temperature must be > 0, got {t}")
    e = spectrum4(j, b, d)
    root = discriminant(j, d)
    s = 16.0 * d / root
    u = 16.0 * 25.0 * j * j / root ** 3
    slopes = np.zeros(16)
    slopes[[1, 12]] = -4.0   # levels 2 and 13
    slopes[[2, 11]] = +4.0   # levels 3 and 12
    slopes[5], slopes[6] = s, -s
    curvatures = np.zeros(16)
    curvatures[5], curvatures[6] = u, -u
    return _susceptibility_from_slopes(e, slopes, curvatures, t)
