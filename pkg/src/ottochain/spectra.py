"""Diagonalization with total-s^z sector blocking, and adiabatic level
identification across changes of the electric field.

Within each magnetization sector the Hamiltonian is a dense Hermitian block;
levels are tracked across field values by composing per-step eigenvector
overlap matchings, which never mix sectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .model import ChainParams, build_hamiltonian, build_total_sz

HERMITICITY_TOL = 1e-10
OVERLAP_THRESHOLD = 0.7
MAX_REFINEMENT = 2 ** 10
DEFAULT_STEPS_PER_UNIT = 64


class DiagonalizationError(RuntimeError):
    """Non-Hermitian input or eigensolver failure."""


class ContinuationError(RuntimeError):
    """Level matching stayed ambiguous at the maximum step refinement."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted ascending, eigenvector columns, and the integer
    total-s^z eigenvalue of each level."""

    energies: np.ndarray
    states: np.ndarray
    sz_sector: np.ndarray

    @property
    def dim(self) -> int:
        return self.energies.size

    def ground_energy(self) -> float:
        return float(self.energies[0])


@dataclass(frozen=True)
class LevelMap:
    """Adiabatic identification of levels between two field values.

    permutation[i] is the level index at e_to of the level with index i at
    e_from (indices into the ascending-energy ordering at each field).
    """

    permutation: np.ndarray
    e_from: float
    e_to: float

    def inverse(self) -> "LevelMap":
        inv = np.empty_like(self.permutation)
        inv[self.permutation] = np.arange(self.permutation.size)
        return LevelMap(inv, self.e_to, self.e_from)

    def compose(self, later: "LevelMap") -> "LevelMap":
        """Map equivalent to following self and then `later`."""
        return LevelMap(later.permutation[self.permutation], self.e_from, later.e_to)


def sector_indices(sz_diagonal: np.ndarray):
    """Basis indices grouped by magnetization, keyed by the integer value."""
    values = np.rint(np.real(sz_diagonal)).astype(int)
    return {int(v): np.flatnonzero(values == v) for v in np.unique(values)}


def diagonalize(h: np.ndarray, sz: np.ndarray, use_sectors: bool = True) -> Spectrum:
    """Full spectrum of a Hermitian h that commutes with the diagonal sz.

    With use_sectors the eigenproblem is solved block by block (mandatory
    above n=8 for speed, exact either way).  Only the blocked path
    guarantees sector-pure eigenvectors inside accidental cross-sector
    degeneracies; the dense path is kept as a cross-check on energies.
    """
    if np.max(np.abs(h - h.conj().T)) > HERMITICITY_TOL * max(1.0, np.max(np.abs(h))):
        raise DiagonalizationError("matrix is not Hermitian")
    dim = h.shape[0]
    szd = np.real(np.diag(sz))

    if not use_sectors:
        try:
            energies, states = np.linalg.eigh(h)
        except np.linalg.LinAlgError as exc:
            raise DiagonalizationError(str(exc)) from exc
        sects = np.rint(
            np.einsum("ij,i,ij->j", states.conj(), szd, states).real
        ).astype(int)
        return Spectrum(energies, states, sects)

    energies = np.empty(dim)
    states = np.zeros((dim, dim), dtype=complex)
    sects = np.empty(dim, dtype=int)
    pos = 0
    for value, idx in sector_indices(szd).items():
        block = h[np.ix_(idx, idx)]
        try:
            ev, vec = np.linalg.eigh(block)
        except np.linalg.LinAlgError as exc:
            raise DiagonalizationError(str(exc)) from exc
        k = idx.size
        energies[pos:pos + k] = ev
        states[idx, pos:pos + k] = vec
        sects[pos:pos + k] = value
        pos += k
    order = np.argsort(energies, kind="stable")
    return Spectrum(energies[order], states[:, order], sects[order])


def diagonalize_params(params: ChainParams, use_sectors: bool = True) -> Spectrum:
    return diagonalize(build_hamiltonian(params), build_total_sz(params.n),
                       use_sectors=use_sectors)


def _match_step(spec_a: Spectrum, spec_b: Spectrum) -> tuple[np.ndarray, float]:
    """Within-sector assignment maximizing total squared overlap.

    Returns (permutation a->b, worst matched |overlap|).  Levels that are
    degenerate on both sides are exempt from the worst-overlap statistic:
    any rotation inside a degenerate cluster is physically irrelevant.
    """
    dim = spec_a.dim
    perm = np.empty(dim, dtype=int)
    worst = 1.0
    scale = max(1.0, float(np.max(np.abs(spec_a.energies))))
    for value in np.unique(spec_a.sz_sector):
        ia = np.flatnonzero(spec_a.sz_sector == value)
        ib = np.flatnonzero(spec_b.sz_sector == value)
        if ia.size != ib.size:
            raise ContinuationError("sector dimensions changed between fields")
        overlap = np.abs(spec_a.states[:, ia].conj().T @ spec_b.states[:, ib])
        rows, cols = linear_sum_assignment(-(overlap ** 2))
        perm[ia[rows]] = ib[cols]
        for r, c in zip(rows, cols):
            deg_a = np.sum(np.abs(spec_a.energies[ia] - spec_a.energies[ia[r]])
                           < 1e-9 * scale) > 1
            deg_b = np.sum(np.abs(spec_b.energies[ib] - spec_b.energies[ib[c]])
                           < 1e-9 * scale) > 1
            if not (deg_a and deg_b):
                worst = min(worst, overlap[r, c])
    return perm, worst


def continue_levels(params: ChainParams, e_from: float, e_to: float,
                    steps: int | None = None) -> LevelMap:
    """Track every level from e_field=e_from to e_field=e_to.

    Composes per-step maximal-overlap matchings within each s^z sector; a
    step whose worst matched |overlap| falls below 0.7 is bisected, with a
    total refinement budget of 2^10 substeps per original step.
    """
    if steps is None:
        steps = max(1, int(np.ceil(DEFAULT_STEPS_PER_UNIT * abs(e_to - e_from))))
    if steps < 1:
        raise ValueError("steps must be >= 1")
    dim = 2 ** params.n
    if e_from == e_to:
        return LevelMap(np.arange(dim), e_from, e_to)

    grid = np.linspace(e_from, e_to, steps + 1)
    spec_prev = diagonalize_params(params.replace(e_field=float(grid[0])))
    perm = np.arange(dim)
    for a, b in zip(grid[:-1], grid[1:]):
        spec_prev, step_perm = _refine_step(params, spec_prev, float(a), float(b), 1)
        perm = step_perm[perm]
    return LevelMap(perm, e_from, e_to)


def _refine_step(params: ChainParams, spec_a: Spectrum, a: float, b: float,
                 factor: int) -> tuple[Spectrum, np.ndarray]:
    spec_b = diagonalize_params(params.replace(e_field=b))
    perm, worst = _match_step(spec_a, spec_b)
    if worst >= OVERLAP_THRESHOLD:
        return spec_b, perm
    if factor >= MAX_REFINEMENT:
        raise ContinuationError(
            f"ambiguous level matching near e_field={b:g} "
            f"(worst overlap {worst:.3f} at maximum refinement)")
    mid = 0.5 * (a + b)
    spec_m, left = _refine_step(params, spec_a, a, mid, factor * 2)
    spec_b, right = _refine_step(params, spec_m, mid, b, factor * 2)
    return spec_b, right[left]
