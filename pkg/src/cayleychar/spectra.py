"""Spectra and energy of normal Cayley graphs.

The exact route sums character values over the connection set; the
brute-force route builds the adjacency matrix and hands it to a dense
symmetric eigensolver. The two are independent and are cross-checked in
the test suite and by the ``oracle`` subcommand.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cyclotomic import Cyclotomic
from .dixon import CharacterTable
from .errors import InputError, VerificationError
from .permgroup import PermGroup

DEFAULT_ORACLE_CAP = 2000


@dataclass(frozen=True)
class ConnectionSet:
    class_indices: frozenset[int]
    element_count: int

    @classmethod
    def from_classes(cls, classes, indices: Iterable[int]) -> ConnectionSet:
        idx = frozenset(indices)
        if not idx:
            raise InputError("connection set is empty")
        for i in idx:
            if not 0 <= i < len(classes):
                raise InputError(f"class index {i} out of range")
        if 0 in idx or any(classes[i].element_order == 1 for i in idx):
            raise InputError("connection set contains the identity class")
        for i in idx:
            if classes[i].inverse_class not in idx:
                raise InputError(
                    f"connection set not inverse-closed: class {classes[i].label} is in, "
                    f"its inverse class {classes[classes[i].inverse_class].label} is not"
                )
        return cls(idx, sum(classes[i].size for i in idx))

    @classmethod
    def from_labels(cls, classes, labels: Iterable[str]) -> ConnectionSet:
        by_label = {c.label: c.index for c in classes}
        idx = []
        for lab in labels:
            key = lab.strip().lower()
            if key not in by_label:
                raise InputError(f"unknown class label {lab!r}; known: {', '.join(by_label)}")
            idx.append(by_label[key])
        return cls.from_classes(classes, idx)


@dataclass(frozen=True)
class Eigenvalue:
    value: Cyclotomic
    multiplicity: int
    character: int

    @property
    def is_integer(self) -> bool:
        return self.value.is_rational_integer()

    def as_float(self) -> float:
        return self.value.to_complex().real


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[Eigenvalue, ...]
    degree: int
    group_order: int
    energy: float | int
    energy_exact: bool
    energy_error: float
    is_singular: bool
    mcclelland_bound: float

    def grouped(self) -> list[tuple[Cyclotomic, int]]:
        """Distinct eigenvalues with total multiplicities, largest first."""
        acc: dict[Cyclotomic, int] = defaultdict(int)
        for ev in self.eigenvalues:
            acc[ev.value] += ev.multiplicity
        return sorted(acc.items(), key=lambda kv: -kv[0].to_complex().real)

    def sorted_floats(self) -> np.ndarray:
        vals = []
        for ev in self.eigenvalues:
            vals.extend([ev.as_float()] * ev.multiplicity)
        return np.sort(np.array(vals))


def normal_cayley_spectrum(table: CharacterTable, S: ConnectionSet) -> SpectrumReport:
    """Eigenvalue (1/chi(1)) * sum_{a in S} chi(a) with multiplicity chi(1)^2, for every chi."""
    S = ConnectionSet.from_classes(table.classes, S.class_indices)
    cols = sorted(S.class_indices)
    sizes = [table.classes[j].size for j in cols]
    evs = []
    for i, row in enumerate(table.values):
        d = table.degrees[i]
        total = Cyclotomic.from_int(0, table.exponent)
        for j, sz in zip(cols, sizes):
            total = total + row[j] * sz
        try:
            eta = total.exact_div(d)
        except ArithmeticError:
            raise VerificationError(f"eigenvalue for character {i} is not an algebraic integer") from None
        if not eta.is_real():
            raise VerificationError(f"eigenvalue for character {i} is not real: {eta}")
        evs.append(Eigenvalue(eta, d * d, i))
    evs = tuple(evs)
    energy, exact, err = _energy(evs, table.k, S.element_count)
    return SpectrumReport(
        eigenvalues=evs,
        degree=S.element_count,
        group_order=table.order,
        energy=energy,
        energy_exact=exact,
        energy_error=err,
        is_singular=any(ev.value.is_zero() for ev in evs),
        mcclelland_bound=mcclelland_bound(table.order, S.element_count),
    )


def _energy(evs, k: int, set_size: int) -> tuple[float | int, bool, float]:
    if all(ev.is_integer for ev in evs):
        return sum(abs(ev.value.to_int()) * ev.multiplicity for ev in evs), True, 0.0
    return math.fsum(abs(ev.as_float()) * ev.multiplicity for ev in evs), False, k * set_size * 1e-12


def graph_energy(report: SpectrumReport) -> float | int:
    """Sum of |eigenvalue| over the whole spectrum; an int when every eigenvalue is one."""
    return report.energy


def is_singular(report: SpectrumReport) -> bool:
    return report.is_singular


def mcclelland_bound(group_order: int, set_size: int) -> float:
    if group_order < 1 or set_size < 1:
        raise InputError("group order and set size must be positive")
    return group_order * math.sqrt(set_size)


def mcclelland_holds_exact(energy: int, group_order: int, set_size: int) -> bool:
    """energy <= |G| * sqrt(|S|) for an integer energy, decided without floats."""
    return energy < 0 or energy * energy <= group_order * group_order * set_size


def adjacency_matrix(G: PermGroup, S: ConnectionSet, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    """0/1 matrix with A[u, v] = 1 iff v = a * u for some a in S."""
    if G.order > cap:
        raise InputError(f"brute-force oracle refuses |G| = {G.order} > cap {cap}")
    members = np.array(sorted(m for i in S.class_indices for m in G.classes[i].member_ids), dtype=np.int64)
    u = np.arange(G.order)
    v = G.products(members[None, :], u[:, None])  # v[u, t] = a_t * u
    A = np.zeros((G.order, G.order), dtype=np.float64)
    A[np.repeat(u, len(members)), v.ravel()] = 1.0
    return A


def brute_force_spectrum(G: PermGroup, S: ConnectionSet, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    A = adjacency_matrix(G, S, cap)
    if not np.array_equal(A, A.T):
        raise InputError("adjacency matrix is not symmetric; connection set not inverse-closed")
    return np.sort(np.linalg.eigvalsh(A))


def oracle_mismatch(table: CharacterTable, S: ConnectionSet, cap: int = DEFAULT_ORACLE_CAP) -> float:
    """Largest gap between the sorted character spectrum and the brute-force one."""
    exact = normal_cayley_spectrum(table, S).sorted_floats()
    brute = brute_force_spectrum(table.group, S, cap)
    return float(np.max(np.abs(exact - brute)))


def valid_connection_sets(classes, max_classes: int = 2) -> list[ConnectionSet]:
    """Every identity-free inverse-closed union of at most ``max_classes`` classes."""
    out = []
    seen = set()
    nonid = [c.index for c in classes if c.element_order > 1]
    for i in nonid:
        base = {i, classes[i].inverse_class}
        if len(base) <= max_classes:
            key = frozenset(base)
            if key not in seen:
                seen.add(key)
                out.append(ConnectionSet.from_classes(classes, key))
    if max_classes >= 2:
        reals = [i for i in nonid if classes[i].inverse_class == i]
        for a in range(len(reals)):
            for b in range(a + 1, len(reals)):
                key = frozenset((reals[a], reals[b]))
                if key not in seen:
                    seen.add(key)
                    out.append(ConnectionSet.from_classes(classes, key))
    return out
