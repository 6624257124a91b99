"""Character tables by the Dixon-Schneider method.

Pipeline: class algebra structure constants -> common eigenvectors of the
class matrices over F_p -> modular character rows -> exact values in
Z[zeta_e] recovered by a discrete Fourier transform over each cyclic
subgroup <g>.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import fplinalg as fp
from .cyclotomic import Cyclotomic, euler_phi, int_matmul, reduce_cyclic
from .errors import ComputationError, InputError, VerificationError
from .permgroup import ConjugacyClass, PermGroup


@dataclass(frozen=True)
class ClassAlgebra:
    """``constants[i, j, k]`` counts x in class i with x^-1 * g_k in class j."""

    constants: np.ndarray
    sizes: tuple[int, ...]

    def class_matrix(self, i: int) -> np.ndarray:
        return self.constants[i]

    @property
    def k(self) -> int:
        return len(self.sizes)


def class_algebra_constants(G: PermGroup, classes: Sequence[ConjugacyClass]) -> ClassAlgebra:
    k = len(classes)
    lookup = np.array(G.class_lookup, dtype=np.int64)
    inv = np.array(G.inverse_ids, dtype=np.int64)
    a = np.zeros((k, k, k), dtype=np.int64)
    for c in classes:
        ys = G.products(inv, c.member_ids[0])  # x^-1 * g_k for every x
        np.add.at(a[:, :, c.index], (lookup, lookup[ys]), 1)
    a.flags.writeable = False
    return ClassAlgebra(a, tuple(c.size for c in classes))


def is_valid_prime(p: int, exponent: int, group_order: int) -> bool:
    return fp.is_prime(p) and (p - 1) % exponent == 0 and p * p > 4 * group_order


def choose_prime(exponent: int, group_order: int) -> int:
    """Smallest prime p = 1 mod exponent with p > 2*sqrt(group_order)."""
    if exponent < 1:
        raise InputError("exponent must be positive")
    p = exponent + 1
    while not is_valid_prime(p, exponent, group_order):
        p += exponent
    return p


def next_prime(p: int, exponent: int, group_order: int) -> int:
    """Next valid Dixon prime after p."""
    q = p + exponent
    while not is_valid_prime(q, exponent, group_order):
        q += exponent
    return q


def _root_multiplicities(f: list[int], roots: list[int], p: int) -> list[int]:
    out = []
    for lam in roots:
        g, n = list(f), 0
        while len(g) > 1:
            # synthetic division by (x - lam)
            q = [0] * (len(g) - 1)
            acc = 0
            for i in range(len(g) - 1, 0, -1):
                acc = (acc * lam + g[i]) % p
                q[i - 1] = acc
            if (acc * lam + g[0]) % p:
                break
            g, n = q, n + 1
        out.append(n)
    return out


def _split(W: np.ndarray, M: np.ndarray, p: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Split the M-invariant row space W (rows in RREF) into eigenspaces of M.

    With m the product of (x - lam) over the distinct eigenvalues, the vector
    (m / (x - lam))(A) w lies in the lam-eigenspace of a diagonalizable A, so
    a few random w span every eigenspace.
    """
    _, piv = fp.rref(W, p)
    A = (M @ W.T % p)[piv, :]
    d = W.shape[0]
    f = fp.charpoly(A, p)
    roots = fp.roots_mod_p(f, p)
    mult = _root_multiplicities(f, roots, p)
    if sum(mult) != d:
        raise ComputationError("bad prime or wrong constants: characteristic polynomial does not split over F_p")
    if len(roots) == 1:
        if ((A - roots[0] * np.eye(d, dtype=np.int64)) % p).any():
            raise ComputationError("bad prime or wrong constants: class matrix not diagonalizable over F_p")
        return [W]
    s = len(roots)
    lam = np.array(roots, dtype=np.int64)
    # quotients m/(x - lam_r) for all r at once; Q[i, r] = coefficient of x^i
    Q = np.zeros((s, s), dtype=np.int64)
    m = [1]
    for r in roots:
        m = [0] + m
        for i in range(len(m) - 1):
            m[i] = (m[i] - r * m[i + 1]) % p
    acc = np.zeros(s, dtype=np.int64)
    for i in range(s, 0, -1):
        acc = (acc * lam + m[i]) % p
        Q[i - 1] = acc
    parts: list[np.ndarray | None] = [None] * s
    width = max(mult) + 2
    for _ in range(8):
        block = rng.integers(0, p, size=(d, width), dtype=np.int64)
        V = np.zeros((s, d, width), dtype=np.int64)
        for i in range(s):
            V = (V + Q[i][:, None, None] * block[None]) % p
            block = A @ block % p
        done = True
        for r in range(s):
            vecs = V[r].T if parts[r] is None else np.vstack([parts[r], V[r].T])
            R, _ = fp.rref(vecs, p)
            if R.shape[0] > mult[r]:
                raise ComputationError("bad prime or wrong constants: class matrix not diagonalizable over F_p")
            parts[r] = R
            done &= R.shape[0] == mult[r]
        if done:
            return [fp.rref(P @ W % p, p)[0] for P in parts]
        width *= 2
    raise ComputationError("bad prime or wrong constants: eigenspaces not recovered")


def _common_eigenvectors(alg: ClassAlgebra, p: int) -> list[np.ndarray]:
    k = alg.k
    rng = np.random.default_rng(p)
    spaces = [np.eye(k, dtype=np.int64)]
    for i in range(k):
        if all(S.shape[0] == 1 for S in spaces):
            break
        M = alg.class_matrix(i) % p
        nxt = []
        for S in spaces:
            nxt.extend([S] if S.shape[0] == 1 else _split(S, M, p, rng))
        spaces = nxt
    if any(S.shape[0] != 1 for S in spaces):
        raise ComputationError("bad prime or wrong constants: eigenspace splitting stalled")
    return [S[0] for S in spaces]


def modular_table(alg: ClassAlgebra, classes: Sequence[ConjugacyClass], p: int) -> np.ndarray:
    """Irreducible characters reduced mod p; rows are characters, columns classes."""
    sizes = alg.sizes
    order = sum(sizes)
    inv_cls = [c.inverse_class for c in classes]
    inv_sizes = [pow(s, -1, p) for s in sizes]
    rows = []
    for v in _common_eigenvectors(alg, p):
        if v[0] % p == 0:
            raise ComputationError("bad prime or wrong constants: eigenvector vanishes at identity")
        w = [int(x) * pow(int(v[0]), -1, p) % p for x in v]
        s = sum(w[j] * w[inv_cls[j]] * inv_sizes[j] for j in range(len(w))) % p
        if s == 0:
            raise ComputationError("bad prime or wrong constants: zero norm")
        d2 = order * pow(s, -1, p) % p
        d = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == d2), None)
        if d is None:
            raise ComputationError("bad prime or wrong constants: degree square root not found")
        rows.append([d * w[j] * inv_sizes[j] % p for j in range(len(w))])
    return np.array(rows, dtype=np.int64)


@dataclass
class CharacterTable:
    group: PermGroup
    classes: tuple[ConjugacyClass, ...]
    degrees: tuple[int, ...]
    values: list[list[Cyclotomic]]
    prime_used: int
    exponent: int
    _float: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def k(self) -> int:
        return len(self.classes)

    def __getitem__(self, ij: tuple[int, int]) -> Cyclotomic:
        i, j = ij
        return self.values[i][j]

    def canonical_key(self) -> tuple:
        return tuple(tuple(v.key() for v in row) for row in self.values)

    def as_complex(self) -> np.ndarray:
        if self._float is None:
            e = self.exponent
            z = np.exp(2j * np.pi * np.arange(euler_phi(e)) / e)
            coeffs = np.array([[v.coeffs for v in row] for row in self.values], dtype=np.float64)
            self._float = coeffs @ z
        return self._float

    def verify(self) -> None:
        verify_table(self)


def _sort_rows(degrees: list[int], values: list[list[Cyclotomic]]) -> tuple[list[int], list[list[Cyclotomic]]]:
    def key(i):
        trivial = all(v == 1 for v in values[i])
        return (not trivial, degrees[i], tuple(v.key() for v in values[i]))


    order = sorted(range(len(degrees)), key=key)
    return [degrees[i] for i in order], [values[i] for i in order]


def lift_table(
    modular: np.ndarray,
    classes: Sequence[ConjugacyClass],
    p: int,
    e: int,
    group: PermGroup | None = None,
    verify: bool = True,
) -> CharacterTable:
    """Recover exact cyclotomic values from the mod-p table and verify them."""
    k = len(classes)
    if (p - 1) % e:
        raise ComputationError(f"prime {p} is not 1 mod exponent {e}")
    omega = pow(fp.primitive_root(p), (p - 1) // e, p)
    degrees = [int(d) for d in modular[:, 0]]
    deg = np.array(degrees, dtype=np.int64)
    cyclic = np.zeros((k, k, e), dtype=np.int64)
    by_order: dict[int, list[ConjugacyClass]] = {}
    for c in classes:
        by_order.setdefault(c.element_order, []).append(c)
    for m, same in by_order.items():
        step = e // m
        # F[s, t] = omega^(-step*s*t)
        om_inv = pow(omega, -step, p)
        powers = np.array([pow(om_inv, r, p) for r in range(m)], dtype=np.int64)
        ar = np.arange(m)
        F = powers[np.outer(ar, ar) % m]
        # X[c, i, s] = chi_i(g_c^s)
        X = np.stack([modular[:, list(c.power_map[:m])] for c in same])
        mu = int_matmul(X.reshape(-1, m), F).reshape(len(same), k, m) % p * pow(m, -1, p) % p
        if (mu > deg[None, :, None]).any():
            bad = same[int(np.argwhere(mu > deg[None, :, None])[0][0])]
            raise ComputationError(f"lift failure at class {bad.label}: multiplicity exceeds degree (bad prime?)")
        for c, block in zip(same, mu):
            cyclic[:, c.index, ::step] = block
    canon = reduce_cyclic(cyclic, e)
    values = [[Cyclotomic(e, canon[i, j]) for j in range(k)] for i in range(k)]
    degrees, values = _sort_rows(degrees, values)
    table = CharacterTable(
        group=group,
        classes=tuple(classes),
        degrees=tuple(degrees),
        values=values,
        prime_used=p,
        exponent=e,
    )
    if verify:
        verify_table(table)
    return table


def character_table(G: PermGroup, prime: int | None = None, verify: bool = True) -> CharacterTable:
    classes = G.classes
    e = G.exponent
    if prime is None:
        prime = choose_prime(e, G.order)
    elif not is_valid_prime(prime, e, G.order):
        raise InputError(f"prime {prime} invalid: need a prime p = 1 mod {e} with p > 2*sqrt({G.order})")
    if prime >= fp.MAX_PRIME:
        raise InputError(f"prime {prime} too large (limit {fp.MAX_PRIME})")
    alg = class_algebra_constants(G, classes)
    mod = modular_table(alg, classes, prime)
    return lift_table(mod, classes, prime, e, group=G, verify=verify)


def degree_multiset(table: CharacterTable) -> list[int]:
    return sorted(table.degrees)


def group_algebra_string(table: CharacterTable) -> str:
    """Wedderburn decomposition, e.g. ``M_1(C) + M_1(C) + M_2(C)`` written with powers."""
    counts = Counter(table.degrees)
    parts = []
    for d in sorted(counts):
        n = counts[d]
        parts.append(f"M_{d}(C)" + (f"^{n}" if n > 1 else ""))
    return " + ".join(parts)


# --- exact verification -----------------------------------------------------


def _cyclic_tensor(table: CharacterTable) -> np.ndarray:
    e = table.exponent
    n = euler_phi(e)
    T = np.zeros((table.k, table.k, e), dtype=np.int64)
    T[:, :, :n] = np.array([[v.coeffs for v in row] for row in table.values], dtype=np.int64).reshape(table.k, table.k, n)
    return T


def _fft_products(Fh: np.ndarray, w: np.ndarray, e: int) -> np.ndarray:
    """Integer-valued sum_j w_j x_aj * conj(x_bj) from spectra Fh[t, a, j]; float result, shape (a, b, s)."""
    FhH = np.ascontiguousarray(np.conj(Fh).transpose(0, 2, 1))
    prod = np.ascontiguousarray(Fh * w) @ FhH  # (t, a, b)
    prod = np.ascontiguousarray(prod.transpose(1, 2, 0))
    return np.fft.irfft(prod, n=e, axis=2)


def _direct_products(T: np.ndarray, weights, e: int) -> np.ndarray:
    k = T.shape[0]
    conjT = T[:, :, (-np.arange(e)) % e]
    out = np.zeros((k, k, e), dtype=np.int64)
    idx = np.arange(2 * e - 1) % e
    for a in range(k):
        for b in range(k):
            acc = np.zeros(2 * e - 1, dtype=np.int64)
            for j, wj in enumerate(weights):
                acc += int(wj) * np.convolve(T[a, j], conjT[b, j])
            np.add.at(out[a, b], idx, acc)
    return out


def hermitian_products(T: np.ndarray, weights, e: int) -> np.ndarray:
    """Exact canonical coefficients of sum_j w_j T[a, j] * conj(T[b, j]) for all a, b.

    T holds cyclic representatives (length e over the last axis). The cyclic
    convolutions run through a real FFT and the integer result is recovered
    by rounding, which is only trusted when an a priori error bound is below
    1/4; otherwise the sums are formed by direct integer convolution.
    """
    w = np.asarray(weights, dtype=np.float64)
    if _fft_error_bound(T, w, e) < 0.25:
        Fh = np.ascontiguousarray(np.fft.rfft(T.astype(np.float64), axis=2).transpose(2, 0, 1))
        R = _fft_products(Fh, w, e)
        out = np.rint(R).astype(np.int64)
    else:
        out = _direct_products(T, weights, e)
    return reduce_cyclic(out, e)


def _fft_error_bound(T: np.ndarray, w: np.ndarray, e: int) -> float:
    l1 = np.abs(T).sum(axis=2).astype(np.float64)
    worst = float(((l1 * w) @ l1.T).max(initial=0.0))
    return worst * 1e-15 * (math.log2(e) + 2) * max(e, 1)


def orthogonality_defects(table: CharacterTable) -> dict[str, list[tuple[int, int]]]:
    """Index pairs where row or column orthogonality fails (empty lists = exact pass)."""
    e = table.exponent
    k = table.k
    sizes = np.array([c.size for c in table.classes], dtype=np.float64)
    T = _cyclic_tensor(table)
    Tt = np.ascontiguousarray(T.transpose(1, 0, 2))
    ones = np.ones(k)
    if max(_fft_error_bound(T, sizes, e), _fft_error_bound(Tt, ones, e)) < 0.25:
        F = np.fft.rfft(T.astype(np.float64), axis=2)  # (a, j, t)
        rows = np.rint(_fft_products(np.ascontiguousarray(F.transpose(2, 0, 1)), sizes, e)).astype(np.int64)
        cols = np.rint(_fft_products(np.ascontiguousarray(F.transpose(2, 1, 0)), ones, e)).astype(np.int64)
        rows, cols = reduce_cyclic(rows, e), reduce_cyclic(cols, e)
    else:
        rows = hermitian_products(T, sizes.astype(np.int64), e)
        cols = hermitian_products(Tt, ones.astype(np.int64), e)
    want_rows = np.zeros_like(rows)
    want_rows[:, :, 0] = table.order * np.eye(k, dtype=np.int64)
    want_cols = np.zeros_like(cols)
    want_cols[:, :, 0] = np.diag([c.centralizer_order for c in table.classes])
    bad_rows = np.argwhere((rows != want_rows).any(axis=2))
    bad_cols = np.argwhere((cols != want_cols).any(axis=2))
    return {
        "rows": [tuple(int(x) for x in ab) for ab in bad_rows],
        "columns": [tuple(int(x) for x in ab) for ab in bad_cols],
    }


def verify_table(table: CharacterTable) -> None:
    """Raise VerificationError unless every structural identity holds exactly."""
    problems = []
    if table.classes[0].element_order != 1:
        problems.append("column 0 is not the identity class")
    for i, row in enumerate(table.values):
        if not row[0].is_rational_integer() or row[0].to_int() != table.degrees[i] or table.degrees[i] < 1:
            problems.append(f"row {i}: identity value does not match degree")
    if not all(v == 1 for v in table.values[0]):
        problems.append("first row is not the trivial character")
    if sum(d * d for d in table.degrees) != table.order:
        problems.append(f"sum of squared degrees {sum(d * d for d in table.degrees)} != |G| = {table.order}")
    if not problems:
        defects = orthogonality_defects(table)
        if defects["rows"]:
            problems.append(f"row orthogonality fails at {defects['rows'][:5]}")
        if defects["columns"]:
            problems.append(f"column orthogonality fails at {defects['columns'][:5]}")
    if problems:
        raise VerificationError("character table rejected: " + "; ".join(problems))
