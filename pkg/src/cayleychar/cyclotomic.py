"""Exact elements of Z[zeta_e] in the power basis modulo the e-th cyclotomic polynomial."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficient lists, low degree first); den monic."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * (len(num) - dn)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dn]
        q[k] = c
        if c:
            for j in range(dn + 1):
                num[k + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, constant term first."""
    if e < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def reduction_matrix(e: int) -> np.ndarray:
    """Row j holds the canonical coordinates of zeta_e**j, for 0 <= j < e."""
    phi = cyclotomic_polynomial(e)
    n = len(phi) - 1
    rows = np.zeros((e, n), dtype=np.int64)
    cur = [0] * n
    cur[0] = 1
    for j in range(e):
        rows[j] = cur
        # multiply by x, then reduce the x**n term with the monic Phi_e
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:n])]
    rows.flags.writeable = False
    return rows


def int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matmul; goes through float64 BLAS when no rounding can occur."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return a @ b
    bound = int(np.abs(a).max()) * int(np.abs(b).max()) * a.shape[-1]
    if bound < 2**52:
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return a @ b


def reduce_cyclic(vec, e: int) -> np.ndarray:
    """Canonical coordinates of sum_j vec[j] * zeta_e**j (vec has length e, or (..., e))."""
    return int_matmul(vec, reduction_matrix(e))


class Cyclotomic:
    """An element of Z[zeta_e] held in canonical form.

    ``coeffs[j]`` is the coordinate of ``zeta_e**j`` for ``0 <= j < phi(e)``.
    Two values with the same conductor are equal iff their coefficient
    vectors are, so zero testing is exact.
    """

    __slots__ = ("conductor", "coeffs", "_key")

    def __init__(self, conductor: int, coeffs):
        arr = np.array(coeffs, dtype=np.int64)
        n = euler_phi(conductor)
        if arr.shape != (n,):
            raise ValueError(f"expected {n} coefficients for conductor {conductor}, got {arr.shape}")
        arr.flags.writeable = False
        self.conductor = conductor
        self.coeffs = arr
        self._key = None

    @classmethod
    def from_int(cls, value: int, e: int) -> Cyclotomic:
        c = np.zeros(euler_phi(e), dtype=np.int64)
        c[0] = value
        return cls(e, c)

    @classmethod
    def root_of_unity(cls, k: int, e: int) -> Cyclotomic:
        """zeta_e**k."""
        return cls(e, reduction_matrix(e)[k % e])

    @classmethod
    def from_cyclic(cls, vec, e: int) -> Cyclotomic:
        return cls(e, reduce_cyclic(vec, e))

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ValueError(f"conductor mismatch: {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, np.integer)):
            return Cyclotomic.from_int(int(other), self.conductor)
        return NotImplemented

    def cyclic(self) -> np.ndarray:
        """Length-e representative in Z[x]/(x^e - 1)."""
        out = np.zeros(self.conductor, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, -self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return Cyclotomic(self.conductor, self.coeffs * int(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = self.conductor
        full = np.convolve(self.coeffs, other.coeffs)
        vec = np.zeros(e, dtype=np.int64)
        # full has length <= 2*phi(e) - 1 <= 2e - 1; fold x^e = 1
        np.add.at(vec, np.arange(len(full)) % e, full)
        return Cyclotomic.from_cyclic(vec, e)

    __rmul__ = __mul__

    def exact_div(self, d: int) -> Cyclotomic:
        """Divide by a rational integer; raises if the quotient is not integral."""
        q, r = np.divmod(self.coeffs, d)
        if r.any():
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return Cyclotomic(self.conductor, q)

    def conj(self) -> Cyclotomic:
        """Complex conjugate: zeta -> zeta**-1."""
        e = self.conductor
        vec = np.zeros(e, dtype=np.int64)
        idx = (-np.arange(len(self.coeffs))) % e
        np.add.at(vec, idx, self.coeffs)
        return Cyclotomic.from_cyclic(vec, e)

    def galois(self, k: int) -> Cyclotomic:
        """Image under zeta -> zeta**k, gcd(k, e) = 1."""
        e = self.conductor
        if math.gcd(k, e) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        vec = np.zeros(e, dtype=np.int64)
        np.add.at(vec, (k * np.arange(len(self.coeffs))) % e, self.coeffs)
        return Cyclotomic.from_cyclic(vec, e)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def is_rational_integer(self) -> bool:
        return not self.coeffs[1:].any()

    def is_real(self) -> bool:
        return self == self.conj()

    def to_int(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return int(self.coeffs[0])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.conductor)
        return complex(sum(int(c) * z**j for j, c in enumerate(self.coeffs) if c))

    def key(self) -> tuple[int, ...]:
        if self._key is None:
            self._key = tuple(self.coeffs.tolist())
        return self._key

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.is_rational_integer() and int(self.coeffs[0]) == int(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.key() == other.key()

    def __hash__(self) -> int:
        if self.is_rational_integer():
            return hash(int(self.coeffs[0]))
        return hash((self.conductor, self.key()))

    def __str__(self) -> str:
        if self.is_rational_integer():
            return str(int(self.coeffs[0]))
        return f"cyc({self.conductor};{','.join(str(c) for c in self.key())})"

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    @classmethod
    def parse(cls, text: str, e: int) -> Cyclotomic:
        text = text.strip()
        if text.startswith("cyc(") and text.endswith(")"):
            head, _, body = text[4:-1].partition(";")
            cond = int(head)
            if cond != e:
                raise ValueError(f"value {text} has conductor {cond}, expected {e}")
            return cls(e, [int(t) for t in body.split(",")])
        return cls.from_int(int(text), e)
