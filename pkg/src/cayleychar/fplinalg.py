"""Dense linear algebra and root finding over a prime field F_p.

Matrices are int64 numpy arrays with entries in [0, p). Products are
reduced after every matmul, so p must stay below ``MAX_PRIME`` to keep
``k * p**2`` inside int64 for the matrix sizes used here.
"""

from __future__ import annotations

import math
import random

import numpy as np

MAX_PRIME = 1 << 26
BRUTE_FORCE_ROOTS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"no primitive root mod {p}")


def sqrt_mod(a: int, p: int) -> int | None:
    """Some square root of a mod an odd prime p, or None (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        col = R[:, c].copy()
        col[r] = 0
        R -= np.outer(col, R[r])
        R %= p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : A v = 0} as the columns of an (n, d) matrix."""
    n = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        basis[f, t] = 1
        for row, pc in enumerate(pivots):
            basis[pc, t] = (-R[row, f]) % p
    return basis


def charpoly(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial det(xI - A) over F_p, constant term first.

    Reduces to upper Hessenberg form by similarity, then runs the usual
    three-term recurrence on the leading principal minors.
    """
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(H[j + 1 :, j])[0]
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            H[[i, j + 1]] = H[[j + 1, i]]
            H[:, [i, j + 1]] = H[:, [j + 1, i]]
        inv = pow(int(H[j + 1, j]), -1, p)
        f = H[j + 2 :, j] * inv % p
        if not f.any():
            continue
        H[j + 2 :] = (H[j + 2 :] - np.outer(f, H[j + 1])) % p
        H[:, j + 1] = (H[:, j + 1] + H[:, j + 2 :] @ f) % p

    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(1, n + 1):
        # (x - h_mm) p_{m-1}
        prev = P[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - int(H[m - 1, m - 1]) * prev) % p
        # - sum_i h_{i,m} * prod(subdiagonal) * p_{i-1}
        coef = np.zeros(m - 1, dtype=np.int64)
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * int(H[i, i - 1]) % p
            coef[i - 1] = int(H[i - 1, m - 1]) * prod % p
        if m > 1:
            cur = (cur - coef @ P[: m - 1]) % p
        P[m] = cur
    return [int(c) for c in P[n]]


def _trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k] * inv % p
        if c:
            for j in range(dg + 1):
                f[k - dg + j] = (f[k - dg + j] - c * g[j]) % p
    return _trim(f[:dg] if dg else [0])


def _pmul(f: list[int], g: list[int], p: int) -> list[int]:
    out = np.convolve(np.array(f, dtype=object), np.array(g, dtype=object))
    return _trim([int(c) % p for c in out])


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g != [0]:
        f, g = g, _pmod(f, g, p)
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _ppow(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _pdiv(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k] * inv % p
        q[k - dg] = c
        for j in range(dg + 1):
            f[k - dg + j] = (f[k - dg + j] - c * g[j]) % p
    return _trim(q)


def roots_mod_p(f: list[int], p: int) -> list[int]:
    """Distinct roots in F_p of f (constant term first), sorted."""
    f = _trim([c % p for c in f])
    if len(f) == 1:
        return []
    if p <= BRUTE_FORCE_ROOTS:
        xs = np.arange(p, dtype=np.int64)
        val = np.zeros(p, dtype=np.int64)
        for c in reversed(f):
            val = (val * xs + c) % p
        return [int(x) for x in np.nonzero(val == 0)[0]]
    # split off the product of distinct linear factors, then Cantor-Zassenhaus
    xp = _ppow([0, 1], p, f, p)
    xp = xp + [0] * (2 - len(xp)) if len(xp) < 2 else xp
    xp[1] = (xp[1] - 1) % p
    g = _pgcd(f, _trim(xp), p)
    rng = random.Random(p)
    out: list[int] = []
    stack = [g]
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d == 0:
            continue
        if d == 1:
            out.append((-h[0]) * pow(h[1], -1, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            t = _ppow([a, 1], (p - 1) // 2, h, p)
            t = t + [0] * (1 - len(t)) if not t else t
            t[0] = (t[0] - 1) % p
            s = _pgcd(h, _trim(t), p)
            if 0 < len(s) - 1 < d:
                stack.append(s)
                stack.append(_pdiv(h, s, p))
                break
    return sorted(out)
