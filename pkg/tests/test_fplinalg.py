import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleychar import fplinalg as fp

P = 97


def det_mod(A, p):
    """Leibniz expansion, for tiny matrices only."""
    n = len(A)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= int(A[i][perm[i]])
        total += term
    return total % p


def polyval(f, x, p):
    return sum(c * pow(x, i, p) for i, c in enumerate(f)) % p


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, P - 1), min_size=n, max_size=n), min_size=n, max_size=n)
).map(lambda rows: np.array(rows, dtype=np.int64))


def test_primes():
    assert [n for n in range(30) if fp.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert fp.prime_factors(1320) == [2, 3, 5, 11]
    for p in (7, 1321, 421):
        g = fp.primitive_root(p)
        assert len({pow(g, i, p) for i in range(p - 1)}) == p - 1


@given(st.integers(0, 1320))
def test_sqrt_mod(a):
    p = 1321
    r = fp.sqrt_mod(a, p)
    is_square = a % p == 0 or pow(a, (p - 1) // 2, p) == 1
    if is_square:
        assert r is not None and r * r % p == a % p
    else:
        assert r is None


@given(matrices)
def test_charpoly_matches_determinant(A):
    f = fp.charpoly(A, P)
    n = len(A)
    assert len(f) == n + 1 and f[-1] == 1
    for x in (0, 1, 5, 42):
        M = (x * np.eye(n, dtype=np.int64) - A) % P
        assert polyval(f, x, P) == det_mod(M, P)


@given(matrices)
def test_rref_and_nullspace(A):
    R, piv = fp.rref(A, P)
    N = fp.nullspace(A, P)
    n = A.shape[1]
    assert N.shape[0] == n
    assert len(piv) + N.shape[1] == n
    assert not ((A @ N) % P).any()
    for r, c in enumerate(piv):
        assert R[r, c] == 1
        assert not np.delete(R[:, c], r).any()


@given(st.lists(st.integers(0, P - 1), min_size=1, max_size=6))
def test_roots_brute_force(roots):
    f = [1]
    for r in roots:
        f = [(a - r * b) % P for a, b in zip([0] + f, f + [0])]
    assert sorted(fp.roots_mod_p(f, P)) == sorted(set(roots))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 2**20), min_size=1, max_size=5), st.integers(0, 5))
def test_roots_cantor_zassenhaus(roots, junk):
    p = 1048583  # prime above the brute-force threshold
    assert p > fp.BRUTE_FORCE_ROOTS and fp.is_prime(p)
    f = [1]
    for r in roots:
        f = [(a - r * b) % p for a, b in zip([0] + f, f + [0])]
    # multiply by x^2 + 1 style irreducible-ish noise without roots when -1 is a non-residue
    if pow(p - 1, (p - 1) // 2, p) != 1 and junk:
        f = [(a + b) % p for a, b in zip(f + [0, 0], [0, 0] + f)]
    assert sorted(fp.roots_mod_p(f, p)) == sorted(set(roots))
