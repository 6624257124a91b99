"""Permutations, explicit group enumeration and conjugacy classes.

Points are 0-based internally and 1-based in every string form. Products
read left to right: ``p * q`` applies ``p`` first, then ``q``, so
``parse_cycles("(1 2)(2 3)")`` equals ``parse_cycles("(1 2)") * parse_cycles("(2 3)")``.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import GroupTooLarge, InputError

DEFAULT_CAP = 200_000

_TOKEN = re.compile(r"\s*(\(|\)|\d+|,|\S)")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InputError(f"not a bijection on 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise InputError("degree mismatch in product")
        q = other.images
        return Permutation(tuple(q[i] for i in self.images))

    def __pow__(self, n: int) -> Permutation:
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_string()


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``.

    Commas between points are accepted. Cycles compose left to right.
    """
    result = list(range(degree))
    pos = 0
    text = text.strip()
    current: list[int] | None = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tok = m.group(1)
        pos = m.end()
        if tok == "(":
            if current is not None:
                raise InputError(f"nested '(' at offset {m.start(1)} in {text!r}")
            current = []
        elif tok == ")":
            if current is None:
                raise InputError(f"unmatched ')' at offset {m.start(1)} in {text!r}")
            result = _apply_cycle(result, current)
            current = None
        elif tok == ",":
            if current is None:
                raise InputError(f"stray ',' in {text!r}")
        elif tok.isdigit():
            if current is None:
                raise InputError(f"point {tok} outside a cycle in {text!r}")
            point = int(tok)
            if not 1 <= point <= degree:
                raise InputError(f"point {tok} out of range 1..{degree}")
            if point - 1 in current:
                raise InputError(f"point {tok} repeated within one cycle in {text!r}")
            current.append(point - 1)
        else:
            raise InputError(f"unexpected token {tok!r} in {text!r}")
    if current is not None:
        raise InputError(f"unclosed '(' in {text!r}")
    return Permutation(tuple(result))


def _apply_cycle(images: list[int], cycle: list[int]) -> list[int]:
    step = list(range(len(images)))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        step[a] = b
    return [step[i] for i in images]


def max_point(text: str) -> int:
    points = [int(t) for t in re.findall(r"\d+", text)]
    return max(points, default=0)


@dataclass(frozen=True)
class ConjugacyClass:
    index: int
    representative: Permutation
    size: int
    member_ids: tuple[int, ...]
    element_order: int
    centralizer_order: int
    power_map: tuple[int, ...]
    is_rational: bool
    label: str = ""

    @property
    def inverse_class(self) -> int:
        return self.power_map[(self.element_order - 1) % len(self.power_map)]

    @property
    def is_real(self) -> bool:
        return self.inverse_class == self.index


class PermGroup:
    """A permutation group with its whole element list materialised.

    ``elements[0]`` is the identity. Elements are discovered breadth first
    from the identity, multiplying on the left by each generator in turn,
    so the order is reproducible.
    """

    def __init__(self, generators: Sequence[Permutation], cap: int = DEFAULT_CAP, name: str = ""):
        if not generators:
            raise InputError("need at least one generator")
        if cap < 1:
            raise InputError("enumeration cap must be >= 1")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise InputError("generators have different degrees")
        self.degree = degree
        self.generators = tuple(generators)
        self.name = name
        self.cap = cap

        ident = tuple(range(degree))
        gens = [g.images for g in generators]
        index = {ident: 0}
        elems = [ident]
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = tuple(x[i] for i in g)  # g * x
                if y not in index:
                    if len(elems) >= cap:
                        raise GroupTooLarge(cap, len(elems))
                    index[y] = len(elems)
                    elems.append(y)
                    queue.append(y)
        self._tuples = elems
        self._index = index
        self.elements = tuple(Permutation(e) for e in elems)
        self.order = len(elems)
        self.element_orders = tuple(p.order() for p in self.elements)
        self.exponent = reduce(math.lcm, self.element_orders, 1)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"PermGroup({self.name or '?'}, order={self.order}, degree={self.degree})"

    def index(self, perm: Permutation | tuple[int, ...]) -> int:
        key = perm.images if isinstance(perm, Permutation) else tuple(perm)
        try:
            return self._index[key]
        except KeyError:
            raise InputError(f"{Permutation(key)} is not an element of the group") from None

    @cached_property
    def table(self) -> np.ndarray:
        """(order, degree) array of point images, row i = elements[i]."""
        return np.array(self._tuples, dtype=np.int64).reshape(self.order, self.degree)

    @cached_property
    def _hash(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        rng = np.random.default_rng(0x5EED)
        w = rng.integers(1, 2**62, size=self.degree, dtype=np.int64)
        keys = self.table @ w  # wraps mod 2^64, fine for hashing
        order = np.argsort(keys, kind="stable")
        return w, keys[order], order

    def indices_of(self, rows: np.ndarray) -> np.ndarray:
        """Element ids of each row of an (m, degree) image array; rows must lie in the group."""
        rows = np.asarray(rows, dtype=np.int64)
        w, sorted_keys, order = self._hash
        keys = rows @ w
        pos = np.searchsorted(sorted_keys, keys)
        pos = np.minimum(pos, len(sorted_keys) - 1)
        ids = order[pos]
        ok = (sorted_keys[pos] == keys) & (self.table[ids] == rows).all(axis=1)
        if not ok.all():
            # hash collision or a non-member; resolve exactly row by row
            for r in np.nonzero(~ok)[0]:
                ids[r] = self.index(tuple(int(v) for v in rows[r]))
        return ids

    def products(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Ids of elements[left[t]] * elements[right[t]], broadcast over arrays of ids."""
        L = self.table[np.asarray(left)]
        R = self.table[np.asarray(right)]
        L, R = np.broadcast_arrays(L, R)
        return self.indices_of(np.take_along_axis(R, L, axis=-1).reshape(-1, self.degree)).reshape(L.shape[:-1])

    def mul(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j]."""
        a, b = self._tuples[i], self._tuples[j]
        return self._index[tuple(b[x] for x in a)]

    @cached_property
    def inverse_ids(self) -> tuple[int, ...]:
        out = [0] * self.order
        for i, t in enumerate(self._tuples):
            inv = [0] * self.degree
            for a, b in enumerate(t):
                inv[b] = a
            out[i] = self._index[tuple(inv)]
        return tuple(out)

    def is_abelian(self) -> bool:
        gens = [g.images for g in self.generators]
        return all(
            tuple(b[x] for x in a) == tuple(a[x] for x in b) for a in gens for b in gens
        )

    @cached_property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return tuple(_compute_classes(self))

    @cached_property
    def class_lookup(self) -> tuple[int, ...]:
        table = [0] * self.order
        for c in self.classes:
            for m in c.member_ids:
                table[m] = c.index
        return tuple(table)


def enumerate_group(generators: Iterable[Permutation], cap: int = DEFAULT_CAP, name: str = "") -> PermGroup:
    return PermGroup(list(generators), cap=cap, name=name)


def _compute_classes(G: PermGroup) -> list[ConjugacyClass]:
    # conj[g][x] = id of g^-1 * x * g, one array per generator
    conj = []
    for g in G.generators:
        gi = np.array(g.inverse().images)
        conj.append(G.indices_of(np.array(g.images)[G.table[:, gi]]).tolist())
    assigned = [-1] * G.order
    raw = []
    for start in range(G.order):
        if assigned[start] >= 0:
            continue
        cid = len(raw)
        assigned[start] = cid
        members = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for cg in conj:
                j = cg[x]
                if assigned[j] < 0:
                    assigned[j] = cid
                    members.append(j)
                    queue.append(j)
        raw.append(sorted(members))

    order_of = G.element_orders
    raw.sort(key=lambda m: (order_of[m[0]], len(m), m[0]))
    lookup = np.zeros(G.order, dtype=np.int64)
    for cid, members in enumerate(raw):
        lookup[members] = cid

    # powers of all representatives at once: row c of cur is rep_c^s
    reps = G.table[[m[0] for m in raw]]
    orders = [order_of[m[0]] for m in raw]
    cur = np.tile(np.arange(G.degree), (len(raw), 1))
    pm = np.zeros((len(raw), max(orders)), dtype=np.int64)
    for s in range(max(orders)):
        pm[:, s] = lookup[G.indices_of(cur)]
        cur = np.take_along_axis(reps, cur, axis=1)

    e = G.exponent
    labels = _labels(orders)
    out = []
    for cid, members in enumerate(raw):
        m = orders[cid]
        cycle_pm = pm[cid, :m].tolist()
        power_map = tuple(cycle_pm[s % m] for s in range(e))
        rational = all(cycle_pm[i] == cid for i in range(1, m) if math.gcd(i, m) == 1)
        out.append(
            ConjugacyClass(
                index=cid,
                representative=G.elements[members[0]],
                size=len(members),
                member_ids=tuple(members),
                element_order=m,
                centralizer_order=G.order // len(members),
                power_map=power_map,
                is_rational=rational,
                label=labels[cid],
            )
        )
    return out


def _letters(n: int) -> str:
    s = ""
    n += 1
    while n:
        n, r = divmod(n - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def _labels(orders: list[int]) -> list[str]:
    seen: dict[int, int] = {}
    out = []
    for m in orders:
        k = seen.get(m, 0)
        seen[m] = k + 1
        out.append(f"{m}{_letters(k)}")
    return out


def conjugacy_classes(G: PermGroup) -> list[ConjugacyClass]:
    """Classes sorted by (element order, size, smallest member id)."""
    return list(G.classes)


def class_of(G: PermGroup, element_id: int) -> int:
    if not 0 <= element_id < G.order:
        raise InputError(f"element id {element_id} out of range 0..{G.order - 1}")
    return G.class_lookup[element_id]


def find_class(G: PermGroup, label: str) -> ConjugacyClass:
    """Look a class up by its label (case-insensitive, e.g. ``5a`` or ``5A``)."""
    key = label.strip().lower()
    for c in G.classes:
        if c.label == key:
            return c
    known = ", ".join(c.label for c in G.classes)
    raise InputError(f"unknown class label {label!r}; known: {known}")


def parse_generator_file(text: str, cap: int = DEFAULT_CAP, name: str = "") -> PermGroup:
    """Group file: one generator per line, ``#`` comments, optional ``degree: n`` header."""
    lines = []
    degree = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"degree\s*:\s*(\d+)", line, flags=re.IGNORECASE)
        if m:
            if lines or degree is not None:
                raise InputError("'degree:' must be the first non-comment line")
            degree = int(m.group(1))
            continue
        lines.append(line)
    if not lines:
        raise InputError("group file lists no generators")
    if degree is None:
        degree = max(max(max_point(ln) for ln in lines), 1)
    gens = [parse_cycles(ln, degree) for ln in lines]
    return PermGroup(gens, cap=cap, name=name)
