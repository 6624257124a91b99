"""Builtin groups addressed as ``family:n`` and group-spec resolution."""

from __future__ import annotations

from pathlib import Path

from .errors import InputError
from .permgroup import DEFAULT_CAP, PermGroup, Permutation, parse_cycles, parse_generator_file

FAMILIES = ("cyclic", "dihedral", "sym", "alt", "quaternion", "mathieu")

M11_GENERATORS = ("(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)")


def _cycle(points: range) -> str:
    return "(" + " ".join(str(p) for p in points) + ")"


def _quaternion_generators() -> list[Permutation]:
    # points 0..7 stand for 1, -1, i, -i, j, -j, k, -k
    unit_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    pos = {x: n for n, x in enumerate(elems)}

    def right_mult(g):
        images = []
        for s, u in elems:
            t, w = unit_mul[(u, g)]
            images.append(pos[(s * t, w)])
        return Permutation(tuple(images))

    return [right_mult("i"), right_mult("j")]


def catalog_generators(name: str) -> list[Permutation]:
    try:
        family, arg = name.split(":")
        n = int(arg)
    except ValueError:
        raise InputError(f"unknown group {name!r}; expected family:n with family in {', '.join(FAMILIES)}") from None
    if n < 1:
        raise InputError(f"{name}: parameter must be positive")
    if family == "cyclic":
        return [parse_cycles(_cycle(range(1, n + 1)), n)]
    if family == "dihedral":
        if n % 2:
            raise InputError(f"{name}: dihedral groups are named by their (even) order")
        m = n // 2
        if m == 1:
            return [parse_cycles("(1 2)", 2)]
        if m == 2:
            return [parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)]
        refl = "".join(f"({i} {m + 2 - i})" for i in range(2, m // 2 + 2) if i < m + 2 - i)
        return [parse_cycles(_cycle(range(1, m + 1)), m), parse_cycles(refl or "()", m)]
    if family == "sym":
        if n == 1:
            return [Permutation.identity(1)]
        if n == 2:
            return [parse_cycles("(1 2)", 2)]
        return [parse_cycles("(1 2)", n), parse_cycles(_cycle(range(1, n + 1)), n)]
    if family == "alt":
        if n < 3:
            return [Permutation.identity(max(n, 1))]
        return [parse_cycles(f"(1 2 {i})", n) for i in range(3, n + 1)]
    if family == "quaternion":
        if n != 8:
            raise InputError("only quaternion:8 is available")
        return _quaternion_generators()
    if family == "mathieu":
        if n != 11:
            raise InputError("only mathieu:11 is available")
        return [parse_cycles(g, 11) for g in M11_GENERATORS]
    raise InputError(f"unknown group family {family!r}; expected one of {', '.join(FAMILIES)}")


def resolve_group(spec: str, cap: int = DEFAULT_CAP) -> PermGroup:
    """A catalog name such as ``sym:5``, ``@path`` to a generator file, or inline
    generators in cycle notation separated by ``;`` such as ``(1 2 3);(1 2)``."""
    spec = spec.strip()
    if spec.startswith("("):
        return parse_generator_file("\n".join(spec.split(";")), cap=cap, name=spec)
    if spec.startswith("@"):
        path = Path(spec[1:])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read group file {path}: {exc.strerror or exc}") from None
        return parse_generator_file(text, cap=cap, name=spec)
    return PermGroup(catalog_generators(spec), cap=cap, name=spec)


def small_catalog(max_order: int) -> list[str]:
    """Every catalog name whose group has order <= max_order, excluding mathieu:11 above it."""
    names = [f"cyclic:{n}" for n in range(1, max_order + 1)]
    names += [f"dihedral:{n}" for n in range(2, max_order + 1, 2)]
    if max_order >= 8:
        names.append("quaternion:8")
    fact = 1
    for n in range(1, 8):
        fact *= n
        if fact <= max_order:
            names.append(f"sym:{n}")
        if max(fact // 2, 1) <= max_order and n >= 3:
            names.append(f"alt:{n}")
    if max_order >= 7920:
        names.append("mathieu:11")
    return names
